#include "catalog_dsl.hpp"

// Items stated for the four named space-times.  Base slots are all d/dt
// and carry the letter T; P = d/dt for the P-base rows.

namespace kg::catalog {

namespace {

using C = ConnectionKind;
using O = ObjectKind;
using L = PLocation::Kind;
constexpr ProductKind kWarped = ProductKind::MultiplyWarped;
constexpr ProductKind kTwisted = ProductKind::Twisted;

Row row(std::string fx, std::string id, ProductKind pk, C c, O o, L pl, std::vector<Item> items) {
  Row r;
  r.id = fx + "/" + std::move(id);
  r.fixture = std::move(fx);
  r.connection = c;
  r.object = o;
  r.product = pk;
  r.ploc = pl;
  r.items = std::move(items);
  return r;
}

#define KG_GG(a, c, d, e) (g(a, d) * g(c, e) - g(c, d) * g(a, e))
#define KG_TW(a, c) (b() * XYb(a, c) - 2 * Xb(a) * Xb(c) - b() * gsF(flat(a, c), db()))
#define KG_TWK(a, c) (KG_TW(a, c) + sq(sq(b())) * K(a, P, c))
#define KG_K3(u, v, w) \
  (b() * Xb(u) * g(v, w) + b() * Xb(v) * g(w, u) - b() * Xb(w) * g(u, v) + sq(b()) * K(u, v, w))
// bU(db/dt)g(W,V) - U(b)(db/dt)g(W,V) - bW(db/dt)g(U,V) + W(b)(db/dt)g(U,V)
#define KG_XT(u, w, v)                                                                  \
  (b() * XYb(u, T) * g(w, v) - Xb(u) * Xb(T) * g(w, v) - b() * XYb(w, T) * g(u, v) +   \
   Xb(w) * Xb(T) * g(u, v))

// =================================================================== M1

Row m1_ssm_koszul_base() {
  return row("M1", "ssm-koszul/P-base", kWarped, C::SemiSymMetric, O::KoszulForm, L::Base, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W", "T,W,T", "W,T,T"}),
    item("3", {"T,V,W"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("4", {"V,T,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W) - sq(b()) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(sq(b()) * K(U, V, W))),
  });
}

Row m1_ssm_koszul_fiber() {
  return row("M1", "ssm-koszul/P-fiber", kWarped, C::SemiSymMetric, O::KoszulForm, L::Fiber, {
    zero("1", {"T,T,T"}),
    item("2", {"T,T,W", "-T,W,T"}, "", KG_F(sq(b()) * g(W, P))),
    zero("3", {"W,T,T"}),
    item("4", {"T,V,W", "V,T,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(sq(b()) * K(U, V, W) + sq(sq(b())) * g(U, W) * g(V, P) -
                                   sq(sq(b())) * g(U, V) * g(W, P))),
  });
}

Row m1_ssm_curvature_base() {
  return row("M1", "ssm-curvature/P-base", kWarped, C::SemiSymMetric, O::Curvature, L::Base, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,W,T"}, "", KG_F(-b() * XYb(T, T) * g(V, W) + b() * Xb(T) * g(V, W))),
    zero("5", {"T,V,W,U", "W,U,T,V"}),
    item("6", {"U,V,W,Q"}, "", KG_F(
        sq(b()) * R(U, V, W, Q) +
        (sq(b()) * gsB(db(), db()) + 2 * b() * sq(b()) * Xb(T) - sq(sq(b()))) * KG_GG(U, V, W, Q))),
  });
}

Row m1_ssm_curvature_fiber() {
  return row("M1", "ssm-curvature/P-fiber", kWarped, C::SemiSymMetric, O::Curvature, L::Fiber, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,W,T"}, "", KG_F(
        -b() * XYb(T, T) * g(V, W) +
        sq(b()) * (K(V, P, W) + sq(b()) * g(V, W) * g(P, P) - sq(b()) * g(V, P) * g(W, P)))),
    item("5", {"T,V,W,U", "-W,U,T,V"}, "", KG_F(
        b() * sq(b()) * Xb(T) * (g(V, U) * g(W, P) - g(V, W) * g(U, P)))),
    amend(item("6", {"U,V,W,Q"}, "", KG_FB(
              const double b2 = sq(b()), b4 = b2 * b2, b6 = b4 * b2;
              return b2 * R(U, V, W, Q) + b2 * gsB(db(), db()) * KG_GG(U, V, W, Q) +
                     b4 * g(V, Q) * K(U, P, W) - b4 * g(U, Q) * K(V, P, W) -
                     b4 * g(V, W) * K(U, P, Q) + b4 * g(U, W) * K(V, P, Q) +
                     b6 * g(U, P) * (g(V, W) * g(Q, P) - g(V, Q) * g(W, P)) -
                     b6 * g(V, P) * (g(U, W) * g(Q, P) - g(U, Q) * g(W, P));)),
          KG_FB(
              const double b2 = sq(b()), b4 = b2 * b2, b6 = b4 * b2;
              return b2 * R(U, V, W, Q) +
                     (b2 * gsB(db(), db()) + b6 * g(P, P)) * KG_GG(U, V, W, Q) +
                     b4 * g(V, Q) * K(U, P, W) - b4 * g(U, Q) * K(V, P, W) -
                     b4 * g(V, W) * K(U, P, Q) + b4 * g(U, W) * K(V, P, Q) +
                     b6 * g(U, P) * (g(V, W) * g(Q, P) - g(V, Q) * g(W, P)) -
                     b6 * g(V, P) * (g(U, W) * g(Q, P) - g(U, Q) * g(W, P));),
          "b^6 g_F(P,P) added to the g*(db,db) coefficient"),
  });
}

Row m1_ssnm_koszul_base() {
  return row("M1", "ssnm-koszul/P-base", kWarped, C::SemiSymNonMetric, O::KoszulForm, L::Base, {
    item("1", {"T,T,T"}, "", KG_F(1.0)),
    zero("2", {"T,T,W", "T,W,T", "W,T,T"}),
    item("3", {"T,V,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("4", {"V,T,W"}, "", KG_F(b() * Xb(T) * g(V, W) - sq(b()) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(sq(b()) * K(U, V, W))),
  });
}

Row m1_ssnm_koszul_fiber() {
  return row("M1", "ssnm-koszul/P-fiber", kWarped, C::SemiSymNonMetric, O::KoszulForm, L::Fiber, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W", "W,T,T"}),
    item("3", {"T,W,T"}, "", KG_F(-sq(b()) * g(W, P))),
    item("4", {"T,V,W", "V,T,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(sq(b()) * K(U, V, W) + sq(sq(b())) * g(U, W) * g(V, P))),
  });
}

Row m1_ssnm_curvature_base() {
  return row("M1", "ssnm-curvature/P-base", kWarped, C::SemiSymNonMetric, O::Curvature, L::Base, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,T,W,T", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"V,T,W,T", "-T,V,W,T"}, "",
         KG_F(b() * XYb(T, T) * g(V, W) + 2 * b() * Xb(T) * g(V, W))),
    item("5", {"V,T,T,W", "-T,V,T,W"}, "", KG_F(-b() * XYb(T, T) * g(V, W))),
    zero("6", {"T,V,W,U", "W,U,T,V"}),
    item("7", {"W,U,V,T"}, "", KG_F(-sq(b()) * (K(W, V, U) - K(U, V, W)))),
    item("8", {"U,V,W,Q"}, "", KG_F(sq(b()) * R(U, V, W, Q) +
                                     sq(b()) * gsB(db(), db()) * KG_GG(U, V, W, Q))),
  });
}

Row m1_ssnm_curvature_fiber() {
  return row("M1", "ssnm-curvature/P-fiber", kWarped, C::SemiSymNonMetric, O::Curvature, L::Fiber, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,T,W,T", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"V,T,W,T", "-T,V,W,T"}, "",
         KG_F(b() * XYb(T, T) * g(V, W) - sq(b()) * Dg(V, W, P))),
    item("5", {"V,T,T,W", "-T,V,T,W"}, "", KG_F(-b() * XYb(T, T) * g(V, W))),
    item("6", {"T,V,W,U"}, "", KG_F(2 * b() * sq(b()) * Xb(T) *
                                     (g(V, U) * g(W, P) + g(V, W) * g(U, P)))),
    zero("7", {"W,U,T,V", "W,U,V,T"}),
    item("8", {"U,V,W,Q"}, "", KG_FB(
        const double b2 = sq(b()), b4 = b2 * b2;
        return b2 * R(U, V, W, Q) + b2 * gsB(db(), db()) * KG_GG(U, V, W, Q) +
               b4 * g(Q, P) * (K(U, W, V) - K(V, W, U)) + b4 * Dg(U, W, P) * g(V, Q) -
               b4 * Dg(V, W, P) * g(U, Q);)),
  });
}

Row m1_ap_koszul() {
  return row("M1", "ap-koszul", kWarped, C::AlmostProduct, O::KoszulForm, L::None, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W", "T,W,T", "W,T,T"}),
    item("3", {"T,V,W"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("4", {"V,T,W", "-V,W,T"}, "", KG_F(
        0.5 * (b() * Xb(T) * g(V, W) + b() * Xb(J(T)) * g(V, J(W))))),
    item("5", {"U,V,W"}, "", KG_F(sq(b()) * KA(U, V, W))),
  });
}

// shared by the warped fixtures; bj is the warping of the fiber of U,V,W
#define KG_APT(j)                                                                          \
  (0.25 * b(j) * Xb(T, j) *                                                                 \
       (-K(V, W, U) + K(U, W, V) + K(V, J(W), J(U)) - K(U, J(W), J(V))) -                  \
   0.25 * b(j) * Xb(J(T), j) *                                                              \
       (-K(V, W, J(U)) + K(U, W, J(V)) + K(V, J(W), U) - K(U, J(W), V)))
#define KG_AP4(j)                                                                          \
  (sq(b(j)) * RA(U, V, W, Q) +                                                             \
   0.25 * sq(b(j)) *                                                                        \
       (gsB(db(j), db(j)) * KG_GG(U, V, W, Q) +                                              \
        gsB(dbJ(j), db(j)) * (g(U, J(W)) * g(V, Q) - g(V, J(W)) * g(U, Q) +                  \
                              g(U, W) * g(V, J(Q)) - g(V, W) * g(U, J(Q))) +                 \
        gsB(dbJ(j), dbJ(j)) * (g(U, J(W)) * g(V, J(Q)) - g(V, J(W)) * g(U, J(Q)))))

Row m1_ap_curvature() {
  return row("M1", "ap-curvature", kWarped, C::AlmostProduct, O::Curvature, L::None, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,T,W"}, "", KG_F(0.5 * b() * XYb(T, T) * g(V, W) +
                                     0.5 * b() * XYb(T, J(T)) * g(V, J(W)))),
    zero("5", {"T,V,W,U"}),
    item("6", {"U,V,T,W"}, "", KG_F(KG_APT(1))),
    item("7", {"U,V,W,Q"}, "", KG_F(KG_AP4(1))),
  });
}

// ============================================================ M2 and M3

Row kasner_ssm_koszul_base(const std::string& fx) {
  return row(fx, "ssm-koszul/P-base", kWarped, C::SemiSymMetric, O::KoszulForm, L::Base, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W_j", "T,W_j,T", "W_j,T,T"}),
    item("3", {"T,V_i,W_j"}, "i=j", KG_F(b(j) * Xb(T, j) * g(V, W))),
    item("4", {"V_i,T,W_j", "-V_i,W_j,T"}, "i=j",
         KG_F(b(j) * Xb(T, j) * g(V, W) - sq(b(j)) * g(V, W))),
    zero("5", {"T,V_i,W_j", "V_i,T,W_j", "V_i,W_j,T"}, "i!=j"),
    item("6", {"U_i,V_j,W_k"}, "i=j=k", KG_F(sq(b(j)) * K(U, V, W))),
    other("7", {"U_i,V_j,W_k"}),
  });
}

Row kasner_ssm_koszul_fiber(const std::string& fx) {
  return row(fx, "ssm-koszul/P-fiber", kWarped, C::SemiSymMetric, O::KoszulForm, L::Fiber, {
    zero("1", {"T,T,T"}),
    item("2", {"T,T,W_j", "-T,W_j,T"}, "j=l", KG_F(sq(b(j)) * g(W, P))),
    zero("3", {"T,T,W_j", "T,W_j,T"}, "j!=l"),
    zero("4", {"W_j,T,T"}),
    item("5", {"T,V_i,W_j", "V_i,T,W_j", "-V_i,W_j,T"}, "i=j", KG_F(b(j) * Xb(T, j) * g(V, W))),
    zero("6", {"T,V_i,W_j", "V_i,T,W_j", "V_i,W_j,T"}, "i!=j"),
    item("7", {"U_i,V_j,W_k"}, "i=j=k=l", KG_F(
        sq(b(j)) * K(U, V, W) + sq(sq(b(j))) * g(U, W) * g(V, P) -
        sq(sq(b(j))) * g(U, V) * g(W, P))),
    item("8", {"U_i,V_j,W_k", "-U_i,W_k,V_j"}, "i=j!=k=l",
         KG_F(-sq(b(j)) * sq(b(k)) * g(U, V) * g(W, P))),
    other("9", {"U_i,V_j,W_k"}),
  });
}

Row kasner_ssm_curvature_base(const std::string& fx, bool three) {
  return row(fx, "ssm-curvature/P-base", kWarped, C::SemiSymMetric, O::Curvature, L::Base, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W_j", "T,W_j,T,T"}),
    zero("3", {"T,T,V_i,W_j", "V_i,W_j,T,T"}, "i=j"),
    item("4", {"T,V_i,W_j,T"}, "i=j",
         KG_F(-b(j) * XYb(T, T, j) * g(V, W) + b(j) * Xb(T, j) * g(V, W))),
    zero("5", {"T,T,V_i,W_j", "V_i,W_j,T,T", "T,V_i,W_j,T"}, "i!=j"),
    zero("6", {"T,V_i,W_j,U_k", "W_j,U_k,T,V_i"}, "i=j=k"),
    zero("7", {"T,V_i,W_j,U_k", "T,U_k,V_i,W_j", "W_j,U_k,T,V_i", "V_i,W_j,T,U_k"},
         three ? "i=j!=k|i!=j!=k" : "i=j!=k"),
    item("8", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s", KG_F(
        sq(b(j)) * R(U, V, W, Q) +
        (sq(b(j)) * gsB(db(j), db(j)) + 2 * b(j) * sq(b(j)) * Xb(T, j) - sq(sq(b(j)))) *
            KG_GG(U, V, W, Q))),
    zero("9", {"U_k,V_i,W_j,Q_s", "W_j,Q_s,U_k,V_i"}, "i=j=s!=k"),
    item("10", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s", KG_F(
        (b(i) * b(j) * gsB(db(i), db(j)) + b(i) * sq(b(j)) * Xb(T, i) +
         b(j) * sq(b(i)) * Xb(T, j) - sq(b(i)) * sq(b(j))) *
        g(V, Q) * g(U, W))),
    other("11", {"U_k,V_i,W_j,Q_s"}),
  });
}

Row kasner_ssm_curvature_fiber(const std::string& fx, bool three) {
  std::vector<Item> items = {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W_j", "T,W_j,T,T"}),
    zero("3", {"T,T,V_i,W_j", "V_i,W_j,T,T"}),
    item("4", {"T,V_i,W_j,T"}, "i=j=l", KG_F(
        -b(j) * XYb(T, T, j) * g(V, W) +
        sq(b(j)) * (K(V, P, W) + sq(b(j)) * g(V, W) * g(P, P) -
                    sq(b(j)) * g(V, P) * g(W, P)))),
    item("5", {"T,V_i,W_j,T"}, "i=j!=l", KG_F(
        -b(j) * XYb(T, T, j) * g(V, W) + sq(b(j)) * sq(b(l)) * g(V, W) * g(P, P))),
    other("6", {"T,V_i,W_j,T"}),
    item("7", {"T,V_i,W_j,U_k", "-W_j,U_k,T,V_i"}, "i=j=k=l", KG_F(
        b(j) * sq(b(j)) * Xb(T, j) * (g(V, U) * g(W, P) - g(V, W) * g(U, P)))),
    item("8", {"T,V_i,W_j,U_k", "-W_j,U_k,T,V_i"}, "i=j!=k=l", KG_F(
        -b(l) * sq(b(j)) * Xb(T, l) * g(U, P) * g(V, W))),
    other("9", {"T,V_i,W_j,U_k"}),
    item("10", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s=l", KG_FB(
        const double b2 = sq(b(j)), b4 = b2 * b2, b6 = b4 * b2;
        return b2 * R(U, V, W, Q) +
               (b2 * gsB(db(j), db(j)) + b6 * g(P, P)) * KG_GG(U, V, W, Q) +
               b4 * g(V, Q) * K(U, P, W) - b4 * g(U, Q) * K(V, P, W) -
               b4 * g(V, W) * K(U, P, Q) + b4 * g(U, W) * K(V, P, Q) +
               b6 * g(U, P) * (g(V, W) * g(Q, P) - g(V, Q) * g(W, P)) -
               b6 * g(V, P) * (g(U, W) * g(Q, P) - g(U, Q) * g(W, P));)),
    item("11", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s!=l", KG_F(
        sq(b(j)) * R(U, V, W, Q) +
        (sq(b(j)) * gsB(db(j), db(j)) + sq(b(l)) * sq(sq(b(j))) * g(P, P)) *
            KG_GG(U, V, W, Q))),
    item("12", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s=l", KG_F(
        b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
        sq(b(i)) * sq(b(j)) * g(U, W) *
            (K(V, P, Q) + sq(b(i)) * g(P, P) * g(V, Q) - sq(b(i)) * g(V, P) * g(Q, P)))),
    item("13", {"U_k,V_i,W_j,Q_s"}, "l=j=k!=i=s", KG_F(
        b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
        sq(b(i)) * sq(b(j)) * g(V, Q) *
            (K(U, P, W) + sq(b(j)) * g(P, P) * g(U, W) - sq(b(j)) * g(U, P) * g(W, P)))),
  };
  if (three)
    items.push_back(item("14", {"U_k,V_i,W_j,Q_s"}, "i=s!=j=k!=l", KG_F(
        b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
        sq(b(i)) * sq(b(j)) * sq(b(l)) * g(V, Q) * g(U, W) * g(P, P))));
  items.push_back(other(three ? "15" : "14", {"U_k,V_i,W_j,Q_s"}));
  return row(fx, "ssm-curvature/P-fiber", kWarped, C::SemiSymMetric, O::Curvature, L::Fiber,
             std::move(items));
}

Row kasner_ssnm_koszul_base(const std::string& fx, bool three) {
  return row(fx, "ssnm-koszul/P-base", kWarped, C::SemiSymNonMetric, O::KoszulForm, L::Base, {
    item("1", {"T,T,T"}, "", KG_F(1.0)),
    zero("2", {"T,T,W_j", "T,W_j,T", "W_j,T,T"}),
    item("3", {"T,V_i,W_j", "-V_i,W_j,T"}, "i=j", KG_F(b(j) * Xb(T, j) * g(V, W))),
    item("4", {"V_i,T,W_j"}, "i=j", KG_F(b(j) * Xb(T, j) * g(V, W) - sq(b(j)) * g(V, W))),
    zero("5", {"T,V_i,W_j", "V_i,T,W_j", "V_i,W_j,T"}, "i!=j"),
    item("6", {"U_i,V_j,W_k"}, "i=j=k", KG_F(sq(b(j)) * K(U, V, W))),
    zero("7", {"U_i,V_j,W_k"}, three ? "i=j!=k|i!=j!=k" : "i=j!=k"),
  });
}

Row kasner_ssnm_koszul_fiber(const std::string& fx) {
  return row(fx, "ssnm-koszul/P-fiber", kWarped, C::SemiSymNonMetric, O::KoszulForm, L::Fiber, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W_j", "W_j,T,T"}, "j=l"),
    item("3", {"T,W_j,T"}, "j=l", KG_F(-sq(b(j)) * g(W, P))),
    zero("4", {"T,T,W_j", "T,W_j,T", "W_j,T,T"}, "j!=l"),
    item("5", {"T,V_i,W_j", "V_i,T,W_j", "-V_i,W_j,T"}, "i=j", KG_F(b(j) * Xb(T, j) * g(V, W))),
    zero("6", {"T,V_i,W_j", "V_i,T,W_j", "V_i,W_j,T"}, "i!=j"),
    item("7", {"U_i,V_j,W_k"}, "i=j=k=l",
         KG_F(sq(b(j)) * K(U, V, W) + sq(sq(b(j))) * g(U, W) * g(V, P))),
    item("8", {"U_i,V_j,W_k"}, "i=j=k!=l", KG_F(sq(b(j)) * K(U, V, W))),
    item("9", {"U_i,W_k,V_j"}, "i=j!=k=l", KG_F(sq(b(j)) * sq(b(k)) * g(U, V) * g(W, P))),
    other("10", {"U_i,V_j,W_k"}),
  });
}

Row kasner_ssnm_curvature_base(const std::string& fx) {
  return row(fx, "ssnm-curvature/P-base", kWarped, C::SemiSymNonMetric, O::Curvature, L::Base, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W_j", "T,T,W_j,T", "T,W_j,T,T"}),
    zero("3", {"T,T,V_i,W_j", "V_i,W_j,T,T"}, "i=j"),
    item("4", {"V_i,T,W_j,T", "-T,V_i,W_j,T"}, "i=j",
         KG_F(b(j) * XYb(T, T, j) * g(V, W) + 2 * b(j) * Xb(T, j) * g(V, W))),
    item("5", {"V_i,T,T,W_j", "-T,V_i,T,W_j"}, "i=j", KG_F(-b(j) * XYb(T, T, j) * g(V, W))),
    zero("6", {"T,T,V_i,W_j", "V_i,W_j,T,T", "T,V_i,W_j,T", "T,V_i,T,W_j"}, "i!=j"),
    zero("7", {"T,V_i,W_j,U_k", "W_j,U_k,T,V_i"}, "i=j=k"),
    item("8", {"W_j,U_k,V_i,T"}, "i=j=k", KG_F(-sq(b(j)) * (K(W, V, U) - K(U, V, W)))),
    other("9", {"T,V_i,W_j,U_k", "W_j,U_k,T,V_i", "W_j,U_k,V_i,T"}),
    item("10", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s", KG_F(
        sq(b(j)) * R(U, V, W, Q) + sq(b(j)) * gsB(db(j), db(j)) * KG_GG(U, V, W, Q))),
    item("11", {"U_k,V_i,W_j,Q_s"}, "k=j!=i=s",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W))),
    item("12", {"U_k,V_i,W_j,Q_s"}, "k=s!=j=i",
         KG_F(-b(j) * b(k) * gsB(db(j), db(k)) * g(V, W) * g(U, Q))),
    other("13", {"U_k,V_i,W_j,Q_s"}),
  });
}

Row kasner_ssnm_curvature_fiber(const std::string& fx, bool three) {
  return row(fx, "ssnm-curvature/P-fiber", kWarped, C::SemiSymNonMetric, O::Curvature, L::Fiber, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W_j", "T,T,W_j,T", "T,W_j,T,T", "W_j,T,T,T"}),
    zero("3", {"T,T,V_i,W_j", "V_i,W_j,T,T"}),
    item("4", {"V_i,T,W_j,T", "-T,V_i,W_j,T"}, "i=j=l",
         KG_F(b(j) * XYb(T, T, j) * g(V, W) - sq(b(j)) * Dg(V, W, P))),
    item("5", {"V_i,T,W_j,T", "-T,V_i,W_j,T"}, "i=j!=l", KG_F(b(j) * XYb(T, T, j) * g(V, W))),
    item("6", {"V_i,T,T,W_j", "-T,V_i,T,W_j"}, "i=j=l|i=j!=l",
         KG_F(-b(j) * XYb(T, T, j) * g(V, W))),
    other("7", {"V_i,T,W_j,T", "V_i,T,T,W_j"}),
    item("8", {"T,V_i,W_j,U_k"}, "i=j=k=l", KG_F(
        2 * b(j) * sq(b(j)) * Xb(T, j) * (g(V, U) * g(W, P) + g(V, W) * g(U, P)))),
    item("9", {"T,V_i,W_j,U_k", "T,V_i,U_k,W_j"}, "i=j!=k=l",
         KG_F(2 * b(j) * sq(b(k)) * Xb(T, j) * g(V, W) * g(U, P))),
    other("10", {"T,V_i,W_j,U_k", "W_j,U_k,T,V_i", "W_j,U_k,V_i,T"}),
    item("11", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s=l", KG_FB(
        const double b2 = sq(b(j)), b4 = b2 * b2;
        return b2 * R(U, V, W, Q) + b2 * gsB(db(j), db(j)) * KG_GG(U, V, W, Q) +
               b4 * g(Q, P) * (K(U, W, V) - K(V, W, U)) + b4 * Dg(U, W, P) * g(V, Q) -
               b4 * Dg(V, W, P) * g(U, Q);)),
    item("12", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s!=l", KG_F(
        sq(b(j)) * R(U, V, W, Q) + sq(b(j)) * gsB(db(j), db(j)) * KG_GG(U, V, W, Q))),
    item("13", {"U_k,V_i,W_j,Q_s"}, three ? "j=k!=i=s=l|i=s!=j=k!=l" : "j=k!=i=s=l",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W))),
    item("14", {"U_k,V_i,W_j,Q_s"}, "l=j=k!=i=s", KG_F(
        b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
        sq(b(i)) * sq(b(j)) * Dg(U, W, P) * g(V, Q))),
    item("15", {"U_k,V_i,W_j,Q_s"}, "k=s!=i=j=l", KG_F(
        -b(j) * b(k) * gsB(db(j), db(k)) * g(V, W) * g(U, Q) -
        sq(b(j)) * sq(b(k)) * Dg(V, W, P) * g(U, Q))),
    item("16", {"U_k,V_i,W_j,Q_s"}, three ? "l=k=s!=i=j|i=j!=k=s!=l" : "l=k=s!=i=j",
         KG_F(-b(j) * b(k) * gsB(db(j), db(k)) * g(V, W) * g(U, Q))),
    item("17", {"U_k,V_i,W_j,Q_s"}, "l=k!=i=j=s",
         KG_F(sq(b(j)) * sq(b(k)) * g(U, P) * (K(V, Q, W) - K(W, Q, V)))),
    other("18", {"U_k,V_i,W_j,Q_s"}),
  });
}

Row kasner_ap_koszul(const std::string& fx, bool three) {
  std::vector<Item> items = {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W_j", "T,W_j,T", "W_j,T,T"}),
    item("3", {"T,V_i,W_j"}, "i=j", KG_F(b(j) * Xb(T, j) * g(V, W))),
    item("4", {"V_i,T,W_j", "-V_i,W_j,T"}, "i=j", KG_F(
        0.5 * (b(j) * Xb(T, j) * g(V, W) + b(j) * Xb(J(T), j) * g(V, J(W))))),
    zero("5", {"T,V_i,W_j", "V_i,T,W_j", "V_i,W_j,T"}, "i!=j"),
    item("6", {"U_i,V_j,W_k"}, "i=j=k", KG_F(sq(b(j)) * KA(U, V, W))),
    zero("7", {"U_i,V_j,W_k", "U_i,W_k,V_j", "W_k,U_i,V_j"}, "i=j!=k"),
  };
  if (three) items.push_back(zero("8", {"U_i,V_j,W_k"}, "i!=j!=k"));
  return row(fx, "ap-koszul", kWarped, C::AlmostProduct, O::KoszulForm, L::None, std::move(items));
}

Row kasner_ap_curvature(const std::string& fx, bool three) {
  std::vector<Item> items = {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W_j", "T,W_j,T,T"}),
    zero("3", {"T,T,V_i,W_j", "V_i,W_j,T,T"}),
    item("4", {"T,V_i,T,W_j"}, "i=j", KG_F(
        0.5 * b(j) * XYb(T, T, j) * g(V, W) + 0.5 * b(j) * XYb(T, J(T), j) * g(V, J(W)))),
    zero("5", {"T,V_i,T,W_j"}, "i!=j"),
    zero("6", {"T,V_i,W_j,U_k"}),
    item("7", {"U_k,V_i,T,W_j"}, "i=j=k", KG_F(KG_APT(j))),
    other("8", {"U_k,V_i,T,W_j"}),
    item("9", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s", KG_F(KG_AP4(j))),
    item("10", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s", KG_F(
        0.25 * b(i) * b(j) *
        (gsB(db(i), db(j)) * g(V, Q) * g(U, W) + gsB(dbJ(i), db(j)) * g(V, J(Q)) * g(U, W) +
         gsB(db(i), dbJ(j)) * g(V, Q) * g(U, J(W)) +
         gsB(dbJ(i), dbJ(j)) * g(V, J(Q)) * g(U, J(W))))),
  };
  if (three) items.push_back(other("11", {"U_k,V_i,W_j,Q_s"}));
  else items.push_back(zero("11", {"U_k,V_i,W_j,Q_s"}, "i=k!=j=s"));
  return row(fx, "ap-curvature", kWarped, C::AlmostProduct, O::Curvature, L::None, std::move(items));
}

void kasner(std::vector<Row>& out, const std::string& fx, bool three) {
  out.push_back(kasner_ssm_koszul_base(fx));
  out.push_back(kasner_ssm_koszul_fiber(fx));
  out.push_back(kasner_ssm_curvature_base(fx, three));
  out.push_back(kasner_ssm_curvature_fiber(fx, three));
  out.push_back(kasner_ssnm_koszul_base(fx, three));
  out.push_back(kasner_ssnm_koszul_fiber(fx));
  out.push_back(kasner_ssnm_curvature_base(fx));
  out.push_back(kasner_ssnm_curvature_fiber(fx, three));
  out.push_back(kasner_ap_koszul(fx, three));
  out.push_back(kasner_ap_curvature(fx, three));
}

// =================================================================== M4

Row m4_ssm_koszul_base() {
  return row("M4", "ssm-koszul/P-base", kTwisted, C::SemiSymMetric, O::KoszulForm, L::Base, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W", "T,W,T", "W,T,T"}),
    item("3", {"T,V,W"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("4", {"V,T,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W) - sq(b()) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W))),
  });
}

Row m4_ssm_koszul_fiber() {
  return row("M4", "ssm-koszul/P-fiber", kTwisted, C::SemiSymMetric, O::KoszulForm, L::Fiber, {
    zero("1", {"T,T,T"}),
    item("2", {"T,T,W", "-T,W,T"}, "", KG_F(sq(b()) * g(P, W))),
    zero("3", {"W,T,T"}),
    item("4", {"T,V,W", "V,T,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W) + sq(sq(b())) * g(V, P) * g(U, W) -
                                   sq(sq(b())) * g(W, P) * g(U, V))),
  });
}

#define KG_R4(gb)                                                                       \
  (sq(b()) * R(U, V, W, Q) + (gb)*KG_GG(U, V, W, Q) + KG_TW(U, W) * g(V, Q) +           \
   KG_TW(V, Q) * g(U, W) - KG_TW(V, W) * g(U, Q) - KG_TW(U, Q) * g(V, W))

Row m4_ssm_curvature_base() {
  return row("M4", "ssm-curvature/P-base", kTwisted, C::SemiSymMetric, O::Curvature, L::Base, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,T,W"}, "", KG_F(b() * XYb(T, T) * g(V, W) - b() * Xb(T) * g(V, W))),
    item("5", {"T,V,U,W", "U,W,T,V"}, "", KG_F(KG_XT(U, W, V))),
    amend(item("6", {"U,V,W,Q"}, "", KG_F(KG_R4(
              sq(b()) * gsB(db(), db()) - gsF(db(), db()) + 2 * b() * sq(b()) * Xb(T) -
              sq(sq(b()))))),
          KG_F(KG_R4(sq(b()) * gsB(db(), db()) + gsF(db(), db()) + 2 * b() * sq(b()) * Xb(T) -
                     sq(sq(b())))),
          "sign of the g*_F(db, db) term flipped to +"),
  });
}

Row m4_ssm_curvature_fiber() {
  return row("M4", "ssm-curvature/P-fiber", kTwisted, C::SemiSymMetric, O::Curvature, L::Fiber, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,T,W"}, "", KG_FB(
        const double bb = b(), b4 = sq(sq(bb));
        return bb * XYb(T, T) * g(V, W) + b4 * g(V, P) * g(P, W) - b4 * g(V, W) * g(P, P) -
               bb * Xb(V) * g(P, W) - bb * Xb(P) * g(W, V) + bb * Xb(W) * g(V, P) -
               sq(bb) * K(V, P, W);)),
    item("5", {"T,V,U,W"}, "", KG_F(
        KG_XT(U, W, V) + b() * sq(b()) * Xb(T) * (g(U, P) * g(W, V) - g(W, P) * g(U, V)))),
    item("6", {"U,W,T,V"}, "", KG_F(
        KG_XT(U, W, V) - b() * sq(b()) * Xb(T) * (g(U, P) * g(W, V) - g(W, P) * g(U, V)))),
    item("7", {"U,V,W,Q"}, "", KG_FB(
        const double bb = b(), b3 = bb * sq(bb), b6 = b3 * b3;
        return sq(bb) * R(U, V, W, Q) +
               (sq(bb) * gsB(db(), db()) + gsF(db(), db()) + 2 * b3 * Xb(P) + b6 * g(P, P)) *
                   KG_GG(U, V, W, Q) +
               KG_TWK(U, W) * g(V, Q) + KG_TWK(V, Q) * g(U, W) - KG_TWK(V, W) * g(U, Q) -
               KG_TWK(U, Q) * g(V, W) +
               b3 * Xb(Q) * (g(U, P) * g(V, W) - g(V, P) * g(U, W)) +
               (b6 * g(U, P) - b3 * Xb(U)) * (g(V, W) * g(P, Q) - g(P, W) * g(V, Q)) -
               (b6 * g(V, P) - b3 * Xb(V)) * (g(U, W) * g(P, Q) - g(P, W) * g(U, Q)) -
               b3 * Xb(W) * (g(U, P) * g(V, Q) - g(V, P) * g(U, Q));)),
  });
}

Row m4_ssnm_koszul_base() {
  return row("M4", "ssnm-koszul/P-base", kTwisted, C::SemiSymNonMetric, O::KoszulForm, L::Base, {
    item("1", {"T,T,T"}, "", KG_F(1.0)),
    zero("2", {"T,T,W", "T,W,T", "W,T,T"}),
    item("3", {"T,V,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("4", {"V,T,W"}, "", KG_F(b() * Xb(T) * g(V, W) - sq(b()) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W))),
  });
}

Row m4_ssnm_koszul_fiber() {
  return row("M4", "ssnm-koszul/P-fiber", kTwisted, C::SemiSymNonMetric, O::KoszulForm, L::Fiber, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W", "W,T,T"}),
    item("3", {"T,W,T"}, "", KG_F(-sq(b()) * g(W, P))),
    item("4", {"T,V,W", "V,T,W", "-V,W,T"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W) + sq(sq(b())) * g(V, P) * g(U, W))),
  });
}

Row m4_ssnm_curvature_base() {
  return row("M4", "ssnm-curvature/P-base", kTwisted, C::SemiSymNonMetric, O::Curvature, L::Base, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,T,W,T", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"V,T,W,T", "-T,V,W,T"}, "",
         KG_F(b() * XYb(T, T) * g(V, W) + 2 * b() * Xb(T) * g(V, W))),
    item("5", {"V,T,T,W", "-T,V,T,W"}, "", KG_F(-b() * XYb(T, T) * g(V, W))),
    item("6", {"T,U,V,W", "V,W,T,U"}, "", KG_F(KG_XT(V, W, U))),
    amend(item("7", {"V,W,U,T"}, "", KG_F(
              -KG_XT(V, W, U) + 2 * b() * Xb(W) * g(U, V) - 2 * b() * Xb(V) * g(U, W) -
              sq(b()) * (K(W, U, V) - K(V, U, W)))),
          KG_F(-KG_XT(V, W, U) + 2 * b() * Xb(W) * g(U, V) - 2 * b() * Xb(V) * g(U, W) -
               sq(b()) * (K(V, U, W) - K(W, U, V))),
          "K_F(V,U,W) - K_F(W,U,V) in place of the printed difference"),
    item("8", {"U,V,W,Q"}, "", KG_F(KG_R4(sq(b()) * gsB(db(), db()) + gsF(db(), db())))),
  });
}

Row m4_ssnm_curvature_fiber() {
  return row("M4", "ssnm-curvature/P-fiber", kTwisted, C::SemiSymNonMetric, O::Curvature, L::Fiber, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,T,W,T", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,W,T", "-V,T,W,T"}, "", KG_F(
        -b() * XYb(T, T) * g(V, W) + 2 * b() * Xb(V) * g(W, P) + sq(b()) * Dg(V, W, P)),
         "second t-derivative printed with a single dt"),
    item("5", {"T,V,T,W", "-V,T,T,W"}, "", KG_F(b() * XYb(T, T) * g(V, W))),
    item("6", {"T,V,U,W", "-V,T,U,W"}, "", KG_F(
        KG_XT(U, W, V) + 2 * b() * sq(b()) * Xb(T) * (g(U, P) * g(V, W) + g(W, P) * g(U, V)))),
    item("7", {"U,W,T,V", "-U,W,V,T"}, "", KG_F(KG_XT(U, W, V))),
    item("8", {"U,V,W,Q"}, "", KG_FB(
        const double bb = b(), b3 = bb * sq(bb), b4 = b3 * bb;
        return KG_R4(sq(bb) * gsB(db(), db()) + gsF(db(), db())) +
               2 * b3 * Xb(U) * (g(W, P) * g(V, Q) + g(Q, P) * g(V, W)) -
               2 * b3 * Xb(V) * (g(W, P) * g(U, Q) + g(Q, P) * g(U, W)) +
               b4 * Dg(U, W, P) * g(V, Q) - b4 * Dg(V, W, P) * g(U, Q) +
               b4 * g(P, Q) * (K(U, W, V) - K(V, W, U));)),
  });
}

Row m4_ap_koszul() {
  return row("M4", "ap-koszul", kTwisted, C::AlmostProduct, O::KoszulForm, L::None, {
    zero("1", {"T,T,T"}),
    zero("2", {"T,T,W", "T,W,T", "W,T,T"}),
    item("3", {"T,V,W"}, "", KG_F(b() * Xb(T) * g(V, W))),
    item("4", {"V,T,W", "-V,W,T"}, "", KG_F(
        0.5 * (b() * Xb(T) * g(V, W) + b() * Xb(J(T)) * g(V, J(W))))),
    item("5", {"U,V,W"}, "", KG_F(
        b() * Xb(U) * g(V, W) + 0.5 * b() * Xb(V) * g(U, W) - 0.5 * b() * Xb(W) * g(U, V) +
        0.5 * b() * Xb(J(V)) * g(U, J(W)) - 0.5 * b() * Xb(J(W)) * g(U, J(V)) +
        sq(b()) * KA(U, V, W))),
  });
}

// ws: sign of the W(b) and J_F W(b) terms
double m4_ap_four(double ws) {
  using namespace dsl;
  const double bb = b(), b2 = bb * bb;
  auto a0 = [&](A x, A y) {
    return 3 * Xb(x) * Xb(y) - 2 * bb * XYb(x, y) + Xb(J(x)) * Xb(J(y)) +
           2 * bb * gsF(flatA(x, y), db());
  };
  auto aj = [&](A x, A y) {
    return 3 * Xb(x) * Xb(J(y)) - 2 * bb * XYb(x, J(y)) + Xb(J(x)) * Xb(y) +
           2 * bb * gsF(flatA(x, y), dbJ());
  };
  auto kk = [&](A x, A y, A z) {
    return K(x, y, z) - K(z, y, x) - K(x, J(y), J(z)) + K(z, J(y), J(x));
  };
  auto kj = [&](A x, A y, A z) {
    return K(x, y, J(z)) - K(z, y, J(x)) - K(x, J(y), z) + K(z, J(y), x);
  };
  return b2 * RA(U, V, W, Q) +
         0.25 * (b2 * gsB(db(), db()) + gsF(db(), db())) * KG_GG(U, V, W, Q) +
         0.25 * (b2 * gsB(dbJ(), dbJ()) + gsF(dbJ(), dbJ())) *
             (g(U, J(W)) * g(V, J(Q)) - g(V, J(W)) * g(U, J(Q))) +
         0.25 * (b2 * gsB(dbJ(), db()) + gsF(dbJ(), db())) *
             (g(U, J(W)) * g(V, Q) - g(V, J(W)) * g(U, Q) + g(U, W) * g(V, J(Q)) -
              g(V, W) * g(U, J(Q))) -
         0.25 * a0(U, W) * g(V, Q) - 0.25 * aj(U, W) * g(V, J(Q)) -
         0.25 * a0(V, Q) * g(U, W) - 0.25 * aj(V, Q) * g(U, J(W)) +
         0.25 * a0(V, W) * g(U, Q) + 0.25 * aj(V, W) * g(U, J(Q)) +
         0.25 * a0(U, Q) * g(V, W) + 0.25 * aj(U, Q) * g(V, J(W)) +
         0.25 * bb * Xb(Q) * kk(V, W, U) - 0.25 * bb * Xb(J(Q)) * kj(V, W, U) +
         ws * (0.25 * bb * Xb(W) * kk(V, Q, U) - 0.25 * bb * Xb(J(W)) * kj(V, Q, U));
}

Row m4_ap_curvature() {
  return row("M4", "ap-curvature", kTwisted, C::AlmostProduct, O::Curvature, L::None, {
    zero("1", {"T,T,T,T"}),
    zero("2", {"T,T,T,W", "T,W,T,T"}),
    zero("3", {"T,T,V,W", "V,W,T,T"}),
    item("4", {"T,V,T,W"}, "", KG_F(0.5 * b() * XYb(T, T) * g(V, W) +
                                     0.5 * b() * XYb(T, J(T)) * g(V, J(W)))),
    item("5", {"T,V,W,U"}, "", KG_F(
        -0.5 * (Xb(T) * Xb(W) - b() * XYb(W, T)) * g(V, U) -
        0.5 * (Xb(T) * Xb(J(W)) - b() * XYb(J(W), T)) * g(V, J(U)) +
        0.5 * (Xb(T) * Xb(U) - b() * XYb(U, T)) * g(V, W) +
        0.5 * (Xb(T) * Xb(J(U)) - b() * XYb(J(U), T)) * g(V, J(W)))),
    item("6", {"W,U,T,V"}, "", KG_F(
        0.25 * (2 * b() * XYb(W, T) - Xb(W) * Xb(T) - Xb(J(T)) * Xb(J(W))) * g(U, V) +
        0.25 * (2 * b() * XYb(W, J(T)) - Xb(J(W)) * Xb(T) - Xb(J(T)) * Xb(W)) * g(U, J(V)) -
        0.25 * (2 * b() * XYb(U, T) - Xb(U) * Xb(T) - Xb(J(T)) * Xb(J(U))) * g(W, V) -
        0.25 * (2 * b() * XYb(U, J(T)) - Xb(J(U)) * Xb(T) - Xb(J(T)) * Xb(U)) * g(W, J(V)) -
        0.25 * b() * Xb(T) * (K(U, V, W) - K(W, V, U) - K(U, J(V), J(W)) + K(W, J(V), J(U))) +
        0.25 * b() * Xb(J(T)) *
            (K(U, V, J(W)) - K(W, V, J(U)) - K(U, J(V), W) + K(W, J(V), U)))),
    amend(item("7", {"U,V,W,Q"}, "", KG_F(m4_ap_four(1.0))), KG_F(m4_ap_four(-1.0)),
          "signs of the W(b) and J_F W(b) terms flipped"),
  });
}

}  // namespace

std::vector<Row> special_rows() {
  std::vector<Row> out = {
      m1_ssm_koszul_base(),    m1_ssm_koszul_fiber(),   m1_ssm_curvature_base(),
      m1_ssm_curvature_fiber(), m1_ssnm_koszul_base(),  m1_ssnm_koszul_fiber(),
      m1_ssnm_curvature_base(), m1_ssnm_curvature_fiber(), m1_ap_koszul(),
      m1_ap_curvature(),
  };
  kasner(out, "M2", false);
  kasner(out, "M3", true);
  for (auto* f : {m4_ssm_koszul_base, m4_ssm_koszul_fiber, m4_ssm_curvature_base,
                  m4_ssm_curvature_fiber, m4_ssnm_koszul_base, m4_ssnm_koszul_fiber,
                  m4_ssnm_curvature_base, m4_ssnm_curvature_fiber, m4_ap_koszul, m4_ap_curvature})
    out.push_back(f());
  return out;
}

}  // namespace kg::catalog
