#include "catalog_dsl.hpp"

namespace kg::catalog {

namespace {

using C = ConnectionKind;
using O = ObjectKind;
using L = PLocation::Kind;
constexpr ProductKind kWarped = ProductKind::MultiplyWarped;

Row row(std::string id, C c, O o, L pl, std::vector<Item> items) {
  Row r;
  r.id = std::move(id);
  r.connection = c;
  r.object = o;
  r.product = kWarped;
  r.ploc = pl;
  r.items = std::move(items);
  return r;
}

// g_F(U,W)g_F(V,Q) - g_F(V,W)g_F(U,Q)
#define KG_GG(a, c, d, e) (g(a, d) * g(c, e) - g(c, d) * g(a, e))

// ------------------------------------------------------------ semi-symmetric metric

Row ssm_koszul_base() {
  return row("ssm-koszul/warped/P-base", C::SemiSymMetric, O::KoszulForm, L::Base, {
    item("1", {"X,Y,Z"}, "", KG_F(KS(X, Y, Z))),
    zero("2", {"X,Y,W_j", "X,W_j,Y", "W_j,X,Y"}),
    item("3", {"X,V_i,W_j"}, "i=j", KG_F(b(j) * Xb(X, j) * g(V, W))),
    item("4", {"V_i,X,W_j", "-V_i,W_j,X"}, "i=j",
         KG_F(b(j) * Xb(X, j) * g(V, W) + sq(b(j)) * g(X, P) * g(V, W))),
    zero("5", {"X,V_i,W_j", "V_i,X,W_j", "V_i,W_j,X"}, "i!=j"),
    item("6", {"U_i,V_j,W_k"}, "i=j=k", KG_F(sq(b(j)) * K(U, V, W))),
    other("7", {"U_i,V_j,W_k"}),
  });
}

Row ssm_koszul_fiber() {
  return row("ssm-koszul/warped/P-fiber", C::SemiSymMetric, O::KoszulForm, L::Fiber, {
    item("1", {"X,Y,Z"}, "", KG_F(K(X, Y, Z))),
    item("2", {"X,Y,W_j", "-X,W_j,Y"}, "j=l", KG_F(-sq(b(j)) * g(X, Y) * g(W, P))),
    zero("3", {"X,Y,W_j", "X,W_j,Y"}, "j!=l"),
    zero("4", {"W_j,X,Y"}),
    item("5", {"X,V_i,W_j", "V_i,X,W_j", "-V_i,W_j,X"}, "i=j", KG_F(b(j) * Xb(X, j) * g(V, W))),
    zero("6", {"X,V_i,W_j", "V_i,X,W_j", "V_i,W_j,X"}, "i!=j"),
    item("7", {"U_i,V_j,W_k"}, "i=j=k=l",
         KG_F(sq(b(j)) * K(U, V, W) + sq(sq(b(j))) * g(U, W) * g(V, P) -
              sq(sq(b(j))) * g(U, V) * g(W, P))),
    item("8", {"U_i,V_j,W_k", "-U_i,W_k,V_j"}, "i=j!=k=l",
         KG_F(-sq(b(j)) * sq(b(k)) * g(U, V) * g(W, P))),
    other("9", {"U_i,V_j,W_k"}),
  });
}

Row ssm_curvature_base() {
  return row("ssm-curvature/warped/P-base", C::SemiSymMetric, O::Curvature, L::Base, {
    item("1", {"X,Y,Z,T"}, "", KG_F(RS(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W_j", "Z,W_j,X,Y"}),
    zero("3", {"X,Y,V_i,W_j", "V_i,W_j,X,Y"}, "i=j"),
    item("4", {"X,V_i,W_j,Y"}, "i=j",
         KG_F(b(j) * gsB(flat(X, Y), db(j)) * g(V, W) - b(j) * XYb(X, Y, j) * g(V, W) -
              sq(b(j)) * g(V, W) * K(X, P, Y) - b(j) * Xb(P, j) * g(X, Y) * g(V, W) +
              sq(b(j)) * g(X, P) * g(Y, P) * g(V, W) - sq(b(j)) * g(X, Y) * g(P, P) * g(V, W))),
    zero("5", {"X,Y,V_i,W_j", "V_i,W_j,X,Y", "X,V_i,W_j,Y"}, "i!=j"),
    zero("6", {"X,V_i,W_j,U_k", "W_j,U_k,X,V_i"}, "i=j=k"),
    zero("7", {"X,V_i,W_j,U_k", "X,U_k,V_i,W_j", "W_j,U_k,X,V_i", "V_i,W_j,X,U_k"}, "i=j!=k"),
    zero("8", {"X,V_i,W_j,U_k", "W_j,U_k,X,V_i"}, "i!=j!=k"),
    item("9", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s",
         KG_F(sq(b(j)) * R(U, V, W, Q) +
              (sq(b(j)) * gsB(db(j), db(j)) + 2 * b(j) * sq(b(j)) * Xb(P, j) +
               sq(sq(b(j))) * g(P, P)) * KG_GG(U, V, W, Q))),
    zero("10", {"U_k,V_i,W_j,Q_s", "W_j,Q_s,U_k,V_i"}, "i=j=s!=k"),
    item("11", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s",
         KG_F((b(i) * b(j) * gsB(db(i), db(j)) + b(i) * sq(b(j)) * Xb(P, i) +
               b(j) * sq(b(i)) * Xb(P, j) + sq(b(i)) * sq(b(j)) * g(P, P)) *
              g(V, Q) * g(U, W))),
    other("12", {"U_k,V_i,W_j,Q_s"}),
  });
}

Row ssm_curvature_fiber() {
  return row("ssm-curvature/warped/P-fiber", C::SemiSymMetric, O::Curvature, L::Fiber, {
    item("1", {"X,Y,Z,T"}, "",
         KG_F(R(X, Y, Z, T) + sq(b(l)) * g(X, Z) * g(Y, T) * g(P, P) -
              sq(b(l)) * g(X, T) * g(Y, Z) * g(P, P))),
    item("2", {"X,Y,Z,W_j", "-Z,W_j,X,Y"}, "j=l",
         KG_F(-b(j) * Xb(X, j) * g(Y, Z) * g(W, P) + b(j) * Xb(Y, j) * g(X, Z) * g(W, P))),
    zero("3", {"X,Y,Z,W_j", "Z,W_j,X,Y"}, "j!=l"),
    zero("4", {"X,Y,V_i,W_j", "V_i,W_j,X,Y"}),
    item("5", {"X,V_i,W_j,Y"}, "i=j=l",
         KG_F(b(j) * gsB(flat(X, Y), db(j)) * g(V, W) - b(j) * XYb(X, Y, j) * g(V, W) -
              sq(b(j)) * g(X, Y) *
                  (K(V, P, W) + sq(b(j)) * g(V, W) * g(P, P) - sq(b(j)) * g(V, P) * g(W, P)))),
    // g_{F_j}(P,P) read as g_{F_l}(P,P)
    item("6", {"X,V_i,W_j,Y"}, "i=j!=l",
         KG_F(b(j) * gsB(flat(X, Y), db(j)) * g(V, W) - b(j) * XYb(X, Y, j) * g(V, W) -
              sq(b(j)) * sq(b(l)) * g(X, Y) * g(V, W) * g(P, P))),
    other("7", {"X,V_i,W_j,Y"}),
    item("8", {"X,V_i,W_j,U_k", "-W_j,U_k,X,V_i"}, "i=j=k=l",
         KG_F(b(j) * sq(b(j)) * Xb(X, j) * (g(V, U) * g(W, P) - g(V, W) * g(U, P)))),
    item("9", {"X,V_i,W_j,U_k", "-W_j,U_k,X,V_i"}, "i=j!=k=l",
         KG_F(-b(l) * sq(b(j)) * Xb(X, l) * g(U, P) * g(V, W))),
    other("10", {"X,V_i,W_j,U_k", "W_j,U_k,X,V_i"}),
    item("11", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s=l", KG_FB(
           const double b2 = sq(b(j)), b4 = b2 * b2, b6 = b4 * b2;
           return b2 * R(U, V, W, Q) + (b2 * gsB(db(j), db(j)) + b6 * g(P, P)) * KG_GG(U, V, W, Q) +
                  b4 * g(V, Q) * K(U, P, W) - b4 * g(U, Q) * K(V, P, W) -
                  b4 * g(V, W) * K(U, P, Q) + b4 * g(U, W) * K(V, P, Q) +
                  b6 * g(U, P) * (g(V, W) * g(Q, P) - g(V, Q) * g(W, P)) -
                  b6 * g(V, P) * (g(U, W) * g(Q, P) - g(U, Q) * g(W, P));)),
    item("12", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s!=l",
         KG_F(sq(b(j)) * R(U, V, W, Q) +
              (sq(b(j)) * gsB(db(j), db(j)) + sq(b(l)) * sq(sq(b(j))) * g(P, P)) *
                  KG_GG(U, V, W, Q))),
    item("13", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s=l",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
              sq(b(i)) * sq(b(j)) * g(U, W) *
                  (K(V, P, Q) + sq(b(i)) * g(P, P) * g(V, Q) - sq(b(i)) * g(V, P) * g(Q, P)))),
    item("14", {"U_k,V_i,W_j,Q_s"}, "l=j=k!=i=s",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
              sq(b(i)) * sq(b(j)) * g(V, Q) *
                  (K(U, P, W) + sq(b(j)) * g(P, P) * g(U, W) - sq(b(j)) * g(U, P) * g(W, P)))),
    item("15", {"U_k,V_i,W_j,Q_s"}, "k=j!=i=s!=l",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
              sq(b(i)) * sq(b(j)) * sq(b(l)) * g(V, Q) * g(U, W) * g(P, P))),
    other("16", {"U_k,V_i,W_j,Q_s"}),
  });
}

// ------------------------------------------------------------ semi-symmetric non-metric

Row ssnm_koszul_base() {
  return row("ssnm-koszul/warped/P-base", C::SemiSymNonMetric, O::KoszulForm, L::Base, {
    item("1", {"X,Y,Z"}, "", KG_F(KN(X, Y, Z))),
    zero("2", {"X,Y,W_j", "X,W_j,Y", "W_j,X,Y"}),
    item("3", {"X,V_i,W_j", "-V_i,W_j,X"}, "i=j", KG_F(b(j) * Xb(X, j) * g(V, W))),
    item("4", {"V_i,X,W_j"}, "i=j",
         KG_F(b(j) * Xb(X, j) * g(V, W) + sq(b(j)) * g(X, P) * g(V, W))),
    zero("5", {"X,V_i,W_j", "V_i,X,W_j", "V_i,W_j,X"}, "i!=j"),
    item("6", {"U_i,V_j,W_k"}, "i=j=k", KG_F(sq(b(j)) * K(U, V, W))),
    other("7", {"U_i,V_j,W_k"}),
  });
}

Row ssnm_koszul_fiber() {
  return row("ssnm-koszul/warped/P-fiber", C::SemiSymNonMetric, O::KoszulForm, L::Fiber, {
    item("1", {"X,Y,Z"}, "", KG_F(K(X, Y, Z))),
    zero("2", {"X,Y,W_j", "W_j,X,Y"}, "j=l"),
    item("3", {"X,W_j,Y"}, "j=l", KG_F(sq(b(j)) * g(X, Y) * g(W, P))),
    zero("4", {"X,Y,W_j", "X,W_j,Y", "W_j,X,Y"}, "j!=l"),
    item("5", {"X,V_i,W_j", "V_i,X,W_j", "-V_i,W_j,X"}, "i=j", KG_F(b(j) * Xb(X, j) * g(V, W))),
    zero("6", {"X,V_i,W_j", "V_i,X,W_j", "V_i,W_j,X"}, "i!=j"),
    item("7", {"U_i,V_j,W_k"}, "i=j=k=l",
         KG_F(sq(b(j)) * K(U, V, W) + sq(sq(b(j))) * g(U, W) * g(V, P))),
    item("8", {"U_i,V_j,W_k"}, "i=j=k!=l", KG_F(sq(b(j)) * K(U, V, W))),
    item("9", {"U_i,W_k,V_j"}, "i=j!=k=l", KG_F(sq(b(j)) * sq(b(k)) * g(U, V) * g(W, P))),
    other("10", {"U_i,V_j,W_k"}),
  });
}

Row ssnm_curvature_base() {
  return row("ssnm-curvature/warped/P-base", C::SemiSymNonMetric, O::Curvature, L::Base, {
    item("1", {"X,Y,Z,T"}, "", KG_F(RN(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W_j", "X,Y,W_j,Z", "Z,W_j,X,Y"}),
    zero("3", {"X,Y,V_i,W_j", "V_i,W_j,X,Y"}, "i=j"),
    item("4", {"V_i,X,W_j,Y", "-X,V_i,W_j,Y"}, "i=j",
         KG_F(b(j) * XYb(X, Y, j) * g(V, W) - b(j) * gsB(flat(X, Y), db(j)) * g(V, W) -
              2 * b(j) * Xb(X, j) * g(Y, P) * g(V, W))),
    item("5", {"V_i,X,Y,W_j", "-X,V_i,Y,W_j"}, "i=j",
         KG_F(-b(j) * XYb(X, Y, j) * g(V, W) + b(j) * gsB(flat(X, Y), db(j)) * g(V, W) -
              sq(b(j)) * Dg(X, Y, P) * g(V, W))),
    zero("6", {"X,Y,V_i,W_j", "V_i,W_j,X,Y", "X,V_i,W_j,Y", "X,V_i,Y,W_j"}, "i!=j"),
    zero("7", {"X,V_i,W_j,U_k", "W_j,U_k,X,V_i"}, "i=j=k"),
    item("8", {"W_j,U_k,V_i,X"}, "i=j=k",
         KG_F(sq(b(j)) * g(X, P) * (K(W, V, U) - K(U, V, W)))),
    other("9", {"X,V_i,W_j,U_k", "W_j,U_k,X,V_i", "W_j,U_k,V_i,X"}),
    item("10", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s",
         KG_F(sq(b(j)) * R(U, V, W, Q) + sq(b(j)) * gsB(db(j), db(j)) * KG_GG(U, V, W, Q))),
    item("11", {"U_k,V_i,W_j,Q_s"}, "k=j!=i=s",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W))),
    item("12", {"U_k,V_i,W_j,Q_s"}, "k=s!=j=i",
         KG_F(-b(j) * b(k) * gsB(db(j), db(k)) * g(V, W) * g(U, Q))),
    other("13", {"U_k,V_i,W_j,Q_s"}),
  });
}

Row ssnm_curvature_fiber() {
  return row("ssnm-curvature/warped/P-fiber", C::SemiSymNonMetric, O::Curvature, L::Fiber, {
    item("1", {"X,Y,Z,T"}, "", KG_F(R(X, Y, Z, T))),
    item("2", {"X,Y,Z,W_j"}, "j=l", KG_F(sq(b(j)) * g(W, P) * (K(X, Z, Y) - K(Y, Z, X)))),
    item("3", {"X,Y,W_j,Z"}, "j=l",
         KG_F(2 * b(j) * g(W, P) * (Xb(X, j) * g(Y, Z) - Xb(Y, j) * g(X, Z)))),
    zero("4", {"X,W_j,Y,Z", "W_j,X,Y,Z"}, "j=l"),
    zero("5", {"X,Y,Z,W_j", "X,Y,W_j,Z", "X,W_j,Y,Z", "W_j,X,Y,Z"}, "j!=l"),
    zero("6", {"X,Y,V_i,W_j", "V_i,W_j,X,Y"}),
    item("7", {"V_i,X,W_j,Y", "-X,V_i,W_j,Y"}, "i=j=l",
         KG_F(b(j) * XYb(X, Y, j) * g(V, W) - b(j) * gsB(flat(X, Y), db(j)) * g(V, W) +
              sq(b(j)) * Dg(V, W, P) * g(X, Y))),
    item("8", {"V_i,X,W_j,Y", "-X,V_i,W_j,Y"}, "i=j!=l",
         KG_F(b(j) * XYb(X, Y, j) * g(V, W) - b(j) * gsB(flat(X, Y), db(j)) * g(V, W))),
    item("9", {"V_i,X,Y,W_j", "-X,V_i,Y,W_j"}, "i=j",
         KG_F(-b(j) * XYb(X, Y, j) * g(V, W) + b(j) * gsB(flat(X, Y), db(j)) * g(V, W))),
    other("10", {"V_i,X,W_j,Y", "V_i,X,Y,W_j"}),
    item("11", {"X,V_i,W_j,U_k"}, "i=j=k=l",
         KG_F(2 * b(j) * sq(b(j)) * Xb(X, j) * (g(V, U) * g(W, P) + g(V, W) * g(U, P)))),
    item("12", {"X,V_i,W_j,U_k"}, "i=j!=k=l",
         KG_F(2 * b(j) * sq(b(k)) * Xb(X, j) * g(V, W) * g(U, P))),
    item("13", {"X,V_i,U_k,W_j"}, "i=j!=k=l",
         KG_F(2 * b(k) * sq(b(j)) * Xb(X, k) * g(V, W) * g(U, P))),
    other("14", {"X,V_i,W_j,U_k", "W_j,U_k,X,V_i", "W_j,U_k,V_i,X"}),
    item("15", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s=l", KG_FB(
           const double b2 = sq(b(j)), b4 = b2 * b2;
           return b2 * R(U, V, W, Q) + b2 * gsB(db(j), db(j)) * KG_GG(U, V, W, Q) +
                  b4 * g(Q, P) * (K(U, W, V) - K(V, W, U)) + b4 * Dg(U, W, P) * g(V, Q) -
                  b4 * Dg(V, W, P) * g(U, Q);)),
    item("16", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s!=l",
         KG_F(sq(b(j)) * R(U, V, W, Q) + sq(b(j)) * gsB(db(j), db(j)) * KG_GG(U, V, W, Q))),
    item("17", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s=l|k=j!=i=s!=l",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W))),
    item("18", {"U_k,V_i,W_j,Q_s"}, "l=j=k!=i=s",
         KG_F(b(i) * b(j) * gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
              sq(b(i)) * sq(b(j)) * Dg(U, W, P) * g(V, Q))),
    item("19", {"U_k,V_i,W_j,Q_s"}, "k=s!=i=j=l",
         KG_F(-b(j) * b(k) * gsB(db(j), db(k)) * g(V, W) * g(U, Q) -
              sq(b(j)) * sq(b(k)) * Dg(V, W, P) * g(U, Q))),
    item("20", {"U_k,V_i,W_j,Q_s"}, "l=k=s!=i=j|k=s!=i=j!=l",
         KG_F(-b(j) * b(k) * gsB(db(j), db(k)) * g(V, W) * g(U, Q))),
    item("21", {"V_i,W_j,Q_s,U_k"}, "l=k!=i=j=s",
         KG_F(sq(b(j)) * sq(b(k)) * g(U, P) * (K(V, Q, W) - K(W, Q, V)))),
    other("22", {"U_k,V_i,W_j,Q_s"}),
  });
}

// ------------------------------------------------------------ almost product

Row ap_koszul() {
  return row("ap-koszul/warped", C::AlmostProduct, O::KoszulForm, L::None, {
    item("1", {"X,Y,Z"}, "", KG_F(KA(X, Y, Z))),
    zero("2", {"X,Y,W_j", "X,W_j,Y", "W_j,X,Y"}),
    item("3", {"X,V_i,W_j"}, "i=j", KG_F(b(j) * Xb(X, j) * g(V, W))),
    item("4", {"V_i,X,W_j", "-V_i,W_j,X"}, "i=j",
         KG_F(0.5 * (b(j) * Xb(X, j) * g(V, W) + b(j) * Xb(J(X), j) * g(V, J(W))))),
    zero("5", {"X,V_i,W_j", "V_i,X,W_j", "V_i,W_j,X"}, "i!=j"),
    item("6", {"U_i,V_j,W_k"}, "i=j=k", KG_F(sq(b(j)) * KA(U, V, W))),
    zero("7", {"U_i,V_j,W_k", "U_i,W_k,V_j", "W_k,U_i,V_j"}, "i=j!=k"),
    zero("8", {"U_i,V_j,W_k"}, "i!=j!=k"),
  });
}

Row ap_curvature() {
  return row("ap-curvature/warped", C::AlmostProduct, O::Curvature, L::None, {
    item("1", {"X,Y,Z,T"}, "", KG_F(RA(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W_j", "Z,W_j,X,Y"}),
    zero("3", {"X,Y,V_i,W_j", "V_i,W_j,X,Y"}),
    item("4", {"X,V_i,Y,W_j"}, "i=j",
         KG_F(0.5 * b(j) * XYb(X, Y, j) * g(V, W) -
              0.5 * b(j) * gsB(flatA(X, Y), db(j)) * g(V, W) +
              0.5 * b(j) * XYb(X, J(Y), j) * g(V, J(W)) -
              0.5 * b(j) * gsB(flatA(X, Y), dbJ(j)) * g(V, J(W)))),
    zero("5", {"X,V_i,Y,W_j"}, "i!=j"),
    zero("6", {"X,V_i,W_j,U_k"}),
    item("7", {"U_k,V_i,X,W_j"}, "i=j=k",
         KG_F(0.25 * b(j) * Xb(X, j) *
                  (-K(V, W, U) + K(U, W, V) + K(V, J(W), J(U)) - K(U, J(W), J(V))) -
              0.25 * b(j) * Xb(J(X), j) *
                  (-K(V, W, J(U)) + K(U, W, J(V)) + K(V, J(W), U) - K(U, J(W), V)))),
    other("8", {"U_k,V_i,X,W_j"}),
    item("9", {"U_k,V_i,W_j,Q_s"}, "i=j=k=s",
         KG_F(sq(b(j)) * RA(U, V, W, Q) +
              0.25 * sq(b(j)) *
                  (gsB(db(j), db(j)) * KG_GG(U, V, W, Q) +
                   gsB(dbJ(j), db(j)) *
                       (g(U, J(W)) * g(V, Q) - g(V, J(W)) * g(U, Q) + g(U, W) * g(V, J(Q)) -
                        g(V, W) * g(U, J(Q))) +
                   gsB(dbJ(j), dbJ(j)) * (g(U, J(W)) * g(V, J(Q)) - g(V, J(W)) * g(U, J(Q)))))),
    // J_{F_j} applied to Q_i read as J_{F_i}
    item("10", {"U_k,V_i,W_j,Q_s"}, "j=k!=i=s",
         KG_F(0.25 * b(i) * b(j) *
              (gsB(db(i), db(j)) * g(V, Q) * g(U, W) +
               gsB(dbJ(i), db(j)) * g(V, J(Q)) * g(U, W) +
               gsB(db(i), dbJ(j)) * g(V, Q) * g(U, J(W)) +
               gsB(dbJ(i), dbJ(j)) * g(V, J(Q)) * g(U, J(W))))),
    other("11", {"U_k,V_i,W_j,Q_s"}),
  });
}

}  // namespace

std::vector<Row> warped_rows() {
  return {ssm_koszul_base(),    ssm_koszul_fiber(),    ssm_curvature_base(),
          ssm_curvature_fiber(), ssnm_koszul_base(),   ssnm_koszul_fiber(),
          ssnm_curvature_base(), ssnm_curvature_fiber(), ap_koszul(),
          ap_curvature()};
}

}  // namespace kg::catalog
