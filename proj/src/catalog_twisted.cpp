#include "catalog_dsl.hpp"

namespace kg::catalog {

namespace {

using C = ConnectionKind;
using O = ObjectKind;
using L = PLocation::Kind;

Row row(std::string id, C c, O o, L pl, std::vector<Item> items) {
  Row r;
  r.id = std::move(id);
  r.connection = c;
  r.object = o;
  r.product = ProductKind::Twisted;
  r.ploc = pl;
  r.items = std::move(items);
  return r;
}

#define KG_GG(a, c, d, e) (g(a, d) * g(c, e) - g(c, d) * g(a, e))
// b ac(b) - 2 a(b) c(b) - b g*_F(flat(a,c), db)
#define KG_TW(a, c) (b() * XYb(a, c) - 2 * Xb(a) * Xb(c) - b() * gsF(flat(a, c), db()))
// the Koszul part shared by every fiber-fiber-fiber item
#define KG_K3(u, v, w)                                                                  \
  (b() * Xb(u) * g(v, w) + b() * Xb(v) * g(w, u) - b() * Xb(w) * g(u, v) +             \
   sq(b()) * K(u, v, w))
// the plain twisted curvature on four fiber fields, minus the db terms
#define KG_R4(gb)                                                                       \
  (sq(b()) * R(U, V, W, Q) + (gb)*KG_GG(U, V, W, Q) + KG_TW(U, W) * g(V, Q) +           \
   KG_TW(V, Q) * g(U, W) - KG_TW(V, W) * g(U, Q) - KG_TW(U, Q) * g(V, W))
// bXa(b) g(W,U)-type block shared by the mixed base-fiber items
#define KG_XF(x, u, w, v)                                                               \
  (b() * XYb(x, u) * g(w, v) - Xb(x) * Xb(u) * g(w, v) - b() * XYb(x, w) * g(u, v) +   \
   Xb(x) * Xb(w) * g(u, v))

// ------------------------------------------------------------ plain

Row koszul() {
  return row("koszul/twisted", C::Plain, O::KoszulForm, L::None, {
    item("1", {"X,Y,Z"}, "", KG_F(K(X, Y, Z))),
    zero("2", {"X,Y,W", "X,W,Y", "W,X,Y"}),
    item("3", {"X,V,W", "V,X,W", "-V,W,X"}, "", KG_F(b() * Xb(X) * g(V, W))),
    item("4", {"U,V,W"}, "", KG_F(KG_K3(U, V, W))),
  });
}

Row curvature() {
  return row("curvature/twisted", C::Plain, O::Curvature, L::None, {
    item("1", {"X,Y,Z,T"}, "", KG_F(R(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W", "Z,W,X,Y"}),
    zero("3", {"X,Y,V,W"}),
    item("4", {"X,V,Y,W", "V,X,W,Y"}, "",
         KG_F(b() * XYb(X, Y) * g(V, W) - b() * gsB(flat(X, Y), db()) * g(V, W))),
    item("5", {"X,U,V,W"}, "", KG_F(KG_XF(X, V, W, U))),
    item("6", {"V,W,U,Q"}, "", KG_F(
        sq(b()) * R(V, W, U, Q) +
        (sq(b()) * gsB(db(), db()) + gsF(db(), db())) * (g(V, U) * g(W, Q) - g(W, U) * g(V, Q)) +
        KG_TW(V, U) * g(W, Q) + KG_TW(W, Q) * g(V, U) - KG_TW(W, U) * g(V, Q) -
        KG_TW(V, Q) * g(W, U))),
  });
}

// ------------------------------------------------------------ semi-symmetric metric

Row ssm_koszul_base() {
  return row("ssm-koszul/twisted/P-base", C::SemiSymMetric, O::KoszulForm, L::Base, {
    item("1", {"X,Y,Z"}, "", KG_F(KS(X, Y, Z))),
    zero("2", {"X,Y,W", "X,W,Y", "W,X,Y"}),
    item("3", {"X,V,W"}, "", KG_F(b() * Xb(X) * g(V, W))),
    item("4", {"V,X,W", "-V,W,X"}, "",
         KG_F(b() * Xb(X) * g(V, W) + sq(b()) * g(X, P) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W))),
  });
}

Row ssm_koszul_fiber() {
  return row("ssm-koszul/twisted/P-fiber", C::SemiSymMetric, O::KoszulForm, L::Fiber, {
    item("1", {"X,Y,Z"}, "", KG_F(K(X, Y, Z))),
    item("2", {"X,Y,W", "-X,W,Y"}, "", KG_F(-sq(b()) * g(X, Y) * g(P, W))),
    zero("3", {"W,X,Y"}),
    item("4", {"X,V,W", "V,X,W", "-V,W,X"}, "", KG_F(b() * Xb(X) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(
        KG_K3(U, V, W) + sq(sq(b())) * g(V, P) * g(U, W) - sq(sq(b())) * g(W, P) * g(U, V))),
  });
}

Row ssm_curvature_base() {
  return row("ssm-curvature/twisted/P-base", C::SemiSymMetric, O::Curvature, L::Base, {
    item("1", {"X,Y,Z,T"}, "", KG_F(RS(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W", "Z,W,X,Y"}),
    zero("3", {"X,Y,V,W", "V,W,X,Y"}),
    item("4", {"X,V,Y,W"}, "", KG_F(
        b() * XYb(X, Y) * g(V, W) - b() * gsB(flat(X, Y), db()) * g(V, W) +
        sq(b()) * K(X, P, Y) * g(V, W) + sq(b()) * g(P, P) * g(X, Y) * g(V, W) -
        sq(b()) * g(X, P) * g(P, Y) * g(V, W) + b() * Xb(P) * g(X, Y) * g(V, W))),
    item("5", {"X,V,U,W", "U,W,X,V"}, "", KG_F(KG_XF(X, U, W, V))),
    amend(item("6", {"U,V,W,Q"}, "", KG_F(KG_R4(sq(b()) * gsB(db(), db()) - gsF(db(), db()) +
                                                 2 * b() * sq(b()) * Xb(P) + sq(sq(b())) * g(P, P)))),
          KG_F(KG_R4(sq(b()) * gsB(db(), db()) + gsF(db(), db()) + 2 * b() * sq(b()) * Xb(P) +
                     sq(sq(b())) * g(P, P))),
          "sign of the g*_F(db, db) term flipped to +"),
  });
}

Row ssm_curvature_fiber() {
  return row("ssm-curvature/twisted/P-fiber", C::SemiSymMetric, O::Curvature, L::Fiber, {
    item("1", {"X,Y,Z,T"}, "", KG_F(
        R(X, Y, Z, T) + sq(b()) * g(X, Z) * g(Y, T) * g(P, P) -
        sq(b()) * g(X, T) * g(Y, Z) * g(P, P))),
    item("2", {"X,Y,Z,W", "-Z,W,X,Y"}, "", KG_F(
        -b() * Xb(X) * g(Y, Z) * g(P, W) + b() * Xb(Y) * g(X, Z) * g(P, W))),
    zero("3", {"X,Y,V,W", "V,W,X,Y"}),
    item("4", {"X,V,Y,W"}, "", KG_FB(
        const double bb = b(), b4 = sq(sq(bb));
        return bb * XYb(X, Y) * g(V, W) - bb * gsB(flat(X, Y), db()) * g(V, W) -
               b4 * g(X, Y) * g(V, P) * g(P, W) + b4 * g(X, Y) * g(V, W) * g(P, P) +
               bb * Xb(V) * g(X, Y) * g(P, W) + bb * Xb(P) * g(X, Y) * g(W, V) -
               bb * Xb(W) * g(X, Y) * g(V, P) + sq(bb) * g(X, Y) * K(V, P, W);)),
    item("5", {"X,V,U,W"}, "", KG_F(
        KG_XF(X, U, W, V) + b() * sq(b()) * Xb(X) * g(U, P) * g(W, V) -
        b() * sq(b()) * Xb(X) * g(W, P) * g(U, V))),
    item("6", {"U,W,X,V"}, "", KG_F(
        KG_XF(X, U, W, V) - b() * sq(b()) * Xb(X) * g(U, P) * g(W, V) +
        b() * sq(b()) * Xb(X) * g(W, P) * g(U, V))),
    item("7", {"U,V,W,Q"}, "", KG_FB(
        const double bb = b(), b3 = bb * bb * bb, b4 = b3 * bb, b6 = b3 * b3;
        auto t = [&](A a, A c) {
          return bb * XYb(a, c) - 2 * Xb(a) * Xb(c) + b4 * K(a, P, c) -
                 bb * gsF(flat(a, c), db());
        };
        return sq(bb) * R(U, V, W, Q) +
               (sq(bb) * gsB(db(), db()) + gsF(db(), db()) + 2 * b3 * Xb(P) + b6 * g(P, P)) *
                   KG_GG(U, V, W, Q) +
               t(U, W) * g(V, Q) + t(V, Q) * g(U, W) - t(V, W) * g(U, Q) - t(U, Q) * g(V, W) +
               b3 * Xb(Q) * (g(U, P) * g(V, W) - g(V, P) * g(U, W)) +
               (b6 * g(U, P) - b3 * Xb(U)) * (g(V, W) * g(P, Q) - g(P, W) * g(V, Q)) -
               (b6 * g(V, P) - b3 * Xb(V)) * (g(U, W) * g(P, Q) - g(P, W) * g(U, Q)) -
               b3 * Xb(W) * (g(U, P) * g(V, Q) - g(V, P) * g(U, Q));)),
  });
}

// ------------------------------------------------------------ semi-symmetric non-metric

Row ssnm_koszul_base() {
  return row("ssnm-koszul/twisted/P-base", C::SemiSymNonMetric, O::KoszulForm, L::Base, {
    item("1", {"X,Y,Z"}, "", KG_F(KN(X, Y, Z))),
    zero("2", {"X,Y,W", "X,W,Y", "W,X,Y"}),
    item("3", {"X,V,W", "-V,W,X"}, "", KG_F(b() * Xb(X) * g(V, W))),
    item("4", {"V,X,W"}, "", KG_F(b() * Xb(X) * g(V, W) + sq(b()) * g(X, P) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W))),
  });
}

Row ssnm_koszul_fiber() {
  return row("ssnm-koszul/twisted/P-fiber", C::SemiSymNonMetric, O::KoszulForm, L::Fiber, {
    item("1", {"X,Y,Z"}, "", KG_F(K(X, Y, Z))),
    zero("2", {"X,Y,W", "W,X,Y"}),
    item("3", {"X,W,Y"}, "", KG_F(sq(b()) * g(X, Y) * g(W, P))),
    item("4", {"X,V,W", "V,X,W", "-V,W,X"}, "", KG_F(b() * Xb(X) * g(V, W))),
    item("5", {"U,V,W"}, "", KG_F(KG_K3(U, V, W) + sq(sq(b())) * g(V, P) * g(U, W))),
  });
}

Row ssnm_curvature_base() {
  return row("ssnm-curvature/twisted/P-base", C::SemiSymNonMetric, O::Curvature, L::Base, {
    item("1", {"X,Y,Z,T"}, "", KG_F(RN(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W", "X,Y,W,Z", "Z,W,X,Y"}),
    zero("3", {"X,Y,V,W", "V,W,X,Y"}),
    item("4", {"V,X,W,Y", "-X,V,W,Y"}, "", KG_F(
        b() * XYb(X, Y) * g(V, W) - b() * gsB(flat(X, Y), db()) * g(V, W) -
        2 * b() * Xb(X) * g(Y, P) * g(V, W))),
    item("5", {"V,X,Y,W", "-X,V,Y,W"}, "", KG_F(
        -b() * XYb(X, Y) * g(V, W) + b() * gsB(flat(X, Y), db()) * g(V, W) -
        sq(b()) * Dg(X, Y, P) * g(V, W))),
    item("6", {"X,U,V,W", "V,W,X,U"}, "", KG_F(KG_XF(X, V, W, U))),
    amend(item("7", {"V,W,U,X"}, "", KG_F(
              -KG_XF(X, V, W, U) - 2 * b() * Xb(W) * g(X, P) * g(U, V) +
              2 * b() * Xb(V) * g(X, P) * g(U, W) + sq(b()) * g(X, P) * (K(W, U, V) - K(V, U, W)))),
          KG_F(-KG_XF(X, V, W, U) - 2 * b() * Xb(W) * g(X, P) * g(U, V) +
               2 * b() * Xb(V) * g(X, P) * g(U, W) + sq(b()) * g(X, P) * (K(V, U, W) - K(W, U, V))),
          "K_F(V,U,W) - K_F(W,U,V) in place of the printed difference"),
    item("8", {"U,V,W,Q"}, "", KG_F(KG_R4(sq(b()) * gsB(db(), db()) + gsF(db(), db())))),
  });
}

Row ssnm_curvature_fiber() {
  return row("ssnm-curvature/twisted/P-fiber", C::SemiSymNonMetric, O::Curvature, L::Fiber, {
    item("1", {"X,Y,Z,T"}, "", KG_F(R(X, Y, Z, T))),
    item("2", {"X,Y,Z,W"}, "", KG_F(sq(b()) * g(W, P) * (K(X, Z, Y) - K(Y, Z, X)))),
    item("3", {"X,Y,W,Z"}, "",
         KG_F(2 * b() * g(W, P) * (Xb(X) * g(Y, Z) - Xb(Y) * g(X, Z)))),
    zero("4", {"Z,W,X,Y"}),
    zero("5", {"X,Y,V,W", "V,W,X,Y"}),
    item("6", {"X,V,W,Y", "-V,X,W,Y"}, "", KG_F(
        -b() * XYb(X, Y) * g(V, W) + b() * gsB(flat(X, Y), db()) * g(V, W) -
        2 * b() * Xb(V) * g(X, Y) * g(W, P) - sq(b()) * Dg(V, W, P) * g(X, Y))),
    item("7", {"X,V,Y,W", "-V,X,Y,W"}, "",
         KG_F(b() * XYb(X, Y) * g(V, W) - b() * gsB(flat(X, Y), db()) * g(V, W))),
    item("8", {"X,V,U,W", "-V,X,U,W"}, "", KG_F(
        KG_XF(X, U, W, V) + 2 * b() * sq(b()) * Xb(X) * (g(U, P) * g(V, W) + g(W, P) * g(U, V)))),
    item("9", {"U,W,X,V", "-U,W,V,X"}, "", KG_F(KG_XF(X, U, W, V))),
    item("10", {"U,V,W,Q"}, "", KG_FB(
        const double bb = b(), b3 = bb * bb * bb, b4 = b3 * bb;
        return KG_R4(sq(bb) * gsB(db(), db()) + gsF(db(), db())) +
               2 * b3 * Xb(U) * (g(W, P) * g(V, Q) + g(Q, P) * g(V, W)) -
               2 * b3 * Xb(V) * (g(W, P) * g(U, Q) + g(Q, P) * g(U, W)) +
               b4 * Dg(U, W, P) * g(V, Q) - b4 * Dg(V, W, P) * g(U, Q) +
               b4 * g(P, Q) * (K(U, W, V) - K(V, W, U));)),
  });
}

// ------------------------------------------------------------ almost product

Row ap_koszul() {
  return row("ap-koszul/twisted", C::AlmostProduct, O::KoszulForm, L::None, {
    item("1", {"X,Y,Z"}, "", KG_F(KA(X, Y, Z))),
    zero("2", {"X,Y,W", "X,W,Y", "W,X,Y"}),
    item("3", {"X,V,W"}, "", KG_F(b() * Xb(X) * g(V, W))),
    item("4", {"V,X,W", "-V,W,X"}, "",
         KG_F(0.5 * (b() * Xb(X) * g(V, W) + b() * Xb(J(X)) * g(V, J(W))))),
    item("5", {"U,V,W"}, "", KG_F(
        b() * Xb(U) * g(V, W) + 0.5 * b() * Xb(V) * g(U, W) - 0.5 * b() * Xb(W) * g(U, V) +
        0.5 * b() * Xb(J(V)) * g(U, J(W)) - 0.5 * b() * Xb(J(W)) * g(U, J(V)) +
        sq(b()) * KA(U, V, W))),
  });
}

Row ap_curvature() {
  return row("ap-curvature/twisted", C::AlmostProduct, O::Curvature, L::None, {
    item("1", {"X,Y,Z,T"}, "", KG_F(RA(X, Y, Z, T))),
    zero("2", {"X,Y,Z,W", "Z,W,X,Y"}),
    zero("3", {"X,Y,V,W", "V,W,X,Y"}),
    item("4", {"X,V,Y,W"}, "", KG_F(
        0.5 * b() * XYb(X, Y) * g(V, W) - 0.5 * b() * gsB(flatA(X, Y), db()) * g(V, W) +
        0.5 * b() * XYb(X, J(Y)) * g(V, J(W)) -
        0.5 * b() * gsB(flatA(X, Y), dbJ()) * g(V, J(W)))),
    item("5", {"X,V,W,U"}, "", KG_F(
        -0.5 * (Xb(X) * Xb(W) - b() * XYb(X, W)) * g(V, U) -
        0.5 * (Xb(X) * Xb(J(W)) - b() * XYb(X, J(W))) * g(V, J(U)) +
        0.5 * (Xb(X) * Xb(U) - b() * XYb(X, U)) * g(V, W) +
        0.5 * (Xb(X) * Xb(J(U)) - b() * XYb(X, J(U))) * g(V, J(W)))),
    item("6", {"W,U,X,V"}, "", KG_F(
        0.25 * (2 * b() * XYb(W, X) - Xb(X) * Xb(W) - Xb(J(X)) * Xb(J(W))) * g(U, V) +
        0.25 * (2 * b() * XYb(W, J(X)) - Xb(X) * Xb(J(W)) - Xb(J(X)) * Xb(W)) * g(U, J(V)) -
        0.25 * (2 * b() * XYb(U, X) - Xb(X) * Xb(U) - Xb(J(X)) * Xb(J(U))) * g(W, V) -
        0.25 * (2 * b() * XYb(U, J(X)) - Xb(X) * Xb(J(U)) - Xb(J(X)) * Xb(U)) * g(W, J(V)) -
        0.25 * b() * Xb(X) *
            (K(U, V, W) - K(W, V, U) - K(U, J(V), J(W)) + K(W, J(V), J(U))) +
        0.25 * b() * Xb(J(X)) *
            (K(U, V, J(W)) - K(W, V, J(U)) - K(U, J(V), W) + K(W, J(V), U)))),
    item("9", {"U,V,W,Q"}, "", KG_FB(
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
               0.25 * bb * Xb(Q) * kk(V, W, U) - 0.25 * bb * Xb(J(Q)) * kj(V, W, U) -
               0.25 * bb * Xb(W) * kk(V, Q, U) + 0.25 * bb * Xb(J(W)) * kj(V, Q, U);)),
  });
}

}  // namespace

std::vector<Row> twisted_rows() {
  return {koszul(),          curvature(),         ssm_koszul_base(),    ssm_koszul_fiber(),
          ssm_curvature_base(), ssm_curvature_fiber(), ssnm_koszul_base(), ssnm_koszul_fiber(),
          ssnm_curvature_base(), ssnm_curvature_fiber(), ap_koszul(),      ap_curvature()};
}

}  // namespace kg::catalog
