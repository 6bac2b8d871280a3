#include "catalog_dsl.hpp"

namespace kg::catalog {

namespace {

using C = ConnectionKind;
using O = ObjectKind;
using L = PLocation::Kind;

Row row(std::string id, C c, ProductKind pk, std::vector<Item> items) {
  Row r;
  r.id = std::move(id);
  r.connection = c;
  r.object = O::Contraction;
  r.product = pk;
  r.ploc = L::None;
  r.items = std::move(items);
  return r;
}

// K(a,c,.)K(d,e,.) for the plain connection on a twisted product
Row twisted_plain() {
  return row("contraction/twisted", C::Plain, ProductKind::Twisted, {
    item("1", {"X,Y,Z,T"}, "", KG_F(gsB(flat(X, Y), flat(Z, T)))),
    zero("2", {"X,Y,Z,W", "X,Y,W,Z"}),
    item("3", {"X,Y,V,W"}, "", KG_F(-b() * gsB(flat(X, Y), db()) * g(V, W))),
    item("4", {"X,V,Y,W", "X,V,W,Y", "V,X,Y,W", "V,X,W,Y"}, "",
         KG_F(Xb(X) * Xb(Y) * g(V, W))),
    item("5", {"X,V,W,U", "V,X,W,U"}, "", KG_F(
        Xb(X) * Xb(W) * g(U, V) + Xb(X) * Xb(U) * g(V, W) - Xb(X) * Xb(V) * g(W, U) +
        b() * Xb(X) * K(W, U, V))),
    item("6", {"V,W,U,Q"}, "", KG_F(
        sq(b()) * gsB(db(), db()) * g(V, W) * g(U, Q) + gsF(db(), db()) * g(V, W) * g(U, Q) -
        b() * gsF(flat(V, W), db()) * g(U, Q) - b() * gsF(flat(U, Q), db()) * g(V, W) +
        sq(b()) * gsF(flat(V, W), flat(U, Q)) + b() * Xb(V) * K(U, Q, W) +
        b() * Xb(W) * K(U, Q, V) + b() * Xb(U) * K(V, W, Q) + b() * Xb(Q) * K(V, W, U) +
        Xb(V) * Xb(U) * g(Q, W) + Xb(V) * Xb(Q) * g(U, W) + Xb(W) * Xb(U) * g(Q, V) +
        Xb(W) * Xb(Q) * g(U, V) - 2 * Xb(U) * Xb(Q) * g(V, W) - 2 * Xb(V) * Xb(W) * g(U, Q))),
  });
}

Row warped_ap() {
  return row("ap-contraction/warped", C::AlmostProduct, ProductKind::MultiplyWarped, {
    item("1", {"X,Y,Z,T"}, "", KG_F(gsB(flatA(X, Y), flatA(Z, T)))),
    zero("2", {"X,Y,Z,W_j", "X,Y,W_j,Z"}),
    item("3", {"X,Y,V_i,W_j"}, "i=j", KG_F(
        -0.5 * b(j) * gsB(flatA(X, Y), db(j)) * g(W, V) -
        0.5 * b(j) * gsB(flatA(X, Y), dbJ(j)) * g(W, J(V)))),
    item("4", {"X,V_i,Y,W_j"}, "i=j", KG_F(Xb(X, j) * Xb(Y, j) * g(W, V))),
    item("5", {"X,V_i,W_j,Y"}, "i=j", KG_F(
        0.5 * Xb(X, j) * Xb(Y, j) * g(W, V) + 0.5 * Xb(X, j) * Xb(J(Y), j) * g(W, J(V)))),
    item("6", {"V_i,X,W_j,Y"}, "i=j", KG_F(
        0.25 * Xb(X, j) * Xb(Y, j) * g(W, V) + 0.25 * Xb(X, j) * Xb(J(Y), j) * g(W, J(V)) +
        0.25 * Xb(J(X), j) * Xb(Y, j) * g(W, J(V)) +
        0.25 * Xb(J(X), j) * Xb(J(Y), j) * g(W, V))),
    zero("7", {"X,Y,V_i,W_j", "X,V_i,Y,W_j", "X,V_i,W_j,Y", "V_i,X,Y,W_j", "V_i,X,W_j,Y"},
         "i!=j"),
    item("8", {"X,V_i,W_j,U_k"}, "i=j=k", KG_F(b(j) * Xb(X, j) * KA(W, U, V))),
    zero("9", {"X,V_i,W_j,U_k", "X,V_i,U_k,W_j", "X,U_k,V_i,W_j"}, "i=j!=k"),
    item("10", {"V_i,X,W_j,U_k"}, "i=j=k", KG_F(
        0.5 * b(j) * Xb(X, j) * KA(W, U, V) + 0.5 * b(j) * Xb(J(X), j) * KA(W, U, J(V)))),
    zero("11", {"V_i,X,W_j,U_k", "V_i,X,U_k,W_j", "U_k,X,V_i,W_j"}, "i=j!=k"),
    zero("12", {"X,V_i,W_j,U_k", "V_i,X,W_j,U_k"}, "i!=j!=k"),
    item("13", {"V_i,W_j,U_k,Q_s"}, "i=j=k=s", KG_F(
        0.25 * sq(b(j)) *
            (gsB(db(j), db(j)) * g(W, V) * g(U, Q) +
             gsB(dbJ(j), db(j)) * g(W, J(V)) * g(U, Q) +
             gsB(db(j), dbJ(j)) * g(W, V) * g(U, J(Q)) +
             gsB(dbJ(j), dbJ(j)) * g(W, J(V)) * g(U, J(Q))) +
        sq(b(j)) * gs(j, flatA(V, W), flatA(U, Q)))),
    zero("14", {"V_i,W_j,U_k,Q_s", "V_i,W_j,Q_s,U_k"}, "i=j=s!=k"),
    item("15", {"V_i,W_j,U_k,Q_s"}, "i=j!=k=s", KG_F(
        0.25 * b(j) * b(k) *
        (gsB(db(j), db(k)) * g(W, V) * g(U, Q) + gsB(dbJ(j), db(k)) * g(W, J(V)) * g(U, Q) +
         gsB(db(j), dbJ(k)) * g(W, V) * g(U, J(Q)) +
         gsB(dbJ(j), dbJ(k)) * g(W, J(V)) * g(U, J(Q))))),
    zero("16", {"V_i,W_j,U_k,Q_s"}, "i=k!=j=s|i=s!=j=k"),
    other("17", {"V_i,W_j,U_k,Q_s"}),
  });
}

Row twisted_ap() {
  return row("ap-contraction/twisted", C::AlmostProduct, ProductKind::Twisted, {
    item("1", {"X,Y,Z,T"}, "", KG_F(gsB(flatA(X, Y), flatA(Z, T)))),
    zero("2", {"X,Y,Z,W", "X,Y,W,Z"}),
    item("3", {"X,Y,V,W"}, "", KG_F(
        -0.5 * b() * gsB(flatA(X, Y), db()) * g(W, V) -
        0.5 * b() * gsB(flatA(X, Y), dbJ()) * g(W, J(V)))),
    item("4", {"X,V,Y,W"}, "", KG_F(Xb(X) * Xb(Y) * g(W, V))),
    item("5", {"X,V,W,Y"}, "",
         KG_F(0.5 * Xb(X) * Xb(Y) * g(W, V) + 0.5 * Xb(X) * Xb(J(Y)) * g(W, J(V)))),
    item("6", {"V,X,W,Y"}, "", KG_F(
        0.25 * (Xb(X) * Xb(Y) * g(W, V) + Xb(X) * Xb(J(Y)) * g(W, J(V)) +
                Xb(J(X)) * Xb(Y) * g(W, J(V)) + Xb(J(X)) * Xb(J(Y)) * g(W, V)))),
    item("7", {"X,V,W,U"}, "", KG_F(
        b() * Xb(X) * KA(W, U, V) + Xb(X) * Xb(W) * g(U, V) + 0.5 * Xb(X) * Xb(U) * g(W, V) -
        0.5 * Xb(X) * Xb(V) * g(W, U) + 0.5 * Xb(X) * Xb(J(U)) * g(W, J(V)) -
        0.5 * Xb(X) * Xb(J(V)) * g(W, J(U)))),
    item("8", {"V,X,W,U"}, "", KG_F(
        0.5 * b() * Xb(X) * KA(W, U, V) + 0.5 * b() * Xb(J(X)) * KA(W, U, J(V)) +
        0.5 * Xb(X) * Xb(W) * g(U, V) + 0.5 * Xb(J(X)) * Xb(W) * g(U, J(V)) +
        0.25 * (Xb(X) * Xb(U) + Xb(J(X)) * Xb(J(U))) * g(W, V) -
        0.25 * (Xb(X) * Xb(V) + Xb(J(X)) * Xb(J(V))) * g(W, U) +
        0.25 * (Xb(X) * Xb(J(U)) + Xb(J(X)) * Xb(U)) * g(W, J(V)) -
        0.25 * (Xb(X) * Xb(J(V)) + Xb(J(X)) * Xb(V)) * g(W, J(U)))),
    item("9", {"V,W,U,Q"}, "", KG_FB(
        const double bb = b(), b2 = bb * bb;
        return 0.25 * (b2 * gsB(db(), db()) + gsF(db(), db())) * g(W, V) * g(U, Q) +
               0.25 * (b2 * gsB(dbJ(), dbJ()) + gsF(dbJ(), dbJ())) * g(W, J(V)) * g(U, J(Q)) +
               0.25 * (b2 * gsB(dbJ(), db()) + gsF(dbJ(), db())) *
                   (g(W, V) * g(U, J(Q)) + g(W, J(V)) * g(U, Q)) +
               bb * Xb(V) * KA(U, Q, W) + 0.5 * bb * Xb(W) * KA(U, Q, V) +
               bb * Xb(U) * KA(V, W, Q) + 0.5 * bb * Xb(Q) * KA(V, W, U) +
               0.5 * bb * Xb(J(W)) * KA(U, Q, J(V)) + 0.5 * bb * Xb(J(Q)) * KA(V, W, J(U)) +
               Xb(V) * Xb(U) * g(Q, W) + 0.5 * Xb(V) * Xb(Q) * g(U, W) +
               0.5 * Xb(V) * Xb(J(Q)) * g(U, J(W)) + 0.5 * Xb(W) * Xb(U) * g(Q, V) +
               0.5 * Xb(J(W)) * Xb(U) * g(Q, J(V)) + b2 * gsF(flatA(V, W), flatA(U, Q)) +
               0.25 * (Xb(W) * Xb(Q) + Xb(J(W)) * Xb(J(Q))) * g(U, V) +
               0.25 * (Xb(W) * Xb(J(Q)) + Xb(J(W)) * Xb(Q)) * g(U, J(V)) -
               0.25 * (3 * Xb(V) * Xb(W) + Xb(J(V)) * Xb(J(W)) +
                       2 * bb * gsF(flatA(V, W), db())) * g(U, Q) -
               0.25 * (3 * Xb(V) * Xb(J(W)) + Xb(J(V)) * Xb(W) +
                       2 * bb * gsF(flatA(V, W), dbJ())) * g(U, J(Q)) -
               0.25 * (3 * Xb(U) * Xb(Q) + Xb(J(U)) * Xb(J(Q)) +
                       2 * bb * gsF(flatA(U, Q), db())) * g(V, W) -
               0.25 * (3 * Xb(U) * Xb(J(Q)) + Xb(J(U)) * Xb(Q) +
                       2 * bb * gsF(flatA(U, Q), dbJ())) * g(V, J(W));)),
  });
}

}  // namespace

std::vector<Row> contraction_rows() { return {twisted_plain(), warped_ap(), twisted_ap()}; }

}  // namespace kg::catalog
