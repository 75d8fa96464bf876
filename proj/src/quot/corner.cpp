#include "quot/corner.hpp"

namespace qdga {

namespace {

int mod1(int i, int m) { return ((i - 1) % m + m) % m + 1; }

NCPoly word(const Quiver& q, RingKind K, const std::vector<std::string>& names) {
  std::vector<int> w;
  for (const auto& s : names) w.push_back(q.arrow_id(s));
  return NCPoly::term(K, Path::word(std::move(w)), Scalar::one(K));
}

// X = a_n ... a_1 a_{n+1}, Y = a_{n+1}* a_1* ... a_n* (loops at n+1)
NCPoly corner_X(const Quiver& q, RingKind K, int n) {
  std::vector<std::string> names;
  for (int i = n; i >= 1; --i) names.push_back("a" + std::to_string(i));
  names.push_back("a" + std::to_string(n + 1));
  return word(q, K, names);
}

NCPoly corner_Y(const Quiver& q, RingKind K, int n) {
  std::vector<std::string> names{"a" + std::to_string(n + 1) + "*"};
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i) + "*");
  return word(q, K, names);
}

NCPoly commutator(const Quiver& q, const NCPoly& a, const NCPoly& b) {
  return mul(q, a, b) - mul(q, b, a);
}

// Expand P(Z) = sum poly[k] Z^k inside the algebra (Z a loop).
NCPoly eval_poly(const QuotientAlgebra& A, const std::vector<Scalar>& poly, const NCPoly& Z,
                 int vertex) {
  NCPoly acc = NCPoly::idem(A.ring, vertex);
  NCPoly out(A.ring);
  for (size_t k = 0; k < poly.size(); ++k) {
    out = out + acc.scaled(poly[k]);
    if (k + 1 < poly.size()) acc = A.nf(mul(A.quiver(), acc, Z));
  }
  return out;
}

std::vector<Scalar> poly_from_roots(RingKind K, const std::vector<Scalar>& roots,
                                    const Scalar& leading) {
  // prod (Z - r_i), then scale by leading
  std::vector<Scalar> p{Scalar::one(K)};
  for (const auto& r : roots) {
    std::vector<Scalar> np(p.size() + 1, Scalar::zero(K));
    for (size_t k = 0; k < p.size(); ++k) {
      np[k + 1] = np[k + 1] + p[k];
      np[k] = np[k] - p[k] * r;
    }
    p = std::move(np);
  }
  for (auto& c : p) c = c * leading;
  return p;
}

}  // namespace

CornerReport corner_verify_additive(const Preprojective& P, CornerWitness& w) {
  CornerReport rep;
  rep.gate_ok = P.sum_lambda_zero;
  if (!rep.gate_ok) return rep;  // corner theorems inapplicable
  const QuotientAlgebra& A = P.alg;
  const Quiver& q = A.quiver();
  int m = static_cast<int>(P.lambda.size());
  int n = m - 1;
  RingKind K = A.ring;
  w.idempotent = q.vertex_id(std::to_string(m));
  w.X = corner_X(q, K, n);
  w.Y = corner_Y(q, K, n);
  w.Z = word(q, K, {"a" + std::to_string(m) + "*", "a" + std::to_string(m)});
  // roots Lambda_i = lambda_1 + ... + lambda_i; P monic
  Scalar acc = Scalar::zero(K);
  for (int i = 0; i < m; ++i) {
    acc = acc + P.lambda[i];
    w.roots.push_back(acc);
  }
  w.leading = Scalar::one(K);
  w.poly = poly_from_roots(K, w.roots, w.leading);
  rep.stabilized = A.stabilized();
  rep.comm_XZ = A.ideal_member(commutator(q, w.X, w.Z));
  rep.comm_YZ = A.ideal_member(commutator(q, w.Y, w.Z));
  rep.comm_XY = A.ideal_member(commutator(q, w.X, w.Y));
  NCPoly xy = mul(q, w.X, w.Y);
  rep.xy_equals_P = A.ideal_member(xy - eval_poly(A, w.poly, w.Z, w.idempotent));
  return rep;
}

CornerReport corner_verify_multiplicative(const MultPreprojective& M, CornerWitness& w) {
  CornerReport rep;
  rep.gate_ok = M.product_q_one;
  if (!rep.gate_ok) return rep;
  const QuotientAlgebra& A = M.alg;
  const Quiver& q = A.quiver();
  int m = static_cast<int>(M.q.size());
  int n = m - 1;
  RingKind K = A.ring;
  w.idempotent = q.vertex_id(std::to_string(m));
  w.X = corner_X(q, K, n);
  w.Y = corner_Y(q, K, n);
  w.Z = NCPoly::gen(K, q.arrow_id("z"));
  // roots Q_i = q_1 ... q_i; P(Z) = prod (Q_i^{-1} Z - 1), leading prod Q_i^{-1}
  Scalar acc = Scalar::one(K);
  Scalar leading = Scalar::one(K);
  for (int i = 0; i < m; ++i) {
    acc = acc * M.q[i];
    w.roots.push_back(acc);
    leading = leading * acc.inverse();
  }
  w.leading = leading;
  w.poly = poly_from_roots(K, w.roots, w.leading);
  rep.stabilized = A.stabilized();
  rep.comm_XZ = A.ideal_member(commutator(q, w.X, w.Z));
  rep.comm_YZ = A.ideal_member(commutator(q, w.Y, w.Z));
  rep.comm_XY = A.ideal_member(commutator(q, w.X, w.Y));
  NCPoly xy = mul(q, w.X, w.Y);
  rep.xy_equals_P = A.ideal_member(xy - eval_poly(A, w.poly, w.Z, w.idempotent));
  return rep;
}

CenterReport center_elements(int n) {
  int m = n + 1;
  std::vector<Scalar> zero(m, Scalar::zero(RingKind::Rational));
  Preprojective P = make_preprojective(n, zero);
  const QuotientAlgebra& A = P.alg;
  const Quiver& q = A.quiver();
  RingKind K = A.ring;
  CenterReport rep;
  rep.X = NCPoly(K);
  rep.Y = NCPoly(K);
  rep.Z = NCPoly(K);
  for (int i = 1; i <= m; ++i) {
    // full alpha-turn loop at i, full star-turn loop at i, a_i* a_i
    std::vector<std::string> xs, ys;
    for (int k = m - 1; k >= 0; --k) xs.push_back("a" + std::to_string(mod1(i + k, m)));
    for (int k = 0; k < m; ++k)
      ys.push_back("a" + std::to_string(mod1(i + k, m)) + "*");
    rep.X = rep.X + word(q, K, xs);
    rep.Y = rep.Y + word(q, K, ys);
    rep.Z = rep.Z + word(q, K, {"a" + std::to_string(i) + "*", "a" + std::to_string(i)});
  }
  rep.stabilized = A.stabilized();
  rep.commutes_with_all_arrows = true;
  for (int a = 0; a < q.n_arrows(); ++a) {
    NCPoly g = NCPoly::gen(K, a);
    for (const NCPoly* c : {&rep.X, &rep.Y, &rep.Z}) {
      if (A.ideal_member(mul(q, *c, g) - mul(q, g, *c)) != Member::Yes)
        rep.commutes_with_all_arrows = false;
    }
  }
  // XY - Z^{n+1}
  NCPoly zpow = NCPoly::idem(K, 0);
  {
    NCPoly e(K);
    for (int v = 0; v < q.n_vertices(); ++v) e = e + NCPoly::idem(K, v);
    zpow = e;
    for (int k = 0; k < m; ++k) zpow = A.nf(mul(q, zpow, rep.Z));
  }
  rep.xy_equals_Zpow = A.ideal_member(mul(q, rep.X, rep.Y) - zpow);
  return rep;
}

}  // namespace qdga
