#include "quot/quotient.hpp"

#include <algorithm>

namespace qdga {

std::string member_name(Member m) {
  switch (m) {
    case Member::Yes: return "yes";
    case Member::No: return "no";
    case Member::UnknownAtCap: return "unknown_at_cap";
  }
  return "?";
}

void QuotientAlgebra::add_relation(NCPoly r) {
  if (r.is_zero()) return;
  if (!r.endpoints(gq.q)) throw std::invalid_argument("relations must be endpoint-homogeneous");
  relations.push_back(std::move(r));
  rs_.reset();
  built_bound_ = -1;
}

int QuotientAlgebra::effective_slack() const {
  if (slack_S >= 0) return slack_S;
  int maxlen = 0;
  for (const auto& r : relations)
    for (const auto& [p, c] : r.terms()) {
      (void)c;
      maxlen = std::max(maxlen, p.length());
    }
  return maxlen + 4;
}

bool QuotientAlgebra::ensure_engine(int bound) const {
  if (bound < 0) bound = cap_L + effective_slack();
  if (rs_ && built_bound_ >= bound) return stabilized_;
  rs_ = std::make_unique<RewriteSystem>(gq.q, ring);
  stabilized_ = rs_->complete(relations, bound);
  if (!stabilized_) {
    // doubled once on instability
    stabilized_ = rs_->complete(relations, 2 * bound);
    built_bound_ = 2 * bound;
  } else {
    built_bound_ = bound;
  }
  return stabilized_;
}

bool QuotientAlgebra::stabilized() const {
  ensure_engine();
  return stabilized_;
}

NCPoly QuotientAlgebra::nf(const NCPoly& x) const {
  ensure_engine();
  return rs_->reduce(x);
}

Member QuotientAlgebra::ideal_member(const NCPoly& x) const {
  bool stable = ensure_engine();
  if (rs_->reduce(x).is_zero()) return Member::Yes;  // explicit reduction certificate
  return stable ? Member::No : Member::UnknownAtCap;
}

QuotientAlgebra::Basis QuotientAlgebra::truncated_basis(int ell, int src, int dst) const {
  if (ell > cap_L) throw std::invalid_argument("length exceeds the truncation cap");
  Basis b;
  b.stabilized = ensure_engine();
  b.words = rs_->normal_words(ell, src, dst);
  b.dimension = static_cast<int>(b.words.size());
  return b;
}

std::vector<long long> QuotientAlgebra::dims_by_length(int ell) const {
  if (ell > cap_L) throw std::invalid_argument("length exceeds the truncation cap");
  ensure_engine();
  return rs_->count_normal_words(ell);
}

namespace {

int mod1(int i, int m) { return ((i - 1) % m + m) % m + 1; }

void doubled_cyclic(GradedQuiver& gq, int n, int arrow_deg) {
  int m = n + 1;
  for (int i = 1; i <= m; ++i) gq.q.add_vertex(std::to_string(i));
  for (int i = 1; i <= m; ++i) gq.add_arrow("a" + std::to_string(i), i - 1, i % m, arrow_deg);
  for (int i = 1; i <= m; ++i)
    gq.add_arrow("a" + std::to_string(i) + "*", i % m, i - 1, arrow_deg);
}

Path star_after(const Quiver& q, int i) {  // word a_i* a_i (loop at i)
  return Path::word({q.arrow_id("a" + std::to_string(i) + "*"),
                     q.arrow_id("a" + std::to_string(i))});
}

Path after_star(const Quiver& q, int i) {  // word a_i a_i* (loop at i+1)
  return Path::word({q.arrow_id("a" + std::to_string(i)),
                     q.arrow_id("a" + std::to_string(i) + "*")});
}

}  // namespace

Preprojective make_preprojective(int n, const std::vector<Scalar>& lambda) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int m = n + 1;
  if (static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("lambda must have length n+1");
  Preprojective P;
  P.lambda = lambda;
  P.alg.ring = lambda.front().kind();
  doubled_cyclic(P.alg.gq, n, 0);
  const Quiver& q = P.alg.quiver();
  Scalar sum = Scalar::zero(P.alg.ring);
  for (int i = 1; i <= m; ++i) {
    NCPoly r(P.alg.ring);
    r.add_term(star_after(q, i), Scalar::one(P.alg.ring));
    r.add_term(after_star(q, mod1(i - 1, m)), -Scalar::one(P.alg.ring));
    r.add_term(Path::idem(i - 1), lambda[i - 1]);
    P.alg.add_relation(std::move(r));
    sum = sum + lambda[i - 1];
  }
  P.sum_lambda_zero = sum.is_zero();
  P.alg.cap_L = 3 * m + 6;
  return P;
}

MultPreprojective make_mult_preprojective(int n, const std::vector<Scalar>& qp, bool localized) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int m = n + 1;
  if (static_cast<int>(qp.size()) != m) throw std::invalid_argument("q must have length n+1");
  Scalar prod = Scalar::one(qp.front().kind());
  for (const auto& e : qp) {
    if (!e.is_invertible()) throw std::invalid_argument("q entries must be invertible");
    prod = prod * e;
  }
  MultPreprojective M;
  M.q = qp;
  M.localized = localized;
  M.product_q_one = prod.is_one();
  M.alg.ring = qp.front().kind();
  doubled_cyclic(M.alg.gq, n, 0);
  int z = M.alg.gq.add_arrow("z", m - 1, m - 1, 0);
  int zinv = localized ? M.alg.gq.add_arrow("zinv", m - 1, m - 1, 0) : -1;
  const Quiver& q = M.alg.quiver();
  RingKind K = M.alg.ring;
  Scalar one = Scalar::one(K);
  {
    // z = e_{n+1} + a_{n+1}* a_{n+1}
    NCPoly r(K);
    r.add_term(Path::word({z}), one);
    r.add_term(Path::idem(m - 1), -one);
    r.add_term(star_after(q, m), -one);
    M.alg.add_relation(std::move(r));
  }
  if (localized) {
    NCPoly r1(K), r2(K);
    r1.add_term(Path::word({z, zinv}), one);
    r1.add_term(Path::idem(m - 1), -one);
    r2.add_term(Path::word({zinv, z}), one);
    r2.add_term(Path::idem(m - 1), -one);
    M.alg.add_relation(std::move(r1));
    M.alg.add_relation(std::move(r2));
  }
  for (int i = 1; i <= m; ++i) {
    // e_i + a_{i-1} a_{i-1}* = q_i e_i + q_i a_i* a_i
    NCPoly r(K);
    r.add_term(Path::idem(i - 1), one - qp[i - 1]);
    r.add_term(after_star(q, mod1(i - 1, m)), one);
    r.add_term(star_after(q, i), -qp[i - 1]);
    M.alg.add_relation(std::move(r));
  }
  M.alg.cap_L = 3 * m + 6;
  return M;
}

QuotientAlgebra make_koszul_dual(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int m = n + 1;
  QuotientAlgebra A;
  A.ring = RingKind::Rational;
  doubled_cyclic(A.gq, n, -1);
  const Quiver& q = A.quiver();
  Scalar one = Scalar::one(A.ring);
  for (int i = 1; i <= m; ++i) {
    int ai = q.arrow_id("a" + std::to_string(i));
    int an = q.arrow_id("a" + std::to_string(mod1(i + 1, m)));
    int si = q.arrow_id("a" + std::to_string(i) + "*");
    int sn = q.arrow_id("a" + std::to_string(mod1(i + 1, m)) + "*");
    A.add_relation(NCPoly::term(A.ring, Path::word({an, ai}), one));
    A.add_relation(NCPoly::term(A.ring, Path::word({si, sn}), one));
    NCPoly r(A.ring);
    r.add_term(star_after(q, i), one);
    r.add_term(after_star(q, mod1(i - 1, m)), -one);
    A.add_relation(std::move(r));
  }
  A.cap_L = 6;
  return A;
}

QuotientAlgebra make_pi_mod_full_turn(int n) {
  int m = n + 1;
  std::vector<Scalar> zero(m, Scalar::zero(RingKind::Rational));
  QuotientAlgebra A = make_preprojective(n, zero).alg;
  const Quiver& q = A.quiver();
  Scalar one = Scalar::one(A.ring);
  for (int i = 1; i <= m; ++i) {
    // full turn starting at vertex i: a_{i-1} ... a_{i+1} a_i (left to right)
    std::vector<int> w;
    for (int k = m - 1; k >= 0; --k)
      w.push_back(q.arrow_id("a" + std::to_string(mod1(i + k, m))));
    A.add_relation(NCPoly::term(A.ring, Path::word(std::move(w)), one));
  }
  A.cap_L = 3 * m + 8;
  return A;
}

}  // namespace qdga
