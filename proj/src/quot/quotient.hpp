#ifndef QDGA_QUOT_QUOTIENT_HPP
#define QDGA_QUOT_QUOTIENT_HPP

#include <memory>
#include <optional>

#include "quot/rewrite.hpp"

namespace qdga {

enum class Member { Yes, No, UnknownAtCap };
std::string member_name(Member m);

// Associative quotient algebra with a length-truncated normal-form engine.
// Membership is decided by reduction against the elimination system; "no" is
// only reported when the system is stabilized (all overlaps up to the slack
// bound resolve), "unknown_at_cap" otherwise.  Never a false yes/no.
class QuotientAlgebra {
 public:
  GradedQuiver gq;
  RingKind ring = RingKind::Rational;
  std::vector<NCPoly> relations;
  int cap_L = 24;
  int slack_S = -1;  // default: (max relation word length) + 4

  QuotientAlgebra() = default;
  const Quiver& quiver() const { return gq.q; }
  void add_relation(NCPoly r);

  int effective_slack() const;
  // Build (or reuse) the engine at bound >= cap; returns stabilized flag.
  bool ensure_engine(int bound = -1) const;
  bool stabilized() const;

  NCPoly nf(const NCPoly& x) const;
  Member ideal_member(const NCPoly& x) const;

  struct Basis {
    std::vector<Path> words;
    int dimension = 0;
    bool stabilized = false;
  };
  // Basis of the image of length-<=ell words in the quotient.
  Basis truncated_basis(int ell, int src = -1, int dst = -1) const;
  std::vector<long long> dims_by_length(int ell) const;

 private:
  mutable std::unique_ptr<RewriteSystem> rs_;
  mutable int built_bound_ = -1;
  mutable bool stabilized_ = false;
};

// Pi^lambda(A~_n): doubled cyclic quiver modulo a_i* a_i - a_{i-1} a_{i-1}* + lambda_i e_i.
// The all-zero vector gives Pi(A~_n).  sum_lambda_zero records the corner gate.
struct Preprojective {
  QuotientAlgebra alg;
  std::vector<Scalar> lambda;
  bool sum_lambda_zero = false;
};
Preprojective make_preprojective(int n, const std::vector<Scalar>& lambda);

// Lambda^q(A~_n): doubled cyclic quiver plus the loop z at vertex n+1 (and
// zinv when localized), relations z = e + a_{n+1}* a_{n+1} and
// e_i + a_{i-1} a_{i-1}* = q_i e_i + q_i a_i* a_i.
struct MultPreprojective {
  QuotientAlgebra alg;
  std::vector<Scalar> q;
  bool localized = false;
  bool product_q_one = false;
};
MultPreprojective make_mult_preprojective(int n, const std::vector<Scalar>& q, bool localized);

// Koszul dual of the A~_n Ginzburg differential: relations a_{i+1} a_i,
// a_i* a_{i+1}*, a_i* a_i - a_{i-1} a_{i-1}*; grading |a| = |a*| = -1.
QuotientAlgebra make_koszul_dual(int n);

// A = Pi(A~_n) / (alpha^{n+1}): preprojective relations plus all full-turn
// paths in the original arrows.
QuotientAlgebra make_pi_mod_full_turn(int n);

}  // namespace qdga

#endif
