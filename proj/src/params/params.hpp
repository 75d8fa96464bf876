#ifndef QDGA_PARAMS_PARAMS_HPP
#define QDGA_PARAMS_PARAMS_HPP

#include <string>
#include <vector>

#include "core/scalar.hpp"

namespace qdga {

enum class ParamKind { MultiplicativeQ, AdditiveLambda };

// q- or lambda-vector with cached constraint and genericity flags.
// Genericity ranges follow the source quantifier 1 <= i <= j <= n (the full
// cycle is carried separately as the product-one / sum-zero flag).
struct ParameterVector {
  ParamKind kind;
  std::vector<Scalar> entries;
  bool constraint_ok = false;  // product one (q) / sum zero (lambda)
  bool generic = false;
  std::vector<std::pair<int, int>> violations;  // 1-based index ranges

  static ParameterVector multiplicative(std::vector<Scalar> q);
  static ParameterVector additive(std::vector<Scalar> lambda);
};

// lambda_i = q_1...q_{i-1} (q_i - 1)
ParameterVector lambda_from_q(const ParameterVector& q);

// Q_i = prod_{j<=i} q_j  /  Lambda_i = sum_{j<=i} lambda_j
std::vector<Scalar> roots_from_q(const ParameterVector& q);
std::vector<Scalar> roots_from_lambda(const ParameterVector& lambda);

struct GenericityReport {
  bool generic;
  bool constraint_ok;
  std::vector<std::pair<int, int>> violations;
};
GenericityReport validate_genericity(const ParameterVector& v);

}  // namespace qdga

#endif
