#include "params/params.hpp"

namespace qdga {

namespace {

void scan(ParameterVector& v) {
  int m = static_cast<int>(v.entries.size());
  int n = m - 1;
  RingKind ring = v.entries.empty() ? RingKind::Rational : v.entries.front().kind();
  Scalar one = Scalar::one(ring), zero = Scalar::zero(ring);
  bool mult = v.kind == ParamKind::MultiplicativeQ;
  Scalar total = mult ? one : zero;
  for (const auto& e : v.entries) total = mult ? total * e : total + e;
  v.constraint_ok = (total == (mult ? one : zero));
  v.violations.clear();
  for (int i = 1; i <= n; ++i) {
    Scalar acc = mult ? one : zero;
    for (int j = i; j <= n; ++j) {
      acc = mult ? acc * v.entries[j - 1] : acc + v.entries[j - 1];
      if (acc == (mult ? one : zero)) v.violations.emplace_back(i, j);
    }
  }
  v.generic = v.violations.empty();
}

}  // namespace

ParameterVector ParameterVector::multiplicative(std::vector<Scalar> q) {
  for (const auto& e : q)
    if (!e.is_invertible()) throw std::invalid_argument("q entries must be invertible");
  ParameterVector v{ParamKind::MultiplicativeQ, std::move(q)};
  scan(v);
  return v;
}

ParameterVector ParameterVector::additive(std::vector<Scalar> lambda) {
  ParameterVector v{ParamKind::AdditiveLambda, std::move(lambda)};
  scan(v);
  return v;
}

ParameterVector lambda_from_q(const ParameterVector& q) {
  if (q.kind != ParamKind::MultiplicativeQ)
    throw std::invalid_argument("lambda_from_q needs a multiplicative vector");
  RingKind ring = q.entries.empty() ? RingKind::Rational : q.entries.front().kind();
  Scalar one = Scalar::one(ring);
  std::vector<Scalar> lambda;
  Scalar prefix = one;
  for (const auto& qi : q.entries) {
    lambda.push_back(prefix * (qi - one));
    prefix = prefix * qi;
  }
  return ParameterVector::additive(std::move(lambda));
}

std::vector<Scalar> roots_from_q(const ParameterVector& q) {
  if (q.kind != ParamKind::MultiplicativeQ)
    throw std::invalid_argument("roots_from_q needs a multiplicative vector");
  RingKind ring = q.entries.empty() ? RingKind::Rational : q.entries.front().kind();
  std::vector<Scalar> roots;
  Scalar acc = Scalar::one(ring);
  for (const auto& e : q.entries) {
    acc = acc * e;
    roots.push_back(acc);
  }
  return roots;
}

std::vector<Scalar> roots_from_lambda(const ParameterVector& lambda) {
  if (lambda.kind != ParamKind::AdditiveLambda)
    throw std::invalid_argument("roots_from_lambda needs an additive vector");
  RingKind ring = lambda.entries.empty() ? RingKind::Rational : lambda.entries.front().kind();
  std::vector<Scalar> roots;
  Scalar acc = Scalar::zero(ring);
  for (const auto& e : lambda.entries) {
    acc = acc + e;
    roots.push_back(acc);
  }
  return roots;
}

GenericityReport validate_genericity(const ParameterVector& v) {
  return {v.generic, v.constraint_ok, v.violations};
}

}  // namespace qdga
