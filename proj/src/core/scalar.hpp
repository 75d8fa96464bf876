#ifndef QDGA_CORE_SCALAR_HPP
#define QDGA_CORE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdga {

using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Rational, Dual, Laurent };

std::string ring_name(RingKind k);
RingKind ring_from_name(const std::string& s);

// Exact scalar in one of the three coefficient rings.
//   Rational:  c[0]
//   Dual:      c[0] + c[1]*s, s^2 = 0
//   Laurent:   sum_k c[k]*T^k, T invertible, |T^k| = deg_T * k (deg_T = -2)
class Scalar {
 public:
  Scalar() : kind_(RingKind::Rational) {}
  explicit Scalar(RingKind k) : kind_(k) {}
  Scalar(RingKind k, Rat a) : kind_(k) { set(0, std::move(a)); }

  static Scalar zero(RingKind k) { return Scalar(k); }
  static Scalar one(RingKind k) { return Scalar(k, Rat(1)); }
  static Scalar of_int(RingKind k, long v) { return Scalar(k, Rat(v)); }
  static Scalar dual(Rat a, Rat b);     // a + b s
  static Scalar t_power(int k);         // T^k over Laurent

  RingKind kind() const { return kind_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::map<int, Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;

  void set(int k, Rat v);

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const { return kind_ == o.kind_ && c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;

  bool is_invertible() const;
  Scalar inverse() const;  // throws std::domain_error if not invertible

  // Internal degree of a homogeneous scalar (nonzero only for Laurent
  // monomials: deg_T per T power). nullopt if inhomogeneous.
  std::optional<int> degree(int deg_T = -2) const;

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  RingKind kind_;
  std::map<int, Rat> c_;
};

Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace qdga

#endif
