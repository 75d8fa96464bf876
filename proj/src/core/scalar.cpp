#include "core/scalar.hpp"

#include <sstream>

namespace qdga {

std::string ring_name(RingKind k) {
  switch (k) {
    case RingKind::Rational: return "rational";
    case RingKind::Dual: return "dual";
    case RingKind::Laurent: return "laurent";
  }
  return "?";
}

RingKind ring_from_name(const std::string& s) {
  if (s == "rational") return RingKind::Rational;
  if (s == "dual") return RingKind::Dual;
  if (s == "laurent") return RingKind::Laurent;
  throw std::invalid_argument("unknown ring: " + s);
}

Scalar Scalar::dual(Rat a, Rat b) {
  Scalar r(RingKind::Dual);
  r.set(0, std::move(a));
  r.set(1, std::move(b));
  return r;
}

Scalar Scalar::t_power(int k) {
  Scalar r(RingKind::Laurent);
  r.set(k, Rat(1));
  return r;
}

bool Scalar::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Rat Scalar::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rat(0) : it->second;
}

void Scalar::set(int k, Rat v) {
  if (kind_ == RingKind::Rational && k != 0)
    throw std::invalid_argument("rational scalar has only the constant slot");
  if (kind_ == RingKind::Dual && (k < 0 || k > 1))
    throw std::invalid_argument("dual scalar slots are 0 and 1");
  if (v == 0)
    c_.erase(k);
  else
    c_[k] = std::move(v);
}

void Scalar::check_same(const Scalar& o) const {
  if (kind_ != o.kind_) throw std::invalid_argument("coefficient ring mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(kind_);
  r.c_ = c_;
  for (const auto& [k, v] : o.c_) {
    Rat nv = r.coeff(k) + v;
    r.set(k, nv);
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r(kind_);
  for (const auto& [k, v] : c_) r.c_[k] = -v;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(kind_);
  for (const auto& [k1, v1] : c_)
    for (const auto& [k2, v2] : o.c_) {
      int k = k1 + k2;
      if (kind_ == RingKind::Dual && k > 1) continue;  // s^2 = 0
      Rat nv = r.coeff(k) + v1 * v2;
      r.set(k, nv);
    }
  return r;
}

bool Scalar::operator<(const Scalar& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  return c_ < o.c_;
}

bool Scalar::is_invertible() const {
  switch (kind_) {
    case RingKind::Rational: return !is_zero();
    case RingKind::Dual: return coeff(0) != 0;
    case RingKind::Laurent: return c_.size() == 1;  // monomial units only
  }
  return false;
}

Scalar Scalar::inverse() const {
  if (!is_invertible()) throw std::domain_error("scalar not invertible: " + str());
  Scalar r(kind_);
  switch (kind_) {
    case RingKind::Rational:
      r.set(0, Rat(1) / coeff(0));
      break;
    case RingKind::Dual: {
      // (a + bs)^-1 = 1/a - b/a^2 s
      Rat a = coeff(0), b = coeff(1);
      r.set(0, Rat(1) / a);
      r.set(1, -b / (a * a));
      break;
    }
    case RingKind::Laurent: {
      auto [k, v] = *c_.begin();
      r.set(-k, Rat(1) / v);
      break;
    }
  }
  return r;
}

std::optional<int> Scalar::degree(int deg_T) const {
  if (is_zero()) return 0;
  if (kind_ != RingKind::Laurent) {
    if (kind_ == RingKind::Dual) return 0;  // s carries degree 0 here
    return 0;
  }
  if (c_.size() != 1) return std::nullopt;
  return deg_T * c_.begin()->first;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << (v > 0 ? " + " : " - ");
    Rat av = first ? v : (v > 0 ? v : Rat(-v));
    first = false;
    bool unit_coeff = (av == 1);
    std::string sym;
    if (kind_ == RingKind::Dual && k == 1) sym = "s";
    if (kind_ == RingKind::Laurent && k != 0) sym = "T^" + std::to_string(k);
    if (sym.empty())
      os << rat_str(av);
    else if (unit_coeff)
      os << sym;
    else
      os << rat_str(av) << " " << sym;
  }
  return os.str();
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(t));
    boost::multiprecision::cpp_int num(t.substr(0, slash)), den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace qdga
