#ifndef QDGA_CORE_NCPOLY_HPP
#define QDGA_CORE_NCPOLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "core/quiver.hpp"
#include "core/scalar.hpp"

namespace qdga {

// A composable word of arrows, stored left-to-right in composition order:
// {b, a} is the product b*a, i.e. "first a, then b" (paper convention).
// An empty word is the idempotent e_vertex.
struct Path {
  std::vector<int> arrows;
  int vertex = -1;  // only meaningful for idempotents

  bool is_idempotent() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  static Path idem(int v) {
    Path p;
    p.vertex = v;
    return p;
  }
  static Path word(std::vector<int> a) {
    Path p;
    p.arrows = std::move(a);
    return p;
  }
  bool operator==(const Path& o) const { return arrows == o.arrows && vertex == o.vertex; }
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows != o.arrows) return arrows < o.arrows;
    return vertex < o.vertex;
  }
};

int path_src(const Quiver& q, const Path& p);
int path_dst(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& p);  // consecutive arrows compose
int path_degree(const GradedQuiver& gq, const Path& p);
std::string path_str(const Quiver& q, const Path& p);

// Finitely supported linear combination of paths, all over the same ring.
class NCPoly {
 public:
  NCPoly() : ring_(RingKind::Rational) {}
  explicit NCPoly(RingKind k) : ring_(k) {}

  static NCPoly zero(RingKind k) { return NCPoly(k); }
  static NCPoly idem(RingKind k, int v) { return term(k, Path::idem(v), Scalar::one(k)); }
  static NCPoly gen(RingKind k, int arrow) { return term(k, Path::word({arrow}), Scalar::one(k)); }
  static NCPoly term(RingKind k, Path p, Scalar c);

  RingKind ring() const { return ring_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Path, Scalar>& terms() const { return t_; }
  int n_terms() const { return static_cast<int>(t_.size()); }
  Scalar coeff(const Path& p) const;
  void add_term(const Path& p, const Scalar& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly scaled(const Scalar& c) const;
  bool operator==(const NCPoly& o) const { return ring_ == o.ring_ && t_ == o.t_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // Endpoint pair (src, dst) when homogeneous with respect to endpoints;
  // nullopt for 0 or mixed.
  std::optional<std::pair<int, int>> endpoints(const Quiver& q) const;
  // Degree when homogeneous (includes Laurent coefficient degree); nullopt otherwise.
  std::optional<int> degree(const GradedQuiver& gq, int deg_T = -2) const;

  std::string str(const Quiver& q) const;

 private:
  RingKind ring_;
  std::map<Path, Scalar> t_;
};

NCPoly mul(const Quiver& q, const NCPoly& x, const NCPoly& y);
NCPoly mul(const Quiver& q, const NCPoly& x, const NCPoly& y, const NCPoly& z);

// Graded Leibniz extension of a generator-level differential.
// images[a] is the value on arrow a (must be present for every arrow in the
// support of x); signs use the arrow degrees of gq.
NCPoly leibniz_extend(const GradedQuiver& gq,
                      const std::function<const NCPoly*(int)>& images, const NCPoly& x);

}  // namespace qdga

#endif
