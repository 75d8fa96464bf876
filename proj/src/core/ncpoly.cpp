#include "core/ncpoly.hpp"

#include <sstream>

namespace qdga {

int path_src(const Quiver& q, const Path& p) {
  if (p.is_idempotent()) return p.vertex;
  return q.arrow(p.arrows.back()).src;
}

int path_dst(const Quiver& q, const Path& p) {
  if (p.is_idempotent()) return p.vertex;
  return q.arrow(p.arrows.front()).dst;
}

bool path_composable(const Quiver& q, const Path& p) {
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (q.arrow(p.arrows[i]).src != q.arrow(p.arrows[i + 1]).dst) return false;
  return true;
}

int path_degree(const GradedQuiver& gq, const Path& p) {
  int d = 0;
  for (int a : p.arrows) d += gq.degree(a);
  return d;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.is_idempotent()) return "e" + q.vertex_label(p.vertex);
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

NCPoly NCPoly::term(RingKind k, Path p, Scalar c) {
  NCPoly r(k);
  r.add_term(p, c);
  return r;
}

Scalar NCPoly::coeff(const Path& p) const {
  auto it = t_.find(p);
  return it == t_.end() ? Scalar::zero(ring_) : it->second;
}

void NCPoly::add_term(const Path& p, const Scalar& c) {
  if (c.kind() != ring_) throw std::invalid_argument("coefficient ring mismatch");
  if (c.is_zero()) return;
  auto it = t_.find(p);
  if (it == t_.end()) {
    t_.emplace(p, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("coefficient ring mismatch");
  NCPoly r = *this;
  for (const auto& [p, c] : o.t_) r.add_term(p, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
  NCPoly r(ring_);
  for (const auto& [p, c] : t_) r.t_.emplace(p, -c);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [p, v] : t_) {
    Scalar nc = v * c;
    if (!nc.is_zero()) r.t_.emplace(p, nc);
  }
  return r;
}

std::optional<std::pair<int, int>> NCPoly::endpoints(const Quiver& q) const {
  std::optional<std::pair<int, int>> ep;
  for (const auto& [p, c] : t_) {
    std::pair<int, int> e{path_src(q, p), path_dst(q, p)};
    if (!ep)
      ep = e;
    else if (*ep != e)
      return std::nullopt;
  }
  return ep;
}

std::optional<int> NCPoly::degree(const GradedQuiver& gq, int deg_T) const {
  std::optional<int> deg;
  for (const auto& [p, c] : t_) {
    auto cd = c.degree(deg_T);
    if (!cd) return std::nullopt;
    int d = path_degree(gq, p) + *cd;
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::string NCPoly::str(const Quiver& q) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : t_) {
    // pull a leading minus out of purely-negative rational coefficients
    bool neg = false;
    Scalar cc = c;
    if (c.coeffs().size() >= 1) {
      bool all_neg = true;
      for (const auto& [k, v] : c.coeffs()) all_neg = all_neg && v < 0;
      if (all_neg) {
        neg = true;
        cc = -c;
      }
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool needs_paren = cc.coeffs().size() > 1;
    if (cc.is_one()) {
      os << path_str(q, p);
    } else if (needs_paren) {
      os << "(" << cc.str() << ") * " << path_str(q, p);
    } else {
      os << cc.str() << " * " << path_str(q, p);
    }
  }
  return os.str();
}

NCPoly mul(const Quiver& q, const NCPoly& x, const NCPoly& y) {
  if (x.ring() != y.ring()) throw std::invalid_argument("coefficient ring mismatch");
  NCPoly r(x.ring());
  for (const auto& [px, cx] : x.terms()) {
    for (const auto& [py, cy] : y.terms()) {
      if (path_src(q, px) != path_dst(q, py)) continue;  // incompatible endpoints
      Path pr;
      if (px.is_idempotent() && py.is_idempotent()) {
        pr = Path::idem(px.vertex);
      } else {
        pr.arrows = px.arrows;
        pr.arrows.insert(pr.arrows.end(), py.arrows.begin(), py.arrows.end());
      }
      r.add_term(pr, cx * cy);
    }
  }
  return r;
}

NCPoly mul(const Quiver& q, const NCPoly& x, const NCPoly& y, const NCPoly& z) {
  return mul(q, mul(q, x, y), z);
}

NCPoly leibniz_extend(const GradedQuiver& gq,
                      const std::function<const NCPoly*(int)>& images, const NCPoly& x) {
  const Quiver& q = gq.q;
  NCPoly r(x.ring());
  for (const auto& [p, c] : x.terms()) {
    if (p.is_idempotent()) continue;  // units are cycles
    // d(a_1 ... a_k) = sum_j (-1)^{deg(a_1..a_{j-1})} a_1..a_{j-1} d(a_j) a_{j+1}..a_k
    int sign_deg = 0;
    for (size_t j = 0; j < p.arrows.size(); ++j) {
      int a = p.arrows[j];
      const NCPoly* da = images(a);
      if (da == nullptr)
        throw std::invalid_argument("no differential image for generator " + q.arrow(a).name);
      if (!da->is_zero()) {
        NCPoly mid = (sign_deg % 2 == 0) ? da->scaled(c) : da->scaled(-c);
        // left factor a_1..a_{j-1}, right factor a_{j+1}..a_k
        NCPoly left = (j == 0) ? NCPoly::idem(x.ring(), q.arrow(a).dst)
                               : NCPoly::term(x.ring(),
                                              Path::word({p.arrows.begin(), p.arrows.begin() + j}),
                                              Scalar::one(x.ring()));
        NCPoly right = (j + 1 == p.arrows.size())
                           ? NCPoly::idem(x.ring(), q.arrow(a).src)
                           : NCPoly::term(x.ring(),
                                          Path::word({p.arrows.begin() + j + 1, p.arrows.end()}),
                                          Scalar::one(x.ring()));
        r = r + mul(q, mul(q, left, mid), right);
      }
      sign_deg += gq.degree(a);
    }
  }
  return r;
}

}  // namespace qdga
