#include "dga/dga.hpp"

#include <algorithm>

#include "core/text.hpp"

namespace qdga {

int SemiFreeDGA::add_generator(const std::string& name, int src, int dst, int degree) {
  int id = gq.add_arrow(name, src, dst, degree);
  diff.resize(gq.q.n_arrows(), NCPoly(ring));
  diff[id] = NCPoly(ring);
  return id;
}

void SemiFreeDGA::set_diff(int arrow, NCPoly d) {
  diff.resize(gq.q.n_arrows(), NCPoly(ring));
  diff[arrow] = reduce(d);
}

void SemiFreeDGA::set_diff(const std::string& name, const std::string& poly_text) {
  set_diff(gq.q.arrow_id(name), parse_ncpoly(gq.q, ring, poly_text));
}

void SemiFreeDGA::add_invertible_pair(int g, int g_inv) {
  inv_pairs.emplace_back(g, g_inv);
}

NCPoly SemiFreeDGA::reduce(const NCPoly& x) const {
  if (inv_pairs.empty()) return x;
  std::map<int, int> partner;
  for (auto [g, gi] : inv_pairs) {
    partner[g] = gi;
    partner[gi] = g;
  }
  NCPoly r(ring);
  for (const auto& [p, c] : x.terms()) {
    std::vector<int> w = p.arrows;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        auto it = partner.find(w[i]);
        if (it != partner.end() && it->second == w[i + 1]) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
    if (w.empty() && !p.is_idempotent()) {
      r.add_term(Path::idem(gq.q.arrow(p.arrows.front()).dst), c);
    } else if (w.size() == p.arrows.size()) {
      r.add_term(p, c);
    } else {
      r.add_term(Path::word(w), c);
    }
  }
  return r;
}

NCPoly SemiFreeDGA::d(const NCPoly& x) const {
  NCPoly dx = leibniz_extend(
      gq, [&](int a) { return a < static_cast<int>(diff.size()) ? &diff[a] : nullptr; }, x);
  return reduce(dx);
}

void SemiFreeDGA::validate() const {
  const Quiver& q = gq.q;
  for (int a = 0; a < q.n_arrows(); ++a) {
    const NCPoly& da = diff.at(a);
    if (da.is_zero()) continue;
    auto ep = da.endpoints(q);
    if (!ep || ep->first != q.arrow(a).src || ep->second != q.arrow(a).dst)
      throw std::invalid_argument("differential of " + q.arrow(a).name +
                                  " does not preserve endpoints");
    auto deg = da.degree(gq);
    if (!deg || *deg != gq.degree(a) - 1)
      throw std::invalid_argument("differential of " + q.arrow(a).name +
                                  " does not lower degree by one");
  }
  for (auto [g, gi] : inv_pairs) {
    if (gq.degree(g) != 0 || gq.degree(gi) != 0)
      throw std::invalid_argument("invertible pair must have degree 0");
    if (q.arrow(g).src != q.arrow(g).dst || q.arrow(gi).src != q.arrow(g).src ||
        q.arrow(gi).dst != q.arrow(g).src)
      throw std::invalid_argument("invertible pair must be loops at one vertex");
  }
}

bool SemiFreeDGA::operator==(const SemiFreeDGA& o) const {
  if (!(gq == o.gq) || ring != o.ring || inv_pairs != o.inv_pairs) return false;
  for (int a = 0; a < gq.q.n_arrows(); ++a)
    if (diff.at(a) != o.diff.at(a)) return false;
  return true;
}

DSquaredReport check_d_squared(const SemiFreeDGA& dga) {
  DSquaredReport rep;
  const Quiver& q = dga.quiver();
  for (int a = 0; a < q.n_arrows(); ++a) {
    const NCPoly& da = dga.diff.at(a);
    if (!da.is_zero()) {
      auto ep = da.endpoints(q);
      if (!ep || ep->first != q.arrow(a).src || ep->second != q.arrow(a).dst) {
        rep.ok = false;
        rep.failing_generator = q.arrow(a).name;
        rep.residue = "differential does not preserve endpoints: " + da.str(q);
        return rep;
      }
      auto deg = da.degree(dga.gq);
      if (!deg || *deg != dga.gq.degree(a) - 1) {
        rep.ok = false;
        rep.failing_generator = q.arrow(a).name;
        rep.residue = "differential does not lower degree by one: " + da.str(q);
        return rep;
      }
    }
    NCPoly dd = dga.d(da);
    if (!dd.is_zero()) {
      rep.ok = false;
      rep.failing_generator = q.arrow(a).name;
      rep.residue = dd.str(q);
      return rep;
    }
  }
  return rep;
}

namespace {

int mod1(int i, int m) {  // 1-based wrap into 1..m
  int r = ((i - 1) % m + m) % m;
  return r + 1;
}

// Doubled cyclic quiver skeleton: vertices "1".."n+1", a<i>: i -> i+1, a<i>*: i+1 -> i.
void doubled_cyclic(SemiFreeDGA& dga, int n) {
  int m = n + 1;
  for (int i = 1; i <= m; ++i) dga.gq.q.add_vertex(std::to_string(i));
  for (int i = 1; i <= m; ++i)
    dga.gq.add_arrow("a" + std::to_string(i), i - 1, mod1(i + 1, m) - 1, 0);
  for (int i = 1; i <= m; ++i)
    dga.gq.add_arrow("a" + std::to_string(i) + "*", mod1(i + 1, m) - 1, i - 1, 0);
  dga.diff.assign(dga.gq.q.n_arrows(), NCPoly(dga.ring));
}

Path word_of(const Quiver& q, std::initializer_list<std::string> names) {
  std::vector<int> w;
  for (const auto& s : names) w.push_back(q.arrow_id(s));
  return Path::word(std::move(w));
}

}  // namespace

SemiFreeDGA make_ginzburg(int n, const std::vector<Scalar>& lambda, RingKind ring) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int m = n + 1;
  if (!lambda.empty() && static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("lambda must have length n+1");
  SemiFreeDGA dga;
  dga.ring = lambda.empty() ? ring : lambda.front().kind();
  doubled_cyclic(dga, n);
  const Quiver& q = dga.gq.q;
  for (int i = 1; i <= m; ++i)
    dga.add_generator("zeta" + std::to_string(i), i - 1, i - 1, 1);
  for (int i = 1; i <= m; ++i) {
    std::string ai = "a" + std::to_string(i);
    std::string ap = "a" + std::to_string(mod1(i - 1, m));
    NCPoly d(dga.ring);
    d.add_term(word_of(q, {ai + "*", ai}), Scalar::one(dga.ring));
    d.add_term(word_of(q, {ap, ap + "*"}), -Scalar::one(dga.ring));
    if (!lambda.empty()) d.add_term(Path::idem(i - 1), lambda[i - 1]);
    dga.set_diff(q.arrow_id("zeta" + std::to_string(i)), std::move(d));
  }
  dga.validate();
  return dga;
}

SemiFreeDGA make_mult_nonloc(int n, const std::vector<Scalar>& q_params) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int m = n + 1;
  if (static_cast<int>(q_params.size()) != m)
    throw std::invalid_argument("q must have length n+1");
  for (const auto& qi : q_params)
    if (!qi.is_invertible()) throw std::invalid_argument("q entries must be invertible");
  SemiFreeDGA dga;
  dga.ring = q_params.front().kind();
  doubled_cyclic(dga, n);
  const Quiver& q = dga.gq.q;
  for (int i = 1; i <= m; ++i)
    dga.add_generator("zeta" + std::to_string(i), i - 1, i - 1, 1);
  Scalar one = Scalar::one(dga.ring);
  for (int i = 1; i <= m; ++i) {
    std::string ai = "a" + std::to_string(i);
    std::string ap = "a" + std::to_string(mod1(i - 1, m));
    NCPoly d(dga.ring);
    d.add_term(Path::idem(i - 1), q_params[i - 1] - one);
    d.add_term(word_of(q, {ai + "*", ai}), q_params[i - 1]);
    d.add_term(word_of(q, {ap, ap + "*"}), -one);
    dga.set_diff(q.arrow_id("zeta" + std::to_string(i)), std::move(d));
  }
  dga.validate();
  return dga;
}

SemiFreeDGA make_mult_derived(int n, const std::vector<Scalar>& q_params, int excluded_arrow) {
  SemiFreeDGA dga = make_mult_nonloc(n, q_params);
  int m = n + 1;
  int exc = excluded_arrow < 0 ? m : excluded_arrow;
  if (exc < 1 || exc > m) throw std::invalid_argument("excluded arrow out of range");
  const Quiver& q = dga.gq.q;
  int v = q.arrow(q.arrow_id("a" + std::to_string(exc))).src;
  int z = dga.add_generator("z", v, v, 0);
  int zinv = dga.add_generator("zinv", v, v, 0);
  dga.add_invertible_pair(z, zinv);
  int tau = dga.add_generator("tau", v, v, 1);
  std::string ae = "a" + std::to_string(exc);
  NCPoly d(dga.ring);
  d.add_term(Path::idem(v), Scalar::one(dga.ring));
  d.add_term(word_of(q, {ae + "*", ae}), Scalar::one(dga.ring));
  d.add_term(Path::word({z}), -Scalar::one(dga.ring));
  dga.set_diff(tau, std::move(d));
  dga.validate();
  return dga;
}

GradedQuiver build_quiver_family(QuiverFamily family, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  GradedQuiver gq;
  int m = n + 1;
  auto cyclic_vertices = [&]() {
    for (int i = 1; i <= m; ++i) gq.q.add_vertex(std::to_string(i));
  };
  switch (family) {
    case QuiverFamily::CyclicAnTilde: {
      cyclic_vertices();
      for (int i = 1; i <= m; ++i)
        gq.add_arrow("a" + std::to_string(i), i - 1, i % m, 0);
      break;
    }
    case QuiverFamily::LinearAn: {
      for (int i = 1; i <= n; ++i) gq.q.add_vertex(std::to_string(i));
      for (int i = 1; i < n; ++i)
        gq.add_arrow("a" + std::to_string(i), i - 1, i, 0);
      break;
    }
    case QuiverFamily::Doubled: {
      cyclic_vertices();
      for (int i = 1; i <= m; ++i) gq.add_arrow("a" + std::to_string(i), i - 1, i % m, 0);
      for (int i = 1; i <= m; ++i)
        gq.add_arrow("a" + std::to_string(i) + "*", i % m, i - 1, 0);
      break;
    }
    case QuiverFamily::GinzburgExtension: {
      cyclic_vertices();
      for (int i = 1; i <= m; ++i) gq.add_arrow("a" + std::to_string(i), i - 1, i % m, 0);
      for (int i = 1; i <= m; ++i)
        gq.add_arrow("a" + std::to_string(i) + "*", i % m, i - 1, 0);
      for (int i = 1; i <= m; ++i)
        gq.add_arrow("zeta" + std::to_string(i), i - 1, i - 1, 1);
      break;
    }
    case QuiverFamily::BQuiver:
    case QuiverFamily::BTQuiver: {
      // arrows a_i, b_i : i -> i-1; B grading |a_i|=0, |b_i|=-1 except
      // |a_{n+1}|=2, |b_{n+1}|=1; BT regrades a_{n+1} -> 0, b_{n+1} -> -1 and
      // adds loops T_i of degree -2.
      bool bt = family == QuiverFamily::BTQuiver;
      cyclic_vertices();
      for (int i = 1; i <= m; ++i) {
        int da = (i == m && !bt) ? 2 : 0;
        gq.add_arrow("a" + std::to_string(i), i - 1, mod1(i - 1, m) - 1, da);
      }
      for (int i = 1; i <= m; ++i) {
        int db = (i == m && !bt) ? 1 : -1;
        gq.add_arrow("b" + std::to_string(i), i - 1, mod1(i - 1, m) - 1, db);
      }
      if (bt)
        for (int i = 1; i <= m; ++i)
          gq.add_arrow("T" + std::to_string(i), i - 1, i - 1, -2);
      break;
    }
  }
  return gq;
}

SemiFreeDGA drinfeld_quotient(const SemiFreeDGA& dga, const std::set<int>& vertices) {
  SemiFreeDGA out = dga;
  for (int v : vertices) {
    if (v < 0 || v >= out.quiver().n_vertices()) throw std::invalid_argument("unknown vertex");
    int k = out.add_generator("kappa" + out.quiver().vertex_label(v), v, v, 1);
    out.set_diff(k, NCPoly::idem(out.ring, v));
  }
  return out;
}

SemiFreeDGA remove_vertices(const SemiFreeDGA& dga, const std::set<int>& vertices) {
  SemiFreeDGA out;
  out.ring = dga.ring;
  const Quiver& q = dga.quiver();
  std::map<int, int> vmap, amap;
  for (int v = 0; v < q.n_vertices(); ++v)
    if (!vertices.count(v)) vmap[v] = out.gq.q.add_vertex(q.vertex_label(v));
  for (int a = 0; a < q.n_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (vmap.count(ar.src) && vmap.count(ar.dst))
      amap[a] = out.gq.add_arrow(ar.name, vmap[ar.src], vmap[ar.dst], dga.gq.degree(a));
  }
  out.diff.assign(out.gq.q.n_arrows(), NCPoly(out.ring));
  for (const auto& [a, na] : amap) {
    NCPoly nd(out.ring);
    for (const auto& [p, c] : dga.diff.at(a).terms()) {
      if (p.is_idempotent()) {
        if (vmap.count(p.vertex)) nd.add_term(Path::idem(vmap[p.vertex]), c);
        continue;
      }
      bool keep = true;
      std::vector<int> w;
      for (int letter : p.arrows) {
        if (!amap.count(letter)) {
          keep = false;
          break;
        }
        w.push_back(amap[letter]);
      }
      if (keep) nd.add_term(Path::word(w), c);
    }
    out.diff[na] = nd;
  }
  for (auto [g, gi] : dga.inv_pairs)
    if (amap.count(g) && amap.count(gi)) out.inv_pairs.emplace_back(amap[g], amap[gi]);
  return out;
}

SemiFreeDGA specialize(const SemiFreeDGA& dga, const std::map<int, Scalar>& values) {
  const Quiver& q = dga.quiver();
  for (const auto& [a, v] : values) {
    if (q.arrow(a).src != q.arrow(a).dst)
      throw std::invalid_argument("can only specialize loop generators");
    if (!v.is_invertible() && !dga.diff.at(a).is_zero())
      throw std::invalid_argument("specializing a non-cycle generator");
    if (!dga.d(NCPoly::gen(dga.ring, a)).is_zero())
      throw std::invalid_argument("specialized generator must be a cycle");
  }
  SemiFreeDGA out;
  out.ring = dga.ring;
  std::map<int, int> vmap, amap;
  for (int v = 0; v < q.n_vertices(); ++v) vmap[v] = out.gq.q.add_vertex(q.vertex_label(v));
  for (int a = 0; a < q.n_arrows(); ++a)
    if (!values.count(a))
      amap[a] = out.gq.add_arrow(q.arrow(a).name, q.arrow(a).src, q.arrow(a).dst, dga.gq.degree(a));
  out.diff.assign(out.gq.q.n_arrows(), NCPoly(out.ring));
  auto subst = [&](const NCPoly& x) {
    NCPoly r(out.ring);
    for (const auto& [p, c] : x.terms()) {
      if (p.is_idempotent()) {
        r.add_term(p, c);
        continue;
      }
      Scalar coeff = c;
      std::vector<int> w;
      for (int letter : p.arrows) {
        auto it = values.find(letter);
        if (it != values.end())
          coeff = coeff * it->second;
        else
          w.push_back(amap[letter]);
      }
      if (w.empty())
        r.add_term(Path::idem(path_src(q, p)), coeff);
      else
        r.add_term(Path::word(w), coeff);
    }
    return r;
  };
  for (const auto& [a, na] : amap) out.diff[na] = subst(dga.diff.at(a));
  for (auto [g, gi] : dga.inv_pairs)
    if (amap.count(g) && amap.count(gi)) out.inv_pairs.emplace_back(amap[g], amap[gi]);
  return out;
}

MapReport check_dga_map(const DGAMap& m) {
  MapReport rep;
  const SemiFreeDGA& A = *m.src;
  const SemiFreeDGA& B = *m.dst;
  const Quiver& qa = A.quiver();
  const Quiver& qb = B.quiver();
  // induced vertex map from image endpoints
  std::map<int, int> phi;
  auto meld = [&](int va, int vb) {
    auto it = phi.find(va);
    if (it == phi.end()) {
      phi[va] = vb;
      return true;
    }
    return it->second == vb;
  };
  rep.endpoint_consistent = true;
  for (const auto& [g, img] : m.images) {
    if (img.is_zero()) continue;
    auto ep = img.endpoints(qb);
    if (!ep || !meld(qa.arrow(g).src, ep->first) || !meld(qa.arrow(g).dst, ep->second)) {
      rep.endpoint_consistent = false;
      rep.failing_generator = qa.arrow(g).name;
      return rep;
    }
  }
  rep.degree_preserving = true;
  for (const auto& [g, img] : m.images) {
    if (img.is_zero()) continue;
    auto deg = img.degree(B.gq);
    if (!deg || *deg != A.gq.degree(g)) {
      rep.degree_preserving = false;
      rep.failing_generator = qa.arrow(g).name;
      return rep;
    }
  }
  auto apply = [&](const NCPoly& x) {
    NCPoly r(B.ring);
    for (const auto& [p, c] : x.terms()) {
      if (p.is_idempotent()) {
        auto it = phi.find(p.vertex);
        if (it == phi.end()) throw std::invalid_argument("vertex not in image map");
        r.add_term(Path::idem(it->second), c);
        continue;
      }
      NCPoly acc(B.ring);
      bool started = false;
      for (int letter : p.arrows) {
        auto it = m.images.find(letter);
        if (it == m.images.end())
          throw std::invalid_argument("generator without image: " + qa.arrow(letter).name);
        acc = started ? mul(qb, acc, it->second) : it->second;
        started = true;
      }
      r = r + acc.scaled(c);
    }
    return B.reduce(r);
  };
  rep.is_chain_map = true;
  for (const auto& [g, img] : m.images) {
    NCPoly lhs = B.d(img);
    NCPoly rhs = apply(A.diff.at(g));
    if (lhs != rhs) {
      rep.is_chain_map = false;
      rep.failing_generator = qa.arrow(g).name;
      rep.residue = (lhs - rhs).str(qb);
      break;
    }
  }
  // iso on generators: single invertible-scalar image of a single arrow,
  // bijective on arrows (and hence on vertices via phi)
  rep.is_iso_on_generators = true;
  std::set<int> hit;
  if (m.images.size() != static_cast<size_t>(qa.n_arrows()) || qa.n_arrows() != qb.n_arrows())
    rep.is_iso_on_generators = false;
  for (const auto& [g, img] : m.images) {
    if (!rep.is_iso_on_generators) break;
    if (img.n_terms() != 1 || img.terms().begin()->first.length() != 1 ||
        !img.terms().begin()->second.is_invertible() ||
        !hit.insert(img.terms().begin()->first.arrows[0]).second)
      rep.is_iso_on_generators = false;
  }
  return rep;
}

SubstLemmaResult substlemma_iso(int n, const std::vector<Scalar>& q) {
  int m = n + 1;
  if (static_cast<int>(q.size()) != m) throw std::invalid_argument("q must have length n+1");
  RingKind ring = q.front().kind();
  Scalar one = Scalar::one(ring);
  SubstLemmaResult res;
  // lambda_i = q_1..q_{i-1} (q_i - 1); cumulative products Q_i
  std::vector<Scalar> Q(m + 1, one);
  for (int i = 1; i <= m; ++i) Q[i] = Q[i - 1] * q[i - 1];
  res.lambda.reserve(m);
  for (int i = 1; i <= m; ++i) res.lambda.push_back(Q[i - 1] * (q[i - 1] - one));
  res.ginzburg = make_ginzburg(n, res.lambda);
  res.mult = make_mult_nonloc(n, q);
  DGAMap f;
  f.src = &res.ginzburg;
  f.dst = &res.mult;
  const Quiver& qa = res.ginzburg.quiver();
  const Quiver& qb = res.mult.quiver();
  for (int i = 1; i <= m; ++i) {
    std::string ai = "a" + std::to_string(i);
    f.images[qa.arrow_id(ai)] =
        NCPoly::term(ring, Path::word({qb.arrow_id(ai)}), Q[i]);
    f.images[qa.arrow_id(ai + "*")] =
        NCPoly::term(ring, Path::word({qb.arrow_id(ai + "*")}), one);
    res.zeta_scaling.push_back(Q[i - 1]);
    f.images[qa.arrow_id("zeta" + std::to_string(i))] =
        NCPoly::term(ring, Path::word({qb.arrow_id("zeta" + std::to_string(i))}), Q[i - 1]);
  }
  res.report = check_dga_map(f);
  return res;
}

}  // namespace qdga
