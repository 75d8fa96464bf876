#include "quot/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <functional>

namespace qdga {

bool word_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.vertex < b.vertex;
}

namespace {

const Path* leading(const NCPoly& x) {
  const Path* best = nullptr;
  for (const auto& [p, c] : x.terms()) {
    (void)c;
    if (!best || word_less(*best, p)) best = &p;
  }
  return best;
}

bool is_factor_at(const std::vector<int>& word, const std::vector<int>& pat, size_t pos) {
  if (pos + pat.size() > word.size()) return false;
  return std::equal(pat.begin(), pat.end(), word.begin() + pos);
}

}  // namespace

bool RewriteSystem::occurs(const Path& p, int& pos, int& rule) const {
  for (size_t i = 0; i < p.arrows.size(); ++i)
    for (size_t r = 0; r < rules_.size(); ++r)
      if (is_factor_at(p.arrows, rules_[r].lhs.arrows, i)) {
        pos = static_cast<int>(i);
        rule = static_cast<int>(r);
        return true;
      }
  return false;
}

bool RewriteSystem::is_normal(const Path& p) const {
  int pos, rule;
  return !occurs(p, pos, rule);
}

NCPoly RewriteSystem::reduce(const NCPoly& x) const {
  NCPoly out(ring_);
  for (const auto& [p, c] : x.terms()) {
    int pos, rule;
    if (!occurs(p, pos, rule)) {
      out.add_term(p, c);
      continue;
    }
    auto it = cache_.find(p);
    if (it == cache_.end()) {
      const Rule& R = rules_[rule];
      NCPoly repl(ring_);
      for (const auto& [rp, rc] : R.rhs.terms()) {
        std::vector<int> w(p.arrows.begin(), p.arrows.begin() + pos);
        w.insert(w.end(), rp.arrows.begin(), rp.arrows.end());
        w.insert(w.end(), p.arrows.begin() + pos + R.lhs.length(), p.arrows.end());
        if (w.empty())
          repl.add_term(Path::idem(path_src(*q_, p)), rc);
        else
          repl.add_term(Path::word(std::move(w)), rc);
      }
      it = cache_.emplace(p, reduce(repl)).first;
    }
    for (const auto& [tp, tc] : it->second.terms()) out.add_term(tp, tc * c);
  }
  return out;
}

bool RewriteSystem::add_relation(NCPoly rel, std::vector<NCPoly>& queue) {
  rel = reduce(rel);
  if (rel.is_zero()) return true;
  const Path* lead = leading(rel);
  if (lead->is_idempotent())
    throw std::domain_error("ideal contains an idempotent; quotient degenerates at a vertex");
  if (lead->length() > bound_) return false;  // beyond the bound: incomplete
  Scalar lc = rel.coeff(*lead);
  if (!lc.is_invertible())
    throw std::domain_error("relation with non-invertible leading coefficient is unsupported");
  NCPoly rhs = (rel - NCPoly::term(ring_, *lead, lc)).scaled(-lc.inverse());
  Path lhs = *lead;
  // retire rules whose lhs becomes reducible; they re-enter as relations
  std::vector<NCPoly> retired;
  for (size_t r = 0; r < rules_.size();) {
    bool hit = false;
    for (size_t i = 0; i + lhs.arrows.size() <= rules_[r].lhs.arrows.size() && !hit; ++i)
      hit = is_factor_at(rules_[r].lhs.arrows, lhs.arrows, i);
    if (hit) {
      retired.push_back(NCPoly::term(ring_, rules_[r].lhs, Scalar::one(ring_)) - rules_[r].rhs);
      rules_.erase(rules_.begin() + r);
    } else {
      ++r;
    }
  }
  rules_.push_back({std::move(lhs), std::move(rhs)});
  cache_.clear();
  for (auto& r : retired) queue.push_back(std::move(r));
  return true;
}

bool RewriteSystem::complete(const std::vector<NCPoly>& relations, int bound) {
  bound_ = bound;
  rules_.clear();
  cache_.clear();
  complete_ = false;
  bool ok = true;
  std::vector<NCPoly> queue(relations.begin(), relations.end());
  // overlaps already resolved (or dropped for the bound), keyed by words
  std::set<std::tuple<std::vector<int>, std::vector<int>, int>> done;
  int guard = 0;
  while (true) {
    if (++guard > 50000) throw std::runtime_error("rewrite completion budget exceeded");
    if (!queue.empty()) {
      NCPoly rel = std::move(queue.back());
      queue.pop_back();
      if (!add_relation(std::move(rel), queue)) ok = false;
      continue;
    }
    // resolve overlaps: suffix of lhs1 meets prefix of lhs2
    bool found_new = false;
    for (size_t r1 = 0; r1 < rules_.size() && !found_new; ++r1)
      for (size_t r2 = 0; r2 < rules_.size() && !found_new; ++r2) {
        const auto& l1 = rules_[r1].lhs.arrows;
        const auto& l2 = rules_[r2].lhs.arrows;
        int max_k = static_cast<int>(std::min(l1.size(), l2.size())) - 1;
        for (int k = 1; k <= max_k && !found_new; ++k) {
          if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
          if (!done.insert({l1, l2, k}).second) continue;
          // superposition w = l1 . l2[k:]; reduce both ways
          NCPoly via1(ring_), via2(ring_);
          for (const auto& [rp, rc] : rules_[r1].rhs.terms()) {
            std::vector<int> u(rp.arrows.begin(), rp.arrows.end());
            u.insert(u.end(), l2.begin() + k, l2.end());
            if (u.empty())
              via1.add_term(Path::idem(q_->arrow(l2.back()).src), rc);
            else
              via1.add_term(Path::word(std::move(u)), rc);
          }
          for (const auto& [rp, rc] : rules_[r2].rhs.terms()) {
            std::vector<int> u(l1.begin(), l1.end() - k);
            u.insert(u.end(), rp.arrows.begin(), rp.arrows.end());
            if (u.empty())
              via2.add_term(Path::idem(q_->arrow(l1.front()).dst), rc);
            else
              via2.add_term(Path::word(std::move(u)), rc);
          }
          NCPoly diff = reduce(via1 - via2);
          if (!diff.is_zero()) {
            queue.push_back(std::move(diff));
            found_new = true;
          }
        }
      }
    if (!found_new) break;  // all overlaps resolve (or were dropped; ok records that)
  }
  complete_ = ok;
  return ok;
}

std::vector<Path> RewriteSystem::normal_words(int ell, int src, int dst) const {
  std::vector<Path> out;
  for (int v = 0; v < q_->n_vertices(); ++v)
    if ((src < 0 || v == src) && (dst < 0 || v == dst)) out.push_back(Path::idem(v));
  // Grow words on the left (composition order: the new letter acts last), so
  // every rule window involving the new letter is a prefix of the word.
  std::vector<int> word;
  auto prefix_normal = [&]() {
    for (const auto& r : rules_)
      if (r.lhs.arrows.size() <= word.size() &&
          std::equal(r.lhs.arrows.begin(), r.lhs.arrows.end(), word.begin()))
        return false;
    return true;
  };
  std::function<void()> go = [&]() {
    if (static_cast<int>(word.size()) > ell) return;
    Path p = Path::word(word);
    if ((src < 0 || path_src(*q_, p) == src) && (dst < 0 || path_dst(*q_, p) == dst))
      out.push_back(p);
    if (static_cast<int>(word.size()) == ell) return;
    int head = q_->arrow(word.front()).dst;
    for (int a = 0; a < q_->n_arrows(); ++a) {
      if (q_->arrow(a).src != head) continue;
      word.insert(word.begin(), a);
      if (prefix_normal()) go();
      word.erase(word.begin());
    }
  };
  for (int a = 0; a < q_->n_arrows() && ell >= 1; ++a) {
    if (src >= 0 && q_->arrow(a).src != src) continue;
    word = {a};
    if (prefix_normal()) go();
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<long long> RewriteSystem::count_normal_words(int ell, int src, int dst) const {
  std::vector<long long> counts(ell + 1, 0);
  for (const auto& p : normal_words(ell, src, dst)) counts[p.length()]++;
  return counts;
}

}  // namespace qdga
