#ifndef QDGA_QUOT_REWRITE_HPP
#define QDGA_QUOT_REWRITE_HPP

#include <map>
#include <vector>

#include "core/ncpoly.hpp"

namespace qdga {

// Leading-word elimination system for a two-sided ideal, bounded by a word
// length.  The monomial order is degree-lex on arrow id sequences; each rule
// rewrites its leading word to strictly smaller terms.  After bounded overlap
// resolution (diamond lemma) the irreducible words up to the bound form a
// basis of the truncated quotient, and reduction decides membership there.
class RewriteSystem {
 public:
  RewriteSystem(const Quiver& q, RingKind ring) : q_(&q), ring_(ring) {}

  // Returns false if a derived rule exceeded the bound (system incomplete).
  bool complete(const std::vector<NCPoly>& relations, int bound);

  bool is_complete() const { return complete_; }
  int bound() const { return bound_; }
  int n_rules() const { return static_cast<int>(rules_.size()); }

  NCPoly reduce(const NCPoly& x) const;
  bool is_normal(const Path& p) const;  // no rule lhs occurs as a factor

  // Number of irreducible words of each length 0..ell (optionally with fixed
  // endpoints; src/dst = -1 means any).
  std::vector<long long> count_normal_words(int ell, int src = -1, int dst = -1) const;
  std::vector<Path> normal_words(int ell, int src = -1, int dst = -1) const;

 private:
  struct Rule {
    Path lhs;
    NCPoly rhs;
  };
  bool add_relation(NCPoly rel, std::vector<NCPoly>& queue);
  bool occurs(const Path& p, int& pos, int& rule) const;

  const Quiver* q_;
  RingKind ring_;
  std::vector<Rule> rules_;
  bool complete_ = false;
  int bound_ = 0;
  mutable std::map<Path, NCPoly> cache_;
};

// deglex on (length, arrow id sequence); idempotents sort below all words.
bool word_less(const Path& a, const Path& b);

}  // namespace qdga

#endif
