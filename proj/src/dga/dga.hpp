#ifndef QDGA_DGA_DGA_HPP
#define QDGA_DGA_DGA_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/ncpoly.hpp"

namespace qdga {

// Semi-free dg-algebra: free path algebra of a graded quiver with a
// differential given on generators, extended by the graded Leibniz rule.
// Optional invertible degree-0 loop pairs (g, g^-1) carry the local rewrite
// g.g^-1 -> e, g^-1.g -> e.
class SemiFreeDGA {
 public:
  GradedQuiver gq;
  RingKind ring = RingKind::Rational;
  std::vector<NCPoly> diff;                       // per generator id
  std::vector<std::pair<int, int>> inv_pairs;     // (g, g_inv), loops at one vertex

  const Quiver& quiver() const { return gq.q; }
  int add_generator(const std::string& name, int src, int dst, int degree);
  void set_diff(int arrow, NCPoly d);
  void set_diff(const std::string& name, const std::string& poly_text);
  void add_invertible_pair(int g, int g_inv);

  // Collapse adjacent inverse pairs in every path of x.
  NCPoly reduce(const NCPoly& x) const;
  NCPoly d(const NCPoly& x) const;  // Leibniz extension + reduce

  // Structural validity: degrees drop by one, endpoints preserved,
  // invertible pairs are degree-0 loops.
  void validate() const;

  bool operator==(const SemiFreeDGA& o) const;
};

struct DSquaredReport {
  bool ok = true;
  std::string failing_generator;
  std::string residue;  // text of first nonzero d(dg)
};

DSquaredReport check_d_squared(const SemiFreeDGA& dga);

// --- constructors for the algebra families (cyclic A~_n quiver) ---

// Vertices "1".."n+1"; arrows a<i>: i -> i+1 (mod n+1), a<i>*: i+1 -> i,
// loops zeta<i> of degree 1.  d zeta_i = a_i* a_i - a_{i-1} a_{i-1}*
// (+ lambda_i e_i when deformed).
SemiFreeDGA make_ginzburg(int n, const std::vector<Scalar>& lambda = {},
                          RingKind ring = RingKind::Rational);

// d zeta_i = q_i(e_i + a_i* a_i) - (e_i + a_{i-1} a_{i-1}*).
SemiFreeDGA make_mult_nonloc(int n, const std::vector<Scalar>& q);

// Adds the invertible pair z, zinv at vertex n+1 and tau with
// d tau = e_{n+1} + a_{n+1}* a_{n+1} - z.
SemiFreeDGA make_mult_derived(int n, const std::vector<Scalar>& q,
                              int excluded_arrow = -1);

// Plain graded quiver families (no differential assembled here).
enum class QuiverFamily { CyclicAnTilde, LinearAn, Doubled, GinzburgExtension, BQuiver, BTQuiver };
GradedQuiver build_quiver_family(QuiverFamily family, int n);

// --- operations ---

SemiFreeDGA drinfeld_quotient(const SemiFreeDGA& dga, const std::set<int>& vertices);
SemiFreeDGA remove_vertices(const SemiFreeDGA& dga, const std::set<int>& vertices);

// Substitute loop generators by invertible scalars (e.g. t_i -> q_i) and drop
// them from the presentation.
SemiFreeDGA specialize(const SemiFreeDGA& dga, const std::map<int, Scalar>& values);

struct DGAMap {
  const SemiFreeDGA* src = nullptr;
  const SemiFreeDGA* dst = nullptr;
  std::map<int, NCPoly> images;  // per source generator id, value in dst
};

struct MapReport {
  bool endpoint_consistent = false;
  bool degree_preserving = false;
  bool is_chain_map = false;
  bool is_iso_on_generators = false;
  std::string failing_generator;  // first chain-map failure
  std::string residue;
};

MapReport check_dga_map(const DGAMap& m);

// Lemma-substitution map G^lambda(A~_n) -> G^q_{M,non-loc}(A~_n):
// a_i -> (q_1..q_i) a_i, a_i* -> a_i*, zeta_i -> (q_1..q_{i-1}) zeta_i.
// The zeta-scaling is derived, not stated in the source; the report records it.
struct SubstLemmaResult {
  SemiFreeDGA ginzburg;   // deformed Ginzburg with lambda_i = q_1..q_{i-1}(q_i - 1)
  SemiFreeDGA mult;       // G^q_{M,non-loc}
  std::vector<Scalar> lambda;
  std::vector<Scalar> zeta_scaling;
  MapReport report;
};
SubstLemmaResult substlemma_iso(int n, const std::vector<Scalar>& q);

}  // namespace qdga

#endif
