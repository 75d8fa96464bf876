#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/text.hpp"
#include "quot/corner.hpp"
#include "quot/quotient.hpp"

using namespace qdga;

namespace {
Scalar rat(const std::string& s) { return Scalar(RingKind::Rational, parse_rat(s)); }
std::vector<Scalar> rats(std::initializer_list<std::string> v) {
  std::vector<Scalar> r;
  for (const auto& s : v) r.push_back(rat(s));
  return r;
}
}  // namespace

TEST_CASE("preprojective membership basics") {
  auto P = make_preprojective(1, rats({"0", "0"}));
  const Quiver& q = P.alg.quiver();
  // generating relation is in the ideal
  CHECK(P.alg.ideal_member(parse_ncpoly(q, RingKind::Rational, "a1*.a1 - a2.a2*")) ==
        Member::Yes);
  // the augmentation survives: e_1 not in the ideal
  CHECK(P.alg.ideal_member(parse_ncpoly(q, RingKind::Rational, "e1")) == Member::No);
  CHECK(P.alg.stabilized());
  // dimension at length 0 is the number of idempotents
  auto b0 = P.alg.truncated_basis(0);
  CHECK(b0.dimension == 2);

  auto Pd = make_preprojective(2, rats({"1", "4", "-5"}));
  CHECK(Pd.sum_lambda_zero);
  auto Pbad = make_preprojective(2, rats({"1", "1", "1"}));
  CHECK(!Pbad.sum_lambda_zero);  // accepted as an algebra, corner gate off
  CHECK(Pbad.alg.stabilized());
}

TEST_CASE("truncated dimensions form a consistent Hilbert function") {
  // Pi(A~_1) is the preprojective algebra of affine A_1: dimensions of the
  // length filtration are independent of the slack; brute-force cross-check
  // for small lengths via the normal words themselves.
  auto P = make_preprojective(1, rats({"0", "0"}));
  auto d1 = P.alg.dims_by_length(6);
  auto P2 = make_preprojective(1, rats({"0", "0"}));
  P2.alg.slack_S = 10;
  auto d2 = P2.alg.dims_by_length(6);
  CHECK(d1 == d2);
  // every normal word is genuinely irreducible, and counts match list sizes
  auto b = P.alg.truncated_basis(4);
  long long total = 0;
  for (int l = 0; l <= 4; ++l) total += d1[l];
  CHECK(b.dimension == total);
}

TEST_CASE("koszul dual is 12-dimensional for n=2 with the stated relations") {
  auto A = make_koszul_dual(2);
  const Quiver& q = A.quiver();
  // a2.a1 -> 0 and loops identified
  CHECK(A.ideal_member(parse_ncpoly(q, RingKind::Rational, "a2.a1")) == Member::Yes);
  CHECK(A.ideal_member(parse_ncpoly(q, RingKind::Rational, "a1*.a1 - a3.a3*")) == Member::Yes);
  auto b = A.truncated_basis(3);
  CHECK(b.dimension == 12);  // e_i, a_i, a_i*, z_i
  // all length-3 words vanish
  auto d = A.dims_by_length(4);
  CHECK(d[0] == 3);
  CHECK(d[1] == 6);
  CHECK(d[2] == 3);
  CHECK(d[3] == 0);
  CHECK(d[4] == 0);
  // brute-force oracle: the normal words at length <= 2 are exactly
  // {e_i} u {a_i} u {a_i*} u {one loop per vertex}
  int loops = 0;
  for (const auto& w : b.words)
    if (w.length() == 2) {
      CHECK(path_src(q, w) == path_dst(q, w));
      ++loops;
    }
  CHECK(loops == 3);
}

TEST_CASE("mult preprojective relations and localized variant") {
  auto M = make_mult_preprojective(2, rats({"2", "3", "1/6"}), false);
  const Quiver& q = M.alg.quiver();
  CHECK(M.product_q_one);
  CHECK(M.alg.ideal_member(
            parse_ncpoly(q, RingKind::Rational, "z - e3 - a3*.a3")) == Member::Yes);
  CHECK(M.alg.ideal_member(
            parse_ncpoly(q, RingKind::Rational, "e1 + a3.a3* - 2 * e1 - 2 * a1*.a1")) ==
        Member::Yes);
  CHECK(M.alg.ideal_member(parse_ncpoly(q, RingKind::Rational, "e1")) == Member::No);

  auto ML = make_mult_preprojective(2, rats({"1", "1", "1"}), true);
  const Quiver& ql = ML.alg.quiver();
  CHECK(ML.alg.ideal_member(parse_ncpoly(ql, RingKind::Rational, "z.zinv - e3")) ==
        Member::Yes);
  CHECK(ML.alg.stabilized());
  CHECK_THROWS(make_mult_preprojective(2, rats({"1", "0", "1"}), false));
}

TEST_CASE("corner algebra: additive") {
  // n=1, lambda = 0: XY = Z^2, the singular cone
  auto P0 = make_preprojective(1, rats({"0", "0"}));
  CornerWitness w0;
  auto r0 = corner_verify_additive(P0, w0);
  CHECK(r0.all_yes());
  CHECK(w0.roots.size() == 2);
  CHECK(w0.roots[0].is_zero());
  CHECK(w0.roots[1].is_zero());
  // XY - Z^2 in the ideal directly
  const Quiver& q = P0.alg.quiver();
  NCPoly XY = mul(q, w0.X, w0.Y);
  NCPoly Z2 = mul(q, w0.Z, w0.Z);
  CHECK(P0.alg.ideal_member(XY - Z2) == Member::Yes);

  // n=2, lambda = (1,4,-5): roots {1,5,0}
  auto P = make_preprojective(2, rats({"1", "4", "-5"}));
  CornerWitness w;
  auto r = corner_verify_additive(P, w);
  CHECK(r.all_yes());
  CHECK(r.stabilized);
  CHECK(w.roots[0] == rat("1"));
  CHECK(w.roots[1] == rat("5"));
  CHECK(w.roots[2] == rat("0"));

  // gate: sum lambda != 0 -> inapplicable
  auto Pbad = make_preprojective(2, rats({"1", "1", "1"}));
  CornerWitness wb;
  CHECK(!corner_verify_additive(Pbad, wb).gate_ok);
}

TEST_CASE("corner algebra: multiplicative and the cross identity") {
  auto M = make_mult_preprojective(2, rats({"2", "3", "1/6"}), false);
  CornerWitness w;
  auto r = corner_verify_multiplicative(M, w);
  CHECK(r.all_yes());
  CHECK(w.roots[0] == rat("2"));
  CHECK(w.roots[1] == rat("6"));
  CHECK(w.roots[2] == rat("1"));
  // Lambda_i = Q_i - 1 cross-check {1,5,0}
  auto P = make_preprojective(2, rats({"1", "4", "-5"}));
  CornerWitness wa;
  auto ra = corner_verify_additive(P, wa);
  CHECK(ra.all_yes());
  REQUIRE(wa.roots.size() == w.roots.size());
  for (size_t i = 0; i < w.roots.size(); ++i) CHECK(wa.roots[i] == w.roots[i] - rat("1"));

  // multiplicative corner at q = (1,...,1): P(Z) = (Z-1)^{n+1}
  auto M1 = make_mult_preprojective(1, rats({"1", "1"}), false);
  CornerWitness w1;
  auto r1 = corner_verify_multiplicative(M1, w1);
  CHECK(r1.all_yes());
  for (const auto& root : w1.roots) CHECK(root.is_one());
}

TEST_CASE("corner suite for n up to 3 at generic rational parameters") {
  for (int n = 1; n <= 3; ++n) {
    int m = n + 1;
    std::vector<Scalar> q;
    Scalar prod = rat("1");
    for (int i = 0; i < n; ++i) {
      q.push_back(rat(std::to_string(i + 2)));
      prod = prod * q.back();
    }
    q.push_back(prod.inverse());
    auto M = make_mult_preprojective(n, q, false);
    CornerWitness w;
    auto r = corner_verify_multiplicative(M, w);
    CHECK(r.all_yes());
    CHECK(r.stabilized);

    std::vector<Scalar> lam;
    Scalar pre = rat("1");
    Scalar sum = rat("0");
    for (int i = 0; i < m; ++i) {
      lam.push_back(pre * (q[i] - rat("1")));
      sum = sum + lam.back();
      pre = pre * q[i];
    }
    CHECK(sum.is_zero());
    auto P = make_preprojective(n, lam);
    CornerWitness wa;
    auto ra = corner_verify_additive(P, wa);
    CHECK(ra.all_yes());
    CHECK(ra.stabilized);
    for (int i = 0; i < m; ++i) CHECK(wa.roots[i] == w.roots[i] - rat("1"));
  }
}

TEST_CASE("center of Pi(A~_n): X, Y, Z commute and XY = Z^{n+1}") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = center_elements(n);
    CHECK(rep.commutes_with_all_arrows);
    CHECK(rep.xy_equals_Zpow == Member::Yes);
    CHECK(rep.stabilized);
  }
  // [Z, e_1] = 0 identically, without reduction
  auto P = make_preprojective(1, rats({"0", "0"}));
  const Quiver& q = P.alg.quiver();
  auto rep = center_elements(1);
  NCPoly e1 = NCPoly::idem(RingKind::Rational, 0);
  CHECK((mul(q, rep.Z, e1) - mul(q, e1, rep.Z)).is_zero());
  // [Z, a1] in the ideal
  NCPoly a1 = NCPoly::gen(RingKind::Rational, q.arrow_id("a1"));
  CHECK(P.alg.ideal_member(mul(q, rep.Z, a1) - mul(q, a1, rep.Z)) == Member::Yes);
}

TEST_CASE("XY - Z^2 in the corner of Pi(A~_1) at lambda=0") {
  // the additive corner report at lambda=0 agrees with center_elements:
  // the corner polynomial is Z^{n+1}
  auto P = make_preprojective(1, rats({"0", "0"}));
  CornerWitness w;
  auto r = corner_verify_additive(P, w);
  CHECK(r.all_yes());
  CHECK(w.poly.size() == 3);
  CHECK(w.poly[0].is_zero());
  CHECK(w.poly[1].is_zero());
  CHECK(w.poly[2].is_one());
}

TEST_CASE("pi mod full turn is finite dimensional in each corner degree") {
  auto A = make_pi_mod_full_turn(1);
  const Quiver& q = A.quiver();
  // alpha^2 = 0: the full turn a2.a1 vanishes
  CHECK(A.ideal_member(parse_ncpoly(q, RingKind::Rational, "a2.a1")) == Member::Yes);
  CHECK(A.ideal_member(parse_ncpoly(q, RingKind::Rational, "a1*.a1")) == Member::No);
  CHECK(A.stabilized());
  // normal words: powers of alpha bounded by n+1, star powers unbounded
  auto d = A.dims_by_length(8);
  for (int l = 0; l <= 8; ++l) CHECK(d[l] > 0);
}

TEST_CASE("unknown_at_cap is reported rather than guessed") {
  // an artificial relation set the bounded engine cannot complete:
  // x y x - y y: overlap resolution produces ever longer rules
  QuotientAlgebra A;
  A.ring = RingKind::Rational;
  int v = A.gq.q.add_vertex("1");
  int x = A.gq.add_arrow("x", v, v, 0);
  int y = A.gq.add_arrow("y", v, v, 0);
  Scalar one = Scalar::one(A.ring);
  NCPoly r(A.ring);
  r.add_term(Path::word({x, y, x}), one);
  r.add_term(Path::word({y, y}), -one);
  A.cap_L = 1;  // the relation itself exceeds the cap
  A.slack_S = 0;
  A.add_relation(std::move(r));
  CHECK(!A.stabilized());
  NCPoly probe = NCPoly::term(A.ring, Path::word({y, x, x, x, x, x}), one);
  CHECK(A.ideal_member(probe) == Member::UnknownAtCap);
}
