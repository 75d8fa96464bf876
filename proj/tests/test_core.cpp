#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/ncpoly.hpp"
#include "core/text.hpp"
#include "dga/dga.hpp"

using namespace qdga;

namespace {

GradedQuiver cyclic_doubled(int n) { return build_quiver_family(QuiverFamily::Doubled, n); }

NCPoly gen(const GradedQuiver& gq, const std::string& name) {
  return NCPoly::gen(RingKind::Rational, gq.q.arrow_id(name));
}

}  // namespace

TEST_CASE("scalar arithmetic in all three rings") {
  Scalar a(RingKind::Rational, parse_rat("2/3"));
  Scalar b(RingKind::Rational, parse_rat("-1/6"));
  CHECK((a * b).coeff(0) == parse_rat("-1/9"));
  CHECK((a + b).coeff(0) == parse_rat("1/2"));
  CHECK(a.inverse().coeff(0) == parse_rat("3/2"));

  Scalar d1 = Scalar::dual(Rat(1), Rat(2));
  Scalar d2 = Scalar::dual(Rat(3), Rat(-1));
  Scalar prod = d1 * d2;  // (1+2s)(3-s) = 3 + 5s
  CHECK(prod.coeff(0) == 3);
  CHECK(prod.coeff(1) == 5);
  CHECK((Scalar::dual(Rat(0), Rat(1)) * Scalar::dual(Rat(0), Rat(7))).is_zero());  // s*s = 0
  Scalar dinv = d1.inverse();
  CHECK((d1 * dinv).is_one());

  Scalar t = Scalar::t_power(2);
  CHECK((t * Scalar::t_power(-2)).is_one());
  CHECK(t.degree(-2) == -4);
  CHECK(!(t + Scalar::one(RingKind::Laurent)).degree(-2).has_value());
}

TEST_CASE("path multiplication and idempotents in cyclic A~_2") {
  auto gq = cyclic_doubled(2);
  const Quiver& q = gq.q;
  NCPoly a1 = gen(gq, "a1"), a2 = gen(gq, "a2");
  // a2 a1 is the composable path 1 -> 3; a1 a2 vanishes
  NCPoly p = mul(q, a2, a1);
  CHECK(p.n_terms() == 1);
  CHECK(path_src(q, p.terms().begin()->first) == q.vertex_id("1"));
  CHECK(path_dst(q, p.terms().begin()->first) == q.vertex_id("3"));
  CHECK(mul(q, a1, a2).is_zero());
  // (a1 + a2) e_1 = a1
  NCPoly e1 = NCPoly::idem(RingKind::Rational, q.vertex_id("1"));
  CHECK(mul(q, a1 + a2, e1) == a1);
  // e = sum e_i is a two-sided unit
  NCPoly e(RingKind::Rational);
  for (int v = 0; v < q.n_vertices(); ++v) e = e + NCPoly::idem(RingKind::Rational, v);
  NCPoly w = mul(q, a2, a1) + gen(gq, "a3*").scaled(Scalar(RingKind::Rational, Rat(5)));
  CHECK(mul(q, e, w) == w);
  CHECK(mul(q, w, e) == w);
}

TEST_CASE("associativity, bilinearity, degree additivity on random words") {
  auto dga = make_ginzburg(3);
  const GradedQuiver& gq = dga.gq;
  const Quiver& q = gq.q;
  std::mt19937 rng(7);
  auto random_poly = [&](int max_len) {
    NCPoly r(RingKind::Rational);
    for (int t = 0; t < 3; ++t) {
      std::vector<int> w;
      int len = 1 + static_cast<int>(rng() % max_len);
      // random composable word
      int a0 = static_cast<int>(rng() % q.n_arrows());
      w.push_back(a0);
      for (int i = 1; i < len; ++i) {
        int v = q.arrow(w.back()).src;
        const auto& in = q.arrows_to(v);
        if (in.empty()) break;
        w.push_back(in[rng() % in.size()]);
      }
      r.add_term(Path::word(w), Scalar(RingKind::Rational, Rat(static_cast<int>(rng() % 7) - 3)));
    }
    return r;
  };
  for (int trial = 0; trial < 30; ++trial) {
    NCPoly x = random_poly(4), y = random_poly(4), z = random_poly(4);
    CHECK(mul(q, mul(q, x, y), z) == mul(q, x, mul(q, y, z)));
    CHECK(mul(q, x + y, z) == mul(q, x, z) + mul(q, y, z));
    NCPoly xy = mul(q, x, y);
    for (const auto& [p, c] : xy.terms()) {
      (void)c;
      CHECK(path_composable(q, p));
    }
  }
  // endpoint algebra: e_j (x y) e_i = sum_l (e_j x e_l)(e_l y e_i)
  NCPoly x = random_poly(3), y = random_poly(3);
  NCPoly xy = mul(q, x, y);
  for (int j = 0; j < q.n_vertices(); ++j)
    for (int i = 0; i < q.n_vertices(); ++i) {
      NCPoly ej = NCPoly::idem(RingKind::Rational, j), ei = NCPoly::idem(RingKind::Rational, i);
      NCPoly lhs = mul(q, mul(q, ej, xy), ei);
      NCPoly rhs(RingKind::Rational);
      for (int l = 0; l < q.n_vertices(); ++l) {
        NCPoly el = NCPoly::idem(RingKind::Rational, l);
        rhs = rhs + mul(q, mul(q, mul(q, ej, x), el), mul(q, mul(q, el, y), ei));
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("graded Leibniz rule holds exactly on random words") {
  auto dga = make_ginzburg(2);
  const Quiver& q = dga.quiver();
  std::mt19937 rng(11);
  auto random_word = [&](int len) {
    std::vector<int> w;
    w.push_back(static_cast<int>(rng() % q.n_arrows()));
    for (int i = 1; i < len; ++i) {
      int v = q.arrow(w.back()).src;
      const auto& in = q.arrows_to(v);
      w.push_back(in[rng() % in.size()]);
    }
    return NCPoly::term(RingKind::Rational, Path::word(w), Scalar::one(RingKind::Rational));
  };
  for (int trial = 0; trial < 60; ++trial) {
    NCPoly x = random_word(1 + rng() % 3);
    NCPoly y = random_word(1 + rng() % 3);
    NCPoly xy = mul(q, x, y);
    auto dx = dga.d(x), dy = dga.d(y);
    int degx = *x.degree(dga.gq);
    NCPoly rhs = mul(q, dx, y) +
                 ((degx % 2 == 0) ? mul(q, x, dy) : mul(q, x, dy).scaled(-Scalar::one(RingKind::Rational)));
    CHECK(dga.d(xy) == rhs);
  }
  // d(e_i) = 0; d(zeta_1 zeta_1) = (d zeta_1) zeta_1 - zeta_1 (d zeta_1)
  CHECK(dga.d(NCPoly::idem(RingKind::Rational, 0)).is_zero());
  NCPoly z1 = NCPoly::gen(RingKind::Rational, q.arrow_id("zeta1"));
  NCPoly zz = mul(q, z1, z1);
  CHECK(dga.d(zz) == mul(q, dga.d(z1), z1) - mul(q, z1, dga.d(z1)));
}

TEST_CASE("dual number nilpotency kills any product with two s factors") {
  auto gq = cyclic_doubled(1);
  const Quiver& q = gq.q;
  Scalar s = Scalar::dual(Rat(0), Rat(1));
  NCPoly x = NCPoly::term(RingKind::Dual, Path::word({q.arrow_id("a1")}), s);
  NCPoly y = NCPoly::term(RingKind::Dual, Path::word({q.arrow_id("a2")}), s);
  CHECK(mul(q, y, x).is_zero());
}

TEST_CASE("ncpoly text syntax round trip") {
  auto dga = make_ginzburg(2);
  const Quiver& q = dga.quiver();
  NCPoly p = parse_ncpoly(q, RingKind::Rational, "2/3 * a1*.a1 - a3.a3* + e1");
  CHECK(p.n_terms() == 3);
  CHECK(p.coeff(Path::idem(q.vertex_id("1"))).coeff(0) == 1);
  NCPoly back = parse_ncpoly(q, RingKind::Rational, p.str(q));
  CHECK(back == p);

  NCPoly d = parse_ncpoly(q, RingKind::Dual, "(1 + 4 s) * a1*.a1 - 1/2 s * e2");
  NCPoly dback = parse_ncpoly(q, RingKind::Dual, d.str(q));
  CHECK(dback == d);

  NCPoly l = parse_ncpoly(q, RingKind::Laurent, "(T^-1 + 2) * zeta1 + T^2 * e1");
  NCPoly lback = parse_ncpoly(q, RingKind::Laurent, l.str(q));
  CHECK(lback == l);

  CHECK_THROWS(parse_ncpoly(q, RingKind::Rational, "a1.a1"));     // non-composable
  CHECK_THROWS(parse_ncpoly(q, RingKind::Rational, "bogus"));     // unknown name
  CHECK(parse_ncpoly(q, RingKind::Rational, "0").is_zero());
}

TEST_CASE("quiver families carry the stated gradings") {
  auto g1 = build_quiver_family(QuiverFamily::CyclicAnTilde, 2);
  CHECK(g1.q.n_vertices() == 3);
  CHECK(g1.q.n_arrows() == 3);
  CHECK(g1.q.arrow(g1.q.arrow_id("a1")).src == g1.q.vertex_id("1"));
  CHECK(g1.q.arrow(g1.q.arrow_id("a1")).dst == g1.q.vertex_id("2"));
  CHECK(g1.q.arrow(g1.q.arrow_id("a3")).dst == g1.q.vertex_id("1"));

  auto g2 = build_quiver_family(QuiverFamily::GinzburgExtension, 2);
  CHECK(g2.q.n_arrows() == 9);
  CHECK(g2.degree(g2.q.arrow_id("zeta1")) == 1);
  CHECK(g2.degree(g2.q.arrow_id("a2*")) == 0);

  auto bt = build_quiver_family(QuiverFamily::BTQuiver, 1);
  CHECK(bt.q.n_vertices() == 2);
  CHECK(bt.q.n_arrows() == 6);
  CHECK(bt.degree(bt.q.arrow_id("a1")) == 0);
  CHECK(bt.degree(bt.q.arrow_id("a2")) == 0);
  CHECK(bt.degree(bt.q.arrow_id("b1")) == -1);
  CHECK(bt.degree(bt.q.arrow_id("b2")) == -1);
  CHECK(bt.degree(bt.q.arrow_id("T1")) == -2);
  CHECK(bt.degree(bt.q.arrow_id("T2")) == -2);

  auto b = build_quiver_family(QuiverFamily::BQuiver, 1);
  CHECK(b.degree(b.q.arrow_id("a2")) == 2);
  CHECK(b.degree(b.q.arrow_id("b2")) == 1);

  CHECK_THROWS(build_quiver_family(QuiverFamily::CyclicAnTilde, 0));
}
