#include "hch/ncalg.hpp"
#include "hch/quiver.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hch;
using hch::testing::pick;
using hch::testing::random_poly;
using hch::testing::random_word;

TEST_CASE("parse words") {
  Alphabet a(2);
  CHECK(parse_word("d1 x2 xi", a) == Word{dl(1), xl(2), kXi});
  CHECK(parse_word("", a).empty());
  CHECK_THROWS_AS(parse_word("x3", a), ParseError);
  CHECK_THROWS_AS(parse_word("y1", a), ParseError);
}

TEST_CASE("render and parse are inverse") {
  Alphabet a(3);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(3, pick(7));
    CHECK(parse_word(render(w, a), a) == w);
    Poly p = random_poly(3, 4, 5);
    CHECK(parse_poly(render(p, a), a) == p);
  }
  CHECK(render(parse_word("(d1 x2 xi)", a), a) == "(d1 x2 xi)");
}

TEST_CASE("degrees") {
  Degrees d = degrees(Word{dl(1), xl(2), kXi});
  CHECK(d.deg_delta == 1);
  CHECK(d.deg_xi == 1);
  CHECK(d.weight() == 2);
  CHECK(d.deg_x == 1);
  CHECK(d.offset() == 0);
  Degrees e = degrees(Word{});
  CHECK(e.weight() == 0);
  CHECK(e.deg_x == 0);
  Degrees f = degrees(Word{dl(1), xl(1), dl(1), xl(1)});
  CHECK(f.deg_delta == 2);
  CHECK(f.deg_xi == 0);
  CHECK(f.weight() == 2);
  CHECK(f.offset() == 0);
}

TEST_CASE("cyclic canonical forms") {
  CyclicCanon c = cyclic_canonicalize(Word{xl(1), dl(1)});
  CHECK(c.canonical == Word{dl(1), xl(1)});
  CHECK(c.sign == 1);
  CyclicCanon d = cyclic_canonicalize(Word{dl(2), dl(1)});
  CHECK(d.canonical == Word{dl(1), dl(2)});
  CHECK(d.sign == -1);
  // Rotating one delta unit past another costs a sign, so (d1 d1) is zero.
  CHECK(cyclic_canonicalize(Word{dl(1), dl(1)}).vanishing);
  // Xi units are even under the rotation sign; (xi xi) survives.
  CHECK_FALSE(cyclic_canonicalize(Word{kXi, kXi}).vanishing);
  CHECK_THROWS(cyclic_canonicalize(Word{xl(1)}));
}

TEST_CASE("canonical form is rotation invariant") {
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(2, 1 + pick(6));
    if (degrees(w).weight() == 0) continue;
    w = to_tilde_form(w);
    CyclicCanon c = cyclic_canonicalize(w);
    const std::size_t n = units(w).size();
    for (std::size_t j = 1; j < n; ++j) {
      Rotation r = rotate_units(w, j);
      CyclicCanon cr = cyclic_canonicalize(r.word);
      CHECK(cr.canonical == c.canonical);
      CHECK(cr.vanishing == c.vanishing);
      if (!c.vanishing) CHECK(c.sign == r.sign * cr.sign);
    }
  }
}

TEST_CASE("polynomial products") {
  Alphabet a(2);
  CHECK(multiply(parse_poly("(x1)", a), parse_poly("(d1)", a), a) == parse_poly("(x1 d1)", a));
  CHECK(multiply(parse_poly("(x1) + (x2)", a), parse_poly("(x1)", a), a) == parse_poly("(x1 x1) + (x2 x1)", a));

  // a: v1 -> v2 followed by b: v3 -> v1 does not compose.
  auto q = std::make_shared<const Quiver>(Quiver({"v1", "v2", "v3"}, {{"a", 0, 1}, {"b", 2, 0}}));
  Alphabet qa(q);
  Poly pa = Poly::monomial(Word{xl(q->arrow_gen(0))});
  Poly pb = Poly::monomial(Word{xl(q->arrow_gen(1))});
  CHECK(multiply(pa, pb, qa).is_zero());
  CHECK_FALSE(multiply(pb, pa, qa).is_zero());
}

TEST_CASE("polynomial arithmetic laws") {
  Alphabet a(2);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(2, 3, 3), q = random_poly(2, 3, 3), r = random_poly(2, 3, 3);
    CHECK(multiply(multiply(p, q, a), r, a) == multiply(p, multiply(q, r, a), a));
    CHECK(multiply(p, q + r, a) == multiply(p, q, a) + multiply(p, r, a));
    CHECK(multiply(p + q, r, a) == multiply(p, r, a) + multiply(q, r, a));
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("monomial order") {
  MonomialOrder ord = MonomialOrder::delta_first(2);
  const Word dx{dl(1), xl(1)}, xd{xl(1), dl(1)};
  CHECK(ord.less(xd, dx));
  CHECK_FALSE(ord.less(dx, dx));
  CHECK(ord.less(Word{xl(1)}, Word{xl(1), xl(1)}));
  CHECK(ord.less(dx, xd) == false);
  MonomialOrder xf = MonomialOrder::x_first(2);
  CHECK(xf.less(dx, xd));
}

TEST_CASE("monomial order is multiplicative") {
  for (const MonomialOrder& ord : {MonomialOrder::delta_first(2), MonomialOrder::x_first(2)})
    for (int i = 0; i < 1000; ++i) {
      Word u = random_word(2, pick(4)), v = random_word(2, pick(4));
      Word c = random_word(2, pick(3)), d = random_word(2, pick(3));
      if (ord.less(v, u)) std::swap(u, v);
      if (u == v) continue;
      CHECK(ord.less(u, v));
      CHECK(ord.less(c + u + d, c + v + d));
    }
}

TEST_CASE("cyclize and expand") {
  Alphabet a(2);
  // (1/2)(d1 d2 - d2 d1)
  CyclicPoly c = cyclize(parse_poly("(d1 d2)", a));
  CHECK(expand(c) == parse_poly("1/2 * (d1 d2) - 1/2 * (d2 d1)", a));
  CHECK(c.coeff(Word{dl(1), dl(2)}) == Rational(1, 2));
  CyclicPoly e = cyclize(parse_poly("(d1 x1)", a));
  CHECK(e.coeff(Word{dl(1), xl(1)}) == 1);
  CHECK(expand(e) == parse_poly("(d1 x1)", a));
  CHECK(cyclize(parse_poly("(d1 d1)", a)).is_zero());
  CHECK(parse_cyclic(render(c, a), a) == c);
}

TEST_CASE("cyclize is a projector") {
  for (int i = 0; i < 200; ++i) {
    Poly p;
    for (int k = 0; k < 3; ++k) {
      Word w = random_word(2, 1 + pick(5));
      if (degrees(w).weight() == 0) continue;
      p.add(to_tilde_form(w), hch::testing::random_coeff());
    }
    CyclicPoly c = cyclize(p);
    CHECK(cyclize(expand(c)) == c);
  }
}
