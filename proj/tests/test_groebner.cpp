#include "hch/complex.hpp"
#include "hch/groebner.hpp"
#include "hch/homology.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hch;
using hch::testing::pick;
using hch::testing::random_poly;
using hch::testing::random_word;

namespace {

Poly delta_poly(unsigned r) {
  Poly d;
  for (unsigned i = 1; i <= r; ++i) {
    d.add(Word{dl(i), xl(i)}, 1);
    d.add(Word{xl(i), dl(i)}, -1);
  }
  return d;
}

Poly x_poly(unsigned r, std::size_t terms, std::size_t len) {
  Poly p;
  for (std::size_t i = 0; i < terms; ++i) {
    Word w;
    for (std::size_t k = 0, n = pick(len + 1); k < n; ++k) {
      const std::size_t c = pick(2 * r);
      w.push_back(c < r ? xl(static_cast<unsigned>(c + 1)) : dl(static_cast<unsigned>(c - r + 1)));
    }
    p.add(w, hch::testing::random_coeff());
  }
  return p;
}

std::vector<TrivialSyzygy> random_trivials(unsigned r, std::size_t n) {
  std::vector<TrivialSyzygy> out;
  for (std::size_t i = 0; i < n; ++i) {
    Word u = x_poly(r, 1, 2).begin()->first, v = x_poly(r, 1, 2).begin()->first, w = x_poly(r, 1, 2).begin()->first;
    out.push_back({u, v, w, hch::testing::random_coeff()});
  }
  return out;
}

std::vector<MarkedTerm> as_terms(const Marked& m) {
  std::vector<MarkedTerm> t;
  for (const auto& [k, c] : m) t.push_back({k.first, c, k.second});
  return t;
}

}  // namespace

TEST_CASE("normal form examples") {
  Alphabet a(2);
  RelationSet r = delta_relations(2, MonomialOrder::delta_first(2));
  CHECK(r.relations().front().lead == Word{dl(1), xl(1)});
  CHECK(normal_form(Poly::monomial(Word{xl(1), dl(1)}), r) == Poly::monomial(Word{xl(1), dl(1)}));
  CHECK(normal_form(Poly::monomial(Word{dl(1), xl(1)}), r) ==
        parse_poly("(x1 d1) + (x2 d2) - (d2 x2)", a));
  CHECK(normal_form(delta_poly(2), r).is_zero());
}

TEST_CASE("normal forms are idempotent and respect products") {
  Alphabet a(2);
  for (const MonomialOrder& ord : {MonomialOrder::delta_first(2), MonomialOrder::x_first(2)}) {
    RelationSet r = delta_relations(2, ord);
    for (int n = 0; n < 200; ++n) {
      Poly p = x_poly(2, 4, 5), q = x_poly(2, 3, 3);
      Poly nf = normal_form(p, r);
      CHECK(normal_form(nf, r) == nf);
      for (const auto& [w, c] : nf) CHECK(is_normal(w, r));
      CHECK(normal_form(multiply(p, q, a), r) == normal_form(multiply(nf, normal_form(q, r), a), r));
    }
  }
}

TEST_CASE("overlap examples") {
  Alphabet a(2);
  CHECK(find_overlaps(delta_relations(2, MonomialOrder::delta_first(2))).empty());
  CHECK(find_overlaps(delta_relations(2, MonomialOrder::x_first(2))).empty());
  RelationSet mono({parse_poly("(x1 x2)", a), parse_poly("(x2 x1)", a)}, MonomialOrder::delta_first(2));
  auto ov = find_overlaps(mono);
  REQUIRE(ov.size() == 2);
  CHECK(ov[0].word == Word{xl(1), xl(2), xl(1)});
  CHECK(ov[1].word == Word{xl(2), xl(1), xl(2)});
  RelationSet incl({parse_poly("(x1 x2 x1)", a), parse_poly("(x2)", a)}, MonomialOrder::delta_first(2));
  auto in = find_overlaps(incl);
  // Self-overlap of x1 x2 x1 on x1, and x2 inside it.
  REQUIRE(in.size() == 2);
  CHECK_FALSE(in[0].inclusion);
  CHECK(in[1].inclusion);
}

TEST_CASE("Groebner checks") {
  Alphabet a(2);
  for (const MonomialOrder& ord : {MonomialOrder::delta_first(2), MonomialOrder::x_first(2)}) {
    GroebnerCheck g = is_groebner(delta_relations(2, ord), 8);
    CHECK(g.groebner);
    CHECK(g.conclusive);
  }
  CHECK(is_groebner(RelationSet({parse_poly("(x1 x2) - 1", a)}, MonomialOrder::delta_first(2)), 6).groebner);
  Alphabet a1(1);
  RelationSet idem({parse_poly("(x1 x1) - (x1)", a1)}, MonomialOrder::delta_first(1));
  REQUIRE(find_overlaps(idem).size() == 1);
  CHECK(is_groebner(idem, 6).groebner);

  RelationSet bad({parse_poly("(x1 x2) - (x2)", a), parse_poly("(x2 x1) - (x1)", a)}, MonomialOrder::delta_first(2));
  GroebnerCheck gb = is_groebner(bad, 6);
  Completion c = complete(bad, 6);
  if (!gb.groebner) {
    CHECK(gb.witness.has_value());
    CHECK(c.relations.size() > 2);
  }
  CHECK(is_groebner(RelationSet(c.relations, MonomialOrder::delta_first(2)), 6).groebner);
}

TEST_CASE("extended quiver relations have no ambiguities") {
  for (const Quiver& q : {Quiver::kronecker(2), Quiver({"v1", "v2"}, {{"a", 0, 1}, {"b", 1, 0}})}) {
    ExtendedQuiver eq(q);
    for (bool xf : {false, true}) {
      RelationSet r = extended_quiver_relations(eq, xf);
      CHECK(find_overlaps(r).empty());
      CHECK(is_groebner(r, 6).groebner);
    }
  }
}

TEST_CASE("syzygy decomposition") {
  const Poly delta = delta_poly(2);
  const MonomialOrder ord = MonomialOrder::delta_first(2);
  CHECK(syzygy_decompose({}, delta, ord).empty());

  // (1, v Delta) - (Delta v, 1) is the trivial syzygy (1, v, 1).
  const Word v{xl(2), dl(1)};
  std::vector<TrivialSyzygy> one{{Word{}, v, Word{}, 1}};
  auto d1 = syzygy_decompose(as_terms(to_marked(one, delta)), delta, ord);
  CHECK(to_marked(d1, delta) == to_marked(one, delta));

  for (int n = 0; n < 100; ++n) {
    const Marked m = to_marked(random_trivials(2, 3), delta);
    const auto terms = as_terms(m);
    CHECK(evaluate(terms, delta).is_zero());
    const auto dec = syzygy_decompose(terms, delta, ord);
    CHECK(to_marked(dec, delta) == m);
  }
  CHECK_THROWS_AS(syzygy_decompose({{Word{}, 1, Word{}}}, delta, ord), NotASyzygy);
}

TEST_CASE("centralizer") {
  RelationSet r = delta_relations(2, MonomialOrder::delta_first(2));
  const std::vector<Letter> xs{xl(1), xl(2)};
  CHECK(centralizer_test(Poly::monomial(Word{}), r, xs).central);
  CentralizerResult c = centralizer_test(Poly::monomial(Word{xl(1)}), r, xs);
  CHECK_FALSE(c.central);
  CHECK(c.witness == xl(2));
  CHECK_FALSE(c.commutator.is_zero());
  CHECK(centralizer_dimension(r, xs, xs, 4) == 1);
}

TEST_CASE("one-xi lifts") {
  Alphabet a(2);
  CHECK(lift_one_xi(Poly{}, a).g.is_zero());
  // u = d_hat(xi xi) restricted to weight 2 is a one-xi cycle.
  Poly u = diff_hat(Poly::monomial(Word{kXi, kXi}), a);
  LiftResult l = lift_one_xi(u, a);
  CHECK(diff_hat(l.g, a) == u);
  CHECK_THROWS(lift_one_xi(Poly::monomial(Word{kXi}), a));

  for (int m = 2; m <= 3; ++m)
    for (int t = -1; t <= 1; ++t)
      for (const Word& w : enumerate_slice(a, {Variant::Hat, m, t, 2})) {
        Poly cycle = diff_hat(Poly::monomial(w), a);
        if (cycle.is_zero()) continue;
        LiftResult lift = lift_one_xi(cycle, a);
        CHECK(diff_hat(lift.g, a) == cycle);
        CHECK(solve_preimage(cycle, a, Variant::Hat).exact);
      }
}
