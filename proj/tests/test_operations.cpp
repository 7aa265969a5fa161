#include "hch/bracket.hpp"
#include "hch/complex.hpp"
#include "hch/operations.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hch;
using hch::testing::pick;
using hch::testing::random_x_word;

TEST_CASE("evaluation examples") {
  Alphabet a(2);
  CHECK(eval(Word{dl(1)}, {Word{xl(2)}}, a).empty());
  Tensor t = eval(Word{dl(1)}, {Word{xl(1), xl(1)}}, a);
  REQUIRE(t.size() == 1);
  CHECK(t.begin()->first == std::vector<Word>{Word{xl(1)}});
  CHECK(t.begin()->second == 2);
  Tensor u = eval(Word{dl(1), dl(2)}, {Word{xl(1)}, Word{xl(2)}}, a);
  REQUIRE(u.size() == 1);
  CHECK(u.begin()->first == std::vector<Word>{Word{}, Word{}});
  CHECK(u.begin()->second == 1);
  CHECK_THROWS(eval(Word{dl(1), dl(2)}, {Word{xl(1)}}, a));
}

TEST_CASE("single-output words act as derivations") {
  // For one delta slot, eval(d_i w, bc) = eval(d_i w, b) c + b eval(d_i w, c).
  Alphabet a(2);
  for (int n = 0; n < 200; ++n) {
    Word op{dl(static_cast<unsigned>(1 + pick(2)))};
    op += random_x_word(2, pick(3));
    Word b = random_x_word(2, 1 + pick(3)), c = random_x_word(2, 1 + pick(3));
    Tensor lhs = eval(op, {b + c}, a);
    Tensor rhs;
    for (const auto& [o, k] : eval(op, {b}, a)) rhs[{o[0] + c}] += k;
    for (const auto& [o, k] : eval(op, {c}, a)) rhs[{b + o[0]}] += k;
    std::erase_if(rhs, [](const auto& e) { return e.second == 0; });
    CHECK(lhs == rhs);
  }
}

TEST_CASE("composition with a constant") {
  // delta_1 after (xi x1): the constant output x1 is glued into delta_1.
  Alphabet a(1);
  Composite c = compose(Poly::monomial(Word{dl(1)}), Poly::monomial(Word{kXi, xl(1)}));
  SplitTable st;
  for (const CompositeTerm& t : c.terms) evaluate_into(t, {}, a, st);
  CHECK(st.nonessential.empty());
  REQUIRE(st.essential.size() == 1);
  const auto& [key, coeff] = *st.essential.begin();
  CHECK(key.outputs == std::vector<Word>{Word{}});
  CHECK(coeff == 1);
}

TEST_CASE("non-essential terms cancel in the commutator") {
  Alphabet a(2);
  std::vector<Word> basis;
  for (int m = 1; m <= 2; ++m)
    for (int t = -1; t <= 1; ++t)
      for (int l = 0; l <= m; ++l)
        for (const Word& w : enumerate_slice(a, {Variant::Cyclic, m, t, l})) basis.push_back(w);
  for (int n = 0; n < 40; ++n) {
    CyclicPoly A, B;
    A.add_class(basis[pick(basis.size())], 1);
    B.add_class(basis[pick(basis.size())], 1);
    CoherenceResult r = check_coherence(A, B, 3, a);
    CHECK(r.nonessential_cancel);
    CHECK(r.coherent);
  }
}

TEST_CASE("symmetrize is idempotent") {
  Alphabet a(2);
  Poly p;
  p.add(Word{dl(1), xl(2), kXi}, 1);
  p.add(Word{dl(2), dl(1), xl(1)}, -2);
  Table t = tabulate(p, 2, 3, a);
  CHECK(symmetrize(symmetrize(t)) == symmetrize(t));
}
