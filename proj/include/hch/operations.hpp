// Words as multilinear operations with N cyclically ordered outputs, and
// their composition.
#pragma once

#include "hch/ncalg.hpp"

#include <map>
#include <vector>

namespace hch {

// One entry per unit; true marks a delta slot (one input).
using Shape = std::vector<bool>;
Shape shape_of(const Word& tilde);

// Output tuples (o_1, ..., o_N) with coefficients.
using Tensor = std::map<std::vector<Word>, Rational>;

// Evaluates a tilde word on inputs for its delta slots (in slot order).
// Output k is p_k w_k q_{k+1}, where u_k = p_k x_{i_k} q_k is the
// factorization of the input at slot k and p = q = 1 at xi slots.
Tensor eval(const Word& w, const std::vector<Word>& inputs, const Alphabet& a);
// Sums over the words of p whose shape matches.
Tensor eval(const Poly& p, const Shape& shape, const std::vector<Word>& inputs, const Alphabet& a);
Tensor eval(const CyclicPoly& p, const Shape& shape, const std::vector<Word>& inputs, const Alphabet& a);

// Parity used for the Lie structure: 1 + deg_delta.
int lie_parity(const Word& w);

// Value of an operation on a fixed shape and input tuple.
struct EvalKey {
  Shape shape;
  std::vector<Word> inputs;
  std::vector<Word> outputs;
  auto operator<=>(const EvalKey&) const = default;
};
using Table = std::map<EvalKey, Rational>;

void add_to(Table& t, const EvalKey& k, const Rational& c);
void add_to(Table& t, const Table& o, const Rational& c = 1);
// Signed rotation of a table entry, matching the rotation of words.
std::pair<EvalKey, int> rotate_entry(const EvalKey& k);
// The projector P applied to an operation given by its table.
Table symmetrize(const Table& t);

// Input tuples for `slots` delta slots whose words are nonempty x-monomials
// with total degree at most `max_degree`.
std::vector<std::vector<Word>> input_tuples(std::size_t slots, unsigned r, int max_degree);
// All shapes with the given numbers of units and delta slots.
std::vector<Shape> shapes(std::size_t units, std::size_t deltas);

Table tabulate(const Poly& p, unsigned r, int max_degree, const Alphabet& a);

// Insertion of output `output` of `inner` into delta slot `slot` of `outer`.
// The inner operation runs first.
struct CompositeTerm {
  Rational coeff;
  Word outer;
  std::size_t slot = 0;
  Word inner;
  std::size_t output = 0;
};

// Sign of a composite term: Koszul sign of opening the inner word after
// `output`, times (-1)^(parity(inner) * number of delta slots of outer
// before `slot`).
int composition_sign(const Word& outer, std::size_t slot, const Word& inner, std::size_t output);

struct Composite {
  std::vector<CompositeTerm> terms;
};

// Sum over all delta slots of the outer words and all outputs of the inner
// words, with composition signs.
Composite compose(const Poly& outer, const Poly& inner);
Shape composite_shape(const CompositeTerm& t);

// Terms where the glued letter is internal to the inner word are essential;
// the others glue into an input letter.
struct SplitTable {
  Table essential;
  Table nonessential;
};
void evaluate_into(const CompositeTerm& t, const std::vector<Word>& inputs, const Alphabet& a,
                   SplitTable& out);
SplitTable tabulate(const Composite& c, unsigned r, int max_degree, const Alphabet& a);

}  // namespace hch
