// Necklace bracket on cyclic words, Maurer-Cartan residuals and double
// Poisson brackets.
#pragma once

#include "hch/ncalg.hpp"
#include "hch/operations.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hch {

// Parity 1 + deg_delta of a homogeneous cyclic polynomial; throws if mixed.
int lie_parity(const CyclicPoly& p);

// Essential part of the composition A o B (B applied first), symmetrized.
CyclicPoly necklace_compose(const CyclicPoly& a, const CyclicPoly& b);
// [A, B] = A o B - (-1)^(|A||B|) B o A, bilinear over homogeneous terms.
CyclicPoly necklace_bracket(const CyclicPoly& a, const CyclicPoly& b);
// (-1)^(|A||C|)[A,[B,C]] + (-1)^(|B||A|)[B,[C,A]] + (-1)^(|C||B|)[C,[A,B]].
CyclicPoly jacobi_residual(const CyclicPoly& a, const CyclicPoly& b, const CyclicPoly& c);
CyclicPoly mc_residual(const CyclicPoly& m);

// Compares the necklace bracket with the symmetrized graded commutator of
// compositions on all input tuples of total degree <= max_degree.
struct CoherenceResult {
  bool coherent = false;            // necklace equals the full commutator
  bool nonessential_cancel = false;  // non-essential part of the commutator vanishes
  std::size_t entries = 0;           // table entries compared
};
CoherenceResult check_coherence(const CyclicPoly& a, const CyclicPoly& b, int max_degree, const Alphabet& alph);

// Double brackets from an element with two delta letters and no xi:
// {{a, b}} = o_2 (x) o_1 where (o_1, o_2) is the value on inputs (a, b).
using Tensor2 = std::map<std::array<Word, 2>, Rational>;
using Tensor3 = std::map<std::array<Word, 3>, Rational>;

bool is_two_delta(const CyclicPoly& m);
Tensor2 double_bracket(const CyclicPoly& m, const Word& a, const Word& b, const Alphabet& alph);
// {{a,{{b,c}}}}_L + tau {{b,{{c,a}}}}_L + tau^2 {{c,{{a,b}}}}_L with
// tau(u (x) v (x) w) = w (x) u (x) v.
Tensor3 double_jacobi(const CyclicPoly& m, const Word& a, const Word& b, const Word& c, const Alphabet& alph);

struct DoublePoissonReport {
  bool antisymmetry = true;
  bool leibniz = true;
  bool jacobi = true;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::string first_failure;
};
// Checks the axioms on all pairs and triples of nonempty monomials of degree
// <= max_degree each.
DoublePoissonReport check_double_poisson(const CyclicPoly& m, unsigned r, int max_degree, const Alphabet& alph);

std::string render(const Tensor2& t, const Alphabet& a);
std::string render(const Tensor3& t, const Alphabet& a);

}  // namespace hch
