// Noncommutative Groebner bases: reduction, ambiguities, syzygies of Delta,
// the centralizer test and the one-xi lift.
#pragma once

#include "hch/ncalg.hpp"
#include "hch/quiver.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hch {

struct Relation {
  Poly poly;  // monic
  Word lead;
  Poly tail;  // poly - lead
};

// Relations made monic under the order.  In a monomial algebra (quiver
// case) `admissible` filters out words that are zero.
class RelationSet {
 public:
  using Filter = std::function<bool(const Word&)>;

  RelationSet(const std::vector<Poly>& relations, MonomialOrder order, Filter admissible = {});

  const std::vector<Relation>& relations() const { return rels_; }
  const MonomialOrder& order() const { return order_; }
  bool admissible(const Word& w) const { return !filter_ || filter_(w); }
  const Filter& filter() const { return filter_; }

 private:
  std::vector<Relation> rels_;
  MonomialOrder order_;
  Filter filter_;
};

// The relation {Delta} over r generators.
RelationSet delta_relations(unsigned r, const MonomialOrder& order);
// {Delta', identifications} in the rose-extended quiver.  With
// `x_first` the order is x > delta' > delta, otherwise delta' > delta > x.
RelationSet extended_quiver_relations(const ExtendedQuiver& q, bool x_first);
MonomialOrder extended_x_first_order(const ExtendedQuiver& q);

// Position of the leftmost occurrence of a leading word (lowest relation
// index on ties), if any.
struct Occurrence {
  std::size_t pos = 0;
  std::size_t rel = 0;
};
std::optional<Occurrence> find_reducible(const Word& w, const RelationSet& r);
bool is_normal(const Word& w, const RelationSet& r);

// Reduces the largest reducible term first, at its leftmost occurrence.
Poly normal_form(const Poly& p, const RelationSet& r);

// first.lead = A B and second.lead = B C with A, C, B nonempty (overlap), or
// first.lead = A second.lead C (inclusion).  `word` is A B C or first.lead.
struct Ambiguity {
  std::size_t first = 0;
  std::size_t second = 0;
  Word word;
  std::size_t offset = 0;  // position of second.lead inside word
  bool inclusion = false;
};
std::vector<Ambiguity> find_overlaps(const RelationSet& r);
// Difference of the two one-step reductions of the ambiguity word.
Poly s_polynomial(const Ambiguity& a, const RelationSet& r);

struct GroebnerCheck {
  bool groebner = true;          // every checked S-polynomial reduced to 0
  bool conclusive = true;        // no ambiguity was skipped by the bound
  std::size_t ambiguities = 0;
  std::optional<Ambiguity> witness;
  Poly remainder;
};
GroebnerCheck is_groebner(const RelationSet& r, int degree_bound);

// Adds reduced S-polynomials until closed or the bound stops the search.
struct Completion {
  std::vector<Poly> relations;
  bool complete = false;  // false: inconclusive above the bound
};
Completion complete(const RelationSet& r, int degree_bound, std::size_t max_relations = 64);

// ------------------------------------------------------------------ syzygies

// coeff * left r^ right, where r^ marks the relation.
struct MarkedTerm {
  Word left;
  Rational coeff;
  Word right;
};
// coeff * (u r^ v r w - u r v r^ w).
struct TrivialSyzygy {
  Word u, v, w;
  Rational coeff;
};

// Element of the free bimodule on r^: left (x) right.
using Marked = std::map<std::pair<Word, Word>, Rational>;

Marked to_marked(const std::vector<MarkedTerm>& terms);
Marked to_marked(const std::vector<TrivialSyzygy>& terms, const Poly& r);
// sum coeff * left r right.
Poly evaluate(const std::vector<MarkedTerm>& terms, const Poly& r);

struct NotASyzygy : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DecompositionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes a syzygy of the single relation r as a combination of trivial
// syzygies by pushing right factors down to normal form.
std::vector<TrivialSyzygy> syzygy_decompose(const std::vector<MarkedTerm>& terms, const Poly& r,
                                            const MonomialOrder& order);

// ---------------------------------------------------------------- centralizer

struct CentralizerResult {
  bool central = true;
  Letter witness = 0;  // generator with NF([x, u]) != 0
  Poly commutator;     // that normal form
};
CentralizerResult centralizer_test(const Poly& u, const RelationSet& r, const std::vector<Letter>& generators);

// Dimension of {u : NF([x, u]) = 0 for all generators x} inside the span of
// normal words over `letters` of degree <= max_degree.
std::size_t centralizer_dimension(const RelationSet& r, const std::vector<Letter>& letters,
                                  const std::vector<Letter>& generators, int max_degree);

// ------------------------------------------------------------------ one-xi lift

// For a hat cycle u with exactly one xi, builds g = sum gamma_k (-1)^g(v_k)
// u_k xi v_k xi w_k with d_hat(g) = u from the syzygy decomposition.  Falls
// back to an exact linear solve if the decomposition does not verify.
struct LiftResult {
  Poly g;
  bool via_syzygy = false;
};
LiftResult lift_one_xi(const Poly& u, const Alphabet& a);

std::string render(const std::vector<TrivialSyzygy>& s, const Alphabet& a);

}  // namespace hch
