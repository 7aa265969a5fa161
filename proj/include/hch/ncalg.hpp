// Noncommutative polynomials in the letters xi, delta_i, x_i.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hch {

using Rational = mpq_class;

class Quiver;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Letter order is xi < delta_1 < ... < delta_n < x_1 < ... < x_n, which is the
// numeric order of the packed code.
enum class Kind : std::uint8_t { Xi = 0, Delta = 1, X = 2 };

using Letter = char16_t;
using Word = std::u16string;

constexpr Letter make_letter(Kind k, unsigned index) {
  return static_cast<Letter>((static_cast<unsigned>(k) << 12) | (index & 0x0FFFu));
}
constexpr Kind kind_of(Letter l) { return static_cast<Kind>(l >> 12); }
constexpr unsigned index_of(Letter l) { return l & 0x0FFFu; }
constexpr bool is_label(Letter l) { return kind_of(l) != Kind::X; }
constexpr bool is_delta(Letter l) { return kind_of(l) == Kind::Delta; }
constexpr bool is_xi(Letter l) { return kind_of(l) == Kind::Xi; }

constexpr Letter kXi = make_letter(Kind::Xi, 0);
constexpr Letter xl(unsigned i) { return make_letter(Kind::X, i); }
constexpr Letter dl(unsigned i) { return make_letter(Kind::Delta, i); }

struct Degrees {
  int deg_x = 0;
  int deg_delta = 0;
  int deg_xi = 0;
  int weight() const { return deg_delta + deg_xi; }
  int offset() const { return deg_x - deg_delta; }
};

Degrees degrees(const Word& w);
// Number of delta letters in w[0, end).
int delta_count(const Word& w, std::size_t end);
inline int delta_count(const Word& w) { return delta_count(w, w.size()); }

// Alphabet of generators 1..n.  In quiver mode the generators are the
// vertices followed by the arrows, and runs of x-letters are path products.
class Alphabet {
 public:
  explicit Alphabet(unsigned r);
  explicit Alphabet(std::shared_ptr<const Quiver> q);

  unsigned size() const { return n_; }
  bool quiver_mode() const { return quiver_ != nullptr; }
  const Quiver* quiver() const { return quiver_.get(); }
  std::shared_ptr<const Quiver> quiver_ptr() const { return quiver_; }

  std::string letter_name(Letter l) const;
  Letter parse_token(std::string_view tok) const;
  void check(Letter l) const;

 private:
  unsigned n_;
  std::shared_ptr<const Quiver> quiver_;
};

// How runs of x-letters are read in quiver mode.  Linear words carry a run
// before the first label; tilde words start with a label and their last run
// wraps around.
enum class RunMode { Linear, Tilde };

// Rewrites a word into path-normal form.  Free mode returns {w}.  In quiver
// mode every run becomes a nonzero basis path; empty runs expand into the sum
// over vertex idempotents and non-composable runs vanish.
std::vector<Word> normalize(const Word& w, const Alphabet& a, RunMode mode);

class Poly {
 public:
  using Terms = std::map<Word, Rational>;

  Poly() = default;
  static Poly monomial(const Word& w, const Rational& c = 1);

  void add(const Word& w, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  Terms terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Rational& c, Poly p);
// Concatenation product; in quiver mode the result is path-normalized.
Poly multiply(const Poly& a, const Poly& b, const Alphabet& alph);
Poly normalize(const Poly& p, const Alphabet& alph, RunMode mode);

// Words are written as "(d1 x2 xi)", cyclic words as "( d1 x2 xi )".
std::string render(const Word& w, const Alphabet& a);
std::string render(const Poly& p, const Alphabet& a);
Word parse_word(std::string_view s, const Alphabet& a);
Poly parse_poly(std::string_view s, const Alphabet& a);
std::string render_rational(const Rational& q);

// Rotation units of a word that starts with a label: the label together with
// the x-run that follows it.
std::vector<Word> units(const Word& w);
// Moves a leading x-run to the end so that the word starts with a label.
Word to_tilde_form(const Word& w);

// Signed rotation by j units.  The sign is Koszul with delta units odd:
// moving a block with a delta letters past a block with b gives (-1)^(ab).
struct Rotation {
  Word word;
  int sign;
};
Rotation rotate_units(const Word& w, std::size_t j);

struct CyclicCanon {
  Word canonical;
  int sign = 1;        // w = sign * canonical in the cyclic quotient
  bool vanishing = false;
  int stabilizer = 1;  // number of unit rotations fixing the word
  int length = 0;      // number of units
};
CyclicCanon cyclic_canonicalize(const Word& w);

// A cyclic class with coefficient c stands for c times the signed orbit sum
// over the distinct rotations of its canonical word.
class CyclicPoly {
 public:
  using Terms = std::map<Word, Rational>;

  void add_class(const Word& canonical, const Rational& c);
  void add_word(const Word& w, const Rational& c);  // canonicalizes
  CyclicPoly& operator+=(const CyclicPoly& o);
  CyclicPoly& operator-=(const CyclicPoly& o);
  CyclicPoly& operator*=(const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& canonical) const;
  bool operator==(const CyclicPoly& o) const { return terms_ == o.terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  Terms terms_;
};

CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b);
CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b);

// Projector P = (1/N) sum_j sigma^j, expressed on classes.
CyclicPoly cyclize(const Poly& p);
// Orbit sums back in the tilde space.
Poly expand(const CyclicPoly& c);
Poly orbit_sum(const Word& canonical);

std::string render(const CyclicPoly& p, const Alphabet& a);
CyclicPoly parse_cyclic(std::string_view s, const Alphabet& a);

// Degree-lexicographic order: shorter words are smaller, equal lengths are
// compared left to right by letter priority (earlier in the list is larger).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<Letter> priority);
  static MonomialOrder delta_first(unsigned n);
  static MonomialOrder x_first(unsigned n);

  // true if u < v
  bool less(const Word& u, const Word& v) const;
  int rank(Letter l) const;
  const std::vector<Letter>& priority() const { return priority_; }

 private:
  std::vector<Letter> priority_;
  std::map<Letter, int> rank_;
};

// Leading word and coefficient; throws on the zero polynomial.
std::pair<Word, Rational> leading(const Poly& p, const MonomialOrder& ord);

}  // namespace hch
