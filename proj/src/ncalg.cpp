#include "hch/ncalg.hpp"

#include "hch/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hch {

Degrees degrees(const Word& w) {
  Degrees d;
  for (Letter l : w) {
    switch (kind_of(l)) {
      case Kind::Xi: ++d.deg_xi; break;
      case Kind::Delta: ++d.deg_delta; break;
      case Kind::X: ++d.deg_x; break;
    }
  }
  return d;
}

int delta_count(const Word& w, std::size_t end) {
  int n = 0;
  for (std::size_t i = 0; i < end && i < w.size(); ++i) n += is_delta(w[i]) ? 1 : 0;
  return n;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(unsigned r) : n_(r) {
  if (r == 0 || r > 4000) throw std::invalid_argument("alphabet size must be in 1..4000");
}

Alphabet::Alphabet(std::shared_ptr<const Quiver> q) : n_(q->num_generators()), quiver_(std::move(q)) {}

std::string Alphabet::letter_name(Letter l) const {
  switch (kind_of(l)) {
    case Kind::Xi: return "xi";
    case Kind::Delta: return "d" + std::to_string(index_of(l));
    case Kind::X: return "x" + std::to_string(index_of(l));
  }
  return "?";
}

void Alphabet::check(Letter l) const {
  if (kind_of(l) == Kind::Xi) return;
  unsigned i = index_of(l);
  if (i < 1 || i > n_) throw ParseError("generator index out of range: " + letter_name(l));
}

Letter Alphabet::parse_token(std::string_view tok) const {
  if (tok == "xi") return kXi;
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'd'))
    throw ParseError("unknown token '" + std::string(tok) + "'");
  unsigned idx = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("unknown token '" + std::string(tok) + "'");
    idx = idx * 10 + static_cast<unsigned>(tok[i] - '0');
    if (idx > 4095) throw ParseError("index too large in '" + std::string(tok) + "'");
  }
  Letter l = make_letter(tok[0] == 'x' ? Kind::X : Kind::Delta, idx);
  check(l);
  return l;
}

std::vector<Word> normalize(const Word& w, const Alphabet& a, RunMode mode) {
  if (!a.quiver_mode()) return {w};
  return normalize_quiver(w, *a.quiver(), mode);
}

// -------------------------------------------------------------------- Poly

Poly Poly::monomial(const Word& w, const Rational& c) {
  Poly p;
  p.add(w, c);
  return p;
}

void Poly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Rational Poly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Rational& c, Poly p) { return p *= c; }

Poly multiply(const Poly& a, const Poly& b, const Alphabet& alph) {
  Poly out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      Rational c = cu * cv;
      for (const Word& w : normalize(u + v, alph, RunMode::Linear)) out.add(w, c);
    }
  return out;
}

Poly normalize(const Poly& p, const Alphabet& alph, RunMode mode) {
  if (!alph.quiver_mode()) return p;
  Poly out;
  for (const auto& [w, c] : p)
    for (const Word& n : normalize(w, alph, mode)) out.add(n, c);
  return out;
}

// ----------------------------------------------------------------- text I/O

std::string render_rational(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string render(const Word& w, const Alphabet& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += a.letter_name(w[i]);
  }
  return s + ")";
}

namespace {

std::string render_cyclic_word(const Word& w, const Alphabet& a) {
  std::string s = "(";
  for (Letter l : w) s += " " + a.letter_name(l);
  return s + " )";
}

template <class Terms, class F>
std::string render_terms(const Terms& terms, F&& word_fn) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) s += " + ";
    first = false;
    s += render_rational(c) + " * " + word_fn(w);
  }
  return s;
}

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
  }
};

Rational parse_rational_at(Cursor& c) {
  c.skip();
  std::size_t b = c.i;
  while (c.i < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/')) ++c.i;
  if (b == c.i) c.fail("expected a coefficient");
  Rational q;
  if (q.set_str(std::string(c.s.substr(b, c.i - b)), 10) != 0) c.fail("bad coefficient");
  if (q.get_den() == 0) c.fail("zero denominator");
  q.canonicalize();
  return q;
}

Word parse_paren_word(Cursor& c, const Alphabet& a) {
  if (!c.eat('(')) c.fail("expected '('");
  Word w;
  for (;;) {
    c.skip();
    if (c.eat(')')) return w;
    std::size_t b = c.i;
    while (c.i < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[c.i])))) ++c.i;
    if (b == c.i) c.fail("expected a token");
    w.push_back(a.parse_token(c.s.substr(b, c.i - b)));
  }
}

template <class Add>
void parse_sum(std::string_view s, const Alphabet& a, Add&& add) {
  Cursor c{s};
  if (c.done()) c.fail("empty expression");
  if (c.peek() == '0') {
    Cursor probe = c;
    ++probe.i;
    if (probe.done()) return;
  }
  bool first = true;
  while (!c.done()) {
    Rational sign = 1;
    if (!first) {
      if (c.eat('-')) sign = -1;
      else if (!c.eat('+')) c.fail("expected '+' or '-'");
    }
    while (c.peek() == '-' || c.peek() == '+') {
      if (c.eat('-')) sign = -sign;
      else c.eat('+');
    }
    first = false;
    Rational coef = 1;
    if (c.peek() != '(') {
      coef = parse_rational_at(c);
      if (!c.eat('*')) {
        add(Word{}, sign * coef);
        continue;
      }
    }
    add(parse_paren_word(c, a), sign * coef);
  }
}

}  // namespace

std::string render(const Poly& p, const Alphabet& a) {
  return render_terms(p.terms(), [&](const Word& w) { return render(w, a); });
}

Word parse_word(std::string_view s, const Alphabet& a) {
  Cursor c{s};
  if (c.peek() != '(') {
    // bare token list
    std::string wrapped = "(" + std::string(s) + ")";
    Cursor d{wrapped};
    Word w = parse_paren_word(d, a);
    if (!d.done()) d.fail("trailing input");
    return w;
  }
  Word w = parse_paren_word(c, a);
  if (!c.done()) c.fail("trailing input");
  return w;
}

Poly parse_poly(std::string_view s, const Alphabet& a) {
  Poly p;
  parse_sum(s, a, [&](const Word& w, const Rational& c) { p.add(w, c); });
  return p;
}

// --------------------------------------------------------- rotation, cyclic

std::vector<Word> units(const Word& w) {
  std::vector<Word> us;
  for (Letter l : w) {
    if (is_label(l)) us.emplace_back(1, l);
    else if (us.empty()) throw std::invalid_argument("word does not start with a label");
    else us.back().push_back(l);
  }
  return us;
}

Word to_tilde_form(const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && !is_label(w[i])) ++i;
  if (i == w.size()) throw std::invalid_argument("word has no label");
  return w.substr(i) + w.substr(0, i);
}

Rotation rotate_units(const Word& w, std::size_t j) {
  if (j == 0) return {w, 1};
  std::size_t pos = 0, seen = 0;
  for (; pos < w.size(); ++pos) {
    if (is_label(w[pos])) {
      if (seen == j) break;
      ++seen;
    }
  }
  int a = delta_count(w, pos);
  int b = delta_count(w) - a;
  return {w.substr(pos) + w.substr(0, pos), ((a * b) & 1) ? -1 : 1};
}

CyclicCanon cyclic_canonicalize(const Word& w0) {
  Word w = to_tilde_form(w0);
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (is_label(w[i])) starts.push_back(i);
  const int total_delta = delta_count(w);
  CyclicCanon out;
  out.length = static_cast<int>(starts.size());
  out.canonical = w;
  out.stabilizer = 0;
  int prefix_delta = 0;
  for (std::size_t j = 0; j < starts.size(); ++j) {
    std::size_t pos = starts[j];
    if (j > 0) prefix_delta += delta_count(w.substr(starts[j - 1], pos - starts[j - 1]));
    int sign = ((prefix_delta * (total_delta - prefix_delta)) & 1) ? -1 : 1;
    Word r = w.substr(pos) + w.substr(0, pos);
    if (r == w) {
      ++out.stabilizer;
      if (sign < 0) out.vanishing = true;
    }
    if (j == 0 || r < out.canonical) {
      out.canonical = std::move(r);
      out.sign = sign;
    }
  }
  return out;
}

void CyclicPoly::add_class(const Word& canonical, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(canonical, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CyclicPoly::add_word(const Word& w, const Rational& c) {
  CyclicCanon cc = cyclic_canonicalize(w);
  if (cc.vanishing) return;
  add_class(cc.canonical, cc.sign * c);
}

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& o) {
  for (const auto& [w, c] : o.terms_) add_class(w, c);
  return *this;
}

CyclicPoly& CyclicPoly::operator-=(const CyclicPoly& o) {
  for (const auto& [w, c] : o.terms_) add_class(w, -c);
  return *this;
}

CyclicPoly& CyclicPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Rational CyclicPoly::coeff(const Word& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }

CyclicPoly cyclize(const Poly& p) {
  CyclicPoly out;
  for (const auto& [w, c] : p) {
    CyclicCanon cc = cyclic_canonicalize(w);
    if (cc.vanishing) continue;
    out.add_class(cc.canonical, c * cc.sign * (Rational(cc.stabilizer) / cc.length));
  }
  return out;
}

Poly orbit_sum(const Word& canonical) {
  CyclicCanon cc = cyclic_canonicalize(canonical);
  Poly out;
  if (cc.vanishing) return out;
  const int distinct = cc.length / cc.stabilizer;
  for (int j = 0; j < distinct; ++j) {
    Rotation r = rotate_units(cc.canonical, static_cast<std::size_t>(j));
    out.add(r.word, r.sign);
  }
  return out;
}

Poly expand(const CyclicPoly& c) {
  Poly out;
  for (const auto& [w, k] : c) {
    Poly o = orbit_sum(w);
    o *= k;
    out += o;
  }
  return out;
}

std::string render(const CyclicPoly& p, const Alphabet& a) {
  return render_terms(p.terms(), [&](const Word& w) { return render_cyclic_word(w, a); });
}

CyclicPoly parse_cyclic(std::string_view s, const Alphabet& a) {
  CyclicPoly p;
  parse_sum(s, a, [&](const Word& w, const Rational& c) {
    if (w.empty()) throw ParseError("cyclic words need at least one label");
    p.add_word(w, c);
  });
  return p;
}

// ------------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(std::vector<Letter> priority) : priority_(std::move(priority)) {
  int n = static_cast<int>(priority_.size());
  for (int i = 0; i < n; ++i) {
    if (!rank_.emplace(priority_[static_cast<std::size_t>(i)], n - i).second)
      throw std::invalid_argument("repeated letter in monomial order");
  }
}

MonomialOrder MonomialOrder::delta_first(unsigned n) {
  std::vector<Letter> p;
  for (unsigned i = 1; i <= n; ++i) p.push_back(dl(i));
  for (unsigned i = 1; i <= n; ++i) p.push_back(xl(i));
  p.push_back(kXi);
  return MonomialOrder(std::move(p));
}

MonomialOrder MonomialOrder::x_first(unsigned n) {
  std::vector<Letter> p;
  for (unsigned i = 1; i <= n; ++i) p.push_back(xl(i));
  for (unsigned i = 1; i <= n; ++i) p.push_back(dl(i));
  p.push_back(kXi);
  return MonomialOrder(std::move(p));
}

int MonomialOrder::rank(Letter l) const {
  auto it = rank_.find(l);
  if (it == rank_.end()) throw std::invalid_argument("letter missing from monomial order");
  return it->second;
}

bool MonomialOrder::less(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    return rank(u[i]) < rank(v[i]);
  }
  return false;
}

std::pair<Word, Rational> leading(const Poly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = p.begin();
  for (auto it = std::next(p.begin()); it != p.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

}  // namespace hch
