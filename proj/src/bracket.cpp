#include "hch/bracket.hpp"

#include <stdexcept>

namespace hch {

int lie_parity(const CyclicPoly& p) {
  int parity = -1;
  for (const auto& [w, c] : p) {
    int q = lie_parity(w);
    if (parity >= 0 && q != parity) throw std::invalid_argument("element is not homogeneous in parity");
    parity = q;
  }
  return parity < 0 ? 0 : parity;
}

namespace {

// Replaces delta slot k of f by g opened at the x-letter at position p of its
// segment j: the segment reads alpha x beta and the insert is
// beta T_{j+1} w_{j+1} ... T_j alpha.
Word splice(const std::vector<Word>& uf, std::size_t k, const std::vector<Word>& ug, std::size_t j, std::size_t p) {
  const std::size_t m = ug.size();
  const Word& seg = ug[j];  // label followed by the run
  Word alpha = seg.substr(1, p - 1), beta = seg.substr(p + 1);
  Word out;
  for (std::size_t i = 0; i < k; ++i) out += uf[i];
  out += beta;
  for (std::size_t s = 1; s < m; ++s) out += ug[(j + s) % m];
  out.push_back(seg[0]);
  out += alpha;
  out += uf[k].substr(1);
  for (std::size_t i = k + 1; i < uf.size(); ++i) out += uf[i];
  return out;
}

void compose_words(const Word& f, const Word& g, const Rational& c, Poly& out) {
  const std::vector<Word> uf = units(f), ug = units(g);
  for (std::size_t k = 0; k < uf.size(); ++k) {
    if (!is_delta(uf[k][0])) continue;
    const Letter target = xl(index_of(uf[k][0]));
    for (std::size_t j = 0; j < ug.size(); ++j) {
      const int sign = composition_sign(f, k, g, j);
      for (std::size_t p = 1; p < ug[j].size(); ++p)
        if (ug[j][p] == target) out.add(splice(uf, k, ug, j, p), c * sign);
    }
  }
}

}  // namespace

CyclicPoly necklace_compose(const CyclicPoly& a, const CyclicPoly& b) {
  Poly words;
  const Poly oa = expand(a), ob = expand(b);
  for (const auto& [f, cf] : oa)
    for (const auto& [g, cg] : ob) compose_words(f, g, cf * cg, words);
  return cyclize(words);
}

CyclicPoly necklace_bracket(const CyclicPoly& a, const CyclicPoly& b) {
  CyclicPoly out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      CyclicPoly A, B;
      A.add_class(u, cu);
      B.add_class(v, cv);
      out += necklace_compose(A, B);
      CyclicPoly back = necklace_compose(B, A);
      if (!((lie_parity(u) * lie_parity(v)) & 1)) back *= -1;
      out += back;
    }
  return out;
}

CyclicPoly jacobi_residual(const CyclicPoly& a, const CyclicPoly& b, const CyclicPoly& c) {
  auto sgn = [](const CyclicPoly& x, const CyclicPoly& y) {
    return ((lie_parity(x) * lie_parity(y)) & 1) ? Rational(-1) : Rational(1);
  };
  CyclicPoly r1 = necklace_bracket(a, necklace_bracket(b, c));
  CyclicPoly r2 = necklace_bracket(b, necklace_bracket(c, a));
  CyclicPoly r3 = necklace_bracket(c, necklace_bracket(a, b));
  r1 *= sgn(a, c);
  r2 *= sgn(b, a);
  r3 *= sgn(c, b);
  return r1 + r2 + r3;
}

CyclicPoly mc_residual(const CyclicPoly& m) { return necklace_bracket(m, m); }

CoherenceResult check_coherence(const CyclicPoly& a, const CyclicPoly& b, int max_degree, const Alphabet& alph) {
  const unsigned r = alph.size();
  Table full, noness;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      CyclicPoly A, B;
      A.add_class(u, cu);
      B.add_class(v, cv);
      const Poly oa = expand(A), ob = expand(B);
      const Rational s = ((lie_parity(u) * lie_parity(v)) & 1) ? -1 : 1;
      SplitTable ab = tabulate(compose(oa, ob), r, max_degree, alph);
      SplitTable ba = tabulate(compose(ob, oa), r, max_degree, alph);
      add_to(full, ab.essential);
      add_to(full, ab.nonessential);
      add_to(full, ba.essential, -s);
      add_to(full, ba.nonessential, -s);
      add_to(noness, ab.nonessential);
      add_to(noness, ba.nonessential, -s);
    }
  Table lhs = tabulate(expand(necklace_bracket(a, b)), r, max_degree, alph);
  Table rhs = symmetrize(full);
  CoherenceResult res;
  res.entries = lhs.size() + rhs.size();
  res.coherent = lhs == rhs;
  res.nonessential_cancel = symmetrize(noness).empty();
  return res;
}

// ------------------------------------------------------------ double brackets

bool is_two_delta(const CyclicPoly& m) {
  for (const auto& [w, c] : m) {
    Degrees d = degrees(w);
    if (d.deg_delta != 2 || d.deg_xi != 0) return false;
  }
  return !m.is_zero();
}

Tensor2 double_bracket(const CyclicPoly& m, const Word& a, const Word& b, const Alphabet& alph) {
  if (!is_two_delta(m)) throw std::invalid_argument("double bracket needs an element with two deltas and no xi");
  Tensor2 out;
  for (const auto& [o, c] : eval(m, Shape{true, true}, {a, b}, alph)) {
    Rational& v = out[{o[1], o[0]}];
    v += c;
    if (v == 0) out.erase({o[1], o[0]});
  }
  return out;
}

namespace {

template <class T, class K>
void acc(T& t, const K& k, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = t.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

std::vector<Word> monomials_up_to(unsigned r, int max_degree, bool with_empty) {
  std::vector<Word> out;
  if (with_empty) out.push_back(Word{});
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (unsigned i = 1; i <= r; ++i) next.push_back(w + xl(i));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

Tensor3 double_jacobi(const CyclicPoly& m, const Word& a, const Word& b, const Word& c, const Alphabet& alph) {
  Tensor3 out;
  // {{x, {{y, z}}}}_L rotated `shift` times by tau.
  auto term = [&](const Word& x, const Word& y, const Word& z, int shift) {
    for (const auto& [yz, c1] : double_bracket(m, y, z, alph))
      for (const auto& [xy, c2] : double_bracket(m, x, yz[0], alph)) {
        std::array<Word, 3> t{xy[0], xy[1], yz[1]};
        for (int s = 0; s < shift; ++s) t = {t[2], t[0], t[1]};
        acc(out, t, c1 * c2);
      }
  };
  term(a, b, c, 0);
  term(b, c, a, 1);
  term(c, a, b, 2);
  return out;
}

DoublePoissonReport check_double_poisson(const CyclicPoly& m, unsigned r, int max_degree, const Alphabet& alph) {
  DoublePoissonReport rep;
  const std::vector<Word> mons = monomials_up_to(r, max_degree, false);
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && rep.first_failure.empty()) rep.first_failure = what;
    flag = false;
  };
  for (const Word& a : mons)
    for (const Word& b : mons) {
      ++rep.pairs;
      Tensor2 ab = double_bracket(m, a, b, alph);
      Tensor2 ba = double_bracket(m, b, a, alph);
      Tensor2 sum = ab;
      for (const auto& [k, c] : ba) acc(sum, std::array<Word, 2>{k[1], k[0]}, c);
      if (!sum.empty()) fail(rep.antisymmetry, "antisymmetry at (" + render(a, alph) + ", " + render(b, alph) + ")");
    }
  for (const Word& a : mons)
    for (const Word& b : mons)
      for (const Word& c : mons) {
        ++rep.triples;
        Tensor2 lhs = double_bracket(m, a, b + c, alph);
        for (const auto& [k, v] : double_bracket(m, a, c, alph)) acc(lhs, std::array<Word, 2>{b + k[0], k[1]}, -v);
        for (const auto& [k, v] : double_bracket(m, a, b, alph)) acc(lhs, std::array<Word, 2>{k[0], k[1] + c}, -v);
        if (!lhs.empty()) fail(rep.leibniz, "Leibniz at (" + render(a, alph) + ", " + render(b, alph) + render(c, alph) + ")");
        if (!double_jacobi(m, a, b, c, alph).empty())
          fail(rep.jacobi, "Jacobi at (" + render(a, alph) + ", " + render(b, alph) + ", " + render(c, alph) + ")");
      }
  return rep;
}

std::string render(const Tensor2& t, const Alphabet& a) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += " + ";
    s += render_rational(c) + " * " + render(k[0], a) + " (x) " + render(k[1], a);
  }
  return s;
}

std::string render(const Tensor3& t, const Alphabet& a) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += " + ";
    s += render_rational(c) + " * " + render(k[0], a) + " (x) " + render(k[1], a) + " (x) " + render(k[2], a);
  }
  return s;
}

}  // namespace hch
