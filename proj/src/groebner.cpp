#include "hch/groebner.hpp"

#include "hch/complex.hpp"
#include "hch/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hch {

RelationSet::RelationSet(const std::vector<Poly>& relations, MonomialOrder order, Filter admissible)
    : order_(std::move(order)), filter_(std::move(admissible)) {
  for (const Poly& p0 : relations) {
    Poly p;
    for (const auto& [w, c] : p0)
      if (!filter_ || filter_(w)) p.add(w, c);
    if (p.is_zero()) continue;
    auto [lead, lc] = leading(p, order_);
    p *= 1 / lc;
    Relation r;
    r.lead = lead;
    r.tail = p;
    r.tail.add(lead, -1);
    r.poly = std::move(p);
    rels_.push_back(std::move(r));
  }
}

namespace {

Poly delta_poly(unsigned r) {
  Poly d;
  for (unsigned i = 1; i <= r; ++i) {
    d.add(Word{dl(i), xl(i)}, 1);
    d.add(Word{xl(i), dl(i)}, -1);
  }
  return d;
}

}  // namespace

RelationSet delta_relations(unsigned r, const MonomialOrder& order) { return RelationSet({delta_poly(r)}, order); }

MonomialOrder extended_x_first_order(const ExtendedQuiver& q) {
  const unsigned n = q.num_generators();
  const unsigned nv = q.base().num_vertices();
  std::vector<Letter> pr;
  for (unsigned g = 1; g <= n; ++g) pr.push_back(xl(g));
  for (unsigned v = 1; v < nv; ++v)
    for (unsigned g = 1; g <= n; ++g) pr.push_back(q.petal(g, v));
  for (unsigned g = 1; g <= n; ++g) pr.push_back(q.petal(g, 0));
  return MonomialOrder(std::move(pr));
}

RelationSet extended_quiver_relations(const ExtendedQuiver& q, bool x_first) {
  std::vector<Poly> rels{q.delta_prime()};
  for (Poly& p : q.identification_relations()) rels.push_back(std::move(p));
  auto filter = [&q](const Word& w) { return q.composable(w); };
  return RelationSet(rels, x_first ? extended_x_first_order(q) : q.order(), filter);
}

// ------------------------------------------------------------------ reduction

std::optional<Occurrence> find_reducible(const Word& w, const RelationSet& r) {
  const auto& rels = r.relations();
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const Word& l = rels[i].lead;
      if (l.size() <= w.size() - pos && w.compare(pos, l.size(), l) == 0) return Occurrence{pos, i};
    }
  return std::nullopt;
}

bool is_normal(const Word& w, const RelationSet& r) { return !find_reducible(w, r).has_value(); }

Poly normal_form(const Poly& p, const RelationSet& r) {
  const MonomialOrder& ord = r.order();
  auto desc = [&ord](const Word& a, const Word& b) { return ord.less(b, a); };
  std::map<Word, Rational, decltype(desc)> work(desc);
  auto push = [&](const Word& w, const Rational& c) {
    if (c == 0 || !r.admissible(w)) return;
    Rational& x = work[w];
    x += c;
    if (x == 0) work.erase(w);
  };
  for (const auto& [w, c] : p) push(w, c);
  Poly out;
  while (!work.empty()) {
    auto it = work.begin();
    const Word w = it->first;
    const Rational c = it->second;
    work.erase(it);
    auto occ = find_reducible(w, r);
    if (!occ) {
      out.add(w, c);
      continue;
    }
    const Relation& rel = r.relations()[occ->rel];
    const Word head = w.substr(0, occ->pos), rest = w.substr(occ->pos + rel.lead.size());
    for (const auto& [t, ct] : rel.tail) push(head + t + rest, -c * ct);
  }
  return out;
}

// ---------------------------------------------------------------- ambiguities

std::vector<Ambiguity> find_overlaps(const RelationSet& r) {
  std::vector<Ambiguity> out;
  const auto& rels = r.relations();
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < rels.size(); ++j) {
      const Word& a = rels[i].lead;
      const Word& b = rels[j].lead;
      for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
        Ambiguity amb{i, j, a + b.substr(k), a.size() - k, false};
        if (r.admissible(amb.word)) out.push_back(std::move(amb));
      }
      if (i != j && b.size() <= a.size())
        for (std::size_t p = 0; p + b.size() <= a.size(); ++p)
          if (a.compare(p, b.size(), b) == 0) out.push_back(Ambiguity{i, j, a, p, true});
    }
  return out;
}

Poly s_polynomial(const Ambiguity& amb, const RelationSet& r) {
  const Relation& f = r.relations()[amb.first];
  const Relation& g = r.relations()[amb.second];
  Poly s;
  const Word after_f = amb.word.substr(f.lead.size());
  for (const auto& [t, c] : f.tail) {
    Word w = t + after_f;
    if (r.admissible(w)) s.add(w, -c);
  }
  const Word before = amb.word.substr(0, amb.offset), after = amb.word.substr(amb.offset + g.lead.size());
  for (const auto& [t, c] : g.tail) {
    Word w = before + t + after;
    if (r.admissible(w)) s.add(w, c);
  }
  return s;
}

GroebnerCheck is_groebner(const RelationSet& r, int degree_bound) {
  GroebnerCheck res;
  for (const Ambiguity& a : find_overlaps(r)) {
    if (static_cast<int>(a.word.size()) > degree_bound) {
      res.conclusive = false;
      continue;
    }
    ++res.ambiguities;
    Poly nf = normal_form(s_polynomial(a, r), r);
    if (!nf.is_zero()) {
      res.groebner = false;
      if (!res.witness) {
        res.witness = a;
        res.remainder = std::move(nf);
      }
    }
  }
  return res;
}

Completion complete(const RelationSet& r0, int degree_bound, std::size_t max_relations) {
  Completion c;
  for (const Relation& rel : r0.relations()) c.relations.push_back(rel.poly);
  for (;;) {
    RelationSet r(c.relations, r0.order(), r0.filter());
    bool added = false, skipped = false;
    for (const Ambiguity& a : find_overlaps(r)) {
      if (static_cast<int>(a.word.size()) > degree_bound) {
        skipped = true;
        continue;
      }
      Poly nf = normal_form(s_polynomial(a, r), r);
      if (nf.is_zero()) continue;
      c.relations.push_back(std::move(nf));
      added = true;
      break;
    }
    if (!added) {
      c.complete = !skipped;
      return c;
    }
    if (c.relations.size() >= max_relations) return c;
  }
}

// ------------------------------------------------------------------ syzygies

Marked to_marked(const std::vector<MarkedTerm>& terms) {
  Marked m;
  for (const auto& t : terms) {
    Rational& x = m[{t.left, t.right}];
    x += t.coeff;
  }
  std::erase_if(m, [](const auto& e) { return e.second == 0; });
  return m;
}

Marked to_marked(const std::vector<TrivialSyzygy>& terms, const Poly& r) {
  Marked m;
  for (const auto& t : terms)
    for (const auto& [s, c] : r) {
      m[{t.u, t.v + s + t.w}] += t.coeff * c;
      m[{t.u + s + t.v, t.w}] -= t.coeff * c;
    }
  std::erase_if(m, [](const auto& e) { return e.second == 0; });
  return m;
}

Poly evaluate(const std::vector<MarkedTerm>& terms, const Poly& r) {
  Poly out;
  for (const auto& t : terms)
    for (const auto& [s, c] : r) out.add(t.left + s + t.right, t.coeff * c);
  return out;
}

std::vector<TrivialSyzygy> syzygy_decompose(const std::vector<MarkedTerm>& terms, const Poly& r,
                                            const MonomialOrder& order) {
  if (!evaluate(terms, r).is_zero()) throw NotASyzygy("terms do not evaluate to zero");
  if (terms.empty()) return {};
  const auto [lead, lc] = leading(r, order);
  Poly tail = r;
  tail.add(lead, -lc);

  auto desc = [&order](const Word& a, const Word& b) { return order.less(b, a); };
  std::map<Word, std::map<Word, Rational>, decltype(desc)> work(desc);  // right -> left -> coeff
  for (const auto& t : terms) work[t.right][t.left] += t.coeff;

  std::vector<TrivialSyzygy> out;
  Marked remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Word b = it->first;
    std::map<Word, Rational> lefts = std::move(it->second);
    work.erase(it);
    const std::size_t p = b.find(lead);
    if (p == Word::npos) {
      for (const auto& [a, c] : lefts)
        if (c != 0) remainder[{a, b}] += c;
      continue;
    }
    const Word b1 = b.substr(0, p), b2 = b.substr(p + lead.size());
    for (const auto& [a, c] : lefts) {
      if (c == 0) continue;
      const Rational g = c / lc;
      out.push_back({a, b1, b2, g});
      for (const auto& [s, cs] : r) work[b2][a + s + b1] += g * cs;
      for (const auto& [s, cs] : tail) work[b1 + s + b2][a] -= g * cs;
    }
  }
  std::erase_if(remainder, [](const auto& e) { return e.second == 0; });
  if (!remainder.empty()) throw DecompositionFailure("normal right factors left a nonzero remainder");
  return out;
}

// ---------------------------------------------------------------- centralizer

namespace {

Poly commutator(Letter x, const Poly& u) {
  Poly c;
  for (const auto& [w, k] : u) {
    c.add(Word(1, x) + w, k);
    c.add(w + Word(1, x), -k);
  }
  return c;
}

}  // namespace

CentralizerResult centralizer_test(const Poly& u, const RelationSet& r, const std::vector<Letter>& generators) {
  CentralizerResult res;
  for (Letter x : generators) {
    Poly nf = normal_form(commutator(x, u), r);
    if (!nf.is_zero()) {
      res.central = false;
      res.witness = x;
      res.commutator = std::move(nf);
      return res;
    }
  }
  return res;
}

std::size_t centralizer_dimension(const RelationSet& r, const std::vector<Letter>& letters,
                                  const std::vector<Letter>& generators, int max_degree) {
  std::vector<Word> basis{Word{}};
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Letter l : letters) {
        Word v = w + l;
        if (r.admissible(v) && is_normal(v, r)) next.push_back(std::move(v));
      }
    basis.insert(basis.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::map<std::pair<std::size_t, Word>, std::size_t> rows;
  SparseMatQ m;
  m.cols = basis.size();
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (const auto& [w, c] : normal_form(commutator(generators[i], Poly::monomial(basis[j])), r)) {
        auto [it, _] = rows.try_emplace({i, w}, rows.size());
        m.entries.emplace_back(it->second, j, c);
      }
  m.rows = rows.size();
  return basis.size() - rank(m);
}

// ------------------------------------------------------------------ one-xi lift

LiftResult lift_one_xi(const Poly& u, const Alphabet& a) {
  if (a.quiver_mode()) throw std::invalid_argument("lift_one_xi works over free algebras");
  if (!diff_hat(u, a).is_zero()) throw std::invalid_argument("element is not a cycle");
  LiftResult res;
  if (u.is_zero()) {
    res.via_syzygy = true;
    return res;
  }
  std::vector<MarkedTerm> terms;
  for (const auto& [w, c] : u) {
    const std::size_t p = w.find(kXi);
    if (p == Word::npos || w.find(kXi, p + 1) != Word::npos)
      throw std::invalid_argument("every word must contain exactly one xi");
    const Word left = w.substr(0, p);
    terms.push_back({left, (delta_count(left) & 1) ? Rational(-c) : c, w.substr(p + 1)});
  }
  Poly delta;
  for (unsigned i = 1; i <= a.size(); ++i) {
    delta.add(Word{dl(i), xl(i)}, 1);
    delta.add(Word{xl(i), dl(i)}, -1);
  }
  try {
    Poly g;
    for (const auto& s : syzygy_decompose(terms, delta, MonomialOrder::delta_first(a.size()))) {
      Word w = s.u;
      w.push_back(kXi);
      w += s.v;
      w.push_back(kXi);
      w += s.w;
      g.add(w, (delta_count(s.v) & 1) ? Rational(-s.coeff) : s.coeff);
    }
    if (diff_hat(g, a) == u) {
      res.g = std::move(g);
      res.via_syzygy = true;
      return res;
    }
  } catch (const DecompositionFailure&) {
  }
  PreimageResult pre = solve_preimage(u, a, Variant::Hat);
  if (!pre.exact) throw DecompositionFailure("cycle is not a boundary");
  res.g = std::move(pre.preimage);
  return res;
}

std::string render(const std::vector<TrivialSyzygy>& s, const Alphabet& a) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : s) {
    if (!out.empty()) out += " + ";
    out += render_rational(t.coeff) + " * [" + render(t.u, a) + ", " + render(t.v, a) + ", " + render(t.w, a) + "]";
  }
  return out;
}

}  // namespace hch
