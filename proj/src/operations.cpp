#include "hch/operations.hpp"

#include "hch/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace hch {

namespace {

// Letters carry an origin tag so that compositions can tell which letter a
// slot glued to.
enum Origin : std::uint8_t { kInput = 0, kInner = 1, kOuter = 2 };

struct Tagged {
  Word w;
  std::vector<std::uint8_t> tag;
  Tagged() = default;
  Tagged(Word word, std::uint8_t t) : w(std::move(word)), tag(w.size(), t) {}
  void append(const Tagged& o) {
    w += o.w;
    tag.insert(tag.end(), o.tag.begin(), o.tag.end());
  }
  Tagged slice(std::size_t b, std::size_t e) const {
    Tagged s;
    s.w = w.substr(b, e - b);
    s.tag.assign(tag.begin() + static_cast<std::ptrdiff_t>(b), tag.begin() + static_cast<std::ptrdiff_t>(e));
    return s;
  }
};

// Calls cb(outputs, glue_origin) once per combination of factorizations.
// `inputs` is indexed by unit; entries at xi units are ignored.
template <class Cb>
void eval_core(const std::vector<Word>& us, const std::vector<Tagged>& inputs, std::uint8_t own, Cb&& cb) {
  const std::size_t n = us.size();
  struct Cut {
    Tagged left, right;
    std::uint8_t origin;
  };
  std::vector<std::vector<Cut>> cuts(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_delta(us[k][0])) {
      cuts[k].push_back({{}, {}, kInput});
      continue;
    }
    const Letter target = xl(index_of(us[k][0]));
    const Tagged& u = inputs[k];
    for (std::size_t p = 0; p < u.w.size(); ++p)
      if (u.w[p] == target) cuts[k].push_back({u.slice(0, p), u.slice(p + 1, u.w.size()), u.tag[p]});
    if (cuts[k].empty()) return;
  }
  std::vector<Tagged> segs(n);
  for (std::size_t k = 0; k < n; ++k) segs[k] = Tagged(us[k].substr(1), own);
  std::vector<std::size_t> pick(n, 0);
  std::vector<Tagged> outs(n);
  std::vector<std::uint8_t> glue(n);
  for (;;) {
    for (std::size_t k = 0; k < n; ++k) {
      const Cut& c = cuts[k][pick[k]];
      outs[k] = c.left;
      outs[k].append(segs[k]);
      outs[k].append(cuts[(k + 1) % n][pick[(k + 1) % n]].right);
      glue[k] = c.origin;
    }
    cb(outs, glue);
    std::size_t k = 0;
    while (k < n && ++pick[k] == cuts[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
}

std::vector<Tagged> place_inputs(const std::vector<Word>& us, const std::vector<Word>& inputs) {
  std::vector<Tagged> placed(us.size());
  std::size_t next = 0;
  for (std::size_t k = 0; k < us.size(); ++k) {
    if (!is_delta(us[k][0])) continue;
    if (next >= inputs.size()) throw std::invalid_argument("too few inputs for the word");
    placed[k] = Tagged(inputs[next++], kInput);
  }
  if (next != inputs.size()) throw std::invalid_argument("too many inputs for the word");
  return placed;
}

// Path-normalizes outputs in quiver mode; false if some output vanishes.
bool normalize_outputs(std::vector<Word>& outs, const Alphabet& a) {
  if (!a.quiver_mode()) return true;
  for (Word& o : outs) {
    if (o.empty()) continue;
    RunValue rv = evaluate_run(*a.quiver(), o);
    if (!rv.path) return false;
    o = path_letters(*a.quiver(), *rv.path);
  }
  return true;
}

}  // namespace

Shape shape_of(const Word& w) {
  Shape s;
  for (Letter l : w)
    if (is_label(l)) s.push_back(is_delta(l));
  return s;
}

Tensor eval(const Word& w0, const std::vector<Word>& inputs, const Alphabet& a) {
  const Word w = to_tilde_form(w0);
  const std::vector<Word> us = units(w);
  Tensor out;
  eval_core(us, place_inputs(us, inputs), kOuter, [&](const std::vector<Tagged>& outs, const auto&) {
    std::vector<Word> o;
    o.reserve(outs.size());
    for (const Tagged& t : outs) o.push_back(t.w);
    if (!normalize_outputs(o, a)) return;
    Rational& c = out[o];
    c += 1;
    if (c == 0) out.erase(o);
  });
  return out;
}

Tensor eval(const Poly& p, const Shape& shape, const std::vector<Word>& inputs, const Alphabet& a) {
  Tensor out;
  for (const auto& [w, c] : p) {
    if (shape_of(to_tilde_form(w)) != shape) continue;
    for (const auto& [o, k] : eval(w, inputs, a)) {
      Rational& v = out[o];
      v += c * k;
      if (v == 0) out.erase(o);
    }
  }
  return out;
}

Tensor eval(const CyclicPoly& p, const Shape& shape, const std::vector<Word>& inputs, const Alphabet& a) {
  return eval(expand(p), shape, inputs, a);
}

int lie_parity(const Word& w) { return (1 + delta_count(w)) & 1; }

// ------------------------------------------------------------------ tables

void add_to(Table& t, const EvalKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

void add_to(Table& t, const Table& o, const Rational& c) {
  for (const auto& [k, v] : o) add_to(t, k, c * v);
}

std::pair<EvalKey, int> rotate_entry(const EvalKey& k) {
  EvalKey r;
  const std::size_t n = k.shape.size();
  int rest = 0;
  for (std::size_t i = 1; i < n; ++i) rest += k.shape[i] ? 1 : 0;
  const int sign = (k.shape[0] && (rest & 1)) ? -1 : 1;
  r.shape.assign(k.shape.begin() + 1, k.shape.end());
  r.shape.push_back(k.shape[0]);
  if (k.shape[0]) {
    r.inputs.assign(k.inputs.begin() + 1, k.inputs.end());
    r.inputs.push_back(k.inputs[0]);
  } else {
    r.inputs = k.inputs;
  }
  r.outputs.assign(k.outputs.begin() + 1, k.outputs.end());
  r.outputs.push_back(k.outputs[0]);
  return {std::move(r), sign};
}

Table symmetrize(const Table& t) {
  Table out;
  for (const auto& [k0, c] : t) {
    const std::size_t n = k0.shape.size();
    const Rational w = c / Rational(static_cast<long>(n));
    EvalKey k = k0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      add_to(out, k, w * sign);
      auto [next, s] = rotate_entry(k);
      k = std::move(next);
      sign *= s;
    }
  }
  return out;
}

std::vector<std::vector<Word>> input_tuples(std::size_t slots, unsigned r, int max_degree) {
  std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
  by_degree[0].push_back(Word{});
  for (int d = 1; d <= max_degree; ++d)
    for (const Word& w : by_degree[static_cast<std::size_t>(d - 1)])
      for (unsigned i = 1; i <= r; ++i) by_degree[static_cast<std::size_t>(d)].push_back(w + xl(i));
  std::vector<std::vector<Word>> out;
  std::vector<Word> cur;
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx == slots) {
      out.push_back(cur);
      return;
    }
    for (int d = 1; d <= left; ++d)
      for (const Word& w : by_degree[static_cast<std::size_t>(d)]) {
        cur.push_back(w);
        self(self, idx + 1, left - d);
        cur.pop_back();
      }
  };
  rec(rec, 0, max_degree);
  return out;
}

std::vector<Shape> shapes(std::size_t units_count, std::size_t deltas) {
  std::vector<Shape> out;
  if (deltas > units_count) return out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << units_count); ++mask) {
    Shape s(units_count);
    std::size_t c = 0;
    for (std::size_t i = 0; i < units_count; ++i) {
      s[i] = (mask >> (units_count - 1 - i)) & 1;
      c += s[i];
    }
    if (c == deltas) out.push_back(std::move(s));
  }
  return out;
}

Table tabulate(const Poly& p, unsigned r, int max_degree, const Alphabet& a) {
  Table out;
  for (const auto& [w0, c] : p) {
    const Word w = to_tilde_form(w0);
    Shape s = shape_of(w);
    std::size_t n_in = static_cast<std::size_t>(delta_count(w));
    for (const auto& in : input_tuples(n_in, r, max_degree))
      for (const auto& [o, k] : eval(w, in, a)) add_to(out, EvalKey{s, in, o}, c * k);
  }
  return out;
}

// ------------------------------------------------------------- composition

int composition_sign(const Word& outer, std::size_t slot, const Word& inner, std::size_t output) {
  const std::vector<Word> uf = units(outer);
  const std::size_t m = units(inner).size();
  int before = 0;
  for (std::size_t i = 0; i < slot; ++i) before += is_delta(uf[i][0]) ? 1 : 0;
  int sign = rotate_units(inner, (output + 1) % m).sign;
  if ((lie_parity(inner) * before) & 1) sign = -sign;
  return sign;
}

Composite compose(const Poly& outer, const Poly& inner) {
  Composite c;
  for (const auto& [f0, cf] : outer) {
    const Word f = to_tilde_form(f0);
    const std::vector<Word> uf = units(f);
    for (const auto& [g0, cg] : inner) {
      const Word g = to_tilde_form(g0);
      const std::size_t m = units(g).size();
      for (std::size_t k = 0; k < uf.size(); ++k) {
        if (!is_delta(uf[k][0])) continue;
        for (std::size_t j = 0; j < m; ++j)
          c.terms.push_back({cf * cg * composition_sign(f, k, g, j), f, k, g, j});
      }
    }
  }
  return c;
}

namespace {
struct Layout {
  bool from_inner;
  std::size_t unit;
};

std::vector<Layout> composite_layout(std::size_t n, std::size_t k, std::size_t m, std::size_t j) {
  std::vector<Layout> order;
  for (std::size_t i = 0; i < k; ++i) order.push_back({false, i});
  for (std::size_t t = 0; t < m; ++t) order.push_back({true, (j + 1 + t) % m});
  for (std::size_t i = k + 1; i < n; ++i) order.push_back({false, i});
  return order;
}
}  // namespace

Shape composite_shape(const CompositeTerm& t) {
  const std::vector<Word> uf = units(t.outer), ug = units(t.inner);
  Shape s;
  for (const Layout& l : composite_layout(uf.size(), t.slot, ug.size(), t.output))
    s.push_back(is_delta((l.from_inner ? ug : uf)[l.unit][0]));
  return s;
}

void evaluate_into(const CompositeTerm& t, const std::vector<Word>& inputs, const Alphabet& a, SplitTable& out) {
  const std::vector<Word> uf = units(t.outer), ug = units(t.inner);
  const std::size_t n = uf.size(), m = ug.size(), k = t.slot, j = t.output;
  const std::vector<Layout> order = composite_layout(n, k, m, j);
  std::vector<Tagged> fin(n), gin(m);
  Shape shape;
  std::size_t next = 0;
  for (const Layout& l : order) {
    const Word& u = (l.from_inner ? ug : uf)[l.unit];
    shape.push_back(is_delta(u[0]));
    if (!is_delta(u[0])) continue;
    if (next >= inputs.size()) throw std::invalid_argument("too few inputs for composite");
    (l.from_inner ? gin : fin)[l.unit] = Tagged(inputs[next++], kInput);
  }
  if (next != inputs.size()) throw std::invalid_argument("too many inputs for composite");

  eval_core(ug, gin, kInner, [&](const std::vector<Tagged>& gout, const auto&) {
    fin[k] = gout[j];
    eval_core(uf, fin, kOuter, [&](const std::vector<Tagged>& fout, const std::vector<std::uint8_t>& glue) {
      std::vector<Word> outs;
      for (std::size_t i = 0; i < k; ++i) outs.push_back(fout[i].w);
      for (std::size_t s = 1; s < m; ++s) outs.push_back(gout[(j + s) % m].w);
      for (std::size_t i = k; i < n; ++i) outs.push_back(fout[i].w);
      if (!normalize_outputs(outs, a)) return;
      Table& dst = glue[k] == kInner ? out.essential : out.nonessential;
      add_to(dst, EvalKey{shape, inputs, std::move(outs)}, t.coeff);
    });
  });
}

SplitTable tabulate(const Composite& c, unsigned r, int max_degree, const Alphabet& a) {
  SplitTable out;
  std::map<std::size_t, std::vector<std::vector<Word>>> cache;
  for (const CompositeTerm& t : c.terms) {
    Shape s = composite_shape(t);
    std::size_t n_in = 0;
    for (bool b : s) n_in += b;
    auto it = cache.find(n_in);
    if (it == cache.end()) it = cache.emplace(n_in, input_tuples(n_in, r, max_degree)).first;
    for (const auto& in : it->second) evaluate_into(t, in, a, out);
  }
  return out;
}

}  // namespace hch
