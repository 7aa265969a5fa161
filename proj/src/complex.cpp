#include "hch/complex.hpp"

#include "hch/quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hch {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Tilde: return "tilde";
    case Variant::Hat: return "hat";
    case Variant::Cyclic: return "cyclic";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "tilde") return Variant::Tilde;
  if (s == "hat") return Variant::Hat;
  if (s == "cyclic") return Variant::Cyclic;
  throw std::invalid_argument("unknown variant '" + s + "' (tilde|hat|cyclic)");
}

int grading_offset(const Word& w, const Alphabet& a) {
  if (!a.quiver_mode()) return degrees(w).offset();
  const Quiver& q = *a.quiver();
  int t = 0;
  for (Letter l : w) {
    if (is_xi(l) || !q.is_arrow_gen(index_of(l))) continue;
    t += kind_of(l) == Kind::X ? 1 : -1;
  }
  return t;
}

std::vector<int> block_key(const Word& w, const Alphabet& a) {
  std::vector<int> key(a.size(), 0);
  for (Letter l : w) {
    if (is_xi(l)) continue;
    key[index_of(l) - 1] += kind_of(l) == Kind::X ? 1 : -1;
  }
  if (a.quiver_mode()) {
    const Quiver& q = *a.quiver();
    for (unsigned v = 0; v < q.num_vertices(); ++v) key[v] = 0;
  }
  return key;
}

namespace detail {
void emit_normalized(const Word& raw, int sign, const Alphabet& a, RunMode mode,
                     const std::function<void(const Word&, int)>& emit) {
  for (const Word& w : normalize(raw, a, mode)) emit(w, sign);
}
}  // namespace detail

namespace {

void enumerate_free(const Alphabet& a, const SliceSpec& s, std::vector<Word>& out) {
  const int n_delta = s.m - s.ell;
  const int n_x = s.t + n_delta;
  if (s.ell < 0 || n_delta < 0 || n_x < 0 || s.m < 1) return;
  const unsigned r = a.size();
  std::vector<Letter> alphabet{kXi};
  for (unsigned i = 1; i <= r; ++i) alphabet.push_back(dl(i));
  for (unsigned i = 1; i <= r; ++i) alphabet.push_back(xl(i));
  const bool label_first = s.variant != Variant::Hat;
  Word cur;
  auto rec = [&](auto&& self, int xi_left, int d_left, int x_left) -> void {
    if (xi_left == 0 && d_left == 0 && x_left == 0) {
      if (s.variant == Variant::Cyclic) {
        CyclicCanon cc = cyclic_canonicalize(cur);
        if (cc.vanishing || cc.canonical != cur) return;
      }
      out.push_back(cur);
      return;
    }
    for (Letter l : alphabet) {
      Kind k = kind_of(l);
      if (cur.empty() && label_first && k == Kind::X) continue;
      int* left = k == Kind::Xi ? &xi_left : (k == Kind::Delta ? &d_left : &x_left);
      if (*left == 0) continue;
      --*left;
      cur.push_back(l);
      self(self, xi_left, d_left, x_left);
      cur.pop_back();
      ++*left;
    }
  };
  rec(rec, s.ell, n_delta, n_x);
}

void enumerate_quiver(const Alphabet& a, const SliceSpec& s, std::vector<Word>& out) {
  const Quiver& q = *a.quiver();
  const int n_delta = s.m - s.ell;
  if (s.ell < 0 || n_delta < 0 || s.m < 1) return;
  const unsigned n = q.num_generators();
  const bool tilde = s.variant != Variant::Hat;
  const int n_runs = s.m + (tilde ? 0 : 1);
  const int max_len = s.t + n_delta;
  if (max_len < 0) return;
  std::vector<std::vector<Word>> paths(static_cast<std::size_t>(max_len) + 1);
  for (int len = 0; len <= max_len; ++len)
    for (const Path& p : paths_of_length(q, static_cast<unsigned>(len)))
      paths[static_cast<std::size_t>(len)].push_back(path_letters(q, p));

  std::vector<Letter> labels;
  std::vector<Letter> label_set{kXi};
  for (unsigned g = 1; g <= n; ++g) label_set.push_back(dl(g));
  auto emit_runs = [&](int arrows) {
    std::vector<Word> runs(static_cast<std::size_t>(n_runs));
    auto rec_runs = [&](auto&& self, int idx, int left) -> void {
      if (idx == n_runs) {
        if (left != 0) return;
        Word w;
        if (!tilde) w += runs[0];
        for (int k = 0; k < s.m; ++k) {
          w.push_back(labels[static_cast<std::size_t>(k)]);
          w += runs[static_cast<std::size_t>(k + (tilde ? 0 : 1))];
        }
        if (s.variant == Variant::Cyclic) {
          CyclicCanon cc = cyclic_canonicalize(w);
          if (cc.vanishing || cc.canonical != w) return;
        }
        out.push_back(std::move(w));
        return;
      }
      for (int len = 0; len <= left; ++len)
        for (const Word& p : paths[static_cast<std::size_t>(len)]) {
          runs[static_cast<std::size_t>(idx)] = p;
          self(self, idx + 1, left - len);
        }
    };
    rec_runs(rec_runs, 0, arrows);
  };
  auto rec_labels = [&](auto&& self, int xi_left, int d_left, int arrow_deltas) -> void {
    if (xi_left == 0 && d_left == 0) {
      int arrows = s.t + arrow_deltas;
      if (arrows >= 0) emit_runs(arrows);
      return;
    }
    for (Letter l : label_set) {
      if (is_xi(l)) {
        if (xi_left == 0) continue;
        labels.push_back(l);
        self(self, xi_left - 1, d_left, arrow_deltas);
      } else {
        if (d_left == 0) continue;
        labels.push_back(l);
        self(self, xi_left, d_left - 1, arrow_deltas + (q.is_arrow_gen(index_of(l)) ? 1 : 0));
      }
      labels.pop_back();
    }
  };
  rec_labels(rec_labels, s.ell, n_delta, 0);
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<Word> enumerate_slice(const Alphabet& a, const SliceSpec& s) {
  std::vector<Word> out;
  if (a.quiver_mode()) enumerate_quiver(a, s, out);
  else enumerate_free(a, s, out);
  return out;
}

Poly diff_hat(const Poly& p, const Alphabet& a) {
  Poly out;
  for (const auto& [w, c] : p)
    for_each_diff_term(Variant::Hat, w, a, [&](const Word& x, int s) { out.add(x, c * s); });
  return out;
}

Poly diff_tilde(const Poly& p, const Alphabet& a) {
  Poly out;
  for (const auto& [w0, c] : p) {
    Word w = to_tilde_form(w0);
    for_each_diff_term(Variant::Tilde, w, a, [&](const Word& x, int s) { out.add(x, c * s); });
  }
  return out;
}

CyclicPoly diff_cyclic(const CyclicPoly& p, const Alphabet& a) {
  CyclicPoly out;
  for (const auto& [w, c] : p) {
    CyclicCanon own = cyclic_canonicalize(w);
    if (own.vanishing) continue;
    Poly d;
    for_each_diff_term(Variant::Tilde, own.canonical, a, [&](const Word& x, int s) { d.add(x, s); });
    for (const auto& [x, k] : d) {
      CyclicCanon cc = cyclic_canonicalize(x);
      if (cc.vanishing) continue;
      out.add_class(cc.canonical, c * k * cc.sign * (Rational(cc.stabilizer) / own.stabilizer));
    }
  }
  return out;
}

// ------------------------------------------------------------- bar oracle

namespace {

// One evaluation result: coefficient and the N output words.
using Outputs = std::vector<Word>;
using Values = std::map<Outputs, long>;

// Applies the operation of the tilde word to inputs placed at its delta slots
// (`inputs[k]` is used only when slot k is a delta slot).
Values apply_word(const std::vector<Word>& us, const std::vector<Word>& inputs) {
  const std::size_t n = us.size();
  std::vector<std::vector<std::pair<Word, Word>>> cuts(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_delta(us[k][0])) {
      cuts[k].push_back({});
      continue;
    }
    const Letter target = xl(index_of(us[k][0]));
    const Word& u = inputs[k];
    for (std::size_t p = 0; p < u.size(); ++p)
      if (u[p] == target) cuts[k].push_back({u.substr(0, p), u.substr(p + 1)});
  }
  Values vals;
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    if (cuts[k].empty()) return vals;
  for (;;) {
    Outputs o(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& left = cuts[k][pick[k]].first;
      const auto& right = cuts[(k + 1) % n][pick[(k + 1) % n]].second;
      o[k] = left + us[k].substr(1) + right;
    }
    ++vals[o];
    std::size_t k = 0;
    while (k < n && ++pick[k] == cuts[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return vals;
}

}  // namespace

Poly diff_bar_oracle(const Word& w0, const Alphabet& a) {
  if (a.quiver_mode()) throw std::invalid_argument("bar oracle is implemented for free algebras only");
  const Word w = to_tilde_form(w0);
  const std::vector<Word> us = units(w);
  const std::size_t n = us.size();
  const unsigned r = a.size();
  std::vector<std::size_t> delta_slots;
  for (std::size_t k = 0; k < n; ++k)
    if (is_delta(us[k][0])) delta_slots.push_back(k);

  // Iterates over single-letter assignments for the given slots.
  auto for_each_assignment = [&](const std::vector<std::size_t>& slots, auto&& body) {
    std::vector<unsigned> pick(slots.size(), 1);
    for (;;) {
      std::vector<Word> in(n);
      for (std::size_t s = 0; s < slots.size(); ++s) in[slots[s]] = Word(1, xl(pick[s]));
      body(in);
      std::size_t s = 0;
      while (s < slots.size() && ++pick[s] > r) pick[s++] = 1;
      if (s == slots.size()) break;
    }
  };

  Poly result;
  int deltas_before = 0;
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    const int sign = (deltas_before & 1) ? -1 : 1;
    const std::size_t prev = (alpha + n - 1) % n;
    if (is_xi(us[alpha][0])) {
      for (unsigned y = 1; y <= r; ++y) {
        for_each_assignment(delta_slots, [&](std::vector<Word> in) {
          for (const auto& [outs, c] : apply_word(us, in)) {
            for (int side = 0; side < 2; ++side) {
              Outputs o = outs;
              if (side == 0) o[alpha].insert(o[alpha].begin(), xl(y));
              else o[prev].push_back(xl(y));
              Word rep;
              for (std::size_t k = 0; k < n; ++k) {
                if (k == alpha) rep.push_back(dl(y));
                else if (is_delta(us[k][0])) rep.push_back(dl(index_of(in[k][0])));
                else rep.push_back(kXi);
                rep += o[k];
              }
              result.add(rep, Rational(sign * (side == 0 ? 1 : -1) * c));
            }
          }
        });
      }
    } else {
      // Two inputs at alpha: the component must vanish identically.
      std::vector<std::size_t> others;
      for (std::size_t k : delta_slots)
        if (k != alpha) others.push_back(k);
      for (unsigned y1 = 1; y1 <= r; ++y1)
        for (unsigned y2 = 1; y2 <= r; ++y2)
          for_each_assignment(others, [&](std::vector<Word> in) {
            std::map<Outputs, long> acc;
            in[alpha] = Word{xl(y1), xl(y2)};
            for (const auto& [o, c] : apply_word(us, in)) acc[o] -= c;
            in[alpha] = Word(1, xl(y2));
            for (const auto& [o0, c] : apply_word(us, in)) {
              Outputs o = o0;
              o[alpha].insert(o[alpha].begin(), xl(y1));
              acc[o] += c;
            }
            in[alpha] = Word(1, xl(y1));
            for (const auto& [o0, c] : apply_word(us, in)) {
              Outputs o = o0;
              o[prev].push_back(xl(y2));
              acc[o] += c;
            }
            for (const auto& [o, c] : acc)
              if (c != 0) throw std::logic_error("bar oracle: two-input component does not vanish");
          });
    }
    if (is_delta(us[alpha][0])) ++deltas_before;
  }
  return result;
}

}  // namespace hch
