// The xi-delta cochain complexes: hat (linear words), tilde (fixed point)
// and cyclic (rotation classes).
#pragma once

#include "hch/ncalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hch {

enum class Variant { Tilde, Hat, Cyclic };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

// Slice of weight m, x-offset t and xi-degree ell.  In quiver mode the
// offset counts arrow letters minus arrow deltas; vertex deltas are free.
struct SliceSpec {
  Variant variant = Variant::Tilde;
  int m = 1;
  int t = 0;
  int ell = 0;
};

int grading_offset(const Word& w, const Alphabet& a);

// Basis words of a slice in ascending letter-code order.  Cyclic slices are
// listed by canonical representatives of non-vanishing classes.
std::vector<Word> enumerate_slice(const Alphabet& a, const SliceSpec& s);

// Finer grading preserved by every differential: x_i count minus delta_i
// count per generator (per arrow in quiver mode).
std::vector<int> block_key(const Word& w, const Alphabet& a);

// Differential on a single basis word.  `emit(word, sign)` receives raw
// terms that may repeat; cyclic words are not handled here.
template <class Emit>
void for_each_diff_term(Variant v, const Word& w, const Alphabet& a, Emit&& emit);

Poly diff_hat(const Poly& p, const Alphabet& a);
Poly diff_tilde(const Poly& p, const Alphabet& a);
CyclicPoly diff_cyclic(const CyclicPoly& p, const Alphabet& a);

// Differential computed from the bar-dual formula: the word is read as an
// operation, the dual bar differential is applied to it and the result is
// re-expressed on single-letter inputs.  Free mode only.  Throws
// std::logic_error if a component with a two-input slot fails to vanish.
Poly diff_bar_oracle(const Word& w, const Alphabet& a);

// ----------------------------------------------------------- implementation

namespace detail {
void emit_normalized(const Word& raw, int sign, const Alphabet& a, RunMode mode,
                     const std::function<void(const Word&, int)>& emit);
}

template <class Emit>
void for_each_diff_term(Variant v, const Word& w, const Alphabet& a, Emit&& emit) {
  const unsigned n = a.size();
  const bool tilde = v != Variant::Hat;
  const RunMode mode = tilde ? RunMode::Tilde : RunMode::Linear;
  auto out = [&](Word&& raw, int sign) {
    if (a.quiver_mode()) {
      detail::emit_normalized(raw, sign, a, mode, [&](const Word& x, int s) { emit(x, s); });
    } else {
      emit(raw, sign);
    }
  };
  int deltas = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    Letter l = w[p];
    if (is_delta(l)) ++deltas;
    if (!is_xi(l)) continue;
    const int sign = (deltas & 1) ? -1 : 1;
    Word head = w.substr(0, p), tail = w.substr(p + 1);
    for (unsigned i = 1; i <= n; ++i) {
      Word a1 = head;
      a1.push_back(dl(i));
      a1.push_back(xl(i));
      a1 += tail;
      out(std::move(a1), sign);
      if (tilde && p == 0) {
        Word a2(1, dl(i));
        a2 += tail;
        a2.push_back(xl(i));
        out(std::move(a2), -sign);
      } else {
        Word a2 = head;
        a2.push_back(xl(i));
        a2.push_back(dl(i));
        a2 += tail;
        out(std::move(a2), -sign);
      }
    }
  }
}

}  // namespace hch
