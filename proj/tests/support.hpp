// Seeded generators shared by the unit tests.
#pragma once

#include "hch/ncalg.hpp"

#include <random>
#include <vector>

namespace hch::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240601);
  return g;
}

inline std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng()() % n); }

inline Word random_word(unsigned r, std::size_t len, bool with_labels = true) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t k = with_labels ? pick(2 * r + 1) : pick(r);
    if (!with_labels) w.push_back(xl(static_cast<unsigned>(k + 1)));
    else if (k == 0) w.push_back(kXi);
    else if (k <= r) w.push_back(dl(static_cast<unsigned>(k)));
    else w.push_back(xl(static_cast<unsigned>(k - r)));
  }
  return w;
}

inline Word random_x_word(unsigned r, std::size_t len) { return random_word(r, len, false); }

inline Rational random_coeff() {
  long num = static_cast<long>(pick(9)) - 4;
  if (num == 0) num = 1;
  Rational q(num, static_cast<long>(pick(3) + 1));
  q.canonicalize();
  return q;
}

inline Poly random_poly(unsigned r, std::size_t terms, std::size_t max_len, bool with_labels = true) {
  Poly p;
  for (std::size_t i = 0; i < terms; ++i) p.add(random_word(r, pick(max_len + 1), with_labels), random_coeff());
  return p;
}

}  // namespace hch::testing
