// Finite quivers, paths and the rose extension used for quiver algebras.
#pragma once

#include "hch/ncalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hch {

struct Arrow {
  std::string name;
  unsigned src = 0;  // vertex indices, 0-based
  unsigned tgt = 0;
};

// Generators are numbered 1..n: the vertices in declaration order, then the
// arrows.  Paths compose left to right: "a b" means a then b.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  static Quiver kronecker(unsigned r);
  static Quiver one_loop();
  static Quiver from_json(const std::string& text);
  std::string to_json() const;

  unsigned num_vertices() const { return static_cast<unsigned>(vertices_.size()); }
  unsigned num_arrows() const { return static_cast<unsigned>(arrows_.size()); }
  unsigned num_generators() const { return num_vertices() + num_arrows(); }

  bool is_vertex_gen(unsigned g) const { return g >= 1 && g <= num_vertices(); }
  bool is_arrow_gen(unsigned g) const { return g > num_vertices() && g <= num_generators(); }
  unsigned vertex_gen(unsigned v) const { return v + 1; }
  unsigned arrow_gen(unsigned a) const { return num_vertices() + a + 1; }
  unsigned gen_src(unsigned g) const;
  unsigned gen_tgt(unsigned g) const;
  const std::string& gen_name(unsigned g) const;

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A basis path: an idempotent when `arrows` is empty.  Arrow entries are
// generator indices.
struct Path {
  unsigned start = 0;
  unsigned end = 0;
  std::vector<unsigned> arrows;
  bool operator==(const Path&) const = default;
};

std::optional<Path> compose(const Path& a, const Path& b);
Path idempotent(unsigned v);
std::optional<Path> path_of_generator(const Quiver& q, unsigned g);
// All paths with exactly `len` arrows (len = 0 gives the idempotents).
std::vector<Path> paths_of_length(const Quiver& q, unsigned len);
// Letters of a basis path: a single vertex letter or the arrow letters.
Word path_letters(const Quiver& q, const Path& p);
// Product of a run of x-letters; nullopt for the empty run or zero.
struct RunValue {
  bool empty = true;
  std::optional<Path> path;  // unset with empty == false means zero
};
RunValue evaluate_run(const Quiver& q, const Word& run);

std::vector<Word> normalize_quiver(const Word& w, const Quiver& q, RunMode mode);

// Quiver with a rose of petals delta_g^v at every vertex v, one per
// generator g.  Petal letters are Delta letters with index v * n + g, so the
// petals at the first vertex carry the plain indices 1..n.
class ExtendedQuiver {
 public:
  explicit ExtendedQuiver(Quiver base);

  const Quiver& base() const { return base_; }
  unsigned num_generators() const { return base_.num_generators(); }
  Letter petal(unsigned g, unsigned v) const;
  unsigned petal_vertex(Letter l) const;
  unsigned petal_generator(Letter l) const;

  // Composability of letters in the monomial algebra: x-letters follow the
  // quiver, petals are loops at their vertex.
  bool composable(const Word& w) const;
  std::string letter_name(Letter l) const;
  std::string render(const Word& w) const;
  std::string render(const Poly& p) const;

  // Delta' = sum_g delta_g x_g - x_g delta_g over petals at all vertices,
  // keeping composable terms.
  Poly delta_prime() const;
  // delta_g^v - delta_g^{v0} for each generator and each non-first vertex.
  std::vector<Poly> identification_relations() const;
  // Priority delta' > delta > x used in the Groebner computations.
  MonomialOrder order() const;

 private:
  Quiver base_;
};

}  // namespace hch
