// Exact linear algebra on slice matrices: ranks, homology dimensions,
// purity verdicts and preimages.
#pragma once

#include "hch/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hch {

struct SparseMatQ {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;

  // Sorts entries, merges duplicates and drops zeros.
  void canonicalize();
  // Throws std::invalid_argument on out-of-range or duplicate coordinates.
  void validate() const;
  std::size_t nnz() const { return entries.size(); }
  bool is_zero() const { return entries.empty(); }
};

SparseMatQ multiply(const SparseMatQ& a, const SparseMatQ& b);
std::vector<Rational> apply(const SparseMatQ& m, const std::vector<Rational>& v);
// "row col p/q" lines, one per entry, after a "rows cols nnz" header.
std::string to_coordinate_text(const SparseMatQ& m);

// Exact rank by fraction-free elimination: rows are scaled to primitive
// integer vectors and combined as a*r - b*p.
std::size_t rank(const SparseMatQ& m);
// Rank over F_p; nullopt if p divides a denominator.
std::optional<std::size_t> rank_mod_p(const SparseMatQ& m, std::uint32_t p);
// Textbook dense Gaussian elimination over Q, used as a cross-check.
std::size_t rank_dense(const SparseMatQ& m);

constexpr std::uint32_t kDefaultPrime = 2147483629u;  // largest prime below 2^31
constexpr std::size_t kDefaultNnzCap = 200000;

// The matrix of d from xi-degree ell to ell - 1 on a slice.  Column j holds
// d(source[j]) in the target basis.
struct SliceMatrix {
  SliceSpec spec;
  std::vector<Word> source;
  std::vector<Word> target;
  SparseMatQ matrix;
};

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SliceMatrix assemble(const Alphabet& a, const SliceSpec& s, std::size_t nnz_cap = kDefaultNnzCap);
// Same map restricted to one block of the finer grading.
std::vector<SliceMatrix> assemble_blocks(const Alphabet& a, const SliceSpec& s,
                                         std::size_t nnz_cap = kDefaultNnzCap);
// Coordinates of a polynomial (or cyclic polynomial) in a basis; throws if a
// word is missing.
std::vector<Rational> coordinates(const Poly& p, const std::vector<Word>& basis);
std::vector<Rational> coordinates(const CyclicPoly& p, const std::vector<Word>& basis);

// Homology of the (m, t) complex, ell = 0..m.
struct SliceHomology {
  int m = 0;
  int t = 0;
  std::vector<std::size_t> dims;   // dim C_ell
  std::vector<std::size_t> ranks;  // rank of d: C_ell -> C_{ell-1}; ranks[0] = 0
  std::vector<std::size_t> homology;
  bool certified_modular = false;  // every rank fixed by the modular certificate
};

enum class RankMethod { Certified, Exact, Dense };

SliceHomology slice_homology(const Alphabet& a, Variant v, int m, int t,
                             RankMethod method = RankMethod::Certified, unsigned threads = 0);

struct PurityReport {
  Variant variant = Variant::Tilde;
  std::string algebra;
  std::vector<SliceHomology> slices;
  bool pure = true;      // homology only at ell = 0
  bool gated = false;    // hypothesis of the theorem not met; verdict is report only
  std::string gate_reason;
};

// Runs every (m, t) with m in [m_min, m_max] and |t| <= t_abs.
PurityReport purity(const Alphabet& a, Variant v, int m_min, int m_max, int t_abs,
                    RankMethod method = RankMethod::Certified, unsigned threads = 0);
// Same on an explicit list of (m, t) slices.
PurityReport purity(const Alphabet& a, Variant v, const std::vector<std::pair<int, int>>& slices,
                    RankMethod method = RankMethod::Certified, unsigned threads = 0);
std::string to_json(const PurityReport& r);
std::string to_tsv(const PurityReport& r);

// Exact solve of d(g) = u on a slice.  On failure the certificate is a
// functional on the target space vanishing on the image of d but not on u.
struct PreimageResult {
  bool exact = false;
  Poly preimage;
  CyclicPoly cyclic_preimage;
  std::vector<Rational> certificate;
};
PreimageResult solve_preimage(const Poly& u, const Alphabet& a, Variant v);
PreimageResult solve_preimage(const CyclicPoly& u, const Alphabet& a);

// Runs f(i) for i in [0, n) on up to `threads` workers (0 = hardware).
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace hch
