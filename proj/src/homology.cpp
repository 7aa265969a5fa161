#include "hch/homology.hpp"

#include "hch/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace hch {

// ---------------------------------------------------------------- SparseMatQ

void SparseMatQ::canonicalize() {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
        std::get<1>(merged.back()) == std::get<1>(e)) {
      std::get<2>(merged.back()) += std::get<2>(e);
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const auto& e) { return std::get<2>(e) == 0; });
  entries = std::move(merged);
}

void SparseMatQ::validate() const {
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [r, c, v] : entries) {
    if (r >= rows || c >= cols) throw std::invalid_argument("matrix entry out of range");
    if (v == 0) throw std::invalid_argument("stored zero in matrix");
    seen.emplace_back(r, c);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("duplicate matrix coordinate");
}

SparseMatQ multiply(const SparseMatQ& a, const SparseMatQ& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimensions do not match");
  std::vector<std::vector<std::pair<std::size_t, Rational>>> brows(b.rows);
  for (const auto& [r, c, v] : b.entries) brows[r].emplace_back(c, v);
  std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
  for (const auto& [r, k, v] : a.entries)
    for (const auto& [c, w] : brows[k]) acc[{r, c}] += v * w;
  SparseMatQ out;
  out.rows = a.rows;
  out.cols = b.cols;
  for (auto& [rc, v] : acc)
    if (v != 0) out.entries.emplace_back(rc.first, rc.second, v);
  return out;
}

std::vector<Rational> apply(const SparseMatQ& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols) throw std::invalid_argument("vector length does not match");
  std::vector<Rational> out(m.rows);
  for (const auto& [r, c, x] : m.entries) out[r] += x * v[c];
  return out;
}

std::string to_coordinate_text(const SparseMatQ& m) {
  std::ostringstream os;
  os << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
  for (const auto& [r, c, v] : m.entries) os << r << ' ' << c << ' ' << render_rational(v) << '\n';
  return os.str();
}

// --------------------------------------------------------------------- ranks

namespace {

using IntVec = std::vector<std::pair<std::size_t, mpz_class>>;

// Columns of m as primitive integer vectors sorted by row index.
std::vector<IntVec> integer_columns(const SparseMatQ& m) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(m.cols);
  for (const auto& [r, c, v] : m.entries)
    if (v != 0) cols[c].emplace_back(r, v);
  std::vector<IntVec> out;
  for (auto& col : cols) {
    if (col.empty()) continue;
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    mpz_class l = 1;
    for (const auto& e : col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    IntVec v;
    mpz_class g = 0;
    for (const auto& [r, q] : col) {
      mpz_class x = q.get_num() * (l / q.get_den());
      if (x == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      v.emplace_back(r, std::move(x));
    }
    if (v.empty()) continue;
    for (auto& e : v) e.second /= g;
    out.push_back(std::move(v));
  }
  return out;
}

// r <- a*r - b*p where a, b are the leading entries of p and r, then made
// primitive.
void eliminate(IntVec& r, const IntVec& p) {
  const mpz_class a = p.front().second, b = r.front().second;
  IntVec out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      mpz_class x = a * r[i].second - b * p[j].second;
      if (x != 0) out.emplace_back(r[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  mpz_class g = 0;
  for (const auto& e : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
  if (g > 1)
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  r = std::move(out);
}

}  // namespace

std::size_t rank(const SparseMatQ& m) {
  std::vector<IntVec> vecs = integer_columns(m);
  std::stable_sort(vecs.begin(), vecs.end(), [](const IntVec& x, const IntVec& y) { return x.size() < y.size(); });
  std::unordered_map<std::size_t, IntVec> pivots;
  for (IntVec& v : vecs) {
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      eliminate(v, it->second);
    }
    if (!v.empty()) {
      const std::size_t lead = v.front().first;
      pivots.emplace(lead, std::move(v));
    }
  }
  return pivots.size();
}

std::optional<std::size_t> rank_mod_p(const SparseMatQ& m, std::uint32_t p) {
  using U = std::uint64_t;
  auto inv = [p](U x) {
    U r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  auto reduce = [p](const mpz_class& z) { return static_cast<U>(mpz_fdiv_ui(z.get_mpz_t(), p)); };
  std::vector<std::vector<std::pair<std::size_t, U>>> cols(m.cols);
  for (const auto& [r, c, v] : m.entries) {
    U den = reduce(v.get_den());
    if (den == 0) return std::nullopt;
    U x = reduce(v.get_num()) * inv(den) % p;
    if (x) cols[c].emplace_back(r, x);
  }
  for (auto& col : cols) std::sort(col.begin(), col.end());
  std::stable_sort(cols.begin(), cols.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, U>>> pivots;  // monic
  std::vector<std::pair<std::size_t, U>> out;
  for (auto& v : cols) {
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      const auto& piv = it->second;
      const U b = v.front().second;
      out.clear();
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
          out.push_back(v[i++]);
        } else if (i == v.size() || piv[j].first < v[i].first) {
          out.emplace_back(piv[j].first, (p - b * piv[j].second % p) % p);
          ++j;
        } else {
          U x = (v[i].second + p - b * piv[j].second % p) % p;
          if (x) out.emplace_back(v[i].first, x);
          ++i;
          ++j;
        }
      }
      v.swap(out);
    }
    if (!v.empty()) {
      const U s = inv(v.front().second);
      for (auto& e : v) e.second = e.second * s % p;
      const std::size_t lead = v.front().first;
      pivots.emplace(lead, std::move(v));
    }
  }
  return pivots.size();
}

std::size_t rank_dense(const SparseMatQ& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (const auto& [r, c, v] : m.entries) a[r][c] += v;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols && rk < m.rows; ++c) {
    std::size_t piv = rk;
    while (piv < m.rows && a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rk][c];
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

// ------------------------------------------------------------------ assembly

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::u16string>{}(w); }
};

// Differential of one basis word as (target word, coefficient) pairs.
std::vector<std::pair<Word, Rational>> column_terms(const Alphabet& a, Variant v, const Word& w) {
  std::vector<std::pair<Word, Rational>> out;
  if (v == Variant::Cyclic) {
    CyclicPoly c;
    c.add_class(w, 1);
    for (const auto& [x, q] : diff_cyclic(c, a)) out.emplace_back(x, q);
    return out;
  }
  std::map<Word, long> acc;
  for_each_diff_term(v, w, a, [&](const Word& x, int s) { acc[x] += s; });
  for (const auto& [x, c] : acc)
    if (c != 0) out.emplace_back(x, Rational(c));
  return out;
}

SliceMatrix build(const Alphabet& a, const SliceSpec& s, std::vector<Word> src, std::vector<Word> tgt,
                  std::size_t nnz_cap) {
  SliceMatrix sm;
  sm.spec = s;
  sm.source = std::move(src);
  sm.target = std::move(tgt);
  sm.matrix.rows = sm.target.size();
  sm.matrix.cols = sm.source.size();
  if (s.ell <= 0) return sm;
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < sm.target.size(); ++i) index.emplace(sm.target[i], i);
  for (std::size_t j = 0; j < sm.source.size(); ++j) {
    for (auto& [x, c] : column_terms(a, s.variant, sm.source[j])) {
      auto it = index.find(x);
      if (it == index.end()) throw std::logic_error("differential left the target basis: " + render(x, a));
      sm.matrix.entries.emplace_back(it->second, j, std::move(c));
    }
    if (sm.matrix.entries.size() > nnz_cap) {
      std::ostringstream os;
      os << "slice " << to_string(s.variant) << " m=" << s.m << " t=" << s.t << " ell=" << s.ell
         << " exceeds the cap of " << nnz_cap << " nonzeros";
      throw SizeCapExceeded(os.str());
    }
  }
  return sm;
}

using Blocks = std::map<std::vector<int>, std::vector<Word>>;

Blocks split(const Alphabet& a, const std::vector<Word>& words) {
  Blocks b;
  for (const Word& w : words) b[block_key(w, a)].push_back(w);
  return b;
}

std::vector<SliceMatrix> build_blocks(const Alphabet& a, const SliceSpec& s, const std::vector<Word>& src,
                                      const std::vector<Word>& tgt, std::size_t nnz_cap, unsigned threads) {
  Blocks bs = split(a, src), bt = split(a, tgt);
  std::vector<std::vector<int>> keys;
  for (const auto& [k, _] : bs) keys.push_back(k);
  for (const auto& [k, _] : bt)
    if (!bs.count(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::vector<SliceMatrix> out(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    auto is = bs.find(keys[i]);
    auto it = bt.find(keys[i]);
    out[i] = build(a, s, is == bs.end() ? std::vector<Word>{} : is->second,
                   it == bt.end() ? std::vector<Word>{} : it->second, nnz_cap);
  });
  return out;
}

SliceSpec lower(SliceSpec s) {
  --s.ell;
  return s;
}

}  // namespace

SliceMatrix assemble(const Alphabet& a, const SliceSpec& s, std::size_t nnz_cap) {
  return build(a, s, enumerate_slice(a, s), enumerate_slice(a, lower(s)), nnz_cap);
}

std::vector<SliceMatrix> assemble_blocks(const Alphabet& a, const SliceSpec& s, std::size_t nnz_cap) {
  return build_blocks(a, s, enumerate_slice(a, s), enumerate_slice(a, lower(s)), nnz_cap, 1);
}

std::vector<Rational> coordinates(const Poly& p, const std::vector<Word>& basis) {
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Rational> v(basis.size());
  for (const auto& [w, c] : p) {
    auto it = index.find(w);
    if (it == index.end()) throw std::invalid_argument("word outside the basis");
    v[it->second] = c;
  }
  return v;
}

std::vector<Rational> coordinates(const CyclicPoly& p, const std::vector<Word>& basis) {
  Poly q;
  for (const auto& [w, c] : p) q.add(w, c);
  return coordinates(q, basis);
}

// ------------------------------------------------------------------ homology

SliceHomology slice_homology(const Alphabet& a, Variant v, int m, int t, RankMethod method, unsigned threads) {
  SliceHomology h;
  h.m = m;
  h.t = t;
  std::vector<std::vector<Word>> bases(static_cast<std::size_t>(m) + 1);
  for (int l = 0; l <= m; ++l) bases[static_cast<std::size_t>(l)] = enumerate_slice(a, {v, m, t, l});
  for (const auto& b : bases) h.dims.push_back(b.size());

  // Blocks of d_ell for ell = 1..m.
  std::vector<std::vector<SliceMatrix>> blocks(static_cast<std::size_t>(m) + 1);
  for (int l = 1; l <= m; ++l)
    blocks[static_cast<std::size_t>(l)] = build_blocks(a, {v, m, t, l}, bases[static_cast<std::size_t>(l)],
                                                        bases[static_cast<std::size_t>(l) - 1], kDefaultNnzCap * 50,
                                                        threads);

  auto total_rank = [&](std::size_t l, auto&& fn) -> std::optional<std::size_t> {
    const auto& bl = blocks[l];
    std::vector<std::optional<std::size_t>> r(bl.size());
    parallel_for(bl.size(), threads, [&](std::size_t i) { r[i] = fn(bl[i].matrix); });
    std::size_t sum = 0;
    for (const auto& x : r) {
      if (!x) return std::nullopt;
      sum += *x;
    }
    return sum;
  };
  auto exact = [&](std::size_t l) {
    if (method == RankMethod::Dense)
      return *total_rank(l, [](const SparseMatQ& mm) { return std::optional<std::size_t>(rank_dense(mm)); });
    return *total_rank(l, [](const SparseMatQ& mm) { return std::optional<std::size_t>(rank(mm)); });
  };

  const std::size_t n = static_cast<std::size_t>(m) + 1;
  h.ranks.assign(n + 1, 0);  // ranks[n] = 0 stands for the map out of C_{m+1}
  std::vector<bool> known(n + 1, false);
  known[0] = known[n] = true;
  if (method == RankMethod::Certified) {
    std::vector<std::optional<std::size_t>> rp(n + 1);
    rp[0] = rp[n] = 0;
    for (std::size_t l = 1; l < n; ++l)
      rp[l] = total_rank(l, [](const SparseMatQ& mm) { return rank_mod_p(mm, kDefaultPrime); });
    // rank_p <= rank_Q and rank_Q(d_l) + rank_Q(d_{l+1}) <= dim C_l, so
    // equality mod p pins both exact ranks.
    for (std::size_t l = 0; l < n; ++l)
      if (rp[l] && rp[l + 1] && *rp[l] + *rp[l + 1] == h.dims[l]) {
        h.ranks[l] = *rp[l];
        h.ranks[l + 1] = *rp[l + 1];
        known[l] = known[l + 1] = true;
      }
  }
  h.certified_modular = std::all_of(known.begin(), known.end(), [](bool b) { return b; });
  for (std::size_t l = 1; l < n; ++l)
    if (!known[l]) h.ranks[l] = exact(l);
  for (std::size_t l = 0; l < n; ++l) h.homology.push_back(h.dims[l] - h.ranks[l] - h.ranks[l + 1]);
  h.ranks.pop_back();
  return h;
}

PurityReport purity(const Alphabet& a, Variant v, int m_min, int m_max, int t_abs, RankMethod method,
                    unsigned threads) {
  std::vector<std::pair<int, int>> grid;
  for (int m = m_min; m <= m_max; ++m)
    for (int t = -t_abs; t <= t_abs; ++t) grid.emplace_back(m, t);
  return purity(a, v, grid, method, threads);
}

PurityReport purity(const Alphabet& a, Variant v, const std::vector<std::pair<int, int>>& slices,
                    RankMethod method, unsigned threads) {
  PurityReport rep;
  rep.variant = v;
  if (a.quiver_mode()) {
    const Quiver& q = *a.quiver();
    rep.algebra = "quiver:" + q.to_json();
    if (q.num_vertices() == 1 && q.num_arrows() == 1) {
      rep.gated = true;
      rep.gate_reason = "one vertex with one loop is excluded";
    }
  } else {
    rep.algebra = "free:r=" + std::to_string(a.size());
    if (a.size() < 2) {
      rep.gated = true;
      rep.gate_reason = "r >= 2 required";
    }
  }
  for (const auto& [m, t] : slices) {
    rep.slices.push_back(slice_homology(a, v, m, t, method, threads));
    const auto& h = rep.slices.back().homology;
    for (std::size_t l = 1; l < h.size(); ++l)
      if (h[l] != 0) rep.pure = false;
  }
  return rep;
}

std::string to_json(const PurityReport& r) {
  nlohmann::ordered_json j;
  j["variant"] = to_string(r.variant);
  j["algebra"] = r.algebra;
  j["pure"] = r.pure;
  j["gated"] = r.gated;
  j["gate_reason"] = r.gate_reason;
  j["slices"] = nlohmann::ordered_json::array();
  for (const auto& s : r.slices) {
    nlohmann::ordered_json e;
    e["m"] = s.m;
    e["t"] = s.t;
    e["dims"] = s.dims;
    e["ranks"] = s.ranks;
    e["homology"] = s.homology;
    e["certified_modular"] = s.certified_modular;
    j["slices"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string to_tsv(const PurityReport& r) {
  std::ostringstream os;
  os << "variant\tm\tt\tell\tdim\trank\thomology\n";
  for (const auto& s : r.slices)
    for (std::size_t l = 0; l < s.dims.size(); ++l)
      os << to_string(r.variant) << '\t' << s.m << '\t' << s.t << '\t' << l << '\t' << s.dims[l] << '\t'
         << s.ranks[l] << '\t' << s.homology[l] << '\n';
  return os.str();
}

// ------------------------------------------------------------------ preimage

namespace {

// Solves M g = u over Q by dense elimination with the row transform kept so
// that an inconsistent row yields a left-kernel certificate.
struct DenseSolve {
  bool exact = false;
  std::vector<Rational> solution;
  std::vector<Rational> certificate;
};

DenseSolve dense_solve(const SparseMatQ& m, const std::vector<Rational>& u) {
  const std::size_t R = m.rows, C = m.cols;
  std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
  for (const auto& [r, c, v] : m.entries) a[r][c] += v;
  std::vector<Rational> b = u;
  std::vector<std::vector<Rational>> L(R, std::vector<Rational>(R));
  for (std::size_t i = 0; i < R; ++i) L[i][i] = 1;
  std::vector<std::size_t> pivot_col;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < C && rk < R; ++c) {
    std::size_t piv = rk;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rk]);
    std::swap(b[piv], b[rk]);
    std::swap(L[piv], L[rk]);
    const Rational inv = 1 / a[rk][c];
    for (std::size_t k = c; k < C; ++k) a[rk][k] *= inv;
    b[rk] *= inv;
    for (auto& x : L[rk]) x *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rk || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < C; ++k) a[r][k] -= f * a[rk][k];
      b[r] -= f * b[rk];
      for (std::size_t k = 0; k < R; ++k) L[r][k] -= f * L[rk][k];
    }
    pivot_col.push_back(c);
    ++rk;
  }
  DenseSolve res;
  for (std::size_t r = rk; r < R; ++r)
    if (b[r] != 0) {
      res.certificate = L[r];
      return res;
    }
  res.exact = true;
  std::vector<Rational> g(C);
  for (std::size_t i = 0; i < rk; ++i) g[pivot_col[i]] = b[i];
  res.solution = std::move(g);
  return res;
}

SliceSpec spec_of(const Word& w, const Alphabet& a, Variant v) {
  Degrees d = degrees(w);
  return SliceSpec{v, d.weight(), grading_offset(w, a), d.deg_xi + 1};
}

template <class P>
PreimageResult solve_impl(const P& u, const Alphabet& a, Variant v) {
  PreimageResult res;
  if (u.is_zero()) {
    res.exact = true;
    return res;
  }
  const SliceSpec s = spec_of(u.begin()->first, a, v);
  // Only blocks touched by u matter.
  std::map<std::vector<int>, bool> touched;
  for (const auto& [w, c] : u) {
    if (spec_of(w, a, v).ell != s.ell || spec_of(w, a, v).t != s.t || degrees(w).weight() != s.m)
      throw std::invalid_argument("element is not homogeneous");
    touched[block_key(w, a)] = true;
  }
  std::vector<Word> src, tgt;
  for (const Word& w : enumerate_slice(a, s))
    if (touched.count(block_key(w, a))) src.push_back(w);
  for (const Word& w : enumerate_slice(a, lower(s)))
    if (touched.count(block_key(w, a))) tgt.push_back(w);
  SliceMatrix sm = build(a, s, src, tgt, kDefaultNnzCap * 50);
  const std::vector<Rational> coords = coordinates(u, sm.target);
  DenseSolve d = dense_solve(sm.matrix, coords);
  if (!d.exact) {
    // Certificate on the restricted target, extended by zero.
    std::vector<Word> full = enumerate_slice(a, lower(s));
    std::map<Word, Rational> on;
    for (std::size_t i = 0; i < sm.target.size(); ++i) on[sm.target[i]] = d.certificate[i];
    res.certificate.resize(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
      auto it = on.find(full[i]);
      if (it != on.end()) res.certificate[i] = it->second;
    }
    return res;
  }
  res.exact = true;
  for (std::size_t j = 0; j < sm.source.size(); ++j) {
    if (d.solution[j] == 0) continue;
    if constexpr (std::is_same_v<P, CyclicPoly>) res.cyclic_preimage.add_class(sm.source[j], d.solution[j]);
    else res.preimage.add(sm.source[j], d.solution[j]);
  }
  return res;
}

}  // namespace

PreimageResult solve_preimage(const Poly& u, const Alphabet& a, Variant v) {
  if (v == Variant::Cyclic) throw std::invalid_argument("use the cyclic overload");
  Poly du = v == Variant::Hat ? diff_hat(u, a) : diff_tilde(u, a);
  if (!du.is_zero()) throw std::invalid_argument("element is not a cycle");
  return solve_impl(u, a, v);
}

PreimageResult solve_preimage(const CyclicPoly& u, const Alphabet& a) {
  if (!diff_cyclic(u, a).is_zero()) throw std::invalid_argument("element is not a cycle");
  return solve_impl(u, a, Variant::Cyclic);
}

}  // namespace hch
