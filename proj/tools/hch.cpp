// Batch front end: one subcommand per engine operation.  Exit status 0 means
// the requested verdict holds, 2 that it is violated, 3 that a theorem
// hypothesis is not met, 64 a usage error and 1 a computation failure.

#include "hch/bracket.hpp"
#include "hch/complex.hpp"
#include "hch/groebner.hpp"
#include "hch/homology.hpp"
#include "hch/operations.hpp"
#include "hch/quiver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

using namespace hch;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kPure = 0;
constexpr int kViolated = 2;
constexpr int kGated = 3;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Largest generator index mentioned in the arguments, at least 1.
unsigned infer_r(const std::vector<std::string>& texts) {
  static const std::regex tok(R"(\b[xd](\d+)\b)");
  unsigned r = 1;
  for (const auto& s : texts)
    for (auto it = std::sregex_iterator(s.begin(), s.end(), tok); it != std::sregex_iterator(); ++it)
      r = std::max(r, static_cast<unsigned>(std::stoul((*it)[1])));
  return r;
}

std::shared_ptr<const Quiver> load_quiver(const std::string& file, unsigned kronecker, bool one_loop) {
  if (!file.empty()) return std::make_shared<const Quiver>(Quiver::from_json(read_file(file)));
  if (kronecker) return std::make_shared<const Quiver>(Quiver::kronecker(kronecker));
  if (one_loop) return std::make_shared<const Quiver>(Quiver::one_loop());
  return nullptr;
}

struct AlgebraOpts {
  unsigned r = 0;
  std::string quiver;
  unsigned kronecker = 0;
  bool one_loop = false;

  void add(CLI::App* app, bool with_quiver) {
    app->add_option("--r", r, "number of free generators");
    if (!with_quiver) return;
    app->add_option("--quiver", quiver, "quiver JSON file");
    app->add_option("--kronecker", kronecker, "Kronecker quiver with this many arrows");
    app->add_flag("--one-loop", one_loop, "quiver with one vertex and one loop");
  }
  Alphabet alphabet(const std::vector<std::string>& texts = {}) const {
    if (auto q = load_quiver(quiver, kronecker, one_loop)) return Alphabet(q);
    return Alphabet(r ? r : infer_r(texts));
  }
};

Word parse_input(std::string s, const Alphabet& a) {
  s.erase(0, s.find_first_not_of(' '));
  s.erase(s.find_last_not_of(' ') + 1);
  if (s.empty() || s == "1") return Word{};
  return parse_word(s, a);
}

ojson tensor_json(const Tensor& t, const Alphabet& a) {
  ojson terms = ojson::array();
  for (const auto& [outs, c] : t) {
    ojson e;
    e["coeff"] = render_rational(c);
    e["outputs"] = ojson::array();
    for (const Word& w : outs) e["outputs"].push_back(render(w, a));
    terms.push_back(std::move(e));
  }
  return terms;
}

ojson cyclic_json(const CyclicPoly& p, const Alphabet& a) {
  ojson j;
  j["value"] = render(p, a);
  j["zero"] = p.is_zero();
  if (!p.is_zero()) {
    const auto& [w, c] = *p.begin();
    CyclicPoly one;
    one.add_class(w, 1);
    j["witness"] = {{"class", render(one, a)}, {"coeff", render_rational(c)}};
  }
  return j;
}

std::vector<Poly> read_relations(const std::string& path, const Alphabet& a) {
  std::vector<Poly> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(parse_poly(line, a));
  }
  return out;
}

MonomialOrder parse_order(const std::string& spec, const Alphabet& a) {
  if (spec.empty() || spec == "delta-first") return MonomialOrder::delta_first(a.size());
  if (spec == "x-first") return MonomialOrder::x_first(a.size());
  std::vector<Letter> pr;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (!tok.empty()) pr.push_back(a.parse_token(tok));
  }
  return MonomialOrder(std::move(pr));
}

std::string report_text(const PurityReport& rep, const std::string& format) {
  if (format == "tsv") return to_tsv(rep);
  return to_json(rep) + "\n";
}

int verdict(const PurityReport& rep) {
  if (rep.gated) return kGated;
  return rep.pure ? kPure : kViolated;
}

// ---------------------------------------------------------------- calibrate

ojson calibrate(unsigned r, int max_weight, int t_abs, int bracket_t_abs) {
  Alphabet a(r);
  ojson out;
  std::size_t words = 0, mismatches = 0;
  ojson first;
  for (int m = 1; m <= max_weight; ++m)
    for (int t = -t_abs; t <= t_abs; ++t)
      for (int l = 0; l <= m; ++l)
        for (const Word& w : enumerate_slice(a, {Variant::Tilde, m, t, l})) {
          ++words;
          Poly lhs = diff_tilde(Poly::monomial(w), a), rhs = diff_bar_oracle(w, a);
          if (lhs == rhs) continue;
          if (!mismatches) first = {{"word", render(w, a)}, {"diff", render(lhs, a)}, {"oracle", render(rhs, a)}};
          ++mismatches;
        }
  out["oracle"] = {{"r", r}, {"max_weight", max_weight}, {"offset_bound", t_abs}, {"words", words},
                   {"mismatches", mismatches}};
  if (mismatches) out["oracle"]["first_mismatch"] = first;

  // Differential sign table on the generators of weight 1 and 2.
  ojson diff = ojson::array();
  for (int m = 1; m <= 2; ++m)
    for (int l = 1; l <= m; ++l)
      for (const Word& w : enumerate_slice(a, {Variant::Tilde, m, 0, l})) {
        if (degrees(w).deg_x != 0) continue;
        diff.push_back({{"word", render(w, a)},
                        {"tilde", render(diff_tilde(Poly::monomial(w), a), a)},
                        {"hat", render(diff_hat(Poly::monomial(w), a), a)}});
      }
  out["differential_signs"] = diff;

  // Rotation signs and composition signs on x-free words of weight <= 2.
  std::vector<Word> small;
  for (int m = 1; m <= 2; ++m)
    for (int l = 0; l <= m; ++l)
      for (const Word& w : enumerate_slice(a, {Variant::Tilde, m, -(m - l), l})) small.push_back(w);
  ojson rot = ojson::array();
  for (const Word& w : small) {
    const std::size_t n = units(w).size();
    for (std::size_t j = 1; j < n; ++j) {
      Rotation rw = rotate_units(w, j);
      rot.push_back({{"word", render(w, a)}, {"by", j}, {"result", render(rw.word, a)}, {"sign", rw.sign}});
    }
  }
  out["rotation_signs"] = rot;
  ojson comp = ojson::array();
  for (const Word& f : small)
    for (const Word& g : small) {
      const auto uf = units(f), ug = units(g);
      for (std::size_t k = 0; k < uf.size(); ++k) {
        if (!is_delta(uf[k][0])) continue;
        for (std::size_t j = 0; j < ug.size(); ++j)
          comp.push_back({{"outer", render(f, a)}, {"slot", k}, {"inner", render(g, a)}, {"output", j},
                          {"sign", composition_sign(f, k, g, j)}});
      }
    }
  out["composition_signs"] = comp;

  // Bracket against the composition commutator.
  std::vector<Word> basis;
  for (int m = 1; m <= 2; ++m)
    for (int t = -bracket_t_abs; t <= bracket_t_abs; ++t)
      for (int l = 0; l <= m; ++l)
        for (const Word& w : enumerate_slice(a, {Variant::Cyclic, m, t, l})) basis.push_back(w);
  std::size_t pairs = 0, incoherent = 0, noness = 0;
  for (const Word& u : basis)
    for (const Word& v : basis) {
      CyclicPoly A, B;
      A.add_class(u, 1);
      B.add_class(v, 1);
      CoherenceResult c = check_coherence(A, B, 3, a);
      ++pairs;
      incoherent += !c.coherent;
      noness += !c.nonessential_cancel;
    }
  out["bracket"] = {{"max_weight", 2}, {"offset_bound", bracket_t_abs}, {"input_degree", 3}, {"pairs", pairs},
                    {"incoherent", incoherent}, {"nonessential_not_cancelled", noness}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic Hochschild cochain complex engine"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--seed", seed, "seed for randomized suites");

  // slice / diff
  AlgebraOpts slice_alg;
  std::string variant = "tilde";
  int weight = 1, offset = 0, xi_degree = 0;
  auto add_slice_opts = [&](CLI::App* c) {
    slice_alg.add(c, true);
    c->add_option("--variant", variant)->check(CLI::IsMember({"tilde", "hat", "cyclic"}));
    c->add_option("--weight", weight)->required();
    c->add_option("--offset", offset);
    c->add_option("--xi-degree", xi_degree)->required();
  };
  auto* slice_cmd = app.add_subcommand("slice", "list the basis of a slice");
  add_slice_opts(slice_cmd);
  auto* diff_cmd = app.add_subcommand("diff", "matrix of the differential out of a slice");
  add_slice_opts(diff_cmd);

  // eval
  AlgebraOpts eval_alg;
  std::string eval_word, eval_inputs;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a word as an operation");
  eval_alg.add(eval_cmd, true);
  eval_cmd->add_option("--word", eval_word)->required();
  eval_cmd->add_option("--inputs", eval_inputs, "inputs separated by ';'");

  // bracket / jacobi / mc / double-poisson
  AlgebraOpts br_alg;
  std::vector<std::string> br_args;
  auto* bracket_cmd = app.add_subcommand("bracket", "necklace bracket [A, B]");
  br_alg.add(bracket_cmd, false);
  bracket_cmd->add_option("elements", br_args)->expected(2)->required();
  std::size_t random_triples = 0;
  auto* jacobi_cmd = app.add_subcommand("jacobi", "graded Jacobi residual of A, B, C");
  br_alg.add(jacobi_cmd, false);
  jacobi_cmd->add_option("elements", br_args)->expected(3);
  jacobi_cmd->add_option("--random", random_triples, "check this many seeded triples of weight <= 2 instead");
  auto* mc_cmd = app.add_subcommand("mc", "Maurer-Cartan residual [M, M]");
  br_alg.add(mc_cmd, false);
  mc_cmd->add_option("element", br_args)->expected(1)->required();
  int degree_bound = 3;
  auto* dp_cmd = app.add_subcommand("double-poisson", "double Poisson axioms of a two-delta element");
  br_alg.add(dp_cmd, false);
  dp_cmd->add_option("element", br_args)->expected(1)->required();
  dp_cmd->add_option("--degree-bound", degree_bound);

  // groebner
  auto* gb_cmd = app.add_subcommand("groebner", "noncommutative Groebner tools");
  gb_cmd->require_subcommand(1);
  AlgebraOpts gb_alg;
  std::string relations_file, order_spec, nf_poly;
  int gb_bound = 8;
  bool x_first = false;
  auto add_gb_opts = [&](CLI::App* c) {
    gb_alg.add(c, true);
    c->add_option("--relations", relations_file, "one polynomial per line");
    c->add_option("--order", order_spec, "delta-first, x-first or a comma separated letter priority");
    c->add_flag("--x-first", x_first, "x-first order in the extended quiver");
  };
  auto* nf_cmd = gb_cmd->add_subcommand("nf", "normal form of a polynomial");
  add_gb_opts(nf_cmd);
  nf_cmd->add_option("--poly", nf_poly)->required();
  auto* ov_cmd = gb_cmd->add_subcommand("overlaps", "ambiguities between leading words");
  add_gb_opts(ov_cmd);
  auto* check_cmd = gb_cmd->add_subcommand("check", "diamond condition up to a degree bound");
  add_gb_opts(check_cmd);
  check_cmd->add_option("--degree-bound", gb_bound);

  // homology / purity / quiver-purity
  AlgebraOpts hom_alg;
  int max_weight = 3, min_weight = 2, offsets = 3;
  auto* hom_cmd = app.add_subcommand("homology", "homology of one (m, t) slice");
  hom_alg.add(hom_cmd, true);
  hom_cmd->add_option("--variant", variant)->check(CLI::IsMember({"tilde", "hat", "cyclic"}));
  hom_cmd->add_option("--weight", weight)->required();
  hom_cmd->add_option("--offset", offset);
  auto add_purity_opts = [&](CLI::App* c) {
    c->add_option("--variant", variant)->check(CLI::IsMember({"tilde", "hat", "cyclic"}));
    c->add_option("--min-weight", min_weight);
    c->add_option("--max-weight", max_weight);
    c->add_option("--offsets", offsets, "offsets t with |t| <= this bound");
  };
  auto* purity_cmd = app.add_subcommand("purity", "purity over a range of slices of a free algebra");
  hom_alg.add(purity_cmd, false);
  add_purity_opts(purity_cmd);
  auto* qpurity_cmd = app.add_subcommand("quiver-purity", "purity over a range of slices of a path algebra");
  hom_alg.add(qpurity_cmd, true);
  add_purity_opts(qpurity_cmd);

  // calibrate
  unsigned cal_r = 2;
  int cal_weight = 3, cal_t = 3, cal_bracket_t = 2;
  std::string cal_out;
  auto* cal_cmd = app.add_subcommand("calibrate", "oracle sweeps and sign tables");
  cal_cmd->add_option("--r", cal_r);
  cal_cmd->add_option("--max-weight", cal_weight);
  cal_cmd->add_option("--offsets", cal_t);
  cal_cmd->add_option("--bracket-offsets", cal_bracket_t);
  cal_cmd->add_option("--out", cal_out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (slice_cmd->parsed() || diff_cmd->parsed()) {
      Alphabet a = slice_alg.alphabet();
      SliceSpec s{parse_variant(variant), weight, offset, xi_degree};
      if (slice_cmd->parsed()) {
        for (const Word& w : enumerate_slice(a, s)) std::cout << render(w, a) << '\n';
      } else {
        std::cout << to_coordinate_text(assemble(a, s).matrix);
      }
      return 0;
    }
    if (eval_cmd->parsed()) {
      Alphabet a = eval_alg.alphabet({eval_word, eval_inputs});
      Word w = to_tilde_form(parse_word(eval_word, a));
      std::vector<Word> inputs;
      if (!eval_inputs.empty()) {
        std::stringstream ss(eval_inputs);
        std::string part;
        while (std::getline(ss, part, ';')) inputs.push_back(parse_input(part, a));
      }
      if (inputs.size() != static_cast<std::size_t>(degrees(w).deg_delta))
        throw UsageError("expected " + std::to_string(degrees(w).deg_delta) + " inputs");
      ojson j;
      j["word"] = render(w, a);
      j["inputs"] = ojson::array();
      for (const Word& in : inputs) j["inputs"].push_back(render(in, a));
      j["terms"] = tensor_json(eval(w, inputs, a), a);
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (jacobi_cmd->parsed() && random_triples) {
      Alphabet a(br_alg.r ? br_alg.r : 2);
      std::vector<Word> basis;
      for (int m = 1; m <= 2; ++m)
        for (int t = -1; t <= 1; ++t)
          for (int l = 0; l <= m; ++l)
            for (const Word& w : enumerate_slice(a, {Variant::Cyclic, m, t, l})) basis.push_back(w);
      std::mt19937_64 rng(seed);
      ojson fails = ojson::array();
      for (std::size_t i = 0; i < random_triples; ++i) {
        CyclicPoly x[3];
        for (auto& e : x) e.add_class(basis[rng() % basis.size()], 1);
        CyclicPoly res = jacobi_residual(x[0], x[1], x[2]);
        if (!res.is_zero()) fails.push_back({render(x[0], a), render(x[1], a), render(x[2], a)});
      }
      ojson j;
      j["check"] = "jacobi";
      j["seed"] = seed;
      j["triples"] = random_triples;
      j["failures"] = fails;
      std::cout << j.dump(2) << '\n';
      return fails.empty() ? kPure : kViolated;
    }
    if (jacobi_cmd->parsed() && br_args.size() != 3) throw UsageError("jacobi takes three elements or --random");
    if (bracket_cmd->parsed() || jacobi_cmd->parsed() || mc_cmd->parsed()) {
      Alphabet a = br_alg.alphabet(br_args);
      std::vector<CyclicPoly> el;
      for (const auto& s : br_args) el.push_back(parse_cyclic(s, a));
      if (bracket_cmd->parsed()) {
        std::cout << render(necklace_bracket(el[0], el[1]), a) << '\n';
        return 0;
      }
      CyclicPoly res = jacobi_cmd->parsed() ? jacobi_residual(el[0], el[1], el[2]) : mc_residual(el[0]);
      ojson j = cyclic_json(res, a);
      j["check"] = jacobi_cmd->parsed() ? "jacobi" : "maurer-cartan";
      std::cout << j.dump(2) << '\n';
      return res.is_zero() ? kPure : kViolated;
    }
    if (dp_cmd->parsed()) {
      Alphabet a = br_alg.alphabet(br_args);
      CyclicPoly m = parse_cyclic(br_args[0], a);
      if (!is_two_delta(m)) throw UsageError("element must have two deltas and no xi");
      DoublePoissonReport rep = check_double_poisson(m, a.size(), degree_bound, a);
      CyclicPoly mc = mc_residual(m);
      ojson j;
      j["element"] = render(m, a);
      j["degree_bound"] = degree_bound;
      j["antisymmetry"] = rep.antisymmetry;
      j["leibniz"] = rep.leibniz;
      j["jacobi"] = rep.jacobi;
      j["pairs"] = rep.pairs;
      j["triples"] = rep.triples;
      j["first_failure"] = rep.first_failure;
      j["mc_residual_zero"] = mc.is_zero();
      std::cout << j.dump(2) << '\n';
      return rep.antisymmetry && rep.leibniz && rep.jacobi ? kPure : kViolated;
    }
    if (gb_cmd->parsed()) {
      std::vector<std::string> texts{nf_poly, order_spec};
      if (!relations_file.empty()) texts.push_back(read_file(relations_file));
      Alphabet a = gb_alg.alphabet(texts);
      std::optional<RelationSet> rs;
      std::optional<ExtendedQuiver> eq;
      if (a.quiver_mode()) {
        eq.emplace(*a.quiver());
        rs.emplace(extended_quiver_relations(*eq, x_first));
      } else {
        if (relations_file.empty()) throw UsageError("--relations is required for free algebras");
        rs.emplace(read_relations(relations_file, a), parse_order(order_spec, a));
      }
      auto show = [&](const Word& w) { return eq ? eq->render(w) : render(w, a); };
      auto show_poly = [&](const Poly& p) { return eq ? eq->render(p) : render(p, a); };
      if (nf_cmd->parsed()) {
        if (eq) throw UsageError("nf takes free-algebra input");
        std::cout << render(normal_form(parse_poly(nf_poly, a), *rs), a) << '\n';
        return 0;
      }
      if (ov_cmd->parsed()) {
        ojson list = ojson::array();
        for (const Ambiguity& amb : find_overlaps(*rs))
          list.push_back({{"first", amb.first}, {"second", amb.second}, {"word", show(amb.word)},
                          {"offset", amb.offset}, {"inclusion", amb.inclusion}});
        std::cout << list.dump(2) << '\n';
        return 0;
      }
      GroebnerCheck g = is_groebner(*rs, gb_bound);
      ojson j;
      j["groebner"] = g.groebner;
      j["conclusive"] = g.conclusive;
      j["degree_bound"] = gb_bound;
      j["ambiguities_checked"] = g.ambiguities;
      if (g.witness) {
        j["witness"] = {{"word", show(g.witness->word)}, {"remainder", show_poly(g.remainder)}};
      }
      std::cout << j.dump(2) << '\n';
      return g.groebner ? kPure : kViolated;
    }
    if (hom_cmd->parsed() || purity_cmd->parsed() || qpurity_cmd->parsed()) {
      Alphabet a = hom_alg.alphabet();
      if (qpurity_cmd->parsed() && !a.quiver_mode()) throw UsageError("quiver-purity needs a quiver");
      if (!hom_alg.r && !a.quiver_mode()) throw UsageError("--r is required");
      const Variant v = parse_variant(variant);
      PurityReport rep = hom_cmd->parsed()
                             ? purity(a, v, {{weight, offset}}, RankMethod::Certified, threads)
                             : purity(a, v, min_weight, max_weight, offsets, RankMethod::Certified, threads);
      std::cout << report_text(rep, format);
      return verdict(rep);
    }
    if (cal_cmd->parsed()) {
      ojson j = calibrate(cal_r, cal_weight, cal_t, cal_bracket_t);
      const std::string text = j.dump(2) + "\n";
      if (cal_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream(cal_out) << text;
      }
      const bool ok = j["oracle"]["mismatches"] == 0 && j["bracket"]["incoherent"] == 0;
      return ok ? kPure : kViolated;
    }
  } catch (const UsageError& e) {
    std::cerr << ojson{{"reason", "usage"}, {"error", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << ojson{{"reason", "parse"}, {"error", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const SizeCapExceeded& e) {
    std::cerr << ojson{{"reason", "size_cap"}, {"error", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << ojson{{"reason", "invalid_argument"}, {"error", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << ojson{{"reason", "internal"}, {"error", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
