#include "hch/quiver.hpp"

#include <json.hpp>

#include <map>
#include <set>

namespace hch {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
  for (const Arrow& a : arrows_)
    if (a.src >= vertices_.size() || a.tgt >= vertices_.size())
      throw std::invalid_argument("arrow '" + a.name + "' has an unknown endpoint");
  if (num_generators() > 4000) throw std::invalid_argument("quiver too large");
  std::set<std::string> names;
  for (const auto& v : vertices_)
    if (!names.insert(v).second) throw std::invalid_argument("duplicate name '" + v + "'");
  for (const Arrow& a : arrows_)
    if (!names.insert(a.name).second) throw std::invalid_argument("duplicate name '" + a.name + "'");
}

Quiver Quiver::kronecker(unsigned r) {
  if (r == 0) throw std::invalid_argument("Kronecker quiver needs r >= 1");
  std::vector<Arrow> arrows;
  for (unsigned i = 1; i <= r; ++i) arrows.push_back({"x" + std::to_string(i), 0, 1});
  return Quiver({"y", "z"}, std::move(arrows));
}

Quiver Quiver::one_loop() { return Quiver({"v"}, {{"a", 0, 0}}); }

Quiver Quiver::from_json(const std::string& text) {
  using nlohmann::json;
  json j = json::parse(text);
  std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, unsigned> idx;
  for (unsigned i = 0; i < vs.size(); ++i)
    if (!idx.emplace(vs[i], i).second) throw std::invalid_argument("duplicate vertex " + vs[i]);
  auto endpoint = [&](const json& e) -> unsigned {
    if (e.is_number_unsigned()) return e.get<unsigned>();
    auto it = idx.find(e.get<std::string>());
    if (it == idx.end()) throw std::invalid_argument("unknown vertex " + e.dump());
    return it->second;
  };
  std::vector<Arrow> arrows;
  for (const json& a : j.value("arrows", json::array()))
    arrows.push_back({a.at("name").get<std::string>(), endpoint(a.at("src")), endpoint(a.at("tgt"))});
  return Quiver(std::move(vs), std::move(arrows));
}

std::string Quiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["arrows"] = nlohmann::json::array();
  for (const Arrow& a : arrows_)
    j["arrows"].push_back({{"name", a.name}, {"src", vertices_[a.src]}, {"tgt", vertices_[a.tgt]}});
  return j.dump();
}

unsigned Quiver::gen_src(unsigned g) const {
  if (is_vertex_gen(g)) return g - 1;
  if (is_arrow_gen(g)) return arrows_[g - num_vertices() - 1].src;
  throw std::out_of_range("generator index");
}

unsigned Quiver::gen_tgt(unsigned g) const {
  if (is_vertex_gen(g)) return g - 1;
  if (is_arrow_gen(g)) return arrows_[g - num_vertices() - 1].tgt;
  throw std::out_of_range("generator index");
}

const std::string& Quiver::gen_name(unsigned g) const {
  if (is_vertex_gen(g)) return vertices_[g - 1];
  if (is_arrow_gen(g)) return arrows_[g - num_vertices() - 1].name;
  throw std::out_of_range("generator index");
}

// -------------------------------------------------------------------- paths

std::optional<Path> compose(const Path& a, const Path& b) {
  if (a.end != b.start) return std::nullopt;
  Path p{a.start, b.end, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

Path idempotent(unsigned v) { return Path{v, v, {}}; }

std::optional<Path> path_of_generator(const Quiver& q, unsigned g) {
  if (q.is_vertex_gen(g)) return idempotent(g - 1);
  if (q.is_arrow_gen(g)) return Path{q.gen_src(g), q.gen_tgt(g), {g}};
  return std::nullopt;
}

std::vector<Path> paths_of_length(const Quiver& q, unsigned len) {
  std::vector<Path> cur;
  for (unsigned v = 0; v < q.num_vertices(); ++v) cur.push_back(idempotent(v));
  for (unsigned step = 0; step < len; ++step) {
    std::vector<Path> next;
    for (const Path& p : cur)
      for (unsigned a = 0; a < q.num_arrows(); ++a) {
        unsigned g = q.arrow_gen(a);
        if (auto c = compose(p, *path_of_generator(q, g))) next.push_back(std::move(*c));
      }
    cur = std::move(next);
  }
  return cur;
}

Word path_letters(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return Word(1, xl(q.vertex_gen(p.start)));
  Word w;
  for (unsigned g : p.arrows) w.push_back(xl(g));
  return w;
}

RunValue evaluate_run(const Quiver& q, const Word& run) {
  RunValue rv;
  for (Letter l : run) {
    auto gp = path_of_generator(q, index_of(l));
    if (!gp) throw std::invalid_argument("generator index out of range");
    if (rv.empty) {
      rv.empty = false;
      rv.path = *gp;
      continue;
    }
    if (!rv.path) return rv;
    rv.path = compose(*rv.path, *gp);
  }
  return rv;
}

std::vector<Word> normalize_quiver(const Word& w0, const Quiver& q, RunMode mode) {
  Word w = w0;
  if (mode == RunMode::Tilde) w = to_tilde_form(w0);
  // Split into an optional leading run and (label, run) pairs.
  std::vector<Word> runs;
  std::vector<Letter> labels;
  runs.emplace_back();
  for (Letter l : w) {
    if (is_label(l)) {
      labels.push_back(l);
      runs.emplace_back();
    } else {
      runs.back().push_back(l);
    }
  }
  std::size_t first_run = mode == RunMode::Tilde ? 1 : 0;
  std::vector<std::vector<Word>> choices;
  for (std::size_t i = first_run; i < runs.size(); ++i) {
    RunValue rv = evaluate_run(q, runs[i]);
    std::vector<Word> opts;
    if (rv.empty) {
      for (unsigned v = 0; v < q.num_vertices(); ++v) opts.push_back(Word(1, xl(q.vertex_gen(v))));
    } else if (rv.path) {
      opts.push_back(path_letters(q, *rv.path));
    } else {
      return {};
    }
    choices.push_back(std::move(opts));
  }
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < choices.size(); ++i) {
    std::size_t run_index = i + first_run;
    std::vector<Word> next;
    for (const Word& prefix : out)
      for (const Word& opt : choices[i]) {
        Word n = prefix;
        if (run_index > 0) n.push_back(labels[run_index - 1]);
        n += opt;
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

// ----------------------------------------------------------- rose extension

ExtendedQuiver::ExtendedQuiver(Quiver base) : base_(std::move(base)) {
  if (base_.num_generators() * base_.num_vertices() > 4000)
    throw std::invalid_argument("extended quiver too large");
}

Letter ExtendedQuiver::petal(unsigned g, unsigned v) const {
  return dl(v * base_.num_generators() + g);
}

unsigned ExtendedQuiver::petal_vertex(Letter l) const {
  return (index_of(l) - 1) / base_.num_generators();
}

unsigned ExtendedQuiver::petal_generator(Letter l) const {
  return (index_of(l) - 1) % base_.num_generators() + 1;
}

bool ExtendedQuiver::composable(const Word& w) const {
  bool have = false;
  unsigned at = 0;
  for (Letter l : w) {
    unsigned s = 0, t = 0;
    if (kind_of(l) == Kind::X) {
      s = base_.gen_src(index_of(l));
      t = base_.gen_tgt(index_of(l));
    } else if (kind_of(l) == Kind::Delta) {
      s = t = petal_vertex(l);
    } else {
      continue;
    }
    if (have && at != s) return false;
    have = true;
    at = t;
  }
  return true;
}

std::string ExtendedQuiver::letter_name(Letter l) const {
  if (kind_of(l) == Kind::X) return base_.gen_name(index_of(l));
  if (kind_of(l) == Kind::Xi) return "xi";
  unsigned v = petal_vertex(l), g = petal_generator(l);
  std::string s = "d[" + base_.gen_name(g) + "]";
  if (v > 0) s += "@" + base_.vertices()[v];
  return s;
}

std::string ExtendedQuiver::render(const Word& w) const {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + letter_name(w[i]);
  return s + ")";
}

std::string ExtendedQuiver::render(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p) {
    s += (first ? "" : " + ") + render_rational(c) + " * " + render(w);
    first = false;
  }
  return s;
}

Poly ExtendedQuiver::delta_prime() const {
  Poly p;
  for (unsigned g = 1; g <= base_.num_generators(); ++g) {
    Word a{petal(g, 0), xl(g)};
    Word b{xl(g), petal(g, 0)};
    if (composable(a)) p.add(a, 1);
    if (composable(b)) p.add(b, -1);
  }
  return p;
}

std::vector<Poly> ExtendedQuiver::identification_relations() const {
  std::vector<Poly> out;
  for (unsigned v = 1; v < base_.num_vertices(); ++v)
    for (unsigned g = 1; g <= base_.num_generators(); ++g) {
      Poly p;
      p.add(Word(1, petal(g, v)), 1);
      p.add(Word(1, petal(g, 0)), -1);
      out.push_back(std::move(p));
    }
  return out;
}

MonomialOrder ExtendedQuiver::order() const {
  std::vector<Letter> pr;
  for (unsigned v = 1; v < base_.num_vertices(); ++v)
    for (unsigned g = 1; g <= base_.num_generators(); ++g) pr.push_back(petal(g, v));
  for (unsigned g = 1; g <= base_.num_generators(); ++g) pr.push_back(petal(g, 0));
  for (unsigned g = 1; g <= base_.num_generators(); ++g) pr.push_back(xl(g));
  return MonomialOrder(std::move(pr));
}

}  // namespace hch
