// Python bindings.  Polynomials cross the boundary in their text form.
#include "hch/bracket.hpp"
#include "hch/complex.hpp"
#include "hch/groebner.hpp"
#include "hch/homology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hch;

namespace {

std::string diff(const std::string& text, unsigned r, const std::string& variant) {
  Alphabet a(r);
  const Variant v = parse_variant(variant);
  if (v == Variant::Cyclic) return render(diff_cyclic(parse_cyclic(text, a), a), a);
  const Poly p = parse_poly(text, a);
  return render(v == Variant::Hat ? diff_hat(p, a) : diff_tilde(p, a), a);
}

std::vector<std::string> slice(unsigned r, const std::string& variant, int m, int t, int ell) {
  Alphabet a(r);
  std::vector<std::string> out;
  for (const Word& w : enumerate_slice(a, {parse_variant(variant), m, t, ell})) out.push_back(render(w, a));
  return out;
}

std::string bracket(const std::string& x, const std::string& y, unsigned r) {
  Alphabet a(r);
  return render(necklace_bracket(parse_cyclic(x, a), parse_cyclic(y, a)), a);
}

std::string mc(const std::string& m, unsigned r) {
  Alphabet a(r);
  return render(mc_residual(parse_cyclic(m, a)), a);
}

std::string nf(const std::string& text, unsigned r, const std::string& order) {
  Alphabet a(r);
  const MonomialOrder ord = order == "x-first" ? MonomialOrder::x_first(r) : MonomialOrder::delta_first(r);
  return render(normal_form(parse_poly(text, a), delta_relations(r, ord)), a);
}

py::dict homology(unsigned r, const std::string& variant, int m, int t) {
  SliceHomology h;
  {
    py::gil_scoped_release release;
    h = slice_homology(Alphabet(r), parse_variant(variant), m, t);
  }
  py::dict d;
  d["m"] = h.m;
  d["t"] = h.t;
  d["dims"] = h.dims;
  d["ranks"] = h.ranks;
  d["homology"] = h.homology;
  return d;
}

std::string purity_json(unsigned r, const std::string& variant, int m_min, int m_max, int t_abs) {
  py::gil_scoped_release release;
  return to_json(purity(Alphabet(r), parse_variant(variant), m_min, m_max, t_abs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cyclic Hochschild complexes of free algebras: differentials, brackets, homology.";
  m.def("diff", &diff, py::arg("poly"), py::arg("r"), py::arg("variant") = "tilde");
  m.def("slice", &slice, py::arg("r"), py::arg("variant"), py::arg("m"), py::arg("t"), py::arg("ell"));
  m.def("bracket", &bracket, py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("mc_residual", &mc, py::arg("m"), py::arg("r"));
  m.def("normal_form", &nf, py::arg("poly"), py::arg("r"), py::arg("order") = "delta-first");
  m.def("overlap_count", [](unsigned r) { return find_overlaps(delta_relations(r, MonomialOrder::delta_first(r))).size(); },
        py::arg("r"));
  m.def("slice_homology", &homology, py::arg("r"), py::arg("variant"), py::arg("m"), py::arg("t"));
  m.def("purity_json", &purity_json, py::arg("r"), py::arg("variant"), py::arg("m_min"), py::arg("m_max"),
        py::arg("t_abs"));
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
