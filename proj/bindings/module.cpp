#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyaut/catalog.hpp"
#include "polyaut/claims.hpp"
#include "polyaut/words.hpp"

namespace py = pybind11;
using namespace polyaut;

namespace {

RunConfig make_config(std::uint64_t seed, std::size_t closure_budget) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.closure_budget = closure_budget;
  return cfg;
}

std::string analyze_json(const std::string& name, std::uint64_t seed,
                         std::size_t closure_budget) {
  GroupAnalysis ga(resolve_group(name), make_config(seed, closure_budget));
  Json j;
  j["group"] = ga.group().name();
  j["order"] = ga.group().order();
  j["aut_order"] = ga.aut().size();
  j["inner_order"] = ga.inner().size();
  j["p0_order"] = ga.p0().size();
  j["p_order"] = ga.p().size();
  j["p0_method"] = ga.p0_method();
  const auto& ds = ga.derived();
  const auto& lcs = ga.lower_central();
  if (ds.derived_length) j["derived_length"] = *ds.derived_length;
  j["is_metabelian"] = ds.is_metabelian;
  if (lcs.nilpotency_class) j["nilpotency_class"] = *lcs.nilpotency_class;
  j["nilpotent"] = lcs.nilpotency_class.has_value();
  return j.dump();
}

std::string verify_json(const std::string& name, const std::string& claim,
                        std::uint64_t seed, std::size_t closure_budget) {
  GroupAnalysis ga(resolve_group(name), make_config(seed, closure_budget));
  return verify_claim(ga, claim).to_json().dump();
}

std::string ia2poly_json(const std::string& v_word, const std::string& w_word) {
  const FMElement a = FMElement::generator(2, 0);
  const FMElement b = FMElement::generator(2, 1);
  FMElement v = parse_word(v_word, 2);
  FMElement w = parse_word(w_word, 2);
  FmEndoForm phi = build_ia_endoform({v, w});
  FmPolyForm expanded = endoform_to_polyform(phi);
  Json j;
  j["endoform_factors"] = phi.size();
  j["polyform_factors"] = expanded.size();
  j["exponent_sum"] = exponent_sum(expanded);
  j["fixes_a"] = endoform_apply(phi, a) == a * v;
  j["fixes_b"] = endoform_apply(phi, b) == b * w;
  return j.dump();
}

std::string chain_json(const std::string& name, std::uint64_t seed,
                       std::size_t closure_budget) {
  GroupAnalysis ga(resolve_group(name), make_config(seed, closure_budget));
  ChainReport rep =
      check_inclusion_chain(ga.group(), ga.inner(), ga.aut(), ga.p0(), ga.p());
  Json j;
  j["group"] = ga.group().name();
  j["inner_subset_p"] = rep.inner_subset_p;
  j["p_subset_aut"] = rep.p_subset_aut;
  j["p0_equals_p"] = rep.p0_equals_p;
  j["inner_normal_in_p"] = rep.inner_normal_in_p;
  j["p_normal_in_aut"] = rep.p_normal_in_aut;
  j["p0_normal_subset_of_aut"] = rep.p0_normal_subset_of_aut;
  j["p0_method"] = ga.p0_method();
  j["pass"] = rep.pass();
  j["witnesses"] = rep.witnesses;
  return j.dump();
}

std::string rank3_json() {
  Rank3Report rep = rank3_counterexample();
  Json j;
  j["ia_property"] = rep.ia_property;
  j["commutator_in_ncl_c"] = rep.commutator_in_ncl_c;
  j["retraction_of_c_trivial"] = rep.retraction_of_c_trivial;
  j["retraction_of_ab"] = rep.retraction_of_ab;
  j["pass"] = rep.pass();
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_polyaut, m) {
  m.doc() = "polynomial automorphisms of finite groups and the rank-2/3 free "
            "metabelian engine";

  py::register_exception<Error>(m, "PolyautError");

  py::class_<FiniteGroup>(m, "Group")
      .def_static("catalog", &catalog_group, py::arg("name"))
      .def_static(
          "from_permutations",
          [](const std::string& name, const std::vector<std::vector<int>>& perms) {
            return FiniteGroup::from_permutations(name, perms);
          },
          py::arg("name"), py::arg("perms"))
      .def_static(
          "from_table",
          [](const std::string& name, std::vector<std::vector<Elem>> table) {
            return FiniteGroup::from_table(name, std::move(table));
          },
          py::arg("name"), py::arg("table"))
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::id)
      .def_property_readonly("gens", &FiniteGroup::gens)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("commutator", &FiniteGroup::commutator)
      .def("conjugate", &FiniteGroup::conjugate)
      .def("power", &FiniteGroup::power)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("center_order", [](const FiniteGroup& G) { return center(G).order(); })
      .def("derived_length",
           [](const FiniteGroup& G) -> py::object {
             auto ds = derived_series(G);
             if (ds.derived_length) return py::int_(*ds.derived_length);
             return py::none();
           })
      .def("nilpotency_class",
           [](const FiniteGroup& G) -> py::object {
             auto lcs = lower_central_series(G);
             if (lcs.nilpotency_class) return py::int_(*lcs.nilpotency_class);
             return py::none();
           })
      .def("__repr__", [](const FiniteGroup& G) {
        return "<Group " + G.name() + " of order " + std::to_string(G.order()) + ">";
      });

  py::class_<FMElement>(m, "FmElement")
      .def_static("identity", &FMElement::identity, py::arg("rank"))
      .def_static("generator", &FMElement::generator, py::arg("rank"), py::arg("index"))
      .def_property_readonly("rank", &FMElement::rank)
      .def_property_readonly("is_derived", &FMElement::is_derived)
      .def_property_readonly("is_identity", &FMElement::is_identity)
      .def("__mul__", &FMElement::operator*)
      .def("inverse", &FMElement::inverse)
      .def("pow", &FMElement::pow)
      .def("conjugated_by", &FMElement::conjugated_by)
      .def("commutator",
           [](const FMElement& x, const FMElement& y) { return fm_commutator(x, y); })
      .def("retract", &retract_generator, py::arg("killed"))
      .def("to_json", &fm_to_json)
      .def("__eq__", [](const FMElement& a, const FMElement& b) { return a == b; })
      .def("__repr__",
           [](const FMElement& e) { return "<FmElement " + e.to_string() + ">"; });

  m.def("catalog_names", [] { return catalog_names(); });
  m.def("claim_ids", [] { return claim_ids(); });
  m.def("parse_word", &parse_word, py::arg("text"), py::arg("rank"));
  m.def("fm_from_json", &fm_from_json);
  m.def(
      "closure_size",
      [](const std::string& name, std::size_t budget) {
        FiniteGroup G = resolve_group(name);
        return polynomial_function_closure(G, budget).size();
      },
      py::arg("group"), py::arg("budget") = 400000);
  m.def("analyze_json", &analyze_json, py::arg("group"), py::arg("seed") = 12345,
        py::arg("closure_budget") = 400000);
  m.def("verify_json", &verify_json, py::arg("group"), py::arg("claim"),
        py::arg("seed") = 12345, py::arg("closure_budget") = 400000);
  m.def("ia2poly_json", &ia2poly_json, py::arg("v_word"), py::arg("w_word"));
  m.def("chain_json", &chain_json, py::arg("group"), py::arg("seed") = 12345,
        py::arg("closure_budget") = 400000);
  m.def("rank3_json", &rank3_json);

  m.attr("__version__") = POLYAUT_VERSION;
}
