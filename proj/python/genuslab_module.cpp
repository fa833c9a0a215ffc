#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>

#include "genuslab/cli.hpp"
#include "genuslab/congruence.hpp"
#include "genuslab/error.hpp"
#include "genuslab/lattice.hpp"
#include "genuslab/models.hpp"
#include "genuslab/z2forms.hpp"

namespace py = pybind11;
using namespace genuslab;

namespace {

// Python ints cross the boundary as decimal strings, so no size limit applies.
BigInt to_big(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::int_ from_big(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::vector<BigInt> to_big_list(const std::vector<py::int_>& values) {
  std::vector<BigInt> out;
  for (const auto& v : values) out.push_back(to_big(v));
  return out;
}

py::list from_big_list(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(from_big(v));
  return out;
}

ChiVector chi_vector(const std::vector<py::int_>& chi) {
  if (chi.empty()) throw ValidationError("chi", "expected at least one entry");
  return ChiVector(static_cast<int>(chi.size()) - 1, to_big_list(chi));
}

YPolynomial polynomial(const std::vector<py::int_>& coefficients) { return YPolynomial(to_big_list(coefficients)); }

IntegralLattice lattice(const std::vector<std::vector<py::int_>>& gram) {
  std::vector<std::vector<BigInt>> g;
  for (const auto& row : gram) g.push_back(to_big_list(row));
  return IntegralLattice(std::move(g));
}

py::object from_json(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(genuslab, m) {
  m.doc() = "Exact chi_y-genera, bundle congruences and Arf/Brown invariants";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "chi_y", [](const std::vector<py::int_>& chi) { return from_big_list(chi_y_polynomial(chi_vector(chi)).coefficients()); },
      py::arg("chi"), "Coefficients of chi_y in ascending powers of y.");
  m.def(
      "chi_y_string", [](const std::vector<py::int_>& chi) { return to_string(chi_y_polynomial(chi_vector(chi))); },
      py::arg("chi"));
  m.def(
      "specialize",
      [](const std::vector<py::int_>& chi) {
        const auto s = specialize(chi_y_polynomial(chi_vector(chi)));
        py::dict d;
        d["euler"] = from_big(s.euler);
        d["todd"] = from_big(s.todd);
        d["signature"] = from_big(s.signature);
        return d;
      },
      py::arg("chi"));
  m.def(
      "check_duality", [](const std::vector<py::int_>& chi) { return check_duality(chi_vector(chi)); }, py::arg("chi"));
  m.def(
      "genus_from_chern",
      [](int n, const std::map<std::string, py::int_>& numbers) {
        ChernData c{n, {}};
        for (const auto& [key, value] : numbers) c.numbers[parse_partition_key(key)] = to_big(value);
        return from_big_list(genus_from_chern(c).coefficients());
      },
      py::arg("n"), py::arg("numbers"), "chi_y coefficients from Chern numbers keyed like \"2,1\".");
  m.def(
      "reduce_mod_1_minus_y2",
      [](const std::vector<py::int_>& p) { return from_big_list(reduce_mod_1_minus_y2(polynomial(p)).coefficients()); },
      py::arg("coefficients"));
  m.def(
      "reduce_mod_y_minus_y3",
      [](const std::vector<py::int_>& p) { return from_big_list(reduce_mod_y_minus_y3(polynomial(p)).coefficients()); },
      py::arg("coefficients"));
  m.def(
      "check_bundle",
      [](const std::vector<py::int_>& total, const std::vector<py::int_>& fiber, const std::vector<py::int_>& base,
         std::optional<std::vector<long>> ys, bool duality_mode, bool monodromy_mod4_trivial) {
        const auto values = ys ? *ys : odd_values(-99, 99);
        py::list rows;
        for (const auto& r : check_triple(chi_vector(total), chi_vector(fiber), chi_vector(base), values,
                                          CongruenceOptions{duality_mode, monodromy_mod4_trivial})) {
          py::dict d;
          d["y"] = r.y;
          d["defect"] = from_big(r.defect_value);
          d["sigma_defect"] = from_big(r.sigma_defect);
          d["modulus"] = r.guaranteed_modulus;
          d["holds"] = r.holds;
          d["equivalence_checked"] = r.equivalence_checked;
          d["equivalence_holds"] = r.equivalence_holds;
          d["ok"] = r.ok();
          rows.append(d);
        }
        return rows;
      },
      py::arg("total"), py::arg("fiber"), py::arg("base"), py::arg("ys") = py::none(), py::arg("duality_mode") = true,
      py::arg("monodromy_mod4_trivial") = false);
  m.def(
      "arf",
      [](const std::vector<std::vector<int>>& gram, const std::vector<int>& h) {
        Z2Vector values;
        for (std::size_t i = 0; i < h.size(); ++i) values.set(static_cast<int>(i), (h[i] & 1) != 0);
        const Z2QuadraticForm form(Z2BilinearSpace::from_matrix(gram), values);
        return py::make_tuple(arf(form), arf_gauss_oracle(form));
      },
      py::arg("gram"), py::arg("h"), "(Arf invariant, Gauss-sum oracle value).");
  m.def(
      "brown",
      [](const std::vector<std::vector<int>>& gram, const std::vector<int>& q) {
        return brown_invariant(Z4QuadraticForm(Z2BilinearSpace::from_matrix(gram), q));
      },
      py::arg("gram"), py::arg("q"));
  m.def(
      "lattice_signature", [](const std::vector<std::vector<py::int_>>& gram) { return lattice_signature(lattice(gram)); },
      py::arg("gram"));
  m.def(
      "morita_arf_check",
      [](const std::vector<std::vector<py::int_>>& gram) {
        const auto r = morita_arf_check(lattice(gram));
        py::dict d;
        d["signature"] = r.signature;
        d["characteristic_square"] = from_big(r.characteristic_square);
        d["arf"] = r.arf;
        d["quotient_dimension"] = r.quotient_dimension;
        d["van_der_blij"] = r.van_der_blij;
        d["consistent"] = r.consistent;
        return d;
      },
      py::arg("gram"));
  m.def(
      "pipeline",
      [](const std::vector<std::vector<py::int_>>& total, const std::vector<std::vector<py::int_>>& product) {
        const auto e = lattice(total);
        const auto fb = lattice(product);
        const auto r = signature_defect_form(lattice_to_forms(e), lattice_to_forms(fb));
        py::dict d;
        d["sigma_defect"] = lattice_signature(e) - lattice_signature(fb);
        d["W_dimension"] = r.quotient.dim();
        d["arf"] = r.arf;
        d["perp_descriptions_agree"] = r.perp_descriptions_agree;
        d["enhancement_descends"] = r.enhancement_descends;
        return d;
      },
      py::arg("total"), py::arg("product"));
  m.def("catalog", [] {
    std::vector<std::string> names;
    for (const auto& e : builtin_catalog()) names.push_back(e.name);
    return names;
  });
  m.def(
      "catalog_entry",
      [](const std::string& name) {
        const auto* e = find_catalog_entry(name);
        if (!e) throw ValidationError("name", "no catalog entry named " + name);
        return from_json(to_json(*e));
      },
      py::arg("name"));
  m.def(
      "generate_triple",
      [](const std::string& fiber, const std::string& base, int t, std::uint64_t seed) {
        const auto* f = find_catalog_entry(fiber);
        const auto* b = find_catalog_entry(base);
        if (!f || !b) throw ValidationError("name", "unknown catalog entry");
        return from_json(to_json(generate_triple(*f, *b, t, seed)));
      },
      py::arg("fiber"), py::arg("base"), py::arg("t"), py::arg("seed"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs a genuslab command; returns (exit status, stdout, stderr).");
}
