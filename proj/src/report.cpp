#include "genuslab/report.hpp"

#include <cstdio>
#include <sstream>

#include "genuslab/error.hpp"
#include "genuslab/lattice.hpp"

namespace genuslab {

using nlohmann::ordered_json;

namespace {

ordered_json number(const BigInt& v) {
  static const BigInt limit("9007199254740991");
  if (abs(v) <= limit) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json coefficients(const YPolynomial& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coefficients()) a.push_back(number(c));
  return a;
}

ordered_json coordinates(Z2Vector v, int dim) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < dim; ++i) a.push_back(v[i] ? 1 : 0);
  return a;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

long residue(const BigInt& v, long m) { return mod_floor(v, BigInt(m)).get_si(); }

}  // namespace

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["arguments"] = arguments;
  j["inputs_digest"] = inputs_digest;
  j["results"] = results;
  j["exit_status"] = exit_status;
  return j;
}

std::string inputs_digest(const std::vector<nlohmann::json>& inputs) {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& doc : inputs) {
    feed(doc.dump());
    feed("\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

void fill_genus_report(Report& report, const ManifoldModel& model) {
  const YPolynomial chi_y = chi_y_polynomial(model.chi);
  const Specializations s = specialize(chi_y);
  const ParityParts parts = parity_parts(model.chi);

  auto& r = report.results;
  r["name"] = model.name;
  r["n"] = model.dimension();
  r["chi_y"] = to_string(chi_y);
  r["chi_y_coefficients"] = coefficients(chi_y);
  r["euler"] = number(s.euler);
  r["todd"] = number(s.todd);
  r["signature"] = number(s.signature);
  r["chi_even"] = number(parts.chi_even);
  r["chi_odd"] = number(parts.chi_odd);
  r["duality"] = check_duality(model.chi);
  r["singular"] = model.singular;
  if (model.chern) r["chern_route"] = to_string(genus_from_chern(*model.chern));

  std::ostringstream text;
  text << "chi_y = " << to_string(chi_y) << "; chi=" << s.euler << " todd=" << s.todd << " sigma=" << s.signature << "\n";
  report.text = text.str();
  report.exit_status = kExitOk;
}

void fill_reduce_report(Report& report, const ManifoldModel& model, ReduceModulus modulus) {
  const YPolynomial chi_y = chi_y_polynomial(model.chi);
  const Specializations s = specialize(chi_y);
  YPolynomial reduced;
  YPolynomial canonical;
  std::string modulus_name;
  std::string canonical_form;
  if (modulus.kind == ReduceModulus::one_minus_y2) {
    reduced = reduce_mod_1_minus_y2(chi_y);
    canonical = signature_euler_canonical(s.signature, s.euler);
    modulus_name = "1-y2";
    canonical_form = "(sigma/2)(1+y) + (chi/2)(1-y)";
  } else {
    reduced = reduce_mod_y_minus_y3(chi_y);
    canonical = todd_euler_signature_canonical(s.todd, s.euler, s.signature);
    modulus_name = "y-y3";
    canonical_form = "todd(1-y^2) + (chi/2)(y^2-y) + (sigma/2)(y^2+y)";
  }
  const bool match = reduced == canonical;

  auto& r = report.results;
  r["name"] = model.name;
  r["modulus"] = modulus_name;
  r["chi_y"] = to_string(chi_y);
  r["reduced"] = to_string(reduced);
  r["canonical"] = to_string(canonical);
  r["match"] = match;
  if (modulus.kind == ReduceModulus::one_minus_y2) {
    r["difference_divisible_by_1_minus_y2"] = divisible_by_1_minus_y2(chi_y - canonical);
  }

  std::ostringstream text;
  text << "chi_y = " << to_string(chi_y) << "\n";
  text << "reduced mod " << (modulus.kind == ReduceModulus::one_minus_y2 ? "1-y^2" : "y-y^3") << ": " << to_string(reduced)
       << "\n";
  text << "canonical " << canonical_form << ": " << to_string(canonical) << "\n";
  text << "match: " << (match ? "OK" : "FAIL") << "\n";
  report.text = text.str();
  report.exit_status = match ? kExitOk : kExitCongruenceFailure;
}

void fill_check_bundle_report(Report& report, const BundleTriple& triple, const std::vector<long>& ys,
                              const CongruenceOptions& options) {
  const YPolynomial e = chi_y_polynomial(triple.total.chi);
  const YPolynomial fb = chi_y_polynomial(triple.fiber.chi) * chi_y_polynomial(triple.base.chi);
  const YPolynomial d = defect(triple.total.chi, triple.fiber.chi, triple.base.chi);
  const BigInt sd = signature_defect(triple.total.chi, triple.fiber.chi, triple.base.chi);

  auto& r = report.results;
  r["F"] = triple.fiber.name;
  r["E"] = triple.total.name;
  r["B"] = triple.base.name;
  r["mode"] = options.duality_mode ? "duality" : "singular";
  r["monodromy_mod4_trivial"] = options.monodromy_mod4_trivial;
  r["chi_y_E"] = to_string(e);
  r["chi_y_F_times_B"] = to_string(fb);
  r["defect"] = to_string(d);
  r["sigma_defect"] = number(sd);

  std::ostringstream text;
  text << "mode: " << (options.duality_mode ? "duality (moduli 4/8)" : "singular (moduli 2/4)");
  if (options.monodromy_mod4_trivial) text << "; monodromy mod 4 asserted trivial";
  text << "\n";
  text << "chi_y(E) = " << to_string(e) << "\n";
  text << "chi_y(F)chi_y(B) = " << to_string(fb) << "\n";
  text << "defect = " << to_string(d) << "; sigma-defect = " << sd << "\n";
  text << pad("y", 5) << pad("chi_y(E)", 14) << pad("chi_y(F)chi_y(B)", 18) << pad("defect", 14) << pad("mod4", 6)
       << pad("mod8", 6) << pad("modulus", 9) << "  verdict\n";

  ordered_json rows = ordered_json::array();
  long failures = 0;
  for (long y : ys) {
    const auto c = classify_and_check(d, sd, y, options);
    const BigInt ey = e.evaluate(BigInt(y));
    const BigInt fby = fb.evaluate(BigInt(y));
    ordered_json row;
    row["y"] = y;
    row["chi_y_E"] = number(ey);
    row["chi_y_F_times_B"] = number(fby);
    row["defect"] = number(c.defect_value);
    row["defect_mod4"] = residue(c.defect_value, 4);
    row["defect_mod8"] = residue(c.defect_value, 8);
    row["guaranteed_modulus"] = c.guaranteed_modulus;
    row["holds"] = c.holds;
    if (c.equivalence_checked) {
      ordered_json eq;
      eq["modulus"] = c.equivalence_modulus;
      eq["defect_vanishes"] = c.defect_vanishes;
      eq["sigma_defect_vanishes"] = c.sigma_vanishes;
      eq["holds"] = c.equivalence_holds;
      row["equivalence"] = std::move(eq);
    } else {
      row["equivalence"] = nullptr;
    }
    row["ok"] = c.ok();
    rows.push_back(std::move(row));
    if (!c.ok()) ++failures;

    std::string verdict = c.holds ? "OK" : "FAIL";
    if (c.equivalence_checked) {
      verdict += "; mod-" + std::to_string(c.equivalence_modulus) + " clause: defect " +
                 (c.defect_vanishes ? "vanishes" : "does not vanish") + ", sigma-defect " +
                 (c.sigma_vanishes ? "vanishes" : "does not vanish") + ": equivalence " +
                 (c.equivalence_holds ? "OK" : "FAIL");
    }
    text << pad(std::to_string(y), 5) << pad(ey.get_str(), 14) << pad(fby.get_str(), 18)
         << pad(c.defect_value.get_str(), 14) << pad(std::to_string(residue(c.defect_value, 4)), 6)
         << pad(std::to_string(residue(c.defect_value, 8)), 6) << pad(std::to_string(c.guaranteed_modulus), 9) << "  "
         << verdict << "\n";
  }
  r["rows"] = std::move(rows);
  r["failures"] = failures;
  text << (failures == 0 ? "all congruences hold\n" : std::to_string(failures) + " congruence check(s) FAILED\n");
  report.text = text.str();
  report.exit_status = failures == 0 ? kExitOk : kExitCongruenceFailure;
}

void fill_arf_report(Report& report, const Z2QuadraticForm& form) {
  const auto basis = symplectic_basis(form.space());
  const int value = arf(form);
  auto& r = report.results;
  r["dim"] = form.dim();
  ordered_json pairs = ordered_json::array();
  for (const auto& [e, e_bar] : basis) pairs.push_back({coordinates(e, form.dim()), coordinates(e_bar, form.dim())});
  r["symplectic_basis"] = std::move(pairs);
  r["arf"] = value;
  bool agree = true;
  std::ostringstream text;
  text << "Arf = " << value;
  if (form.dim() <= kMaxEnumerationDimension) {
    const int oracle = arf_gauss_oracle(form);
    agree = oracle == value;
    r["gauss_oracle"] = oracle;
    text << " (Gauss-sum oracle: " << oracle << (agree ? ", agrees" : ", DISAGREES") << ")";
  } else {
    r["gauss_oracle"] = nullptr;
  }
  r["agree"] = agree;
  text << "\n";
  report.text = text.str();
  report.exit_status = agree ? kExitOk : kExitCongruenceFailure;
}

void fill_brown_report(Report& report, const Z4QuadraticForm& form, const IntegralLattice* lattice) {
  const int brown = brown_invariant(form);
  auto& r = report.results;
  r["dim"] = form.dim();
  std::ostringstream text;
  text << "Brown = " << brown;
  if (form.dim() <= kMaxEnumerationDimension) {
    const GaussianInteger g = gauss_sum(form);
    r["gauss_sum"] = {{"re", g.re}, {"im", g.im}};
    text << " (Gauss sum " << g.re << (g.im < 0 ? " - " : " + ") << (g.im < 0 ? -g.im : g.im) << "i)";
  } else {
    r["gauss_sum"] = nullptr;
    text << " (orthogonal splitting)";
  }
  r["brown"] = brown;
  text << "\n";
  report.exit_status = kExitOk;
  if (lattice) {
    const int sigma = lattice_signature(*lattice);
    const bool agree = mod_floor(static_cast<long>(sigma - brown), 8L) == 0;
    r["signature"] = sigma;
    r["signature_mod8"] = mod_floor(static_cast<long>(sigma), 8L);
    r["agree"] = agree;
    text << "signature = " << sigma << "; Brown = sigma mod 8: " << (agree ? "OK" : "FAIL") << "\n";
    report.exit_status = agree ? kExitOk : kExitCongruenceFailure;
  }
  report.text = text.str();
}

void fill_pipeline_report(Report& report, const IntegralLattice& total, const IntegralLattice& product) {
  const int sigma_e = lattice_signature(total);
  const int sigma_fb = lattice_signature(product);
  const long sigma_defect = sigma_e - sigma_fb;
  if (mod_floor(sigma_defect, 4L) != 0) {
    throw Error("sigma-defect " + std::to_string(sigma_defect) + " is not divisible by 4");
  }
  const auto form = signature_defect_form(lattice_to_forms(total), lattice_to_forms(product));
  const long four_arf = 4L * form.arf;
  const bool consistent = mod_floor(four_arf - sigma_defect, 8L) == 0;

  auto& r = report.results;
  r["sigma_E"] = sigma_e;
  r["sigma_FB"] = sigma_fb;
  r["sigma_defect"] = sigma_defect;
  r["perp_dimension"] = form.perp_dimension;
  r["W_dimension"] = form.quotient.dim();
  r["perp_descriptions_agree"] = form.perp_descriptions_agree;
  r["enhancement_descends"] = form.enhancement_descends;
  r["arf"] = form.arf;
  r["four_arf_mod8"] = mod_floor(four_arf, 8L);
  r["sigma_defect_mod8"] = mod_floor(sigma_defect, 8L);
  r["consistent"] = consistent;

  std::ostringstream text;
  text << "W dimension = " << form.quotient.dim() << "\n";
  text << "Arf = " << form.arf << "; 4*Arf = " << four_arf << " ≡ sigma-defect mod 8: " << (consistent ? "OK" : "FAIL")
       << "\n";
  report.text = text.str();
  report.exit_status = consistent ? kExitOk : kExitCongruenceFailure;
}

void fill_catalog_report(Report& report) {
  ordered_json entries = ordered_json::array();
  std::ostringstream text;
  for (const auto& m : builtin_catalog()) {
    const YPolynomial chi_y = chi_y_polynomial(m.chi);
    const Specializations s = specialize(chi_y);
    ordered_json e;
    e["name"] = m.name;
    e["n"] = m.dimension();
    e["chi_y"] = to_string(chi_y);
    e["euler"] = number(s.euler);
    e["todd"] = number(s.todd);
    e["signature"] = number(s.signature);
    e["hodge"] = m.hodge.has_value();
    e["chern"] = m.chern.has_value();
    e["lattice"] = m.lattice.has_value();
    entries.push_back(std::move(e));
    text << m.name << " (n=" << m.dimension() << "): chi_y = " << to_string(chi_y) << "; chi=" << s.euler
         << " todd=" << s.todd << " sigma=" << s.signature << "\n";
  }
  report.results["entries"] = std::move(entries);
  report.text = text.str();
  report.exit_status = kExitOk;
}

}  // namespace genuslab
