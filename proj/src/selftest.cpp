#include "genuslab/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "genuslab/congruence.hpp"
#include "genuslab/error.hpp"
#include "genuslab/lattice.hpp"
#include "genuslab/models.hpp"
#include "genuslab/series.hpp"
#include "genuslab/z2forms.hpp"

namespace genuslab {

namespace {

using Check = std::function<std::string()>;  // empty string on success

std::vector<ChiVector> catalog_and_generated() {
  std::vector<ChiVector> out;
  const auto& cat = builtin_catalog();
  for (const auto& m : cat) out.push_back(m.chi);
  std::uint64_t seed = 1;
  for (const auto& f : cat) {
    for (const auto& b : cat) {
      const int n = f.dimension() + b.dimension();
      if (n > 6) continue;
      if (n == 0 || n % 2 == 1) {
        out.push_back(generate_triple(f, b, 0, seed++).total.chi);
        continue;
      }
      for (int t : {-2, -1, 1, 3}) out.push_back(generate_triple(f, b, t, seed++).total.chi);
    }
  }
  return out;
}

std::string dual_route() {
  int checked = 0;
  for (const auto& m : builtin_catalog()) {
    if (!m.hodge || !m.chern) continue;
    if (genus_from_chern(*m.chern) != chi_y_polynomial(chi_vector_from_hodge(*m.hodge))) {
      return m.name + ": Chern and Hodge routes differ";
    }
    ++checked;
  }
  for (int n = 0; n <= 4; ++n) {
    const auto fx = projective_space_fixture(n);
    if (n > 0 && genus_from_chern(fx.chern) != chi_y_polynomial(chi_vector_from_hodge(fx.hodge))) {
      return "P" + std::to_string(n) + ": Chern and Hodge routes differ";
    }
  }
  return checked == 0 ? "no catalog entry carries both routes" : "";
}

std::string series_identities() {
  const int order = 6;
  const auto q = qy_series(order);
  const auto todd = todd_series(order);
  if (q.at_y(0) != todd.at_y(0)) return "Q_y at y=0 is not the Todd series";
  const auto at_minus_one = q.at_y(-1);
  for (int k = 0; k <= order; ++k) {
    if (at_minus_one[static_cast<std::size_t>(k)] != (k <= 1 ? BigRational(1) : BigRational(0))) {
      return "Q_y at y=-1 is not 1 + alpha";
    }
  }
  // The Chern route for P^n uses the full multiplicative sequence.
  for (int n = 1; n <= 4; ++n) {
    const auto fx = projective_space_fixture(n);
    if (specialize(genus_from_chern(fx.chern)).euler != n + 1) return "chi(P^" + std::to_string(n) + ") != n+1";
  }
  return "";
}

std::string duality_and_parity() {
  for (const auto& v : catalog_and_generated()) {
    if (!check_duality(v)) return "duality fails for a vector of dimension " + std::to_string(v.dimension());
    const auto s = specialize(chi_y_polynomial(v));
    const auto parts = parity_parts(v);
    if (s.signature != parts.chi_even + parts.chi_odd) return "sigma != chi_even + chi_odd";
    if (s.euler != parts.chi_even - parts.chi_odd) return "chi != chi_even - chi_odd";
    if (v.dimension() % 2 == 1 && s.signature != 0) return "sigma != 0 in odd dimension";
  }
  return "";
}

std::string canonical_forms() {
  for (const auto& v : catalog_and_generated()) {
    const auto p = chi_y_polynomial(v);
    const auto s = specialize(p);
    const auto c1 = signature_euler_canonical(s.signature, s.euler);
    if (!divisible_by_1_minus_y2(p - c1)) return "chi_y - canonical not divisible by 1-y^2: " + to_string(p);
    if (reduce_mod_1_minus_y2(p) != c1) return "reduction mod 1-y^2 disagrees: " + to_string(p);
    if (reduce_mod_y_minus_y3(p) != todd_euler_signature_canonical(s.todd, s.euler, s.signature)) {
      return "reduction mod y-y^3 disagrees: " + to_string(p);
    }
  }
  const auto* k3 = find_catalog_entry("K3");
  if (!k3 || to_string(reduce_mod_1_minus_y2(chi_y_polynomial(k3->chi))) != "4 - 20*y") return "K3 spot value";
  return "";
}

std::string generated_triples() {
  const auto& cat = builtin_catalog();
  const auto ys = odd_values(-99, 99);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const auto& f = cat[rng() % cat.size()];
    const auto& b = cat[rng() % cat.size()];
    const int n = f.dimension() + b.dimension();
    const int t = (n == 0 || n % 2 == 1) ? 0 : static_cast<int>(rng() % 11) - 5;
    const auto triple = generate_triple(f, b, t, rng());
    validate(triple, true);
    const auto sd = signature_defect(triple.total.chi, triple.fiber.chi, triple.base.chi);
    if (sd != 4 * t) return triple.total.name + ": sigma-defect " + sd.get_str() + " != 4t";
    for (const auto& r : check_triple(triple.total.chi, triple.fiber.chi, triple.base.chi, ys)) {
      if (!r.ok()) return triple.total.name + ": congruence fails at y=" + std::to_string(r.y);
    }
  }
  return "";
}

std::string singular_triples() {
  const auto ys = odd_values(-99, 99);
  const CongruenceOptions options{false, false};
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int nf = static_cast<int>(seed % 3);
    const int nb = 1 + static_cast<int>(seed % 2);
    const auto triple = generate_singular_triple(random_chi_vector(nf, 5, seed), random_chi_vector(nb, 5, seed + 100),
                                                 static_cast<int>(seed % 4), seed);
    validate(triple, false);
    for (const auto& r : check_triple(triple.total.chi, triple.fiber.chi, triple.base.chi, ys, options)) {
      if (!r.ok()) return "singular triple seed " + std::to_string(seed) + " fails at y=" + std::to_string(r.y);
    }
  }
  return "";
}

Z2BilinearSpace random_symplectic(int dim, std::mt19937_64& rng) {
  // Standard hyperbolic sum in a random basis.
  Z2BilinearSpace h = Z2BilinearSpace::hyperbolic();
  Z2BilinearSpace space = h;
  for (int k = 2; k < dim; k += 2) space = orthogonal_sum(space, h);
  std::vector<Z2Vector> basis;
  while (static_cast<int>(basis.size()) < dim) {
    Z2Vector v(rng() & ((std::uint64_t{1} << dim) - 1));
    basis.push_back(v);
    if (z2_rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  std::vector<Z2Vector> rows(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) rows[static_cast<std::size_t>(i)].set(j, space.pairing(basis[i], basis[j]));
  }
  return Z2BilinearSpace(dim, rows);
}

std::string arf_against_oracle() {
  std::mt19937_64 rng(7);
  for (int dim : {2, 4, 6}) {
    for (int sample = 0; sample < 4; ++sample) {
      const auto space = random_symplectic(dim, rng);
      for (std::uint64_t values = 0; values < (std::uint64_t{1} << dim); ++values) {
        const Z2QuadraticForm h(space, Z2Vector(values));
        if (arf(h) != arf_gauss_oracle(h)) return "dim " + std::to_string(dim) + ": Arf disagrees with oracle";
        if (brown_invariant(doubled(h)) != 4 * arf(h)) return "Brown(2h) != 4 Arf(h)";
      }
    }
  }
  return "";
}

Z4QuadraticForm random_z4_form(int dim, std::mt19937_64& rng) {
  std::vector<std::vector<int>> gram(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(dim)));
  while (true) {
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) gram[i][j] = gram[j][i] = static_cast<int>(rng() & 1U);
    }
    const auto space = Z2BilinearSpace::from_matrix(gram);
    if (!space.is_nonsingular()) continue;
    std::vector<int> q(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) q[i] = gram[i][i] + 2 * static_cast<int>(rng() & 1U);
    return Z4QuadraticForm(space, q);
  }
}

std::string brown_additivity() {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_z4_form(1 + static_cast<int>(rng() % 3), rng);
    const auto b = random_z4_form(1 + static_cast<int>(rng() % 3), rng);
    if (brown_invariant(orthogonal_sum(a, b)) != (brown_invariant(a) + brown_invariant(b)) % 8) {
      return "Brown invariant not additive";
    }
  }
  return "";
}

std::string lattice_invariants() {
  std::vector<IntegralLattice> lattices{e8_lattice(), negated(e8_lattice())};
  for (int plus = 0; plus <= 8; ++plus) {
    for (int minus = 0; plus + minus <= 8; ++minus) {
      if (plus + minus == 0) continue;
      std::vector<int> d(static_cast<std::size_t>(plus), 1);
      d.insert(d.end(), static_cast<std::size_t>(minus), -1);
      lattices.push_back(diagonal_lattice(d));
    }
  }
  for (const auto& l : lattices) {
    const int sigma = lattice_signature(l);
    const auto forms = lattice_to_forms(l);
    const int brown = brown_invariant(forms.square);
    if (mod_floor(static_cast<long>(sigma - brown), 8L) != 0) return "Brown != sigma mod 8";
    if (mod_floor(static_cast<long>(sigma), 4L) != 0) continue;
    const auto m = morita_arf_check(l);
    if (!m.van_der_blij) return "van der Blij fails";
    if (!m.consistent) return "sigma != 4 Arf mod 8";
  }
  if (morita_arf_check(diagonal_lattice({1, 1, 1, 1})).arf != 1) return "diag(1,1,1,1) Arf != 1";
  if (morita_arf_check(e8_lattice()).arf != 0) return "E8 Arf != 0";
  return "";
}

std::string pipeline_pairs() {
  const auto h = hyperbolic_lattice();
  const std::vector<IntegralLattice> set{
      diagonal_lattice({1, 1, 1, 1}), orthogonal_sum(h, h), e8_lattice(), diagonal_lattice({1, 1, 1, 1, 1, 1, 1, 1}),
      orthogonal_sum(diagonal_lattice({1, 1, 1, 1}), h)};
  int checked = 0;
  for (const auto& e : set) {
    for (const auto& fb : set) {
      const long sd = lattice_signature(e) - lattice_signature(fb);
      if (mod_floor(sd, 4L) != 0) continue;
      const auto form = signature_defect_form(lattice_to_forms(e), lattice_to_forms(fb));
      if (!form.perp_descriptions_agree || !form.enhancement_descends) return "pipeline consistency flags";
      if (mod_floor(4L * form.arf - sd, 8L) != 0) return "4 Arf != sigma-defect mod 8";
      ++checked;
    }
  }
  const auto ex = signature_defect_form(lattice_to_forms(set[0]), lattice_to_forms(set[1]));
  if (ex.arf != 1) return "diag(1,1,1,1) vs H+H Arf != 1";
  return checked == 0 ? "no pair checked" : "";
}

std::string json_round_trip() {
  for (const auto& m : builtin_catalog()) {
    const auto doc = nlohmann::json::parse(to_json(m).dump());
    const auto back = manifold_from_json(doc);
    if (!(back.chi == m.chi) || back.name != m.name) return m.name + ": JSON round trip changed the model";
  }
  return "";
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  const std::vector<std::pair<std::string, Check>> checks{
      {"series identities", series_identities},
      {"dual-route genus", dual_route},
      {"duality and parity", duality_and_parity},
      {"canonical forms", canonical_forms},
      {"generated triples", generated_triples},
      {"singular triples", singular_triples},
      {"arf vs gauss oracle", arf_against_oracle},
      {"brown additivity", brown_additivity},
      {"lattice invariants", lattice_invariants},
      {"pipeline", pipeline_pairs},
      {"json round trip", json_round_trip},
  };
  std::vector<SelftestResult> results;
  for (const auto& [name, check] : checks) {
    SelftestResult r{name, false, ""};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace genuslab
