#pragma once

// Manifold fixtures, synthetic bundle triples and the JSON document formats.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "genuslab/genus.hpp"
#include "genuslab/lattice.hpp"

namespace genuslab {

inline constexpr std::string_view kManifoldSchema = "genuslab/manifold/1";
inline constexpr std::string_view kTripleSchema = "genuslab/triple/1";
inline constexpr std::string_view kLatticeSchema = "genuslab/lattice/1";
inline constexpr std::string_view kZ2FormSchema = "genuslab/z2form/1";
inline constexpr std::string_view kZ4FormSchema = "genuslab/z4form/1";

struct ManifoldModel {
  std::string name;
  ChiVector chi;
  std::optional<HodgeDiamond> hodge;
  std::optional<ChernData> chern;
  std::optional<IntegralLattice> lattice;  // middle-cohomology form, even n only
  bool singular = false;

  int dimension() const { return chi.dimension(); }
};

// Re-checks every invariant: Hodge and Chern routes agree with chi, duality
// unless singular, lattice unimodular with signature chi_1. Throws
// ValidationError naming the field; `prefix` is prepended to field names.
void validate(const ManifoldModel& model, const std::string& prefix = "");

enum class Provenance { catalog, generated, user };
std::string_view to_string(Provenance p);

struct BundleTriple {
  ManifoldModel fiber;
  ManifoldModel total;
  ManifoldModel base;
  bool monodromy_mod4_trivial = false;
  Provenance provenance = Provenance::user;
  std::string note;
};

// Dimensions add up and chi(E) = chi(F) chi(B). With duality_mode every
// member must satisfy chi^p duality, whatever its singular flag says.
void validate(const BundleTriple& triple, bool duality_mode = true);

ManifoldModel product_model(const ManifoldModel& a, const ManifoldModel& b);

// Point, P^1..P^4, elliptic curve, curves of genus 2 and 3, K3, and pairwise
// products. Every entry passes validate().
const std::vector<ManifoldModel>& builtin_catalog();
const ManifoldModel* find_catalog_entry(std::string_view name);

// E is F x B adjusted by |t| paired moves (sign of t): +-1 at chi^p and
// chi^{n-p} for an even p, and the same for an odd p'. Keeps duality and the
// Euler characteristic, shifts sigma by 4t. Positions come from `seed`.
BundleTriple generate_triple(const ManifoldModel& fiber, const ManifoldModel& base, int t, std::uint64_t seed);

// Arbitrary integer chi-vector with entries in [-bound, bound].
ChiVector random_chi_vector(int n, int bound, std::uint64_t seed);

// Triple without duality: E = F x B plus `moves` random (+-1 at an even
// index, same sign at an odd index) adjustments. chi(E) = chi(F) chi(B) and
// sigma-defect is even. Requires n_F + n_B >= 1.
BundleTriple generate_singular_triple(const ChiVector& fiber, const ChiVector& base, int moves, std::uint64_t seed);

// JSON. Integers beyond the 53-bit safe range are written as strings.
nlohmann::ordered_json to_json(const ManifoldModel& model);
nlohmann::ordered_json to_json(const BundleTriple& triple);
nlohmann::ordered_json to_json(const IntegralLattice& lattice);
nlohmann::ordered_json to_json(const Z2QuadraticForm& form);
nlohmann::ordered_json to_json(const Z4QuadraticForm& form);

ManifoldModel manifold_from_json(const nlohmann::json& doc);
// Members may be inline manifold documents or catalog names.
BundleTriple triple_from_json(const nlohmann::json& doc);
IntegralLattice lattice_from_json(const nlohmann::json& doc);
Z2QuadraticForm z2form_from_json(const nlohmann::json& doc);
Z4QuadraticForm z4form_from_json(const nlohmann::json& doc);

using Document = std::variant<ManifoldModel, BundleTriple, IntegralLattice, Z2QuadraticForm, Z4QuadraticForm>;

// Dispatches on the "schema" field and validates.
Document validate_document(const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);
Document load_document(const std::filesystem::path& path);

}  // namespace genuslab
