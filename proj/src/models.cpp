#include "genuslab/models.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "genuslab/error.hpp"

namespace genuslab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

HodgeDiamond diamond(std::vector<std::vector<int>> rows) {
  HodgeDiamond d;
  d.n = static_cast<int>(rows.size()) - 1;
  for (const auto& row : rows) d.h.emplace_back(row.begin(), row.end());
  return d;
}

ChernData chern(int n, std::initializer_list<std::pair<Partition, long>> numbers) {
  ChernData c;
  c.n = n;
  for (const auto& [k, v] : numbers) c.numbers.emplace(k, BigInt(v));
  return c;
}

IntegralLattice int_lattice(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<BigInt>> g;
  for (const auto& row : rows) g.emplace_back(row.begin(), row.end());
  return IntegralLattice(std::move(g));
}

ManifoldModel from_hodge_and_chern(std::string name, HodgeDiamond h, ChernData c) {
  ManifoldModel m;
  m.name = std::move(name);
  m.chi = chi_vector_from_hodge(h);
  m.hodge = std::move(h);
  m.chern = std::move(c);
  return m;
}

ManifoldModel curve(std::string name, int genus) {
  return from_hodge_and_chern(std::move(name), diamond({{1, genus}, {genus, 1}}), chern(1, {{{1}, 2 - 2 * genus}}));
}

std::vector<ManifoldModel> make_catalog() {
  std::vector<ManifoldModel> out;
  out.push_back(from_hodge_and_chern("point", diamond({{1}}), chern(0, {})));
  for (int n = 1; n <= 4; ++n) {
    auto data = projective_space_fixture(n);
    auto m = from_hodge_and_chern("P" + std::to_string(n), data.hodge, data.chern);
    if (n % 2 == 0) m.lattice = int_lattice({{1}});
    out.push_back(std::move(m));
  }
  out.push_back(curve("elliptic_curve", 1));
  out.push_back(curve("C2", 2));
  out.push_back(curve("C3", 3));

  auto k3 = from_hodge_and_chern("K3", diamond({{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}), chern(2, {{{2}, 24}, {{1, 1}, 0}}));
  IntegralLattice k3_lattice = orthogonal_sum(negated(e8_lattice()), negated(e8_lattice()));
  for (int i = 0; i < 3; ++i) k3_lattice = orthogonal_sum(k3_lattice, hyperbolic_lattice());
  k3.lattice = k3_lattice;
  out.push_back(std::move(k3));

  auto entry = [&](std::string_view name) -> const ManifoldModel& {
    for (const auto& m : out) {
      if (m.name == name) return m;
    }
    throw Error("catalog construction: unknown entry " + std::string(name));
  };
  const std::vector<std::pair<std::string, std::string>> products = {
      {"P1", "P1"}, {"P1", "P2"}, {"P1", "P3"}, {"P2", "P2"}, {"P1", "elliptic_curve"},
      {"elliptic_curve", "elliptic_curve"}, {"P1", "C2"}, {"C2", "C2"}, {"C2", "C3"}, {"P1", "K3"},
      {"P2", "K3"}, {"elliptic_curve", "K3"}, {"C2", "K3"}, {"K3", "K3"},
  };
  std::vector<ManifoldModel> built;
  for (const auto& [a, b] : products) built.push_back(product_model(entry(a), entry(b)));
  for (auto& m : built) {
    // Middle-cohomology forms for the products whose intersection ring is easy to write down.
    if (m.name == "P1xP1") m.lattice = hyperbolic_lattice();
    if (m.name == "P2xP2") m.lattice = int_lattice({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    if (m.name == "elliptic_curvexelliptic_curve") {
      m.lattice = orthogonal_sum(orthogonal_sum(hyperbolic_lattice(), hyperbolic_lattice()), hyperbolic_lattice());
    }
    out.push_back(std::move(m));
  }
  for (const auto& m : out) validate(m);
  return out;
}

std::string field(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

// Integers outside [-(2^53 - 1), 2^53 - 1] go out as decimal strings.
ordered_json integer_to_json(const BigInt& v) {
  static const BigInt limit("9007199254740991");
  if (abs(v) <= limit) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

BigInt integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    const bool digits = s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                                        [](char c) { return c >= '0' && c <= '9'; });
    if (!digits) throw ValidationError(where, "\"" + s + "\" is not an integer");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  throw ValidationError(where, "expected an integer");
}

const json& require(const json& doc, const char* key, const std::string& prefix) {
  if (!doc.is_object()) throw ValidationError(prefix, "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(field(prefix, key), "missing field");
  return *it;
}

std::vector<BigInt> integer_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where, "expected an array");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<BigInt>> integer_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where, "expected an array of rows");
  std::vector<std::vector<BigInt>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_array(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

ordered_json matrix_to_json(const std::vector<std::vector<BigInt>>& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(integer_to_json(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<int>> small_matrix(const json& j, const std::string& where) {
  std::vector<std::vector<int>> out;
  for (const auto& row : integer_matrix(j, where)) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(static_cast<int>(mod_floor(v, BigInt(4)).get_si()));
    out.push_back(std::move(r));
  }
  return out;
}

void check_schema(const json& doc, std::string_view expected, const std::string& prefix, bool optional) {
  if (!doc.is_object()) throw ValidationError(prefix, "expected a JSON object");
  auto it = doc.find("schema");
  if (it == doc.end()) {
    if (optional) return;
    throw ValidationError(field(prefix, "schema"), "missing field");
  }
  if (!it->is_string() || it->get<std::string>() != expected) {
    throw ValidationError(field(prefix, "schema"), "expected \"" + std::string(expected) + "\"");
  }
}

ManifoldModel manifold_from_json_at(const json& doc, const std::string& prefix, bool schema_optional) {
  check_schema(doc, kManifoldSchema, prefix, schema_optional);
  ManifoldModel m;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ValidationError(field(prefix, "name"), "expected a string");
    m.name = it->get<std::string>();
  }
  const json& n_json = require(doc, "n", prefix);
  if (!n_json.is_number_integer() || n_json.get<long>() < 0 || n_json.get<long>() > 64) {
    throw ValidationError(field(prefix, "n"), "expected an integer in [0, 64]");
  }
  const int n = n_json.get<int>();
  try {
    m.chi = ChiVector(n, integer_array(require(doc, "chi", prefix), field(prefix, "chi")));
  } catch (const ValidationError& e) {
    if (e.field() == "chi") throw ValidationError(field(prefix, "chi"), e.message());
    throw;
  }
  if (auto it = doc.find("hodge"); it != doc.end() && !it->is_null()) {
    HodgeDiamond h;
    h.n = n;
    h.h = integer_matrix(*it, field(prefix, "hodge"));
    m.hodge = std::move(h);
  }
  if (auto it = doc.find("chern"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw ValidationError(field(prefix, "chern"), "expected an object keyed by partitions");
    ChernData c;
    c.n = n;
    for (const auto& [key, value] : it->items()) {
      const std::string where = field(prefix, "chern[\"" + key + "\"]");
      Partition part;
      try {
        part = parse_partition_key(key);
      } catch (const ValidationError& e) {
        throw ValidationError(where, e.message());
      }
      c.numbers[part] = integer_from_json(value, where);
    }
    m.chern = std::move(c);
  }
  if (auto it = doc.find("lattice"); it != doc.end() && !it->is_null()) {
    m.lattice = IntegralLattice(integer_matrix(*it, field(prefix, "lattice")));
  }
  if (auto it = doc.find("singular"); it != doc.end()) {
    if (!it->is_boolean()) throw ValidationError(field(prefix, "singular"), "expected a boolean");
    m.singular = it->get<bool>();
  }
  validate(m, prefix);
  return m;
}

ManifoldModel member_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto* entry = find_catalog_entry(j.get<std::string>());
    if (!entry) throw ValidationError(where, "unknown catalog entry \"" + j.get<std::string>() + "\"");
    return *entry;
  }
  return manifold_from_json_at(j, where, true);
}

}  // namespace

void validate(const ManifoldModel& model, const std::string& prefix) {
  const int n = model.dimension();
  if (model.hodge) {
    const auto& h = *model.hodge;
    if (h.n != n) throw ValidationError(field(prefix, "hodge"), "dimension differs from n");
    try {
      h.validate();
    } catch (const ValidationError& e) {
      throw ValidationError(field(prefix, e.field()), e.message());
    }
    const ChiVector from_hodge = chi_vector_from_hodge(h);
    for (int p = 0; p <= n; ++p) {
      if (from_hodge[p] != model.chi[p]) {
        throw ValidationError(field(prefix, "chi[" + std::to_string(p) + "]"),
                              "chi^" + std::to_string(p) + " = " + model.chi[p].get_str() +
                                  " but the Hodge numbers give " + from_hodge[p].get_str());
      }
    }
  }
  if (model.chern) {
    const auto& c = *model.chern;
    if (c.n != n) throw ValidationError(field(prefix, "chern"), "dimension differs from n");
    YPolynomial genus;
    try {
      genus = genus_from_chern(c);
    } catch (const ValidationError& e) {
      throw ValidationError(field(prefix, e.field()), e.message());
    } catch (const Error& e) {
      throw ValidationError(field(prefix, "chern"), e.what());
    }
    if (genus != chi_y_polynomial(model.chi)) {
      throw ValidationError(field(prefix, "chern"), "Chern numbers give chi_y = " + to_string(genus) + " but chi gives " +
                                                        to_string(chi_y_polynomial(model.chi)));
    }
  }
  if (!model.singular && !check_duality(model.chi)) {
    for (int p = 0; p <= n; ++p) {
      const BigInt mirrored = (n % 2 == 0) ? model.chi[n - p] : BigInt(-model.chi[n - p]);
      if (model.chi[p] != mirrored) {
        throw ValidationError(field(prefix, "chi[" + std::to_string(p) + "]"),
                              "duality chi^p = (-1)^n chi^{n-p} fails at p = " + std::to_string(p) +
                                  " (set singular = true for data without duality)");
      }
    }
  }
  if (model.lattice) {
    const auto& l = *model.lattice;
    if (n % 2 != 0) throw ValidationError(field(prefix, "lattice"), "middle-cohomology lattice requires even n");
    if (!l.is_unimodular()) {
      throw ValidationError(field(prefix, "lattice"), "not unimodular (det = " + l.determinant().get_str() + ")");
    }
    const int sigma = lattice_signature(l);
    const BigInt chi_sigma = specialize(chi_y_polynomial(model.chi)).signature;
    if (chi_sigma != sigma) {
      throw ValidationError(field(prefix, "lattice"), "lattice signature " + std::to_string(sigma) +
                                                          " differs from chi_1 = " + chi_sigma.get_str());
    }
  }
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::catalog:
      return "catalog";
    case Provenance::generated:
      return "generated";
    case Provenance::user:
      return "user";
  }
  return "user";
}

void validate(const BundleTriple& triple, bool duality_mode) {
  validate(triple.fiber, "F");
  validate(triple.total, "E");
  validate(triple.base, "B");
  if (triple.total.dimension() != triple.fiber.dimension() + triple.base.dimension()) {
    throw ValidationError("E.n", "n_E = " + std::to_string(triple.total.dimension()) + " differs from n_F + n_B = " +
                                     std::to_string(triple.fiber.dimension() + triple.base.dimension()));
  }
  const auto euler = [](const ManifoldModel& m) { return specialize(chi_y_polynomial(m.chi)).euler; };
  if (euler(triple.total) != euler(triple.fiber) * euler(triple.base)) {
    throw ValidationError("E.chi", "Euler characteristic " + euler(triple.total).get_str() + " differs from chi(F) chi(B) = " +
                                       BigInt(euler(triple.fiber) * euler(triple.base)).get_str());
  }
  if (duality_mode) {
    const std::pair<const ManifoldModel*, const char*> members[] = {{&triple.fiber, "F"}, {&triple.total, "E"}, {&triple.base, "B"}};
    for (const auto& [m, label] : members) {
      if (!check_duality(m->chi)) {
        throw ValidationError(std::string(label) + ".chi", "chi^p duality fails; use singular mode for this triple");
      }
    }
  }
}

ManifoldModel product_model(const ManifoldModel& a, const ManifoldModel& b) {
  ManifoldModel m;
  m.name = a.name + "x" + b.name;
  m.chi = product_chi_vector(a.chi, b.chi);
  if (a.hodge && b.hodge) m.hodge = product_hodge(*a.hodge, *b.hodge);
  if (a.chern && b.chern) m.chern = product_chern(*a.chern, *b.chern);
  m.singular = a.singular || b.singular;
  return m;
}

const std::vector<ManifoldModel>& builtin_catalog() {
  static const std::vector<ManifoldModel> catalog = make_catalog();
  return catalog;
}

const ManifoldModel* find_catalog_entry(std::string_view name) {
  for (const auto& m : builtin_catalog()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

BundleTriple generate_triple(const ManifoldModel& fiber, const ManifoldModel& base, int t, std::uint64_t seed) {
  if (fiber.singular || base.singular) throw Error("generate_triple needs non-singular fiber and base");
  if (!check_duality(fiber.chi) || !check_duality(base.chi)) throw Error("generate_triple needs duality-satisfying inputs");
  const int n = fiber.dimension() + base.dimension();
  if (t != 0 && (n % 2 != 0 || n == 0)) {
    throw Error("nonzero t needs even positive total dimension (got n = " + std::to_string(n) + ")");
  }

  std::vector<BigInt> chi = product_chi_vector(fiber.chi, base.chi).values();
  std::mt19937_64 rng(seed);
  const int sign = t < 0 ? -1 : 1;
  const int even_count = n / 2 + 1;  // p = 0, 2, ..., n
  const int odd_count = n / 2;       // p = 1, 3, ..., n-1
  for (int move = 0; move < std::abs(t); ++move) {
    const int p_even = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(even_count));
    const int p_odd = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(odd_count)) + 1;
    for (int p : {p_even, p_odd}) {
      chi[static_cast<std::size_t>(p)] += sign;
      chi[static_cast<std::size_t>(n - p)] += sign;  // doubles up when p = n - p
    }
  }

  BundleTriple triple;
  triple.fiber = fiber;
  triple.base = base;
  triple.total.name = "E[" + fiber.name + "," + base.name + ",t=" + std::to_string(t) + ",seed=" + std::to_string(seed) + "]";
  triple.total.chi = ChiVector(n, std::move(chi));
  triple.provenance = Provenance::generated;
  triple.note = "synthesized at the chi-vector level; realizability by an algebraic fibre bundle is not claimed";
  validate(triple, true);
  return triple;
}

ChiVector random_chi_vector(int n, int bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> v(static_cast<std::size_t>(n) + 1);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (auto& x : v) x = static_cast<long>(rng() % span) - bound;
  return ChiVector(n, std::move(v));
}

BundleTriple generate_singular_triple(const ChiVector& fiber, const ChiVector& base, int moves, std::uint64_t seed) {
  const int n = fiber.dimension() + base.dimension();
  if (n < 1) throw Error("singular triples need total dimension at least 1");
  std::vector<BigInt> chi = product_chi_vector(fiber, base).values();
  std::mt19937_64 rng(seed);
  const int even_count = n / 2 + 1;
  const int odd_count = (n + 1) / 2;
  for (int move = 0; move < moves; ++move) {
    const int sign = (rng() & 1U) ? 1 : -1;
    const int p_even = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(even_count));
    const int p_odd = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(odd_count)) + 1;
    chi[static_cast<std::size_t>(p_even)] += sign;
    chi[static_cast<std::size_t>(p_odd)] += sign;
  }
  BundleTriple triple;
  triple.fiber.name = "F";
  triple.fiber.chi = fiber;
  triple.fiber.singular = true;
  triple.base.name = "B";
  triple.base.chi = base;
  triple.base.singular = true;
  triple.total.name = "E[singular,moves=" + std::to_string(moves) + ",seed=" + std::to_string(seed) + "]";
  triple.total.chi = ChiVector(n, std::move(chi));
  triple.total.singular = true;
  triple.provenance = Provenance::generated;
  triple.note = "arbitrary chi-vectors without duality";
  validate(triple, false);
  return triple;
}

ordered_json to_json(const ManifoldModel& model) {
  ordered_json j;
  j["schema"] = kManifoldSchema;
  j["name"] = model.name;
  j["n"] = model.dimension();
  ordered_json chi = ordered_json::array();
  for (const auto& v : model.chi.values()) chi.push_back(integer_to_json(v));
  j["chi"] = std::move(chi);
  if (model.hodge) j["hodge"] = matrix_to_json(model.hodge->h);
  if (model.chern) {
    ordered_json c = ordered_json::object();
    for (const auto& part : partitions_of(model.dimension())) {
      auto it = model.chern->numbers.find(part);
      if (it != model.chern->numbers.end()) c[partition_key(part)] = integer_to_json(it->second);
    }
    j["chern"] = std::move(c);
  }
  if (model.lattice) j["lattice"] = matrix_to_json(model.lattice->gram());
  j["singular"] = model.singular;
  return j;
}

ordered_json to_json(const BundleTriple& triple) {
  ordered_json j;
  j["schema"] = kTripleSchema;
  j["F"] = to_json(triple.fiber);
  j["E"] = to_json(triple.total);
  j["B"] = to_json(triple.base);
  j["monodromy_mod4_trivial"] = triple.monodromy_mod4_trivial;
  j["provenance"] = to_string(triple.provenance);
  if (!triple.note.empty()) j["note"] = triple.note;
  return j;
}

ordered_json to_json(const IntegralLattice& lattice) {
  ordered_json j;
  j["schema"] = kLatticeSchema;
  j["gram"] = matrix_to_json(lattice.gram());
  return j;
}

ordered_json to_json(const Z2QuadraticForm& form) {
  ordered_json j;
  j["schema"] = kZ2FormSchema;
  j["gram"] = form.space().matrix();
  std::vector<int> h;
  for (int i = 0; i < form.dim(); ++i) h.push_back(form.basis_values()[i] ? 1 : 0);
  j["h"] = h;
  return j;
}

ordered_json to_json(const Z4QuadraticForm& form) {
  ordered_json j;
  j["schema"] = kZ4FormSchema;
  j["gram"] = form.space().matrix();
  j["q"] = form.basis_values();
  return j;
}

ManifoldModel manifold_from_json(const json& doc) { return manifold_from_json_at(doc, "", false); }

BundleTriple triple_from_json(const json& doc) {
  check_schema(doc, kTripleSchema, "", false);
  BundleTriple t;
  t.fiber = member_from_json(require(doc, "F", ""), "F");
  t.total = member_from_json(require(doc, "E", ""), "E");
  t.base = member_from_json(require(doc, "B", ""), "B");
  if (auto it = doc.find("monodromy_mod4_trivial"); it != doc.end()) {
    if (!it->is_boolean()) throw ValidationError("monodromy_mod4_trivial", "expected a boolean");
    t.monodromy_mod4_trivial = it->get<bool>();
  }
  t.provenance = Provenance::user;
  if (auto it = doc.find("provenance"); it != doc.end()) {
    const std::string p = it->is_string() ? it->get<std::string>() : "";
    if (p == "catalog") {
      t.provenance = Provenance::catalog;
    } else if (p == "generated") {
      t.provenance = Provenance::generated;
    } else if (p != "user") {
      throw ValidationError("provenance", "expected one of catalog, generated, user");
    }
  }
  if (auto it = doc.find("note"); it != doc.end() && it->is_string()) t.note = it->get<std::string>();
  // Duality is checked by the caller once the mode is known.
  validate(t, false);
  return t;
}

IntegralLattice lattice_from_json(const json& doc) {
  check_schema(doc, kLatticeSchema, "", false);
  return IntegralLattice(integer_matrix(require(doc, "gram", ""), "gram"));
}

Z2QuadraticForm z2form_from_json(const json& doc) {
  check_schema(doc, kZ2FormSchema, "", false);
  auto gram = small_matrix(require(doc, "gram", ""), "gram");
  for (auto& row : gram) {
    for (auto& x : row) x &= 1;
  }
  const auto space = Z2BilinearSpace::from_matrix(gram);
  const auto h = integer_array(require(doc, "h", ""), "h");
  if (h.size() != static_cast<std::size_t>(space.dim())) {
    throw ValidationError("h", "expected " + std::to_string(space.dim()) + " basis values");
  }
  Z2Vector values;
  for (std::size_t i = 0; i < h.size(); ++i) values.set(static_cast<int>(i), mod_floor(h[i], BigInt(2)) != 0);
  return Z2QuadraticForm(space, values);
}

Z4QuadraticForm z4form_from_json(const json& doc) {
  check_schema(doc, kZ4FormSchema, "", false);
  auto gram = small_matrix(require(doc, "gram", ""), "gram");
  for (auto& row : gram) {
    for (auto& x : row) x &= 1;
  }
  std::vector<int> q;
  for (const auto& v : integer_array(require(doc, "q", ""), "q")) q.push_back(static_cast<int>(mod_floor(v, BigInt(4)).get_si()));
  return Z4QuadraticForm(Z2BilinearSpace::from_matrix(gram), std::move(q));
}

Document validate_document(const json& doc) {
  if (!doc.is_object()) throw ValidationError("", "expected a JSON object");
  auto it = doc.find("schema");
  if (it == doc.end() || !it->is_string()) throw ValidationError("schema", "missing or not a string");
  const std::string schema = it->get<std::string>();
  if (schema == kManifoldSchema) return manifold_from_json(doc);
  if (schema == kTripleSchema) return triple_from_json(doc);
  if (schema == kLatticeSchema) return lattice_from_json(doc);
  if (schema == kZ2FormSchema) return z2form_from_json(doc);
  if (schema == kZ4FormSchema) return z4form_from_json(doc);
  throw ValidationError("schema", "unknown schema \"" + schema + "\"");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("", path.filename().string() + ": parse error: " + e.what());
  }
}

Document load_document(const std::filesystem::path& path) { return validate_document(read_json_file(path)); }

}  // namespace genuslab
