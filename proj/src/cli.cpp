#include "genuslab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <regex>
#include <vector>

#include <CLI11.hpp>

#include "genuslab/error.hpp"
#include "genuslab/models.hpp"
#include "genuslab/report.hpp"
#include "genuslab/selftest.hpp"

namespace genuslab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Loaded {
  std::vector<json> inputs;

  // A JSON file, or the name of a catalog manifold.
  Document load(const std::string& arg) {
    if (fs::is_regular_file(arg)) {
      json doc = read_json_file(arg);
      inputs.push_back(doc);
      return validate_document(doc);
    }
    if (const auto* entry = find_catalog_entry(arg)) {
      inputs.push_back(json::parse(to_json(*entry).dump()));
      return *entry;
    }
    throw ValidationError("", "no such file or catalog entry: " + arg);
  }
};

ManifoldModel as_manifold(Document doc) {
  if (auto* m = std::get_if<ManifoldModel>(&doc)) return std::move(*m);
  throw ValidationError("schema", "expected a " + std::string(kManifoldSchema) + " document");
}

IntegralLattice as_lattice(Document doc) {
  if (auto* l = std::get_if<IntegralLattice>(&doc)) return std::move(*l);
  if (auto* m = std::get_if<ManifoldModel>(&doc)) {
    if (m->lattice) return *m->lattice;
    throw ValidationError("lattice", m->name + " carries no lattice");
  }
  throw ValidationError("schema", "expected a " + std::string(kLatticeSchema) + " document or a manifold with a lattice");
}

std::vector<long> parse_sweep(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d{1,9})\s*\.\.\s*(-?\d{1,9})\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ValidationError("--y-sweep", "expected A..B, got \"" + text + "\"");
  const long lo = std::stol(m[1].str());
  const long hi = std::stol(m[2].str());
  if (lo > hi) throw ValidationError("--y-sweep", "empty range " + text);
  auto ys = odd_values(lo, hi);
  if (ys.empty()) throw ValidationError("--y-sweep", "no odd value in " + text);
  return ys;
}

std::vector<std::string> echo_arguments(std::span<const std::string> args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::error_code ec;
    out.push_back(fs::is_regular_file(a, ec) ? fs::path(a).filename().string() : a);
  }
  return out;
}

void emit(const Report& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.text;
  }
}

int fail_input(Report& report, const std::string& field, const std::string& message, bool as_json, std::ostream& out,
               std::ostream& err) {
  err << "genuslab: error: " << (field.empty() ? message : field + ": " + message) << "\n";
  report.exit_status = kExitInputError;
  if (as_json) {
    report.results = nlohmann::ordered_json::object();
    report.results["error"] = {{"field", field}, {"message", message}};
    report.text.clear();
    emit(report, true, out);
  }
  return kExitInputError;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chi_y-genera, bundle congruences and Arf/Brown invariants", "genuslab"};
  app.set_version_flag("--version", std::string("genuslab ") + kVersion);
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "Write a machine-readable report to standard output");

  std::string input_a;
  std::string input_b;

  auto* genus = app.add_subcommand("genus", "chi_y polynomial with chi, todd genus and signature");
  genus->add_option("manifold", input_a, "Manifold document or catalog name")->required();

  std::string modulus = "1-y2";
  auto* reduce = app.add_subcommand("reduce", "Reduce chi_y and compare with its canonical form");
  reduce->add_option("--mod", modulus, "1-y2 or y-y3")->check(CLI::IsMember({"1-y2", "y-y3"}));
  reduce->add_option("manifold", input_a, "Manifold document or catalog name")->required();

  std::string sweep = "-99..99";
  bool singular = false;
  auto* check = app.add_subcommand("check-bundle", "Check the chi_y congruences of a bundle triple");
  check->add_option("triple", input_a, "Triple document")->required();
  check->add_option("--y-sweep", sweep, "Odd y in A..B (default -99..99)");
  check->add_flag("--singular", singular, "Use the weaker moduli for data without chi^p duality");

  auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a Z_2 quadratic form");
  arf_cmd->add_option("form", input_a, "z2form document")->required();

  auto* brown = app.add_subcommand("brown", "Brown invariant of a Z_4 quadratic form or unimodular lattice");
  brown->add_option("form", input_a, "z4form, lattice or manifold document")->required();

  auto* pipeline = app.add_subcommand("pipeline", "Signature defect mod 8 from the Arf invariant of (W, mu, h)");
  pipeline->add_option("total", input_a, "Lattice of E")->required();
  pipeline->add_option("product", input_b, "Lattice of F x B")->required();

  std::string catalog_name;
  auto* catalog = app.add_subcommand("catalog", "List built-in manifolds or print one as a document");
  catalog->add_option("--name", catalog_name, "Catalog entry to print");

  std::string fiber_name;
  std::string base_name;
  int t = 1;
  std::uint64_t seed = 1;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic bundle triple from catalog entries");
  generate->add_option("--fiber", fiber_name, "Catalog name of F")->required();
  generate->add_option("--base", base_name, "Catalog name of B")->required();
  generate->add_option("--t", t, "Signed number of paired moves; sigma-defect is 4t")->check(CLI::Range(-1000, 1000));
  generate->add_option("--seed", seed, "Random seed");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  Report report;
  report.arguments = echo_arguments(args);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report.command = "";
    const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
    return fail_input(report, "", e.what(), json_requested, out, err);
  }

  Loaded loaded;
  try {
    if (genus->parsed()) {
      report.command = "genus";
      fill_genus_report(report, as_manifold(loaded.load(input_a)));
    } else if (reduce->parsed()) {
      report.command = "reduce";
      ReduceModulus m;
      m.kind = modulus == "y-y3" ? ReduceModulus::y_minus_y3 : ReduceModulus::one_minus_y2;
      fill_reduce_report(report, as_manifold(loaded.load(input_a)), m);
    } else if (check->parsed()) {
      report.command = "check-bundle";
      const auto ys = parse_sweep(sweep);
      auto doc = loaded.load(input_a);
      auto* triple = std::get_if<BundleTriple>(&doc);
      if (!triple) throw ValidationError("schema", "expected a " + std::string(kTripleSchema) + " document");
      validate(*triple, !singular);
      fill_check_bundle_report(report, *triple, ys, CongruenceOptions{!singular, triple->monodromy_mod4_trivial});
    } else if (arf_cmd->parsed()) {
      report.command = "arf";
      auto doc = loaded.load(input_a);
      auto* form = std::get_if<Z2QuadraticForm>(&doc);
      if (!form) throw ValidationError("schema", "expected a " + std::string(kZ2FormSchema) + " document");
      fill_arf_report(report, *form);
    } else if (brown->parsed()) {
      report.command = "brown";
      auto doc = loaded.load(input_a);
      if (auto* form = std::get_if<Z4QuadraticForm>(&doc)) {
        fill_brown_report(report, *form, nullptr);
      } else {
        const auto lattice = as_lattice(std::move(doc));
        fill_brown_report(report, lattice_to_forms(lattice).square, &lattice);
      }
    } else if (pipeline->parsed()) {
      report.command = "pipeline";
      const auto total = as_lattice(loaded.load(input_a));
      const auto product = as_lattice(loaded.load(input_b));
      fill_pipeline_report(report, total, product);
    } else if (catalog->parsed()) {
      report.command = "catalog";
      if (catalog_name.empty()) {
        fill_catalog_report(report);
      } else {
        const auto* entry = find_catalog_entry(catalog_name);
        if (!entry) throw ValidationError("--name", "no catalog entry named " + catalog_name);
        report.results["manifold"] = to_json(*entry);
        report.text = to_json(*entry).dump(2) + "\n";
      }
    } else if (generate->parsed()) {
      report.command = "generate";
      const auto* f = find_catalog_entry(fiber_name);
      if (!f) throw ValidationError("--fiber", "no catalog entry named " + fiber_name);
      const auto* b = find_catalog_entry(base_name);
      if (!b) throw ValidationError("--base", "no catalog entry named " + base_name);
      const auto triple = generate_triple(*f, *b, t, seed);
      report.results["triple"] = to_json(triple);
      report.text = to_json(triple).dump(2) + "\n";
    } else if (selftest->parsed()) {
      report.command = "selftest";
      auto checks = nlohmann::ordered_json::array();
      std::string text;
      bool all = true;
      for (const auto& r : run_selftest()) {
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += (r.passed ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
        all = all && r.passed;
      }
      report.results["checks"] = std::move(checks);
      report.text = text;
      report.exit_status = all ? kExitOk : kExitCongruenceFailure;
    }
  } catch (const ValidationError& e) {
    report.inputs_digest = inputs_digest(loaded.inputs);
    return fail_input(report, e.field(), e.message(), as_json, out, err);
  } catch (const std::exception& e) {
    report.inputs_digest = inputs_digest(loaded.inputs);
    return fail_input(report, "", e.what(), as_json, out, err);
  }

  report.inputs_digest = inputs_digest(loaded.inputs);
  emit(report, as_json, out);
  if (as_json && report.exit_status == kExitCongruenceFailure) err << "genuslab: a checked congruence fails\n";
  return report.exit_status;
}

}  // namespace genuslab
