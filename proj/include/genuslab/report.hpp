#pragma once

// Command reports: one JSON document plus the equivalent human-readable text.
// Both renderings are produced from the same numbers.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "genuslab/congruence.hpp"
#include "genuslab/models.hpp"

namespace genuslab {

inline constexpr std::string_view kReportSchema = "genuslab/report/1";

// Exit-code contract shared by every command.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCongruenceFailure = 1,
  kExitInputError = 2,
};

struct Report {
  std::string command;
  std::vector<std::string> arguments;  // echo, file paths reduced to file names
  std::string inputs_digest;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string text;
  int exit_status = kExitOk;

  nlohmann::ordered_json to_json() const;
};

// FNV-1a over the compact dumps of the parsed input documents, "fnv1a64:<hex>".
std::string inputs_digest(const std::vector<nlohmann::json>& inputs);

struct ReduceModulus {
  enum Kind { one_minus_y2, y_minus_y3 } kind = one_minus_y2;
};

void fill_genus_report(Report& report, const ManifoldModel& model);
void fill_reduce_report(Report& report, const ManifoldModel& model, ReduceModulus modulus);
void fill_check_bundle_report(Report& report, const BundleTriple& triple, const std::vector<long>& ys,
                              const CongruenceOptions& options);
void fill_arf_report(Report& report, const Z2QuadraticForm& form);
void fill_brown_report(Report& report, const Z4QuadraticForm& form, const IntegralLattice* lattice);
void fill_pipeline_report(Report& report, const IntegralLattice& total, const IntegralLattice& product);
void fill_catalog_report(Report& report);

}  // namespace genuslab
