#pragma once

// Subcommands of the euler-adic tool. Each command writes to the given stream
// and returns the process exit code; run() wires them to argv with CLI11.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "euler_adic/dimension_engine.hpp"
#include "euler_adic/measures.hpp"

namespace euler_adic::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCheckFailure = 2 };

enum class Format { Table, Csv, Json };

struct EulerianOptions {
  unsigned max_n = 10;
  Format format = Format::Table;
};

struct DimOptions {
  std::string cylinder;
  unsigned n = 0;
  unsigned k = 0;
  std::string variant = "both";  // slot | literal | both
  std::string oracle = "all";    // none | graph | perm | all
  Format format = Format::Table;
};

struct RatioOptions {
  std::string cylinder_a;
  std::string cylinder_b;
  std::vector<unsigned> levels{10, 20, 40, 80};
  std::vector<unsigned> columns;  // empty: k = floor(n/2)
  std::string variant = "slot";
  Format format = Format::Csv;
};

struct SampleOptions {
  std::string spec = "symmetric";
  unsigned m = 4;
  std::uint64_t samples = 120000;
  std::optional<std::uint64_t> seed;
  double significance = 0.01;
  Format format = Format::Table;
};

struct CheckOptions {
  std::string spec = "symmetric";  // symmetric | symmetric-reverse | finite-rank
  std::vector<std::string> alphas;  // explicit a_1, a_2, ... for finite-rank
  std::string alpha1;               // recursion seed for finite-rank
  unsigned depth = 7;
  std::string kind = "both";        // invariance | consistency | both
  Format format = Format::Json;
};

struct WalkOptions {
  std::string mode = "negative";
  unsigned steps = 10000;
  std::optional<std::uint64_t> seed;
  Format format = Format::Table;
};

int cmd_eulerian(const EulerianOptions& opt, std::ostream& out, std::ostream& err);
int cmd_dim(const DimOptions& opt, std::ostream& out, std::ostream& err);
int cmd_ratio(const RatioOptions& opt, std::ostream& out, std::ostream& err);
int cmd_perm2path(const std::string& permutation, std::ostream& out, std::ostream& err);
int cmd_path2perm(const std::string& cylinder, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_walk(const WalkOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Exit codes: 0 ok, 1 usage, 2 check failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Shared helpers, exposed for tests.

/// Cylinder text ("L1,R2") or, when no turn letter is present, a
/// permutation ("213") mapped through perm_to_path.
Cylinder parse_cylinder_or_perm(const std::string& text);

MeasureSpec make_measure_spec(const std::string& name, const std::vector<std::string>& alphas,
                              const std::string& alpha1, unsigned depth);

nlohmann::json check_report_json(const CheckReport& report);
nlohmann::json ratio_rows_json(const std::vector<RatioRow>& rows);
void write_ratio_csv(const std::vector<RatioRow>& rows, std::ostream& out);
void write_trajectory_csv(const WalkResult& walk, std::ostream& out);

}  // namespace euler_adic::cli
