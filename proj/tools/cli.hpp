#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "terw/d2group.hpp"

namespace terw::cli {

enum class Kind { General, Dihedral, Dicyclic, G2 };

std::string_view to_string(Kind kind) noexcept;
std::optional<Kind> parse_kind(std::string_view text);

/// One group instance as given on the command line or in a spec file.
/// For g2, s holds the single multiplier and n, t the remaining parameters.
struct GroupSpec {
  Kind kind = Kind::Dihedral;
  std::vector<std::pair<int, int>> factors;
  std::vector<int> s;
  std::vector<int> y;
  std::int64_t n = 0;
  std::int64_t t = 0;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

nlohmann::json to_json(const GroupSpec& spec);
/// Throws Error(InvalidSpec) on missing or mistyped fields.
GroupSpec spec_from_json(const nlohmann::json& j);

/// Lists p-power factors 2 first (the order used for coordinates), permuting
/// s and y along with them.
GroupSpec canonical(GroupSpec spec);

D2Group build_group(const GroupSpec& spec, std::vector<std::string>* warnings = nullptr);

enum class Format { Text, Json, Csv };

struct SweepRange {
  std::int64_t from = 3;
  std::int64_t to = 12;
  bool all_abelian = false;  // every abelian A of order n instead of C_n
};

struct RunConfig {
  std::string command;
  Format format = Format::Text;
  bool oracle = false;
  std::size_t guard = 64;  // largest |G| for matrix paths
  SweepRange sweep;
};

/// TERW_GUARD when set and valid, otherwise 64.
std::size_t default_guard();

enum ExitCode : int { kOk = 0, kInvalidSpec = 1, kMismatch = 2, kGuardExceeded = 3 };

struct RunResult {
  int exit_code = kOk;
  std::string output;
  std::vector<std::string> warnings;
  std::string error;  // set for non-zero exit codes
};

RunResult run(const RunConfig& config, const GroupSpec& spec);

/// Full command-line entry point; args excludes the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace terw::cli
