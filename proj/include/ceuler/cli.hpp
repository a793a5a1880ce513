#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ceuler/io.hpp"

namespace ceuler::cli {

enum class Command { Table, Verify, Enumerate, Complex, Roots, Recurrence };
enum class Format { Csv, Json, Jsonl, Latex };
enum class Route { ClosedForm, Descents, Complex, Gamma };
enum class EnumerateKind { Partitions, Permutations };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct IntRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct RunConfig {
  Command command = Command::Table;
  IntRange n{2, 6};
  IntRange alpha{2, 2};
  Format format = Format::Csv;
  std::optional<std::string> output;  // standard output when empty
  unsigned parallelism = 1;
  std::optional<std::uint64_t> budget;  // per-command default when empty
  Route route = Route::ClosedForm;
  EnumerateKind kind = EnumerateKind::Partitions;
  std::optional<std::string> export_geometry;
  int precision = 6;
  bool amended = false;
};

/// Raised for bad command lines; the message names the offending token.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The help text, or nullopt when argv parses into a config.
struct ParseResult {
  std::optional<RunConfig> config;
  std::string help;
};

/// argv excludes the program name. Throws UsageError.
ParseResult parse_args(const std::vector<std::string>& argv);

struct CheckRecord {
  std::string name;
  Json params;
  bool passed = false;
  Json witness;  // null when passed
};

class VerificationReport {
 public:
  void add(std::string name, Json params, bool passed, Json witness = nullptr);
  bool passed() const;
  /// Records sorted by name, then serialized parameters.
  std::vector<CheckRecord> sorted() const;
  /// {"checks": [...], "passed": bool}
  Json to_json() const;
  std::size_t size() const noexcept { return records_.size(); }

 private:
  std::vector<CheckRecord> records_;
};

/// Runs the full identity suite over the configured ranges.
VerificationReport run_verification(const RunConfig& config);

/// Executes a parsed config, writing the artifact to `out` unless
/// config.output names a file. Returns the exit code; errors are described on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to exit 2.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ceuler::cli
