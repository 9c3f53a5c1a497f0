#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "pathclass/canonical.hpp"
#include "pathclass/enumerate.hpp"
#include "pathclass/series.hpp"

namespace pathclass {

enum class OutputFormat { Json, Csv, Table };

std::string_view to_string(OutputFormat format) noexcept;
/// Throws ParseError.
OutputFormat parse_format(std::string_view text);

struct RunConfig {
  /// Brute force runs for n up to these bounds; larger cells use the other methods only.
  std::size_t max_ballot_n = 14;
  std::size_t max_dyck_semilength = 12;
  /// Truncation order of every series.
  std::size_t truncation = 32;
  OutputFormat format = OutputFormat::Table;
  /// OpenMP threads for brute force; 0 lets OpenMP choose.
  int jobs = 0;
  std::optional<TauKind> only_tau;
  /// Safety ceiling for exhaustive enumeration.
  EnumerationBounds bounds = EnumerationBounds::from_environment();

  /// Throws InvalidArgument for a zero bound or a brute bound above the ceiling.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Golden tables, n = 1..12.

struct GoldenRow {
  std::vector<TauKind> taus;  // a Dyck row may cover a string and its mirror
  std::vector<std::uint64_t> counts;
};

struct GoldenTables {
  std::vector<GoldenRow> ballot;
  std::vector<GoldenRow> dyck;

  /// Table entry for (tau, mode, n), if there is one.
  std::optional<std::uint64_t> expected(TauKind tau, PathMode mode, std::size_t n) const;
};

/// Parsed from the data file compiled into the library.
const GoldenTables& golden_tables();
GoldenTables parse_golden_tables(std::string_view json_text);

// ---------------------------------------------------------------------------
// Counting.

/// Methods that can count classes for (tau, mode). Brute force always applies.
std::vector<CountMethod> applicable_methods(TauKind tau, PathMode mode);

/// Number of tau-classes of ballot paths of length n (mode ballot) or Dyck
/// paths of semilength n (mode dyck). Throws MethodUnavailable or
/// BoundExceeded.
mpz_class count_by_method(TauKind tau, PathMode mode, std::size_t n, CountMethod method,
                          const RunConfig& config = {});

/// Coefficients 0..N of the counting sequence for one method.
std::vector<mpz_class> count_sequence(TauKind tau, PathMode mode, std::size_t order, CountMethod method);

// ---------------------------------------------------------------------------
// Table verification.

struct VerificationRow {
  TauKind tau;
  PathMode mode;
  std::size_t n;
  mpz_class expected;
  std::map<CountMethod, mpz_class> got_by_method;
  /// Brute force for the mirror string on a merged Dyck row.
  std::optional<TauKind> mirror;
  std::optional<mpz_class> mirror_brute;
  bool ok = true;
  /// On mismatch, what disagreed (and the first offending class where one is known).
  std::string detail;

  friend bool operator==(const VerificationRow&, const VerificationRow&) = default;
};

/// One row per table cell: 12x12 ballot and 7x12 Dyck. Never throws for a
/// mismatch; rows carry the status.
std::vector<VerificationRow> verify_tables(const RunConfig& config);

bool all_ok(const std::vector<VerificationRow>& rows);

// ---------------------------------------------------------------------------
// Serialization. Counts are written as decimal strings.

nlohmann::ordered_json to_json(const VerificationRow& row);
VerificationRow verification_row_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json rows_to_json(const std::vector<VerificationRow>& rows);
std::vector<VerificationRow> rows_from_json(const nlohmann::ordered_json& j);
std::string rows_to_csv(const std::vector<VerificationRow>& rows);
std::string rows_to_table(const std::vector<VerificationRow>& rows);

/// {tau, mode, N, method, coefficients}
nlohmann::ordered_json series_export(TauKind tau, PathMode mode, std::size_t order, CountMethod method,
                             const std::vector<mpz_class>& coefficients);

}  // namespace pathclass
