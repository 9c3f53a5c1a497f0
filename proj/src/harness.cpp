#include "pathclass/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "pathclass/error.hpp"
#include "pathclass/generating_functions.hpp"
#include "pathclass/partition.hpp"

namespace pathclass {

namespace detail {
extern const std::string_view kGoldenTablesJson;
}

using json = nlohmann::ordered_json;

std::string_view to_string(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Table: return "table";
  }
  return "";
}

OutputFormat parse_format(std::string_view text) {
  for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Table}) {
    if (to_string(f) == text) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(text) + "' (json, csv, table)");
}

void RunConfig::validate() const {
  if (max_ballot_n == 0 || max_dyck_semilength == 0 || truncation == 0) {
    throw Error(ErrorCode::InvalidArgument, "bounds and truncation order must be positive");
  }
  check_bounds(PathMode::Ballot, max_ballot_n, bounds);
  check_bounds(PathMode::Dyck, max_dyck_semilength, bounds);
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> GoldenTables::expected(TauKind tau, PathMode mode, std::size_t n) const {
  const auto& rows = mode == PathMode::Ballot ? ballot : dyck;
  for (const auto& row : rows) {
    if (std::find(row.taus.begin(), row.taus.end(), tau) == row.taus.end()) continue;
    if (n >= 1 && n <= row.counts.size()) return row.counts[n - 1];
    return std::nullopt;
  }
  return std::nullopt;
}

GoldenTables parse_golden_tables(std::string_view json_text) {
  GoldenTables out;
  try {
    const json j = json::parse(json_text);
    for (const auto& row : j.at("ballot")) {
      out.ballot.push_back({{parse_tau(row.at("tau").get<std::string>())}, row.at("counts").get<std::vector<std::uint64_t>>()});
    }
    for (const auto& row : j.at("dyck")) {
      GoldenRow r;
      for (const auto& t : row.at("taus")) r.taus.push_back(parse_tau(t.get<std::string>()));
      r.counts = row.at("counts").get<std::vector<std::uint64_t>>();
      out.dyck.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("golden tables: ") + e.what());
  }
  return out;
}

const GoldenTables& golden_tables() {
  static const GoldenTables tables = parse_golden_tables(detail::kGoldenTablesJson);
  return tables;
}

// ---------------------------------------------------------------------------

namespace {

bool is_length_three(TauKind tau) { return name(tau).size() == 3; }

bool has_recurrence(TauKind tau, PathMode mode) {
  if (mode != PathMode::Ballot) return false;
  switch (tau) {
    case TauKind::UD:
    case TauKind::DU:
    case TauKind::UUU:
    case TauKind::UDU:
    case TauKind::UUD:
    case TauKind::DUU:
      return true;
    default:
      return false;
  }
}

bool has_closed_form(TauKind tau, PathMode mode) {
  if (mode == PathMode::Ballot) return tau == TauKind::UDD || tau == TauKind::DDU;
  return tau == TauKind::UUD || tau == TauKind::UDD || tau == TauKind::DUU || tau == TauKind::DDU;
}

[[noreturn]] void unavailable(TauKind tau, PathMode mode, CountMethod method) {
  throw Error(ErrorCode::MethodUnavailable, "method '" + std::string(to_string(method)) + "' does not apply to " +
                                                std::string(name(tau)) + " in " + std::string(to_string(mode)) +
                                                " mode");
}

mpz_class recurrence_count(TauKind tau, std::size_t n) {
  if (n == 0) return 1;
  const long m = static_cast<long>(n);
  switch (tau) {
    case TauKind::UD: return fibonacci(m + 1);
    case TauKind::DU:
    case TauKind::UUU:
    case TauKind::UDU: return fibonacci(m);
    case TauKind::UUD: return recurrence_a000930(m);
    case TauKind::DUU: return m == 1 ? mpz_class(1) : recurrence_a000930(m - 1);
    default: return 0;
  }
}

mpz_class closed_form_count(TauKind tau, PathMode mode, std::size_t n) {
  const long m = static_cast<long>(n);
  if (mode == PathMode::Ballot) {
    if (tau == TauKind::UDD) return closed_form_udd(m);
    return m == 0 ? mpz_class(1) : closed_form_udd(m - 1);
  }
  if (tau == TauKind::UUD || tau == TauKind::UDD) return m == 0 ? mpz_class(1) : closed_form_uud_dyck(m);
  return m <= 1 ? mpz_class(1) : closed_form_uud_dyck(m - 1);
}

PowerSeries counting_series(TauKind tau, PathMode mode, std::size_t order) {
  return mode == PathMode::Ballot ? gf_ballot(tau, order) : gf_dyck(tau, order);
}

mpz_class brute_count(TauKind tau, PathMode mode, std::size_t n, const RunConfig& config) {
  PartitionOptions options;
  options.bounds = config.bounds;
  options.keep_classes = false;
  options.threads = config.jobs;
  return partition_classes(n, pattern_of(tau), mode, options).class_count;
}

}  // namespace

std::vector<CountMethod> applicable_methods(TauKind tau, PathMode mode) {
  std::vector<CountMethod> out = {CountMethod::BruteForce};
  if (mode == PathMode::Ballot || is_length_three(tau)) out.push_back(CountMethod::GeneratingFunction);
  if (has_recurrence(tau, mode)) out.push_back(CountMethod::Recurrence);
  if (has_closed_form(tau, mode)) out.push_back(CountMethod::ClosedForm);
  return out;
}

mpz_class count_by_method(TauKind tau, PathMode mode, std::size_t n, CountMethod method, const RunConfig& config) {
  const auto methods = applicable_methods(tau, mode);
  if (std::find(methods.begin(), methods.end(), method) == methods.end()) unavailable(tau, mode, method);
  switch (method) {
    case CountMethod::BruteForce:
      return brute_count(tau, mode, n, config);
    case CountMethod::GeneratingFunction:
      return counting_series(tau, mode, std::max<std::size_t>(n, 1))[n].get_num();
    case CountMethod::Recurrence:
      return recurrence_count(tau, n);
    case CountMethod::ClosedForm:
      return closed_form_count(tau, mode, n);
  }
  unavailable(tau, mode, method);
}

std::vector<mpz_class> count_sequence(TauKind tau, PathMode mode, std::size_t order, CountMethod method) {
  if (method == CountMethod::GeneratingFunction) {
    const auto methods = applicable_methods(tau, mode);
    if (std::find(methods.begin(), methods.end(), method) == methods.end()) unavailable(tau, mode, method);
    return counting_series(tau, mode, order).integer_coefficients();
  }
  std::vector<mpz_class> out;
  out.reserve(order + 1);
  const RunConfig config;
  for (std::size_t n = 0; n <= order; ++n) out.push_back(count_by_method(tau, mode, n, method, config));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// First signature on which the brute-force classes and the representative
// set disagree, for a constructive mismatch report.
std::string first_offending_class(TauKind tau, std::size_t n, const RunConfig& config) {
  const Pattern pat = pattern_of(tau);
  PartitionOptions options;
  options.bounds = config.bounds;
  const auto report = partition_classes(n, pat, PathMode::Ballot, options);
  std::set<Signature> brute;
  for (const auto& c : report.classes) brute.insert(c.signature);
  std::set<Signature> reps;
  for (const Path& p : representatives(n, tau, config.bounds)) reps.insert(signature(p, pat));
  std::vector<Signature> diff;
  std::set_symmetric_difference(brute.begin(), brute.end(), reps.begin(), reps.end(), std::back_inserter(diff));
  if (diff.empty()) return "";
  std::ostringstream os;
  os << "first offending class: positions {";
  for (std::size_t i = 0; i < diff.front().positions.size(); ++i) os << (i ? "," : "") << diff.front().positions[i];
  os << "}";
  return os.str();
}

void finish_row(VerificationRow& row, const RunConfig& config) {
  std::ostringstream os;
  for (const auto& [method, value] : row.got_by_method) {
    if (value != row.expected) {
      row.ok = false;
      os << to_string(method) << "=" << value.get_str() << " ";
    }
  }
  if (row.mirror_brute && *row.mirror_brute != row.expected) {
    row.ok = false;
    os << "mirror " << name(*row.mirror) << " brute=" << row.mirror_brute->get_str() << " ";
  }
  if (row.ok) return;
  os << "expected " << row.expected.get_str();
  if (row.mode == PathMode::Ballot && row.got_by_method.count(CountMethod::BruteForce)) {
    if (auto where = first_offending_class(row.tau, row.n, config); !where.empty()) os << "; " << where;
  }
  row.detail = os.str();
}

}  // namespace

std::vector<VerificationRow> verify_tables(const RunConfig& config) {
  const GoldenTables& golden = golden_tables();
  const std::size_t order = std::max<std::size_t>(config.truncation, 12);
  std::vector<VerificationRow> rows;

  const auto run_table = [&](const std::vector<GoldenRow>& table, PathMode mode, std::size_t brute_limit) {
    for (const GoldenRow& g : table) {
      if (config.only_tau && std::find(g.taus.begin(), g.taus.end(), *config.only_tau) == g.taus.end()) continue;
      const TauKind tau = g.taus.front();
      const std::optional<TauKind> mirror = g.taus.size() > 1 ? std::optional(g.taus[1]) : std::nullopt;
      const auto methods = applicable_methods(tau, mode);
      std::optional<std::vector<mpz_class>> series;
      if (std::find(methods.begin(), methods.end(), CountMethod::GeneratingFunction) != methods.end()) {
        series = counting_series(tau, mode, order).integer_coefficients();
      }
      for (std::size_t n = 1; n <= g.counts.size(); ++n) {
        VerificationRow row{tau, mode, n, mpz_class(std::to_string(g.counts[n - 1])), {}, mirror, std::nullopt, true, ""};
        for (CountMethod m : methods) {
          if (m == CountMethod::BruteForce) {
            if (n > brute_limit) continue;
            row.got_by_method[m] = brute_count(tau, mode, n, config);
            if (mirror) row.mirror_brute = brute_count(*mirror, mode, n, config);
          } else if (m == CountMethod::GeneratingFunction) {
            row.got_by_method[m] = (*series)[n];
          } else {
            row.got_by_method[m] = count_by_method(tau, mode, n, m, config);
          }
        }
        finish_row(row, config);
        rows.push_back(std::move(row));
      }
    }
  };

  run_table(golden.ballot, PathMode::Ballot, config.max_ballot_n);
  run_table(golden.dyck, PathMode::Dyck, config.max_dyck_semilength);
  return rows;
}

bool all_ok(const std::vector<VerificationRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.ok; });
}

// ---------------------------------------------------------------------------

json to_json(const VerificationRow& row) {
  json got = json::object();
  for (const auto& [method, value] : row.got_by_method) got[std::string(to_string(method))] = value.get_str();
  json j = {{"tau", std::string(name(row.tau))},
            {"mode", std::string(to_string(row.mode))},
            {"n", row.n},
            {"expected", row.expected.get_str()},
            {"got", got},
            {"status", row.ok ? "ok" : "mismatch"}};
  if (row.mirror) j["mirror"] = std::string(name(*row.mirror));
  if (row.mirror_brute) j["mirror_brute"] = row.mirror_brute->get_str();
  if (!row.detail.empty()) j["detail"] = row.detail;
  return j;
}

VerificationRow verification_row_from_json(const json& j) {
  try {
    VerificationRow row{parse_tau(j.at("tau").get<std::string>()),
                        parse_mode(j.at("mode").get<std::string>()),
                        j.at("n").get<std::size_t>(),
                        mpz_class(j.at("expected").get<std::string>()),
                        {},
                        std::nullopt,
                        std::nullopt,
                        j.at("status").get<std::string>() == "ok",
                        j.value("detail", std::string())};
    for (const auto& [key, value] : j.at("got").items()) row.got_by_method[parse_method(key)] = mpz_class(value.get<std::string>());
    if (j.contains("mirror")) row.mirror = parse_tau(j.at("mirror").get<std::string>());
    if (j.contains("mirror_brute")) row.mirror_brute = mpz_class(j.at("mirror_brute").get<std::string>());
    return row;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("verification row: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, std::string("verification row: bad integer: ") + e.what());
  }
}

json rows_to_json(const std::vector<VerificationRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

std::vector<VerificationRow> rows_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a JSON array of verification rows");
  std::vector<VerificationRow> out;
  for (const auto& r : j) out.push_back(verification_row_from_json(r));
  return out;
}

namespace {

std::string cell(const std::map<CountMethod, mpz_class>& got, CountMethod m) {
  const auto it = got.find(m);
  return it == got.end() ? "" : it->second.get_str();
}

}  // namespace

std::string rows_to_csv(const std::vector<VerificationRow>& rows) {
  std::ostringstream os;
  os << "tau,mode,n,expected,brute,gf,recurrence,closed,mirror,mirror_brute,status\n";
  for (const auto& r : rows) {
    os << name(r.tau) << ',' << to_string(r.mode) << ',' << r.n << ',' << r.expected.get_str();
    for (CountMethod m : kAllCountMethods) os << ',' << cell(r.got_by_method, m);
    os << ',' << (r.mirror ? name(*r.mirror) : "") << ',' << (r.mirror_brute ? r.mirror_brute->get_str() : "") << ','
       << (r.ok ? "ok" : "mismatch") << '\n';
  }
  return os.str();
}

std::string rows_to_table(const std::vector<VerificationRow>& rows) {
  std::ostringstream os;
  const auto col = [&](std::string_view s, int w) { os << std::left << std::setw(w) << s; };
  col("tau", 8); col("mode", 7); col("n", 4); col("expected", 10);
  col("brute", 10); col("gf", 10); col("recur", 10); col("closed", 10); col("status", 9);
  os << '\n';
  std::size_t bad = 0;
  for (const auto& r : rows) {
    std::string label(name(r.tau));
    if (r.mirror) label += "," + std::string(name(*r.mirror));
    col(label, 8);
    col(to_string(r.mode), 7);
    col(std::to_string(r.n), 4);
    col(r.expected.get_str(), 10);
    for (CountMethod m : kAllCountMethods) {
      std::string v = cell(r.got_by_method, m);
      col(v.empty() ? "-" : v, 10);
    }
    col(r.ok ? "ok" : "MISMATCH", 9);
    if (!r.detail.empty()) os << r.detail;
    os << '\n';
    if (!r.ok) ++bad;
  }
  os << rows.size() << " rows, " << bad << " mismatches\n";
  return os.str();
}

json series_export(TauKind tau, PathMode mode, std::size_t order, CountMethod method,
                   const std::vector<mpz_class>& coefficients) {
  json coeffs = json::array();
  for (const auto& c : coefficients) coeffs.push_back(c.get_str());
  return {{"tau", std::string(name(tau))},
          {"mode", std::string(to_string(mode))},
          {"N", order},
          {"method", std::string(to_string(method))},
          {"coefficients", coeffs}};
}

}  // namespace pathclass
