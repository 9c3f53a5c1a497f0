#include "pathclass/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathclass/canonical.hpp"
#include "pathclass/error.hpp"
#include "pathclass/harness.hpp"
#include "pathclass/partition.hpp"

namespace pathclass::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string tau;
  std::size_t n = 0;
  std::string mode = "ballot";
  std::string method;
  bool all_methods = false;
  std::string format = "table";
  std::string out_file;
  std::optional<std::size_t> max_n;
  int jobs = 0;
  std::string only_tau;
  bool list = false;
  std::string path_text;
};

std::string join_positions(const std::vector<std::size_t>& positions, char sep) {
  std::string s;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(positions[i]);
  }
  return s;
}

json positions_json(const std::vector<std::size_t>& positions) {
  json a = json::array();
  for (auto p : positions) a.push_back(p);
  return a;
}

// Brute-force ceiling: the environment ceiling, lowered by --max-n.
EnumerationBounds brute_bounds(const Options& o) {
  EnumerationBounds b = EnumerationBounds::from_environment();
  if (o.max_n) {
    b.max_ballot_length = std::min(b.max_ballot_length, *o.max_n);
    b.max_dyck_semilength = std::min(b.max_dyck_semilength, *o.max_n);
  }
  return b;
}

int cmd_count(const Options& o, std::ostream& out) {
  const TauKind tau = parse_tau(o.tau);
  const PathMode mode = parse_mode(o.mode);
  const OutputFormat format = parse_format(o.format);
  RunConfig config;
  config.bounds = brute_bounds(o);
  config.jobs = o.jobs;

  std::vector<CountMethod> methods;
  if (o.all_methods) {
    methods = applicable_methods(tau, mode);
  } else {
    methods.push_back(parse_method(o.method.empty() ? "brute" : o.method));
  }
  std::vector<std::pair<CountMethod, mpz_class>> counts;
  for (CountMethod m : methods) {
    // With --all-methods, brute force is skipped past the ceiling instead of failing.
    if (o.all_methods && m == CountMethod::BruteForce) {
      const std::size_t limit = mode == PathMode::Ballot ? config.bounds.max_ballot_length : config.bounds.max_dyck_semilength;
      if (o.n > limit || path_length(mode, o.n) > Path::kMaxLength) continue;
    }
    counts.emplace_back(m, count_by_method(tau, mode, o.n, m, config));
  }
  const bool agree = std::all_of(counts.begin(), counts.end(), [&](const auto& c) { return c.second == counts.front().second; });

  switch (format) {
    case OutputFormat::Table:
      if (counts.size() == 1) {
        out << counts.front().second.get_str() << '\n';
      } else {
        for (const auto& [m, v] : counts) out << std::left << std::setw(12) << to_string(m) << v.get_str() << '\n';
        out << (agree ? "all methods agree" : "METHODS DISAGREE") << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "tau,mode,n,method,count\n";
      for (const auto& [m, v] : counts) out << name(tau) << ',' << to_string(mode) << ',' << o.n << ',' << to_string(m) << ',' << v.get_str() << '\n';
      break;
    case OutputFormat::Json: {
      json c = json::object();
      for (const auto& [m, v] : counts) c[std::string(to_string(m))] = v.get_str();
      out << json{{"tau", std::string(name(tau))}, {"mode", std::string(to_string(mode))}, {"n", o.n}, {"counts", c}, {"agree", agree}}.dump(2) << '\n';
      break;
    }
  }
  return agree ? kOk : kMismatch;
}

Path representative_of(const Path& witness, TauKind tau, PathMode mode) {
  if (mode == PathMode::Dyck && tau == TauKind::UDU) return udu_dyck_normalize(witness);
  return normalize(witness, tau);
}

int cmd_classes(const Options& o, std::ostream& out) {
  const TauKind tau = parse_tau(o.tau);
  const PathMode mode = parse_mode(o.mode);
  const OutputFormat format = parse_format(o.format);
  PartitionOptions options;
  options.bounds = brute_bounds(o);
  options.threads = o.jobs;
  const ClassReport report = partition_classes(o.n, pattern_of(tau), mode, options);

  switch (format) {
    case OutputFormat::Table:
      out << name(tau) << ' ' << to_string(mode) << " n=" << o.n << ": " << report.class_count << " classes, "
          << report.path_count << " paths\n";
      if (o.list) {
        out << std::left << std::setw(24) << "positions" << std::setw(8) << "size" << std::setw(20) << "witness"
            << "canonical\n";
        for (const auto& c : report.classes) {
          out << std::left << std::setw(24) << ("{" + join_positions(c.signature.positions, ',') + "}") << std::setw(8)
              << c.size << std::setw(20) << c.witness.str() << representative_of(c.witness, tau, mode).str() << '\n';
        }
      }
      break;
    case OutputFormat::Csv:
      out << "positions,size,witness,canonical\n";
      for (const auto& c : report.classes) {
        out << join_positions(c.signature.positions, ' ') << ',' << c.size << ',' << c.witness.str() << ','
            << representative_of(c.witness, tau, mode).str() << '\n';
      }
      break;
    case OutputFormat::Json: {
      json j = {{"tau", std::string(name(tau))}, {"mode", std::string(to_string(mode))}, {"n", o.n},
                {"class_count", report.class_count}, {"path_count", report.path_count}};
      if (o.list) {
        json classes = json::array();
        for (const auto& c : report.classes) {
          classes.push_back({{"positions", positions_json(c.signature.positions)}, {"size", c.size},
                             {"witness", c.witness.str()}, {"canonical", representative_of(c.witness, tau, mode).str()}});
        }
        j["classes"] = classes;
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const TauKind tau = parse_tau(o.tau);
  const PathMode mode = parse_mode(o.mode);
  const OutputFormat format = parse_format(o.format);
  const Path p = parse_path(o.path_text);
  if (mode == PathMode::Dyck && !is_dyck(p)) {
    throw Error(ErrorCode::InvalidArgument, p.str() + " is not a Dyck path");
  }
  const bool udu_dyck = mode == PathMode::Dyck && tau == TauKind::UDU;
  const Path rep = udu_dyck ? udu_dyck_normalize(p) : normalize(p, tau);
  const bool already = rep == p;
  const auto positions = occurrence_positions(p, pattern_of(tau));

  switch (format) {
    case OutputFormat::Table:
      out << "canonical  " << rep.str() << '\n'
          << "input      " << p.str() << '\n'
          << "positions  {" << join_positions(positions, ',') << "}\n"
          << "already canonical: " << (already ? "yes" : "no") << '\n';
      break;
    case OutputFormat::Csv:
      out << "input,tau,canonical,positions,already_canonical\n"
          << p.str() << ',' << name(tau) << ',' << rep.str() << ',' << join_positions(positions, ' ') << ','
          << (already ? "true" : "false") << '\n';
      break;
    case OutputFormat::Json:
      out << json{{"input", p.str()}, {"tau", std::string(name(tau))}, {"canonical", rep.str()},
                  {"positions", positions_json(positions)}, {"length", p.size()}, {"already_canonical", already}}
                 .dump(2)
          << '\n';
      break;
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OutputFormat format = parse_format(o.format);
  RunConfig config;
  config.bounds = EnumerationBounds::from_environment();
  config.max_ballot_n = 12;
  config.max_dyck_semilength = 12;
  if (o.max_n) {
    config.max_ballot_n = *o.max_n;
    config.max_dyck_semilength = *o.max_n;
  }
  config.jobs = o.jobs;
  if (!o.only_tau.empty()) config.only_tau = parse_tau(o.only_tau);
  config.validate();

  const auto rows = verify_tables(config);
  switch (format) {
    case OutputFormat::Table: out << rows_to_table(rows); break;
    case OutputFormat::Csv: out << rows_to_csv(rows); break;
    case OutputFormat::Json: out << rows_to_json(rows).dump(2) << '\n'; break;
  }
  return all_ok(rows) ? kOk : kMismatch;
}

int cmd_series(const Options& o, std::ostream& out) {
  const TauKind tau = parse_tau(o.tau);
  const PathMode mode = parse_mode(o.mode);
  const OutputFormat format = parse_format(o.format);
  const CountMethod method = parse_method(o.method.empty() ? "gf" : o.method);
  const std::size_t order = o.n == 0 ? 32 : o.n;
  const auto coeffs = count_sequence(tau, mode, order, method);

  switch (format) {
    case OutputFormat::Json:
      out << series_export(tau, mode, order, method, coeffs).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "n,count\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i].get_str() << '\n';
      break;
    case OutputFormat::Table:
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << std::left << std::setw(5) << i << coeffs[i].get_str() << '\n';
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence classes of lattice paths modulo a string of U/D steps", "pathclass"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or table")->capture_default_str();
    sub->add_option("--out", o.out_file, "write the report to FILE");
  };
  const auto add_brute = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "largest n for brute-force enumeration");
    sub->add_option("--jobs", o.jobs, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  };

  auto* count = app.add_subcommand("count", "number of classes for one string and size");
  count->add_option("--tau", o.tau, "string of length 2 or 3, e.g. uud")->required();
  count->add_option("--n", o.n, "ballot length or Dyck semilength")->required();
  count->add_option("--mode", o.mode, "ballot or dyck")->capture_default_str();
  count->add_option("--method", o.method, "brute, gf, recurrence or closed");
  count->add_flag("--all-methods", o.all_methods, "run every applicable method and check agreement");
  add_format(count);
  add_brute(count);

  auto* classes = app.add_subcommand("classes", "brute-force class partition");
  classes->add_option("--tau", o.tau, "string of length 2 or 3")->required();
  classes->add_option("--n", o.n, "ballot length or Dyck semilength")->required();
  classes->add_option("--mode", o.mode, "ballot or dyck")->capture_default_str();
  classes->add_flag("--list", o.list, "list every class");
  add_format(classes);
  add_brute(classes);

  auto* norm = app.add_subcommand("normalize", "canonical representative of a path's class");
  norm->add_option("path", o.path_text, "path over {U,D}, e.g. UUDU")->required();
  norm->add_option("--tau", o.tau, "string of length 2 or 3")->required();
  norm->add_option("--mode", o.mode, "ballot, or dyck for the udu Dyck set")->capture_default_str();
  add_format(norm);

  auto* verify = app.add_subcommand("verify-tables", "check both golden tables by every applicable method");
  verify->add_option("--only-tau", o.only_tau, "restrict to rows containing this string");
  add_format(verify);
  add_brute(verify);

  auto* series = app.add_subcommand("series", "export a counting sequence");
  series->add_option("--tau", o.tau, "string of length 2 or 3")->required();
  series->add_option("--n", o.n, "truncation order (default 32)");
  series->add_option("--mode", o.mode, "ballot or dyck")->capture_default_str();
  series->add_option("--method", o.method, "gf (default), brute, recurrence or closed");
  add_format(series);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open '" << o.out_file << "' for writing\n";
      return kUsage;
    }
  }
  std::ostream& sink = o.out_file.empty() ? out : file;

  try {
    if (*count) return cmd_count(o, sink);
    if (*classes) return cmd_classes(o, sink);
    if (*norm) return cmd_normalize(o, sink);
    if (*verify) return cmd_verify(o, sink);
    if (*series) return cmd_series(o, sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pathclass::cli
