#include "univalent/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "univalent/errors.hpp"
#include "univalent/export.hpp"
#include "univalent/extremal.hpp"
#include "univalent/geometry.hpp"
#include "univalent/oracle.hpp"

namespace univalent::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::vector<double> as_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

struct Artifact {
  std::string text;
  bool certificates_passed = true;
};

std::string reports_csv(const std::vector<CertificateReport>& reports) {
  std::ostringstream out;
  out << "statement,passed,worst_margin,worst_t,grid_size,tolerance\n";
  for (const auto& r : reports) {
    out << to_string(r.statement) << ',' << (r.passed ? "true" : "false") << ','
        << format_g17(r.worst_margin) << ',' << format_g17(r.worst_t) << ',' << r.grid_size << ','
        << format_g17(r.tolerance) << '\n';
  }
  return out.str();
}

Artifact coeffs_artifact(const RunConfig& cfg) {
  const std::vector<double> a =
      cfg.t_fold == 2 ? as_vector(extremal_coeffs(cfg.n).coeffs())
                      : as_vector(conjectured_symmetric_coeffs(cfg.t_fold, cfg.n).coeffs());
  if (cfg.format == Format::Csv) {
    std::ostringstream out;
    out << "j,a\n";
    for (std::size_t j = 0; j < a.size(); ++j) out << j + 1 << ',' << format_g17(a[j]) << '\n';
    return {out.str()};
  }
  Json j;
  j["n"] = cfg.n;
  if (cfg.t_fold != 2) j["t_fold"] = cfg.t_fold;
  j["coeffs"] = a;
  return {dump(j)};
}

Artifact value_artifact(const RunConfig& cfg) {
  const bool odd = cfg.t_fold == 2;
  const char* key = odd ? "j_n" : "koebe_radius";
  const double value = odd ? extremal_value(cfg.n) : conjectured_koebe_radius(cfg.t_fold, cfg.n);
  if (cfg.format == Format::Csv) {
    return {odd ? "n," + std::string(key) + "\n" + std::to_string(cfg.n) + "," +
                      format_g17(value) + "\n"
                : "n,t_fold," + std::string(key) + "\n" + std::to_string(cfg.n) + "," +
                      std::to_string(cfg.t_fold) + "," + format_g17(value) + "\n"};
  }
  Json j;
  j["n"] = cfg.n;
  if (!odd) j["t_fold"] = cfg.t_fold;
  j[key] = value;
  return {dump(j)};
}

Artifact boundary_artifact(const RunConfig& cfg) {
  const BoundaryTrace trace = figure_trace(cfg.t_fold, cfg.n, cfg.grid_size);
  if (cfg.format == Format::Csv) {
    std::ostringstream out;
    write_boundary_csv(trace, out);
    return {out.str()};
  }
  return {dump(to_json(trace))};
}

Artifact verify_artifact(const RunConfig& cfg) {
  std::vector<CertificateReport> reports;
  const BoundaryTrace trace = figure_trace(cfg.t_fold, cfg.n, cfg.grid_size);
  if (cfg.t_fold == 2) {
    reports.push_back(certify_statement_a(trace));
    reports.push_back(certify_statement_b(cfg.n, cfg.grid_size));
    reports.push_back(certify_statement_c(cfg.n, cfg.grid_size));
    reports.push_back(certify_statement_d(cfg.n, cfg.grid_size));
    reports.push_back(certify_aux_inequality(cfg.grid_size));
    reports.push_back(certify_simple_curve(trace));
    reports.push_back(certify_nonnegativity(extremal_coeffs(cfg.n), cfg.grid_size));
    if (cfg.n >= 2) {
      reports.push_back(verify_extremal_against_oracle(cfg.n, cfg.grid_size));
    } else {
      // No free ratios: the oracle optimum is gamma_1 = 1 = J_1.
      const double gamma1 = gamma_from_coeffs(extremal_coeffs(1)).gamma(1);
      reports.push_back(make_report(StatementId::OracleAgreement, -std::abs(gamma1 - 1.0), 1,
                                    cfg.grid_size, kOracleAgreementTolerance, false));
    }
  } else {
    reports.push_back(certify_simple_curve(trace));
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;

  if (cfg.format == Format::Csv) return {reports_csv(reports), all};
  Json j;
  j["n"] = cfg.n;
  j["t_fold"] = cfg.t_fold;
  j["grid"] = cfg.grid_size;
  j["passed"] = all;
  auto list = Json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  j["certificates"] = std::move(list);
  return {dump(j), all};
}

Artifact oracle_artifact(const RunConfig& cfg) {
  if (cfg.t_fold != 2) throw DomainError("the LP oracle covers the odd (T = 2) problem only");
  std::vector<double> c;
  std::vector<double> expected;
  double gamma1 = 1.0;
  long iterations = 0;
  double gap = 0.0;
  CertificateReport agreement;
  if (cfg.n == 1) {
    agreement = make_report(StatementId::OracleAgreement, 0.0, 1, cfg.grid_size,
                            kOracleAgreementTolerance, false);
  } else {
    const OracleSolution sol = solve_lp(build_lp(cfg.n, cfg.grid_size));
    c = sol.c;
    expected = extremal_gamma_ratios(cfg.n);
    gamma1 = sol.gamma1;
    iterations = sol.iterations;
    gap = sol.duality_gap;
    double worst = 0.0;
    int where = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (std::abs(c[k] - expected[k]) > worst) {
        worst = std::abs(c[k] - expected[k]);
        where = static_cast<int>(k) + 1;
      }
    }
    agreement = make_report(StatementId::OracleAgreement, -worst, where, cfg.grid_size,
                            kOracleAgreementTolerance, false);
  }
  const double fejer = std::cos(std::numbers::pi / (cfg.n + 1.0));

  if (cfg.format == Format::Csv) {
    std::ostringstream out;
    out << "j,c,expected\n";
    for (std::size_t k = 0; k < c.size(); ++k) {
      out << k + 1 << ',' << format_g17(c[k]) << ',' << format_g17(expected[k]) << '\n';
    }
    return {out.str(), agreement.passed};
  }
  Json j;
  j["n"] = cfg.n;
  j["grid"] = cfg.grid_size;
  j["c"] = c;
  j["expected_c"] = expected;
  j["fejer_bound"] = fejer;
  j["gamma1"] = gamma1;
  j["iterations"] = iterations;
  j["duality_gap"] = gap;
  j["agreement"] = to_json(agreement);
  return {dump(j), agreement.passed};
}

Artifact render_artifact(const RunConfig& cfg) {
  const BoundaryTrace trace = figure_trace(cfg.t_fold, cfg.n, cfg.grid_size);
  std::ostringstream out;
  write_svg(closed_polygon(trace), out);
  return {out.str(), certify_simple_curve(trace).passed};
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Coeffs: return "coeffs";
    case Command::Value: return "value";
    case Command::Boundary: return "boundary";
    case Command::Verify: return "verify";
    case Command::Oracle: return "oracle";
    case Command::Render: return "render";
  }
  return "unknown";
}

std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Svg: return "svg";
  }
  return "unknown";
}

Format default_format(Command c) noexcept {
  switch (c) {
    case Command::Render: return Format::Svg;
    case Command::Boundary: return Format::Csv;
    default: return Format::Json;
  }
}

bool format_allowed(Command c, Format f) noexcept {
  if (c == Command::Render) return f == Format::Svg;
  return f == Format::Json || f == Format::Csv;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Extremal odd univalent polynomials: construct, evaluate, certify, render"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_name;
  const std::map<std::string, Command> commands{
      {"coeffs", Command::Coeffs}, {"value", Command::Value},   {"boundary", Command::Boundary},
      {"verify", Command::Verify}, {"oracle", Command::Oracle}, {"render", Command::Render}};
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"svg", Format::Svg}};

  const std::map<std::string, std::string> help{
      {"coeffs", "Coefficients a_1..a_n of the extremizer"},
      {"value", "Extremal value J_n (or the conjectured Koebe radius for T != 2)"},
      {"boundary", "Boundary samples F(e^{it}) on [0, pi/T]"},
      {"verify", "Run every univalence certificate"},
      {"oracle", "Solve the discretized LP and compare with the closed form"},
      {"render", "SVG of the image boundary"}};
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--n", cfg.n, "Number of terms n >= 1")->required();
    sub->add_option("--t", cfg.t_fold, "Symmetry order T >= 1")->capture_default_str();
    sub->add_option("--grid", cfg.grid_size, "Grid size")->capture_default_str();
    sub->add_option("--out", cfg.output_path, "Output path, '-' for stdout")->capture_default_str();
    sub->add_option("--format", format_name, "json | csv | svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->callback([&cfg, command = command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream text;
    std::ostringstream diag;
    const int code = app.exit(e, text, diag);
    if (code == 0) throw UsageError{0, text.str()};
    throw UsageError{kExitDomainError, e.what()};
  }

  cfg.format = format_name.empty() ? default_format(cfg.command) : formats.at(format_name);
  if (!format_allowed(cfg.command, cfg.format)) {
    throw UsageError{kExitDomainError, "format " + std::string(to_string(cfg.format)) +
                                           " is not available for " +
                                           std::string(to_string(cfg.command))};
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Artifact artifact;
  try {
    if (cfg.n < 1) throw DomainError("--n must be >= 1");
    if (cfg.t_fold < 1) throw DomainError("--t must be >= 1");
    if (!format_allowed(cfg.command, cfg.format)) {
      throw DomainError("format not available for this command");
    }
    switch (cfg.command) {
      case Command::Coeffs: artifact = coeffs_artifact(cfg); break;
      case Command::Value: artifact = value_artifact(cfg); break;
      case Command::Boundary: artifact = boundary_artifact(cfg); break;
      case Command::Verify: artifact = verify_artifact(cfg); break;
      case Command::Oracle: artifact = oracle_artifact(cfg); break;
      case Command::Render: artifact = render_artifact(cfg); break;
    }
  } catch (const DomainError& e) {
    report_error(err, "domain", e.what());
    return kExitDomainError;
  } catch (const IterationLimitError& e) {
    report_error(err, "iteration_limit", e.what());
    return kExitDomainError;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitDomainError;
  }

  if (cfg.output_path == kStdoutPath) {
    out << artifact.text;
    out.flush();
    if (!out) {
      report_error(err, "io", "failed writing to standard output");
      return kExitIoError;
    }
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    file << artifact.text;
    file.flush();
    if (!file) {
      report_error(err, "io", "cannot write " + cfg.output_path);
      return kExitIoError;
    }
  }
  if (!artifact.certificates_passed) {
    report_error(err, "certificate", "at least one certificate failed");
    return kExitCertificateFailure;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const UsageError& e) {
    if (e.exit_code == 0) {
      out << e.message;
      return 0;
    }
    report_error(err, "usage", e.message);
    return e.exit_code;
  }
  return run(cfg, out, err);
}

}  // namespace univalent::cli
