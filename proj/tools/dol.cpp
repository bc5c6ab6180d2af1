// Command-line front end: spectrum tables, residual verification, admissible
// deformation-parameter boundaries, and figure reproduction (CSV + SVG).
//
// Exit codes: 0 success; 1 malformed flags or unwritable output; 2 domain
// errors (inadmissible q); 3 verification failure; 4 bracket failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dol/csv.hpp"
#include "dol/svg.hpp"
#include "dol/verification.hpp"

namespace {

// DOL_CONFIG names a key=value file providing defaults below flag level.
// Precedence: flags > config file > built-in defaults.
std::map<std::string, std::string> load_config() {
  std::map<std::string, std::string> cfg;
  const char* path = std::getenv("DOL_CONFIG");
  if (!path) return cfg;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t\r");
      return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
    };
    cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return cfg;
}

double config_num(const std::map<std::string, std::string>& cfg, const std::string& key,
                  double fallback) {
  const auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (...) {
    return fallback;
  }
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

std::string admissible_message() {
  const dol::AdmissibleInterval iv = dol::admissible_interval(dol::SpectrumBranch::CaseA);
  std::ostringstream os;
  os << "q is outside the admissible interval (" << iv.q_low << ", " << iv.q_high
     << ") for this branch";
  return os.str();
}

std::string spectrum_json(const dol::SpectrumTable& t) {
  std::string out = "[\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    out += "  {\"n\": " + std::to_string(r.n) + ", \"phi_n\": " + dol::csv::format_sci(r.phi_n) +
           ", \"phi_n_plus_1\": " + dol::csv::format_sci(r.phi_n1) +
           ", \"energy\": " + dol::csv::format_sci(r.energy) + "}";
    if (i + 1 < t.rows.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

std::string monotonicity_line(const dol::SpectrumTable& t) {
  std::ostringstream os;
  os << "branch " << dol::branch_name(t.branch) << ": ";
  if (t.turning_points.empty()) {
    os << "E(n) monotonic over the tabulated range";
  } else {
    os << "E(n) non-monotonic; first-difference sign changes at n =";
    for (int n : t.turning_points) os << " " << n;
  }
  return os.str();
}

int cmd_spectrum(double q, const std::string& branch_name_in, int nmax,
                 const std::string& out_path, const std::string& format) {
  dol::SpectrumBranch branch;
  if (!dol::parse_branch(branch_name_in, branch)) {
    std::cerr << "error: unknown branch '" << branch_name_in
              << "' (expected caseA, caseBplus or caseBminus)\n";
    return 1;
  }
  try {
    const dol::SpectrumTable t = dol::spectrum_table(q, branch, nmax);
    const std::string payload = (format == "json") ? spectrum_json(t) : t.to_csv();
    if (out_path.empty()) {
      std::cout << payload;
    } else if (!write_file(out_path, payload)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    return 0;
  } catch (const dol::OutsideAdmissibleRegion&) {
    std::cerr << "error: " << admissible_message() << "\n";
    return 2;
  } catch (const dol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const dol::VerifyOptions& opts, const std::string& report_path) {
  dol::VerificationReport report;
  try {
    report = dol::run_verification(opts);
  } catch (const dol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string payload = report.to_json();
  if (report_path.empty()) {
    std::cout << payload;
  } else if (!write_file(report_path, payload)) {
    std::cerr << "error: cannot write " << report_path << "\n";
    return 1;
  }
  if (!report.all_passed()) {
    for (const auto& e : report.entries) {
      if (e.status == "fail")
        std::cerr << "FAIL " << e.id << " residual=" << e.residual
                  << " tolerance=" << e.tolerance << "\n";
    }
    return 3;
  }
  return 0;
}

int cmd_admissible_q(const std::string& branch_name_in, double tol) {
  dol::SpectrumBranch branch;
  if (!dol::parse_branch(branch_name_in, branch)) {
    std::cerr << "error: unknown branch '" << branch_name_in << "'\n";
    return 1;
  }
  try {
    const dol::AdmissibleInterval iv =
        dol::admissible_interval(branch, tol);
    std::printf("q_low  %.9f\n", iv.q_low);
    std::printf("q_high %.9f\n", iv.q_high);
    return 0;
  } catch (const dol::BracketFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}

int cmd_figure(int which, const std::string& out_dir) {
  const double q = (which == 1) ? 1.1 : 0.59;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  for (dol::SpectrumBranch b : {dol::SpectrumBranch::CaseA, dol::SpectrumBranch::CaseBPlus,
                                dol::SpectrumBranch::CaseBMinus}) {
    if (!dol::is_admissible(q, b)) continue;
    const dol::SpectrumTable t = dol::spectrum_table(q, b, 10);
    const std::string stem =
        out_dir + "/fig" + std::to_string(which) + "_" + dol::branch_name(b);
    if (!write_file(stem + ".csv", t.to_csv())) {
      std::cerr << "error: cannot write " << stem << ".csv\n";
      return 1;
    }
    std::vector<dol::svg::Series> series(3);
    series[0].label = "phi(n)";
    series[1].label = "phi(n+1)";
    series[2].label = "E(n)";
    for (const auto& r : t.rows) {
      series[0].y.push_back(r.phi_n);
      series[1].y.push_back(r.phi_n1);
      series[2].y.push_back(r.energy);
    }
    std::ostringstream title;
    title << "q = " << q << ", " << dol::branch_name(b);
    if (!write_file(stem + ".svg", dol::svg::line_chart(series, title.str(), "n"))) {
      std::cerr << "error: cannot write " << stem << ".svg\n";
      return 1;
    }
    std::cout << monotonicity_line(t) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const auto cfg = load_config();
  CLI::App app{"deformed-oscillator laboratory"};
  app.set_version_flag("--version", "dol 0.1.0");
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "energy/structure-function table for one branch");
  double sp_q = 0.0;
  std::string sp_branch;
  int sp_nmax = 10;
  std::string sp_out;
  std::string sp_format = "csv";
  sp->add_option("--q", sp_q, "deformation parameter")->required();
  sp->add_option("--branch", sp_branch, "caseA | caseBplus | caseBminus")->required();
  sp->add_option("--nmax", sp_nmax, "highest level (rows 0..nmax)");
  sp->add_option("--out-path", sp_out, "output file (stdout when absent)");
  sp->add_option("--format", sp_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* vf = app.add_subcommand("verify", "run every residual suite and emit a report");
  dol::VerifyOptions opts;
  opts.dim = static_cast<int>(config_num(cfg, "dim", 64));
  opts.tol = config_num(cfg, "tol", 1e-10);
  opts.kappa = config_num(cfg, "kappa", 1.0);
  std::string vf_report;
  vf->add_option("--q", opts.q, "deformation parameter q");
  vf->add_option("--p", opts.p, "deformation parameter p");
  vf->add_option("--dim", opts.dim, "truncation dimension");
  vf->add_option("--tol", opts.tol, "base tolerance for the pass/fail checks");
  vf->add_option("--kappa", opts.kappa, "canonical transformation multiplier");
  vf->add_option("--report-path", vf_report, "report file (stdout when absent)");

  // admissible-q
  auto* aq = app.add_subcommand("admissible-q", "boundaries of the admissible q interval");
  std::string aq_branch = "caseA";
  double aq_tol = 1e-9;
  aq->add_option("--branch", aq_branch, "branch (all branches share the boundaries)");
  aq->add_option("--tol", aq_tol, "bisection tolerance");

  // figure
  auto* fg = app.add_subcommand("figure", "CSV + SVG per valid branch at the figure's q");
  int fg_which = 0;
  std::string fg_dir = ".";
  fg->add_option("--which", fg_which, "1 (q = 1.1) or 2 (q = 0.59)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  fg->add_option("--out-dir", fg_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 1;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(sp_q, sp_branch, sp_nmax, sp_out, sp_format);
    if (vf->parsed()) return cmd_verify(opts, vf_report);
    if (aq->parsed()) return cmd_admissible_q(aq_branch, aq_tol);
    if (fg->parsed()) return cmd_figure(fg_which, fg_dir);
  } catch (const dol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
