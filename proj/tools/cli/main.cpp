#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "sl2coh/errors.hpp"
#include "sl2coh/harness/suite.hpp"
#include "show.hpp"

namespace {

using namespace sl2coh;
using namespace sl2coh::harness;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
  std::string p, r, j, m, grid, only, report, format = "json";
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;
  bool quiet = false;
};

SuiteConfig build_config(const VerifyOptions& o) {
  SuiteConfig cfg;
  if (!o.grid.empty()) cfg.grid = parse_grid(o.grid, cfg.grid);
  if (!o.p.empty()) cfg.grid.p = parse_values(o.p);
  if (!o.r.empty()) cfg.grid.r = parse_values(o.r);
  if (!o.j.empty()) cfg.grid.j = parse_values(o.j);
  if (!o.m.empty()) cfg.grid.m = parse_values(o.m);
  if (!o.only.empty()) {
    std::string rest = o.only;
    std::size_t pos;
    while ((pos = rest.find(',')) != std::string::npos) {
      cfg.suites.push_back(rest.substr(0, pos));
      rest.erase(0, pos + 1);
    }
    cfg.suites.push_back(rest);
  }
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  validate(cfg);
  return cfg;
}

void write_report(const VerificationReport& report, const VerifyOptions& o) {
  const std::string text = o.format == "md" ? to_markdown(report) : to_json(report).dump(2) + "\n";
  if (o.report == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.report);
  if (!out) throw ConfigError("cannot write report to '" + o.report + "'");
  out << text;
}

int run_verify(const VerifyOptions& o) {
  SuiteConfig cfg = build_config(o);
  const bool stream = !o.quiet && o.report != "-";
  auto sink = [&](const CheckRecord& c) {
    if (!stream) return;
    std::string status = to_string(c.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    std::cout << std::left << std::setw(8) << status << c.suite << " " << c.name;
    if (!c.params.empty()) std::cout << " [" << format_params(c.params) << "]";
    std::cout << std::fixed << std::setprecision(3) << " " << c.seconds << "s";
    if (!c.message.empty() && c.status != Status::pass) std::cout << "  " << c.message;
    std::cout << "\n";
    if (c.status == Status::fail && !c.witness.empty()) std::cout << "        witness: " << c.witness << "\n";
    std::cout.flush();
  };
  VerificationReport report = run_suite(cfg, sink);
  if (!o.report.empty()) write_report(report, o);
  if (o.report != "-")
    std::cout << report.count(Status::pass) << " pass, " << report.count(Status::fail) << " fail, "
              << report.count(Status::skipped) << " skipped\n";
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of integral cocycles, universal classes and pairing lattices"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the verification suites over a parameter grid");
  verify->add_option("--p", vo.p, "Primes, e.g. 2,3 or 2..5");
  verify->add_option("--r", vo.r, "Frobenius depths r >= 1");
  verify->add_option("--j", vo.j, "Twist offsets j >= 0");
  verify->add_option("--m", vo.m, "Multiplicities m >= 1");
  verify->add_option("--grid", vo.grid, "Grid spec, e.g. 'p=2,3;r=1..2;j=0;m=1..2'");
  verify->add_option("--only", vo.only, "Comma-separated suites")->check([](const std::string& s) {
    std::string rest = s + ",";
    for (std::size_t pos; (pos = rest.find(',')) != std::string::npos; rest.erase(0, pos + 1)) {
      const auto name = rest.substr(0, pos);
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) return "unknown suite '" + name + "'";
    }
    return std::string();
  });
  verify->add_option("--seed", vo.seed, "Seed for randomized checks");
  verify->add_option("--samples", vo.samples, "Samples per randomized check")->check(CLI::NonNegativeNumber);
  verify->add_option("--report", vo.report, "Write the report here ('-' for stdout)");
  verify->add_option("--format", vo.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  verify->add_flag("--quiet", vo.quiet, "Only print the summary line");

  cli::ShowArgs sa;
  std::string selector;
  auto* show = app.add_subcommand("show", "Print a constructed object");
  show->add_option("selector", selector, "One of: phi, c, cup, universal, projected, gl2, X-map, K-basis, "
                                         "Y-basis, Y-reduction, lemma")
      ->required();
  show->add_option("--p", sa.p, "Prime");
  show->add_option("--r", sa.r, "Frobenius depth");
  show->add_option("--j", sa.j, "Twist offset");
  show->add_option("--m", sa.m, "Multiplicity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(vo);
    std::cout << cli::show(selector, sa) << "\n";
    return kExitPass;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
