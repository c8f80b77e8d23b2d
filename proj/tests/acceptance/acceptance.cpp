// One line per acceptance criterion. Exit code 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "sl2coh/harness/random_objects.hpp"
#include "sl2coh/harness/suite.hpp"

using namespace sl2coh;
using namespace sl2coh::harness;

namespace {

// Wall-clock budgets in seconds. All comparisons are exact integer arithmetic.
constexpr double kWittLimit = 10;
constexpr double kCupLimit = 30;
constexpr double kUniversalLimit = 300;
constexpr double kPairingLimit = 120;
constexpr double kLemmaLimit = 1;
constexpr double kNontrivialityLimit = 1;
constexpr double kInfrastructureLimit = 60;

constexpr int kSamples = 100;
constexpr std::size_t kOracleMaxDim = 8;

struct Verdict {
  bool ok = true;
  std::string detail;
};

long ipow(int p, int e) {
  long q = 1;
  while (e-- > 0) q *= p;
  return q;
}

// Runs the suites and demands that every record passes and that each named check covers
// `points` grid points.
Verdict all_pass(const SuiteConfig& cfg, const std::map<std::string, std::size_t>& expected,
                 VerificationReport* out = nullptr) {
  VerificationReport r = run_suite(cfg);
  std::map<std::string, std::size_t> seen;
  for (const auto& c : r.checks) ++seen[c.name];
  Verdict v;
  for (const auto& c : r.checks)
    if (c.status != Status::pass) {
      v.ok = false;
      v.detail = to_string(c.status) + " " + c.name + " [" + format_params(c.params) + "] " + c.message +
                 (c.witness.empty() ? "" : " witness: " + c.witness);
      break;
    }
  for (const auto& [name, n] : expected)
    if (v.ok && seen[name] != n) {
      v.ok = false;
      v.detail = name + " ran on " + std::to_string(seen[name]) + " points, expected " + std::to_string(n);
    }
  if (v.ok) v.detail = std::to_string(r.checks.size()) + " checks";
  if (out) *out = std::move(r);
  return v;
}

Verdict witt_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"witt"};
  cfg.grid = parse_grid("p=2,3,5;r=1..3");
  cfg.include = [](const std::string&, const Params& q) {
    return !q.count("r") || ipow(q.at("p"), q.at("r")) <= 125;
  };
  return all_pass(cfg, {{"witt.cocycle", 9}, {"witt.coboundary_relation", 9}, {"witt.mod_p", 9},
                        {"witt.congruence_p2", 9}});
}

Verdict cup_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"cup"};
  cfg.grid = parse_grid("p=2,3,5;r=1..3;m=1..4");
  cfg.samples = kSamples;
  VerificationReport r;
  Verdict v = all_pass(cfg, {{"cup.cocycle", 36}, {"cup.mod_p", 36}, {"cup.leibniz", 3}}, &r);
  if (!v.ok) return v;
  int direct = 0, certified = 0;
  for (const auto& c : r.checks)
    if (c.name == "cup.cocycle") (c.message.rfind("certified", 0) == 0 ? certified : direct)++;
  v.detail += ", cocycle: " + std::to_string(direct) + " direct, " + std::to_string(certified) +
              " certified by Leibniz + exact dc = 0 (over " + std::to_string(cfg.direct_cup_terms) +
              " terms), Leibniz on " + std::to_string(3 * kSamples) + " random pairs";
  return v;
}

Verdict universal_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"universal"};
  cfg.grid = parse_grid("p=2,3;r=1..4;j=0..3;m=1..9");
  cfg.include = [](const std::string&, const Params& q) {
    return q.at("m") * ipow(q.at("p"), q.at("r") + q.at("j")) <= 9;
  };
  // points with m p^(r+j) <= 9: eleven for p = 2, five for p = 3
  return all_pass(cfg, {{"universal.cocycle", 16}, {"universal.T_invariant", 16},
                        {"universal.borel_extension", 16}, {"universal.projection", 16}});
}

Verdict pairing_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"pairings"};
  cfg.grid = parse_grid("p=2,3;r=1;m=1,2");
  cfg.samples = kSamples;
  return all_pass(cfg, {{"pairings.K_index", 2}, {"pairings.Y_surjective", 2}, {"pairings.Y_maximal", 2},
                        {"pairings.diagram", 4}, {"pairings.diagram_p2", 4}, {"pairings.doubled_gl2", 4}});
}

Verdict lemma_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"lemma"};
  return all_pass(cfg, {{"lemma.e_alpha", 1}, {"lemma.identity", 1}});
}

Verdict nontriviality_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"nontriviality"};
  cfg.grid.p = {2, 3};
  return all_pass(cfg, {{"c1_mod_p.nonzero_class", 2}});
}

Verdict infrastructure_criterion() {
  SuiteConfig cfg;
  cfg.suites = {"exactalg", "hopf"};
  cfg.samples = kSamples;
  Verdict v = all_pass(cfg, {{"differential.square.Ga", 1}, {"differential.square.T", 1},
                             {"differential.square.B", 1}, {"differential.square.SL2", 1},
                             {"differential.square.BorelXU", 1}, {"hopf.axioms.SL2", 3}});
  if (!v.ok) return v;
  Rng rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> dim(1, kOracleMaxDim);
  for (int k = 0; k < kSamples; ++k) {
    IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng), 12);
    if (!(hnf(a).form == oracle::naive_hnf(a))) return {false, "HNF differs from the naive oracle on\n" + a.to_string()};
  }
  v.detail += ", HNF equals the naive oracle on " + std::to_string(kSamples) + " matrices";
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Witt cocycles, p in {2,3,5}, p^r <= 125", kWittLimit, witt_criterion},
      {2, "cup powers, same grid, 2m <= 8", kCupLimit, cup_criterion},
      {3, "universal classes, p in {2,3}, m p^(r+j) <= 9", kUniversalLimit, universal_criterion},
      {4, "pairing lattices and diagram, p in {2,3}, r = 1, m in {1,2}", kPairingLimit, pairing_criterion},
      {5, "generated subcomodules of gl2", kLemmaLimit, lemma_criterion},
      {6, "c_1 mod p is a nonzero class, p in {2,3}", kNontrivialityLimit, nontriviality_criterion},
      {7, "infrastructure: d^2 = 0, Hopf axioms, HNF oracle", kInfrastructureLimit, infrastructure_criterion},
  };
  std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(kDefaultSeed));
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > c.limit) {
      v.ok = false;
      v.detail += ", over the time budget";
    }
    failures += !v.ok;
    std::printf("[%s] criterion %d: %s (%.2f s of %.0f s) %s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit, v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
