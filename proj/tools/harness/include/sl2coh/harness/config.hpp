#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl2coh::harness {

/// Bad flags, malformed grids, unknown suites. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Grid {
  std::vector<int> p{2, 3};
  std::vector<int> r{1, 2};
  std::vector<int> j{0, 1};
  std::vector<int> m{1, 2};

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// "2,3", "1..3", "0,2..4". Values come back sorted and deduplicated.
std::vector<int> parse_values(std::string_view text);
/// "p=2,3;r=1..2;j=0;m=1..2"; keys not mentioned keep their value in `base`.
Grid parse_grid(std::string_view spec, Grid base = {});
std::string format_values(const std::vector<int>& v);
std::string format_grid(const Grid& g);

struct Caps {
  std::size_t coefficient_rank = 500;
  int cup_degree = 8;
  std::size_t matrix_dim = 1000;
};

using Params = std::map<std::string, int>;

struct SuiteConfig {
  Grid grid;
  /// Empty means every suite.
  std::vector<std::string> suites;
  std::uint64_t seed = kDefaultSeed;
  Caps caps;
  /// Random samples per randomized check.
  int samples = 100;
  /// Cup powers whose expansion has more terms are verified through the Leibniz rule.
  std::size_t direct_cup_terms = 20000;
  /// Grid points for which this returns false are left out of the run entirely.
  std::function<bool(const std::string& suite, const Params&)> include;
};

/// Suites in execution order.
const std::vector<std::string>& suite_names();
/// Throws ConfigError on unknown suites, non-prime p, or out-of-range r, j, m.
void validate(const SuiteConfig& config);

}  // namespace sl2coh::harness
