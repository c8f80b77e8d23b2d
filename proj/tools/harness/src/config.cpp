#include "sl2coh/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sl2coh/exactalg/scalar.hpp"

namespace sl2coh::harness {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    throw ConfigError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

std::vector<int> parse_values(std::string_view text) {
  std::vector<int> out;
  for (auto item : split(text, ',')) {
    if (item.empty()) throw ConfigError("empty value in '" + std::string(text) + "'");
    auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    int lo = parse_int(trim(item.substr(0, dots))), hi = parse_int(trim(item.substr(dots + 2)));
    if (hi < lo) throw ConfigError("empty range '" + std::string(item) + "'");
    if (hi - lo > 1000) throw ConfigError("range too long: '" + std::string(item) + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Grid parse_grid(std::string_view spec, Grid base) {
  for (auto part : split(spec, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ConfigError("grid entry without '=': '" + std::string(part) + "'");
    auto key = trim(part.substr(0, eq));
    auto values = parse_values(part.substr(eq + 1));
    if (key == "p") base.p = values;
    else if (key == "r") base.r = values;
    else if (key == "j") base.j = values;
    else if (key == "m") base.m = values;
    else throw ConfigError("unknown grid key '" + std::string(key) + "' (expected p, r, j, m)");
  }
  return base;
}

std::string format_values(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string format_grid(const Grid& g) {
  return "p=" + format_values(g.p) + ";r=" + format_values(g.r) + ";j=" + format_values(g.j) +
         ";m=" + format_values(g.m);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exactalg", "hopf",      "comodules", "witt", "nontriviality",
                                              "cup",      "universal", "pairings",  "lemma"};
  return names;
}

void validate(const SuiteConfig& config) {
  const auto& known = suite_names();
  for (const auto& s : config.suites)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("unknown suite '" + s + "'");
  const Grid& g = config.grid;
  if (g.p.empty() || g.r.empty() || g.j.empty() || g.m.empty()) throw ConfigError("grid has an empty axis");
  for (int p : g.p)
    if (p < 2 || !is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  for (int r : g.r)
    if (r < 1) throw ConfigError("r must be at least 1");
  for (int j : g.j)
    if (j < 0) throw ConfigError("j must be nonnegative");
  for (int m : g.m)
    if (m < 1) throw ConfigError("m must be at least 1");
  if (config.samples < 0) throw ConfigError("negative sample count");
}

}  // namespace sl2coh::harness
