#include "sl2coh/harness/report.hpp"

#include <iomanip>
#include <sstream>

namespace sl2coh::harness {

namespace {

constexpr const char* kSchema = "sl2coh-report/1";

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("report: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report: bad field '") + key + "': " + e.what());
  }
}

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += "<br>";
    else out += c;
  }
  return out;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw ConfigError("report: unknown status '" + s + "'");
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

std::string format_params(const Params& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : p) {
    out << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return out.str();
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"suite", c.suite},
                      {"name", c.name},
                      {"params", c.params},
                      {"status", to_string(c.status)},
                      {"witness", c.witness},
                      {"message", c.message},
                      {"seconds", c.seconds}});
  const auto& m = r.meta;
  return {{"schema", kSchema},
          {"meta",
           {{"tool", m.tool},
            {"version", m.version},
            {"timestamp", m.timestamp},
            {"gmp_version", m.gmp},
            {"compiler", m.compiler},
            {"seed", m.seed},
            {"grid", {{"p", m.grid.p}, {"r", m.grid.r}, {"j", m.grid.j}, {"m", m.grid.m}}},
            {"suites", m.suites}}},
          {"summary",
           {{"pass", r.count(Status::pass)},
            {"fail", r.count(Status::fail)},
            {"skipped", r.count(Status::skipped)}}},
          {"checks", checks}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  if (!j.is_object() || field<std::string>(j, "schema") != kSchema)
    throw ConfigError(std::string("report: expected schema ") + kSchema);
  VerificationReport r;
  const auto& m = j.at("meta");
  r.meta.tool = field<std::string>(m, "tool");
  r.meta.version = field<std::string>(m, "version");
  r.meta.timestamp = field<std::string>(m, "timestamp");
  r.meta.gmp = field<std::string>(m, "gmp_version");
  r.meta.compiler = field<std::string>(m, "compiler");
  r.meta.seed = field<std::uint64_t>(m, "seed");
  const auto& g = field<nlohmann::json>(m, "grid");
  r.meta.grid = Grid{field<std::vector<int>>(g, "p"), field<std::vector<int>>(g, "r"),
                     field<std::vector<int>>(g, "j"), field<std::vector<int>>(g, "m")};
  r.meta.suites = field<std::vector<std::string>>(m, "suites");
  for (const auto& c : field<nlohmann::json>(j, "checks")) {
    CheckRecord rec;
    rec.suite = field<std::string>(c, "suite");
    rec.name = field<std::string>(c, "name");
    rec.params = field<Params>(c, "params");
    rec.status = status_from_string(field<std::string>(c, "status"));
    rec.witness = field<std::string>(c, "witness");
    rec.message = field<std::string>(c, "message");
    rec.seconds = field<double>(c, "seconds");
    r.checks.push_back(std::move(rec));
  }
  const auto& s = field<nlohmann::json>(j, "summary");
  if (field<std::size_t>(s, "pass") != r.count(Status::pass) ||
      field<std::size_t>(s, "fail") != r.count(Status::fail) ||
      field<std::size_t>(s, "skipped") != r.count(Status::skipped))
    throw ConfigError("report: summary does not match the check records");
  return r;
}

std::string to_markdown(const VerificationReport& r) {
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "- tool: " << r.meta.tool << " " << r.meta.version << "\n";
  out << "- timestamp: " << r.meta.timestamp << "\n";
  out << "- gmp: " << r.meta.gmp << ", compiler: " << r.meta.compiler << "\n";
  out << "- seed: " << r.meta.seed << "\n";
  out << "- grid: `" << format_grid(r.meta.grid) << "`\n";
  out << "- result: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
      << r.count(Status::skipped) << " skipped\n\n";
  out << "| suite | check | parameters | status | time (s) | note |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    std::string note = c.message;
    if (!c.witness.empty()) note += (note.empty() ? "" : "; ") + std::string("witness: ") + c.witness;
    out << "| " << c.suite << " | " << c.name << " | " << format_params(c.params) << " | "
        << to_string(c.status) << " | " << std::fixed << std::setprecision(3) << c.seconds << " | "
        << escape_cell(note) << " |\n";
  }
  return out.str();
}

}  // namespace sl2coh::harness
