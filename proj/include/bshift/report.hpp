#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bshift/certificate.hpp"

namespace bshift {

inline constexpr const char* kToolVersion = "0.1.0";

struct run_config {
  std::size_t grid = 4096;
  std::size_t radial_nodes = 512;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::map<std::string, double> tol_overrides;
  enum class output_format { text, json, csv };
  output_format format = output_format::text;

  double tol_or(const std::string& key, double fallback) const {
    auto it = tol_overrides.find(key);
    return it == tol_overrides.end() ? fallback : it->second;
  }

  void validate() const {
    if (grid < (1u << 8) || grid > (1u << 20) || (grid & (grid - 1)) != 0)
      throw std::invalid_argument("config: grid must be a power of two in [2^8, 2^20]");
    if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
    if (radial_nodes < 2) throw std::invalid_argument("config: radial nodes must be >= 2");
  }
};

// Plain-text key=value config file; unknown keys rejected. Command-line flags
// override file values, which override defaults.
inline void apply_config_file(run_config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "grid") cfg.grid = std::stoul(value);
    else if (key == "radial-nodes") cfg.radial_nodes = std::stoul(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "jobs") cfg.jobs = static_cast<unsigned>(std::stoul(value));
    else if (key == "format") {
      if (value == "text") cfg.format = run_config::output_format::text;
      else if (value == "json") cfg.format = run_config::output_format::json;
      else if (value == "csv") cfg.format = run_config::output_format::csv;
      else throw std::runtime_error("config: unknown format " + value);
    } else if (key.rfind("tol.", 0) == 0) {
      cfg.tol_overrides[key.substr(4)] = std::stod(value);
    } else {
      throw std::runtime_error("config: unknown key " + key);
    }
  }
}

struct report_document {
  std::string version = kToolVersion;
  run_config config;
  std::vector<bound_certificate> certificates;
  double wall_seconds = 0.0;

  std::size_t passed() const {
    std::size_t c = 0;
    for (const auto& cert : certificates) c += cert.pass ? 1 : 0;
    return c;
  }
  std::size_t failed() const { return certificates.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

namespace detail {
inline std::string format_params(const std::map<std::string, double>& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out << ';';
    first = false;
    out << k << '=';
    std::ostringstream num;
    num.precision(17);
    num << v;
    out << num.str();
  }
  return out.str();
}
}  // namespace detail

inline std::string render_text(const report_document& doc) {
  std::ostringstream out;
  out.precision(10);
  out << "bshift " << doc.version << "  grid=" << doc.config.grid
      << " radial-nodes=" << doc.config.radial_nodes << " seed=" << doc.config.seed
      << " jobs=" << doc.config.jobs << "\n";
  for (const auto& c : doc.certificates) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": lhs=" << c.lhs << " "
        << relation_symbol(c.rel) << " rhs=" << c.rhs << "  margin=" << c.margin();
    if (!c.params.empty()) out << "  (" << detail::format_params(c.params) << ")";
    out << "\n";
  }
  out << "summary: " << doc.passed() << " passed, " << doc.failed() << " failed, "
      << doc.certificates.size() << " total  [" << doc.wall_seconds << " s]\n";
  return out.str();
}

// Wall time and the worker count are deliberately not serialized: identical
// (config, seed) runs must produce byte-identical JSON regardless of jobs.
inline std::string render_json(const report_document& doc) {
  nlohmann::json root;
  root["version"] = doc.version;
  root["config"] = {{"grid", doc.config.grid},
                    {"radial_nodes", doc.config.radial_nodes},
                    {"seed", doc.config.seed},
                    {"tol", doc.config.tol_overrides}};
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : doc.certificates) {
    certs.push_back({{"name", c.name},
                     {"params", c.params},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"relation", relation_symbol(c.rel)},
                     {"margin", c.margin()},
                     {"pass", c.pass}});
  }
  root["certificates"] = certs;
  root["summary"] = {{"pass", doc.passed()}, {"fail", doc.failed()}};
  return root.dump(2) + "\n";
}

inline std::string render_csv(const report_document& doc) {
  std::ostringstream out;
  out.precision(17);
  out << "name,params,lhs,rhs,relation,margin,pass\n";
  for (const auto& c : doc.certificates) {
    out << c.name << ",\"" << detail::format_params(c.params) << "\"," << c.lhs << ','
        << c.rhs << ',' << relation_symbol(c.rel) << ',' << c.margin() << ','
        << (c.pass ? "true" : "false") << "\n";
  }
  return out.str();
}

inline std::string render(const report_document& doc) {
  switch (doc.config.format) {
    case run_config::output_format::text: return render_text(doc);
    case run_config::output_format::json: return render_json(doc);
    case run_config::output_format::csv: return render_csv(doc);
  }
  return render_text(doc);
}

}  // namespace bshift
