#include "twr/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "twr/channel.hpp"
#include "twr/errors.hpp"

namespace twr {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config key '" + key + "': cannot parse '" + value + "' as a real number");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("config key '" + key + "': cannot parse '" + value + "' as an integer");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw config_error("config key '" + key + "': cannot parse '" + value + "' as an unsigned integer");
  }
}

Eigen::VectorXd parse_real_list(const std::string& key, const std::string& value) {
  const auto items = split_list(value);
  if (items.empty()) throw config_error("config key '" + key + "': empty list");
  Eigen::VectorXd out(static_cast<Eigen::Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = parse_double(key, items[i]);
  return out;
}

// Broadcast a scalar to n entries, or require exactly n entries.
Eigen::VectorXd broadcast(const std::string& key, const Eigen::VectorXd& v, int n) {
  if (v.size() == n) return v;
  if (v.size() == 1) return Eigen::VectorXd::Constant(n, v(0));
  throw config_error("config key '" + key + "': expected 1 or " + std::to_string(n) +
                     " values, got " + std::to_string(v.size()));
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("config line " + std::to_string(lineno) + ": empty key");
    if (value.empty()) throw config_error("config key '" + key + "': empty value");
    if (kv.count(key)) throw config_error("config key '" + key + "': duplicated");
    kv[key] = value;
  }

  static const char* kKnown[] = {"K_T",  "M",     "p_source_db",     "p_relay_db", "rho",
                                 "seed", "trials", "sigma2",          "sinr_targets_db",
                                 "beta", "subgroups"};
  for (const auto& [key, value] : kv) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw config_error("config key '" + key + "': unknown key");
  }
  for (const char* req : {"K_T", "M", "p_source_db", "p_relay_db", "rho", "seed", "trials"}) {
    if (!kv.count(req)) throw config_error(std::string("config key '") + req + "': missing");
  }

  ScenarioConfig cfg;
  cfg.num_sources_total = static_cast<int>(parse_int("K_T", kv["K_T"]));
  if (cfg.num_sources_total < 2 || cfg.num_sources_total % 2 != 0)
    throw config_error("config key 'K_T': must be an even integer >= 2");
  cfg.antennas = static_cast<int>(parse_int("M", kv["M"]));
  if (cfg.antennas < 1) throw config_error("config key 'M': must be a positive integer");
  cfg.source_powers_db =
      broadcast("p_source_db", parse_real_list("p_source_db", kv["p_source_db"]), cfg.num_sources_total);
  cfg.relay_power_db = parse_double("p_relay_db", kv["p_relay_db"]);
  cfg.rho = parse_double("rho", kv["rho"]);
  if (!(cfg.rho >= 0.0 && cfg.rho < 1.0)) throw config_error("config key 'rho': must lie in [0,1)");
  cfg.seed = parse_u64("seed", kv["seed"]);
  cfg.trials = static_cast<int>(parse_int("trials", kv["trials"]));
  if (cfg.trials < 1) throw config_error("config key 'trials': must be a positive integer");
  if (kv.count("sigma2")) {
    cfg.noise_power = parse_double("sigma2", kv["sigma2"]);
    if (!(cfg.noise_power > 0.0)) throw config_error("config key 'sigma2': must be > 0");
  }
  const int pairs = cfg.num_sources_total / 2;
  if (kv.count("sinr_targets_db")) {
    cfg.sinr_targets_db =
        broadcast("sinr_targets_db", parse_real_list("sinr_targets_db", kv["sinr_targets_db"]), pairs);
  }
  if (kv.count("beta")) {
    cfg.beta = broadcast("beta", parse_real_list("beta", kv["beta"]), pairs);
    if ((cfg.beta->array() <= 0.0).any()) throw config_error("config key 'beta': entries must be > 0");
  }
  if (kv.count("subgroups")) {
    std::vector<int> ns;
    for (const auto& item : split_list(kv["subgroups"])) {
      const int n = static_cast<int>(parse_int("subgroups", item));
      if (n < 1) throw config_error("config key 'subgroups': entries must be positive");
      ns.push_back(n);
    }
    cfg.subgroups = ns;
  }
  return cfg;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config file '" + path + "': cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

Eigen::VectorXd source_powers_linear(const ScenarioConfig& cfg) {
  Eigen::VectorXd p(cfg.source_powers_db.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = db_to_linear(cfg.source_powers_db(i));
  return p;
}

double relay_power_linear(const ScenarioConfig& cfg) { return db_to_linear(cfg.relay_power_db); }

Eigen::VectorXd response_gains(const ScenarioConfig& cfg) {
  Eigen::VectorXd beta = Eigen::VectorXd::Ones(cfg.num_sources_total);
  if (cfg.beta) {
    for (int k = 0; k < cfg.num_sources_total; ++k) beta(k) = (*cfg.beta)(k / 2);
  }
  return beta;
}

}  // namespace twr
