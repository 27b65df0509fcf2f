#include "lrvp/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "lrvp/errors.hpp"

namespace lrvp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool valid_key(const std::string& k) {
  return !k.empty() && std::all_of(k.begin(), k.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

std::string unquote(const std::string& key, const std::string& raw) {
  if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') return raw.substr(1, raw.size() - 2);
  if (!raw.empty() && (raw.front() == '"' || raw.back() == '"'))
    throw config_error("key '" + key + "': unterminated string " + raw);
  return raw;
}

double as_double(const std::string& key, const std::string& raw) {
  const std::string s = unquote(key, raw);
  std::istringstream is(s);
  double v = 0.0;
  is >> v;
  if (!is || !(is >> std::ws).eof() || !std::isfinite(v))
    throw config_error("key '" + key + "': expected a number, got '" + raw + "'");
  return v;
}

long long as_integer(const std::string& key, const std::string& raw) {
  const double v = as_double(key, raw);
  if (v != std::floor(v)) throw config_error("key '" + key + "': expected an integer, got '" + raw + "'");
  return static_cast<long long>(v);
}

std::string as_string(const std::string& key, const std::string& raw) {
  const std::string s = unquote(key, raw);
  if (s.empty()) throw config_error("key '" + key + "': empty value");
  return s;
}

std::vector<double> as_list(const std::string& key, const std::string& raw) {
  if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
    throw config_error("key '" + key + "': expected a list like [1.0, 2.0], got '" + raw + "'");
  std::vector<double> out;
  std::stringstream ss(raw.substr(1, raw.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(as_double(key, item));
  }
  return out;
}

} // namespace

void RunConfig::validate() const {
  try {
    scenario.validate();
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("scenario: ") + e.what());
  }
  if (nx < 2) throw config_error("key 'nx': need at least 2 grid points");
  if (nv < 2) throw config_error("key 'nv': need at least 2 grid points");
  if (!(tau > 0.0)) throw config_error("key 'tau': must be positive");
  if (!(t_final >= tau)) throw config_error("key 't_final': must be at least tau");
  if (n_sub < 1) throw config_error("key 'n_sub': must be at least 1");
  if (output_interval < 1) throw config_error("key 'output_interval': must be at least 1");
  if (solver == SolverKind::LowRank) {
    if (rank < 1)
      throw config_error("key 'rank': must satisfy r >= 1 + d = 2 (r >= 1 without corrections)");
    if (rank > std::min(nx, nv)) throw config_error("key 'rank': must not exceed min(nx, nv)");
    if (mode.kind != CorrectionMode::Kind::None && rank < 2)
      throw config_error("key 'rank': corrections need rank >= 1 + d = 2");
  } else if (mode.kind != CorrectionMode::Kind::None) {
    throw config_error("key 'mode': the fullgrid solver only supports mode = \"none\"");
  }
  if (mode.kind == CorrectionMode::Kind::Combined && !(mode.weight >= 0.0))
    throw config_error("key 'weight': must be nonnegative");
  for (double ts : snapshot_times)
    if (!(ts >= 0.0)) throw config_error("key 'snapshot_times': times must be nonnegative");
}

Index RunConfig::step_count() const {
  return static_cast<Index>(std::ceil(t_final / tau - 1e-9));
}

ConfigEntries parse_entries(const std::string& text, const std::string& source) {
  ConfigEntries entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    if (s.front() == '[') {
      if (s.back() != ']' || !valid_key(trim(s.substr(1, s.size() - 2))))
        throw config_error(where + ": malformed section header '" + s + "'");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw config_error(where + ": expected 'key = value', got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (!valid_key(key)) throw config_error(where + ": malformed key '" + key + "'");
    if (value.empty()) throw config_error(where + ": key '" + key + "' has no value");
    if (entries.count(key)) throw config_error(where + ": duplicate key '" + key + "'");
    entries[key] = value;
  }
  return entries;
}

void apply_override(ConfigEntries& entries, const std::string& key_value) {
  const auto eq = key_value.find('=');
  if (eq == std::string::npos)
    throw config_error("override '" + key_value + "': expected key=value");
  const std::string key = trim(key_value.substr(0, eq));
  const std::string value = trim(key_value.substr(eq + 1));
  if (!valid_key(key) || value.empty()) throw config_error("override '" + key_value + "': malformed");
  entries[key] = value;
}

RunConfig build_config(const ConfigEntries& entries) {
  RunConfig c;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"amplitude", [&](auto& k, auto& v) { c.scenario.amplitude = as_double(k, v); }},
      {"wavenumber", [&](auto& k, auto& v) { c.scenario.wavenumber = as_double(k, v); }},
      {"beam_speed", [&](auto& k, auto& v) { c.scenario.beam_speed = as_double(k, v); }},
      {"x_min", [&](auto& k, auto& v) { c.scenario.x_min = as_double(k, v); }},
      {"x_max", [&](auto& k, auto& v) { c.scenario.x_max = as_double(k, v); }},
      {"v_min", [&](auto& k, auto& v) { c.scenario.v_min = as_double(k, v); }},
      {"v_max", [&](auto& k, auto& v) { c.scenario.v_max = as_double(k, v); }},
      {"nx", [&](auto& k, auto& v) { c.nx = as_integer(k, v); }},
      {"nv", [&](auto& k, auto& v) { c.nv = as_integer(k, v); }},
      {"rank", [&](auto& k, auto& v) { c.rank = as_integer(k, v); }},
      {"tau", [&](auto& k, auto& v) { c.tau = as_double(k, v); }},
      {"t_final", [&](auto& k, auto& v) { c.t_final = as_double(k, v); }},
      {"n_sub", [&](auto& k, auto& v) { c.n_sub = static_cast<int>(as_integer(k, v)); }},
      {"output_interval", [&](auto& k, auto& v) { c.output_interval = as_integer(k, v); }},
      {"output_dir", [&](auto& k, auto& v) { c.output_dir = as_string(k, v); }},
      {"run_name", [&](auto& k, auto& v) { c.run_name = as_string(k, v); }},
      {"snapshot_times", [&](auto& k, auto& v) { c.snapshot_times = as_list(k, v); }},
      {"weight", [&](auto& k, auto& v) { c.mode.weight = as_double(k, v); }},
      {"splitting",
       [&](auto& k, auto& v) {
         const std::string s = as_string(k, v);
         if (s == "lie") c.splitting = Splitting::Lie;
         else if (s == "strang") c.splitting = Splitting::Strang;
         else throw config_error("key '" + k + "': expected \"lie\" or \"strang\", got '" + s + "'");
       }},
      {"mode",
       [&](auto& k, auto& v) {
         const std::string s = as_string(k, v);
         if (s == "none") c.mode.kind = CorrectionMode::Kind::None;
         else if (s == "local") c.mode.kind = CorrectionMode::Kind::Local;
         else if (s == "global") c.mode.kind = CorrectionMode::Kind::Global;
         else if (s == "combined") c.mode.kind = CorrectionMode::Kind::Combined;
         else throw config_error("key '" + k + "': expected none, local, global or combined, got '" + s + "'");
       }},
      {"correction_form",
       [&](auto& k, auto& v) {
         const std::string s = as_string(k, v);
         if (s == "poststep") c.correction_form = CorrectionForm::PostStep;
         else if (s == "stagewise") c.correction_form = CorrectionForm::Stagewise;
         else throw config_error("key '" + k + "': expected \"poststep\" or \"stagewise\", got '" + s + "'");
       }},
      {"solver",
       [&](auto& k, auto& v) {
         const std::string s = as_string(k, v);
         if (s == "lowrank") c.solver = SolverKind::LowRank;
         else if (s == "fullgrid") c.solver = SolverKind::FullGrid;
         else throw config_error("key '" + k + "': expected \"lowrank\" or \"fullgrid\", got '" + s + "'");
       }},
  };

  for (const auto& [key, value] : entries) {
    auto it = setters.find(key);
    if (it == setters.end()) throw config_error("unknown key '" + key + "'");
    it->second(key, value);
  }
  for (const char* required : {"mode", "solver"})
    if (!entries.count(required)) throw config_error(std::string("missing required key '") + required + "'");
  c.validate();
  return c;
}

RunConfig parse_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  ConfigEntries entries = parse_entries(ss.str(), path);
  for (const auto& o : overrides) apply_override(entries, o);
  return build_config(entries);
}

} // namespace lrvp
