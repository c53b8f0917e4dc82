#include "spinbath/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spinbath/rcbench.hpp"

namespace spinbath {

const char* model_name(Model m) {
  switch (m) {
    case Model::Heisenberg: return "heisenberg";
    case Model::Ising: return "ising";
    default: return "fully_connected";
  }
}

const char* picture_name(PictureMode p) {
  switch (p) {
    case PictureMode::Effh: return "effh";
    case PictureMode::Polaron: return "polaron";
    default: return "rc_bench";
  }
}

const char* bath_kind_name(BathKind b) {
  return b == BathKind::Brownian ? "brownian" : "super_ohmic";
}

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error("config error: " + path + ":" +
                           std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct RawValue {
  std::string value;
  int line;
};

using RawConfig = std::map<std::string, RawValue>;  // "section.key"

const std::map<std::string, std::set<std::string>> kSchema = {
    {"run", {"model", "scheme", "picture", "observables"}},
    {"chain", {"n", "delta", "jx", "jy", "jz", "j"}},
    {"bath", {"type", "omega", "gamma", "omega_c"}},
    {"grid", {"coupling", "temperature"}},
    {"rc", {"levels"}},
};

RawConfig read_raw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config error: cannot open " + path);
  RawConfig raw;
  std::string section, line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(path, ln, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!kSchema.count(section)) fail(path, ln, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(path, ln, "expected key = value");
    if (section.empty()) fail(path, ln, "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kSchema.at(section).count(key))
      fail(path, ln, "unknown key '" + key + "' in section [" + section + "]");
    if (value.empty()) fail(path, ln, "empty value for '" + key + "'");
    const std::string full = section + "." + key;
    if (raw.count(full)) fail(path, ln, "duplicate key '" + full + "'");
    raw[full] = {value, ln};
  }
  return raw;
}

class Reader {
 public:
  Reader(std::string path, RawConfig raw) : path_(std::move(path)), raw_(std::move(raw)) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  const RawValue& require(const std::string& key) {
    auto it = raw_.find(key);
    if (it == raw_.end())
      throw std::runtime_error("config error: " + path_ + ": missing required key '" +
                               key + "'");
    return it->second;
  }

  double number(const std::string& key) { return to_double(require(key)); }

  double number_or(const std::string& key, double dflt) {
    return has(key) ? number(key) : dflt;
  }

  int integer(const std::string& key) {
    const RawValue& rv = require(key);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(rv.value, &used);
    } catch (const std::exception&) {
      fail(path_, rv.line, "'" + rv.value + "' is not an integer");
    }
    if (used != rv.value.size()) fail(path_, rv.line, "trailing characters after integer");
    return v;
  }

  std::string word(const std::string& key) { return require(key).value; }

  // Comma list of numbers, or a start:stop:count triple expanded linearly.
  std::vector<double> grid(const std::string& key) {
    const RawValue& rv = require(key);
    if (rv.value.find(':') != std::string::npos) {
      const auto parts = split(rv.value, ':');
      if (parts.size() != 3) fail(path_, rv.line, "range must be start:stop:count");
      const double a = to_double({parts[0], rv.line});
      const double b = to_double({parts[1], rv.line});
      const int n = static_cast<int>(to_double({parts[2], rv.line}));
      if (n < 1) fail(path_, rv.line, "range count must be >= 1");
      std::vector<double> out;
      for (int k = 0; k < n; ++k)
        out.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
      return out;
    }
    std::vector<double> out;
    for (const auto& p : split(rv.value, ','))
      out.push_back(to_double({trim(p), rv.line}));
    if (out.empty()) fail(path_, rv.line, "empty list");
    return out;
  }

  std::vector<int> int_list(const std::string& key) {
    const RawValue& rv = require(key);
    std::vector<int> out;
    for (const auto& p : split(rv.value, ',')) {
      const std::string t = trim(p);
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        fail(path_, rv.line, "'" + t + "' is not an integer");
      }
      if (used != t.size()) fail(path_, rv.line, "trailing characters after integer");
      out.push_back(v);
    }
    return out;
  }

  std::vector<std::string> word_list(const std::string& key) {
    const RawValue& rv = require(key);
    std::vector<std::string> out;
    for (const auto& p : split(rv.value, ',')) out.push_back(trim(p));
    return out;
  }

  void reject(const std::string& key, const std::string& why) {
    if (has(key)) fail(path_, raw_.at(key).line, "'" + key + "' " + why);
  }

  [[noreturn]] void bad(const std::string& key, const std::string& msg) {
    fail(path_, raw_.at(key).line, msg);
  }

 private:
  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
  }

  double to_double(const RawValue& rv) {
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(rv.value, &used);
    } catch (const std::exception&) {
      fail(path_, rv.line, "'" + rv.value + "' is not a number");
    }
    if (used != rv.value.size()) fail(path_, rv.line, "trailing characters after number");
    return v;
  }

  std::string path_;
  RawConfig raw_;
};

const std::set<std::string> kObservables = {"S_x",    "S_y",    "S_z",
                                            "corr_x", "corr_y", "corr_z"};

}  // namespace

ExperimentConfig parse_config(const std::string& path) {
  Reader r(path, read_raw(path));
  ExperimentConfig cfg;

  const std::string model = r.word("run.model");
  if (model == "heisenberg") cfg.model = Model::Heisenberg;
  else if (model == "ising") cfg.model = Model::Ising;
  else if (model == "fully_connected") cfg.model = Model::FullyConnected;
  else r.bad("run.model", "unknown model '" + model + "'");

  const std::string scheme = r.word("run.scheme");
  if (scheme == "global") cfg.scheme = SchemeKind::Global;
  else if (scheme == "local") cfg.scheme = SchemeKind::Local;
  else if (scheme == "half_and_half") cfg.scheme = SchemeKind::HalfAndHalf;
  else if (scheme == "pairwise") cfg.scheme = SchemeKind::Pairwise;
  else r.bad("run.scheme", "unknown scheme '" + scheme + "'");

  const std::string picture = r.word("run.picture");
  if (picture == "effh") cfg.picture = PictureMode::Effh;
  else if (picture == "polaron") cfg.picture = PictureMode::Polaron;
  else if (picture == "rc_bench") cfg.picture = PictureMode::RcBench;
  else r.bad("run.picture", "unknown picture '" + picture + "'");

  if (r.has("run.observables")) {
    cfg.observables = r.word_list("run.observables");
    for (const auto& o : cfg.observables)
      if (!kObservables.count(o))
        r.bad("run.observables", "unknown observable '" + o + "'");
    std::sort(cfg.observables.begin(), cfg.observables.end());
    cfg.observables.erase(
        std::unique(cfg.observables.begin(), cfg.observables.end()),
        cfg.observables.end());
  } else {
    cfg.observables = {"S_x", "S_y", "S_z"};
  }

  cfg.sizes = r.int_list("chain.n");
  cfg.delta = r.number("chain.delta");
  cfg.jx = r.number_or("chain.jx", 0.0);
  cfg.jy = r.number_or("chain.jy", 0.0);
  cfg.jz = r.number_or("chain.jz", 0.0);
  if (cfg.model == Model::FullyConnected) {
    cfg.j = r.number("chain.j");
    for (const char* k : {"chain.jx", "chain.jy", "chain.jz"})
      r.reject(k, "is not meaningful for the fully-connected model");
  } else {
    r.reject("chain.j", "is only meaningful for the fully-connected model");
  }

  const std::string bath = r.word("bath.type");
  if (bath == "brownian") {
    cfg.bath_type = BathKind::Brownian;
    cfg.omega = r.number("bath.omega");
    cfg.gamma = r.number("bath.gamma");
    r.reject("bath.omega_c", "belongs to super_ohmic baths");
  } else if (bath == "super_ohmic") {
    cfg.bath_type = BathKind::SuperOhmic;
    cfg.omega_c = r.number("bath.omega_c");
    r.reject("bath.omega", "belongs to brownian baths");
    r.reject("bath.gamma", "belongs to brownian baths");
  } else {
    r.bad("bath.type", "unknown bath type '" + bath + "'");
  }

  cfg.coupling = r.grid("grid.coupling");
  cfg.temperatures = r.grid("grid.temperature");
  if (r.has("rc.levels")) cfg.rc_levels = r.integer("rc.levels");

  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty()) throw std::runtime_error("config error: empty size list");
  for (int n : cfg.sizes) check_site_count(n);
  if (cfg.coupling.empty())
    throw std::runtime_error("config error: empty coupling grid");
  for (double c : cfg.coupling)
    if (c < 0) throw std::runtime_error("config error: negative coupling value");
  if (cfg.temperatures.empty())
    throw std::runtime_error("config error: empty temperature grid");
  for (double t : cfg.temperatures)
    if (t <= 0) throw std::runtime_error("config error: temperatures must be > 0");
  if (cfg.observables.empty())
    throw std::runtime_error("config error: empty observable list");

  if (cfg.model == Model::FullyConnected) {
    if (cfg.scheme != SchemeKind::Global)
      throw std::runtime_error(
          "config error: the fully-connected model uses the global scheme");
    if (cfg.picture == PictureMode::RcBench)
      throw std::runtime_error(
          "config error: rc_bench is not available for the fully-connected model");
  }
  if (cfg.picture == PictureMode::Polaron && cfg.bath_type != BathKind::SuperOhmic)
    throw std::runtime_error(
        "config error: the polaron picture requires super_ohmic baths");
  for (int n : cfg.sizes) {
    bath_sites(cfg.scheme, n);  // parity check
    if (cfg.picture == PictureMode::RcBench)
      check_rc_support(cfg.scheme, n, cfg.rc_levels);
  }
  if (cfg.bath_type == BathKind::Brownian) {
    if (cfg.omega <= 0) throw std::runtime_error("config error: bath.omega must be > 0");
    if (cfg.gamma <= 0) throw std::runtime_error("config error: bath.gamma must be > 0");
  } else if (cfg.omega_c <= 0) {
    throw std::runtime_error("config error: bath.omega_c must be > 0");
  }
}

SpectralDensity bath_at(const ExperimentConfig& cfg, double coupling) {
  if (cfg.bath_type == BathKind::Brownian)
    return Brownian{coupling, cfg.omega, cfg.gamma};
  return SuperOhmic{coupling, cfg.omega_c};
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

template <typename T, typename F>
std::string join(const std::vector<T>& v, F f) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += f(v[k]);
  }
  return out;
}

}  // namespace

std::string dump_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "[run]\n";
  out << "model = " << model_name(cfg.model) << "\n";
  out << "scheme = " << scheme_name(cfg.scheme) << "\n";
  out << "picture = " << picture_name(cfg.picture) << "\n";
  out << "observables = "
      << join(cfg.observables, [](const std::string& s) { return s; }) << "\n";
  out << "\n[chain]\n";
  out << "n = " << join(cfg.sizes, [](int n) { return std::to_string(n); }) << "\n";
  out << "delta = " << fmt(cfg.delta) << "\n";
  if (cfg.model == Model::FullyConnected) {
    out << "j = " << fmt(cfg.j) << "\n";
  } else {
    out << "jx = " << fmt(cfg.jx) << "\n";
    out << "jy = " << fmt(cfg.jy) << "\n";
    out << "jz = " << fmt(cfg.jz) << "\n";
  }
  out << "\n[bath]\n";
  out << "type = " << bath_kind_name(cfg.bath_type) << "\n";
  if (cfg.bath_type == BathKind::Brownian) {
    out << "omega = " << fmt(cfg.omega) << "\n";
    out << "gamma = " << fmt(cfg.gamma) << "\n";
  } else {
    out << "omega_c = " << fmt(cfg.omega_c) << "\n";
  }
  out << "\n[grid]\n";
  out << "coupling = " << join(cfg.coupling, fmt) << "\n";
  out << "temperature = " << join(cfg.temperatures, fmt) << "\n";
  out << "\n[rc]\n";
  out << "levels = " << cfg.rc_levels << "\n";
  return out.str();
}

}  // namespace spinbath
