#include "helibox/config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "helibox/errors.hpp"

namespace helibox {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return s.substr(a, b - a);
}

[[noreturn]] void fail(const std::string& name, int line,
                       const std::string& what) {
  std::ostringstream os;
  os << name << ":" << line << ": " << what;
  throw ConfigError(os.str());
}

double parse_double(const std::string& name, int line, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size())
      fail(name, line, "trailing characters in value for '" + key + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(name, line, "expected a number for '" + key + "', got '" + value +
                         "'");
  }
}

int parse_int(const std::string& name, int line, const std::string& key,
              const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size())
      fail(name, line, "trailing characters in value for '" + key + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(name, line, "expected an integer for '" + key + "', got '" + value +
                         "'");
  }
}

char parse_axis(const std::string& name, int line, const std::string& value) {
  if (value.size() == 1 && (value[0] == 'x' || value[0] == 'y' ||
                            value[0] == 'z'))
    return value[0];
  fail(name, line, "rho_axis must be one of x, y, z; got '" + value + "'");
}

} // namespace

void RunConfig::validate() const {
  auto reject = [](const std::string& what) { throw ConfigError(what); };

  if (n < 8 || n % 2 != 0)
    reject("n must be even and at least 8");
  if (!(L > 0.0))
    reject("L must be positive");
  if (!(t_end >= 0.0))
    reject("t_end must be non-negative");
  if (!(cfl > 0.0) || cfl > 1.0)
    reject("cfl must lie in (0, 1]");
  if (!(dt_max > 0.0))
    reject("dt_max must be positive");
  if (output_stride < 1)
    reject("output_stride must be at least 1");
  if (lambda_window < 0.0)
    reject("lambda_window must be non-negative");
  if (!(pressure_tol > 0.0))
    reject("pressure_tol must be positive");
  if (pressure_max_iter < 1)
    reject("pressure_max_iter must be at least 1");
  if (!(rho_floor > 0.0))
    reject("rho_floor must be positive");

  eos.validate();
  switch (system) {
  case SystemKind::baro_euler:
    if (eos.kind != EosKind::polytropic)
      reject("system baro requires eos kind = polytropic");
    break;
  case SystemKind::comp_euler:
  case SystemKind::mhd:
    if (eos.kind != EosKind::ideal_gas)
      reject("system " + to_string(system) +
             " requires eos kind = ideal-gas");
    break;
  case SystemKind::ii_euler:
    break; // pressure is a Lagrange multiplier; the EOS is unused
  }
}

RunConfig parse_config(std::istream& in, const std::string& name) {
  RunConfig cfg;
  // Defaults that differ by EOS kind are resolved in validate(); here we
  // only record what the file says.
  bool eos_kind_set = false;

  using Setter = std::function<void(int, const std::string&)>;
  std::map<std::string, std::map<std::string, Setter>> schema;

  auto dbl = [&](double& slot, const std::string& key) {
    return [&slot, key, &name](int line, const std::string& v) {
      slot = parse_double(name, line, key, v);
    };
  };
  auto integer = [&](int& slot, const std::string& key) {
    return [&slot, key, &name](int line, const std::string& v) {
      slot = parse_int(name, line, key, v);
    };
  };

  schema["run"]["system"] = [&](int line, const std::string& v) {
    try {
      cfg.system = system_from_string(v);
    } catch (const std::exception& e) {
      fail(name, line, e.what());
    }
  };
  schema["run"]["n"] = integer(cfg.n, "n");
  schema["run"]["L"] = dbl(cfg.L, "L");
  schema["run"]["t_end"] = dbl(cfg.t_end, "t_end");
  schema["run"]["cfl"] = dbl(cfg.cfl, "cfl");
  schema["run"]["dt_max"] = dbl(cfg.dt_max, "dt_max");
  schema["run"]["output_stride"] = integer(cfg.output_stride, "output_stride");
  schema["run"]["lambda_window"] = dbl(cfg.lambda_window, "lambda_window");

  schema["eos"]["kind"] = [&](int line, const std::string& v) {
    if (v == "polytropic")
      cfg.eos.kind = EosKind::polytropic;
    else if (v == "ideal-gas")
      cfg.eos.kind = EosKind::ideal_gas;
    else
      fail(name, line, "eos kind must be polytropic or ideal-gas; got '" + v +
                           "'");
    eos_kind_set = true;
  };
  schema["eos"]["gamma"] = dbl(cfg.eos.gamma, "gamma");
  schema["eos"]["K"] = dbl(cfg.eos.K, "K");

  schema["ic"]["name"] = [&](int line, const std::string& v) {
    if (v != "abc" && v != "taylor-green" && v != "acoustic" &&
        v != "orszag-tang")
      fail(name, line, "unknown initial condition '" + v + "'");
    cfg.ic.name = v;
  };
  schema["ic"]["A"] = dbl(cfg.ic.A, "A");
  schema["ic"]["B"] = dbl(cfg.ic.B, "B");
  schema["ic"]["C"] = dbl(cfg.ic.C, "C");
  schema["ic"]["rho0"] = dbl(cfg.ic.rho0, "rho0");
  schema["ic"]["rho_eps"] = dbl(cfg.ic.rho_eps, "rho_eps");
  schema["ic"]["rho_axis"] = [&](int line, const std::string& v) {
    cfg.ic.rho_axis = parse_axis(name, line, v);
  };
  schema["ic"]["comp_amp"] = dbl(cfg.ic.comp_amp, "comp_amp");
  schema["ic"]["e0"] = dbl(cfg.ic.e0, "e0");
  schema["ic"]["e_eps"] = dbl(cfg.ic.e_eps, "e_eps");
  schema["ic"]["amp"] = dbl(cfg.ic.amp, "amp");
  schema["ic"]["b0"] = dbl(cfg.ic.b0, "b0");
  schema["ic"]["ot_delta"] = dbl(cfg.ic.ot_delta, "ot_delta");

  schema["solver"]["pressure_tol"] = dbl(cfg.pressure_tol, "pressure_tol");
  schema["solver"]["pressure_max_iter"] =
      integer(cfg.pressure_max_iter, "pressure_max_iter");
  schema["solver"]["rho_floor"] = dbl(cfg.rho_floor, "rho_floor");

  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const std::size_t hash = s.find_first_of("#;");
    if (hash != std::string::npos)
      s = s.substr(0, hash);
    s = trim(s);
    if (s.empty())
      continue;

    if (s.front() == '[') {
      if (s.back() != ']')
        fail(name, line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (schema.find(section) == schema.end())
        fail(name, line, "unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      fail(name, line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      fail(name, line, "empty key");
    if (value.empty())
      fail(name, line, "empty value for '" + key + "'");
    if (section.empty())
      fail(name, line, "key '" + key + "' appears before any section");

    auto& keys = schema[section];
    const auto it = keys.find(key);
    if (it == keys.end())
      fail(name, line, "unknown key '" + key + "' in section [" + section +
                           "]");
    it->second(line, value);
  }

  // Pick the natural EOS kind when the file never chose one.
  if (!eos_kind_set) {
    if (cfg.system == SystemKind::comp_euler || cfg.system == SystemKind::mhd)
      cfg.eos.kind = EosKind::ideal_gas;
    else
      cfg.eos.kind = EosKind::polytropic;
  }

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(name + ": " + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

} // namespace helibox
