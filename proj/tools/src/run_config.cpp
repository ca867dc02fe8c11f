#include "run_config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace majorana::cli {

namespace {

using nlohmann::json;

template <class T>
T get(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid value for '") + key + "': " + e.what());
  }
}

Vec3 get_vec3(const json& j, const char* key, const Vec3& fallback) {
  if (!j.contains(key)) return fallback;
  const auto v = get<std::vector<double>>(j, key, {});
  if (v.size() != 3) throw ConfigError(std::string("'") + key + "' must have 3 entries");
  return {v[0], v[1], v[2]};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

InitialCondition parse_initial(const json& j) {
  InitialCondition ic;
  const std::string type = get<std::string>(j, "type", "gaussian");
  if (type == "gaussian") {
    ic.kind = InitialCondition::Kind::gaussian;
  } else if (type == "single-mode") {
    ic.kind = InitialCondition::Kind::single_mode;
  } else if (type == "zero") {
    ic.kind = InitialCondition::Kind::zero;
  } else {
    throw ConfigError("unknown initial.type '" + type + "'");
  }
  ic.center = get_vec3(j, "center", ic.center);
  ic.width = get<double>(j, "width", ic.width);
  ic.momentum = get_vec3(j, "momentum", ic.momentum);
  if (j.contains("chi")) {
    const auto v = get<std::vector<double>>(j, "chi", {});
    require(v.size() == 4, "'initial.chi' must have 4 entries");
    ic.chi = Spinor4(v[0], v[1], v[2], v[3]);
  }
  if (j.contains("omega")) {
    const auto v = get<std::vector<int>>(j, "omega", {});
    require(v.size() == 2, "'initial.omega' must be [l, mu]");
    ic.omega = std::make_pair(v[0], v[1]);
  }
  if (j.contains("p")) {
    const json& p = j.at("p");
    if (p.is_array()) {
      const auto v = get<std::vector<int>>(j, "p", {});
      require(v.size() == 3, "'initial.p' must be 3 wavenumber indices or one node index");
      ic.wavenumber = {v[0], v[1], v[2]};
    } else {
      ic.node = get<int>(j, "p", 0);
    }
  }
  ic.l = get<int>(j, "l", ic.l);
  ic.mu = get<int>(j, "mu", ic.mu);
  require(ic.width > 0.0 && std::isfinite(ic.width), "'initial.width' must be positive");
  require(ic.chi.allFinite() && ic.center.allFinite() && ic.momentum.allFinite(),
          "initial condition must be finite");
  return ic;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  require(j.is_object(), "config must be a JSON object");

  RunConfig c;
  c.command = get<std::string>(j, "command", "");
  if (!c.command.empty())
    require(std::find(known_commands().begin(), known_commands().end(), c.command) != known_commands().end(),
            "unknown command '" + c.command + "'");
  c.mass = get<double>(j, "mass", c.mass);
  require(c.mass >= 0.0 && std::isfinite(c.mass), "'mass' must be finite and ≥ 0");

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    c.grid.n = get<int>(g, "n", c.grid.n);
    c.grid.length = get<double>(g, "L", c.grid.length);
  }
  require(c.grid.n >= 2 && c.grid.n % 2 == 0, "'grid.n' must be even and ≥ 2");
  require(c.grid.length > 0.0 && std::isfinite(c.grid.length), "'grid.L' must be positive");

  if (j.contains("spherical")) {
    const json& s = j.at("spherical");
    c.spherical.nr = get<int>(s, "nr", c.spherical.nr);
    c.spherical.ntheta = get<int>(s, "ntheta", c.spherical.ntheta);
    c.spherical.nphi = get<int>(s, "nphi", c.spherical.nphi);
    c.spherical.rmax = get<double>(s, "rmax", c.spherical.rmax);
    c.spherical.lmax = get<int>(s, "lmax", c.spherical.lmax);
    c.spherical.np = get<int>(s, "np", c.spherical.np);
  }
  const auto& s = c.spherical;
  require(s.nr > 0 && s.ntheta > 0 && s.np > 0 && s.lmax >= 1, "spherical grid sizes must be positive, lmax ≥ 1");
  require(s.nphi >= 2 && s.nphi % 2 == 0, "'spherical.nphi' must be even and ≥ 2");
  require(s.rmax > 0.0 && std::isfinite(s.rmax), "'spherical.rmax' must be positive");

  c.transform = get<std::string>(j, "transform", c.transform);
  require(c.transform == "fourier" || c.transform == "hankel", "'transform' must be fourier or hankel");

  if (j.contains("initial")) c.initial = parse_initial(j.at("initial"));

  if (j.contains("time")) {
    const json& t = j.at("time");
    c.time.steps = get<int>(t, "steps", c.time.steps);
    c.time.dt = get<double>(t, "dt", c.time.dt);
  }
  require(c.time.steps >= 0, "'time.steps' must be ≥ 0");
  require(std::isfinite(c.time.dt), "'time.dt' must be finite");

  if (j.contains("output")) {
    const json& o = j.at("output");
    c.output.directory = get<std::string>(o, "directory", c.output.directory);
    c.output.dump_fields = get<bool>(o, "dump_fields", c.output.dump_fields);
    if (o.contains("formats")) {
      const auto formats = get<std::vector<std::string>>(o, "formats", {});
      c.output.csv = c.output.bin = false;
      for (const auto& f : formats) {
        if (f == "csv")
          c.output.csv = true;
        else if (f == "bin")
          c.output.bin = true;
        else
          throw ConfigError("unknown output format '" + f + "'");
      }
    }
  }

  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    require(t.is_object(), "'tolerances' must map check ids to numbers");
    for (const auto& [id, value] : t.items()) {
      require(value.is_number(), "tolerance for '" + id + "' must be a number");
      c.tolerances[id] = value.get<double>();
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace majorana::cli
