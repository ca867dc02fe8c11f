#pragma once

#include "majorana/types.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace majorana::cli {

/// Raised for any malformed or inconsistent configuration (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CartesianSettings {
  int n = 16;
  double length = 10.0;
};

struct SphericalSettings {
  int nr = 256;
  int ntheta = 32;
  int nphi = 64;
  double rmax = 40.0;
  int lmax = 5;
  int np = 256;
};

struct InitialCondition {
  enum class Kind { gaussian, single_mode, zero };
  Kind kind = Kind::gaussian;
  // gaussian
  Vec3 center = Vec3::Zero();
  double width = 1.0;
  Spinor4 chi = Spinor4(1.0, 0.0, 0.0, 0.0);
  Vec3 momentum = Vec3::Zero();
  std::optional<std::pair<int, int>> omega;  // (l, μ) factor for spherical fields
  // single mode: Cartesian wavenumber indices or spherical (node, l, μ)
  std::array<int, 3> wavenumber{1, 0, 0};
  int node = 0;
  int l = 1;
  int mu = 0;
};

struct TimeSettings {
  int steps = 100;
  double dt = 0.05;
};

struct OutputSettings {
  std::string directory = "majorana-out";
  bool csv = true;
  bool bin = false;
  bool dump_fields = false;
};

struct RunConfig {
  std::string command;
  double mass = 1.0;
  CartesianSettings grid;
  SphericalSettings spherical;
  std::string transform = "fourier";  // fourier | hankel
  InitialCondition initial;
  TimeSettings time;
  OutputSettings output;
  std::map<std::string, double> tolerances;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names{"verify", "evolve", "transform", "spectrum"};
  return names;
}

/// Parses a JSON document. Missing keys keep their defaults.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace majorana::cli
