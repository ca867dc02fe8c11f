#include "commands.hpp"

#include "verify.hpp"

#include "majorana/clifford.hpp"
#include "majorana/diagnostics.hpp"
#include "majorana/field_io.hpp"
#include "majorana/fourier.hpp"
#include "majorana/hankel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

namespace majorana::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

fs::path prepare_directory(const RunConfig& config) {
  const fs::path dir(config.output.directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path.string());
}

std::string finish(const fs::path& dir, const std::string& name, const ordered_json& summary) {
  const std::string text = summary.dump(2) + "\n";
  write_text(dir / name, text);
  return text;
}

template <class Field>
void write_field_outputs(const RunConfig& config, const fs::path& dir, const std::string& stem, const Field& f) {
  if (config.output.csv) write_csv_file((dir / (stem + ".csv")).string(), f);
  if (config.output.bin) write_field_file((dir / (stem + ".bin")).string(), f);
}

CartesianGrid cartesian_grid(const RunConfig& config) { return CartesianGrid::make(config.grid.n, config.grid.length); }

std::size_t wavenumber_index(const RunConfig& config) {
  const int n = config.grid.n;
  std::array<int, 3> q{};
  for (int k = 0; k < 3; ++k) {
    q[k] = config.initial.wavenumber[k] + n / 2;
    if (q[k] < 0 || q[k] >= n) throw ConfigError("'initial.p' wavenumbers must lie in [-n/2, n/2)");
  }
  return cartesian_grid(config).index(q[0], q[1], q[2]);
}

// Gaussian packets are built in momentum space: ψ(p) = (√(2π)σ)³ e^{-|p-k|²σ²/2} rotor(-p·c) χ.
MomentumSpectrum initial_spectrum(const RunConfig& config) {
  const CartesianGrid g = cartesian_grid(config);
  MomentumSpectrum s = MomentumSpectrum::zeros(g, config.mass);
  const auto& ic = config.initial;
  switch (ic.kind) {
    case InitialCondition::Kind::zero:
      break;
    case InitialCondition::Kind::single_mode: {
      const std::size_t q = wavenumber_index(config);
      if (s.degenerate[q]) throw ConfigError("single mode sits on a degenerate momentum (m = 0, p = 0)");
      s.values[q] = ic.chi * g.box_volume();
      break;
    }
    case InitialCondition::Kind::gaussian: {
      const double sigma = ic.width;
      const double scale = std::pow(std::sqrt(2 * std::numbers::pi) * sigma, 3);
      for (std::size_t q = 0; q < g.size(); ++q) {
        if (s.degenerate[q]) continue;
        const Vec3 p = g.momentum(q);
        s.values[q] = scale * std::exp(-(p - ic.momentum).squaredNorm() * sigma * sigma / 2) *
                      apply_rotor(-p.dot(ic.center), ic.chi);
      }
      break;
    }
  }
  return s;
}

SphericalGrid spherical_grid(const RunConfig& config) {
  const auto& s = config.spherical;
  return SphericalGrid::make(s.nr, s.rmax, s.ntheta, s.nphi);
}

HankelTransform hankel_transform(const RunConfig& config) {
  const SphericalGrid grid = spherical_grid(config);
  return HankelTransform(grid, MomentumNodes::for_grid(grid, config.spherical.np), config.spherical.lmax,
                         config.mass);
}

AngularMode checked_mode(int l, int mu, int lmax) {
  const AngularMode mode{l, mu};
  if (!mode.valid() || l > lmax) throw ConfigError("angular mode (l, mu) must satisfy 1 ≤ l ≤ lmax, -l ≤ mu < l");
  return mode;
}

// Spherical Gaussians are sampled in position space: g(x-c)·rotor(k·(x-c))·[Ω_lμ]·χ.
SphericalField initial_spherical(const RunConfig& config, const HankelTransform& tr) {
  const SphericalGrid& grid = tr.grid();
  SphericalField f = SphericalField::zeros(grid, config.mass);
  const auto& ic = config.initial;
  if (ic.kind == InitialCondition::Kind::zero) return f;
  std::optional<AngularMode> omega;
  if (ic.kind == InitialCondition::Kind::single_mode) {
    omega = checked_mode(ic.l, ic.mu, config.spherical.lmax);
    if (ic.node < 0 || ic.node >= static_cast<int>(tr.nodes().p.size()))
      throw ConfigError("'initial.p' node index out of range");
  } else if (ic.omega) {
    omega = checked_mode(ic.omega->first, ic.omega->second, config.spherical.lmax);
  }
  const HankelSpectrum unit = HankelSpectrum::zeros(tr.nodes(), config.spherical.lmax, config.mass);
  for (int ir = 0; ir < grid.nr; ++ir)
    for (int it = 0; it < grid.ntheta; ++it)
      for (int ip = 0; ip < grid.nphi; ++ip) {
        const double r = grid.r[ir];
        const double t = grid.theta[it];
        const double ph = grid.phi[ip];
        Spinor4& v = f.values[grid.index(ir, it, ip)];
        if (ic.kind == InitialCondition::Kind::single_mode) {
          const std::size_t k = static_cast<std::size_t>(ic.node);
          v = hankel_kernel(tr.nodes().p[k], *omega, r, t, ph, config.mass) * ic.chi * unit.weight(k);
        } else {
          const Vec3 d = r * unit_vector(t, ph) - ic.center;
          const double g = std::exp(-d.squaredNorm() / (2 * ic.width * ic.width));
          const Spinor4 chi = omega ? Spinor4(omega_matrix(*omega, t, ph) * ic.chi) : ic.chi;
          v = g * apply_rotor(ic.momentum.dot(d), chi);
        }
      }
  return f;
}

struct Sparsity {
  std::size_t significant = 0;
  std::size_t dominant = 0;
  double dominant_norm = 0.0;
  double runner_up_norm = 0.0;
};

Sparsity sparsity(const std::vector<Spinor4>& values) {
  Sparsity s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i].norm();
    if (v > s.dominant_norm) {
      s.runner_up_norm = s.dominant_norm;
      s.dominant_norm = v;
      s.dominant = i;
    } else if (v > s.runner_up_norm) {
      s.runner_up_norm = v;
    }
  }
  for (const auto& v : values)
    if (v.norm() > 1e-8 * s.dominant_norm) ++s.significant;
  return s;
}

ordered_json sparsity_json(const Sparsity& s) {
  ordered_json j;
  j["entries_above_1e-8_of_max"] = s.significant;
  j["dominant_index"] = s.dominant;
  j["dominant_norm"] = s.dominant_norm;
  j["runner_up_ratio"] = s.dominant_norm > 0.0 ? s.runner_up_norm / s.dominant_norm : 0.0;
  return j;
}

template <class Field>
ordered_json error_norms(const Field& input, const Field& output) {
  Field diff = output;
  double max_err = 0.0;
  for (std::size_t i = 0; i < diff.values.size(); ++i) {
    diff.values[i] -= input.values[i];
    max_err = std::max(max_err, diff.values[i].cwiseAbs().maxCoeff());
  }
  const double in = input.norm_squared();
  ordered_json j;
  j["max_abs_error"] = max_err;
  j["l2_error"] = std::sqrt(diff.norm_squared());
  j["relative_l2_error"] = in > 0.0 ? std::sqrt(diff.norm_squared() / in) : 0.0;
  return j;
}

Vec3 mean_momentum(const MomentumSpectrum& s) {
  Vec3 sum = Vec3::Zero();
  double weight = 0.0;
  for (std::size_t q = 0; q < s.values.size(); ++q) {
    const double w = s.values[q].squaredNorm();
    sum += w * s.grid.spectral_momentum(q);
    weight += w;
  }
  return weight > 0.0 ? Vec3(sum / weight) : Vec3::Zero();
}

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v[0], v[1], v[2]}); }

std::string hankel_tail_warning(double tail) {
  return tail > 1e-8 ? "field carries a fraction " + std::to_string(tail) +
                           " of its norm in the outer tenth of the radial range; the transform is truncated"
                     : "";
}

}  // namespace

CommandResult run_verify_command(const RunConfig& config) {
  const VerifyReport report = run_verify(config);
  const fs::path dir = prepare_directory(config);
  const std::string text = report.to_json();
  write_text(dir / "verify_report.json", text);
  return {report.pass ? 0 : 1, text};
}

CommandResult run_evolve(const RunConfig& config) {
  if (config.transform != "fourier") throw ConfigError("evolve runs on the Cartesian grid; set transform to fourier");
  const fs::path dir = prepare_directory(config);
  const MomentumSpectrum initial = initial_spectrum(config);
  const double energy_mean = initial.mean_energy();
  const Vec3 p_mean = mean_momentum(initial);
  const double norm0 = initial.norm_squared();

  std::ofstream frames(dir / "frames.csv", std::ios::binary);
  if (!frames) throw std::runtime_error("cannot write frames.csv");
  frames << "step,time,norm,energy,cx,cy,cz\n";

  Vec3 origin = config.initial.center;
  std::vector<double> times;
  std::vector<Vec3> centers;
  double drift = 0.0;
  double energy_drift = 0.0;
  MomentumSpectrum s = initial;
  for (int step = 0; step <= config.time.steps; ++step) {
    const double t = step * config.time.dt;
    if (step > 0) s = evolve(s, config.time.dt);
    const CartesianField field = inverse(s);
    const double norm = field.norm_squared();
    const double en = s.mean_energy();
    origin = centroid(field, origin);
    times.push_back(t);
    centers.push_back(origin);
    if (norm0 > 0.0) {
      drift = std::max(drift, std::abs(norm - norm0) / norm0);
      energy_drift = std::max(energy_drift, std::abs(en - energy_mean) / energy_mean);
    }
    char line[256];
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", step, t, norm, en, origin[0],
                  origin[1], origin[2]);
    frames << line;
    if (config.output.dump_fields) {
      char stem[32];
      std::snprintf(stem, sizeof stem, "field_%05d", step);
      write_field_outputs(config, dir, stem, field);
    }
  }
  if (!frames) throw std::runtime_error("cannot write frames.csv");

  // Least-squares slope of the centroid track.
  Vec3 velocity = Vec3::Zero();
  if (times.size() > 1) {
    double tm = 0.0;
    Vec3 cm = Vec3::Zero();
    for (std::size_t i = 0; i < times.size(); ++i) {
      tm += times[i];
      cm += centers[i];
    }
    tm /= times.size();
    cm /= static_cast<double>(times.size());
    double stt = 0.0;
    Vec3 stc = Vec3::Zero();
    for (std::size_t i = 0; i < times.size(); ++i) {
      stt += (times[i] - tm) * (times[i] - tm);
      stc += (times[i] - tm) * (centers[i] - cm);
    }
    if (stt > 0.0) velocity = stc / stt;
  }
  const Vec3 expected = energy_mean > 0.0 ? Vec3(p_mean / energy_mean) : Vec3::Zero();

  ordered_json j;
  j["command"] = "evolve";
  j["mass"] = config.mass;
  j["steps"] = config.time.steps;
  j["dt"] = config.time.dt;
  j["initial_norm"] = norm0;
  j["max_relative_norm_drift"] = drift;
  j["max_relative_energy_drift"] = energy_drift;
  j["mean_energy"] = energy_mean;
  j["mean_momentum"] = vec_json(p_mean);
  j["centroid_velocity"] = vec_json(velocity);
  j["group_velocity"] = vec_json(expected);
  // Relative error, or the absolute one for a packet at rest.
  j["velocity_error"] =
      expected.norm() > 1e-12 ? (velocity - expected).norm() / expected.norm() : velocity.norm();
  j["degenerate_modes"] = initial.degenerate_count();
  if (initial.degenerate_count() > 0)
    j["warning"] = "massless modes with zero spectral momentum are degenerate and held at zero";
  if (config.output.dump_fields) j["field_dumps"] = config.time.steps + 1;
  return {0, finish(dir, "evolve_summary.json", j)};
}

CommandResult run_transform(const RunConfig& config) {
  const fs::path dir = prepare_directory(config);
  ordered_json j;
  j["command"] = "transform";
  j["transform"] = config.transform;
  j["mass"] = config.mass;
  if (config.transform == "fourier") {
    const CartesianField input = inverse(initial_spectrum(config));
    const MomentumSpectrum spec = forward(input);
    const CartesianField output = inverse(spec);
    write_field_outputs(config, dir, "input", input);
    write_csv_file((dir / "spectrum.csv").string(), spec);
    write_field_outputs(config, dir, "reconstruction", output);
    j["round_trip"] = error_norms(input, output);
    j["parseval_relative_error"] =
        input.norm_squared() > 0.0 ? std::abs(spec.norm_squared() - input.norm_squared()) / input.norm_squared() : 0.0;
    j["sparsity"] = sparsity_json(sparsity(spec.values));
    j["degenerate_modes"] = spec.degenerate_count();
  } else {
    const HankelTransform tr = hankel_transform(config);
    const SphericalField input = initial_spherical(config, tr);
    const HankelSpectrum spec = tr.forward(input);
    const SphericalField output = tr.inverse(spec);
    write_field_outputs(config, dir, "input", input);
    write_csv_file((dir / "spectrum.csv").string(), spec);
    write_field_outputs(config, dir, "reconstruction", output);
    j["round_trip"] = error_norms(input, output);
    j["sparsity"] = sparsity_json(sparsity(spec.values));
    j["tail_fraction"] = spec.tail_fraction;
    if (const auto w = hankel_tail_warning(spec.tail_fraction); !w.empty()) j["warning"] = w;
  }
  return {0, finish(dir, "transform_summary.json", j)};
}

CommandResult run_spectrum(const RunConfig& config) {
  const fs::path dir = prepare_directory(config);
  ordered_json j;
  j["command"] = "spectrum";
  j["transform"] = config.transform;
  j["mass"] = config.mass;
  if (config.transform == "fourier") {
    const MomentumSpectrum spec = forward(inverse(initial_spectrum(config)));
    write_csv_file((dir / "spectrum.csv").string(), spec);
    j["norm_squared"] = spec.norm_squared();
    j["mean_energy"] = spec.mean_energy();
    j["mean_momentum"] = vec_json(mean_momentum(spec));
    j["sparsity"] = sparsity_json(sparsity(spec.values));
    j["degenerate_modes"] = spec.degenerate_count();
  } else {
    const HankelTransform tr = hankel_transform(config);
    const HankelSpectrum spec = tr.forward(initial_spherical(config, tr));
    write_csv_file((dir / "spectrum.csv").string(), spec);
    j["norm_squared"] = spec.norm_squared();
    j["sparsity"] = sparsity_json(sparsity(spec.values));
    j["tail_fraction"] = spec.tail_fraction;
    if (const auto w = hankel_tail_warning(spec.tail_fraction); !w.empty()) j["warning"] = w;
  }
  return {0, finish(dir, "spectrum_summary.json", j)};
}

CommandResult run_command(const RunConfig& config) {
  if (config.command == "verify") return run_verify_command(config);
  if (config.command == "evolve") return run_evolve(config);
  if (config.command == "transform") return run_transform(config);
  if (config.command == "spectrum") return run_spectrum(config);
  throw ConfigError("unknown command '" + config.command + "'");
}

}  // namespace majorana::cli
