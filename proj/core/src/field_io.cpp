#include "majorana/field_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace majorana {

namespace {

constexpr std::uint32_t kVersion = 1;

template <class U>
void put_le(std::ostream& out, U v) {
  std::array<char, sizeof(U)> bytes;
  for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <class U>
U get_le(std::istream& in) {
  std::array<unsigned char, sizeof(U)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw std::runtime_error("field file truncated");
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(bytes[i]) << (8 * i);
  return v;
}

void put_u32(std::ostream& out, std::uint32_t v) { put_le(out, v); }
void put_f64(std::ostream& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }
std::uint32_t get_u32(std::istream& in) { return get_le<std::uint32_t>(in); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_le<std::uint64_t>(in)); }

void put_magic(std::ostream& out, const char* magic) { out.write(magic, 4); }

void expect_magic(std::istream& in, const char* magic) {
  char got[4];
  if (!in.read(got, 4) || std::memcmp(got, magic, 4) != 0)
    throw std::runtime_error(std::string("bad magic, expected ") + magic);
  if (get_u32(in) != kVersion) throw std::runtime_error("unsupported field format version");
}

void put_spinors(std::ostream& out, const std::vector<Spinor4>& values) {
  for (const auto& v : values)
    for (int c = 0; c < 4; ++c) put_f64(out, v[c]);
}

void get_spinors(std::istream& in, std::vector<Spinor4>& values) {
  for (auto& v : values)
    for (int c = 0; c < 4; ++c) v[c] = get_f64(in);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void put_row(std::ostream& out, std::initializer_list<std::string> head, const Spinor4& v) {
  bool first = true;
  for (const auto& h : head) {
    if (!first) out << ',';
    out << h;
    first = false;
  }
  for (int c = 0; c < 4; ++c) out << ',' << num(v[c]);
  out << '\n';
}

void check(std::ostream& out) {
  if (!out) throw std::runtime_error("write failed");
}

}  // namespace

void write_field(std::ostream& out, const CartesianField& field) {
  put_magic(out, "MAJ1");
  put_u32(out, kVersion);
  put_u32(out, 3);
  for (int a = 0; a < 3; ++a) put_u32(out, static_cast<std::uint32_t>(field.grid.n));
  for (int a = 0; a < 3; ++a) put_f64(out, field.grid.length);
  put_f64(out, field.mass);
  put_spinors(out, field.values);
  check(out);
}

void write_field(std::ostream& out, const SpacetimeField& field) {
  put_magic(out, "MAJ1");
  put_u32(out, kVersion);
  put_u32(out, 4);
  put_u32(out, static_cast<std::uint32_t>(field.nt));
  for (int a = 0; a < 3; ++a) put_u32(out, static_cast<std::uint32_t>(field.grid.n));
  put_f64(out, field.period);
  for (int a = 0; a < 3; ++a) put_f64(out, field.grid.length);
  put_f64(out, field.mass);
  put_spinors(out, field.values);
  check(out);
}

void write_field(std::ostream& out, const SphericalField& field) {
  const SphericalGrid& g = field.grid;
  put_magic(out, "MAJS");
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(g.nr));
  put_u32(out, static_cast<std::uint32_t>(g.ntheta));
  put_u32(out, static_cast<std::uint32_t>(g.nphi));
  put_f64(out, g.rmax);
  put_f64(out, field.mass);
  for (double r : g.r) put_f64(out, r);
  for (double x : g.cos_theta.nodes) put_f64(out, x);
  for (double p : g.phi) put_f64(out, p);
  put_spinors(out, field.values);
  check(out);
}

namespace {

struct Header {
  std::uint32_t rank;
  std::vector<std::uint32_t> dims;
  std::vector<double> lengths;
  double mass;
};

Header read_maj1_header(std::istream& in) {
  expect_magic(in, "MAJ1");
  Header h;
  h.rank = get_u32(in);
  if (h.rank != 3 && h.rank != 4) throw std::runtime_error("MAJ1: rank must be 3 or 4");
  for (std::uint32_t a = 0; a < h.rank; ++a) h.dims.push_back(get_u32(in));
  for (std::uint32_t a = 0; a < h.rank; ++a) h.lengths.push_back(get_f64(in));
  h.mass = get_f64(in);
  const std::size_t s = h.rank - 3;
  if (h.dims[s] != h.dims[s + 1] || h.dims[s] != h.dims[s + 2] || h.lengths[s] != h.lengths[s + 1] ||
      h.lengths[s] != h.lengths[s + 2])
    throw std::runtime_error("MAJ1: only cubic spatial grids are supported");
  return h;
}

}  // namespace

CartesianField read_cartesian_field(std::istream& in) {
  const Header h = read_maj1_header(in);
  if (h.rank != 3) throw std::runtime_error("MAJ1: expected a rank-3 field");
  CartesianField f = CartesianField::zeros(
      CartesianGrid::make(static_cast<int>(h.dims[0]), h.lengths[0]), h.mass);
  get_spinors(in, f.values);
  return f;
}

SpacetimeField read_spacetime_field(std::istream& in) {
  const Header h = read_maj1_header(in);
  if (h.rank != 4) throw std::runtime_error("MAJ1: expected a rank-4 field");
  SpacetimeField f =
      SpacetimeField::zeros(CartesianGrid::make(static_cast<int>(h.dims[1]), h.lengths[1]),
                            static_cast<int>(h.dims[0]), h.lengths[0], h.mass);
  get_spinors(in, f.values);
  return f;
}

SphericalField read_spherical_field(std::istream& in) {
  expect_magic(in, "MAJS");
  const auto nr = static_cast<int>(get_u32(in));
  const auto ntheta = static_cast<int>(get_u32(in));
  const auto nphi = static_cast<int>(get_u32(in));
  const double rmax = get_f64(in);
  const double mass = get_f64(in);
  SphericalField f = SphericalField::zeros(SphericalGrid::make(nr, rmax, ntheta, nphi), mass);
  // Node arrays are implied by the header; they are read and checked.
  auto expect_nodes = [&](const std::vector<double>& nodes) {
    for (double x : nodes)
      if (std::abs(get_f64(in) - x) > 1e-12 * std::max(1.0, std::abs(x)))
        throw std::runtime_error("MAJS: node arrays do not match the header");
  };
  expect_nodes(f.grid.r);
  expect_nodes(f.grid.cos_theta.nodes);
  expect_nodes(f.grid.phi);
  get_spinors(in, f.values);
  return f;
}

void write_csv(std::ostream& out, const CartesianField& field) {
  out << "x1,x2,x3,psi0,psi1,psi2,psi3\n";
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const Vec3 x = field.grid.position(i);
    put_row(out, {num(x[0]), num(x[1]), num(x[2])}, field.values[i]);
  }
  check(out);
}

void write_csv(std::ostream& out, const SpacetimeField& field) {
  out << "x0,x1,x2,x3,psi0,psi1,psi2,psi3\n";
  const std::size_t ns = field.grid.size();
  for (int j = 0; j < field.nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) {
      const Vec3 x = field.grid.position(i);
      put_row(out, {num(field.time(j)), num(x[0]), num(x[1]), num(x[2])},
              field.values[j * ns + i]);
    }
  check(out);
}

void write_csv(std::ostream& out, const MomentumSpectrum& spec) {
  out << "p1,p2,p3,degenerate,psi0,psi1,psi2,psi3\n";
  for (std::size_t q = 0; q < spec.values.size(); ++q) {
    const Vec3 p = spec.grid.momentum(q);
    put_row(out, {num(p[0]), num(p[1]), num(p[2]), spec.degenerate[q] ? "1" : "0"},
            spec.values[q]);
  }
  check(out);
}

void write_csv(std::ostream& out, const SphericalField& field) {
  out << "r,theta,phi,psi0,psi1,psi2,psi3\n";
  const SphericalGrid& g = field.grid;
  for (int ir = 0; ir < g.nr; ++ir)
    for (int it = 0; it < g.ntheta; ++it)
      for (int ip = 0; ip < g.nphi; ++ip)
        put_row(out, {num(g.r[ir]), num(g.theta[it]), num(g.phi[ip])},
                field.values[g.index(ir, it, ip)]);
  check(out);
}

void write_csv(std::ostream& out, const HankelSpectrum& spec) {
  out << "p,l,mu,psi0,psi1,psi2,psi3\n";
  const auto modes = angular_modes(spec.lmax);
  for (std::size_t k = 0; k < spec.nodes.p.size(); ++k)
    for (const auto& mode : modes)
      put_row(out, {num(spec.nodes.p[k]), std::to_string(mode.l), std::to_string(mode.mu)},
              spec.values[spec.index(k, mode)]);
  check(out);
}

template <class T>
void write_csv_file(const std::string& path, const T& value) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_csv(out, value);
}

template <class T>
void write_field_file(const std::string& path, const T& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_field(out, value);
}

template void write_csv_file(const std::string&, const CartesianField&);
template void write_csv_file(const std::string&, const SpacetimeField&);
template void write_csv_file(const std::string&, const MomentumSpectrum&);
template void write_csv_file(const std::string&, const SphericalField&);
template void write_csv_file(const std::string&, const HankelSpectrum&);
template void write_field_file(const std::string&, const CartesianField&);
template void write_field_file(const std::string&, const SpacetimeField&);
template void write_field_file(const std::string&, const SphericalField&);

}  // namespace majorana
