#include "majorana/spherical.hpp"

#include "majorana/clifford.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace majorana {

SphericalGrid SphericalGrid::make(int nr, double rmax, int ntheta, int nphi) {
  if (nr < 1 || ntheta < 1 || nphi < 2 || nphi % 2 != 0 || !(rmax > 0.0))
    throw std::invalid_argument("SphericalGrid: need nr, ntheta ≥ 1, even nphi ≥ 2, rmax > 0");
  SphericalGrid g;
  g.nr = nr;
  g.rmax = rmax;
  const double dr = rmax / nr;
  g.r.resize(nr);
  g.r_weight.resize(nr);
  for (int i = 0; i < nr; ++i) {
    g.r[i] = (i + 1) * dr;
    g.r_weight[i] = g.r[i] * g.r[i] * dr;
  }
  g.r_weight.back() *= 0.5;

  g.ntheta = ntheta;
  g.cos_theta = gauss_legendre(ntheta);
  g.theta.resize(ntheta);
  for (int i = 0; i < ntheta; ++i) g.theta[i] = std::acos(g.cos_theta.nodes[i]);

  g.nphi = nphi;
  g.phi.resize(nphi);
  const double h = 2.0 * std::numbers::pi / nphi;
  for (int k = 0; k < nphi; ++k) g.phi[k] = -std::numbers::pi + k * h;
  g.phi_weight = h;
  return g;
}

SphericalField SphericalField::zeros(const SphericalGrid& grid, double mass) {
  return {grid, mass, std::vector<Spinor4>(grid.size(), Spinor4::Zero())};
}

double SphericalField::norm_squared() const { return inner(*this); }

double SphericalField::inner(const SphericalField& other) const {
  double total = 0.0;
  for (int ir = 0; ir < grid.nr; ++ir) {
    double shell = 0.0;
    for (int it = 0; it < grid.ntheta; ++it) {
      double ring = 0.0;
      for (int ip = 0; ip < grid.nphi; ++ip) {
        const std::size_t i = grid.index(ir, it, ip);
        ring += values[i].dot(other.values[i]);
      }
      shell += ring * grid.angular_weight(it);
    }
    total += shell * grid.r_weight[ir];
  }
  return total;
}

std::vector<AngularMode> angular_modes(int lmax) {
  std::vector<AngularMode> out;
  for (int l = 1; l <= lmax; ++l)
    for (int mu = -l; mu <= l - 1; ++mu) out.push_back({l, mu});
  return out;
}

std::size_t mode_index(const AngularMode& mode) {
  return static_cast<std::size_t>(mode.l * (mode.l - 1) + mode.mu + mode.l);
}

Vec3 unit_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

const RealMatrix4& sigma(int k) {
  if (k < 1 || k > 3) throw std::out_of_range("sigma: k must be 1..3");
  return canonical_rep().basis[basis::sigma(k)];
}

RealMatrix4 sigma_r(double theta, double phi) {
  const Vec3 x = unit_vector(theta, phi);
  return x[0] * sigma(1) + x[1] * sigma(2) + x[2] * sigma(3);
}

RealMatrix4 gamma_r(double theta, double phi) {
  const Vec3 x = unit_vector(theta, phi);
  const auto& g = canonical_rep().gamma;
  return x[0] * g[1] + x[1] * g[2] + x[2] * g[3];
}

const RealMatrix4& spin_up_projector() {
  static const RealMatrix4 p = 0.5 * (RealMatrix4::Identity() + sigma(3));
  return p;
}

const RealMatrix4& spin_down_projector() {
  static const RealMatrix4 p = 0.5 * (RealMatrix4::Identity() - sigma(3));
  return p;
}

RealMatrix4 majorana_Y(int l, int m, double theta, double phi) {
  if (l < 0) throw std::out_of_range("majorana_Y: l must be non-negative");
  if (std::abs(m) > l) return RealMatrix4::Zero();
  return harmonic_norm(l, m) * assoc_legendre(l, m, std::cos(theta)) * rotor(m * phi);
}

RealMatrix4 omega_matrix(const AngularMode& mode, double theta, double phi) {
  if (!mode.valid()) throw std::out_of_range("omega_matrix: need l ≥ 1 and -l ≤ μ ≤ l-1");
  const int l = mode.l;
  const int mu = mode.mu;
  const RealMatrix4& s1 = sigma(1);
  const double up_a = -std::sqrt((l - mu) / (2.0 * l + 1.0));
  const double up_b = std::sqrt((l + mu + 1) / (2.0 * l + 1.0));
  const double down_a = std::sqrt((l + mu) / (2.0 * l - 1.0));
  const double down_b = std::sqrt(std::max(0, l - mu - 1) / (2.0 * l - 1.0));
  const RealMatrix4 up =
      up_a * majorana_Y(l, mu, theta, phi) + up_b * majorana_Y(l, mu + 1, theta, phi) * s1;
  const RealMatrix4 down = down_a * majorana_Y(l - 1, mu, theta, phi) * s1 +
                           down_b * majorana_Y(l - 1, mu + 1, theta, phi);
  return up * spin_up_projector() + down * spin_down_projector();
}

AngularDifferentiator::AngularDifferentiator(const SphericalGrid& grid, int band)
    : ntheta_(grid.ntheta), nphi_(grid.nphi), theta_(grid.theta), phi_(grid.phi) {
  dxi_ = legendre_differentiation_matrix(grid.cos_theta, band);

  const int n = nphi_;
  Eigen::MatrixXd d(n, n);
  d.setZero();
  // Derivative of the trigonometric interpolant with the Nyquist term dropped.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double sum = 0.0;
      for (int m = 1; m < n / 2; ++m) sum -= m * std::sin(m * (phi_[j] - phi_[k]));
      d(j, k) = 2.0 * sum / n;
    }
  dphi_ = d;
}

Eigen::MatrixXd AngularDifferentiator::d_phi(const Eigen::MatrixXd& f) const {
  Eigen::MatrixXd out(f.rows(), f.cols());
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    const Eigen::Map<const Eigen::MatrixXd> grid(f.col(c).data(), nphi_, ntheta_);
    Eigen::Map<Eigen::MatrixXd> dst(out.col(c).data(), nphi_, ntheta_);
    dst.noalias() = dphi_ * grid;
  }
  return out;
}

Eigen::MatrixXd AngularDifferentiator::d_theta(const Eigen::MatrixXd& f) const {
  const int n = nphi_;
  const int half = n / 2;
  Eigen::MatrixXd out(f.rows(), f.cols());
  Eigen::VectorXd sin_t(ntheta_);
  Eigen::VectorXd cos_t(ntheta_);
  for (int it = 0; it < ntheta_; ++it) {
    sin_t[it] = std::sin(theta_[it]);
    cos_t[it] = std::cos(theta_[it]);
  }

  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    // Row ip, column it.
    const Eigen::Map<const Eigen::MatrixXd> grid(f.col(c).data(), n, ntheta_);
    Eigen::Map<Eigen::MatrixXd> dst(out.col(c).data(), n, ntheta_);
    dst.setZero();
    for (int m = 0; m <= half; ++m) {
      for (int part = 0; part < 2; ++part) {
        if (part == 1 && (m == 0 || m == half)) continue;
        Eigen::VectorXd basis_fn(n);
        for (int ip = 0; ip < n; ++ip)
          basis_fn[ip] = part == 0 ? std::cos(m * phi_[ip]) : std::sin(m * phi_[ip]);
        const double scale = (m == 0 || m == half) ? 1.0 / n : 2.0 / n;
        const Eigen::VectorXd a = scale * (grid.transpose() * basis_fn);
        Eigen::VectorXd da(ntheta_);
        if (m % 2 == 0) {
          da = -sin_t.cwiseProduct(dxi_ * a);
        } else {
          const Eigen::VectorXd q = a.cwiseQuotient(sin_t);
          da = cos_t.cwiseProduct(q) - sin_t.cwiseProduct(sin_t).cwiseProduct(dxi_ * q);
        }
        dst.noalias() += basis_fn * da.transpose();
      }
    }
  }
  return out;
}

Eigen::MatrixXd AngularDifferentiator::cross_grad(const Eigen::MatrixXd& f, int k) const {
  if (k < 1 || k > 3) throw std::out_of_range("cross_grad: k must be 1..3");
  const Eigen::MatrixXd fp = d_phi(f);
  if (k == 3) return fp;
  const Eigen::MatrixXd ft = d_theta(f);
  Eigen::MatrixXd out(f.rows(), f.cols());
  for (int it = 0; it < ntheta_; ++it) {
    const double cot = std::cos(theta_[it]) / std::sin(theta_[it]);
    for (int ip = 0; ip < nphi_; ++ip) {
      const auto row = static_cast<Eigen::Index>(it) * nphi_ + ip;
      const double s = std::sin(phi_[ip]);
      const double co = std::cos(phi_[ip]);
      if (k == 1)
        out.row(row) = -s * ft.row(row) - cot * co * fp.row(row);
      else
        out.row(row) = co * ft.row(row) - cot * s * fp.row(row);
    }
  }
  return out;
}

namespace {

template <class V>
std::vector<V> apply_L(const AngularDifferentiator& d, const std::vector<V>& f, int k) {
  constexpr int kSize = V::SizeAtCompileTime;
  const auto n = static_cast<Eigen::Index>(f.size());
  Eigen::MatrixXd packed(n, kSize);
  for (Eigen::Index a = 0; a < n; ++a)
    packed.row(a) = Eigen::Map<const Eigen::Matrix<double, 1, kSize>>(f[a].data());
  const Eigen::MatrixXd g = d.cross_grad(packed, k);
  const RealMatrix4& g0 = canonical_rep().gamma[0];
  std::vector<V> out(f.size());
  for (Eigen::Index a = 0; a < n; ++a) {
    V v;
    Eigen::Map<Eigen::Matrix<double, 1, kSize>>(v.data()) = g.row(a);
    out[a] = -(g0 * v);
  }
  return out;
}

}  // namespace

std::vector<RealMatrix4> angular_momentum(const AngularDifferentiator& d,
                                          const std::vector<RealMatrix4>& f, int k) {
  return apply_L(d, f, k);
}

std::vector<Spinor4> angular_momentum(const AngularDifferentiator& d,
                                      const std::vector<Spinor4>& f, int k) {
  return apply_L(d, f, k);
}

SphericalField angular_momentum(const AngularDifferentiator& d, const SphericalField& field,
                                int k) {
  SphericalField out = field;
  const std::size_t na = field.grid.angular_size();
  for (int ir = 0; ir < field.grid.nr; ++ir) {
    const auto begin = field.values.begin() + static_cast<std::ptrdiff_t>(ir * na);
    const std::vector<Spinor4> shell(begin, begin + static_cast<std::ptrdiff_t>(na));
    const auto applied = angular_momentum(d, shell, k);
    std::copy(applied.begin(), applied.end(),
              out.values.begin() + static_cast<std::ptrdiff_t>(ir * na));
  }
  return out;
}

std::vector<RealMatrix4> sigma_dot_L(const AngularDifferentiator& d,
                                     const std::vector<RealMatrix4>& f) {
  std::vector<RealMatrix4> out(f.size(), RealMatrix4::Zero());
  for (int k = 1; k <= 3; ++k) {
    const auto lk = angular_momentum(d, f, k);
    for (std::size_t a = 0; a < f.size(); ++a) out[a] += sigma(k) * lk[a];
  }
  return out;
}

RealMatrix4 angular_inner(const SphericalGrid& grid, const std::vector<RealMatrix4>& a,
                          const std::vector<RealMatrix4>& b) {
  RealMatrix4 total = RealMatrix4::Zero();
  for (int it = 0; it < grid.ntheta; ++it) {
    RealMatrix4 ring = RealMatrix4::Zero();
    for (int ip = 0; ip < grid.nphi; ++ip) {
      const std::size_t i = grid.angular_index(it, ip);
      ring += a[i].transpose() * b[i];
    }
    total += grid.angular_weight(it) * ring;
  }
  return total;
}

}  // namespace majorana
