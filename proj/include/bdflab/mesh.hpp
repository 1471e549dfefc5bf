// Radial meshes shared by all modules: log-spaced nodes, volume-exact
// quadrature weights and Fornberg finite-difference stencils.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace bdflab {

namespace detail {

// Fornberg weights for the d-th derivative at point z from nodes x.
inline std::vector<double> fd_weights(double z, const std::vector<double>& x,
                                      int d) {
  const int n = (int)x.size() - 1;
  std::vector<std::vector<double>> c((size_t)n + 1,
                                     std::vector<double>((size_t)d + 1, 0.0));
  double c1 = 1.0, c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    int mn = std::min(i, d);
    double c2 = 1.0, c5 = c4;
    c4 = x[(size_t)i] - z;
    for (int j = 0; j < i; ++j) {
      double c3 = x[(size_t)i] - x[(size_t)j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[(size_t)i][(size_t)k] =
              c1 * (k * c[(size_t)(i - 1)][(size_t)(k - 1)] -
                    c5 * c[(size_t)(i - 1)][(size_t)k]) /
              c2;
        c[(size_t)i][0] = -c1 * c5 * c[(size_t)(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[(size_t)j][(size_t)k] =
            (c4 * c[(size_t)j][(size_t)k] - k * c[(size_t)j][(size_t)(k - 1)]) /
            c3;
      c[(size_t)j][0] = c4 * c[(size_t)j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w((size_t)n + 1);
  for (int i = 0; i <= n; ++i) w[(size_t)i] = c[(size_t)i][(size_t)d];
  return w;
}

}  // namespace detail

// Radial mesh on [r_min, r_max] (units 1/(m_e c)). Quadrature weights are
// built by integrating the piecewise-cubic interpolant against r^2 dr, so
// polynomials of degree <= 3 are integrated exactly over [r_1, r_N].
class RadialMesh {
 public:
  RadialMesh(double r_min = 1e-4, double r_max = 40.0, int n = 600) {
    if (!(r_min > 0 && r_max > r_min) || n < 8)
      throw std::invalid_argument("RadialMesh: bad parameters");
    r_.resize((size_t)n);
    const double lr0 = std::log(r_min), lr1 = std::log(r_max);
    for (int i = 0; i < n; ++i)
      r_[(size_t)i] = std::exp(lr0 + (lr1 - lr0) * i / (n - 1.0));
    r_.front() = r_min;
    r_.back() = r_max;
    build_weights();
    build_stencils();
  }

  int size() const { return (int)r_.size(); }
  const std::vector<double>& r() const { return r_; }
  // dr-weights: integral f(r) r^2 dr ~= sum w[i] r[i]^2 f(r[i])
  const std::vector<double>& w() const { return w_; }
  // volume weights W[i] = w[i] r[i]^2
  const std::vector<double>& wvol() const { return wvol_; }

  double integrate_r2(const std::vector<double>& f) const {
    double s = 0;
    for (size_t i = 0; i < f.size(); ++i) s += wvol_[i] * f[i];
    return s;
  }

  // First derivative by 5-point Fornberg stencils (4th order inside,
  // one-sided at the boundaries).
  template <class Scalar>
  std::vector<Scalar> derivative(const std::vector<Scalar>& f) const {
    const int n = size();
    std::vector<Scalar> d((size_t)n, Scalar(0));
    for (int i = 0; i < n; ++i) {
      const auto& st = stencil_[(size_t)i];
      Scalar acc(0);
      for (size_t k = 0; k < st.idx.size(); ++k)
        acc += st.wd1[k] * f[(size_t)st.idx[k]];
      d[(size_t)i] = acc;
    }
    return d;
  }

  bool operator==(const RadialMesh& o) const { return r_ == o.r_; }

 private:
  struct Stencil {
    std::vector<int> idx;
    std::vector<double> wd1;
  };

  void build_weights() {
    const int n = size();
    wvol_.assign((size_t)n, 0.0);
    // Integrate the cubic Lagrange interpolant on the 4-node stencil
    // around each interval against r^2 dr; the monomial moments are exact.
    for (int iv = 0; iv + 1 < n; ++iv) {
      int s = std::min(std::max(iv - 1, 0), n - 4);
      double a = r_[(size_t)iv], b = r_[(size_t)(iv + 1)];
      Eigen::Matrix4d V;
      for (int c = 0; c < 4; ++c)
        for (int k = 0; k < 4; ++k)
          V(c, k) = std::pow(r_[(size_t)(s + k)], c);
      Eigen::Vector4d mom;  // integral of r^(c+2) over [a,b]
      for (int c = 0; c < 4; ++c)
        mom(c) =
            (std::pow(b, c + 3) - std::pow(a, c + 3)) / (double)(c + 3);
      Eigen::Vector4d wk = V.partialPivLu().solve(mom);
      for (int k = 0; k < 4; ++k) wvol_[(size_t)(s + k)] += wk(k);
    }
    w_.resize((size_t)n);
    for (int i = 0; i < n; ++i)
      w_[(size_t)i] = wvol_[(size_t)i] / (r_[(size_t)i] * r_[(size_t)i]);
  }

  void build_stencils() {
    const int n = size();
    stencil_.resize((size_t)n);
    if (n < 5) throw std::invalid_argument("RadialMesh: too coarse");
    for (int i = 0; i < n; ++i) {
      int s = std::min(std::max(i - 2, 0), n - 5);
      std::vector<double> x(5);
      Stencil st;
      for (int k = 0; k < 5; ++k) {
        st.idx.push_back(s + k);
        x[(size_t)k] = r_[(size_t)(s + k)];
      }
      st.wd1 = detail::fd_weights(r_[(size_t)i], x, 1);
      stencil_[(size_t)i] = st;
    }
  }

  std::vector<double> r_, w_, wvol_;
  std::vector<Stencil> stencil_;
};

using RadialMeshPtr = std::shared_ptr<const RadialMesh>;

inline RadialMeshPtr make_mesh(double r_min = 1e-4, double r_max = 40.0,
                               int n = 600) {
  return std::make_shared<const RadialMesh>(r_min, r_max, n);
}

}  // namespace bdflab
