// Gauss-Legendre rules, panel quadratures and the momentum mesh on [0,Lambda].
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bdflab {

struct Rule1D {
  std::vector<double> x, w;
  size_t size() const { return x.size(); }
};

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
inline Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  Rule1D r;
  r.x.resize((size_t)n);
  r.w.resize((size_t)n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[(size_t)i] = -x;
    r.x[(size_t)(n - 1 - i)] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[(size_t)i] = w;
    r.w[(size_t)(n - 1 - i)] = w;
  }
  return r;
}

inline Rule1D map_rule(const Rule1D& base, double a, double b) {
  Rule1D r = base;
  const double h = 0.5 * (b - a), c = 0.5 * (b + a);
  for (size_t i = 0; i < r.size(); ++i) {
    r.x[i] = c + h * base.x[i];
    r.w[i] = h * base.w[i];
  }
  return r;
}

// Composite Gauss-Legendre over given panel edges.
inline Rule1D panel_rule(const std::vector<double>& edges, int nodes_per_panel) {
  Rule1D base = gauss_legendre(nodes_per_panel), out;
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    Rule1D seg = map_rule(base, edges[p], edges[p + 1]);
    out.x.insert(out.x.end(), seg.x.begin(), seg.x.end());
    out.w.insert(out.w.end(), seg.w.begin(), seg.w.end());
  }
  return out;
}

// Momentum mesh on [0, Lambda]: Gauss-Legendre panels, geometrically graded
// toward p = 0 so that both the dressing kernels and low-momentum orbitals
// are resolved. Panel edges: 0, Lambda*ratio^(k-1), ..., Lambda.
struct MomentumMesh {
  double lambda = 100.0;
  std::vector<double> p, w;  // nodes and dp-weights
  std::vector<double> panel_edges;

  MomentumMesh() = default;
  MomentumMesh(double Lambda, int n_panels = 25, int per_panel = 8,
               double p_min_frac = 1e-5) {
    if (Lambda <= 0) throw std::invalid_argument("MomentumMesh: Lambda > 0");
    lambda = Lambda;
    panel_edges.push_back(0.0);
    const double ratio =
        std::pow(p_min_frac, -1.0 / std::max(1, n_panels - 1));
    double e = Lambda * p_min_frac;
    for (int k = 0; k < n_panels - 1; ++k) {
      panel_edges.push_back(e);
      e *= ratio;
    }
    panel_edges.push_back(Lambda);
    Rule1D r = panel_rule(panel_edges, per_panel);
    p = r.x;
    w = r.w;
  }

  size_t size() const { return p.size(); }

  // integral of f(p) p^2 dp
  template <class F>
  double integrate_p2(F&& f) const {
    double s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += w[i] * p[i] * p[i] * f(p[i]);
    return s;
  }
};

}  // namespace bdflab
