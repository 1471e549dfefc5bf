// Exact algebra of pointwise 4-spinor values: Dirac matrices, charge
// conjugation C and the unitary symmetry I_s.
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace bdflab {

using cplx = std::complex<double>;

struct SpinorValue {
  std::array<cplx, 4> c{};  // (psi1, psi2) upper, (psi3, psi4) lower

  SpinorValue() = default;
  SpinorValue(cplx a, cplx b, cplx d, cplx e) : c{a, b, d, e} {}

  cplx& operator[](int i) { return c[(size_t)i]; }
  const cplx& operator[](int i) const { return c[(size_t)i]; }

  double norm2() const {
    double s = 0;
    for (const auto& z : c) s += std::norm(z);
    return s;
  }

  SpinorValue operator+(const SpinorValue& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  SpinorValue operator-(const SpinorValue& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  SpinorValue operator*(cplx z) const {
    return {z * c[0], z * c[1], z * c[2], z * c[3]};
  }
};

inline cplx dot(const SpinorValue& a, const SpinorValue& b) {
  cplx s = 0;
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// C psi = (conj psi4, -conj psi3, -conj psi2, conj psi1); an antiunitary
// involution with |C psi| = |psi| pointwise.
inline SpinorValue charge_conjugate(const SpinorValue& s) {
  return {std::conj(s[3]), -std::conj(s[2]), -std::conj(s[1]),
          std::conj(s[0])};
}

// I_s (phi, chi) = (-chi, phi); unitary with I_s^2 = -Id.
inline SpinorValue apply_is(const SpinorValue& s) {
  return {-s[2], -s[3], s[0], s[1]};
}

// beta = diag(1,1,-1,-1).
inline SpinorValue apply_beta(const SpinorValue& s) {
  return {s[0], s[1], -s[2], -s[3]};
}

// alpha . v for a real 3-vector v (off-diagonal sigma blocks).
inline SpinorValue apply_alpha_dot(const std::array<double, 3>& v,
                                   const SpinorValue& s) {
  const cplx I(0, 1);
  // sigma.v acting on a 2-spinor (a,b):
  auto sigv = [&](cplx a, cplx b, cplx& ra, cplx& rb) {
    ra = v[2] * a + (v[0] - I * v[1]) * b;
    rb = (v[0] + I * v[1]) * a - v[2] * b;
  };
  SpinorValue r;
  sigv(s[2], s[3], r.c[0], r.c[1]);  // upper out = sigma.v lower
  sigv(s[0], s[1], r.c[2], r.c[3]);  // lower out = sigma.v upper
  return r;
}

}  // namespace bdflab
