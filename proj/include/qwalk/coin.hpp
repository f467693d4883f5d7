#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kHalfPi = kPi / 2.0;

struct CoinParams {
  double xi = 0.0;
  double theta = 0.0;
  double zeta = 0.0;
};

struct Mat2 {
  Complex m00, m01, m10, m11;
};

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be a finite real");
  }
}

inline Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Two-parameter-phase rotation family; determinant is -1 for every parameter triple.
inline Mat2 build_coin(const CoinParams& p) {
  require_finite(p.xi, "xi");
  require_finite(p.theta, "theta");
  require_finite(p.zeta, "zeta");
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const Complex exi = unit_phase(p.xi);
  const Complex ezt = unit_phase(p.zeta);
  return {exi * c, ezt * s, std::conj(ezt) * s, -std::conj(exi) * c};
}

inline Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Complex det(const Mat2& m) { return m.m00 * m.m11 - m.m01 * m.m10; }

// Closed form for the single-step product of both players' coins with the
// xi coin acting first: build_coin(0,theta,zeta) * build_coin(xi,theta,0).
inline Mat2 composite_BA(double xi, double theta, double zeta) {
  require_finite(xi, "xi");
  require_finite(theta, "theta");
  require_finite(zeta, "zeta");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double c2 = c * c;
  const double s2 = s * s;
  const double sc = s * c;
  return {unit_phase(xi) * c2 + unit_phase(zeta) * s2,
          sc * (Complex{1.0, 0.0} - unit_phase(zeta - xi)),
          sc * (unit_phase(xi - zeta) - Complex{1.0, 0.0}),
          unit_phase(-zeta) * s2 + unit_phase(-xi) * c2};
}

// Product with the zeta coin acting first: build_coin(xi,theta,0) * build_coin(0,theta,zeta).
// Determinant is +1, so m11 is the conjugate of m00.
inline Mat2 composite_AB(double xi, double theta, double zeta) {
  require_finite(xi, "xi");
  require_finite(theta, "theta");
  require_finite(zeta, "zeta");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double c2 = c * c;
  const double s2 = s * s;
  const double sc = s * c;
  return {unit_phase(xi) * c2 + unit_phase(-zeta) * s2,
          sc * (unit_phase(xi + zeta) - Complex{1.0, 0.0}),
          sc * (Complex{1.0, 0.0} - unit_phase(-(xi + zeta))),
          unit_phase(zeta) * s2 + unit_phase(-xi) * c2};
}

// Max entrywise |M'M - I|.
inline double unitarity_defect(const Mat2& m) {
  const Complex g00 = std::conj(m.m00) * m.m00 + std::conj(m.m10) * m.m10 - 1.0;
  const Complex g01 = std::conj(m.m00) * m.m01 + std::conj(m.m10) * m.m11;
  const Complex g10 = std::conj(m.m01) * m.m00 + std::conj(m.m11) * m.m10;
  const Complex g11 = std::conj(m.m01) * m.m01 + std::conj(m.m11) * m.m11 - 1.0;
  return std::max(std::max(std::abs(g00), std::abs(g01)),
                  std::max(std::abs(g10), std::abs(g11)));
}

inline bool is_unitary(const Mat2& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return unitarity_defect(m) <= tol;
}

}  // namespace qwalk
