#include "fraclap/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclap::special {

namespace {

// Lanczos coefficients for g = 7 (Godfrey's set, widely reproduced).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
  // Valid for x >= 0.5.
  const double xm1 = x - 1.0;
  double acc = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) acc += kLanczosCoeff[i] / (xm1 + i);
  const double t = xm1 + kLanczosG + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (xm1 + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive, got " +
                            std::to_string(x));
  }
  if (x < 0.5) return log_gamma_lanczos(x + 1.0) - std::log(x);
  return log_gamma_lanczos(x);
}

double pochhammer(double x, int k) {
  if (k < 0) throw std::domain_error("pochhammer: k must be >= 0");
  if (k == 0) return 1.0;
  return std::exp(log_gamma(x + k) - log_gamma(x));
}

double jacobi_eval(const JacobiParams& p, double z) {
  if (!(p.a > -1.0) || !(p.b > -1.0)) {
    throw std::domain_error("jacobi_eval: parameters must satisfy a, b > -1");
  }
  if (p.n < 0) throw std::domain_error("jacobi_eval: degree must be >= 0");
  const double a = p.a, b = p.b;
  if (p.n == 0) return 1.0;
  double pm1 = 1.0;
  double pc = 0.5 * (a - b + (a + b + 2.0) * z);
  for (int k = 2; k <= p.n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) *
                      ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * z +
                       a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double pn = (c2 * pc - c3 * pm1) / c1;
    pm1 = pc;
    pc = pn;
  }
  return pc;
}

void jacobi_eval_sequence(double a, double b, int n, double z, double* out) {
  out[0] = 1.0;
  if (n == 0) return;
  out[1] = 0.5 * (a - b + (a + b + 2.0) * z);
  for (int k = 2; k <= n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) *
                      ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * z +
                       a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    out[k] = (c2 * out[k - 1] - c3 * out[k - 2]) / c1;
  }
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) {
    throw std::out_of_range("assoc_legendre: need 0 <= m <= l");
  }
  // P_m^m = (2m-1)!! (1-x^2)^{m/2}, then upward recurrence in l.
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= fact * s;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pm1 = pmm;
  double pc = x * (2.0 * m + 1.0) * pmm;
  for (int k = m + 2; k <= l; ++k) {
    const double pn =
        (x * (2.0 * k - 1.0) * pc - (k + m - 1.0) * pm1) / (k - m);
    pm1 = pc;
    pc = pn;
  }
  return pc;
}

namespace {

double sph_norm(int l, int m) {
  // sqrt((2l+1)/(4pi) * (l-m)!/(l+m)!), m >= 0.
  const double log_ratio = log_gamma(l - m + 1.0) - log_gamma(l + m + 1.0);
  return std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI)) * std::exp(0.5 * log_ratio);
}

}  // namespace

std::complex<double> sph_harm_complex(const HarmonicIndex& h, double theta,
                                      double phi) {
  if (std::abs(h.m) > h.l) {
    throw std::out_of_range("sph_harm_complex: |m| > l");
  }
  const int m = std::abs(h.m);
  const double plm = assoc_legendre(h.l, m, std::cos(theta));
  const double csign = (m % 2 == 0) ? 1.0 : -1.0;  // Condon-Shortley
  const double mag = csign * sph_norm(h.l, m) * plm;
  const std::complex<double> phase(std::cos(m * phi), std::sin(m * phi));
  std::complex<double> y = mag * phase;
  if (h.m < 0) y = csign * std::conj(y);  // Y_l^{-m} = (-1)^m conj(Y_l^m)
  return y;
}

double sph_harm_real(const HarmonicIndex& h, double theta, double phi) {
  if (std::abs(h.m) > h.l) {
    throw std::out_of_range("sph_harm_real: |m| > l");
  }
  const int m = std::abs(h.m);
  const double plm = assoc_legendre(h.l, m, std::cos(theta));
  const double norm = sph_norm(h.l, m);
  if (h.m == 0) return norm * plm;
  const double root2 = std::sqrt(2.0);
  if (h.m > 0) return root2 * norm * plm * std::cos(m * phi);
  return root2 * norm * plm * std::sin(m * phi);
}

double solid_harm_3d(const HarmonicIndex& h, const Vec3& x) {
  if (std::abs(h.m) > h.l) {
    throw std::out_of_range("solid_harm_3d: |m| > l");
  }
  const double r = std::sqrt(x.x * x.x + x.y * x.y + x.z * x.z);
  if (r == 0.0) {
    return h.l == 0 ? std::sqrt(1.0 / (4.0 * M_PI)) : 0.0;
  }
  const double theta = std::acos(std::clamp(x.z / r, -1.0, 1.0));
  const double phi = std::atan2(x.y, x.x);
  return std::pow(r, h.l) * sph_harm_real(h, theta, phi);
}

double solid_harm_2d(int l, int channel, double x, double y) {
  if (l < 0) throw std::out_of_range("solid_harm_2d: l < 0");
  if (channel != 0 && channel != 1) {
    throw std::out_of_range("solid_harm_2d: channel must be 0 or 1");
  }
  if (l == 0) {
    if (channel == 1) {
      throw std::out_of_range("solid_harm_2d: sin channel absent at l = 0");
    }
    return 1.0;
  }
  const double r = std::hypot(x, y);
  if (r == 0.0) return 0.0;
  const double theta = std::atan2(y, x);
  const double ang = channel == 0 ? std::cos(l * theta) : std::sin(l * theta);
  return std::pow(r, l) * ang;
}

double solid_harm(int dim, const HarmonicIndex& h, const Vec3& x) {
  if (dim == 2) return solid_harm_2d(h.l, h.m, x.x, x.y);
  if (dim == 3) return solid_harm_3d(h, x);
  throw std::invalid_argument("solid_harm: dim must be 2 or 3");
}

}  // namespace fraclap::special
