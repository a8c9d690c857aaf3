#pragma once

#include <complex>

namespace fraclap::special {

/// Natural log of the Gamma function for x > 0.
///
/// Lanczos approximation (g = 7, 9 coefficients); relative error is
/// below 1e-14 on [0.5, 200]. Arguments in (0, 0.5) are handled through
/// the recurrence ln Gamma(x) = ln Gamma(x+1) - ln x.
///
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Pochhammer symbol (x)_k = Gamma(x+k)/Gamma(x), evaluated in log space.
double pochhammer(double x, int k);

/// Parameters of a Jacobi polynomial P_n^{(a,b)}.
struct JacobiParams {
  double a = 0.0;  // > -1
  double b = 0.0;  // > -1
  int n = 0;       // >= 0
};

/// Jacobi polynomial P_n^{(a,b)}(z) by the ascending three-term recurrence.
/// z is expected in [-1, 1]; parameters must satisfy a, b > -1, n >= 0.
double jacobi_eval(const JacobiParams& p, double z);

/// Evaluates P_0..P_n at a fixed z into out[0..n] (one recurrence sweep).
void jacobi_eval_sequence(double a, double b, int n, double z, double* out);

/// Degree/order pair of a (spherical) harmonic.
struct HarmonicIndex {
  int l = 0;  // >= 0
  int m = 0;  // |m| <= l
};

/// Associated Legendre function P_l^m(x) for m >= 0, without the
/// Condon-Shortley phase.
double assoc_legendre(int l, int m, double x);

/// Complex spherical harmonic Y_l^m(theta, phi), theta = colatitude in
/// [0, pi], phi = azimuth. Condon-Shortley phase (-1)^m included.
/// Orthonormal with respect to the surface measure sin(theta) dtheta dphi.
std::complex<double> sph_harm_complex(const HarmonicIndex& h, double theta,
                                      double phi);

/// Real spherical harmonic Y_{l,m}(theta, phi). For m > 0 this is
/// sqrt(2) (-1)^m Re Y_l^m, for m < 0 it is sqrt(2) (-1)^m Im Y_l^{|m|},
/// and Y_{l,0} = Y_l^0. With this convention Y_{1,1} ~ x, Y_{1,-1} ~ y,
/// Y_{2,-2} = sqrt(15/4pi) xy / r^2, matching the usual Cartesian forms.
double sph_harm_real(const HarmonicIndex& h, double theta, double phi);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Solid harmonic of degree l in 3D: V_{l,m}(x) = r^l Y_{l,m}(theta, phi)
/// with the real harmonics above. A homogeneous harmonic polynomial.
double solid_harm_3d(const HarmonicIndex& h, const Vec3& x);

/// 2D solid harmonics: channel 0 is r^l cos(l theta), channel 1 is
/// r^l sin(l theta). Throws for channel 1 at l = 0 (that channel does
/// not exist).
double solid_harm_2d(int l, int channel, double x, double y);

/// Dimension-dispatching wrapper; dim must be 2 or 3. In 2D the index m
/// denotes the channel (0 = cos, 1 = sin).
double solid_harm(int dim, const HarmonicIndex& h, const Vec3& x);

}  // namespace fraclap::special
