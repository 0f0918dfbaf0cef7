#ifndef PTCS_BESSEL_HPP
#define PTCS_BESSEL_HPP

// Bessel functions J, I, K of real order and real argument, and I of real
// order and complex argument.
//
// Real orders use Temme's series for x < 2 and Steed's continued fractions
// (CF1 for the ratio, CF2 for K or J+iY) above, followed by recurrence in the
// order. Large arguments switch to the Hankel asymptotic expansions. The
// scaled forms exp(-x) I and exp(x) K are the primary outputs so that
// products such as exp(r^2) I K never overflow.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "ptcs/error.hpp"

namespace ptcs::specfun {

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps = 1e-16;
inline constexpr double kFpMin = 1e-290;
inline constexpr int kMaxIter = 200000;

// Taylor coefficients of 1/Gamma(z) about 0: 1/Gamma(z) = sum_k c[k] z^k.
inline constexpr std::array<double, 31> kRgammaTaylor = {
    0.0,
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18,
    -2.298745684435370206592e-19,
    1.714406321927337433384e-20,
};

struct TemmeGammas {
  double gam1;   // (1/Gamma(1-x) - 1/Gamma(1+x)) / (2x)
  double gam2;   // (1/Gamma(1-x) + 1/Gamma(1+x)) / 2
  double gampl;  // 1/Gamma(1+x)
  double gammi;  // 1/Gamma(1-x)
};

// |x| <= 1/2. 1/Gamma(1+x) = sum_k c[k+1] x^k.
inline TemmeGammas temme_gammas(double x) {
  const double x2 = x * x;
  double even = 0.0;  // c1 + c3 x^2 + c5 x^4 + ...
  double odd = 0.0;   // c2 + c4 x^2 + c6 x^4 + ...
  for (int k = 29; k >= 1; k -= 2) even = even * x2 + kRgammaTaylor[k];
  for (int k = 30; k >= 2; k -= 2) odd = odd * x2 + kRgammaTaylor[k];
  TemmeGammas g{};
  g.gam1 = -odd;
  g.gam2 = even;
  g.gampl = even + x * odd;
  g.gammi = even - x * odd;
  return g;
}

struct IkScaled {
  double i;  // exp(-x) I_nu(x)
  double k;  // exp(x) K_nu(x)
};

// exp(-x) I_nu and exp(x) K_nu from the large-argument expansions, or
// false when the expansion cannot reach full precision.
inline bool ik_asymptotic(double nu, double x, IkScaled& out) {
  const double m = 4.0 * nu * nu;
  double term = 1.0;
  double sum_i = 1.0;
  double sum_k = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (m - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    if (std::fabs(next) > std::fabs(term) && k > 1) return false;
    term = next;
    sum_i += (k % 2 == 0 ? term : -term);
    sum_k += term;
    if (std::fabs(term) < 1e-17) {
      out.i = sum_i / std::sqrt(2.0 * kPi * x);
      out.k = sum_k * std::sqrt(kPi / (2.0 * x));
      return true;
    }
  }
  return false;
}

// Scaled I_nu and K_nu for nu >= 0, x > 0.
inline IkScaled bessel_ik_scaled(double nu, double x) {
  if (x >= 30.0 && x >= nu * nu) {
    IkScaled asym{};
    if (ik_asymptotic(nu, x, asym)) return asym;
  }
  const int nl = static_cast<int>(nu + 0.5);
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  // CF1: I'_nu / I_nu.
  double h = nu * xi;
  if (h < kFpMin) h = kFpMin;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 1;
  for (; it <= kMaxIter; ++it) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  if (it > kMaxIter) throw ConvergenceError("bessel_ik: CF1 failed", 0.0, 1.0);

  double ril = 1e-30;
  double ripl = h * ril;
  const double ril1 = ril;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const double f = ripl / ril;

  double rkmu = 0.0;
  double rk1 = 0.0;
  bool scaled = false;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * xmu;
    const double fct = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    d = -std::log(x2);
    double e = xmu * d;
    const double fact2 = std::fabs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(xmu);
    double ff = fct * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - xmu2);
      c *= d / i;
      p /= i - xmu;
      q /= i + xmu;
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - i * ff);
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_ik: Temme series failed", 0.0, 1.0);
    rkmu = sum;
    rk1 = sum1 * xi2;
  } else {
    // CF2 (Steed); K is produced without its exp(-x) factor.
    b = 2.0 * (1.0 + x);
    d = 1.0 / b;
    double delh = d;
    h = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - xmu2;
    double q = a1;
    c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
      a -= 2.0 * (i - 1);
      c = -a * c / i;
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::fabs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_ik: CF2 failed", 0.0, 1.0);
    h = a1 * h;
    rkmu = std::sqrt(kPi / (2.0 * x)) / s;
    rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    scaled = true;
  }

  const double rkmup = xmu * xi * rkmu - rk1;
  const double rimu = xi / (f * rkmu - rkmup);
  double ri = rimu * ril1 / ril;
  for (int i = 1; i <= nl; ++i) {
    const double rktemp = (xmu + i) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = rktemp;
  }
  double rk = rkmu;
  if (!scaled) {
    ri *= std::exp(-x);
    rk *= std::exp(x);
  }
  return {ri, rk};
}

struct Jy {
  double j;
  double y;
};

inline bool jy_asymptotic(double nu, double x, Jy& out) {
  const double m = 4.0 * nu * nu;
  double term = 1.0;
  double p = 1.0;
  double q = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (m - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    if (std::fabs(next) > std::fabs(term) && k > 1) return false;
    term = next;
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      default: q -= term; break;
    }
    if (std::fabs(term) < 1e-17) {
      const double chi = x - (0.5 * nu + 0.25) * kPi;
      const double amp = std::sqrt(2.0 / (kPi * x));
      const double cs = std::cos(chi);
      const double sn = std::sin(chi);
      out.j = amp * (p * cs - q * sn);
      out.y = amp * (p * sn + q * cs);
      return true;
    }
  }
  return false;
}

// J_nu and Y_nu for nu >= 0, x > 0.
inline Jy bessel_jy(double nu, double x) {
  if (x >= 25.0 && x >= 2.0 * nu * nu) {
    Jy asym{};
    if (jy_asymptotic(nu, x, asym)) return asym;
  }
  const int nl = x < 2.0 ? static_cast<int>(nu + 0.5) : std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  int isign = 1;
  double h = nu * xi;
  if (h < kFpMin) h = kFpMin;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 1;
  for (; it <= kMaxIter; ++it) {
    b += xi2;
    d = b - d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  if (it > kMaxIter) throw ConvergenceError("bessel_jy: CF1 failed", 0.0, 1.0);

  double rjl = isign * 1e-30;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double rjmu = 0.0;
  double rymu = 0.0;
  double ry1 = 0.0;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * xmu;
    const double fct = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    d = -std::log(x2);
    double e = xmu * d;
    const double fact2 = std::fabs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(xmu);
    double ff = 2.0 / kPi * fct * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    e = std::exp(e);
    double p = e / (g.gampl * kPi);
    double q = 1.0 / (e * kPi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::fabs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact3 * fact3;
    c = 1.0;
    d = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - xmu2);
      c *= d / i;
      p /= i - xmu;
      q /= i + xmu;
      const double del = c * (ff + r * q);
      sum += del;
      sum1 += c * p - i * del;
      if (std::fabs(del) < (1.0 + std::fabs(sum)) * kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_jy: Temme series failed", 0.0, 1.0);
    rymu = -sum;
    ry1 = -sum1 * xi2;
    const double rymup = xmu * xi * rymu - ry1;
    rjmu = w / (rymup - f * rymu);
  } else {
    double a = 0.25 - xmu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
      a += 2.0 * (i - 1);
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::fabs(dr) + std::fabs(di) < kFpMin) dr = kFpMin;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::fabs(cr) + std::fabs(ci) < kFpMin) cr = kFpMin;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::fabs(dlr - 1.0) + std::fabs(dli) < kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel_jy: CF2 failed", 0.0, 1.0);
    const double gam = (p - f) / q;
    rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    rymu = rjmu * gam;
    const double rymup = rymu * (p + q / gam);
    ry1 = xmu * xi * rymu - rymup;
  }

  const double scale = rjmu / rjl;
  const double rj = rjl1 * scale;
  for (int i = 1; i <= nl; ++i) {
    const double rytemp = (xmu + i) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  return {rj, rymu};
}

}  // namespace detail

/// exp(-x) I_mu(x) for mu > -1, x >= 0.
inline double bessel_i_scaled(double mu, double x) {
  ptcs::detail::require_finite(mu, "bessel_i: order must be finite");
  ptcs::detail::require_finite(x, "bessel_i: argument must be finite");
  ptcs::detail::require(mu > -1.0, "bessel_i: order must exceed -1");
  ptcs::detail::require(x >= 0.0, "bessel_i: argument must be nonnegative");
  if (x == 0.0) {
    if (mu == 0.0) return 1.0;
    ptcs::detail::require(mu > 0.0, "bessel_i: I_mu(0) is infinite for mu < 0");
    return 0.0;
  }
  if (mu >= 0.0) return detail::bessel_ik_scaled(mu, x).i;
  // I_{-a} = I_a + (2/pi) sin(a pi) K_a
  const double a = -mu;
  const auto ik = detail::bessel_ik_scaled(a, x);
  return ik.i + 2.0 / detail::kPi * std::sin(a * detail::kPi) * std::exp(-2.0 * x) * ik.k;
}

/// I_mu(x); overflows for x beyond ~700, use bessel_i_scaled there.
inline double bessel_i(double mu, double x) { return bessel_i_scaled(mu, x) * std::exp(x); }

/// exp(x) K_mu(x) for x > 0, any real order (K_{-mu} = K_mu).
inline double bessel_k_scaled(double mu, double x) {
  ptcs::detail::require_finite(mu, "bessel_k: order must be finite");
  ptcs::detail::require_finite(x, "bessel_k: argument must be finite");
  ptcs::detail::require(x > 0.0, "bessel_k: argument must be positive");
  return detail::bessel_ik_scaled(std::fabs(mu), x).k;
}

inline double bessel_k(double mu, double x) { return bessel_k_scaled(mu, x) * std::exp(-x); }

/// J_beta(x) for beta >= -1/2, x >= 0.
inline double bessel_j(double beta, double x) {
  ptcs::detail::require_finite(beta, "bessel_j: order must be finite");
  ptcs::detail::require_finite(x, "bessel_j: argument must be finite");
  ptcs::detail::require(beta >= -0.5, "bessel_j: order must be at least -1/2");
  ptcs::detail::require(x >= 0.0, "bessel_j: argument must be nonnegative");
  if (x == 0.0) {
    if (beta == 0.0) return 1.0;
    ptcs::detail::require(beta > 0.0, "bessel_j: J_beta(0) is infinite for beta < 0");
    return 0.0;
  }
  if (beta >= 0.0) return detail::bessel_jy(beta, x).j;
  // J_{-a} = cos(a pi) J_a - sin(a pi) Y_a
  const double a = -beta;
  const auto jy = detail::bessel_jy(a, x);
  return std::cos(a * detail::kPi) * jy.j - std::sin(a * detail::kPi) * jy.y;
}

namespace detail {

using cplx = std::complex<double>;

// sum_k (w^2/4)^k / (k! Gamma(mu+k+1)), accumulated in extended precision.
inline cplx reduced_i_series(double mu, cplx w) {
  using lcplx = std::complex<long double>;
  const lcplx q = lcplx(w.real(), w.imag()) * lcplx(w.real(), w.imag()) / 4.0L;
  long double rg = 1.0L / std::tgamma(static_cast<long double>(mu) + 1.0L);
  lcplx term = rg;
  lcplx sum = term;
  int quiet = 0;
  for (int k = 0; k < 5000; ++k) {
    term *= q / ((k + 1.0L) * (mu + k + 1.0L));
    sum += term;
    if (std::abs(term) <= 1e-19L * std::abs(sum)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// exp(-|Re w|) I_mu(w) from the large-|w| expansion (both exponentials kept,
// so the imaginary axis is covered). Returns false if it cannot converge.
inline bool i_complex_asymptotic_scaled(double mu, cplx w, cplx& out) {
  const double m = 4.0 * mu * mu;
  cplx term = 1.0;
  cplx s1 = 1.0;
  cplx s2 = 1.0;
  bool done = false;
  for (int k = 1; k < 300; ++k) {
    const cplx next = term * (m - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * w);
    if (std::abs(next) > std::abs(term) && k > 1) return false;
    term = next;
    s1 += (k % 2 == 0 ? term : -term);
    s2 += term;
    if (std::abs(term) < 1e-17) {
      done = true;
      break;
    }
  }
  if (!done) return false;
  const double scale = std::fabs(w.real());
  const cplx pref = 1.0 / std::sqrt(2.0 * kPi * w);
  const double sgn = w.imag() >= 0.0 ? 1.0 : -1.0;
  const cplx rot = std::exp(cplx(0.0, sgn * (mu + 0.5) * kPi));
  out = pref * (std::exp(w - scale) * s1 + rot * std::exp(-w - scale) * s2);
  return true;
}

inline bool use_complex_series(double mu, cplx w) {
  const double aw = std::abs(w);
  return aw <= 20.0 || mu * mu > aw;
}

}  // namespace detail

/// exp(-|Re w|) I_mu(w), principal branch of w^mu (arg in (-pi, pi]).
inline std::complex<double> bessel_i_complex_scaled(double mu, std::complex<double> w) {
  ptcs::detail::require_finite(mu, "bessel_i_complex: order must be finite");
  ptcs::detail::require(mu > -1.0, "bessel_i_complex: order must exceed -1");
  ptcs::detail::require(std::isfinite(w.real()) && std::isfinite(w.imag()),
                        "bessel_i_complex: argument must be finite");
  if (w == 0.0) {
    if (mu == 0.0) return 1.0;
    ptcs::detail::require(mu > 0.0, "bessel_i_complex: I_mu(0) is infinite for mu < 0");
    return 0.0;
  }
  if (!detail::use_complex_series(mu, w)) {
    std::complex<double> out;
    if (detail::i_complex_asymptotic_scaled(mu, w, out)) return out;
  }
  const std::complex<double> power = std::exp(mu * std::log(w / 2.0) - std::fabs(w.real()));
  return power * detail::reduced_i_series(mu, w);
}

/// I_mu(w) for complex w; may overflow for |Re w| > ~700.
inline std::complex<double> bessel_i_complex(double mu, std::complex<double> w) {
  return bessel_i_complex_scaled(mu, w) * std::exp(std::fabs(w.real()));
}

/// exp(-|Re w|) (w/2)^{-mu} I_mu(w). The unscaled quantity is entire in w
/// and equals 0F1(;mu+1;w^2/4)/Gamma(mu+1), so no branch enters.
inline std::complex<double> bessel_i_reduced_scaled(double mu, std::complex<double> w) {
  ptcs::detail::require(mu > -1.0, "bessel_i_reduced: order must exceed -1");
  if (!detail::use_complex_series(mu, w)) {
    std::complex<double> out;
    if (detail::i_complex_asymptotic_scaled(mu, w, out)) return out * std::exp(-mu * std::log(w / 2.0));
  }
  return detail::reduced_i_series(mu, w) * std::exp(-std::fabs(w.real()));
}

}  // namespace ptcs::specfun

#endif  // PTCS_BESSEL_HPP
