#ifndef NLSLAB_EXPONENTS_HPP
#define NLSLAB_EXPONENTS_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

// Closed-form exponent arithmetic for the defocusing mass-subcritical NLS
// i u_t + Lap u = |u|^p u. Everything here is a pure function of (d, p) and
// a few auxiliary parameters; all arithmetic is double precision with an
// explicit tolerance of 1e-12.

namespace nlslab {

// Distinguished representation of an infinite Lebesgue exponent.
inline constexpr double inf_exponent = std::numeric_limits<double>::infinity();

inline constexpr double exponent_tol = 1e-12;

struct PhysParams {
  int d = 1;       // spatial dimension
  double p = 3.0;  // nonlinearity power
};

inline void validate(const PhysParams& params) {
  if (params.d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(params.p > 0.0)) throw std::invalid_argument("nonlinearity power must be > 0");
}

inline double mass_critical_power(int d) { return 4.0 / d; }

// Strauss exponent: the positive root of d p^2 + (d-2) p - 4 = 0.
inline double strauss_exponent(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const double dd = static_cast<double>(d);
  return (2.0 - dd + std::sqrt((dd - 2.0) * (dd - 2.0) + 16.0 * dd)) / (2.0 * dd);
}

// Scattering window alpha(d) < p < 4/d for the weighted-space theory.
inline bool in_scattering_window(const PhysParams& params) {
  validate(params);
  return params.p > strauss_exponent(params.d) &&
         params.p < mass_critical_power(params.d);
}

// Temporal exponent q = 4(p+2)/(dp); (q, p+2) is then an admissible pair.
inline double canonical_q(const PhysParams& params) {
  validate(params);
  if (!(params.p < mass_critical_power(params.d)))
    throw std::invalid_argument("canonical_q requires 0 < p < 4/d");
  return 4.0 * (params.p + 2.0) / (params.d * params.p);
}

inline double holder_conjugate(double r) {
  if (r == inf_exponent) return 1.0;
  if (r == 1.0) return inf_exponent;
  if (!(r > 1.0)) throw std::invalid_argument("holder_conjugate needs r in [1, inf]");
  return r / (r - 1.0);
}

// Admissibility: 2/q + d/r = d/2 within tolerance, excluding (d,q,r)=(2,2,inf).
// Total on q, r in [2, inf]; anything outside that range is simply inadmissible.
inline bool is_admissible_pair(int d, double q, double r) {
  if (d < 1) return false;
  if (!(q >= 2.0) || !(r >= 2.0)) return false;
  if (d == 2 && q == 2.0 && r == inf_exponent) return false;
  const double lhs = 2.0 / q + d / r;  // 1/inf == 0 exactly in IEEE
  return std::abs(lhs - 0.5 * d) < exponent_tol;
}

inline bool is_dual_admissible_pair(int d, double a, double b) {
  if (!(a >= 1.0) || !(b >= 1.0)) return false;
  return is_admissible_pair(d, holder_conjugate(a), holder_conjugate(b));
}

// Interpolation weight theta = 1 - dp / (2(p+2)).
inline double interpolation_weight(const PhysParams& params) {
  validate(params);
  return 1.0 - params.d * params.p / (2.0 * (params.p + 2.0));
}

// Exponent of the unsharpened small-data error bound, 2(2p+1)/(p+2).
inline double error_exponent_plain(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("p must be > 0");
  return 2.0 * (2.0 * p + 1.0) / (p + 2.0);
}

namespace detail {
inline double error_exponent_formula(double p, double eta, double nu) {
  return 2.0 * p * (1.0 - eta) + (1.0 - nu) + 2.0 / (p + 2.0) * (2.0 * eta * p + nu);
}
}  // namespace detail

// Lower edge of the admissible eta-range, (q-2)/(2p). Lies in (0,1) exactly
// when alpha(d) < p < 4/d, so the sharpened exponent has a nonempty domain
// precisely in the scattering window.
inline double eta_lower_bound(const PhysParams& params) {
  return (canonical_q(params) - 2.0) / (2.0 * params.p);
}

// Sharpened error exponent on the rectangle (q-2)/(2p) < eta <= 1, 1/2 < nu <= 1.
inline double error_exponent_sharpened(const PhysParams& params, double eta, double nu) {
  const double eta_min = eta_lower_bound(params);
  if (!(eta > eta_min) || !(eta <= 1.0))
    throw std::invalid_argument("eta outside ((q-2)/(2p), 1]");
  if (!(nu > 0.5) || !(nu <= 1.0))
    throw std::invalid_argument("nu outside (1/2, 1]");
  return detail::error_exponent_formula(params.p, eta, nu);
}

struct LowDimCondition {
  double value = 0.0;   // 2dp^2 + (11d-8)p + (8d-16)
  bool positive = false;
};

inline LowDimCondition low_dim_condition(const PhysParams& params) {
  validate(params);
  const double d = params.d, p = params.p;
  const double value = 2.0 * d * p * p + (11.0 * d - 8.0) * p + (8.0 * d - 16.0);
  return {value, value > 0.0};
}

// Growth exponent of the weighted-norm quotient along eps = sigma^{-j}:
// j [s - (p+1)] + 2 - dp/2 - s. Affine in both s and j; total function.
inline double quotient_growth_exponent(const PhysParams& params, double s, double j) {
  validate(params);
  return j * (s - (params.p + 1.0)) + 2.0 - 0.5 * params.d * params.p - s;
}

// Holder-breakdown threshold p - (2 - dp/2)/j; requires dp < 4 and j > 1.
inline double beta_threshold(const PhysParams& params, double j) {
  validate(params);
  if (params.d * params.p >= 4.0)
    throw std::invalid_argument("beta_threshold requires dp < 4");
  if (!(j > 1.0)) throw std::invalid_argument("beta_threshold requires j > 1");
  return params.p - (2.0 - 0.5 * params.d * params.p) / j;
}

// Real threshold in j above which the main term beats an error term of size
// (eps sigma)^err_exponent along eps = sigma^{-j}; infinity when the error
// exponent does not exceed p+1.
inline double scaling_link_threshold(const PhysParams& params, double err_exponent) {
  validate(params);
  const double margin = err_exponent - (params.p + 1.0);
  if (!(margin > 0.0)) return inf_exponent;
  return (err_exponent - 2.0 + 0.5 * params.d * params.p) / margin;
}

// Smallest integer j > 1 strictly above the threshold, when one exists.
inline std::optional<int> min_scaling_link(const PhysParams& params, double err_exponent) {
  const double threshold = scaling_link_threshold(params, err_exponent);
  if (threshold == inf_exponent) return std::nullopt;
  const int j = static_cast<int>(std::floor(threshold)) + 1;
  return std::max(2, j);
}

// Cross-check of the two printed forms of the error-dominance condition:
// supremum of the sharpened exponent over its admissible rectangle (the
// closure value at eta = (q-2)/(2p), nu = 1/2, by monotonicity) versus the
// sign of the low-dimension polynomial. The two disagree for some (d, p);
// the checker reports both sides and does not adjudicate.
struct DominanceConsistency {
  double corner_eta = 0.0;
  double corner_nu = 0.5;
  double corner_exponent = 0.0;   // sup of the sharpened exponent
  double threshold = 0.0;         // 1 + p
  bool exceeds_threshold = false; // corner_exponent > 1 + p
  double poly_value = 0.0;
  bool poly_positive = false;
  bool agree = false;
};

inline DominanceConsistency consistency_check(const PhysParams& params) {
  if (!in_scattering_window(params))
    throw std::invalid_argument("consistency_check requires alpha(d) < p < 4/d");
  DominanceConsistency out;
  out.corner_eta = eta_lower_bound(params);
  out.corner_nu = 0.5;
  out.corner_exponent = detail::error_exponent_formula(params.p, out.corner_eta, out.corner_nu);
  out.threshold = 1.0 + params.p;
  out.exceeds_threshold = out.corner_exponent > out.threshold;
  const LowDimCondition poly = low_dim_condition(params);
  out.poly_value = poly.value;
  out.poly_positive = poly.positive;
  out.agree = (out.exceeds_threshold == out.poly_positive);
  return out;
}

// One error-exponent reading together with the scaling-link and breakdown
// thresholds it implies (absent when the reading does not dominate p+1).
struct LinkReading {
  double err_exponent = 0.0;
  std::optional<int> j_min;
  std::optional<double> beta_min;
};

inline LinkReading make_link_reading(const PhysParams& params, double err_exponent) {
  LinkReading r;
  r.err_exponent = err_exponent;
  r.j_min = min_scaling_link(params, err_exponent);
  if (r.j_min && params.d * params.p < 4.0)
    r.beta_min = beta_threshold(params, static_cast<double>(*r.j_min));
  return r;
}

struct ExponentReport {
  PhysParams params;
  bool scattering_window = false;
  double alpha_d = 0.0;
  double mass_critical = 0.0;
  double q = 0.0;
  double theta = 0.0;
  double err_exponent_plain = 0.0;
  std::optional<double> eta, nu, err_exponent_sharpened;
  std::optional<DominanceConsistency> consistency;
  // j/beta thresholds under the two candidate readings of the error exponent
  // (the printed corner value and the unsharpened exponent).
  std::optional<LinkReading> reading_corner;
  std::optional<LinkReading> reading_plain;
};

inline ExponentReport make_exponent_report(const PhysParams& params,
                                           std::optional<double> eta = std::nullopt,
                                           std::optional<double> nu = std::nullopt) {
  validate(params);
  ExponentReport rep;
  rep.params = params;
  rep.alpha_d = strauss_exponent(params.d);
  rep.mass_critical = mass_critical_power(params.d);
  rep.scattering_window = in_scattering_window(params);
  rep.err_exponent_plain = error_exponent_plain(params.p);
  if (params.p < rep.mass_critical) {
    rep.q = canonical_q(params);
    rep.theta = interpolation_weight(params);
  }
  if (eta && nu) {
    rep.eta = eta;
    rep.nu = nu;
    rep.err_exponent_sharpened = error_exponent_sharpened(params, *eta, *nu);
  }
  if (rep.scattering_window) {
    rep.consistency = consistency_check(params);
    rep.reading_corner = make_link_reading(params, rep.consistency->corner_exponent);
    rep.reading_plain = make_link_reading(params, rep.err_exponent_plain);
  }
  return rep;
}

}  // namespace nlslab

#endif
