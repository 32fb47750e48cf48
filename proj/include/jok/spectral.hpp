// Spectral calculus for Jordan algebra elements: characteristic polynomial
// from power traces and Newton's identities, eigenvalues by Sturm isolation,
// complete orthogonal idempotent systems by Lagrange interpolation, signature
// and determinant.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "jok/algebra.hpp"
#include "jok/errors.hpp"
#include "jok/polynomial.hpp"

namespace jok {

constexpr double kClusterTolDefault = 1e-9;
constexpr double kZeroTolDefault = 1e-9;

// The pair (p+, p-) of positive/negative eigenvalue counts labelling an
// L-orbit.
struct Signature {
  int plus = 0;
  int minus = 0;

  int size() const { return plus + minus; }
  bool operator==(const Signature& o) const {
    return plus == o.plus && minus == o.minus;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }
};

inline Signature operator+(const Signature& a, const Signature& b) {
  return Signature{a.plus + b.plus, a.minus + b.minus};
}

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // one per cluster, descending
  std::vector<int> multiplicities;  // positive, summing to rank
  std::vector<Element> idempotents;
  std::vector<std::string> warnings;
};

namespace detail {

// Characteristic polynomial together with a per-coefficient absolute noise
// bound from running error analysis of the power-sum and Newton-identity
// recurrences. The bound is what lets the spectral code tell an exactly-zero
// eigenvalue (coefficient = pure cancellation noise) from a genuine product
// of small eigenvalues.
struct NoisyPoly {
  Eigen::VectorXd coeffs;  // ascending, monic, size rank+1
  Eigen::VectorXd noise;   // absolute error bound per coefficient
};

inline NoisyPoly char_poly_with_noise(const Element& x) {
  constexpr double eps = 2.2e-16;
  const auto& A = *x.algebra;
  const int n = A.rank;

  Eigen::VectorXd power_sums(n + 1), power_err(n + 1);
  power_sums[0] = n;
  power_err[0] = 0.0;
  Element xk = unit_element(x.algebra);
  Eigen::VectorXd amag = A.unit.cwiseAbs();  // term-magnitude bound for x^k
  const Eigen::VectorXd xabs = x.coords.cwiseAbs();
  const Eigen::VectorXd tabs = A.trace_coeffs.cwiseAbs();
  for (int k = 1; k <= n; ++k) {
    xk = jordan_mul(xk, x);
    Eigen::VectorXd next = Eigen::VectorXd::Zero(A.dim);
    for (int i = 0; i < A.dim; ++i) {
      if (xabs[i] != 0.0) next.noalias() += xabs[i] * (A.lmul_abs[i] * amag);
    }
    amag = next;
    power_sums[k] = trace(xk);
    power_err[k] = eps * A.dim * k * tabs.dot(amag);
  }

  Eigen::VectorXd elem(n + 1), elem_err(n + 1);
  elem[0] = 1.0;
  elem_err[0] = 0.0;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0, serr = 0.0, sign = 1.0;
    for (int i = 1; i <= k; ++i) {
      const double term = elem[k - i] * power_sums[i];
      s += sign * term;
      serr += std::abs(elem[k - i]) * power_err[i] +
              elem_err[k - i] * std::abs(power_sums[i]) +
              eps * std::abs(term);
      sign = -sign;
    }
    elem[k] = s / k;
    elem_err[k] = serr / k + eps * std::abs(elem[k]);
  }

  NoisyPoly out{Eigen::VectorXd(n + 1), Eigen::VectorXd(n + 1)};
  for (int k = 0; k <= n; ++k) {
    out.coeffs[n - k] = (k % 2 == 0 ? 1.0 : -1.0) * elem[k];
    out.noise[n - k] = elem_err[k];
  }
  return out;
}

}  // namespace detail

// Monic characteristic polynomial, ascending coefficients (size rank+1).
// Power sums tr(x^k) feed Newton's identities; Jordan powers associate, so
// the traces are the usual ones.
inline Eigen::VectorXd char_poly(const Element& x) {
  return detail::char_poly_with_noise(x).coeffs;
}

// Product of the Jordan eigenvalues: (-1)^n times the constant coefficient.
inline double determinant(const Element& x) {
  const Eigen::VectorXd p = char_poly(x);
  const int n = x.algebra->rank;
  return (n % 2 == 0 ? 1.0 : -1.0) * p[0];
}

namespace detail {

struct EigenClusters {
  std::vector<double> values;  // descending
  std::vector<int> multiplicities;
};

// Number of trailing coefficients that are indistinguishable from zero, i.e.
// the structural multiplicity of the zero eigenvalue. `noise_safety` scales
// the computed noise bound; a negative value switches to a flat relative
// threshold `flat_rel` on the scale-normalized coefficients (the coarse
// fallback).
inline int structural_zero_count(const NoisyPoly& p, double noise_safety,
                                 double flat_rel) {
  const int n = static_cast<int>(p.coeffs.size()) - 1;
  int k = 0;
  if (noise_safety > 0.0) {
    while (k < n && std::abs(p.coeffs[k]) <= noise_safety * p.noise[k]) ++k;
    return k;
  }
  const double s = std::max(poly::cauchy_bound(p.coeffs), 1e-300);
  Eigen::VectorXd c = p.coeffs;
  double pw = 1.0;
  for (int j = 0; j <= n; ++j) {
    c[j] *= pw;
    pw *= s;
  }
  c /= c.cwiseAbs().maxCoeff();
  while (k < n && std::abs(c[k]) <= flat_rel) ++k;
  return k;
}

// One clustering attempt with the given structural zero count: cluster the
// distinct Sturm roots at tol*scale and recover multiplicities from the power
// sums (a small Vandermonde solve). Returns nothing when the multiplicities
// fail to resolve to positive integers summing to the rank.
inline std::optional<EigenClusters> try_eigen_clusters(const Element& x,
                                                       double tol,
                                                       const NoisyPoly& np,
                                                       int zero_count) {
  const int n = x.algebra->rank;
  const Eigen::VectorXd& p = np.coeffs;
  std::vector<double> roots;
  if (zero_count < n) {
    const Eigen::VectorXd q = p.tail(p.size() - zero_count);
    roots = poly::distinct_real_roots(q, 1e-13, 0.0);
  }
  if (zero_count > 0) {
    roots.push_back(0.0);
    std::sort(roots.begin(), roots.end());
  }
  if (roots.empty()) return std::nullopt;

  double scale = 1.0;
  for (double r : roots) scale = std::max(scale, std::abs(r));
  const double cluster_tol = tol * scale;

  std::vector<double> reps;
  std::vector<int> counts;
  for (double r : roots) {
    if (!reps.empty() && r - reps.back() <= cluster_tol) {
      // running mean of the merged cluster
      reps.back() = (reps.back() * counts.back() + r) / (counts.back() + 1);
      counts.back() += 1;
    } else {
      reps.push_back(r);
      counts.push_back(1);
    }
  }

  const int k = static_cast<int>(reps.size());
  Eigen::MatrixXd vand(k, k);
  Eigen::VectorXd sums(k);
  Element xj = unit_element(x.algebra);
  for (int j = 0; j < k; ++j) {
    if (j > 0) xj = jordan_mul(xj, x);
    sums[j] = trace(xj);
    for (int i = 0; i < k; ++i) vand(j, i) = std::pow(reps[i], j);
  }
  Eigen::VectorXd mult = vand.fullPivLu().solve(sums);

  EigenClusters out;
  int total = 0;
  for (int i = 0; i < k; ++i) {
    const double rounded = std::round(mult[i]);
    if (std::abs(mult[i] - rounded) > 1e-3 || rounded < 1.0)
      return std::nullopt;
    total += static_cast<int>(rounded);
  }
  if (total != n) return std::nullopt;

  // residual check on each cluster representative
  const Eigen::VectorXd phat = p / p.cwiseAbs().maxCoeff();
  for (int i = 0; i < k; ++i) {
    const double res = std::abs(poly::eval(phat, reps[i]));
    if (res > std::max(tol, kClusterTolDefault) * std::pow(scale, n))
      throw numerical_error("root residual exceeds tolerance");
  }

  for (int i = k - 1; i >= 0; --i) {  // descending
    out.values.push_back(reps[i]);
    out.multiplicities.push_back(static_cast<int>(std::round(mult[i])));
  }
  return out;
}

// The zero-eigenvalue count comes first from the per-coefficient noise
// bounds; when the multiplicities fail to resolve (noise-split clusters in
// borderline cases) the attempt is retried with coarser flat thresholds.
// Failure is loud, never silent.
inline EigenClusters eigen_clusters(const Element& x, double tol) {
  if (tol <= 0.0) throw precondition_error("tolerance must be positive");
  const NoisyPoly np = char_poly_with_noise(x);
  int last_count = -1;
  for (auto [safety, flat] : {std::pair<double, double>{30.0, 0.0},
                              {-1.0, 1e-12},
                              {-1.0, 1e-10}}) {
    const int zero_count = structural_zero_count(np, safety, flat);
    if (zero_count == last_count) continue;
    last_count = zero_count;
    if (auto out = try_eigen_clusters(x, tol, np, zero_count)) return *out;
  }
  throw numerical_error(
      "eigenvalue multiplicities did not resolve to positive integers "
      "summing to the rank");
}

}  // namespace detail

// All rank-many eigenvalues, descending, repeated per multiplicity.
inline std::vector<double> eigenvalues(const Element& x,
                                       double tol = kClusterTolDefault) {
  const auto cl = detail::eigen_clusters(x, tol);
  std::vector<double> out;
  out.reserve(x.algebra->rank);
  for (size_t i = 0; i < cl.values.size(); ++i) {
    out.insert(out.end(), cl.multiplicities[i], cl.values[i]);
  }
  return out;
}

inline SpectralDecomposition spectral_decompose(
    const Element& x, double tol = kClusterTolDefault) {
  const auto cl = detail::eigen_clusters(x, tol);
  const int k = static_cast<int>(cl.values.size());

  SpectralDecomposition out;
  out.eigenvalues = cl.values;
  out.multiplicities = cl.multiplicities;

  double val_scale = 1.0;
  for (double v : cl.values) val_scale = std::max(val_scale, std::abs(v));
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < k; ++i)
    min_gap = std::min(min_gap, cl.values[i] - cl.values[i + 1]);
  if (k >= 2 && min_gap < 10.0 * tol * val_scale) {
    out.warnings.push_back("ill-conditioned: eigenvalue cluster separation " +
                           std::to_string(min_gap));
  }

  if (k == 1) {
    // single cluster: x = lambda * e
    out.idempotents.push_back(unit_element(x.algebra));
  } else {
    // Jordan powers x^0..x^{k-1} once, reused by every Lagrange product
    std::vector<Element> powers{unit_element(x.algebra)};
    for (int j = 1; j < k; ++j)
      powers.push_back(jordan_mul(powers.back(), x));
    for (int i = 0; i < k; ++i) {
      // expand prod_{j != i} (t - lambda_j) / (lambda_i - lambda_j)
      std::vector<double> coef{1.0};
      double denom = 1.0;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        coef.push_back(0.0);
        for (int d = static_cast<int>(coef.size()) - 1; d >= 1; --d) {
          coef[d] = coef[d - 1] - cl.values[j] * coef[d];
        }
        coef[0] *= -cl.values[j];
        denom *= cl.values[i] - cl.values[j];
      }
      Element ci = zero_element(x.algebra);
      for (size_t d = 0; d < coef.size(); ++d) {
        ci = add(ci, scale(coef[d] / denom, powers[d]));
      }
      out.idempotents.push_back(ci);
    }
  }

  Element recon = zero_element(x.algebra);
  for (int i = 0; i < k; ++i)
    recon = add(recon, scale(cl.values[i], out.idempotents[i]));
  const double resid = (recon.coords - x.coords).norm();
  if (resid > 1e-7 * (1.0 + x.coords.norm()))
    throw numerical_error("spectral reconstruction failed, residual " +
                          std::to_string(resid));
  return out;
}

// plus/minus eigenvalue counts against zero_tol * max(1, |lambda|_max).
inline Signature signature_of(const Element& x,
                              double zero_tol = kZeroTolDefault) {
  if (zero_tol <= 0.0) throw precondition_error("zero_tol must be positive");
  const auto cl = detail::eigen_clusters(x, kClusterTolDefault);
  double val_scale = 1.0;
  for (double v : cl.values) val_scale = std::max(val_scale, std::abs(v));
  Signature sig;
  for (size_t i = 0; i < cl.values.size(); ++i) {
    if (cl.values[i] > zero_tol * val_scale) sig.plus += cl.multiplicities[i];
    else if (cl.values[i] < -zero_tol * val_scale)
      sig.minus += cl.multiplicities[i];
  }
  return sig;
}

}  // namespace jok
