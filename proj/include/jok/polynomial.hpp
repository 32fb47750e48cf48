// Real polynomial utilities: Horner evaluation, Sturm chains, root isolation
// by variation-count bisection and damped Newton polish.
//
// Polynomials are coefficient vectors in ascending order, c[0] + c[1] x + ...
// Degrees stay tiny here (the Jordan rank, <= 6), so everything is dense and
// direct. The root finder has to survive two awkward regimes at once:
// repeated roots (whose expanded polynomials are pure cancellation noise
// nearby) and genuine roots spread over many orders of magnitude (whose
// low-order coefficients look like noise). Chain elements are therefore
// rescaled individually, a gcd is only accepted when the raw remainder
// collapses, and square-free division is validated by reconstruction before
// it is trusted.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "jok/errors.hpp"

namespace jok::poly {

using Eigen::VectorXd;

inline double eval(const VectorXd& c, double x) {
  double v = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * x + c[i];
  return v;
}

inline VectorXd derivative(const VectorXd& c) {
  if (c.size() <= 1) return VectorXd::Zero(1);
  VectorXd d(c.size() - 1);
  for (int i = 1; i < c.size(); ++i) d[i - 1] = i * c[i];
  return d;
}

inline int degree(const VectorXd& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] != 0.0) return i;
  }
  return -1;  // zero polynomial
}

// Remainder of u / v; the head cancellations are exact by construction.
inline VectorXd remainder(const VectorXd& u, const VectorXd& v) {
  const int dv = degree(v);
  VectorXd r = u;
  for (int k = degree(r); k >= dv && k >= 0; k = degree(r)) {
    const double q = r[k] / v[dv];
    for (int j = 0; j < dv; ++j) r[k - dv + j] -= q * v[j];
    r[k] = 0.0;
  }
  const int dr = degree(r);
  return dr < 0 ? VectorXd::Zero(1) : VectorXd(r.head(dr + 1));
}

// Quotient of u / v (any remainder is discarded).
inline VectorXd quotient(const VectorXd& u, const VectorXd& v) {
  const int du = degree(u), dv = degree(v);
  if (dv < 0) throw numerical_error("polynomial division by zero");
  if (du < dv) return VectorXd::Zero(1);
  VectorXd r = u;
  VectorXd q = VectorXd::Zero(du - dv + 1);
  for (int k = du; k >= dv; --k) {
    const double f = r[k] / v[dv];
    q[k - dv] = f;
    for (int j = 0; j < dv; ++j) r[k - dv + j] -= f * v[j];
    r[k] = 0.0;
  }
  return q;
}

inline VectorXd convolve(const VectorXd& a, const VectorXd& b) {
  VectorXd c = VectorXd::Zero(a.size() + b.size() - 1);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

class SturmChain {
 public:
  explicit SturmChain(const VectorXd& p) {
    VectorXd p0 = p / p.cwiseAbs().maxCoeff();
    chain_.push_back(p0);
    VectorXd p1 = derivative(p0);
    if (degree(p1) < 1) {
      if (degree(p1) == 0) chain_.push_back(p1 / std::abs(p1[0]));
      return;
    }
    chain_.push_back(p1 / p1.cwiseAbs().maxCoeff());
    while (true) {
      const VectorXd& a = chain_[chain_.size() - 2];
      const VectorXd& b = chain_.back();
      if (degree(b) == 0) break;
      VectorXd r = remainder(a, b);
      const double rnorm = r.cwiseAbs().maxCoeff();
      if (rnorm <= kGcdTol) {
        gcd_degree_ = degree(b);
        break;
      }
      // normalize to unit max-coefficient (positive scaling keeps the Sturm
      // property) and drop coefficients that are noise at the remainder's
      // own scale
      r = -r / rnorm;
      for (int i = 0; i < r.size(); ++i) {
        if (std::abs(r[i]) <= kOwnScaleChop) r[i] = 0.0;
      }
      const int dr = degree(r);
      if (dr < 0) {
        gcd_degree_ = degree(b);
        break;
      }
      chain_.push_back(r.head(dr + 1));
    }
  }

  // Degree of the detected gcd of p and p' (0 when p is numerically
  // square-free).
  int gcd_degree() const { return gcd_degree_; }
  const VectorXd& last() const { return chain_.back(); }

  // Number of sign variations at x (zeros skipped).
  int variations(double x) const {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain_) {
      const double v = eval(p, x);
      const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  // Distinct real roots in (a, b].
  int distinct_roots(double a, double b) const {
    return variations(a) - variations(b);
  }

 private:
  static constexpr double kGcdTol = 1e-11;
  static constexpr double kOwnScaleChop = 1e-14;
  std::vector<VectorXd> chain_;
  int gcd_degree_ = 0;
};

// Cauchy bound: all real roots of p lie in (-B, B).
inline double cauchy_bound(const VectorXd& p) {
  const int n = degree(p);
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(p[i] / p[n]));
  return 1.0 + m;
}

namespace detail {

// Isolate and refine all real roots of a square-free-ish polynomial using
// its Sturm chain; ascending.
inline std::vector<double> isolate_and_refine(const VectorXd& q,
                                              double width_rel) {
  const int n = degree(q);
  if (n <= 0) return {};
  if (n == 1) return {-q[0] / q[1]};
  SturmChain chain(q);
  const double bound = cauchy_bound(q);
  const double lo = -bound - 1.0, hi = bound + 1.0;

  struct Interval {
    double a, b;
    int count;
  };
  std::vector<Interval> stack{{lo, hi, chain.distinct_roots(lo, hi)}};
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count <= 0) continue;
    if (iv.count == 1 || iv.b - iv.a < width_rel) {
      isolated.push_back(iv);
      continue;
    }
    const double mid = 0.5 * (iv.a + iv.b);
    const int left = chain.distinct_roots(iv.a, mid);
    stack.push_back({iv.a, mid, left});
    stack.push_back({mid, iv.b, iv.count - left});
  }

  const VectorXd dq = derivative(q);
  const double width = width_rel * std::max(1.0, bound);
  std::vector<double> roots;
  roots.reserve(isolated.size());
  for (auto iv : isolated) {
    while (iv.b - iv.a > width) {
      const double mid = 0.5 * (iv.a + iv.b);
      if (chain.distinct_roots(iv.a, mid) >= 1) {
        iv.b = mid;
      } else {
        iv.a = mid;
      }
    }
    double x = 0.5 * (iv.a + iv.b);
    double fx = std::abs(eval(q, x));
    for (int step = 0; step < 5 && fx > 0.0; ++step) {
      const double d = eval(dq, x);
      if (d == 0.0) break;
      double dx = eval(q, x) / d;
      bool accepted = false;
      for (int damp = 0; damp < 4; ++damp) {
        const double cand = x - dx;
        const double fc = std::abs(eval(q, cand));
        if (fc < fx) {
          x = cand;
          fx = fc;
          accepted = true;
          break;
        }
        dx *= 0.5;
      }
      if (!accepted) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

// All distinct real roots of p, ascending. Exact zero roots are factored out
// structurally (trailing coefficients at fp-noise level; `zero_chop` is
// relative to the scaled, normalized coefficients and must stay above the
// noise floor but below any genuine product of small roots), repeated roots
// are reduced to the square-free part via the Sturm-chain gcd when the
// division reconstructs the input, and the roots are refined by Sturm
// bisection plus damped Newton.
inline std::vector<double> distinct_real_roots(const VectorXd& p_in,
                                               double width_rel = 1e-13,
                                               double zero_chop = 3e-14) {
  const int n = degree(p_in);
  if (n <= 0) return {};

  // rescale lambda = s * mu so all roots land in roughly [-1, 1]
  const double s = std::max(cauchy_bound(p_in), 1e-300);
  VectorXd c(n + 1);
  double pw = 1.0;
  for (int j = 0; j <= n; ++j) {
    c[j] = p_in[j] * pw;
    pw *= s;
  }
  c /= c.cwiseAbs().maxCoeff();

  // factor exact zero roots: trailing coefficients at noise level
  int zeros = 0;
  while (zeros < n && std::abs(c[zeros]) <= zero_chop) ++zeros;
  VectorXd q = c.tail(c.size() - zeros);

  std::vector<double> mu_roots;
  if (degree(q) >= 1) {
    SturmChain chain(q);
    bool use_square_free = false;
    VectorXd qsf;
    if (chain.gcd_degree() >= 1) {
      const VectorXd& g = chain.last();
      qsf = quotient(q, g);
      const VectorXd recon = convolve(qsf, g);
      if ((recon - q).cwiseAbs().maxCoeff() <= 1e-8 * q.cwiseAbs().maxCoeff())
        use_square_free = true;
    }
    mu_roots = detail::isolate_and_refine(use_square_free ? qsf : q,
                                          width_rel);
  }

  std::vector<double> roots;
  roots.reserve(mu_roots.size() + 1);
  for (double m : mu_roots) roots.push_back(s * m);
  if (zeros > 0) roots.push_back(0.0);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace jok::poly
