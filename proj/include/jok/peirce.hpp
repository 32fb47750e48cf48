// Peirce decomposition relative to an idempotent, the box operator, the
// Frobenius transformation tau(z) = exp(2 z box c), the element n_t(x) and
// the quadratic representation Q(u).
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>

#include "jok/algebra.hpp"
#include "jok/errors.hpp"
#include "jok/spectral.hpp"

namespace jok {

constexpr double kIdempotentTol = 1e-10;

inline bool is_idempotent(const Element& c, double tol = kIdempotentTol) {
  return (jordan_mul(c, c).coords - c.coords).norm() <= tol;
}

inline void require_idempotent(const Element& c) {
  if (!is_idempotent(c))
    throw precondition_error("argument is not an idempotent (||c o c - c|| > " +
                             std::to_string(kIdempotentTol) + ")");
}

// The three Peirce projectors of an idempotent c, as polynomials in L(c):
//   E1 = 2 L(c)^2 - L(c),  E12 = 4(L(c) - L(c)^2),  E0 = I - 3 L(c) + 2 L(c)^2.
struct PeirceSystem {
  Element idempotent;
  LinearOperator E1, E12, E0;
  std::array<int, 3> dims;  // dimensions of N(c,1), N(c,1/2), N(c,0)
};

inline PeirceSystem peirce_system(const Element& c) {
  require_idempotent(c);
  const auto& A = *c.algebra;
  const Eigen::MatrixXd L = l_operator(c).matrix;
  const Eigen::MatrixXd L2 = L * L;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(A.dim, A.dim);

  PeirceSystem sys{c,
                   LinearOperator{c.algebra, 2.0 * L2 - L},
                   LinearOperator{c.algebra, 4.0 * (L - L2)},
                   LinearOperator{c.algebra, I - 3.0 * L + 2.0 * L2},
                   {0, 0, 0}};

  const double traces[3] = {sys.E1.matrix.trace(), sys.E12.matrix.trace(),
                            sys.E0.matrix.trace()};
  for (int i = 0; i < 3; ++i) {
    const double rounded = std::round(traces[i]);
    if (std::abs(traces[i] - rounded) > 1e-6)
      throw numerical_error("Peirce projector trace is not near an integer");
    sys.dims[i] = static_cast<int>(rounded);
  }
  return sys;
}

// x = x1 + x12 + x0 with c o x1 = x1, c o x12 = x12/2, c o x0 = 0.
inline std::array<Element, 3> peirce_components(const Element& c,
                                                const Element& x) {
  require_same_algebra(c, x);
  const PeirceSystem sys = peirce_system(c);
  return {sys.E1.apply(x), sys.E12.apply(x), sys.E0.apply(x)};
}

// x box y = L(x o y) + [L(x), L(y)].
inline LinearOperator box_operator(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Eigen::MatrixXd Lx = l_operator(x).matrix;
  const Eigen::MatrixXd Ly = l_operator(y).matrix;
  const Eigen::MatrixXd Lxy = l_operator(jordan_mul(x, y)).matrix;
  return LinearOperator{x.algebra, Lxy + Lx * Ly - Ly * Lx};
}

inline void require_half_space(const Element& c, const Element& z) {
  const PeirceSystem sys = peirce_system(c);
  if ((sys.E12.apply(z).coords - z.coords).norm() > kIdempotentTol)
    throw precondition_error("element is not in the half Peirce space N(c,1/2)");
}

// tau(z) = exp(2 z box c) for z in N(c,1/2). The exponent is nilpotent of
// index <= 3 (it shifts the Peirce grading down), so the exponential is the
// exact polynomial I + A + A^2/2.
inline LinearOperator frobenius_map(const Element& c, const Element& z) {
  require_idempotent(c);
  require_half_space(c, z);
  const Eigen::MatrixXd A = 2.0 * box_operator(z, c).matrix;
  const int d = c.algebra->dim;
  return LinearOperator{c.algebra, Eigen::MatrixXd::Identity(d, d) + A +
                                       0.5 * (A * A)};
}

// n_t(x) = t (c + x/2 + (e-c) o x^2 / 4); equals tau(x/2) applied to tc.
inline Element n_t_element(const Element& c, double t, const Element& x) {
  require_idempotent(c);
  require_half_space(c, x);
  if (t == 0.0) throw precondition_error("n_t requires t != 0");
  const Element e = unit_element(c.algebra);
  const Element x2 = jordan_mul(x, x);
  const Element tail = jordan_mul(sub(e, c), x2);
  return scale(t, add(c, add(scale(0.5, x), scale(0.25, tail))));
}

// Q(u) = 2 L(u)^2 - L(u^2); for invertible u a structure-group element with
// det(Q(u) x) = det(u)^2 det(x).
inline LinearOperator quadratic_rep(const Element& u) {
  const Eigen::MatrixXd L = l_operator(u).matrix;
  const Eigen::MatrixXd L2 = l_operator(jordan_mul(u, u)).matrix;
  return LinearOperator{u.algebra, 2.0 * (L * L) - L2};
}

// The printed component formulas for tau(x') n_t(x) next to the exponential
// oracle. The printed n0' term "2(e-c) x'^2 c" vanishes under the documented
// left-to-right bracketing (it lands in N(c,0), which c annihilates), so the
// two n0' values generally differ; the caller gets both and the per-component
// discrepancy norms, and asserts nothing.
struct FrobeniusComparison {
  std::array<Element, 3> paper_triple;
  std::array<Element, 3> oracle_triple;
  std::array<double, 3> discrepancy;
};

inline FrobeniusComparison frobenius_components_paper(const Element& c,
                                                      const Element& xprime,
                                                      double t,
                                                      const Element& x) {
  require_idempotent(c);
  require_half_space(c, x);
  require_half_space(c, xprime);
  if (t == 0.0) throw precondition_error("n_t requires t != 0");
  const Element e = unit_element(c.algebra);
  const Element emc = sub(e, c);

  // printed formulas, innermost-first left-to-right bracketing
  const Element n1 = scale(t, c);
  const Element n12 =
      scale(t, add(scale(2.0, jordan_mul(xprime, c)), scale(0.5, x)));
  const Element term_a =
      scale(2.0, jordan_mul(jordan_mul(emc, jordan_mul(xprime, xprime)), c));
  const Element term_b = jordan_mul(emc, jordan_mul(xprime, x));
  const Element term_c = scale(0.25, jordan_mul(emc, jordan_mul(x, x)));
  const Element n0 = scale(t, add(term_a, add(term_b, term_c)));

  const Element moved = frobenius_map(c, xprime).apply(n_t_element(c, t, x));
  const auto oracle = peirce_components(c, moved);

  FrobeniusComparison out{{n1, n12, n0}, oracle, {0.0, 0.0, 0.0}};
  for (int i = 0; i < 3; ++i) {
    out.discrepancy[i] =
        (out.paper_triple[i].coords - out.oracle_triple[i].coords).norm();
  }
  return out;
}

}  // namespace jok
