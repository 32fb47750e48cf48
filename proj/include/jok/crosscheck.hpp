// Independent reference routines used by the verification suites: ambient
// matrix embeddings of the associative families and a hand-rolled cyclic
// Jacobi eigensolver. Nothing here touches the structure-tensor code paths
// it is used to check.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "jok/algebra.hpp"
#include "jok/errors.hpp"

namespace jok::crosscheck {

using Eigen::MatrixXd;

// Real dimension of one matrix entry in the ambient real embedding.
inline int embedding_multiplicity(Family f) {
  switch (f) {
    case Family::SymR: return 1;
    case Family::HermC: return 2;
    case Family::HermH: return 4;
    default:
      throw precondition_error("no associative real embedding for this family");
  }
}

namespace detail {

// Left-regular representation of one composition-algebra entry: 1x1 for R,
// the [[a,-b],[b,a]] block for C, the 4x4 quaternion block for H.
// Conjugation corresponds to block transpose.
inline MatrixXd entry_block(const Eigen::VectorXd& q, int k) {
  MatrixXd b(k, k);
  if (k == 1) {
    b(0, 0) = q[0];
  } else if (k == 2) {
    b << q[0], -q[1], q[1], q[0];
  } else {
    b << q[0], -q[1], -q[2], -q[3],
         q[1],  q[0], -q[3],  q[2],
         q[2],  q[3],  q[0], -q[1],
         q[3], -q[2],  q[1],  q[0];
  }
  return b;
}

inline Eigen::VectorXd entry_from_block(const MatrixXd& b, int k) {
  return b.col(0).head(k);
}

}  // namespace detail

// Ambient real symmetric matrix of a SymR/HermC/HermH element (kn x kn).
inline MatrixXd real_embedding(const Element& x) {
  const auto& a = *x.algebra;
  const int k = embedding_multiplicity(a.family);
  const int n = a.param;
  MatrixXd m = MatrixXd::Zero(k * n, k * n);
  for (int i = 0; i < n; ++i) {
    m.block(i * k, i * k, k, k) =
        x.coords[i] * MatrixXd::Identity(k, k);
  }
  int s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++s) {
      const Eigen::VectorXd q = x.coords.segment(n + s * k, k);
      const MatrixXd b = detail::entry_block(q, k);
      m.block(i * k, j * k, k, k) = b;
      m.block(j * k, i * k, k, k) = b.transpose();
    }
  }
  return m;
}

inline Element from_real_embedding(const Algebra& a, const MatrixXd& m) {
  const int k = embedding_multiplicity(a->family);
  const int n = a->param;
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(a->dim);
  for (int i = 0; i < n; ++i) coords[i] = m(i * k, i * k);
  int s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++s) {
      coords.segment(n + s * k, k) =
          detail::entry_from_block(m.block(i * k, j * k, k, k), k);
    }
  }
  return Element(a, coords);
}

// (XY + YX)/2 through the ambient embedding.
inline Element ambient_jordan_mul(const Element& x, const Element& y) {
  const MatrixXd mx = real_embedding(x);
  const MatrixXd my = real_embedding(y);
  return from_real_embedding(x.algebra, 0.5 * (mx * my + my * mx));
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
// descending.
inline std::vector<double> jacobi_eigenvalues(MatrixXd m) {
  const int n = static_cast<int>(m.rows());
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    if (off <= 1e-28 * scale * scale) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(m(p, q)) <= 1e-300) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        const double t =
            (theta >= 0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double mip = m(i, p), miq = m(i, q);
          m(i, p) = c * mip - s * miq;
          m(i, q) = s * mip + c * miq;
        }
        for (int i = 0; i < n; ++i) {
          const double mpi = m(p, i), mqi = m(q, i);
          m(p, i) = c * mpi - s * mqi;
          m(q, i) = s * mpi + c * mqi;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = m(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

// Jordan eigenvalues of an associative-family element through its embedding
// (the ambient spectrum with each value divided out to multiplicity one per
// composition-algebra block), descending.
inline std::vector<double> ambient_jordan_eigenvalues(const Element& x) {
  const int k = embedding_multiplicity(x.algebra->family);
  const auto ev = jacobi_eigenvalues(real_embedding(x));
  std::vector<double> out;
  out.reserve(ev.size() / k);
  for (size_t i = 0; i < ev.size(); i += k) {
    double mean = 0.0;
    for (int j = 0; j < k; ++j) mean += ev[i + j];
    out.push_back(mean / k);
  }
  return out;
}

}  // namespace jok::crosscheck
