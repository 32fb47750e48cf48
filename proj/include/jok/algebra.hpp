// The five simple Euclidean Jordan algebra families as explicit structure
// tensors: Sym(n,R), Herm(n,C), Herm(n,H), the spin factor R + R^d, and the
// 27-dimensional Albert algebra Herm(3,O).
//
// Basis ordering convention (fixes the JSON coordinate encoding):
//   * matrix families: diagonal units first, then upper-triangle slots
//     (1,2),(1,3),...,(2,3),... in row-major order, each slot expanded over
//     the real basis (1, i, ...) of the composition algebra;
//   * spin factor: unit coordinate first, then the vector part;
//   * Albert: 3 diagonal units, then slots (1,2),(1,3),(2,3) with 8 octonion
//     coordinates each.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <map>
#include <string>
#include <vector>

#include "jok/errors.hpp"

namespace jok {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class Family { SymR, HermC, HermH, Spin, Albert };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SymR: return "symR";
    case Family::HermC: return "hermC";
    case Family::HermH: return "hermH";
    case Family::Spin: return "spin";
    case Family::Albert: return "albert";
  }
  return "?";
}

// Signed multiplication table of a composition algebra of dimension 1, 2, 4
// or 8, generated by Cayley-Dickson doubling with the convention
// (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)). Basis units multiply as
// e_i e_j = sign(i,j) e_{index(i,j)}.
class CompositionTable {
 public:
  static const CompositionTable& of_dim(int k) {
    static const CompositionTable t1(1), t2(2), t4(4), t8(8);
    switch (k) {
      case 1: return t1;
      case 2: return t2;
      case 4: return t4;
      case 8: return t8;
    }
    throw precondition_error("composition algebra dimension must be 1,2,4,8");
  }

  int dim() const { return dim_; }
  int sign(int i, int j) const { return sign_[i][j]; }
  int index(int i, int j) const { return index_[i][j]; }

  // z = x * y in coordinates.
  void multiply(const VectorXd& x, const VectorXd& y, VectorXd& z) const {
    z.setZero(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0.0) continue;
      for (int j = 0; j < dim_; ++j) {
        z[index_[i][j]] += sign_[i][j] * x[i] * y[j];
      }
    }
  }

  VectorXd conj(const VectorXd& x) const {
    VectorXd y = x;
    y.tail(dim_ - 1) *= -1.0;
    return y;
  }

 private:
  explicit CompositionTable(int k) : dim_(k) {
    sign_[0][0] = 1;
    index_[0][0] = 0;
    for (int m = 1; m < k; m *= 2) double_table(m);
  }

  // Cayley-Dickson step: extend the table from dimension m to 2m.
  void double_table(int m) {
    auto conj_sign = [](int j) { return j == 0 ? 1 : -1; };
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const int s = sign_[i][j];
        const int t = index_[i][j];
        // (e_i,0)(0,e_j) = (0, e_j e_i)
        sign_[i][j + m] = sign_[j][i];
        index_[i][j + m] = m + index_[j][i];
        // (0,e_i)(e_j,0) = (0, e_i conj(e_j))
        sign_[i + m][j] = conj_sign(j) * s;
        index_[i + m][j] = m + t;
        // (0,e_i)(0,e_j) = (-conj(e_j) e_i, 0)
        sign_[i + m][j + m] = -conj_sign(j) * sign_[j][i];
        index_[i + m][j + m] = index_[j][i];
      }
    }
  }

  int dim_;
  std::array<std::array<int, 8>, 8> sign_{};
  std::array<std::array<int, 8>, 8> index_{};
};

// Octonion product in the fixed 8-dimensional basis.
inline VectorXd octonion_mul(const VectorXd& a, const VectorXd& b) {
  if (a.size() != 8 || b.size() != 8)
    throw precondition_error("octonion_mul expects 8-vectors");
  VectorXd z;
  CompositionTable::of_dim(8).multiply(a, b, z);
  return z;
}

struct AlgebraDescriptor;
using Algebra = std::shared_ptr<const AlgebraDescriptor>;

// One Jordan algebra family instance. Immutable after construction; the
// structure tensor is held as the family of left-multiplication matrices
// lmul[i] = matrix of L(e_i), so S[i][j][k] = lmul[i](k, j).
struct AlgebraDescriptor {
  Family family;
  int param;  // matrix size n, or spin vector dimension d_s
  int rank;
  int dim;
  std::vector<MatrixXd> lmul;
  std::vector<MatrixXd> lmul_abs;  // |lmul|, for running error bounds
  VectorXd unit;
  VectorXd trace_coeffs;

  double structure(int i, int j, int k) const { return lmul[i](k, j); }
};

inline bool same_algebra(const AlgebraDescriptor& a,
                         const AlgebraDescriptor& b) {
  return a.family == b.family && a.param == b.param;
}

// Coordinate vector in the documented basis of one algebra.
struct Element {
  Algebra algebra;
  VectorXd coords;

  Element() = default;
  Element(Algebra a, VectorXd c) : algebra(std::move(a)), coords(std::move(c)) {
    if (!algebra) throw precondition_error("element requires an algebra");
    if (coords.size() != algebra->dim)
      throw precondition_error("coordinate length does not match algebra dim");
    if (!coords.allFinite())
      throw precondition_error("element coordinates must be finite");
  }
};

// Square real matrix acting on algebra coordinates. Houses L(x), tau(x'),
// Q(u) and the Peirce projectors.
struct LinearOperator {
  Algebra algebra;
  MatrixXd matrix;

  Element apply(const Element& x) const {
    if (!same_algebra(*algebra, *x.algebra))
      throw precondition_error("operator applied to element of wrong algebra");
    return Element(x.algebra, matrix * x.coords);
  }
};

namespace detail {

// Dense n x n matrix with entries in a composition algebra; scratch type for
// building structure tensors.
struct KMatrix {
  int n, k;
  std::vector<VectorXd> e;  // row-major n*n entries, each a k-vector

  KMatrix(int n_, int k_) : n(n_), k(k_), e(n_ * n_, VectorXd::Zero(k_)) {}
  VectorXd& at(int i, int j) { return e[i * n + j]; }
  const VectorXd& at(int i, int j) const { return e[i * n + j]; }
};

inline KMatrix kmat_mul(const CompositionTable& t, const KMatrix& a,
                        const KMatrix& b) {
  KMatrix z(a.n, a.k);
  VectorXd tmp;
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      for (int l = 0; l < a.n; ++l) {
        t.multiply(a.at(i, l), b.at(l, j), tmp);
        z.at(i, j) += tmp;
      }
    }
  }
  return z;
}

inline KMatrix kmat_jordan(const CompositionTable& t, const KMatrix& a,
                           const KMatrix& b) {
  KMatrix ab = kmat_mul(t, a, b);
  KMatrix ba = kmat_mul(t, b, a);
  for (size_t i = 0; i < ab.e.size(); ++i) {
    ab.e[i] = 0.5 * (ab.e[i] + ba.e[i]);
  }
  return ab;
}

// Hermitian matrix family coordinates <-> K-matrix form.
struct MatrixBasisLayout {
  int n, k, dim;

  MatrixBasisLayout(int n_, int k_) : n(n_), k(k_) {
    dim = n + n * (n - 1) / 2 * k;
  }

  // Coordinate index of composition-unit u in off-diagonal slot s.
  int slot_coord(int s, int u) const { return n + s * k + u; }

  KMatrix to_matrix(const CompositionTable& t, const VectorXd& coords) const {
    KMatrix m(n, k);
    for (int i = 0; i < n; ++i) m.at(i, i)[0] = coords[i];
    int s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++s) {
        VectorXd entry = coords.segment(n + s * k, k);
        m.at(i, j) = entry;
        m.at(j, i) = t.conj(entry);
      }
    }
    return m;
  }

  VectorXd to_coords(const KMatrix& m) const {
    VectorXd c = VectorXd::Zero(dim);
    for (int i = 0; i < n; ++i) c[i] = m.at(i, i)[0];
    int s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++s) {
        c.segment(n + s * k, k) = m.at(i, j);
      }
    }
    return c;
  }
};

inline int composition_dim(Family f) {
  switch (f) {
    case Family::SymR: return 1;
    case Family::HermC: return 2;
    case Family::HermH: return 4;
    case Family::Albert: return 8;
    case Family::Spin: break;
  }
  throw precondition_error("spin factor has no composition-algebra entries");
}

inline std::vector<MatrixXd> build_matrix_family_tensor(
    const MatrixBasisLayout& lay, const CompositionTable& t) {
  const int d = lay.dim;
  std::vector<KMatrix> basis;
  basis.reserve(d);
  for (int i = 0; i < d; ++i) {
    VectorXd c = VectorXd::Zero(d);
    c[i] = 1.0;
    basis.push_back(lay.to_matrix(t, c));
  }
  std::vector<MatrixXd> lmul(d, MatrixXd::Zero(d, d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      VectorXd p = lay.to_coords(kmat_jordan(t, basis[a], basis[b]));
      lmul[a].col(b) = p;
    }
  }
  return lmul;
}

inline std::vector<MatrixXd> build_spin_tensor(int ds) {
  const int d = 1 + ds;
  std::vector<MatrixXd> lmul(d, MatrixXd::Zero(d, d));
  lmul[0] = MatrixXd::Identity(d, d);
  for (int i = 1; i < d; ++i) {
    lmul[i](i, 0) = 1.0;  // e_i o e_0 = e_i
    lmul[i](0, i) = 1.0;  // e_i o e_i = e_0
  }
  return lmul;
}

}  // namespace detail

// Construct (and cache) an algebra descriptor. Throws precondition_error for
// unsupported parameters.
inline Algebra make_algebra(Family family, int param) {
  struct Key {
    Family f;
    int p;
    bool operator<(const Key& o) const {
      return f != o.f ? f < o.f : p < o.p;
    }
  };
  static std::mutex mu;
  static std::map<Key, Algebra> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(Key{family, param});
    if (it != cache.end()) return it->second;
  }

  auto desc = std::make_shared<AlgebraDescriptor>();
  desc->family = family;
  desc->param = param;
  switch (family) {
    case Family::SymR:
    case Family::HermC:
    case Family::HermH: {
      if (param < 1)
        throw precondition_error("matrix family needs size n >= 1");
      const int k = detail::composition_dim(family);
      detail::MatrixBasisLayout lay(param, k);
      desc->rank = param;
      desc->dim = lay.dim;
      desc->lmul =
          detail::build_matrix_family_tensor(lay, CompositionTable::of_dim(k));
      break;
    }
    case Family::Albert: {
      if (param != 3)
        throw precondition_error("Albert algebra is Herm(3,O); param must be 3");
      detail::MatrixBasisLayout lay(3, 8);
      desc->rank = 3;
      desc->dim = 27;
      desc->lmul =
          detail::build_matrix_family_tensor(lay, CompositionTable::of_dim(8));
      break;
    }
    case Family::Spin: {
      if (param < 1) throw precondition_error("spin factor needs d_s >= 1");
      desc->rank = 2;
      desc->dim = 1 + param;
      desc->lmul = detail::build_spin_tensor(param);
      break;
    }
  }

  desc->unit = VectorXd::Zero(desc->dim);
  desc->trace_coeffs = VectorXd::Zero(desc->dim);
  if (family == Family::Spin) {
    desc->unit[0] = 1.0;
    desc->trace_coeffs[0] = 2.0;  // tr(e) = rank = 2
  } else {
    for (int i = 0; i < desc->rank; ++i) {
      desc->unit[i] = 1.0;
      desc->trace_coeffs[i] = 1.0;
    }
  }

  // Commutativity of the structure tensor is exact by construction; guard it.
  for (int i = 0; i < desc->dim; ++i) {
    for (int j = i + 1; j < desc->dim; ++j) {
      if ((desc->lmul[i].col(j) - desc->lmul[j].col(i)).norm() != 0.0)
        throw numerical_error("structure tensor lost commutativity");
    }
  }

  desc->lmul_abs.reserve(desc->dim);
  for (const auto& m : desc->lmul) desc->lmul_abs.push_back(m.cwiseAbs());

  Algebra out = desc;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(Key{family, param}, out);
  return out;
}

inline Element make_element(const Algebra& a, VectorXd coords) {
  return Element(a, std::move(coords));
}

inline Element zero_element(const Algebra& a) {
  return Element(a, VectorXd::Zero(a->dim));
}

inline Element unit_element(const Algebra& a) { return Element(a, a->unit); }

inline void require_same_algebra(const Element& x, const Element& y) {
  if (!same_algebra(*x.algebra, *y.algebra))
    throw precondition_error("elements belong to different algebras");
}

// x o y via the structure tensor.
inline Element jordan_mul(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const auto& A = *x.algebra;
  VectorXd z = VectorXd::Zero(A.dim);
  for (int i = 0; i < A.dim; ++i) {
    const double xi = x.coords[i];
    if (xi != 0.0) z.noalias() += xi * (A.lmul[i] * y.coords);
  }
  return Element(x.algebra, std::move(z));
}

inline Element add(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return Element(x.algebra, x.coords + y.coords);
}

inline Element sub(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return Element(x.algebra, x.coords - y.coords);
}

inline Element scale(double s, const Element& x) {
  return Element(x.algebra, s * x.coords);
}

inline double trace(const Element& x) {
  return x.algebra->trace_coeffs.dot(x.coords);
}

// (tr_N(x), tr_N(x o y)); the second component is the positive definite
// trace form.
inline std::pair<double, double> trace_form(const Element& x,
                                            const Element& y) {
  require_same_algebra(x, y);
  return {trace(x), trace(jordan_mul(x, y))};
}

inline double inner(const Element& x, const Element& y) {
  return trace_form(x, y).second;
}

// Matrix of y -> x o y.
inline LinearOperator l_operator(const Element& x) {
  const auto& A = *x.algebra;
  MatrixXd L = MatrixXd::Zero(A.dim, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    const double xi = x.coords[i];
    if (xi != 0.0) L.noalias() += xi * A.lmul[i];
  }
  return LinearOperator{x.algebra, std::move(L)};
}

// Jordan power x^k (powers associate, so the iteration is unambiguous).
inline Element jordan_power(const Element& x, int k) {
  if (k < 0) throw precondition_error("jordan_power needs k >= 0");
  if (k == 0) return unit_element(x.algebra);
  Element acc = x;
  for (int i = 1; i < k; ++i) acc = jordan_mul(acc, x);
  return acc;
}

}  // namespace jok
