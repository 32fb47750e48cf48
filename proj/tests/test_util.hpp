#pragma once

#include <vector>

#include "jok/algebra.hpp"
#include "jok/rng.hpp"

namespace jok::testutil {

inline std::vector<Algebra> desk_algebras() {
  return {make_algebra(Family::SymR, 4), make_algebra(Family::HermC, 3),
          make_algebra(Family::HermH, 3), make_algebra(Family::Spin, 10),
          make_algebra(Family::Albert, 3)};
}

inline Element random_element(const Algebra& a, Rng& rng, double sigma = 1.0) {
  Eigen::VectorXd coords(a->dim);
  for (int i = 0; i < a->dim; ++i) coords[i] = sigma * rng.gaussian();
  return Element(a, coords);
}

inline Eigen::VectorXd random_octonion(Rng& rng) {
  Eigen::VectorXd v(8);
  for (int i = 0; i < 8; ++i) v[i] = rng.gaussian();
  return v;
}

}  // namespace jok::testutil
