#pragma once

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trisect/diagram.hpp"
#include "trisect/error.hpp"
#include "trisect/intlin.hpp"

namespace testing_util {

using namespace trisect;

inline oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline IntMatrix e8() {
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  const std::size_t edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
  for (const auto& e : edges) m(e[0], e[1]) = m(e[1], e[0]) = -1;
  return m;
}

inline IntMatrix hyperbolic() { return {{0, 1}, {1, 0}}; }

/// Runs f and returns the ErrorKind it throws, or nullopt.
template <typename F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

/// Single-curve diagram alpha = beta = gamma = [A_1] on the torus.
inline Diagram all_equal_diagram() {
  TrisectionParams tp;
  tp.g = 1;
  tp.k = {1, 1, 1};
  const IntMatrix a{{1}, {0}};
  return make_diagram(tp, a, a, a);
}

// Symplectic map of the A_1, B_1, ..., A_n, B_n block given by block matrices
// acting on A- and B-coordinates.
inline IntMatrix handle_map(const SurfaceModel& s, std::size_t n, const IntMatrix& a_block,
                     const IntMatrix& b_block) {
  IntMatrix f = IntMatrix::identity(s.rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      f(s.index_a(static_cast<int>(i + 1)), s.index_a(static_cast<int>(j + 1))) = a_block(i, j);
      f(s.index_b(static_cast<int>(i + 1)), s.index_b(static_cast<int>(j + 1))) = b_block(i, j);
    }
  return f;
}

}  // namespace testing_util
