#include "trisect/surface.hpp"

#include <string>

#include "trisect/error.hpp"

namespace trisect {

IntMatrix SurfaceModel::unit(std::size_t index) const {
  IntMatrix v(rank, 1);
  v(index, 0) = 1;
  return v;
}

SurfaceModel build_surface_model(int genus, int boundary) {
  if (genus < 0) throw Error(ErrorKind::InvalidParams, "genus must be >= 0");
  if (boundary < 1) throw Error(ErrorKind::InvalidParams, "boundary count must be >= 1");

  SurfaceModel s;
  s.genus = genus;
  s.boundary = boundary;
  s.rank = static_cast<std::size_t>(2 * genus + boundary - 1);
  s.pairing = IntMatrix(s.rank, s.rank);
  s.to_relative = IntMatrix(s.rank, s.rank);

  for (int i = 1; i <= genus; ++i) {
    s.pairing(s.index_a(i), s.index_b(i)) = -1;
    s.pairing(s.index_b(i), s.index_a(i)) = 1;
    s.to_relative(s.index_a(i), s.index_a(i)) = 1;
    s.to_relative(s.index_b(i), s.index_b(i)) = 1;
  }
  for (int j = 1; j < boundary; ++j) {
    s.pairing(s.index_boundary(j), s.index_boundary(j)) = 1;
    if (j + 1 < boundary) s.pairing(s.index_boundary(j), s.index_boundary(j + 1)) = -1;
  }
  return s;
}

StandardConfiguration standard_configuration(const SurfaceModel& s, int p) {
  const int g = s.genus;
  const int b = s.boundary;
  if (p < 0 || p > g) {
    throw Error(ErrorKind::InvalidParams, "page genus must satisfy 0 <= p <= g");
  }
  const int n = g - p;
  const int l = 2 * p + b - 1;

  StandardConfiguration c;
  c.alpha.classes = IntMatrix(s.rank, static_cast<std::size_t>(n));
  c.beta.classes = IntMatrix(s.rank, static_cast<std::size_t>(n));
  c.arcs.classes = IntMatrix(s.rank, static_cast<std::size_t>(l));
  c.eta.classes = IntMatrix(s.rank, static_cast<std::size_t>(l));

  for (int i = 1; i <= n; ++i) {
    c.alpha.classes(s.index_a(i), i - 1) = 1;
    c.beta.classes(s.index_b(i), i - 1) = 1;
  }
  // Boundary part: eta_j = D_1 + ... + D_j is dual to T_j.
  for (int j = 1; j < b; ++j) {
    c.arcs.classes(s.index_boundary(j), j - 1) = 1;
    for (int m = 1; m <= j; ++m) c.eta.classes(s.index_boundary(m), j - 1) = 1;
  }
  // Page handles: eta pairs (A, B) with dual arcs (B', -A').
  for (int h = 1; h <= p; ++h) {
    const int handle = n + h;
    const std::size_t first = static_cast<std::size_t>(b - 1 + 2 * h - 2);
    c.eta.classes(s.index_a(handle), first) = 1;
    c.eta.classes(s.index_b(handle), first + 1) = 1;
    c.arcs.classes(s.index_b(handle), first) = 1;
    c.arcs.classes(s.index_a(handle), first + 1) = -1;
  }
  return c;
}

StandardConfiguration standard_configuration(int genus, int page_genus, int boundary) {
  return standard_configuration(build_surface_model(genus, boundary), page_genus);
}

namespace {

void require_rank(const SurfaceModel& s, const IntMatrix& m, const char* what) {
  if (m.rows() != s.rank) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " classes have length " +
                                                  std::to_string(m.rows()) + ", surface rank is " +
                                                  std::to_string(s.rank));
  }
}

}  // namespace

IntMatrix pairing_matrix(const SurfaceModel& s, const ArcSystem& mu, const CurveSystem& nu) {
  require_rank(s, mu.classes, "left");
  require_rank(s, nu.classes, "right");
  return mu.classes.transpose() * s.pairing * nu.classes;
}

IntMatrix pairing_matrix(const SurfaceModel& s, const CurveSystem& mu, const CurveSystem& nu) {
  require_rank(s, mu.classes, "left");
  return pairing_matrix(s, ArcSystem{s.to_relative * mu.classes}, nu);
}

IntMatrix pairing_matrix(const SurfaceModel& s, const CurveSystem& mu, const ArcSystem& nu) {
  return -pairing_matrix(s, nu, mu).transpose();
}

std::pair<CurveSystem, CurveSystem> standard_sutured_pattern(int g, int p, int b, int k) {
  if (p < 0 || p > g || b < 1) throw Error(ErrorKind::InvalidParams, "need g >= p >= 0, b >= 1");
  const int l = 2 * p + b - 1;
  if (k < l || k > g + p + b - 1) {
    throw Error(ErrorKind::InvalidParams, "need g+p+b-1 >= k >= l");
  }
  const SurfaceModel s = build_surface_model(g, b);
  const int n = g - p;
  const int dual = n - k + l;  // curves meeting their partner once

  CurveSystem delta{IntMatrix(s.rank, static_cast<std::size_t>(n))};
  CurveSystem epsilon{IntMatrix(s.rank, static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) {
    delta.classes(s.index_a(i), i - 1) = 1;
    if (i <= dual)
      epsilon.classes(s.index_b(i), i - 1) = -1;
    else
      epsilon.classes(s.index_a(i), i - 1) = 1;
  }
  return {std::move(delta), std::move(epsilon)};
}

}  // namespace trisect
