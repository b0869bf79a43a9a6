#include "trisect/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "trisect/error.hpp"

namespace trisect {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotSublattice: return "NotSublattice";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::SymmetryViolated: return "SymmetryViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingArcs: return "MissingArcs";
    case ErrorKind::ChainConditionViolated: return "ChainConditionViolated";
    case ErrorKind::NotStandardPosition: return "NotStandardPosition";
    case ErrorKind::NotDirectSummand: return "NotDirectSummand";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::H1NotZero: return "H1NotZero";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<Integer>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorKind::DimensionMismatch,
                  "column " + std::to_string(j) + " has length " +
                      std::to_string(columns[j].size()) + ", expected " + std::to_string(rows));
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Integer>& v) {
  return from_columns(v.size(), {v});
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::vector<Integer> IntMatrix::column_entries(std::size_t j) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "set_block out of range");
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ", ";
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "sum of differently shaped matrices");
  }
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v = -v;
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hcat row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vcat column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Fraction-free (Bareiss) elimination; no transform is tracked.  Pivot columns
// form the lexicographically first maximal independent set of columns.
std::vector<std::size_t> pivot_columns(const IntMatrix& m) {
  std::vector<std::size_t> pivots;
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return pivot_columns(m).size(); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero magnitude in the trailing block starting at (t, t).
std::optional<Position> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || cmpabs(a(i, j), a(best->row, best->col)) < 0) best = Position{i, j};
    }
  return best;
}

// Smallest nonzero magnitude in row t and column t (from index t on).
Position smallest_in_cross(const IntMatrix& a, std::size_t t) {
  Position best{t, t};
  for (std::size_t i = t + 1; i < a.rows(); ++i)
    if (a(i, t) != 0 && (a(best.row, best.col) == 0 || cmpabs(a(i, t), a(best.row, best.col)) < 0))
      best = {i, t};
  for (std::size_t j = t + 1; j < a.cols(); ++j)
    if (a(t, j) != 0 && (a(best.row, best.col) == 0 || cmpabs(a(t, j), a(best.row, best.col)) < 0))
      best = {t, j};
  return best;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i < n && S(i, i) != 0; ++i) out.push_back(S(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    a.swap_rows(t, pivot->row);
    u.swap_rows(t, pivot->row);
    a.swap_cols(t, pivot->col);
    v.swap_cols(t, pivot->col);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        Position p = smallest_in_cross(a, t);
        a.swap_rows(t, p.row);
        u.swap_rows(t, p.row);
        a.swap_cols(t, p.col);
        v.swap_cols(t, p.col);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      a.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  if (!(u * m * v == a)) {
    throw std::logic_error("smith_normal_form: U*M*V != S");
  }
  return {std::move(u), std::move(a), std::move(v)};
}

// ---------------------------------------------------------------------------
// Hermite normal form (column style)

HermiteDecomposition hermite_columns(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix v = IntMatrix::identity(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t col = 0;

  for (std::size_t i = 0; i < h.rows() && col < h.cols(); ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = col; j < h.cols(); ++j)
        if (h(i, j) != 0 && (!best || cmpabs(h(i, j), h(i, *best)) < 0)) best = j;
      if (!best) break;
      h.swap_cols(col, *best);
      v.swap_cols(col, *best);
      bool clean = true;
      for (std::size_t j = col + 1; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        Integer q = h(i, j) / h(i, col);
        h.add_col_multiple(j, col, -q);
        v.add_col_multiple(j, col, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(i, col) == 0) continue;
    if (h(i, col) < 0) {
      h.negate_col(col);
      v.negate_col(col);
    }
    for (std::size_t c = 0; c < col; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(i, col).get_mpz_t());
      h.add_col_multiple(c, col, -q);
      v.add_col_multiple(c, col, -q);
    }
    pivots.push_back(i);
    ++col;
  }
  return {std::move(h), std::move(v), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Solving and lattices

std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_exact row mismatch");
  const HermiteDecomposition hd = hermite_columns(a);
  const std::size_t r = hd.rank();
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t row = hd.pivot_rows[k];
      Integer rest = b(row, c);
      for (std::size_t p = 0; p < k; ++p) rest -= hd.H(row, p) * y(p, c);
      if (rest % hd.H(row, k) != 0) return std::nullopt;
      y(k, c) = rest / hd.H(row, k);
    }
  }
  if (!(hd.H * y == b)) return std::nullopt;
  return hd.V * y;
}

Lattice::Lattice(std::size_t ambient_rank) : basis_(ambient_rank, 0) {}

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (trisect::rank(basis_) != basis_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "lattice basis columns are linearly dependent");
  }
}

Lattice Lattice::from_generators(const IntMatrix& generators) {
  HermiteDecomposition hd = hermite_columns(generators);
  Lattice l;
  l.basis_ = hd.H.columns(0, hd.rank());
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  Lattice l;
  l.basis_ = IntMatrix::identity(ambient_rank);
  return l;
}

Lattice Lattice::canonical() const { return from_generators(basis_); }

std::optional<IntMatrix> Lattice::coordinates(const IntMatrix& vectors) const {
  return solve_exact(basis_, vectors);
}

bool Lattice::contains(const IntMatrix& vectors) const { return coordinates(vectors).has_value(); }

bool operator==(const Lattice& a, const Lattice& b) {
  return a.ambient_rank() == b.ambient_rank() && a.rank() == b.rank() &&
         a.canonical().basis() == b.canonical().basis();
}

Lattice kernel_basis(const IntMatrix& m) {
  HermiteDecomposition hd = hermite_columns(m);
  const std::size_t r = hd.rank();
  return Lattice::from_generators(hd.V.columns(r, m.cols() - r));
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw Error(ErrorKind::DimensionMismatch, "intersection of lattices in different ambients");
  }
  const Lattice k = kernel_basis(hcat(a.basis(), -b.basis()));
  const IntMatrix coeffs = k.basis().block(0, 0, a.rank(), k.rank());
  return Lattice::from_generators(a.basis() * coeffs);
}

QuotientData lattice_quotient(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_rank() != sup.ambient_rank()) {
    throw Error(ErrorKind::DimensionMismatch, "quotient of lattices in different ambients");
  }
  auto coords = sup.coordinates(sub.basis());
  if (!coords) throw Error(ErrorKind::NotSublattice, "sub is not contained in sup");
  const SmithDecomposition snf = smith_normal_form(*coords);
  QuotientData out;
  for (const Integer& f : snf.invariant_factors())
    if (f != 1) out.invariant_factors.push_back(f);
  const std::size_t r = snf.rank();
  const IntMatrix u_inv = unimodular_inverse(snf.U);
  out.complement = sup.basis() * u_inv.columns(r, sup.rank() - r);
  return out;
}

IntMatrix direct_complement(const Lattice& sub, const Lattice& sup) {
  const QuotientData q = lattice_quotient(sub, sup);
  if (!q.invariant_factors.empty()) {
    throw Error(ErrorKind::NotDirectSummand, "sublattice is not a direct summand");
  }
  const std::size_t need = sup.rank() - sub.rank();
  const IntMatrix& gens = sup.basis();

  IntMatrix chosen(sup.ambient_rank(), 0);
  for (const std::size_t c : pivot_columns(hcat(sub.basis(), gens))) {
    if (c < sub.rank()) continue;
    if (chosen.cols() == need) break;
    chosen = hcat(chosen, gens.column(c - sub.rank()));
  }
  if (chosen.cols() == need) {
    const Lattice spanned(hcat(sub.basis(), chosen));
    if (lattice_quotient(spanned, sup).invariant_factors.empty()) return chosen;
  }
  return q.complement;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const SmithDecomposition snf = smith_normal_form(m);
  if (!snf.S.is_identity()) {
    throw Error(ErrorKind::NotUnimodular, "|det| != 1 for " + m.to_string());
  }
  // U M V = I  =>  M^{-1} = V U
  return snf.V * snf.U;
}

Lattice saturate(const Lattice& l) {
  const Lattice orthogonal = kernel_basis(l.basis().transpose());
  return kernel_basis(orthogonal.basis().transpose());
}

}  // namespace trisect
