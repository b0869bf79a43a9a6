#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Matrices are dense and row-major.  Lattices are stored as matrices whose
// columns are linearly independent generators inside Z^ambient.  Nothing here
// touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace trisect {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  /// Builds a rows x columns.size() matrix from column vectors.
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);
  static IntMatrix column_vector(const std::vector<Integer>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix columns(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  IntMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  std::vector<Integer> column_entries(std::size_t j) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  // Elementary operations; used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Nonzero diagonal entries of S, in divisibility order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

/// U * M * V = S with U, V unimodular and S diagonal, nonnegative and
/// divisibility-ordered.
SmithDecomposition smith_normal_form(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix H;  ///< column echelon form, pivots positive, reduced to the left
  IntMatrix V;  ///< unimodular, M * V = H
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

/// Column-style Hermite normal form with transform.
HermiteDecomposition hermite_columns(const IntMatrix& m);

/// Sublattice of Z^ambient_rank given by independent basis columns.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_rank);  ///< the zero lattice
  /// Takes the columns as a basis; throws DimensionMismatch if they are dependent.
  explicit Lattice(IntMatrix basis);
  /// Lattice spanned by arbitrary (possibly dependent) generators; basis in HNF.
  static Lattice from_generators(const IntMatrix& generators);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  /// Same lattice with its basis in column Hermite normal form.
  Lattice canonical() const;
  bool contains(const IntMatrix& vectors) const;
  /// Coordinates c with basis * c = vectors, or nullopt if some column is outside.
  std::optional<IntMatrix> coordinates(const IntMatrix& vectors) const;

  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  IntMatrix basis_;
};

/// Saturated lattice {x in Z^cols : M x = 0}.
Lattice kernel_basis(const IntMatrix& m);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);

struct QuotientData {
  std::vector<Integer> invariant_factors;  ///< torsion coefficients (> 1)
  IntMatrix complement;                    ///< elements of sup lifting a basis of the free part
};

/// Structure of sup / sub.  Throws NotSublattice if sub is not inside sup.
QuotientData lattice_quotient(const Lattice& sub, const Lattice& sup);

/// Lifts of a basis of sup / sub when sub is a direct summand of sup; throws
/// NotDirectSummand otherwise.  Prefers a subset of sup's own basis columns and
/// falls back to an SNF complement.
IntMatrix direct_complement(const Lattice& sub, const Lattice& sup);

/// Inverse over Z.  Throws DimensionMismatch if not square, NotUnimodular if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Smallest lattice containing L with torsion-free cokernel and the same rank.
Lattice saturate(const Lattice& l);

/// Exact solution X of A X = B for A with independent columns, or nullopt.
std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b);

}  // namespace trisect
