#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skeinpf/bigint.hpp"
#include "skeinpf/sl2z.hpp"

namespace skeinpf {

/// Dense rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_sl2(const SL2Matrix& g);
  static IntMatrix diagonal(std::span<const BigInt> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// "a,b,...;c,d,...".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
std::vector<BigInt> operator*(const IntMatrix& x, std::span<const BigInt> v);

/// Kronecker product x (tensor) y.
IntMatrix kronecker(const IntMatrix& x, const IntMatrix& y);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& a);

/// U A V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// U^{-1}, maintained alongside U.
  IntMatrix U_inverse;

  /// d_1, ..., d_min(rows, cols).
  std::vector<BigInt> diagonal() const;
};

/// Smith normal form by minimal-pivot Euclidean elimination.
///
/// Each step moves the nonzero entry of least absolute value in the active
/// block to the pivot (ties go to the lowest (row, col)), clears its row and
/// column, and folds in any row whose entries the pivot fails to divide.
/// The output depends only on the input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Structure of Z^n / im(A) for a square A.
struct CokernelStructure {
  std::size_t ambient_dim = 0;
  std::size_t free_rank = 0;
  /// Diagonal entries > 1 in divisibility order.
  std::vector<BigInt> invariant_factors;
  /// Maps ambient coordinates to Smith coordinates (the U of U A V = D).
  IntMatrix basis_map;
  IntMatrix basis_map_inverse;
  /// Full Smith diagonal, one entry per Smith coordinate.
  std::vector<BigInt> diagonal;
  /// The presenting matrix A.
  IntMatrix relations;

  BigInt torsion_size() const;
  /// Smith coordinates whose diagonal entry exceeds 1, in order.
  std::vector<std::size_t> torsion_coordinates() const;
};

CokernelStructure cokernel(const IntMatrix& a);

struct TorsionCoordinates {
  /// Least nonnegative residues, one per invariant factor.
  std::vector<BigInt> residues;
  /// The image of v in the free quotient is nonzero.
  bool free_part_nonzero = false;

  bool is_zero() const;
};

/// Coordinates of the coset v + im(A) in the torsion summand.
/// Throws DimensionMismatch if v has the wrong length.
TorsionCoordinates project_to_torsion(const CokernelStructure& c,
                                      std::span<const BigInt> v);

/// An endomorphism of Z/d_1 + ... + Z/d_r in residue coordinates.
struct TorsionEndomorphism {
  std::vector<BigInt> moduli;
  /// r x r; column j is the image of the j-th generator.
  IntMatrix matrix;

  std::vector<BigInt> apply(std::span<const BigInt> residues) const;
  bool is_identity() const;
};

/// The map induced on coker(A)_tors by an M commuting with A.
/// Throws CommutationError if M A != A M.
TorsionEndomorphism induced_endomorphism(const CokernelStructure& c,
                                         const IntMatrix& m);

/// Primary decomposition: the multiset of prime powers of Z/d_1 + ... + Z/d_r,
/// sorted. Two finite abelian groups are isomorphic iff these agree.
std::vector<BigInt> elementary_divisors(std::span<const BigInt> factors);

}  // namespace skeinpf
