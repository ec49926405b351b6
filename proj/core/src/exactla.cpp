#include "skeinpf/exactla.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "skeinpf/errors.hpp"

namespace skeinpf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("IntMatrix: " + std::to_string(entries_.size()) +
                            " entries for a " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntMatrix IntMatrix::from_sl2(const SL2Matrix& g) {
  return {2, 2, {g.a(), g.b(), g.c(), g.d()}};
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> diag) {
  IntMatrix d(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ',';
      out += (*this)(i, j).get_str();
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) {
    throw DimensionMismatch("matrix product of " + std::to_string(x.rows()) +
                            "x" + std::to_string(x.cols()) + " and " +
                            std::to_string(y.rows()) + "x" +
                            std::to_string(y.cols()));
  }
  IntMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t l = 0; l < x.cols(); ++l) {
      const BigInt& xil = x(i, l);
      if (sgn(xil) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), xil.get_mpz_t(), y(l, j).get_mpz_t());
      }
    }
  }
  return out;
}

namespace {

void require_same_shape(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("matrix shapes differ");
  }
}

}  // namespace

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  require_same_shape(x, y);
  IntMatrix out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) += y(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  require_same_shape(x, y);
  IntMatrix out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) -= y(i, j);
  return out;
}

std::vector<BigInt> operator*(const IntMatrix& x, std::span<const BigInt> v) {
  if (x.cols() != v.size()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " for a matrix with " + std::to_string(x.cols()) +
                            " columns");
  }
  std::vector<BigInt> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      mpz_addmul(out[i].get_mpz_t(), x(i, j).get_mpz_t(), v[j].get_mpz_t());
  return out;
}

IntMatrix kronecker(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (sgn(x(i, j)) == 0) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l)
          out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> diag;
  const std::size_t r = std::min(D.rows(), D.cols());
  diag.reserve(r);
  for (std::size_t i = 0; i < r; ++i) diag.push_back(D(i, i));
  return diag;
}

namespace {

// Working state for the elimination. Every row operation on A is mirrored on
// U (rows) and inversely on U^{-1} (columns); column operations go to V.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : a_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_step(t)) break;
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
    return {std::move(u_), std::move(a_), std::move(v_), std::move(u_inv_)};
  }

 private:
  // Returns false once the active block is entirely zero.
  bool reduce_step(std::size_t t) {
    BigInt q;
    for (;;) {
      auto pivot = min_pivot(t);
      if (!pivot) return false;
      if (pivot->first != t) swap_rows(t, pivot->first);
      if (pivot->second != t) swap_cols(t, pivot->second);

      bool residue_left = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        row_submul(i, t, q);
        if (sgn(a_(i, t)) != 0) residue_left = true;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        col_submul(j, t, q);
        if (sgn(a_(t, j)) != 0) residue_left = true;
      }
      if (residue_left) continue;

      auto bad_row = non_divisible_row(t);
      if (!bad_row) return true;
      row_submul(t, *bad_row, BigInt(-1));
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (sgn(a_(i, j)) == 0) continue;
        if (!best || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(best->first, best->second).get_mpz_t()) < 0) {
          best = {i, j};
        }
      }
    return best;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) return i;
    return std::nullopt;
  }

  // row_i -= q * row_src
  void row_submul(std::size_t i, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      mpz_submul(a_(i, j).get_mpz_t(), q.get_mpz_t(), a_(src, j).get_mpz_t());
    for (std::size_t j = 0; j < u_.cols(); ++j)
      mpz_submul(u_(i, j).get_mpz_t(), q.get_mpz_t(), u_(src, j).get_mpz_t());
    for (std::size_t r = 0; r < u_inv_.rows(); ++r)
      mpz_addmul(u_inv_(r, src).get_mpz_t(), q.get_mpz_t(), u_inv_(r, i).get_mpz_t());
  }

  // col_j -= q * col_src
  void col_submul(std::size_t j, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      mpz_submul(a_(i, j).get_mpz_t(), q.get_mpz_t(), a_(i, src).get_mpz_t());
    for (std::size_t i = 0; i < v_.rows(); ++i)
      mpz_submul(v_(i, j).get_mpz_t(), q.get_mpz_t(), v_(i, src).get_mpz_t());
  }

  void swap_rows(std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < a_.cols(); ++j) mpz_swap(a_(x, j).get_mpz_t(), a_(y, j).get_mpz_t());
    for (std::size_t j = 0; j < u_.cols(); ++j) mpz_swap(u_(x, j).get_mpz_t(), u_(y, j).get_mpz_t());
    for (std::size_t r = 0; r < u_inv_.rows(); ++r)
      mpz_swap(u_inv_(r, x).get_mpz_t(), u_inv_(r, y).get_mpz_t());
  }

  void swap_cols(std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < a_.rows(); ++i) mpz_swap(a_(i, x).get_mpz_t(), a_(i, y).get_mpz_t());
    for (std::size_t i = 0; i < v_.rows(); ++i) mpz_swap(v_(i, x).get_mpz_t(), v_(i, y).get_mpz_t());
  }

  void negate_row(std::size_t x) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(x, j) = -a_(x, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(x, j) = -u_(x, j);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, x) = -u_inv_(r, x);
  }

  IntMatrix a_, u_, u_inv_, v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  return SmithReducer(a).run();
}

BigInt CokernelStructure::torsion_size() const {
  BigInt size = 1;
  for (const auto& f : invariant_factors) size *= f;
  return size;
}

std::vector<std::size_t> CokernelStructure::torsion_coordinates() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    if (diagonal[i] > 1) idx.push_back(i);
  return idx;
}

CokernelStructure cokernel(const IntMatrix& a) {
  if (!a.square()) throw PreconditionError("cokernel: matrix must be square");
  SmithDecomposition snf = smith_normal_form(a);
  CokernelStructure c;
  c.ambient_dim = a.rows();
  c.diagonal = snf.diagonal();
  for (const auto& d : c.diagonal) {
    if (sgn(d) == 0) ++c.free_rank;
    else if (d > 1) c.invariant_factors.push_back(d);
  }
  c.basis_map = std::move(snf.U);
  c.basis_map_inverse = std::move(snf.U_inverse);
  c.relations = a;
  return c;
}

bool TorsionCoordinates::is_zero() const {
  if (free_part_nonzero) return false;
  return std::all_of(residues.begin(), residues.end(),
                     [](const BigInt& r) { return sgn(r) == 0; });
}

TorsionCoordinates project_to_torsion(const CokernelStructure& c,
                                      std::span<const BigInt> v) {
  if (v.size() != c.ambient_dim) {
    throw DimensionMismatch("project_to_torsion: vector of length " +
                            std::to_string(v.size()) + ", ambient dimension " +
                            std::to_string(c.ambient_dim));
  }
  std::vector<BigInt> y = c.basis_map * v;
  TorsionCoordinates out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const BigInt& d = c.diagonal[i];
    if (sgn(d) == 0) {
      if (sgn(y[i]) != 0) out.free_part_nonzero = true;
    } else if (d > 1) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
      out.residues.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BigInt> TorsionEndomorphism::apply(std::span<const BigInt> residues) const {
  if (residues.size() != moduli.size()) {
    throw DimensionMismatch("torsion endomorphism applied to wrong length");
  }
  std::vector<BigInt> out(moduli.size());
  for (std::size_t r = 0; r < moduli.size(); ++r) {
    for (std::size_t s = 0; s < moduli.size(); ++s)
      mpz_addmul(out[r].get_mpz_t(), matrix(r, s).get_mpz_t(), residues[s].get_mpz_t());
    mpz_fdiv_r(out[r].get_mpz_t(), out[r].get_mpz_t(), moduli[r].get_mpz_t());
  }
  return out;
}

bool TorsionEndomorphism::is_identity() const {
  for (std::size_t r = 0; r < moduli.size(); ++r)
    for (std::size_t s = 0; s < moduli.size(); ++s)
      if (matrix(r, s) != (r == s ? 1 : 0)) return false;
  return true;
}

TorsionEndomorphism induced_endomorphism(const CokernelStructure& c,
                                         const IntMatrix& m) {
  if (m.rows() != c.ambient_dim || m.cols() != c.ambient_dim) {
    throw DimensionMismatch("induced_endomorphism: endomorphism has the wrong size");
  }
  if (m * c.relations != c.relations * m) {
    throw CommutationError("induced_endomorphism: M does not commute with the relation matrix");
  }
  IntMatrix w = c.basis_map * m * c.basis_map_inverse;
  auto tors = c.torsion_coordinates();
  TorsionEndomorphism e;
  e.moduli = c.invariant_factors;
  e.matrix = IntMatrix(tors.size(), tors.size());
  for (std::size_t r = 0; r < tors.size(); ++r) {
    const BigInt& d = c.diagonal[tors[r]];
    for (std::size_t s = 0; s < tors.size(); ++s) {
      mpz_fdiv_r(e.matrix(r, s).get_mpz_t(), w(tors[r], tors[s]).get_mpz_t(), d.get_mpz_t());
    }
  }
  return e;
}

std::vector<BigInt> elementary_divisors(std::span<const BigInt> factors) {
  std::vector<BigInt> out;
  for (BigInt n : factors) {
    n = abs(n);
    if (n <= 1) continue;
    for (BigInt p = 2; p * p <= n; ++p) {
      if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) continue;
      BigInt power = 1;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        power *= p;
      }
      out.push_back(power);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skeinpf
