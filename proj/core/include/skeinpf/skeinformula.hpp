#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skeinpf/bigint.hpp"
#include "skeinpf/cycle_type.hpp"
#include "skeinpf/series.hpp"
#include "skeinpf/sl2z.hpp"

namespace skeinpf {

/// Exact polynomial with rational coefficients, ascending degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  BigRational coefficient(std::size_t i) const;
  BigRational evaluate(const BigInt& x) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial scaled(const BigRational& s) const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// e.g. "1/4*x^4 - 3/4*x^2 + 1/2*x - 2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

std::uint64_t euler_totient(std::uint64_t n);

/// c_k for the class, by branch: finite order dividing k gives 1; T^m gives
/// |m| k; -T^m gives |m| k/2 + 1 for even k and 4 for odd k; everything else
/// (hyperbolic, or finite order not dividing k) uses the divisor sum
/// (1/k) sum_{d|k} phi(k/d) |tr(g^d) - 2|.
BigInt ck_formula(const ConjugacyClass& cls, std::uint64_t k);

/// c_1..c_K.
EulerExponents euler_exponents(const ConjugacyClass& cls, std::size_t max_k);

/// (1/k) sum_{d|k} phi(k/d) (T_d(x) - 2) with T_0 = 2, T_1 = x,
/// T_{d+1} = x T_d - T_{d-1}. Equals c_k for tr = x > 2.
RationalPolynomial ck_polynomial(std::uint64_t k);

/// C(c + r - 1, r); 1 for r = 0.
BigInt multiset_coefficient(const BigInt& c, std::uint64_t r);

/// prod_k C(c_k + r_k - 1, r_k).
BigInt hh_coinv_dim(const ConjugacyClass& cls, const CycleType& ct);

/// Visits every partition of n once: parts non-increasing, partitions in
/// reverse lexicographic order starting with (n) and ending with (1^n).
void for_each_partition(unsigned n, const std::function<void(const CycleType&)>& visit);
std::vector<CycleType> enumerate_partitions(unsigned n);

/// dim Sk_N(M_g) = sum over cycle types of N of hh_coinv_dim.
BigInt dim_skein(const ConjugacyClass& cls, unsigned n);

}  // namespace skeinpf
