#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skeinpf/bigint.hpp"
#include "skeinpf/sl2z.hpp"

namespace skeinpf {

/// Truncated power series a_0 + a_1 t + ... + a_K t^K with exact coefficients.
class IntSeries {
 public:
  IntSeries() : coeffs_{BigInt(1)} {}
  explicit IntSeries(std::vector<BigInt> coeffs);
  /// 1 + 0 t + ... + 0 t^K.
  static IntSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool monic() const { return coeffs_.front() == 1; }

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

  /// JSON array of decimal strings, e.g. ["1","2","10"].
  std::string to_json() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Exponents c_1..c_K of an Euler product prod_k (1 - t^k)^{-c_k}.
struct EulerExponents {
  std::optional<ConjugacyClass> gamma_class;
  /// values[k-1] = c_k.
  std::vector<BigInt> values;

  std::size_t order() const noexcept { return values.size(); }
  const BigInt& at(std::size_t k) const { return values.at(k - 1); }
  /// Indices k with c_k < 1.
  std::vector<std::size_t> nonpositive_indices() const;
  bool all_positive() const { return nonpositive_indices().empty(); }
};

/// prod_{k<=K} (1 - t^k)^{-c_k} mod t^{K+1}, via n a_n = sum_i b_i a_{n-i}
/// with b_i = sum_{d|i} d c_d. Needs at least K exponents.
IntSeries euler_to_series(std::span<const BigInt> exponents, std::size_t order);
IntSeries euler_to_series(const EulerExponents& c, std::size_t order);

/// Inverse of euler_to_series. Requires a monic series; does not reject
/// negative exponents (inspect nonpositive_indices()).
EulerExponents series_to_euler(const IntSeries& s);

/// Truncated Cauchy product.
IntSeries series_multiply(const IntSeries& a, const IntSeries& b, std::size_t order);

/// (1 - t^k)^{-c} mod t^{K+1}, coefficient of t^{jk} being C(c + j - 1, j).
IntSeries euler_factor(const BigInt& c, std::size_t k, std::size_t order);

}  // namespace skeinpf
