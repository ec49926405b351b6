#include "skeinpf/series.hpp"

#include "skeinpf/errors.hpp"

namespace skeinpf {

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("IntSeries needs a constant term");
}

IntSeries IntSeries::one(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  return IntSeries(std::move(c));
}

std::string IntSeries::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ',';
    out += '"' + coeffs_[i].get_str() + '"';
  }
  return out + "]";
}

std::vector<std::size_t> EulerExponents::nonpositive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= values.size(); ++k)
    if (values[k - 1] < 1) out.push_back(k);
  return out;
}

namespace {

// b_n = sum_{d|n} d c_d, n = 1..K
std::vector<BigInt> divisor_weighted(std::span<const BigInt> c, std::size_t order) {
  std::vector<BigInt> b(order + 1);
  for (std::size_t d = 1; d <= order; ++d) {
    BigInt dc = big_from_u64(d) * c[d - 1];
    for (std::size_t n = d; n <= order; n += d) b[n] += dc;
  }
  return b;
}

void divide_exact(BigInt& x, std::size_t n, const char* where) {
  BigInt nn = big_from_u64(n);
  if (!mpz_divisible_p(x.get_mpz_t(), nn.get_mpz_t())) {
    throw NonIntegralError(std::string(where) + ": " + x.get_str() +
                           " is not divisible by " + std::to_string(n));
  }
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), nn.get_mpz_t());
}

}  // namespace

IntSeries euler_to_series(std::span<const BigInt> exponents, std::size_t order) {
  if (exponents.size() < order) {
    throw PreconditionError("euler_to_series: " + std::to_string(exponents.size()) +
                            " exponents for order " + std::to_string(order));
  }
  auto b = divisor_weighted(exponents, order);
  std::vector<BigInt> a(order + 1);
  a[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= n; ++i) mpz_addmul(acc.get_mpz_t(), b[i].get_mpz_t(), a[n - i].get_mpz_t());
    divide_exact(acc, n, "euler_to_series");
    a[n] = std::move(acc);
  }
  return IntSeries(std::move(a));
}

IntSeries euler_to_series(const EulerExponents& c, std::size_t order) {
  return euler_to_series(c.values, order);
}

EulerExponents series_to_euler(const IntSeries& s) {
  if (!s.monic()) throw PreconditionError("series_to_euler: series must have constant term 1");
  const std::size_t order = s.order();
  std::vector<BigInt> b(order + 1);
  EulerExponents out;
  out.values.resize(order);
  for (std::size_t n = 1; n <= order; ++n) {
    // n a_n = sum_{i=1}^{n} b_i a_{n-i}, a_0 = 1
    BigInt bn = big_from_u64(n) * s[n];
    for (std::size_t i = 1; i < n; ++i) mpz_submul(bn.get_mpz_t(), b[i].get_mpz_t(), s[n - i].get_mpz_t());
    b[n] = bn;
    // b_n = sum_{d|n} d c_d
    BigInt rest = bn;
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d == 0) mpz_submul(rest.get_mpz_t(), big_from_u64(d).get_mpz_t(), out.values[d - 1].get_mpz_t());
    }
    divide_exact(rest, n, "series_to_euler");
    out.values[n - 1] = std::move(rest);
  }
  return out;
}

IntSeries series_multiply(const IntSeries& a, const IntSeries& b, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (std::size_t i = 0; i <= std::min(order, a.order()); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j <= std::min(order - i, b.order()); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return IntSeries(std::move(c));
}

IntSeries euler_factor(const BigInt& c, std::size_t k, std::size_t order) {
  if (k == 0) throw PreconditionError("euler_factor: k must be positive");
  std::vector<BigInt> coeffs(order + 1);
  coeffs[0] = 1;
  // C(c + j - 1, j) = C(c + j - 2, j - 1) * (c + j - 1) / j
  BigInt binom = 1;
  for (std::size_t j = 1; j * k <= order; ++j) {
    binom *= c + big_from_u64(j) - 1;
    divide_exact(binom, j, "euler_factor");
    coeffs[j * k] = binom;
  }
  return IntSeries(std::move(coeffs));
}

}  // namespace skeinpf
