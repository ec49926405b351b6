#include "skeinpf/skeinformula.hpp"

#include <algorithm>

#include "skeinpf/errors.hpp"

namespace skeinpf {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational RationalPolynomial::evaluate(const BigInt& x) const {
  BigRational acc = 0;
  BigRational xq(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xq + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<BigRational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + o.coefficient(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  return *this + o.scaled(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<BigRational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::scaled(const BigRational& s) const {
  auto c = coeffs_;
  for (auto& x : c) x *= s;
  return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) throw PreconditionError("euler_totient: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

BigInt divisor_sum_formula(const BigInt& trace, std::uint64_t k) {
  BigInt sum = 0;
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    BigInt term = abs(trace_power(trace, d) - 2);
    sum += big_from_u64(euler_totient(k / d)) * term;
  }
  BigInt kk = big_from_u64(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), kk.get_mpz_t())) {
    throw NonIntegralError("c_k divisor sum " + sum.get_str() + " not divisible by " +
                           std::to_string(k));
  }
  return sum / kk;
}

}  // namespace

BigInt ck_formula(const ConjugacyClass& cls, std::uint64_t k) {
  if (k == 0) throw PreconditionError("ck_formula: k must be positive");
  // finite order dividing k is checked first so that -Id with even k lands here
  if (const auto* f = std::get_if<FiniteOrder>(&cls)) {
    if (k % static_cast<std::uint64_t>(f->order) == 0) return 1;
  }
  if (const auto* s = std::get_if<Shear>(&cls)) return abs(s->m) * big_from_u64(k);
  if (const auto* s = std::get_if<NegativeShear>(&cls)) {
    if (k % 2 == 1) return 4;
    return abs(s->m) * big_from_u64(k / 2) + 1;
  }
  return divisor_sum_formula(class_trace(cls), k);
}

EulerExponents euler_exponents(const ConjugacyClass& cls, std::size_t max_k) {
  EulerExponents e;
  e.gamma_class = cls;
  e.values.reserve(max_k);
  for (std::size_t k = 1; k <= max_k; ++k) e.values.push_back(ck_formula(cls, k));
  return e;
}

RationalPolynomial ck_polynomial(std::uint64_t k) {
  if (k == 0) throw PreconditionError("ck_polynomial: k must be positive");
  const RationalPolynomial x(std::vector<BigRational>{0, 1});
  std::vector<RationalPolynomial> t{RationalPolynomial({2}), x};
  while (t.size() <= k) t.push_back(x * t.back() - t[t.size() - 2]);

  RationalPolynomial sum;
  const RationalPolynomial two({2});
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    sum = sum + (t[d] - two).scaled(BigRational(big_from_u64(euler_totient(k / d))));
  }
  return sum.scaled(BigRational(BigInt(1), big_from_u64(k)));
}

BigInt multiset_coefficient(const BigInt& c, std::uint64_t r) {
  if (r == 0) return 1;
  BigInt n = c + big_from_u64(r) - 1;
  if (sgn(n) < 0) {
    // C(n, r) for negative n, via the upper-negation identity
    BigInt pos = -n + big_from_u64(r) - 1;
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), pos.get_mpz_t(), r);
    return (r % 2 == 0) ? out : BigInt(-out);
  }
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), r);
  return out;
}

namespace {

BigInt coinv_from_exponents(const std::vector<BigInt>& c, const CycleType& ct) {
  BigInt dim = 1;
  for (const auto& [k, r] : ct.multiplicities()) dim *= multiset_coefficient(c[k - 1], r);
  return dim;
}

}  // namespace

BigInt hh_coinv_dim(const ConjugacyClass& cls, const CycleType& ct) {
  BigInt dim = 1;
  for (const auto& [k, r] : ct.multiplicities()) dim *= multiset_coefficient(ck_formula(cls, k), r);
  return dim;
}

void for_each_partition(unsigned n, const std::function<void(const CycleType&)>& visit) {
  if (n == 0) throw PreconditionError("for_each_partition: n must be positive");
  std::vector<unsigned> parts{n};
  for (;;) {
    visit(CycleType::from_parts(parts));
    // rightmost part > 1
    std::size_t i = parts.size();
    unsigned ones = 0;
    while (i > 0 && parts[i - 1] == 1) {
      --i;
      ++ones;
    }
    if (i == 0) return;
    unsigned v = --parts[i - 1];
    unsigned rest = ones + 1;
    parts.resize(i);
    while (rest > v) {
      parts.push_back(v);
      rest -= v;
    }
    if (rest > 0) parts.push_back(rest);
  }
}

std::vector<CycleType> enumerate_partitions(unsigned n) {
  std::vector<CycleType> out;
  for_each_partition(n, [&](const CycleType& ct) { out.push_back(ct); });
  return out;
}

BigInt dim_skein(const ConjugacyClass& cls, unsigned n) {
  auto c = euler_exponents(cls, n).values;
  BigInt total = 0;
  for_each_partition(n, [&](const CycleType& ct) { total += coinv_from_exponents(c, ct); });
  return total;
}

}  // namespace skeinpf
