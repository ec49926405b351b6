#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace skeinpf {

/// Unbounded signed integer used for every exact quantity in the library.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_from_i64(std::int64_t v) {
  if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
  // avoid UB on INT64_MIN
  BigInt r = big_from_u64(static_cast<std::uint64_t>(-(v + 1)));
  return -r - 1;
}

/// True when x fits in an unsigned 64-bit word.
inline bool fits_u64(const BigInt& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& x) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, x.get_mpz_t());
  return v;
}

inline std::vector<std::string> to_decimal(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

}  // namespace skeinpf
