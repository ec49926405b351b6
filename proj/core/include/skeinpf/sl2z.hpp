#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "skeinpf/bigint.hpp"

namespace skeinpf {

/// A 2x2 integer matrix of determinant one, stored row-major as (a b; c d).
///
/// The determinant is checked on construction, so every live value is a
/// genuine element of SL(2, Z).
class SL2Matrix {
 public:
  SL2Matrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static SL2Matrix identity();
  static SL2Matrix minus_identity();
  /// S = (0 -1; 1 0).
  static SL2Matrix S();
  /// T = (1 1; 0 1).
  static SL2Matrix T();

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  BigInt trace() const { return a_ + d_; }
  bool is_identity() const;
  bool is_minus_identity() const;

  SL2Matrix inverse() const;
  SL2Matrix operator-() const;

  friend bool operator==(const SL2Matrix& x, const SL2Matrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// "a,b;c,d".
  std::string to_string() const;

 private:
  BigInt a_, b_, c_, d_;
};

SL2Matrix make_sl2(BigInt a, BigInt b, BigInt c, BigInt d);
SL2Matrix mat_mul(const SL2Matrix& x, const SL2Matrix& y);
SL2Matrix mat_pow(const SL2Matrix& x, std::uint64_t k);

inline SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  return mat_mul(x, y);
}

/// Parses "a,b;c,d". Whitespace around numbers is ignored.
/// Throws ParseError on malformed text and DeterminantError if det != 1.
SL2Matrix parse_sl2(std::string_view text);

/// tr(g^d) from tr(g) via t_0 = 2, t_1 = x, t_{n+1} = x t_n - t_{n-1}.
BigInt trace_power(const BigInt& trace, std::uint64_t d);

struct Hyperbolic {
  BigInt trace;
  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};
/// Elliptic or central element; order is one of 1, 2, 3, 4, 6.
struct FiniteOrder {
  int order;
  friend bool operator==(const FiniteOrder&, const FiniteOrder&) = default;
};
/// Conjugate of T^m, m != 0.
struct Shear {
  BigInt m;
  friend bool operator==(const Shear&, const Shear&) = default;
};
/// Conjugate of -T^m, m != 0.
struct NegativeShear {
  BigInt m;
  friend bool operator==(const NegativeShear&, const NegativeShear&) = default;
};

using ConjugacyClass = std::variant<Hyperbolic, FiniteOrder, Shear, NegativeShear>;

/// Trace shared by every element of the class.
BigInt class_trace(const ConjugacyClass& cls);
/// 1, 2, 3, 4, 6, or 0 for infinite order.
int class_order(const ConjugacyClass& cls);
/// Short name such as "hyperbolic", "S-type" or "-T^m-type".
std::string class_label(const ConjugacyClass& cls);
/// Machine-readable kind: identity, minus_identity, elliptic, shear,
/// negative_shear, hyperbolic.
std::string class_kind(const ConjugacyClass& cls);

/// Same class ignoring the sign of a shear parameter.
bool same_class_up_to_sign(const ConjugacyClass& x, const ConjugacyClass& y);

/// Classifies g up to conjugacy, finely enough to select the c_k branch.
///
/// For trace +2 (resp. -2) away from +Id (resp. -Id) the shear parameter
/// has |m| = gcd of the entries of g - Id (resp. g + Id). Its sign is read
/// off the representative: b of g - Id for T^m, -b of g + Id for -T^m,
/// falling back to the lower-left entry when b vanishes.
ConjugacyClass classify(const SL2Matrix& g);

/// h g h^{-1} for a pseudo-random word h in S^{+-1}, T^{+-1} of length
/// 1..max_letters, chosen deterministically from seed.
SL2Matrix random_conjugate(const SL2Matrix& g, std::uint64_t seed,
                           unsigned max_letters = 12);

}  // namespace skeinpf
