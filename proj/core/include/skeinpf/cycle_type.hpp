#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace skeinpf {

/// A partition of N, stored as multiplicities r_k of each part k. Stands for
/// the conjugacy class of permutations in S_N with that cycle type.
class CycleType {
 public:
  /// Parts in any order; zero or negative parts are rejected.
  static CycleType from_parts(const std::vector<unsigned>& parts);
  /// Comma-separated cycle lengths, e.g. "3,3,1,1,1". Throws ParseError.
  static CycleType parse(std::string_view text);
  static CycleType single_cycle(unsigned k) { return from_parts({k}); }

  unsigned size() const noexcept { return n_; }
  /// k -> r_k, only for r_k >= 1.
  const std::map<unsigned, unsigned>& multiplicities() const noexcept { return r_; }
  unsigned multiplicity(unsigned k) const;
  /// Parts in non-increasing order.
  std::vector<unsigned> parts() const;

  /// Exponent notation, e.g. "1^3 3^2".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  unsigned n_ = 0;
  std::map<unsigned, unsigned> r_;
};

/// The natural representative permutation of {0..N-1}: cycles laid out on
/// consecutive integers, longest first. perm[i] is the image of i.
std::vector<std::size_t> natural_representative(const CycleType& ct);

}  // namespace skeinpf
