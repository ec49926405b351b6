#pragma once

// Brute-force ground truth. Everything here counts orbits by walking actual
// group elements; nothing consults the closed-form branch table.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "skeinpf/bigint.hpp"
#include "skeinpf/cycle_type.hpp"
#include "skeinpf/exactla.hpp"
#include "skeinpf/sl2z.hpp"

namespace skeinpf {

inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;
inline constexpr std::uint64_t kDefaultTupleCap = 1'000'000;

/// Z/d_1 + ... + Z/d_r with elements encoded as mixed-radix indices in
/// [0, size()). The first coordinate varies fastest.
class ResidueSpace {
 public:
  explicit ResidueSpace(std::vector<std::uint64_t> moduli);

  std::size_t rank() const noexcept { return moduli_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }

  void decode(std::uint64_t index, std::span<std::uint64_t> coords) const;
  std::uint64_t encode(std::span<const std::uint64_t> coords) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t size_ = 1;
};

/// A group endomorphism of a ResidueSpace, stored as a residue matrix.
class ResidueMap {
 public:
  ResidueMap(const ResidueSpace& space, const TorsionEndomorphism& e);

  void apply(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> matrix_;  // row-major rank x rank
};

/// Number of orbits of the group generated by `generators` (each assumed
/// invertible) on the whole space, by breadth-first closure.
std::uint64_t count_orbits(const ResidueSpace& space, std::span<const ResidueMap> generators);

/// Number of points x with f(x) = x.
std::uint64_t count_fixed_points(const ResidueSpace& space, const ResidueMap& f);

struct OrbitReport {
  /// Size of the acting cyclic group <g> / <g^k>, i.e. k.
  std::uint64_t group_size = 0;
  std::uint64_t element_count = 0;
  std::uint64_t orbit_count = 0;
  /// Entry p-1 holds the number of points fixed by g^p, p = 1..k.
  std::vector<std::uint64_t> fixed_point_counts;
  std::size_t free_rank = 0;
  std::vector<BigInt> invariant_factors;
};

/// Id_2 - g^k.
IntMatrix relation_matrix(const SL2Matrix& g, std::uint64_t k);

/// Id_{2N} - w (tensor) g for the natural representative w of the cycle type.
/// Coordinates are ordered (j_1, l_1, ..., j_N, l_N): w permutes the N
/// two-dimensional blocks and g acts inside each block.
IntMatrix twisted_relation_matrix(const SL2Matrix& g, const CycleType& ct);

/// P_sigma (tensor) Id_2 for a permutation sigma of {0..N-1}.
IntMatrix block_permutation(std::span<const std::size_t> sigma);

/// Permutations generating the centralizer of the natural representative:
/// per cycle length k, a rotation of the first k-cycle plus, when r_k >= 2,
/// a transposition and a full cycle of the k-cycle blocks.
std::vector<std::vector<std::size_t>> centralizer_generators(const CycleType& ct);

/// c_k(g) as the number of <g>-orbits on coker(Id - g^k)_tors, by enumeration.
/// Throws CapExceeded when the torsion subgroup has more than `cap` elements.
OrbitReport ck_oracle(const SL2Matrix& g, std::uint64_t k,
                      std::uint64_t cap = kDefaultElementCap);

/// prod_k |coker(Id - g^k)_tors|^{r_k}.
BigInt hh_dim(const SL2Matrix& g, const CycleType& ct,
              std::uint64_t cap = kDefaultElementCap);

/// Orbits of the full centralizer of w on coker(Id_{2N} - w (tensor) g)_tors,
/// counted by enumerating the torsion group of the explicit 2N x 2N matrix.
/// Throws CapExceeded when that group has more than `tuple_cap` elements.
BigInt hh_coinv_dim_oracle(const SL2Matrix& g, const CycleType& ct,
                           std::uint64_t tuple_cap = kDefaultTupleCap);

/// (1/k) sum_{d|k} phi(k/d) |tr(g^d) - 2|, evaluated on explicit matrix powers.
/// Throws DegenerateError when tr(g^k) = 2.
BigInt ck_burnside(const SL2Matrix& g, std::uint64_t k);

}  // namespace skeinpf
