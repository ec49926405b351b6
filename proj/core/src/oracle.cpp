#include "skeinpf/oracle.hpp"

#include <numeric>

#include "skeinpf/errors.hpp"

namespace skeinpf {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

ResidueSpace::ResidueSpace(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto d : moduli_) {
    if (d < 2) throw PreconditionError("ResidueSpace moduli must be >= 2");
    if (__builtin_mul_overflow(size_, d, &size_)) {
      throw PreconditionError("ResidueSpace too large");
    }
  }
}

void ResidueSpace::decode(std::uint64_t index, std::span<std::uint64_t> coords) const {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    coords[i] = index % moduli_[i];
    index /= moduli_[i];
  }
}

std::uint64_t ResidueSpace::encode(std::span<const std::uint64_t> coords) const {
  std::uint64_t index = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) index = index * moduli_[i] + coords[i];
  return index;
}

ResidueMap::ResidueMap(const ResidueSpace& space, const TorsionEndomorphism& e)
    : moduli_(space.moduli()) {
  const std::size_t r = moduli_.size();
  if (e.moduli.size() != r) throw DimensionMismatch("ResidueMap: rank mismatch");
  matrix_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) matrix_[i * r + j] = to_u64(e.matrix(i, j));
}

void ResidueMap::apply(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) const {
  const std::size_t r = moduli_.size();
  for (std::size_t i = 0; i < r; ++i) {
    u128 acc = 0;
    const std::uint64_t* row = &matrix_[i * r];
    for (std::size_t j = 0; j < r; ++j) {
      acc += static_cast<u128>(row[j]) * in[j];
      acc %= moduli_[i];
    }
    out[i] = static_cast<std::uint64_t>(acc);
  }
}

std::uint64_t count_orbits(const ResidueSpace& space, std::span<const ResidueMap> generators) {
  const std::uint64_t n = space.size();
  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> stack;
  std::vector<std::uint64_t> x(space.rank()), y(space.rank());
  std::uint64_t orbits = 0;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      space.decode(cur, x);
      for (const auto& g : generators) {
        g.apply(x, y);
        std::uint64_t next = space.encode(y);
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return orbits;
}

std::uint64_t count_fixed_points(const ResidueSpace& space, const ResidueMap& f) {
  std::vector<std::uint64_t> x(space.rank()), y(space.rank());
  std::uint64_t fixed = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.decode(i, x);
    f.apply(x, y);
    if (x == y) ++fixed;
  }
  return fixed;
}

IntMatrix relation_matrix(const SL2Matrix& g, std::uint64_t k) {
  return IntMatrix::identity(2) - IntMatrix::from_sl2(mat_pow(g, k));
}

IntMatrix twisted_relation_matrix(const SL2Matrix& g, const CycleType& ct) {
  auto w = natural_representative(ct);
  const std::size_t n = w.size();
  IntMatrix pw(n, n);
  for (std::size_t i = 0; i < n; ++i) pw(w[i], i) = 1;
  return IntMatrix::identity(2 * n) - kronecker(pw, IntMatrix::from_sl2(g));
}

IntMatrix block_permutation(std::span<const std::size_t> sigma) {
  const std::size_t n = sigma.size();
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(sigma[i], i) = 1;
  return kronecker(p, IntMatrix::identity(2));
}

std::vector<std::vector<std::size_t>> centralizer_generators(const CycleType& ct) {
  const std::size_t n = ct.size();
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});

  // block start offsets per cycle length, following natural_representative
  std::vector<std::vector<std::size_t>> gens;
  std::size_t offset = 0;
  auto parts = ct.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    const unsigned k = parts[i];
    const unsigned r = ct.multiplicity(k);
    const std::size_t first = offset;

    if (k > 1) {
      auto rot = id;
      for (unsigned j = 0; j < k; ++j) rot[first + j] = first + (j + 1) % k;
      gens.push_back(std::move(rot));
    }
    if (r >= 2) {
      auto swap = id;
      for (unsigned j = 0; j < k; ++j) {
        swap[first + j] = first + k + j;
        swap[first + k + j] = first + j;
      }
      gens.push_back(std::move(swap));
    }
    if (r >= 3) {
      auto cyc = id;
      for (unsigned b = 0; b < r; ++b)
        for (unsigned j = 0; j < k; ++j)
          cyc[first + b * k + j] = first + ((b + 1) % r) * k + j;
      gens.push_back(std::move(cyc));
    }
    offset += static_cast<std::size_t>(k) * r;
    i += r;
  }
  return gens;
}

namespace {

std::vector<std::uint64_t> moduli_u64(const CokernelStructure& c) {
  std::vector<std::uint64_t> out;
  for (const auto& f : c.invariant_factors) out.push_back(to_u64(f));
  return out;
}

void check_cap(const BigInt& size, std::uint64_t cap) {
  if (!fits_u64(size) || to_u64(size) > cap) throw CapExceeded(size.get_str(), cap);
}

// phi by direct gcd count, kept separate from the formula engine.
std::uint64_t totient_by_count(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return count;
}

}  // namespace

OrbitReport ck_oracle(const SL2Matrix& g, std::uint64_t k, std::uint64_t cap) {
  if (k == 0) throw PreconditionError("ck_oracle: k must be positive");
  CokernelStructure c = cokernel(relation_matrix(g, k));
  BigInt size = c.torsion_size();
  check_cap(size, cap);

  OrbitReport report;
  report.group_size = k;
  report.element_count = to_u64(size);
  report.free_rank = c.free_rank;
  report.invariant_factors = c.invariant_factors;

  ResidueSpace space(moduli_u64(c));
  IntMatrix gm = IntMatrix::from_sl2(g);
  std::vector<ResidueMap> action{ResidueMap(space, induced_endomorphism(c, gm))};
  report.orbit_count = count_orbits(space, action);

  IntMatrix power = IntMatrix::identity(2);
  for (std::uint64_t p = 1; p <= k; ++p) {
    power = power * gm;
    ResidueMap f(space, induced_endomorphism(c, power));
    report.fixed_point_counts.push_back(count_fixed_points(space, f));
  }
  return report;
}

BigInt hh_dim(const SL2Matrix& g, const CycleType& ct, std::uint64_t cap) {
  BigInt dim = 1;
  for (const auto& [k, r] : ct.multiplicities()) {
    BigInt size = cokernel(relation_matrix(g, k)).torsion_size();
    check_cap(size, cap);
    BigInt factor;
    mpz_pow_ui(factor.get_mpz_t(), size.get_mpz_t(), r);
    dim *= factor;
  }
  return dim;
}

BigInt hh_coinv_dim_oracle(const SL2Matrix& g, const CycleType& ct, std::uint64_t tuple_cap) {
  // |coker| of the big matrix equals hh_dim.
  check_cap(hh_dim(g, ct, ~std::uint64_t{0}), tuple_cap);

  CokernelStructure c = cokernel(twisted_relation_matrix(g, ct));
  BigInt size = c.torsion_size();
  check_cap(size, tuple_cap);
  ResidueSpace space(moduli_u64(c));

  std::vector<ResidueMap> action;
  for (const auto& sigma : centralizer_generators(ct)) {
    action.emplace_back(space, induced_endomorphism(c, block_permutation(sigma)));
  }
  return big_from_u64(count_orbits(space, action));
}

BigInt ck_burnside(const SL2Matrix& g, std::uint64_t k) {
  if (k == 0) throw PreconditionError("ck_burnside: k must be positive");
  if (mat_pow(g, k).trace() == 2) {
    throw DegenerateError("ck_burnside: tr(g^" + std::to_string(k) +
                          ") = 2, so Id - g^k is singular");
  }
  BigInt sum = 0;
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    BigInt term = abs(mat_pow(g, d).trace() - 2);
    sum += big_from_u64(totient_by_count(k / d)) * term;
  }
  BigInt kk = big_from_u64(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), kk.get_mpz_t())) {
    throw NonIntegralError("ck_burnside: divisor sum " + sum.get_str() +
                           " is not divisible by " + std::to_string(k));
  }
  return sum / kk;
}

}  // namespace skeinpf
