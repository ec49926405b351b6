#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "skeinpf/oracle.hpp"
#include "skeinpf/skeinformula.hpp"

namespace skeinpf {
namespace {

const SL2Matrix S = SL2Matrix::S();
const SL2Matrix T = SL2Matrix::T();

struct GoldenRow {
  const char* name;
  SL2Matrix g;
  std::vector<long> c;
  std::vector<long> dims;
};

const std::vector<GoldenRow>& golden() {
  static const std::vector<GoldenRow> rows = {
      {"(2 1; 3 2)", SL2Matrix(2, 1, 3, 2),
       {2, 7, 18, 52, 146, 463, 1442, 4732, 15618},
       {2, 10, 36, 142, 520, 1980, 7344, 27550, 102686}},
      {"Id", SL2Matrix::identity(), {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 3, 5, 7, 11, 15, 22, 30}},
      {"-Id", SL2Matrix::minus_identity(),
       {4, 1, 4, 1, 4, 1, 4, 1, 4},
       {4, 11, 28, 63, 132, 264, 504, 928, 1660}},
      {"S", S, {2, 3, 2, 1, 2, 3, 2, 1, 2}, {2, 6, 12, 25, 46, 86, 148, 255, 420}},
      {"TS", T * S, {1, 2, 2, 2, 1, 1, 1, 2, 2}, {1, 3, 5, 10, 15, 27, 40, 66, 97}},
      {"-TS", -(T * S), {3, 3, 1, 3, 3, 1, 3, 3, 1}, {3, 9, 20, 45, 90, 176, 324, 585, 1017}},
      {"T", T, {1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 3, 6, 13, 24, 48, 86, 160, 282}},
      {"-T", -T, {4, 2, 4, 3, 4, 4, 4, 5, 4}, {4, 12, 32, 77, 172, 366, 744, 1460, 2780}},
      {"T^2", mat_pow(T, 2),
       {2, 4, 6, 8, 10, 12, 14, 16, 18},
       {2, 7, 18, 47, 110, 258, 568, 1237, 2600}},
  };
  return rows;
}

// Number of partitions of n by the standard coin-change recurrence.
std::vector<std::uint64_t> partition_numbers(unsigned n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned s = part; s <= n; ++s) p[s] += p[s - part];
  return p;
}

// Plane partitions of n by direct enumeration: rows are partitions, each
// dominated entrywise by the row above.
std::uint64_t count_plane_partitions(unsigned remaining, const std::vector<unsigned>& above) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  std::vector<unsigned> row;
  std::function<void(unsigned, unsigned)> extend = [&](unsigned left, unsigned idx) {
    if (!row.empty() && left < remaining) total += count_plane_partitions(left, row);
    if (idx >= above.size() || left == 0) return;
    unsigned limit = std::min(above[idx], left);
    if (!row.empty()) limit = std::min(limit, row.back());
    for (unsigned v = 1; v <= limit; ++v) {
      row.push_back(v);
      extend(left - v, idx + 1);
      row.pop_back();
    }
  };
  extend(remaining, 0);
  return total;
}

std::uint64_t plane_partitions(unsigned n) {
  return count_plane_partitions(n, std::vector<unsigned>(n, n));
}

TEST(EulerTotient, Examples) {
  EXPECT_EQ(euler_totient(1), 1u);
  EXPECT_EQ(euler_totient(6), 2u);
  EXPECT_EQ(euler_totient(12), 4u);
  EXPECT_EQ(euler_totient(97), 96u);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
    EXPECT_EQ(euler_totient(n), count) << n;
  }
}

TEST(CkFormula, GoldenRows) {
  for (const auto& row : golden()) {
    auto cls = classify(row.g);
    for (unsigned k = 1; k <= 9; ++k)
      EXPECT_EQ(ck_formula(cls, k), row.c[k - 1]) << row.name << " k=" << k;
  }
}

TEST(CkFormula, BranchExamples) {
  for (unsigned k = 1; k <= 20; ++k) {
    EXPECT_EQ(ck_formula(Shear{1}, k), k);
    EXPECT_EQ(ck_formula(Shear{-3}, k), 3 * k);
    EXPECT_EQ(ck_formula(NegativeShear{2}, k), k % 2 == 0 ? BigInt(k + 1) : BigInt(4));
    EXPECT_EQ(ck_formula(FiniteOrder{1}, k), 1);
  }
  EXPECT_EQ(ck_formula(FiniteOrder{2}, 2), 1);
  EXPECT_EQ(ck_formula(FiniteOrder{2}, 3), 4);
  EXPECT_EQ(ck_formula(Hyperbolic{-3}, 1), 5);
}

TEST(CkFormula, MatchesOracleOnConjugates) {
  const SL2Matrix gs[] = {SL2Matrix(2, 1, 3, 2), SL2Matrix::minus_identity(), S, -S, T * S, -(T * S),
                          mat_pow(T, 3), -mat_pow(T, 2), T.inverse(), SL2Matrix(0, -1, 1, -3),
                          SL2Matrix(0, -1, 1, 5), SL2Matrix(0, -1, 1, -5)};
  for (const auto& g0 : gs) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      SL2Matrix g = random_conjugate(g0, seed);
      for (unsigned k = 1; k <= 6; ++k)
        EXPECT_EQ(ck_formula(classify(g), k), big_from_u64(ck_oracle(g, k).orbit_count))
            << g.to_string() << " k=" << k;
    }
  }
}

TEST(CkFormula, PositiveAndTraceDetermined) {
  for (int t = -12; t <= 12; ++t) {
    if (std::abs(t) <= 2) continue;
    for (unsigned k = 1; k <= 20; ++k) {
      BigInt c = ck_formula(Hyperbolic{t}, k);
      EXPECT_GE(c, 1);
      EXPECT_EQ(c, ck_formula(classify(SL2Matrix(0, -1, 1, t)), k));
      EXPECT_EQ(c, ck_formula(classify(random_conjugate(SL2Matrix(0, -1, 1, t), k)), k));
    }
  }
}

TEST(CkPolynomial, PrintedForms) {
  auto q = [](long n, long d) { return BigRational(n, d); };
  EXPECT_EQ(ck_polynomial(1), RationalPolynomial({q(-2, 1), q(1, 1)}));
  EXPECT_EQ(ck_polynomial(2), RationalPolynomial({q(-3, 1), q(1, 2), q(1, 2)}));
  EXPECT_EQ(ck_polynomial(3), RationalPolynomial({q(-2, 1), q(-1, 3), q(0, 1), q(1, 3)}));
  EXPECT_EQ(ck_polynomial(4),
            RationalPolynomial({q(-2, 1), q(1, 2), q(-3, 4), q(0, 1), q(1, 4)}));
  EXPECT_EQ(ck_polynomial(1).to_string(), "x - 2");
  EXPECT_EQ(ck_polynomial(4).degree(), 4);
}

TEST(CkPolynomial, EvaluatesToFormula) {
  for (unsigned k = 1; k <= 8; ++k) {
    auto p = ck_polynomial(k);
    for (long x = 3; x <= 10; ++x) {
      BigRational v = p.evaluate(x);
      EXPECT_EQ(v.get_den(), 1) << "k=" << k << " x=" << x;
      EXPECT_EQ(v.get_num(), ck_formula(Hyperbolic{x}, k));
    }
  }
}

TEST(RationalPolynomial, Arithmetic) {
  RationalPolynomial x({0, 1}), one({1});
  RationalPolynomial sq = (x + one) * (x - one);
  EXPECT_EQ(sq, RationalPolynomial({-1, 0, 1}));
  EXPECT_EQ((x - x).degree(), -1);
  EXPECT_EQ(sq.scaled(BigRational(1, 2)).coefficient(2), BigRational(1, 2));
  EXPECT_EQ(sq.coefficient(9), 0);
  EXPECT_EQ(RationalPolynomial({1, 0, 0}).degree(), 0);
}

TEST(MultisetCoefficient, Examples) {
  EXPECT_EQ(multiset_coefficient(2, 3), 4);
  EXPECT_EQ(multiset_coefficient(18, 2), 171);
  EXPECT_EQ(multiset_coefficient(7, 0), 1);
  EXPECT_EQ(multiset_coefficient(0, 0), 1);
  EXPECT_EQ(multiset_coefficient(0, 3), 0);
  EXPECT_EQ(multiset_coefficient(1, 50), 1);
  EXPECT_EQ(multiset_coefficient(50, 1), 50);
}

TEST(MultisetCoefficient, CountsMultisets) {
  // Direct count of non-decreasing r-tuples over c symbols.
  for (unsigned c = 1; c <= 6; ++c)
    for (unsigned r = 0; r <= 5; ++r) {
      std::uint64_t count = 0;
      std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned lo) {
        if (pos == r) {
          ++count;
          return;
        }
        for (unsigned v = lo; v < c; ++v) rec(pos + 1, v);
      };
      rec(0, 0);
      EXPECT_EQ(multiset_coefficient(c, r), count) << c << " " << r;
    }
}

TEST(HhCoinvDim, Examples) {
  EXPECT_EQ(hh_coinv_dim(Hyperbolic{4}, CycleType::from_parts({3, 3, 1, 1, 1})), 684);
  EXPECT_EQ(hh_coinv_dim(FiniteOrder{1}, CycleType::from_parts({5, 2, 2, 1})), 1);
  for (unsigned n = 1; n <= 10; ++n)
    EXPECT_EQ(hh_coinv_dim(Shear{1}, CycleType::single_cycle(n)), n);
}

TEST(Partitions, CountsAndOrder) {
  auto p = partition_numbers(20);
  for (unsigned n = 1; n <= 20; ++n) {
    auto parts = enumerate_partitions(n);
    EXPECT_EQ(parts.size(), p[n]) << n;
    std::set<CycleType> unique(parts.begin(), parts.end());
    EXPECT_EQ(unique.size(), parts.size());
    for (const auto& ct : parts) EXPECT_EQ(ct.size(), n);
  }
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  EXPECT_EQ(enumerate_partitions(9).size(), 30u);
  auto four = enumerate_partitions(4);
  EXPECT_EQ(four.front(), CycleType::single_cycle(4));
  EXPECT_EQ(four.back(), CycleType::from_parts({1, 1, 1, 1}));
  EXPECT_EQ(four[1], CycleType::from_parts({3, 1}));
  EXPECT_EQ(four[2], CycleType::from_parts({2, 2}));
  EXPECT_EQ(enumerate_partitions(1), std::vector<CycleType>{CycleType::single_cycle(1)});
}

TEST(DimSkein, GoldenRows) {
  for (const auto& row : golden()) {
    auto cls = classify(row.g);
    for (unsigned n = 1; n <= 9; ++n)
      EXPECT_EQ(dim_skein(cls, n), row.dims[n - 1]) << row.name << " N=" << n;
  }
}

TEST(DimSkein, PlanePartitions) {
  const long expected[] = {1, 3, 6, 13, 24, 48, 86, 160, 282};
  for (unsigned n = 1; n <= 9; ++n) {
    EXPECT_EQ(plane_partitions(n), static_cast<std::uint64_t>(expected[n - 1]));
    EXPECT_EQ(dim_skein(Shear{1}, n), big_from_u64(plane_partitions(n)));
  }
}

TEST(DimSkein, MutantDetection) {
  EXPECT_EQ(dim_skein(Shear{1}, 2), 3);
  EXPECT_EQ(dim_skein(NegativeShear{1}, 2), 12);
  for (unsigned n = 1; n <= 9; ++n) EXPECT_NE(dim_skein(Shear{1}, n), dim_skein(NegativeShear{1}, n));
}

TEST(DimSkein, IdentityGivesPartitionNumbers) {
  auto p = partition_numbers(15);
  for (unsigned n = 1; n <= 15; ++n) EXPECT_EQ(dim_skein(FiniteOrder{1}, n), p[n]);
}

TEST(DimSkein, MatchesBruteForceCoinvariants) {
  // Sum of the brute-force centralizer orbit counts over all cycle types.
  const SL2Matrix gs[] = {S, T * S, -T, SL2Matrix::minus_identity()};
  for (const auto& g : gs) {
    for (unsigned n = 1; n <= 4; ++n) {
      BigInt total = 0;
      for (const auto& ct : enumerate_partitions(n)) total += hh_coinv_dim_oracle(g, ct);
      EXPECT_EQ(total, dim_skein(classify(g), n)) << g.to_string() << " N=" << n;
    }
  }
}

}  // namespace
}  // namespace skeinpf
