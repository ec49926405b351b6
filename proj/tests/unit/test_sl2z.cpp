#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "skeinpf/errors.hpp"
#include "skeinpf/sl2z.hpp"

namespace skeinpf {
namespace {

const SL2Matrix S = SL2Matrix::S();
const SL2Matrix T = SL2Matrix::T();
const SL2Matrix Id = SL2Matrix::identity();

// Random SL(2,Z) element with entries bounded by `bound`: pick a coprime top
// row, solve for the bottom row with the extended gcd, then shear it.
SL2Matrix random_sl2(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (;;) {
    long a = entry(rng), b = entry(rng);
    if (std::gcd(a, b) != 1) continue;
    // a*x + b*y = 1
    long old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      long q = old_r / r;
      std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
      std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
      std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
    }
    if (old_r == -1) {
      old_x = -old_x;
      old_y = -old_y;
    }
    long t = std::uniform_int_distribution<long>(-3, 3)(rng);
    long c = -old_y + t * a, d = old_x + t * b;
    if (std::labs(c) > bound || std::labs(d) > bound) continue;
    return SL2Matrix(a, b, c, d);
  }
}

BigInt entry_gcd(const SL2Matrix& g, int shift) {
  BigInt r;
  BigInt a = g.a() - shift, d = g.d() - shift;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), g.b().get_mpz_t());
  mpz_gcd(r.get_mpz_t(), r.get_mpz_t(), g.c().get_mpz_t());
  mpz_gcd(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return r;
}

TEST(MakeSl2, AcceptsDeterminantOne) {
  EXPECT_EQ(make_sl2(1, 1, 0, 1), T);
  EXPECT_EQ(make_sl2(1, 0, 0, 1), Id);
  EXPECT_TRUE(make_sl2(1, 0, 0, 1).is_identity());
}

TEST(MakeSl2, RejectsOtherDeterminants) {
  EXPECT_THROW(make_sl2(1, 1, 1, 1), DeterminantError);
  EXPECT_THROW(make_sl2(2, 0, 0, 2), DeterminantError);
  EXPECT_THROW(make_sl2(0, 1, 1, 0), DeterminantError);
}

TEST(MatPow, PresentationRelations) {
  EXPECT_EQ(mat_pow(S, 4), Id);
  EXPECT_EQ(mat_pow(S, 2), SL2Matrix::minus_identity());
  EXPECT_EQ(mat_pow(S * T, 3), mat_pow(S, 2));
  EXPECT_EQ(mat_pow(T * S, 6), Id);
  EXPECT_NE(mat_pow(T * S, 3), Id);
  EXPECT_EQ(mat_pow(T, 3), make_sl2(1, 3, 0, 1));
  EXPECT_EQ(mat_pow(T, 0), Id);
}

TEST(MatPow, MatchesRepeatedMultiplication) {
  SL2Matrix g(2, 1, 3, 2);
  SL2Matrix acc = Id;
  for (unsigned k = 0; k < 12; ++k) {
    EXPECT_EQ(mat_pow(g, k), acc) << k;
    acc = acc * g;
  }
}

TEST(TracePower, Examples) {
  SL2Matrix g(2, 1, 3, 2);
  EXPECT_EQ((g * g).trace(), 14);
  EXPECT_EQ(trace_power(4, 2), 14);
  EXPECT_EQ(trace_power(17, 1), 17);
  EXPECT_EQ(trace_power(-9, 1), -9);
  for (unsigned d = 1; d < 30; ++d) EXPECT_EQ(trace_power(2, d), 2);
  EXPECT_EQ(trace_power(5, 0), 2);
}

TEST(TracePower, AgreesWithMatrixPowers) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    SL2Matrix g = random_sl2(rng, 50);
    for (unsigned d = 1; d <= 20; ++d) {
      ASSERT_EQ(trace_power(g.trace(), d), mat_pow(g, d).trace()) << g.to_string() << " d=" << d;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(SL2Matrix(2, 1, 3, 2)), ConjugacyClass(Hyperbolic{4}));
  EXPECT_EQ(classify(SL2Matrix(1, 5, 0, 1)), ConjugacyClass(Shear{5}));
  EXPECT_EQ(classify(SL2Matrix(-1, -1, 0, -1)), ConjugacyClass(NegativeShear{1}));
  EXPECT_EQ(classify(SL2Matrix(0, -1, 1, 0)), ConjugacyClass(FiniteOrder{4}));
  EXPECT_EQ(classify(-S), ConjugacyClass(FiniteOrder{4}));
  EXPECT_EQ(classify(Id), ConjugacyClass(FiniteOrder{1}));
  EXPECT_EQ(classify(SL2Matrix::minus_identity()), ConjugacyClass(FiniteOrder{2}));
  EXPECT_EQ(classify(T * S), ConjugacyClass(FiniteOrder{6}));
  EXPECT_EQ(classify(-(T * S)), ConjugacyClass(FiniteOrder{3}));
  EXPECT_EQ(classify(SL2Matrix(-3, 1, -1, 0)), ConjugacyClass(Hyperbolic{-3}));
}

TEST(Classify, ShearSignFollowsRepresentative) {
  for (int m = -4; m <= 4; ++m) {
    if (m == 0) continue;
    SL2Matrix tm(1, m, 0, 1);
    EXPECT_EQ(classify(tm), ConjugacyClass(Shear{m}));
    EXPECT_EQ(classify(-tm), ConjugacyClass(NegativeShear{m}));
    // transpose-like representative with b = 0
    SL2Matrix lower(1, 0, -m, 1);
    EXPECT_EQ(classify(lower), ConjugacyClass(Shear{m}));
  }
}

TEST(Classify, OrdersMatchTraceTable) {
  const std::pair<SL2Matrix, int> cases[] = {
      {Id, 1}, {SL2Matrix::minus_identity(), 2}, {-(T * S), 3}, {S, 4}, {T * S, 6}};
  for (const auto& [g, order] : cases) {
    EXPECT_EQ(class_order(classify(g)), order);
    EXPECT_EQ(mat_pow(g, order), Id);
    for (int p = 1; p < order; ++p) EXPECT_NE(mat_pow(g, p), Id);
  }
}

TEST(Classify, TotalAndConsistent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    SL2Matrix g = random_sl2(rng, 40);
    ConjugacyClass cls = classify(g);
    EXPECT_EQ(class_trace(cls), g.trace());
    if (auto* h = std::get_if<Hyperbolic>(&cls)) EXPECT_GT(abs(h->trace), 2);
    if (auto* f = std::get_if<FiniteOrder>(&cls)) EXPECT_EQ(mat_pow(g, f->order), Id);
    if (auto* s = std::get_if<Shear>(&cls)) {
      EXPECT_NE(s->m, 0);
      EXPECT_EQ(abs(s->m), entry_gcd(g, 1));
    }
    if (auto* s = std::get_if<NegativeShear>(&cls)) {
      EXPECT_NE(s->m, 0);
      EXPECT_EQ(abs(s->m), entry_gcd(g, -1));
    }
  }
}

TEST(RandomConjugate, Examples) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(random_conjugate(Id, seed), Id);
    SL2Matrix h = random_conjugate(T, seed);
    EXPECT_EQ(h.trace(), 2);
    EXPECT_EQ(entry_gcd(h, 1), 1);
  }
  SL2Matrix h = random_conjugate(SL2Matrix(2, 1, 3, 2), 7);
  EXPECT_EQ(h.trace(), 4);
  EXPECT_EQ(random_conjugate(SL2Matrix(2, 1, 3, 2), 7), h);
}

TEST(RandomConjugate, PreservesClass) {
  const SL2Matrix reps[] = {Id,       SL2Matrix::minus_identity(), S,         -S,
                            T * S,    -(T * S),                    T,         mat_pow(T, 3),
                            T.inverse(), -T,                       -mat_pow(T, 2), SL2Matrix(2, 1, 3, 2),
                            SL2Matrix(0, -1, 1, -5), SL2Matrix(0, -1, 1, 7)};
  for (const auto& g : reps) {
    ConjugacyClass cls = classify(g);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SL2Matrix h = random_conjugate(g, seed);
      ConjugacyClass hc = classify(h);
      EXPECT_TRUE(same_class_up_to_sign(cls, hc)) << g.to_string() << " ~ " << h.to_string();
      // the sign is a genuine SL(2,Z) invariant, so it survives as well
      EXPECT_EQ(cls, hc) << g.to_string() << " ~ " << h.to_string();
    }
  }
}

TEST(RandomConjugate, ShearGcdInvariant) {
  for (int m = 1; m <= 3; ++m) {
    SL2Matrix g(1, m, 0, 1);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SL2Matrix h = random_conjugate(g, seed);
      EXPECT_EQ(entry_gcd(h, 1), m);
      EXPECT_EQ(entry_gcd(random_conjugate(-g, seed), -1), m);
    }
  }
}

TEST(ParseSl2, Formats) {
  EXPECT_EQ(parse_sl2("0,-1;1,0"), S);
  EXPECT_EQ(parse_sl2(" 2 , 1 ; 3 , 2 "), SL2Matrix(2, 1, 3, 2));
  EXPECT_EQ(parse_sl2("+1,+1;0,1"), T);
  EXPECT_EQ(parse_sl2("123456789012345678901,1;123456789012345678900,1").a(),
            BigInt("123456789012345678901"));
  EXPECT_EQ(T.to_string(), "1,1;0,1");
  EXPECT_EQ(parse_sl2(SL2Matrix(-7, 2, -4, 1).to_string()), SL2Matrix(-7, 2, -4, 1));
}

TEST(ParseSl2, Errors) {
  EXPECT_THROW(parse_sl2("1,1;1,1"), DeterminantError);
  EXPECT_THROW(parse_sl2("1,1,0,1"), ParseError);
  EXPECT_THROW(parse_sl2("1,1;0"), ParseError);
  EXPECT_THROW(parse_sl2("1,x;0,1"), ParseError);
  EXPECT_THROW(parse_sl2("1,;0,1"), ParseError);
  EXPECT_THROW(parse_sl2(""), ParseError);
  EXPECT_THROW(parse_sl2("1,1;0,1;0,0"), ParseError);
}

TEST(ClassLabels, Names) {
  EXPECT_EQ(class_label(classify(S)), "S-type");
  EXPECT_EQ(class_label(classify(Id)), "Id");
  EXPECT_EQ(class_kind(classify(SL2Matrix(2, 1, 3, 2))), "hyperbolic");
  EXPECT_EQ(class_kind(classify(-T)), "negative_shear");
  EXPECT_EQ(class_order(classify(T)), 0);
}

}  // namespace
}  // namespace skeinpf
