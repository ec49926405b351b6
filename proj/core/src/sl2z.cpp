#include "skeinpf/sl2z.hpp"

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "skeinpf/errors.hpp"

namespace skeinpf {

SL2Matrix::SL2Matrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  BigInt det = a_ * d_ - b_ * c_;
  if (det != 1) {
    throw DeterminantError("determinant of " + to_string() + " is " +
                           det.get_str() + ", expected 1");
  }
}

SL2Matrix SL2Matrix::identity() { return {1, 0, 0, 1}; }
SL2Matrix SL2Matrix::minus_identity() { return {-1, 0, 0, -1}; }
SL2Matrix SL2Matrix::S() { return {0, -1, 1, 0}; }
SL2Matrix SL2Matrix::T() { return {1, 1, 0, 1}; }

bool SL2Matrix::is_identity() const {
  return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1;
}

bool SL2Matrix::is_minus_identity() const {
  return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1;
}

SL2Matrix SL2Matrix::inverse() const { return {d_, -b_, -c_, a_}; }

SL2Matrix SL2Matrix::operator-() const { return {-a_, -b_, -c_, -d_}; }

std::string SL2Matrix::to_string() const {
  return a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," +
         d_.get_str();
}

SL2Matrix make_sl2(BigInt a, BigInt b, BigInt c, BigInt d) {
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

SL2Matrix mat_mul(const SL2Matrix& x, const SL2Matrix& y) {
  return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
          x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
}

SL2Matrix mat_pow(const SL2Matrix& x, std::uint64_t k) {
  SL2Matrix result = SL2Matrix::identity();
  SL2Matrix base = x;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view tok = text.substr(begin, end - begin);
  std::size_t digits = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (tok.size() == digits) {
    throw ParseError("bad matrix \"" + std::string(whole) +
                     "\": empty entry");
  }
  for (std::size_t i = digits; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
      throw ParseError("bad matrix \"" + std::string(whole) +
                       "\": non-numeric entry \"" + std::string(tok) + "\"");
    }
  }
  std::string s(tok[0] == '+' ? tok.substr(1) : tok);
  return BigInt(s, 10);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

SL2Matrix parse_sl2(std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) {
    throw ParseError("bad matrix \"" + std::string(text) +
                     "\": expected two rows \"a,b;c,d\"");
  }
  std::vector<BigInt> entries;
  for (auto row : rows) {
    auto cols = split(row, ',');
    if (cols.size() != 2) {
      throw ParseError("bad matrix \"" + std::string(text) +
                       "\": expected two entries per row");
    }
    for (auto e : cols) entries.push_back(parse_integer(e, text));
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

BigInt trace_power(const BigInt& trace, std::uint64_t d) {
  BigInt prev = 2, cur = trace;
  if (d == 0) return prev;
  for (std::uint64_t i = 1; i < d; ++i) {
    BigInt next = trace * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt class_trace(const ConjugacyClass& cls) {
  struct Visitor {
    BigInt operator()(const Hyperbolic& h) const { return h.trace; }
    BigInt operator()(const FiniteOrder& f) const {
      switch (f.order) {
        case 1: return 2;
        case 2: return -2;
        case 3: return -1;
        case 4: return 0;
        default: return 1;
      }
    }
    BigInt operator()(const Shear&) const { return 2; }
    BigInt operator()(const NegativeShear&) const { return -2; }
  };
  return std::visit(Visitor{}, cls);
}

int class_order(const ConjugacyClass& cls) {
  if (const auto* f = std::get_if<FiniteOrder>(&cls)) return f->order;
  return 0;
}

std::string class_label(const ConjugacyClass& cls) {
  struct Visitor {
    std::string operator()(const Hyperbolic&) const { return "hyperbolic"; }
    std::string operator()(const FiniteOrder& f) const {
      switch (f.order) {
        case 1: return "Id";
        case 2: return "-Id";
        case 3: return "-TS-type";
        case 4: return "S-type";
        default: return "TS-type";
      }
    }
    std::string operator()(const Shear&) const { return "T^m-type"; }
    std::string operator()(const NegativeShear&) const { return "-T^m-type"; }
  };
  return std::visit(Visitor{}, cls);
}

std::string class_kind(const ConjugacyClass& cls) {
  struct Visitor {
    std::string operator()(const Hyperbolic&) const { return "hyperbolic"; }
    std::string operator()(const FiniteOrder& f) const {
      if (f.order == 1) return "identity";
      if (f.order == 2) return "minus_identity";
      return "elliptic";
    }
    std::string operator()(const Shear&) const { return "shear"; }
    std::string operator()(const NegativeShear&) const {
      return "negative_shear";
    }
  };
  return std::visit(Visitor{}, cls);
}

bool same_class_up_to_sign(const ConjugacyClass& x, const ConjugacyClass& y) {
  if (x.index() != y.index()) return false;
  if (const auto* s = std::get_if<Shear>(&x)) {
    return abs(s->m) == abs(std::get<Shear>(y).m);
  }
  if (const auto* s = std::get_if<NegativeShear>(&x)) {
    return abs(s->m) == abs(std::get<NegativeShear>(y).m);
  }
  return x == y;
}

namespace {

// gcd of the entries of n = g -+ Id plus the signed representative parameter.
BigInt shear_parameter(const BigInt& n00, const BigInt& n01, const BigInt& n10,
                       const BigInt& n11, int sign_flip) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), n00.get_mpz_t(), n01.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n10.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n11.get_mpz_t());
  // g - Id is rank-one nilpotent, m (-pq p^2; -q^2 pq) with (p, q) primitive,
  // so b and -c carry sign(m) and at least one is nonzero.
  int s = sgn(n01) != 0 ? sgn(n01) : -sgn(n10);
  return sign_flip * s * g;
}

}  // namespace

ConjugacyClass classify(const SL2Matrix& g) {
  BigInt tr = g.trace();
  if (abs(tr) > 2) return Hyperbolic{tr};
  if (tr == -1) return FiniteOrder{3};
  if (tr == 0) return FiniteOrder{4};
  if (tr == 1) return FiniteOrder{6};
  if (tr == 2) {
    if (g.is_identity()) return FiniteOrder{1};
    return Shear{shear_parameter(g.a() - 1, g.b(), g.c(), g.d() - 1, 1)};
  }
  if (g.is_minus_identity()) return FiniteOrder{2};
  // -T^m + Id = (0 -m; 0 0)
  return NegativeShear{shear_parameter(g.a() + 1, g.b(), g.c(), g.d() + 1, -1)};
}

SL2Matrix random_conjugate(const SL2Matrix& g, std::uint64_t seed,
                           unsigned max_letters) {
  std::mt19937_64 rng(seed);
  const SL2Matrix letters[4] = {SL2Matrix::S(), SL2Matrix::S().inverse(),
                                SL2Matrix::T(), SL2Matrix::T().inverse()};
  unsigned length = max_letters == 0
                        ? 0
                        : std::uniform_int_distribution<unsigned>(1, max_letters)(rng);
  std::uniform_int_distribution<int> pick(0, 3);
  SL2Matrix h = SL2Matrix::identity();
  int previous = -1;
  for (unsigned i = 0; i < length; ++i) {
    int letter = pick(rng);
    // skip immediate cancellations so the word length is honest
    while (previous >= 0 && (letter ^ 1) == previous) letter = pick(rng);
    h = h * letters[letter];
    previous = letter;
  }
  return h * g * h.inverse();
}

}  // namespace skeinpf
