#include "skeinpf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "skeinpf/errors.hpp"
#include "skeinpf/series.hpp"
#include "skeinpf/skeinformula.hpp"

namespace skeinpf {

std::vector<NamedMatrix> trace_representatives(int trace, unsigned max_shear) {
  const SL2Matrix S = SL2Matrix::S();
  const SL2Matrix TS = SL2Matrix::T() * S;
  std::vector<NamedMatrix> out;
  switch (trace) {
    case 2:
      out.push_back({"Id", SL2Matrix::identity()});
      break;
    case -2:
      out.push_back({"-Id", SL2Matrix::minus_identity()});
      break;
    case 0:
      out.push_back({"S", S});
      out.push_back({"-S", -S});
      break;
    case 1:
      out.push_back({"TS", TS});
      out.push_back({"(TS)^-1", TS.inverse()});
      break;
    case -1:
      out.push_back({"-TS", -TS});
      out.push_back({"-(TS)^-1", -TS.inverse()});
      break;
    default:
      out.push_back({"hyp(" + std::to_string(trace) + ")", SL2Matrix(0, -1, 1, trace)});
  }
  if (trace == 2 || trace == -2) {
    const SL2Matrix T = SL2Matrix::T();
    for (unsigned m = 1; m <= max_shear; ++m) {
      std::string base = m == 1 ? "T" : "T^" + std::to_string(m);
      SL2Matrix tm = mat_pow(T, m);
      if (trace == 2) out.push_back({base, tm});
      else out.push_back({"-" + base, -tm});
    }
    if (trace == 2 && max_shear >= 1) out.push_back({"T^-1", T.inverse()});
  }
  return out;
}

std::vector<NamedMatrix> standard_test_set(int trace_min, int trace_max, unsigned max_shear) {
  std::vector<NamedMatrix> out;
  for (int t = trace_min; t <= trace_max; ++t) {
    auto reps = trace_representatives(t, max_shear);
    out.insert(out.end(), reps.begin(), reps.end());
  }
  auto have = [&](const SL2Matrix& g) {
    return std::any_of(out.begin(), out.end(), [&](const NamedMatrix& n) { return n.matrix == g; });
  };
  for (int t : {2, -2}) {
    for (auto& rep : trace_representatives(t, max_shear))
      if (!have(rep.matrix)) out.push_back(rep);
  }
  SL2Matrix example(2, 1, 3, 2);
  if (!have(example)) out.push_back({"(2 1;3 2)", example});
  return out;
}

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                [s](const CheckResult& r) { return r.status == s; }));
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    default: return "skipped(cap)";
  }
}

namespace {

CheckResult compare(std::string check, const std::string& gamma, std::string parameter,
                    const BigInt& expected, const BigInt& observed) {
  return {std::move(check), gamma, std::move(parameter), expected.get_str(), observed.get_str(),
          expected == observed ? CheckStatus::Pass : CheckStatus::Fail};
}

CheckResult skipped(std::string check, const std::string& gamma, std::string parameter,
                    const BigInt& expected, const CapExceeded& e) {
  return {std::move(check), gamma, std::move(parameter), expected.get_str(),
          "size " + e.size(), CheckStatus::Skipped};
}

void check_ck(const VerifyOptions& opt, const std::string& name, const SL2Matrix& g,
              std::vector<CheckResult>& out) {
  const ConjugacyClass cls = classify(g);
  const int order = class_order(cls);
  for (std::uint64_t k = 1; k <= opt.max_k; ++k) {
    const std::string param = "k=" + std::to_string(k);
    BigInt formula = ck_formula(cls, k) + (opt.inject_fault ? 1 : 0);
    OrbitReport rep;
    try {
      rep = ck_oracle(g, k, opt.cap);
    } catch (const CapExceeded& e) {
      out.push_back(skipped("ck", name, param, formula, e));
      continue;
    }
    out.push_back(compare("ck", name, param, formula, big_from_u64(rep.orbit_count)));

    // Burnside: k * orbits = sum of fixed points over g^1..g^k
    BigInt fixed_sum = 0;
    for (auto f : rep.fixed_point_counts) fixed_sum += big_from_u64(f);
    out.push_back(compare("burnside", name, param, big_from_u64(k) * big_from_u64(rep.orbit_count),
                          fixed_sum));

    if (mat_pow(g, k).trace() == 2) continue;
    out.push_back(compare("burnside", name, param + " divisor-sum", ck_burnside(g, k),
                          big_from_u64(rep.orbit_count)));
    for (std::uint64_t p = 1; p < k; ++p) {
      std::uint64_t d = std::gcd(k, p);
      if (order > 0) d = std::gcd(d, static_cast<std::uint64_t>(order));
      BigInt expected = abs(2 - mat_pow(g, d).trace());
      out.push_back(compare("fixed_points", name, param + " p=" + std::to_string(p), expected,
                            big_from_u64(rep.fixed_point_counts[p - 1])));
    }
  }
}

void check_coinv_and_blocks(const VerifyOptions& opt, const std::string& name, const SL2Matrix& g,
                            std::vector<CheckResult>& out) {
  const ConjugacyClass cls = classify(g);
  for (unsigned n = 1; n <= opt.max_n; ++n) {
    for (const CycleType& ct : enumerate_partitions(n)) {
      const std::string param = ct.to_string();
      BigInt formula = hh_coinv_dim(cls, ct);
      try {
        out.push_back(compare("coinv", name, param, formula, hh_coinv_dim_oracle(g, ct, opt.tuple_cap)));
      } catch (const CapExceeded& e) {
        out.push_back(skipped("coinv", name, param, formula, e));
      }

      // block decomposition: same free rank and same primary decomposition
      CokernelStructure whole = cokernel(twisted_relation_matrix(g, ct));
      std::size_t free_rank = 0;
      std::vector<BigInt> factors;
      for (const auto& [k, r] : ct.multiplicities()) {
        CokernelStructure block = cokernel(relation_matrix(g, k));
        free_rank += block.free_rank * r;
        for (unsigned i = 0; i < r; ++i)
          factors.insert(factors.end(), block.invariant_factors.begin(), block.invariant_factors.end());
      }
      auto fmt = [](std::size_t rank, const std::vector<BigInt>& elem) {
        std::string s = "Z^" + std::to_string(rank);
        for (const auto& e : elem) s += " + Z/" + e.get_str();
        return s;
      };
      std::string expected = fmt(free_rank, elementary_divisors(factors));
      std::string observed = fmt(whole.free_rank, elementary_divisors(whole.invariant_factors));
      out.push_back({"block", name, param, expected, observed,
                     expected == observed ? CheckStatus::Pass : CheckStatus::Fail});
    }
  }
}

void check_series(const VerifyOptions& opt, const std::string& name, const SL2Matrix& g,
                  std::vector<CheckResult>& out) {
  const ConjugacyClass cls = classify(g);
  EulerExponents c = euler_exponents(cls, opt.max_n);
  if (opt.inject_fault)
    for (auto& v : c.values) v += 1;
  IntSeries z = euler_to_series(c, opt.max_n);
  for (unsigned n = 1; n <= opt.max_n; ++n) {
    out.push_back(compare("series", name, "N=" + std::to_string(n), dim_skein(cls, n), z[n]));
  }
}

std::vector<CheckResult> check_matrix(const VerifyOptions& opt, const NamedMatrix& m) {
  std::vector<CheckResult> out;
  check_ck(opt, m.name, m.matrix, out);
  for (unsigned i = 0; i < opt.conjugates; ++i) {
    std::uint64_t seed = opt.seed * 1'000'003u + i;
    SL2Matrix h = random_conjugate(m.matrix, seed);
    check_ck(opt, m.name + "~" + h.to_string(), h, out);
  }
  check_coinv_and_blocks(opt, m.name, m.matrix, out);
  check_series(opt, m.name, m.matrix, out);
  return out;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  auto set = standard_test_set(options.trace_min, options.trace_max, options.max_shear);
  std::vector<std::vector<CheckResult>> per_matrix(set.size());

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(set.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < set.size(); i = next++) {
      try {
        per_matrix[i] = check_matrix(options, set[i]);
      } catch (const std::exception& e) {
        per_matrix[i] = {{"error", set[i].name, "", "", e.what(), CheckStatus::Fail}};
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerifyReport report;
  for (auto& r : per_matrix) report.results.insert(report.results.end(), r.begin(), r.end());
  return report;
}

}  // namespace skeinpf
