#include "cli.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "output.hpp"
#include "skeinpf/errors.hpp"
#include "skeinpf/oracle.hpp"
#include "skeinpf/series.hpp"
#include "skeinpf/skeinformula.hpp"
#include "skeinpf/sl2z.hpp"
#include "skeinpf/verify.hpp"

namespace skeinpf::cli {

namespace {

std::uint64_t default_cap(std::ostream& err) {
  if (const char* env = std::getenv("SKEINPF_CAP")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    err << "warning: ignoring invalid SKEINPF_CAP=\"" << env << "\"\n";
  }
  return kDefaultElementCap;
}

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

const std::map<std::string, std::string> kModes{
    {"formula", "formula"}, {"oracle", "oracle"}, {"both", "both"}};

void add_gamma_meta(OutputRecord& rec, const SL2Matrix& g) {
  ConjugacyClass cls = classify(g);
  int order = class_order(cls);
  std::optional<std::string> m, m_signed;
  if (const auto* s = std::get_if<Shear>(&cls)) {
    m = BigInt(abs(s->m)).get_str();
    m_signed = s->m.get_str();
  } else if (const auto* s = std::get_if<NegativeShear>(&cls)) {
    m = BigInt(abs(s->m)).get_str();
    m_signed = s->m.get_str();
  }
  rec.meta = {{"gamma", g.to_string()},
              {"trace", g.trace().get_str()},
              {"class", class_label(cls)},
              {"kind", class_kind(cls)},
              {"order", order ? std::to_string(order) : "infinite"},
              {"m", m},
              {"m_signed", m_signed}};
}

struct CommonArgs {
  std::string gamma;
  std::string format = "table";
};

void add_format(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--format", args.format, "Output format: table, json or csv")
      ->transform(CLI::IsMember(kFormats));
}

Format parse_format(const std::string& f) { return kFormats.at(f); }

// --- commands -------------------------------------------------------------

int cmd_classify(const CommonArgs& args, std::ostream& out) {
  SL2Matrix g = parse_sl2(args.gamma);
  OutputRecord rec;
  rec.command = "classify";
  add_gamma_meta(rec, g);
  rec.columns = {"gamma", "trace", "class", "kind", "order", "m"};
  std::vector<std::string> row;
  for (const auto& [key, value] : rec.meta)
    if (key != "m_signed") row.push_back(value.value_or(""));
  rec.rows.push_back(std::move(row));
  rec.table_rows = std::vector<std::vector<std::string>>{};
  render(rec, parse_format(args.format), out);
  return kExitOk;
}

struct CkArgs {
  unsigned max_k = 10;
  std::string mode = "formula";
  std::optional<std::uint64_t> cap;
};

int cmd_ck(const CommonArgs& args, const CkArgs& ck, std::ostream& out, std::ostream& err) {
  SL2Matrix g = parse_sl2(args.gamma);
  ConjugacyClass cls = classify(g);
  const bool use_formula = ck.mode != "oracle";
  const bool use_oracle = ck.mode != "formula";
  const std::uint64_t cap = ck.cap.value_or(default_cap(err));

  OutputRecord rec;
  rec.command = "ck";
  add_gamma_meta(rec, g);
  rec.meta.emplace_back("mode", ck.mode);
  rec.columns = {"k", "formula", "oracle", "verdict"};
  bool mismatch = false;
  auto values = nlohmann::ordered_json::array();
  for (unsigned k = 1; k <= ck.max_k; ++k) {
    std::string formula, oracle, verdict;
    if (use_formula) formula = ck_formula(cls, k).get_str();
    if (use_oracle) {
      try {
        oracle = std::to_string(ck_oracle(g, k, cap).orbit_count);
      } catch (const CapExceeded&) {
        oracle = "skipped(cap)";
      }
    }
    if (use_formula && use_oracle) {
      if (oracle == "skipped(cap)") verdict = "skipped";
      else if (oracle == formula) verdict = "ok";
      else {
        verdict = "MISMATCH";
        mismatch = true;
      }
    }
    values.push_back(use_formula ? formula : oracle);
    rec.rows.push_back({std::to_string(k), formula, oracle, verdict});
  }
  rec.extra["c_k"] = std::move(values);
  render(rec, parse_format(args.format), out);
  if (mismatch) {
    err << "error: formula and oracle disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_dims(const CommonArgs& args, unsigned max_n, std::ostream& out) {
  SL2Matrix g = parse_sl2(args.gamma);
  ConjugacyClass cls = classify(g);
  OutputRecord rec;
  rec.command = "dims";
  add_gamma_meta(rec, g);
  rec.columns = {"N", "dim"};
  auto dims = nlohmann::ordered_json::array();
  for (unsigned n = 1; n <= max_n; ++n) {
    std::string d = dim_skein(cls, n).get_str();
    dims.push_back(d);
    rec.rows.push_back({std::to_string(n), d});
  }
  rec.extra["dims"] = std::move(dims);
  render(rec, parse_format(args.format), out);
  return kExitOk;
}

int cmd_series(const CommonArgs& args, unsigned max_n, bool euler, std::ostream& out) {
  SL2Matrix g = parse_sl2(args.gamma);
  ConjugacyClass cls = classify(g);
  IntSeries z = euler_to_series(euler_exponents(cls, max_n), max_n);

  OutputRecord rec;
  rec.command = "series";
  add_gamma_meta(rec, g);
  rec.columns = {"n", "coefficient", "exponent"};
  std::optional<EulerExponents> recovered;
  if (euler) recovered = series_to_euler(z);
  for (std::size_t n = 0; n <= z.order(); ++n) {
    std::string exponent;
    if (recovered && n >= 1) exponent = recovered->at(n).get_str();
    rec.rows.push_back({std::to_string(n), z[n].get_str(), exponent});
  }
  rec.extra["series"] = nlohmann::ordered_json(to_decimal(z.coefficients()));
  if (recovered) {
    rec.extra["exponents"] = nlohmann::ordered_json(to_decimal(recovered->values));
    rec.extra["positive"] = recovered->all_positive();
    rec.table_footer.push_back(std::string("positivity: ") +
                               (recovered->all_positive() ? "all c_k >= 1" : "VIOLATED"));
  }
  render(rec, parse_format(args.format), out);
  return kExitOk;
}

struct HhArgs {
  std::string partition;
  bool oracle = false;
  std::uint64_t tuple_cap = kDefaultTupleCap;
};

int cmd_hh(const CommonArgs& args, const HhArgs& hh, std::ostream& out, std::ostream& err) {
  SL2Matrix g = parse_sl2(args.gamma);
  CycleType ct = CycleType::parse(hh.partition);
  ConjugacyClass cls = classify(g);
  OutputRecord rec;
  rec.command = "hh";
  add_gamma_meta(rec, g);
  rec.meta.emplace_back("partition", ct.to_string());
  rec.columns = {"partition", "hh_dim", "coinv_dim", "coinv_oracle"};
  std::string hh_value = hh_dim(g, ct, ~std::uint64_t{0}).get_str();
  std::string coinv = hh_coinv_dim(cls, ct).get_str();
  std::string oracle;
  bool mismatch = false;
  if (hh.oracle) {
    try {
      oracle = hh_coinv_dim_oracle(g, ct, hh.tuple_cap).get_str();
      mismatch = oracle != coinv;
    } catch (const CapExceeded&) {
      oracle = "skipped(cap)";
    }
  }
  rec.rows.push_back({ct.to_string(), hh_value, coinv, oracle});
  render(rec, parse_format(args.format), out);
  if (mismatch) {
    err << "error: coinvariant formula and orbit enumeration disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

struct VerifyArgs {
  VerifyOptions opt;
  std::optional<std::uint64_t> cap;
  bool verbose = false;
};

int cmd_verify(const CommonArgs& args, VerifyArgs v, std::ostream& out, std::ostream& err) {
  if (v.opt.trace_min > v.opt.trace_max) throw PreconditionError("--trace-min exceeds --trace-max");
  v.opt.cap = v.cap.value_or(default_cap(err));
  VerifyReport report = run_verification(v.opt);

  OutputRecord rec;
  rec.command = "verify";
  rec.meta = {{"passed", std::to_string(report.count(CheckStatus::Pass))},
              {"failed", std::to_string(report.count(CheckStatus::Fail))},
              {"skipped", std::to_string(report.count(CheckStatus::Skipped))},
              {"verdict", report.all_passed() ? "all-pass" : "MISMATCH"}};
  rec.columns = {"check", "gamma", "parameter", "expected", "observed", "status"};
  for (const auto& r : report.results)
    rec.rows.push_back({r.check, r.gamma, r.parameter, r.expected, r.observed, to_string(r.status)});

  if (!v.verbose) {
    std::map<std::string, std::array<std::size_t, 3>> by_check;
    std::vector<std::string> order;
    for (const auto& r : report.results) {
      if (!by_check.contains(r.check)) order.push_back(r.check);
      by_check[r.check][static_cast<std::size_t>(r.status)]++;
    }
    std::vector<std::vector<std::string>> summary;
    for (const auto& c : order) {
      const auto& n = by_check[c];
      summary.push_back({c, std::to_string(n[0]), std::to_string(n[1]), std::to_string(n[2])});
    }
    rec.table_columns = std::vector<std::string>{"check", "pass", "fail", "skipped"};
    rec.table_rows = std::move(summary);
    for (const auto& r : report.results)
      if (r.status == CheckStatus::Fail)
        rec.table_footer.push_back("FAIL " + r.check + " " + r.gamma + " " + r.parameter +
                                   ": expected " + r.expected + ", observed " + r.observed);
  }
  render(rec, parse_format(args.format), out);
  return report.all_passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of GL(N)-skein modules of torus mapping tori"};
  app.require_subcommand(1);

  CommonArgs common;
  auto gamma_option = [&](CLI::App* sub) {
    sub->add_option("--gamma", common.gamma, "Monodromy matrix \"a,b;c,d\"")->required();
    add_format(sub, common);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a matrix up to conjugacy");
  gamma_option(classify_cmd);

  CkArgs ck;
  auto* ck_cmd = app.add_subcommand("ck", "Euler exponents c_1..c_K");
  gamma_option(ck_cmd);
  ck_cmd->add_option("--max-k", ck.max_k, "Largest k")->check(CLI::Range(1u, 100000u));
  ck_cmd->add_option("--mode", ck.mode, "formula, oracle or both")->transform(CLI::IsMember(kModes));
  ck_cmd->add_option("--cap", ck.cap, "Enumeration cap for the oracle")->check(CLI::PositiveNumber);

  unsigned max_n = 9;
  auto* dims_cmd = app.add_subcommand("dims", "Skein module dimensions for N = 1..max-n");
  gamma_option(dims_cmd);
  dims_cmd->add_option("--max-n", max_n, "Largest N")->check(CLI::Range(1u, 400u));

  bool euler = false;
  auto* series_cmd = app.add_subcommand("series", "Partition function coefficients a_0..a_N");
  gamma_option(series_cmd);
  series_cmd->add_option("--max-n", max_n, "Truncation order")->check(CLI::Range(1u, 5000u));
  series_cmd->add_flag("--euler", euler, "Also recover the Euler exponents");

  HhArgs hh;
  auto* hh_cmd = app.add_subcommand("hh", "Twisted HH_0 and coinvariant dimensions for a cycle type");
  gamma_option(hh_cmd);
  hh_cmd->add_option("--partition", hh.partition, "Cycle lengths, e.g. \"3,3,1,1,1\"")->required();
  hh_cmd->add_flag("--oracle", hh.oracle, "Cross-check the coinvariant dimension by enumeration");
  hh_cmd->add_option("--tuple-cap", hh.tuple_cap, "Enumeration cap for --oracle")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Formula-vs-oracle sweep over a test set");
  add_format(verify_cmd, common);
  verify_cmd->add_option("--trace-min", verify.opt.trace_min, "Smallest trace");
  verify_cmd->add_option("--trace-max", verify.opt.trace_max, "Largest trace");
  verify_cmd->add_option("--max-k", verify.opt.max_k, "Largest k for c_k")->check(CLI::Range(1u, 64u));
  verify_cmd->add_option("--max-n", verify.opt.max_n, "Largest N for cycle types")->check(CLI::Range(1u, 12u));
  verify_cmd->add_option("--max-shear", verify.opt.max_shear, "Largest m for +-T^m")->check(CLI::Range(1u, 50u));
  verify_cmd->add_option("--cap", verify.cap, "Element cap for c_k enumeration")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tuple-cap", verify.opt.tuple_cap, "Element cap for centralizer enumeration")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.opt.seed, "Seed for random conjugates");
  verify_cmd->add_option("--conjugates", verify.opt.conjugates, "Random conjugates per matrix");
  verify_cmd->add_option("--threads", verify.opt.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_flag("--inject-fault", verify.opt.inject_fault, "Offset every closed-form c_k by one");
  verify_cmd->add_flag("--verbose", verify.verbose, "List every check in table output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(common, out);
    if (*ck_cmd) return cmd_ck(common, ck, out, err);
    if (*dims_cmd) return cmd_dims(common, max_n, out);
    if (*series_cmd) return cmd_series(common, max_n, euler, out);
    if (*hh_cmd) return cmd_hh(common, hh, out, err);
    if (*verify_cmd) return cmd_verify(common, verify, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DeterminantError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"skeinpf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace skeinpf::cli
