#include "pexc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "pexc/bfs.hpp"
#include "pexc/distance.hpp"
#include "pexc/moments.hpp"
#include "pexc/permutation.hpp"
#include "pexc/table_io.hpp"
#include "pexc/verify.hpp"
#include "pexc/whitney.hpp"

namespace pexc::cli {

namespace {

using nlohmann::json;

// Largest n for which `moments` also builds the exact row for ks_statistic.
constexpr int kMaxDiagnosticN = 1000;

std::string format_double(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string decimal(const ExactRatio& q, int digits) {
  char buf[512];
  Real r = to_real(q);
  mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, r.backend().data());
  return buf;
}

struct Options {
  std::string permutation;
  int n = 0;
  std::optional<int> k;
  std::string method = "explicit";
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  double t = 0;
  int max_n = 8;
  std::optional<int> decimals;
  std::string cache;
  bool checksum = false;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int cmd_dist(const Options& o, std::ostream& out) {
  const Permutation p = parse_permutation(o.permutation);
  const int d = distance(p);
  const SortingTrace trace = optimal_sort(p);
  if (o.format == "json") {
    out << json{{"permutation", p.to_string()}, {"distance", d}, {"trace", trace.moves}}.dump()
        << '\n';
  } else {
    out << "distance,trace\n" << d << ",\"" << to_string(trace) << "\"\n";
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const Method method = parse_method(o.method);
  if (o.n < 1) throw CLI::ValidationError("--n", "must be >= 1");
  if (method == Method::bfs && o.n > kMaxAtlasSize) {
    throw CLI::ValidationError("--method", "bfs supports n <= " + std::to_string(kMaxAtlasSize));
  }
  const WhitneyTable table = build_table(o.n, method);
  if (!o.cache.empty()) save_table_cache(o.cache, {table});

  const ExactInteger total = table.total();
  const ExactInteger nf = factorial(o.n);
  const bool sum_ok = total == nf;

  if (o.format == "json") {
    json j{{"n", table.n}, {"method", std::string(to_string(method))}};
    if (o.k) {
      j["k"] = *o.k;
      j["value"] = to_string(table.at(*o.k));
    } else {
      json values = json::array();
      for (const auto& v : table.values) values.push_back(to_string(v));
      j["values"] = values;
    }
    if (o.checksum) {
      j["checksum"] = {{"sum", to_string(total)}, {"factorial", to_string(nf)}, {"ok", sum_ok}};
    }
    out << j.dump() << '\n';
  } else {
    if (o.k) {
      out << to_string(table.at(*o.k)) << '\n';
    } else {
      for (std::size_t k = 0; k < table.values.size(); ++k) {
        out << (k ? "," : "") << to_string(table.values[k]);
      }
      out << '\n';
    }
    if (o.checksum) {
      out << "# checksum " << (sum_ok ? "ok" : "MISMATCH") << ": sum=" << to_string(total)
          << " n!=" << to_string(nf) << '\n';
    }
  }
  if (o.checksum && !sum_ok) {
    err << "row sum differs from n!\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

json diagnostic_record(int n, const ExactRatio& mean, const ExactRatio& variance,
                       std::optional<double> ks, std::optional<std::uint64_t> seed,
                       std::optional<std::size_t> count, std::optional<int> decimals) {
  json j;
  j["n"] = n;
  j["mean"] = to_string(mean);
  j["variance"] = to_string(variance);
  j["mean_estimate"] = static_cast<double>(asymptotic::mean_estimate(n));
  j["variance_estimate"] = static_cast<double>(asymptotic::variance_estimate(n));
  j["ks_statistic"] = ks ? json(*ks) : json(nullptr);
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["count"] = count ? json(*count) : json(nullptr);
  if (decimals) {
    j["mean_decimal"] = decimal(mean, *decimals);
    j["variance_decimal"] = decimal(variance, *decimals);
  }
  return j;
}

int cmd_moments(const Options& o, std::ostream& out) {
  if (o.n < 1) throw CLI::ValidationError("--n", "must be >= 1");
  const ExactRatio mean = mean_exact(o.n);
  const ExactRatio variance = o.n == 1 ? ExactRatio(0) : variance_exact(o.n);
  if (o.format == "json") {
    std::optional<double> ks;
    if (o.n >= 2 && o.n <= kMaxDiagnosticN) {
      ks = normality_diagnostic(build_table(o.n, Method::recurrence_i));
    }
    out << diagnostic_record(o.n, mean, variance, ks, std::nullopt, std::nullopt, o.decimals).dump()
        << '\n';
  } else {
    out << "n,mean,variance" << (o.decimals ? ",mean_decimal,variance_decimal" : "") << '\n';
    out << o.n << ',' << to_string(mean) << ',' << to_string(variance);
    if (o.decimals) out << ',' << decimal(mean, *o.decimals) << ',' << decimal(variance, *o.decimals);
    out << '\n';
  }
  return kExitOk;
}

int cmd_cf(const Options& o, std::ostream& out) {
  if (o.n < 2) throw CLI::ValidationError("--n", "must be >= 2");
  const std::complex<double> phi = characteristic_function(o.n, o.t);
  if (o.format == "json") {
    out << json{{"n", o.n}, {"t", o.t}, {"re", phi.real()}, {"im", phi.imag()}}.dump() << '\n';
  } else {
    out << "n,t,re,im\n"
        << o.n << ',' << format_double(o.t) << ',' << format_double(phi.real()) << ','
        << format_double(phi.imag()) << '\n';
  }
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.n < 2) throw CLI::ValidationError("--n", "must be >= 2");
  if (!o.seed) throw CLI::ValidationError("--seed", "sampling requires an explicit seed");
  if (o.count < 1) throw CLI::ValidationError("--count", "must be >= 1");
  const NormalizedSample sample = sample_distances(o.n, o.count, *o.seed);
  if (o.format == "json") {
    json j = diagnostic_record(o.n, mean_exact(o.n), variance_exact(o.n), std::nullopt, *o.seed,
                               sample.count(), o.decimals);
    j["sample_mean"] = sample.mean();
    j["sample_variance"] = sample.variance();
    out << j.dump() << '\n';
  } else {
    for (double v : sample.values) out << format_double(v) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_n < 1) throw CLI::ValidationError("--max-n", "must be >= 1");
  const VerificationReport report = run_verification(o.max_n);
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out << json{{"max_n", o.max_n}, {"passed", report.passed()}, {"checks", checks}}.dump()
        << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    }
  }
  if (!report.passed()) {
    err << "verification failed: " << *report.first_failure() << '\n';
    return kExitVerificationFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefix-exchange distance toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* dist = app.add_subcommand("dist", "Distance and an optimal sorting trace");
  dist->add_option("permutation", o.permutation, "One-line notation, e.g. \"4 1 6 2 5 7 3\"")
      ->required();
  add_format(dist, o);

  auto* table = app.add_subcommand("table", "Whitney numbers W_{n,k} for one n");
  table->add_option("--n", o.n, "Permutation size")->required();
  table->add_option("--k", o.k, "Print only W_{n,k}");
  table->add_option("--method", o.method, "explicit | recurrence_i | recurrence_ii | gf | bfs")
      ->check(CLI::IsMember({"explicit", "recurrence_i", "recurrence_ii", "gf", "bfs"}))
      ->capture_default_str();
  table->add_option("--cache", o.cache, "Also write the row to this cache file");
  table->add_flag("--checksum", o.checksum, "Check that the row sums to n!");
  add_format(table, o);

  auto* moments = app.add_subcommand("moments", "Exact mean and variance");
  moments->add_option("--n", o.n, "Permutation size")->required();
  moments->add_option("--decimals", o.decimals, "Also print decimal approximations")
      ->check(CLI::Range(0, 200));
  add_format(moments, o);

  auto* cf = app.add_subcommand("cf", "Characteristic function of the normalized distance");
  cf->add_option("--n", o.n, "Permutation size (>= 2)")->required();
  cf->add_option("--t", o.t, "Argument t")->required();
  add_format(cf, o);

  auto* sample = app.add_subcommand("sample", "Seeded normalized distance samples");
  sample->add_option("--n", o.n, "Permutation size (>= 2)")->required();
  sample->add_option("--count", o.count, "Number of samples")->required();
  sample->add_option("--seed", o.seed, "Seed (required)")->required();
  sample->add_option("--decimals", o.decimals, "Decimal digits in the JSON record")
      ->check(CLI::Range(0, 200));
  add_format(sample, o);

  auto* verify = app.add_subcommand("verify", "Run the cross-validation matrix");
  verify->add_option("--max-n", o.max_n, "Largest n to check")->capture_default_str();
  add_format(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dist) return cmd_dist(o, out);
    if (*table) return cmd_table(o, out, err);
    if (*moments) return cmd_moments(o, out);
    if (*cf) return cmd_cf(o, out);
    if (*sample) return cmd_sample(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pexc::cli
