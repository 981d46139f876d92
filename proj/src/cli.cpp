#include "ktrees/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ktrees/cycle_index.hpp"
#include "ktrees/errors.hpp"
#include "ktrees/gamma_gf.hpp"
#include "ktrees/oracle.hpp"
#include "ktrees/tables.hpp"

namespace ktrees::cli {

namespace {

struct Options {
  std::optional<int> k;
  std::optional<int> n;
  std::string engine = "gf";
  std::string emit = "table";
  std::optional<std::string> lambda;
  bool dump_gamma = false;
  bool dump_cycle_index = false;
  bool show_forms = false;
  std::optional<std::string> verify;
  int max_degree = CycleIndexLimits{}.max_degree;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int require(const std::optional<int>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

int run_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  const VerifyReport report = verify_tables(*opts.verify);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  for (const auto& c : report.checks) {
    if (c.passed()) {
      out << "PASS k=" << c.k << " n=" << c.n << " " << c.actual.get_str() << "\n";
    } else {
      out << "FAIL k=" << c.k << " n=" << c.n << " expected " << c.expected.get_str() << " got "
          << c.actual.get_str() << "\n";
    }
  }
  out << (report.passed() ? "PASS" : "FAIL") << ": " << report.checks.size() << " checks, " << report.failures()
      << " failures\n";
  return report.passed() ? kSuccess : kVerificationFailed;
}

int run_dump_gamma(const Options& opts, std::ostream& out) {
  const int k = require(opts.k, "--k");
  const int order = require(opts.n, "--n");
  if (!opts.lambda) throw UsageError("--dump-gamma needs --lambda");
  const Partition lambda = Partition::parse(*opts.lambda);
  if (lambda.weight() != k) {
    throw UsageError("partition {" + lambda.to_string() + "} has weight " + std::to_string(lambda.weight()) +
                     ", expected " + std::to_string(k));
  }
  const GammaGfCache cache(k, order);
  const auto coefficients = assert_nonneg_integers(cache.cty(lambda));
  out << lambda.to_string() << ":";
  for (std::size_t d = 0; d < coefficients.size(); ++d) out << (d ? ", " : " ") << coefficients[d].get_str();
  out << "\n";
  return kSuccess;
}

int run_dump_cycle_index(const Options& opts, std::ostream& out) {
  const int k = require(opts.k, "--k");
  const int degree = require(opts.n, "--n");
  CycleIndexLimits limits;
  limits.max_degree = opts.max_degree;
  const GammaCycleIndexSystem system(k, degree, limits);
  if (!opts.lambda) {
    out << system.ktree().dump();
    return kSuccess;
  }
  const Partition lambda = Partition::parse(*opts.lambda);
  if (lambda.weight() == k) {
    out << system.cty(lambda).dump();
  } else if (lambda.weight() == k + 1) {
    out << system.ctxy(lambda).dump();
  } else {
    throw UsageError("partition {" + lambda.to_string() + "} must have weight k or k+1");
  }
  return kSuccess;
}

int run_table(const Options& opts, std::ostream& out) {
  const int k = require(opts.k, "--k");
  const int n = require(opts.n, "--n");
  const Engine engine = parse_engine(opts.engine);
  CycleIndexLimits limits;
  limits.max_degree = opts.max_degree;
  const EnumerationTable table = compute_table(k, n, engine, limits);
  if (opts.emit == "csv") {
    out << to_csv(table);
  } else if (opts.emit == "json") {
    out << to_json(table) << "\n";
  } else {
    out << to_text(table);
  }
  if (opts.show_forms) {
    if (engine != Engine::oracle) throw UsageError("--show-forms requires --engine oracle");
    for (const auto& form : oracle::grow_ktrees(k, n)) out << "form " << oracle::to_hex(form) << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact enumeration of unlabeled k-trees by number of hedra", "ktrees"};
  app.add_option("--k", opts.k, "Clique size k of the k-trees");
  app.add_option("--n", opts.n, "Largest number of hedra (truncation order)");
  app.add_option("--engine", opts.engine, "gf | cycle-index | oracle")
      ->check(CLI::IsMember({"gf", "cycle-index", "oracle"}));
  app.add_option("--emit", opts.emit, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--lambda", opts.lambda, "Cycle type as comma-separated parts");
  app.add_flag("--dump-gamma", opts.dump_gamma, "Print the Y-rooted series of class --lambda");
  app.add_flag("--dump-cycle-index", opts.dump_cycle_index,
               "Print the k-tree cycle index (or the class --lambda cycle index) up to x-weight --n");
  app.add_flag("--show-forms", opts.show_forms, "With --engine oracle, print canonical forms in hex");
  app.add_option("--verify", opts.verify, "Check every entry of a reference table file");
  app.add_option("--max-degree", opts.max_degree, "Degree bound for the cycle-index engine")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (opts.verify) return run_verify(opts, out, err);
    if (opts.dump_gamma) return run_dump_gamma(opts, out);
    if (opts.dump_cycle_index) return run_dump_cycle_index(opts, out);
    return run_table(opts, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace ktrees::cli
