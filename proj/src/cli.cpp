#include "dcount/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcount/general_count.hpp"
#include "dcount/linear_count.hpp"
#include "dcount/oracle.hpp"
#include "dcount/quadratic_count.hpp"
#include "dcount/walk.hpp"

namespace dcount::cli {

namespace {

using kernels::Exec;

enum class Format { json, csv };

class Emitter {
 public:
  Emitter(std::ostream& out, Format format, std::string value_key)
      : out_(out), format_(format), key_(std::move(value_key)) {}

  void row(std::uint64_t n, const std::string& value) {
    if (format_ == Format::csv) {
      out_ << n << ',' << value << '\n';
      return;
    }
    nlohmann::ordered_json line;
    line["n"] = n;
    line[key_] = value;
    out_ << line.dump() << '\n';
  }

  void table(const CountTable& t) {
    for (std::size_t n = 0; n < t.values.size(); ++n) row(n, t[n].get_str());
  }

 private:
  std::ostream& out_;
  Format format_;
  std::string key_;
};

class VerifyFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string coeffs;
  std::string terms;
  std::string right;
  std::string alpha;
  std::string path;
  std::string equation;
  std::size_t max_n = 0;
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> steps;
  bool verify = false;
  Format format = Format::json;
  int jobs = 0;
};

void expect_equal(const CountTable& reference, const CountTable& other, const std::string& ref_name,
                  const std::string& other_name) {
  for (std::size_t n = 0; n < reference.values.size(); ++n) {
    if (reference[n] != other[n]) {
      throw VerifyFailed("verify: " + ref_name + " and " + other_name + " disagree at n=" + std::to_string(n) +
                         " (" + reference[n].get_str() + " vs " + other[n].get_str() + ")");
    }
  }
}

// Runs the oracle for every n it accepts; stops quietly at the first guard
// rejection since larger n only cost more.
void verify_with_oracle(const CountTable& table, const std::function<BigInt(std::uint64_t)>& oracle,
                        const std::string& name, std::ostream& err) {
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    BigInt expected;
    try {
      expected = oracle(n);
    } catch (const GuardRejected& e) {
      err << "verify: oracle stopped at n=" << n << ": " << e.what() << '\n';
      return;
    }
    if (expected != table[n]) {
      throw VerifyFailed("verify: " + name + " disagrees with brute force at n=" + std::to_string(n) + " (" +
                         table[n].get_str() + " vs " + expected.get_str() + ")");
    }
  }
}

void require_path(const std::string& path, std::initializer_list<const char*> allowed) {
  for (const char* p : allowed) {
    if (path == p) return;
  }
  std::string list;
  for (const char* p : allowed) list += std::string(list.empty() ? "" : "|") + p;
  throw InvalidInput("--path must be one of " + list + ", got '" + path + "'");
}

int cmd_linear(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearInstance inst{parse_coeffs(o.coeffs), o.max_n};
  const std::string path = o.path.empty() ? "re1" : o.path;
  require_path(path, {"re1", "rho"});
  const CountTable table = path == "re1" ? count_linear_re1(inst) : count_linear_rho(inst);
  if (o.verify) {
    expect_equal(table, path == "re1" ? count_linear_rho(inst) : count_linear_re1(inst), path,
                 path == "re1" ? "rho" : "re1");
    verify_with_oracle(table, [&](std::uint64_t n) { return oracle::brute_linear(inst, n); }, path, err);
  }
  Emitter(out, o.format, "count").table(table);
  return exit_ok;
}

int cmd_quadratic(const Options& o, std::ostream& out, std::ostream& err) {
  const QuadraticInstance inst{parse_coeffs(o.coeffs), o.max_n};
  const std::string path = o.path.empty() ? "re2" : o.path;
  require_path(path, {"re2", "theta"});
  const CountTable table = path == "re2" ? count_quadratic_re2(inst) : count_quadratic_theta(inst);
  if (o.verify) {
    expect_equal(table, path == "re2" ? count_quadratic_theta(inst) : count_quadratic_re2(inst), path,
                 path == "re2" ? "theta" : "re2");
    verify_with_oracle(table, [&](std::uint64_t n) { return oracle::brute_quadratic(inst, n); }, path, err);
  }
  Emitter(out, o.format, "count").table(table);
  return exit_ok;
}

CountTable general_by_path(const GeneralInstance& inst, const std::string& path) {
  if (path == "re3") return count_general_re3(inst);
  if (path == "bell") return count_general_bell_table(inst);
  return count_general_c5(inst);
}

void verify_general(const GeneralInstance& inst, const CountTable& table, const std::string& path,
                    std::ostream& err) {
  for (const char* other : {"c5", "re3", "bell"}) {
    if (path != other) expect_equal(table, general_by_path(inst, other), path, other);
  }
  verify_with_oracle(table, [&](std::uint64_t n) { return oracle::brute_general(inst, n); }, path, err);
}

int cmd_general(const Options& o, std::ostream& out, std::ostream& err) {
  const GeneralInstance inst{parse_terms(o.terms), o.max_n};
  const std::string path = o.path.empty() ? "c5" : o.path;
  require_path(path, {"c5", "re3", "bell"});
  const CountTable table = general_by_path(inst, path);
  if (o.verify) verify_general(inst, table, path, err);
  Emitter(out, o.format, "count").table(table);
  return exit_ok;
}

int cmd_partitions(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string path = o.path.empty() ? "re1" : o.path;
  require_path(path, {"re1", "rho", "pentagonal"});
  CountTable table;
  if (o.max_n == 0) {
    table.values = {1};
  } else {
    LinearInstance inst{parse_coeffs("1.." + std::to_string(o.max_n)), o.max_n};
    table = path == "re1" ? count_linear_re1(inst)
            : path == "rho" ? count_linear_rho(inst)
                            : oracle::partition_pentagonal(o.max_n);
    if (o.verify) {
      expect_equal(table, count_linear_re1(inst), path, "re1");
      expect_equal(table, count_linear_rho(inst), path, "rho");
      expect_equal(table, oracle::partition_pentagonal(o.max_n), path, "pentagonal");
      err << "verify: brute force skipped (partition instances exceed the oracle's term limit)\n";
    }
  }
  Emitter(out, o.format, "count").table(table);
  return exit_ok;
}

int cmd_walk(const Options& o, std::ostream& out, std::ostream&) {
  WalkSpec spec{parse_rational(o.alpha), {}};
  if (!o.coeffs.empty()) {
    spec.coeffs = parse_coeffs(o.coeffs);
    if (o.steps && *o.steps != spec.coeffs.size()) {
      throw InvalidInput("--steps " + std::to_string(*o.steps) + " does not match the " +
                         std::to_string(spec.coeffs.size()) + " displacements in --coeffs");
    }
  } else {
    if (!o.steps || *o.steps == 0) throw InvalidInput("walk needs --coeffs or --steps >= 1");
    spec.coeffs.assign(*o.steps, 1);
  }
  const std::string path = o.path.empty() ? "h3" : o.path;
  require_path(path, {"h3", "exp"});
  const ScaledDistribution dist =
      path == "h3" ? walk_distribution(spec, o.max_n) : walk_convolution_oracle(spec, o.max_n);
  if (o.verify) {
    const ScaledDistribution other =
        path == "h3" ? walk_convolution_oracle(spec, o.max_n) : walk_distribution(spec, o.max_n);
    if (!(dist == other)) throw VerifyFailed("verify: walk recursion and series expansion disagree");
  }
  Emitter emit(out, o.format, "weight");
  for (std::size_t n = 0; n < dist.weights.size(); ++n) emit.row(n, dist.weights[n].get_str());
  return exit_ok;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const auto left = parse_terms(o.terms);
  const auto right = parse_terms(o.right);
  if (right.size() != 1) throw InvalidInput("--right takes exactly one term");
  const auto hits = two_sided_search(left, right.front(), o.bound);
  if (o.verify) {
    const GeneralInstance inst{left, o.bound};
    verify_general(inst, count_general_c5(inst), "c5", err);
  }
  Emitter emit(out, o.format, "count");
  for (const auto& h : hits) emit.row(h.n, h.count.get_str());
  return exit_ok;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&) {
  const std::string& eq = o.equation;
  std::function<BigInt(std::uint64_t)> count;
  if (eq == "linear") {
    count = [inst = LinearInstance{parse_coeffs(o.coeffs), o.max_n}](std::uint64_t n) {
      return oracle::brute_linear(inst, n);
    };
  } else if (eq == "quadratic") {
    count = [inst = QuadraticInstance{parse_coeffs(o.coeffs), o.max_n}](std::uint64_t n) {
      return oracle::brute_quadratic(inst, n);
    };
  } else if (eq == "general") {
    count = [inst = GeneralInstance{parse_terms(o.terms), o.max_n}](std::uint64_t n) {
      return oracle::brute_general(inst, n);
    };
  } else {
    throw InvalidInput("--equation must be one of linear|quadratic|general, got '" + eq + "'");
  }
  // Compute everything before printing so a guard rejection leaves no partial output.
  CountTable table;
  for (std::uint64_t n = 0; n <= o.max_n; ++n) table.values.push_back(count(n));
  Emitter(out, o.format, "count").table(table);
  return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solution counts for linear, quadratic and additive Diophantine equations", "dcount"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: json (JSON lines) or csv")
        ->transform(CLI::CheckedTransformer(formats).description(""))
        ->option_text("json|csv");
    sub->add_flag("--verify", o.verify, "Cross-check every counting path and the brute-force oracle");
    sub->add_option("--jobs", o.jobs, "OpenMP threads for the parallel kernels")->check(CLI::PositiveNumber);
  };

  auto* linear = app.add_subcommand("linear", "a_1 k_1 + ... + a_r k_r = n, k_l >= 0");
  linear->add_option("--coeffs", o.coeffs, "Coefficients, e.g. 1,2,3 or 1..8")->required();
  linear->add_option("--max-n", o.max_n, "Largest n")->required();
  linear->add_option("--path", o.path, "re1 (default) or rho");
  add_common(linear);

  auto* quadratic = app.add_subcommand("quadratic", "a_1 k_1^2 + ... + a_r k_r^2 = n, k_l in Z");
  quadratic->add_option("--coeffs", o.coeffs, "Coefficients")->required();
  quadratic->add_option("--max-n", o.max_n, "Largest n")->required();
  quadratic->add_option("--path", o.path, "re2 (default) or theta");
  add_common(quadratic);

  auto* general = app.add_subcommand("general", "g_1(k_1) + ... + g_r(k_r) = n, k_l >= 0");
  general->add_option("--terms,--left", o.terms, "Terms, e.g. k^3,k^3 or 2*k,k^2")->required();
  general->add_option("--max-n", o.max_n, "Largest n")->required();
  general->add_option("--path", o.path, "c5 (default), re3 or bell");
  add_common(general);

  auto* partitions = app.add_subcommand("partitions", "Partition numbers p(0..N)");
  partitions->add_option("--max-n", o.max_n, "Largest n")->required();
  partitions->add_option("--path", o.path, "re1 (default), rho or pentagonal");
  add_common(partitions);

  auto* walk = app.add_subcommand("walk", "Scaled displacement weights of a forward Poisson walk");
  walk->add_option("--alpha", o.alpha, "Poisson mean per step, p/q")->required();
  walk->add_option("--coeffs", o.coeffs, "Displacement per step (default: 1 for each of --steps)");
  walk->add_option("--steps", o.steps, "Number of steps r");
  walk->add_option("--max-n", o.max_n, "Largest displacement")->required();
  walk->add_option("--path", o.path, "h3 (default) or exp");
  add_common(walk);

  auto* search = app.add_subcommand("search", "Values h(m) <= bound hit by g_1(k_1) + ... + g_r(k_r)");
  search->add_option("--left", o.terms, "Left-side terms")->required();
  search->add_option("--right", o.right, "Right-side term, e.g. k^2")->required();
  search->add_option("--bound", o.bound, "Largest right-side value")->required()->check(CLI::PositiveNumber);
  add_common(search);

  auto* brute = app.add_subcommand("oracle", "Brute-force enumeration (guarded by DCOUNT_GUARD_LIMIT)");
  brute->add_option("--equation", o.equation, "linear, quadratic or general")->required();
  brute->add_option("--coeffs", o.coeffs, "Coefficients (linear, quadratic)");
  brute->add_option("--terms,--left", o.terms, "Terms (general)");
  brute->add_option("--max-n", o.max_n, "Largest n")->required();
  add_common(brute);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "dcount: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  try {
    if (linear->parsed()) return cmd_linear(o, out, err);
    if (quadratic->parsed()) return cmd_quadratic(o, out, err);
    if (general->parsed()) return cmd_general(o, out, err);
    if (partitions->parsed()) return cmd_partitions(o, out, err);
    if (walk->parsed()) return cmd_walk(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (brute->parsed()) return cmd_oracle(o, out, err);
  } catch (const ParseError& e) {
    err << "dcount: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidInput& e) {
    err << "dcount: " << e.what() << '\n';
    return exit_usage;
  } catch (const GuardRejected& e) {
    err << "dcount: " << e.what() << '\n';
    return exit_guard;
  } catch (const VerifyFailed& e) {
    err << "dcount: " << e.what() << '\n';
    return exit_failure;
  } catch (const InvariantViolation& e) {
    err << "dcount: internal error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace dcount::cli
