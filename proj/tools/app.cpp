#include "app.hpp"

#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "render.hpp"
#include "wk/aut_bounds.hpp"
#include "wk/closed_forms.hpp"
#include "wk/denominators.hpp"
#include "wk/evaluator.hpp"
#include "wk/kappa.hpp"
#include "wk/monotonicity.hpp"

namespace wk::cli {

namespace {

constexpr int kUsageError = 2;

struct CommonOpts {
  std::string format = "text";
  std::string cache_path;
  int jobs = 1;
  bool progress = false;

  Format fmt() const { return parse_format(format); }

  SweepOptions sweep() const {
    SweepOptions options;
    options.jobs = jobs;
    if (progress) {
      options.progress = [](std::size_t done, std::size_t total) {
        static std::mutex mutex;
        std::lock_guard lock(mutex);
        std::cerr << "\r" << done << "/" << total << std::flush;
        if (done == total) std::cerr << "\n";
      };
    }
    return options;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--cache", opts.cache_path, "Memo cache file (loaded if present, saved on exit)");
  cmd->add_option("--jobs", opts.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  cmd->add_flag("--progress", opts.progress, "Report sweep progress on stderr");
}

// Loads the cache before the body runs and saves it afterwards; domain
// errors skip the save.
int with_cache(const CommonOpts& opts, const std::function<int()>& body) {
  if (!opts.cache_path.empty() && std::filesystem::exists(opts.cache_path)) {
    cache_load(default_evaluator().memo(), opts.cache_path);
  }
  const int code = body();
  if (!opts.cache_path.empty()) {
    cache_save(default_evaluator().memo(), opts.cache_path);
  }
  return code;
}

int report_exit(const VerificationReport& report, const CommonOpts& opts) {
  std::cout << render_report(report, opts.fmt()) << "\n";
  return report.pass() ? 0 : 1;
}

std::string csv_exponents(const std::vector<int>& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(exponents[i]);
  }
  return out;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"Exact psi/kappa intersection numbers on moduli of stable curves"};
  app.require_subcommand(1);

  int g = 0;
  int n = 0;
  std::vector<int> dvals;
  std::vector<int> avals;
  std::uint64_t pprime = 0;
  bool sweep_below = false;
  CommonOpts opts;

  std::function<int()> action;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one psi intersection number");
  eval_cmd->add_option("--g", g, "Genus")->required();
  eval_cmd->add_option("--d", dvals, "Comma-separated psi exponents")
      ->required()
      ->delimiter(',');
  add_common(eval_cmd, opts);
  eval_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        const Rational value = default_evaluator().intersection(normalize(g, dvals));
        std::cout << render_rational(value, opts.fmt()) << "\n";
        return 0;
      });
    };
  });

  auto* kappa_cmd = app.add_subcommand("kappa", "Evaluate one pure kappa integral");
  kappa_cmd->add_option("--g", g, "Genus")->required();
  kappa_cmd->add_option("--a", avals, "Comma-separated kappa indices")
      ->required()
      ->delimiter(',');
  add_common(kappa_cmd, opts);
  kappa_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        const Rational value =
            default_kappa_evaluator().kappa_integral(normalize_kappa(g, avals));
        std::cout << render_rational(value, opts.fmt()) << "\n";
        return 0;
      });
    };
  });

  auto* denom_cmd = app.add_subcommand("denom", "lcm of denominators over all n-point specs");
  denom_cmd->add_option("--g", g, "Genus")->required();
  denom_cmd->add_option("--n", n, "Number of marked points")->required();
  add_common(denom_cmd, opts);
  denom_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        const auto f = denominator_lcm(default_evaluator(), g, n, opts.sweep());
        std::cout << render_factorization(f, opts.fmt()) << "\n";
        return 0;
      });
    };
  });

  auto* script_cmd =
      app.add_subcommand("scriptD", "lcm of denominators over specs with all exponents >= 2");
  script_cmd->add_option("--g", g, "Genus")->required();
  add_common(script_cmd, opts);
  script_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        const auto f = denominator_lcm_interior(default_evaluator(), g, opts.sweep());
        std::cout << render_factorization(f, opts.fmt()) << "\n";
        return 0;
      });
    };
  });

  auto* tilde_cmd = app.add_subcommand("tildeD", "lcm of denominators of pure kappa integrals");
  tilde_cmd->add_option("--g", g, "Genus")->required();
  add_common(tilde_cmd, opts);
  tilde_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        const auto f = kappa_denominator_lcm(default_kappa_evaluator(), g, opts.sweep());
        std::cout << render_factorization(f, opts.fmt()) << "\n";
        return 0;
      });
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
  verify_cmd->require_subcommand(1);

  auto add_verifier = [&](const std::string& name, const std::string& desc,
                          std::function<VerificationReport()> make, bool needs_n = false) {
    auto* cmd = verify_cmd->add_subcommand(name, desc);
    cmd->add_option("--g", g, "Genus")->required();
    if (needs_n) cmd->add_option("--n", n, "Point count bound / substitute");
    add_common(cmd, opts);
    cmd->callback([&, make] {
      action = [&, make]() {
        return with_cache(opts, [&, make] { return report_exit(make(), opts); });
      };
    });
    return cmd;
  };

  n = 0;
  add_verifier("chain", "D(g,n) divides D(g,n+1)", [&] {
    const int n_max = n > 0 ? n : std::max(3, 3 * g - 3);
    return verify_divisibility_chain(default_evaluator(), g, n_max, opts.sweep());
  }, /*needs_n=*/true);

  add_verifier("conj25", "Prime orders of the interior denominator lcm", [&] {
    return verify_interior_lcm_prime_orders(default_evaluator(), g, opts.sweep());
  });

  add_verifier("thm43", "Prime profile of the interior denominator lcm", [&] {
    return verify_interior_lcm_prime_profile(default_evaluator(), g, opts.sweep());
  });

  add_verifier("lemma42", "Two-point denominator profile via the series oracle", [&] {
    return verify_two_point_denominator_profile(g);
  });

  add_verifier("ordlemma", "ord(p, D(g,3)) >= 2 for primes p <= g+1", [&] {
    return verify_three_point_prime_squares(default_evaluator(), g, opts.sweep());
  });

  auto* autbound_cmd = add_verifier(
      "autbound", "Automorphism orders divide the 3-point denominator lcm", [&] {
        const int nn = n > 0 ? n : 3;
        if (!sweep_below) {
          return verify_aut_orders_divide_three_point(
              g, denominator_lcm(default_evaluator(), g, nn, opts.sweep()));
        }
        // every genus up to g, each against its own 3-point lcm
        VerificationReport merged;
        merged.claim = "aut-order-divides-d3 g<=" + std::to_string(g);
        for (int gp = 2; gp <= g; ++gp) {
          const VerificationReport one = verify_aut_orders_divide_three_point(
              gp, denominator_lcm(default_evaluator(), gp, nn, opts.sweep()));
          merged.instances += one.instances;
          for (const Witness& w : one.witnesses) {
            merged.witnesses.push_back(
                {"g=" + std::to_string(gp) + " " + w.instance, w.expected, w.actual});
          }
        }
        return merged;
      },
      /*needs_n=*/true);
  autbound_cmd->add_flag("--sweep", sweep_below, "Check every genus from 2 up to --g");

  add_verifier("monotone", "Smoothing a pair of exponents never decreases the value", [&] {
    return verify_monotonicity(default_evaluator(), g, opts.sweep());
  });

  {
    auto* cmd = verify_cmd->add_subcommand(
        "counterexample", "Stable-curve configuration exceeding the smooth prime bound");
    cmd->add_option("--g", g, "Genus")->required();
    cmd->add_option("--p", pprime, "Prime >= 5")->required();
    add_common(cmd, opts);
    cmd->callback([&] {
      action = [&]() {
        const StableCounterexample c = stable_counterexample(g, pprime);
        VerificationReport report;
        report.claim = "stable-counterexample g=" + std::to_string(g) +
                       " p=" + std::to_string(pprime);
        report.record(c.exceeds,
                      "n=" + std::to_string(c.components) +
                          " ord_lower_bound=" + std::to_string(c.ord_lower_bound),
                      "> " + std::to_string(c.components),
                      std::to_string(c.ord_lower_bound));
        return report_exit(report, opts);
      };
    });
  }

  auto* cross_cmd =
      app.add_subcommand("crosscheck", "DVV evaluator vs the two-point closed forms");
  cross_cmd->add_option("--g", g, "Largest genus")->required();
  add_common(cross_cmd, opts);
  cross_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        return report_exit(crosscheck_two_point(default_evaluator(), g), opts);
      });
    };
  });

  auto* table_cmd = app.add_subcommand("table", "Dump all n-point values at genus g");
  table_cmd->add_option("--g", g, "Genus")->required();
  table_cmd->add_option("--n", n, "Number of marked points")->required();
  add_common(table_cmd, opts);
  table_cmd->callback([&] {
    action = [&]() {
      return with_cache(opts, [&] {
        const auto specs = enumerate_specs(g, n, 0);
        std::vector<Rational> values(specs.size());
        parallel_for(specs.size(), opts.jobs, [&](std::size_t i) {
          values[i] = default_evaluator().intersection(specs[i]);
        });
        const Format format = opts.fmt();
        if (format == Format::kCsv) {
          std::cout << "g,n,exponents,numerator,denominator\n";
          for (std::size_t i = 0; i < specs.size(); ++i) {
            std::cout << g << ',' << n << ',' << csv_exponents(specs[i].exponents) << ','
                      << values[i].get_num().get_str() << ','
                      << values[i].get_den().get_str() << "\n";
          }
        } else if (format == Format::kJson) {
          nlohmann::ordered_json rows = nlohmann::ordered_json::array();
          for (std::size_t i = 0; i < specs.size(); ++i) {
            rows.push_back({{"g", g},
                            {"n", n},
                            {"exponents", specs[i].exponents},
                            {"num", values[i].get_num().get_str()},
                            {"den", values[i].get_den().get_str()}});
          }
          std::cout << rows.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < specs.size(); ++i) {
            std::cout << spec_str(specs[i]) << " " << rational_str(values[i]) << "\n";
          }
        }
        return 0;
      });
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wk");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // CLI11 prints its own message; map everything (including --help) onto
    // our exit-code contract, except help which is a success
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace wk::cli
