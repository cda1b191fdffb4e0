#include "calogero/verify.hpp"

#include "calogero/limits.hpp"
#include "calogero/operators.hpp"
#include "calogero/pieri.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

namespace calogero {

namespace {

int pool_size(int requested, std::size_t tasks) {
  int t = requested;
  if (t <= 0) {
    const char* env = std::getenv("CALOGERO_THREADS");
    if (env) t = std::atoi(env);
  }
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  return std::min<int>(t, static_cast<int>(std::max<std::size_t>(tasks, 1)));
}

std::vector<CaseResult> run_parallel(const std::vector<std::function<CaseResult()>>& tasks,
                                     int threads) {
  std::vector<CaseResult> results(tasks.size());
  int workers = pool_size(threads, tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      results[i] = tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

struct Config {
  Family fam;
  int n;
  Rational g0, g1, omega;
  Params params() const {
    Params p;
    p.family = fam;
    p.n = n;
    p.g0 = g0;
    p.g1 = fam == Family::A ? Rational(0) : g1;
    p.omega = omega;
    p.validate();
    return p;
  }
};

std::vector<Config> make_grid(const VerifyOptions& opt, bool integer_couplings) {
  std::vector<Rational> omegas = opt.omega ? std::vector<Rational>{*opt.omega}
                                           : std::vector<Rational>{rat(1), rat(2, 5)};
  std::vector<Rational> g0s, g1s;
  if (opt.g0)
    g0s = {*opt.g0};
  else
    g0s = integer_couplings ? std::vector<Rational>{rat(1), rat(2)}
                            : std::vector<Rational>{rat(0), rat(1, 2), rat(1), rat(2)};
  if (opt.g1)
    g1s = {*opt.g1};
  else
    g1s = integer_couplings ? std::vector<Rational>{rat(0), rat(1)}
                            : std::vector<Rational>{rat(0), rat(1, 2), rat(3, 2)};
  std::vector<int> ns;
  if (opt.n)
    ns = {*opt.n};
  else
    for (int n = 1; n <= (opt.deep ? 4 : 3); ++n) ns.push_back(n);
  std::vector<Family> fams = opt.family ? std::vector<Family>{*opt.family}
                                        : std::vector<Family>{Family::A, Family::B};
  std::vector<Config> grid;
  for (Family f : fams)
    for (int n : ns)
      for (const auto& w : omegas)
        for (const auto& g0 : g0s) {
          if (f == Family::A) {
            grid.push_back({f, n, g0, rat(0), w});
          } else {
            for (const auto& g1 : g1s) grid.push_back({f, n, g0, g1, w});
          }
        }
  return grid;
}

int default_weight(const VerifyOptions& opt) {
  if (opt.max_weight) return *opt.max_weight;
  return opt.deep ? 4 : 3;
}

ordered_json base_line(const std::string& suite, const Params& p) {
  ordered_json j;
  j["suite"] = suite;
  j["family"] = std::string(1, family_char(p.family));
  j["n"] = p.n;
  j["couplings"] = ordered_json{{"g0", rational_str(p.g0)}, {"g1", rational_str(p.g1)}};
  j["omega"] = rational_str(p.omega);
  return j;
}

CaseResult status_result(ordered_json line, CheckReport::Status st, const std::string& detail,
                         int residual_terms = 0) {
  CaseResult r;
  line["status"] = st == CheckReport::Status::pass
                       ? "pass"
                       : (st == CheckReport::Status::fail ? "fail" : "non-generic");
  line["residualTermCount"] = residual_terms;
  if (!detail.empty()) line["detail"] = detail;
  r.failed = st == CheckReport::Status::fail;
  r.non_generic = st == CheckReport::Status::non_generic;
  r.line = std::move(line);
  return r;
}

CaseResult bool_result(ordered_json line, bool ok, const std::string& detail = "") {
  CaseResult r;
  line["status"] = ok ? "pass" : "fail";
  if (!detail.empty()) line["detail"] = detail;
  r.failed = !ok;
  r.line = std::move(line);
  return r;
}

std::vector<CaseResult> suite_orthogonality(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/true)) {
    if (cfg.n < 2) continue;
    auto params = cfg.params();
    auto table = std::make_shared<GramTable>(params);
    auto lams = partitions_leq_weight(cfg.n, maxw);
    bool even = cfg.fam == Family::B;
    for (std::size_t i = 0; i < lams.size(); ++i)
      for (std::size_t j = i + 1; j < lams.size(); ++j) {
        Partition a = lams[i], b = lams[j];
        tasks.push_back([params, table, a, b, even]() {
          auto ea = expand_in_msym(construct_poly(a, params).poly, even);
          auto eb = expand_in_msym(construct_poly(b, params).poly, even);
          bool ok = table->inner_expanded(ea, eb).is_zero();
          ordered_json line = base_line("orthogonality", params);
          line["lambda"] = a;
          line["mu"] = b;
          return bool_result(std::move(line), ok);
        });
      }
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_norms(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/true)) {
    auto params = cfg.params();
    auto table = std::make_shared<GramTable>(params);
    bool even = cfg.fam == Family::B;
    for (const auto& lam : partitions_leq_weight(cfg.n, maxw)) {
      tasks.push_back([params, table, lam, even]() {
        auto el = expand_in_msym(construct_poly(lam, params).poly, even);
        ExactScalar gram = table->inner_expanded(el, el);
        bool ok = norm_formula(lam, params) == gram &&
                  mehta_macdonald(params) * norm_ratio(lam, params) == gram;
        ordered_json line = base_line("norms", params);
        line["lambda"] = lam;
        return bool_result(std::move(line), ok);
      });
    }
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_mehta(const VerifyOptions& opt) {
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/true)) {
    auto params = cfg.params();
    tasks.push_back([params]() {
      ExactScalar direct = gaussian_moment(Poly::constant(params.n, rat(1)), params);
      Partition zero(static_cast<std::size_t>(params.n), 0);
      bool ok = mehta_macdonald(params) == direct &&
                norm_formula(zero, params) == direct;
      ordered_json line = base_line("mehta", params);
      return bool_result(std::move(line), ok);
    });
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_pieri(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/false)) {
    auto params = cfg.params();
    auto lams = partitions_leq_weight(cfg.n, maxw);
    // r = 1 identities, both families
    for (const auto& lam : lams) {
      if (opt.r && *opt.r != 1) break;
      tasks.push_back([params, lam]() {
        CheckReport rep = pieri_r1_check(lam, params);
        ordered_json line = base_line("pieri", params);
        line["lambda"] = lam;
        line["r"] = 1;
        line["kind"] = "recurrence-r1";
        return status_result(std::move(line), rep.status, rep.detail, rep.residual_terms);
      });
    }
    // full Laguerre expansion for 2 <= r <= n
    if (cfg.fam == Family::B)
      for (int r = 2; r <= cfg.n; ++r) {
        if (opt.r && *opt.r != r) continue;
        for (const auto& lam : lams)
          tasks.push_back([params, lam, r]() {
            CheckReport rep = pieri_full_B_check(r, lam, params);
            ordered_json line = base_line("pieri", params);
            line["lambda"] = lam;
            line["r"] = r;
            line["kind"] = "laguerre-full";
            return status_result(std::move(line), rep.status, rep.detail, rep.residual_terms);
          });
      }
    // norm recurrence for all r
    for (int r = 1; r <= cfg.n; ++r) {
      if (opt.r && *opt.r != r) continue;
      for (const auto& lam : lams)
        tasks.push_back([params, lam, r]() {
          CheckReport rep = norm_recurrence_check(lam, r, params);
          ordered_json line = base_line("pieri", params);
          line["lambda"] = lam;
          line["r"] = r;
          line["kind"] = "norm-recurrence";
          return status_result(std::move(line), rep.status, rep.detail, rep.residual_terms);
        });
    }
  }
  // family-A structure via Gram projection at integer couplings
  for (const auto& cfg : make_grid(opt, /*integer=*/true)) {
    if (cfg.fam != Family::A) continue;
    auto params = cfg.params();
    auto table = std::make_shared<GramTable>(params);
    for (int r = 1; r <= cfg.n; ++r) {
      if (opt.r && *opt.r != r) continue;
      for (const auto& lam : partitions_leq_weight(cfg.n, std::min(maxw, 2))) {
        tasks.push_back([params, table, lam, r]() {
          CheckReport rep = pieri_structure_A_check(r, lam, params, table.get());
          ordered_json line = base_line("pieri", params);
          line["lambda"] = lam;
          line["r"] = r;
          line["kind"] = "structure-A";
          return status_result(std::move(line), rep.status, rep.detail, rep.residual_terms);
        });
      }
    }
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_diffeq(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/false)) {
    auto params = cfg.params();
    for (const auto& lam : partitions_leq_weight(cfg.n, maxw)) {
      tasks.push_back([params, lam]() {
        const Poly& p = construct_poly(lam, params).poly;
        bool ok = apply_D1(p, params) == p * eigenvalue_E(1, lam, params);
        if (params.n == 1)  // one-variable reduction against the closed form
          ok = ok && p == one_var_closed_form(lam[0], params);
        ordered_json line = base_line("diffeq", params);
        line["lambda"] = lam;
        return bool_result(std::move(line), ok);
      });
    }
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_difference_limit(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/false)) {
    if (cfg.n > (opt.deep ? 3 : 2)) continue;
    if (cfg.g0 == 0 && cfg.fam == Family::A && cfg.omega != rat(1)) continue;  // trim dupes
    auto params = cfg.params();
    int rmax = std::min(cfg.n, opt.deep && cfg.n == 3 ? 2 : cfg.n);
    for (int r = 1; r <= rmax; ++r) {
      if (opt.r && *opt.r != r) continue;
      for (const auto& lam : partitions_leq_weight(cfg.n, maxw)) {
        for (int pt = 0; pt < 3; ++pt) {
          tasks.push_back([params, lam, r, pt, seed = opt.seed]() {
            auto started = std::chrono::steady_clock::now();
            auto x = seeded_point(params.n, params.family, seed, pt);
            auto chk = difference_eigen_check(lam, r, x, params);
            double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                    .count();
            ordered_json line = base_line("difference-limit", params);
            line["case"] = "D_" + std::to_string(r) + " " + partition_str(lam) + " pt" +
                           std::to_string(pt);
            line["lambda"] = lam;
            line["r"] = r;
            line["seriesPrefixZero"] = chk.prefix_zero;
            line["leadingCoeffMatches"] = chk.leading_matches;
            line["plainErMatches"] = chk.plain_er_matches;
            line["elapsed"] = elapsed;
            return bool_result(std::move(line), chk.prefix_zero && chk.leading_matches);
          });
        }
      }
    }
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_harmonics(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/false)) {
    auto params = cfg.params();
    for (const auto& lam : partitions_leq_weight(cfg.n, maxw)) {
      tasks.push_back([params, lam]() {
        ordered_json line = base_line("harmonics", params);
        line["lambda"] = lam;
        try {
          auto dec = decompose_harmonic(lam, params);  // asserts internally
          // leading parts reassemble the jack polynomial
          Poly r2 = [&] {
            Partition p2(static_cast<std::size_t>(params.n), 0);
            p2[0] = 2;
            return msym(p2, params.n);
          }();
          Poly sum(params.n);
          for (const auto& t : dec.terms) {
            Poly piece = t.harmonic;
            for (int i = 0; i < t.m; ++i) piece = piece * r2;
            sum += piece;
          }
          Poly jack = jack_monic(lam, params.n, params.g0);
          if (params.family == Family::B) jack = jack.squared_vars();
          bool ok = sum == jack;
          for (const auto& t : dec.terms)
            if (dunkl_projection(lam, t.m, params) != t.harmonic) ok = false;
          return bool_result(std::move(line), ok);
        } catch (const std::exception& e) {
          return bool_result(std::move(line), false, e.what());
        }
      });
    }
  }
  return run_parallel(tasks, opt.threads);
}

std::vector<CaseResult> suite_normalization(const VerifyOptions& opt) {
  int maxw = default_weight(opt);
  std::vector<std::function<CaseResult()>> tasks;
  for (const auto& cfg : make_grid(opt, /*integer=*/false)) {
    auto params = cfg.params();
    for (const auto& lam : partitions_leq_weight(cfg.n, maxw)) {
      tasks.push_back([params, lam]() {
        ordered_json line = base_line("normalization", params);
        line["lambda"] = lam;
        bool ok;
        if (params.family == Family::B) {
          std::vector<Rational> zeros(static_cast<std::size_t>(params.n), rat(0));
          ok = pieri_normalize(construct_poly(lam, params)).poly.eval(zeros) == 1;
        } else {
          std::vector<Rational> ones(static_cast<std::size_t>(params.n), rat(1));
          ok = c_coeff(lam, params) * jack_monic(lam, params.n, params.g0).eval(ones) == 1;
        }
        return bool_result(std::move(line), ok);
      });
    }
  }
  return run_parallel(tasks, opt.threads);
}

CaseResult limits_line(const std::string& check, double beta, double maxAbsError,
                       double rate, bool pass) {
  ordered_json line;
  line["suite"] = "weights-limit";
  line["check"] = check;
  line["beta"] = beta;
  line["maxAbsError"] = maxAbsError;
  line["rateEstimate"] = rate;
  line["status"] = pass ? "pass" : "fail";
  CaseResult r;
  r.failed = !pass;
  r.line = std::move(line);
  return r;
}

std::vector<CaseResult> suite_weights_limit(const VerifyOptions& opt) {
  double tol = opt.tol > 0 ? opt.tol : 1e-3;
  std::vector<std::function<CaseResult()>> tasks;
  const double ladder[3] = {1e-1, 3.162277660168379e-2, 1e-2};

  // gamma-modulus convergence with O(beta^2) rate
  for (double alpha : {1.0, 0.5}) {
    for (double y : {0.0, 1.0, 2.0}) {
      tasks.push_back([alpha, y, tol]() {
        double target = std::exp(-alpha * y * y / 2.0);
        double worst_rate = 0, final_err = 0;
        for (double beta : {1e-1, 3.162277660168379e-2, 1e-2}) {
          double err = std::abs(gamma_modulus_limit(alpha, y, beta) - target);
          worst_rate = std::max(worst_rate, err / (beta * beta));
          final_err = err;
        }
        bool pass = final_err <= tol && worst_rate < 10.0;
        return limits_line("gamma-modulus a=" + std::to_string(alpha) +
                               " y=" + std::to_string(y),
                           1e-2, final_err, worst_rate, pass);
      });
    }
  }
  // gamma-ratio convergence with O(beta) rate
  for (double a : {0.5, 1.0, 1.5}) {
    tasks.push_back([a, tol]() {
      double y = 2.0, b = 0.0;
      double target = std::pow(std::abs(y), a);
      double worst_rate = 0, final_err = 0;
      for (double beta : {1e-1, 3.162277660168379e-2, 1e-2}) {
        double err = std::abs(gamma_ratio_limit(a, b, y, beta) - target);
        worst_rate = std::max(worst_rate, err / beta);
        final_err = err;
      }
      bool pass = final_err <= tol * target && worst_rate < 10.0;
      return limits_line("gamma-ratio a=" + std::to_string(a), 1e-2, final_err,
                         worst_rate, pass);
    });
  }
  // domination bounds
  for (double beta : {0.9, 0.5, 0.1, 0.01}) {
    for (double alpha : {1.0, 0.5}) {
      tasks.push_back([beta, alpha]() {
        auto reports = bound_checks(alpha, beta, 100);
        bool pass = true;
        double worst = 0;
        for (const auto& rep : reports) {
          pass = pass && rep.pass;
          worst = std::max(worst, rep.maxAbsError);
        }
        return limits_line("bounds a=" + std::to_string(alpha), beta, worst, 0.0, pass);
      });
    }
  }
  // pointwise weight convergence
  struct WCase {
    Family fam;
    BetaParams bp;
    std::vector<double> x;
    const char* name;
  };
  std::vector<WCase> wcases;
  {
    BetaParams a1;
    a1.n = 1;
    wcases.push_back({Family::A, a1, {0.5}, "weight A n=1"});
    BetaParams a2;
    a2.n = 2;
    a2.g0 = 1.0;
    wcases.push_back({Family::A, a2, {0.7, -0.4}, "weight A n=2"});
    BetaParams b1;
    b1.n = 1;
    b1.gg1 = 1.0;
    wcases.push_back({Family::B, b1, {0.6}, "weight B n=1"});
    BetaParams b2;
    b2.n = 2;
    b2.g0 = 1.0;
    b2.gg1 = 0.5;
    b2.gg1Prime = 0.5;
    wcases.push_back({Family::B, b2, {0.9, -0.3}, "weight B n=2"});
  }
  for (const auto& wc : wcases) {
    tasks.push_back([wc, tol, &ladder]() {
      BetaParams bp = wc.bp;
      double target = weight_limit_target(wc.x, bp, wc.fam);
      double prev = std::numeric_limits<double>::infinity();
      bool monotone = true;
      double final_rel = 0;
      for (double beta : ladder) {
        bp.beta = beta;
        double err = std::abs(weight_beta(wc.x, bp, wc.fam) - target);
        if (err >= prev) monotone = false;
        prev = err;
        final_rel = err / std::abs(target);
      }
      double rate = final_rel / (1e-2);
      return limits_line(wc.name, 1e-2, final_rel, rate, monotone && final_rel <= tol);
    });
  }
  // moment convergence at beta = 1e-2
  struct MCase {
    Family fam;
    BetaParams bp;
    Poly p;
    double target;
    const char* name;
  };
  std::vector<MCase> mcases;
  {
    BetaParams a1;
    a1.n = 1;
    mcases.push_back({Family::A, a1, Poly::constant(1, rat(1)), std::sqrt(M_PI), "moment A n=1 deg0"});
    mcases.push_back({Family::A, a1, msym({1}, 1, true), std::sqrt(M_PI) / 2, "moment A n=1 deg2"});
    mcases.push_back({Family::A, a1, msym({2}, 1, true), 3 * std::sqrt(M_PI) / 4, "moment A n=1 deg4"});
    BetaParams a2;
    a2.n = 2;
    a2.g0 = 1.0;
    mcases.push_back({Family::A, a2, Poly::constant(2, rat(1)), M_PI, "moment A n=2 g0=1"});
    BetaParams b1;
    b1.n = 1;
    b1.gg1 = 1.0;
    mcases.push_back({Family::B, b1, Poly::constant(1, rat(1)), std::sqrt(M_PI) / 2, "moment B n=1"});
  }
  for (const auto& mc : mcases) {
    tasks.push_back([mc, tol]() {
      BetaParams bp = mc.bp;
      bp.beta = 1e-2;
      double got = integrate_weight_moment(mc.p, bp, mc.fam, std::abs(mc.target) * 1e-6);
      double rel = std::abs(got - mc.target) / std::abs(mc.target);
      return limits_line(mc.name, 1e-2, rel, 0.0, rel <= tol);
    });
  }
  return run_parallel(tasks, opt.threads);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{
      "orthogonality", "norms",         "pieri",     "diffeq", "difference-limit",
      "harmonics",     "normalization", "mehta",     "weights-limit"};
  return suites;
}

std::vector<Rational> seeded_point(int n, Family family, std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 1000003ull + static_cast<std::uint64_t>(index) * 7919ull + 17ull);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), sign(0, 1);
  while (true) {
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) {
      Rational v(num(rng), den(rng));
      if (sign(rng)) v = -v;
      x.push_back(v);
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) ok = false;
      for (int j = i + 1; j < n && ok; ++j)
        if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)] ||
            (family == Family::B &&
             x[static_cast<std::size_t>(i)] == -x[static_cast<std::size_t>(j)]))
          ok = false;
    }
    if (ok) return x;
  }
}

std::vector<CaseResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "orthogonality") return suite_orthogonality(opt);
  if (suite == "norms") return suite_norms(opt);
  if (suite == "pieri") return suite_pieri(opt);
  if (suite == "diffeq") return suite_diffeq(opt);
  if (suite == "difference-limit") return suite_difference_limit(opt);
  if (suite == "harmonics") return suite_harmonics(opt);
  if (suite == "normalization") return suite_normalization(opt);
  if (suite == "mehta") return suite_mehta(opt);
  if (suite == "weights-limit") return suite_weights_limit(opt);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace calogero
