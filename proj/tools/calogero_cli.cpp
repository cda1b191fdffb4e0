#include "calogero/json_io.hpp"
#include "calogero/operators.hpp"
#include "calogero/pieri.hpp"
#include "calogero/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace calogero;

namespace {

struct ParamFlags {
  std::string family = "A";
  int n = 1;
  std::string lambda;
  std::string g0 = "0", g1 = "0", omega = "1";

  void attach(CLI::App* cmd, bool need_lambda) {
    cmd->add_option("--family", family, "family tag, A or B");
    cmd->add_option("--n", n, "number of variables");
    auto* lam = cmd->add_option("--lambda", lambda, "partition, e.g. 2,1,0");
    if (need_lambda) lam->required();
    cmd->add_option("--g0", g0, "pair coupling, rational p/q");
    cmd->add_option("--g1", g1, "single-variable coupling (family B)");
    cmd->add_option("--omega", omega, "frequency, rational p/q");
  }

  Params params() const {
    Params p;
    p.family = parse_family(family);
    p.n = n;
    p.g0 = parse_rational(g0);
    p.g1 = parse_rational(g1);
    p.omega = parse_rational(omega);
    p.validate();
    return p;
  }

  Partition partition() const {
    Partition lam = parse_partition(lambda);
    if (static_cast<int>(lam.size()) != n)
      throw std::invalid_argument("lambda length must equal n");
    return lam;
  }
};

void write_output(std::string text, const std::string& out_path) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open " + out_path);
  os << text;
}

int run_verify(const std::string& suite, const VerifyOptions& opt, bool json_only,
               const std::string& out_path) {
  auto results = run_suite(suite, opt);
  std::ostringstream os;
  int failed = 0, non_generic = 0;
  for (const auto& r : results) {
    os << r.line.dump() << "\n";
    failed += r.failed ? 1 : 0;
    non_generic += r.non_generic ? 1 : 0;
  }
  ordered_json summary;
  summary["schemaVersion"] = kSchemaVersion;
  summary["suite"] = suite;
  summary["cases"] = results.size();
  summary["failed"] = failed;
  summary["nonGeneric"] = non_generic;
  summary["status"] = failed == 0 ? "pass" : "fail";
  os << summary.dump() << "\n";
  write_output(os.str(), out_path);
  if (!json_only)
    std::cerr << "suite " << suite << ": " << results.size() << " cases, " << failed
              << " failed, " << non_generic << " non-generic\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multivariable Hermite/Laguerre polynomials of the confined Calogero system"};
  app.require_subcommand(1);

  // construct
  auto* c_cmd = app.add_subcommand("construct", "build one polynomial and print it as JSON");
  ParamFlags c_flags;
  c_flags.attach(c_cmd, /*need_lambda=*/true);
  std::string c_norm = "monic", c_out;
  c_cmd->add_option("--normalization", c_norm, "monic or pieri");
  c_cmd->add_option("--out", c_out, "write JSON here instead of stdout");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  v_cmd->add_option("suite", v_suite, "one of: orthogonality norms pieri diffeq difference-limit harmonics normalization mehta weights-limit")
      ->required();
  std::string v_family, v_g0, v_g1, v_omega, v_out;
  int v_n = 0, v_maxw = 0, v_r = 0, v_threads = 0;
  std::uint64_t v_seed = 0;
  double v_tol = 0;
  bool v_deep = false, v_json = false;
  v_cmd->add_option("--family", v_family, "restrict to one family");
  v_cmd->add_option("--n", v_n, "restrict to one variable count");
  v_cmd->add_option("--max-weight", v_maxw, "cap |lambda|");
  v_cmd->add_option("--r", v_r, "restrict to one operator/expansion order");
  v_cmd->add_option("--g0", v_g0, "pin g0");
  v_cmd->add_option("--g1", v_g1, "pin g1");
  v_cmd->add_option("--omega", v_omega, "pin omega");
  v_cmd->add_option("--seed", v_seed, "seed for evaluation points");
  v_cmd->add_option("--tol", v_tol, "float tolerance override (limits layer)");
  v_cmd->add_option("--threads", v_threads, "worker pool size (also CALOGERO_THREADS)");
  v_cmd->add_flag("--deep", v_deep, "extend the grid to |lambda| <= 4 and n = 4 where feasible");
  v_cmd->add_flag("--json", v_json, "suppress the human summary line");
  v_cmd->add_option("--out", v_out, "write the JSON-lines report here");

  // eval
  auto* e_cmd = app.add_subcommand("eval", "evaluate p_lambda / psi_lambda at float points");
  ParamFlags e_flags;
  e_flags.attach(e_cmd, /*need_lambda=*/true);
  std::string e_points, e_out;
  bool e_psi = false, e_json = false;
  double e_h = 0;
  e_cmd->add_option("--points", e_points, "file with one whitespace-separated point per line")
      ->required();
  e_cmd->add_flag("--psi", e_psi, "also evaluate psi = sqrt(weight) * p");
  e_cmd->add_option("--residual-h", e_h, "add the Hamiltonian residual column, step h");
  e_cmd->add_flag("--json", e_json, "JSON lines instead of a table");
  e_cmd->add_option("--out", e_out, "write output here");

  // decompose
  auto* d_cmd = app.add_subcommand("decompose", "radial-spherical decomposition as JSON");
  ParamFlags d_flags;
  d_flags.attach(d_cmd, /*need_lambda=*/true);
  std::string d_out;
  d_cmd->add_option("--out", d_out, "write JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_cmd->parsed()) {
      Params params;
      Partition lam;
      try {
        params = c_flags.params();
        lam = c_flags.partition();
        if (c_norm != "monic" && c_norm != "pieri")
          throw std::invalid_argument("normalization must be monic or pieri");
      } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
      }
      OrthoPoly p = construct_poly(lam, params);
      if (c_norm == "pieri") p = pieri_normalize(p);
      write_output(ortho_to_json(p).dump(2), c_out);
      return 0;
    }

    if (v_cmd->parsed()) {
      VerifyOptions opt;
      try {
        if (!v_family.empty()) opt.family = parse_family(v_family);
        if (v_n) opt.n = v_n;
        if (v_maxw) opt.max_weight = v_maxw;
        if (v_r) opt.r = v_r;
        if (!v_g0.empty()) opt.g0 = parse_rational(v_g0);
        if (!v_g1.empty()) opt.g1 = parse_rational(v_g1);
        if (!v_omega.empty()) opt.omega = parse_rational(v_omega);
        opt.deep = v_deep;
        opt.seed = v_seed;
        opt.tol = v_tol;
        opt.threads = v_threads;
      } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
      }
      return run_verify(v_suite, opt, v_json, v_out);
    }

    if (e_cmd->parsed()) {
      Params params;
      Partition lam;
      try {
        params = e_flags.params();
        lam = e_flags.partition();
      } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
      }
      std::ifstream in(e_points);
      if (!in) {
        std::cerr << "cannot open points file " << e_points << "\n";
        return 2;
      }
      const Poly& poly = construct_poly(lam, params).poly;
      std::ostringstream os;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<double> x;
        double v;
        while (ls >> v) x.push_back(v);
        if (static_cast<int>(x.size()) != params.n) {
          os << (e_json ? "{\"error\":\"dimension mismatch\"}" : "error: dimension mismatch")
             << "\n";
          continue;
        }
        ordered_json row;
        row["x"] = x;
        row["p"] = poly.eval_double(x);
        std::string err;
        try {
          if (e_psi || e_h > 0) row["psi"] = wavefunction_eval(lam, x, params);
          if (e_h > 0) row["residual"] = hamiltonian_residual(lam, x, e_h, params);
        } catch (const std::exception& ex) {
          err = ex.what();
        }
        if (!err.empty()) row["error"] = err;
        if (e_json) {
          os << row.dump() << "\n";
        } else {
          os << line << "  p=" << row["p"].dump();
          if (row.contains("psi")) os << "  psi=" << row["psi"].dump();
          if (row.contains("residual")) os << "  residual=" << row["residual"].dump();
          if (row.contains("error")) os << "  error=" << row["error"].dump();
          os << "\n";
        }
      }
      write_output(os.str(), e_out);
      return 0;
    }

    if (d_cmd->parsed()) {
      Params params;
      Partition lam;
      try {
        params = d_flags.params();
        lam = d_flags.partition();
      } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
      }
      auto dec = decompose_harmonic(lam, params);
      write_output(decomposition_to_json(dec, params).dump(2), d_out);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
