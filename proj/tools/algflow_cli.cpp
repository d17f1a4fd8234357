// algflow: classification, KCE checks, isomorphism tests and partition export
// for the rotational flow of two-dimensional algebras.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algflow/acceptance.hpp"
#include "algflow/classification.hpp"
#include "algflow/flow.hpp"
#include "algflow/isomorphism.hpp"
#include "algflow/partition.hpp"
#include "algflow/serialization.hpp"

namespace {

using namespace algflow;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_matrix(std::ostream& os, const Matrix& m, const char* indent) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << std::setw(10) << m(r, c);
    os << "]\n";
  }
}

int cmd_classify(double t, double tol, bool as_json) {
  if (!(t >= 0.0)) throw UsageError("--t must be >= 0");
  const TimeCanonicalization canon = canonicalize_time(t, tol);
  if (as_json) {
    json out{{"t", t},
             {"class", io::to_json(canon.label)},
             {"representative", io::to_json(canon.representative)},
             {"bekbaev", io::to_json(canon.reduction.form)},
             {"bekbaev_matrix", io::to_json(bekbaev_matrix(canon.reduction.form))},
             {"certificate", io::to_json(canon.to_canonical)},
             {"representative_certificate", io::to_json(canon.to_representative)},
             {"residual", canon.residual}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << std::setprecision(12);
  std::cout << "t = " << t << "\nclass: " << canon.label.to_string() << "\nrepresentative (2x4):\n";
  print_matrix(std::cout, Matrix(to_2x4(canon.representative)), "  ");
  std::cout << "canonical family " << canon.reduction.form.family() << " params [";
  const auto& p = canon.reduction.form.params();
  for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? ", " : "") << p[i];
  std::cout << "]\ncanonical matrix (2x4):\n";
  print_matrix(std::cout, Matrix(bekbaev_matrix(canon.reduction.form)), "  ");
  std::cout << "certificate A^[t] -> canonical (rows = new basis in old coordinates):\n";
  print_matrix(std::cout, canon.to_canonical.matrix(), "  ");
  std::cout << "residual: " << canon.residual << '\n';
  return kExitOk;
}

int cmd_kce(double s, double tau, double t, double tol) {
  if (!(0.0 <= s && s < tau && tau < t)) throw UsageError("need 0 <= s < tau < t");
  const double kce = verify_kce(FlowFamily::rotation(), s, tau, t);
  const double base = verify_base_system(FlowFamily::rotation(), s, tau, t);
  std::cout << std::setprecision(6) << std::scientific << "kce residual:         " << kce
            << "\nbase-system residual: " << base << "\ntolerance:            " << tol << '\n';
  const bool ok = kce < tol;
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

std::uint64_t search_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ALGFLOW_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("ALGFLOW_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSearchSeed;
}

int cmd_iso_times(double t1, double t2, double tol) {
  if (!(t1 >= 0.0 && t2 >= 0.0)) throw UsageError("--t1 and --t2 must be >= 0");
  const IsoVerdict v = rotation_iso(t1, t2, tol);
  json out = io::to_json(v);
  out["mode"] = "rotation";
  out["t1"] = t1;
  out["t2"] = t2;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_iso_files(const std::string& a_path, const std::string& b_path, const SearchConfig& cfg) {
  Algebra a = io::load_algebra(a_path);
  Algebra b = io::load_algebra(b_path);
  if (a.dim() != 2 || b.dim() != 2) throw UsageError("file mode compares 2-dimensional algebras only");
  const IsoVerdict v = decide_isomorphism(a, b, cfg);
  json out = io::to_json(v);
  out["mode"] = "search";
  out["signature_a"] = io::to_json(invariant_signature(a));
  out["signature_b"] = io::to_json(invariant_signature(b));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_partition(double t_max, double step, const std::string& out_path, const std::string& format, double tol) {
  if (!(t_max > 0.0) || !(step > 0.0)) throw UsageError("--t-max and --step must be > 0");
  const auto records = partition_grid(t_max, step, tol);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  if (format == "csv") {
    write_partition_csv(out, records);
  } else {
    write_partition_json(out, records);
  }
  out.close();
  if (!out) throw UsageError("failed writing " + out_path);
  std::cout << "wrote " << records.size() << " records to " << out_path << '\n';
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& only, std::optional<double> tol) {
  acceptance::Options opts;
  opts.tol_override = tol;
  const auto results = acceptance::run_checks(only, opts);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(22) << r.name << r.title << "\n       "
              << r.detail << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " run)\n";
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotational flow of two-dimensional algebras: classification and isomorphism tools"};
  app.require_subcommand(1);

  double t = 0.0;
  double classify_tol = kDefaultClassifyTol;
  bool as_json = false;
  auto* classify = app.add_subcommand("classify", "Class, representative and canonical form of A^[t]");
  classify->add_option("--t", t, "Time t >= 0")->required();
  classify->add_option("--tol", classify_tol, "Tolerance for the exceptional residues mod pi")->capture_default_str();
  classify->add_flag("--json", as_json, "Emit JSON");

  double s = 0.0, tau = 0.0, t_end = 0.0, kce_tol = 1e-12;
  auto* kce = app.add_subcommand("kce", "Verify the Kolmogorov-Chapman equation for the rotation flow");
  kce->add_option("--s", s, "Start time")->required();
  kce->add_option("--tau", tau, "Intermediate time")->required();
  kce->add_option("--t", t_end, "End time")->required();
  kce->add_option("--tol", kce_tol, "Residual tolerance")->capture_default_str();

  double t1 = 0.0, t2 = 0.0;
  std::string a_file, b_file;
  SearchConfig cfg;
  std::optional<std::uint64_t> seed;
  double iso_tol = kDefaultLocusTol;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of A^[t1], A^[t2] or of two algebra files");
  auto* opt_t1 = iso->add_option("--t1", t1, "First time");
  auto* opt_t2 = iso->add_option("--t2", t2, "Second time");
  auto* opt_a = iso->add_option("--a", a_file, "First algebra JSON file");
  auto* opt_b = iso->add_option("--b", b_file, "Second algebra JSON file");
  iso->add_option("--tol", iso_tol, "Locus tolerance (time mode) or residual tolerance (file mode)")
      ->capture_default_str();
  iso->add_option("--restarts", cfg.restarts, "Search restarts")->capture_default_str()->check(CLI::PositiveNumber);
  iso->add_option("--max-iter", cfg.max_iterations, "Iterations per restart")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  iso->add_option("--seed", seed, "Search seed (overrides ALGFLOW_SEED)");
  opt_t1->needs(opt_t2);
  opt_t2->needs(opt_t1);
  opt_a->needs(opt_b);
  opt_b->needs(opt_a);
  opt_t1->excludes(opt_a);
  opt_a->excludes(opt_t1);

  double t_max = 0.0, step = 0.0, part_tol = kDefaultClassifyTol;
  std::string out_path, format = "csv";
  auto* part = app.add_subcommand("partition", "Export the partition of the time axis by class");
  part->add_option("--t-max", t_max, "Largest time")->required();
  part->add_option("--step", step, "Grid step")->required();
  part->add_option("--out", out_path, "Output path")->required();
  part->add_option("--format", format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  part->add_option("--tol", part_tol, "Classification tolerance")->capture_default_str();

  std::vector<std::string> only;
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand("verify-theorems", "Run the acceptance checks");
  verify->add_option("--only", only, "Run only these checks")->check(CLI::IsMember(acceptance::check_names()));
  verify->add_option("--tol", verify_tol, "Override every residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(t, classify_tol, as_json);
    if (*kce) return cmd_kce(s, tau, t_end, kce_tol);
    if (*iso) {
      if (*opt_t1) return cmd_iso_times(t1, t2, iso_tol);
      if (*opt_a) {
        cfg.tol = iso_tol;
        cfg.seed = search_seed(seed);
        return cmd_iso_files(a_file, b_file, cfg);
      }
      throw UsageError("iso needs either --t1/--t2 or --a/--b");
    }
    if (*part) return cmd_partition(t_max, step, out_path, format, part_tol);
    if (*verify) return cmd_verify(only, verify_tol);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
