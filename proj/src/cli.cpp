#include "hornsp/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hornsp/cone.hpp"
#include "hornsp/matrix_io.hpp"
#include "hornsp/williamson.hpp"
#include "hornsp/witness.hpp"

namespace hornsp::cli {

namespace fs = std::filesystem;

RealVector parse_tuple(std::string_view text) {
  std::string body(text);
  if (!body.empty() && body.front() == '@') {
    std::ifstream in(body.substr(1));
    if (!in) throw DomainError("cannot read tuple file '" + body.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  for (char& c : body) {
    if (c == ',' || c == '\n' || c == '\t' || c == '\r') c = ' ';
  }
  std::istringstream in(body);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    const Complex v = parse_entry(token);
    if (v.imag() != 0.0) throw DomainError("tuple entries must be real: '" + token + "'");
    values.push_back(v.real());
  }
  if (values.empty()) throw DomainError("empty tuple");
  return Eigen::Map<const RealVector>(values.data(), static_cast<Index>(values.size()));
}

namespace {

std::optional<fs::path> cache_dir() {
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hornsp";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hornsp";
  return std::nullopt;
}

}  // namespace

std::vector<HornInequality> cached_inequalities(int n, bool minimal, bool allow_large_n,
                                                std::ostream& err) {
  if (n > kMaxDefaultN && !allow_large_n) {
    throw DomainError("n > " + std::to_string(kMaxDefaultN) + " requires --override-large-n");
  }
  const auto dir = cache_dir();
  fs::path file;
  if (dir) {
    file = *dir / ("inequalities-v" + std::to_string(kInequalitySchemaVersion) + "-n" +
                   std::to_string(n) + (minimal ? "-minimal" : "-full") + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        InequalitySet set = inequalities_from_json(nlohmann::json::parse(in));
        if (set.n == n && set.minimal == minimal) return std::move(set.inequalities);
      } catch (const std::exception& e) {
        err << "ignoring unreadable cache file " << file << ": " << e.what() << '\n';
      }
    }
  }
  std::vector<HornInequality> ineqs = horn_inequalities(n, minimal, allow_large_n);
  if (dir) {
    std::error_code ec;
    fs::create_directories(*dir, ec);
    const fs::path tmp = file.string() + ".tmp";
    std::ofstream outf(tmp);
    if (outf << to_json(InequalitySet{n, minimal, ineqs}).dump() << '\n') {
      outf.close();
      fs::rename(tmp, file, ec);
    }
    if (!outf || ec) err << "could not write inequality cache " << file << '\n';
  }
  return ineqs;
}

namespace {

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::inside:
    case Verdict::boundary: return kOk;
    case Verdict::outside: return kNegative;
    case Verdict::invalid_input: return kInvalid;
  }
  return kInvalid;
}

int cmd_eigs(const std::string& path, double pair_tol, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read matrix file '" + path + "'");
  const RealMatrix m = parse_real_matrix(in);
  if (max_abs(RealMatrix(m - m.transpose())) > 1e-12 * (1.0 + max_abs(m))) {
    throw DomainError("matrix is not symmetric");
  }
  const Spectrum s = symplectic_eigenvalues(QuadForm(RealSymMatrix(m)), pair_tol);
  out << nlohmann::json(std::vector<double>(s.values().begin(), s.values().end())).dump() << '\n';
  return kOk;
}

int cmd_inequalities(int n, bool minimal, bool allow_large, const std::string& out_path,
                     std::ostream& out) {
  if (n > kMaxDefaultN && !allow_large) {
    throw DomainError("n > " + std::to_string(kMaxDefaultN) + " requires --override-large-n");
  }
  const std::string text =
      to_json(InequalitySet{n, minimal, horn_inequalities(n, minimal, allow_large)}).dump() + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!(f << text)) throw DomainError("cannot write '" + out_path + "'");
  }
  return kOk;
}

struct Triple {
  RealVector x, y, z;
};

Triple read_triple(const std::vector<std::string>& tuples) {
  if (tuples.size() != 3) throw DomainError("expected three tuples x y z");
  Triple t{parse_tuple(tuples[0]), parse_tuple(tuples[1]), parse_tuple(tuples[2])};
  if (t.y.size() != t.x.size() || t.z.size() != t.x.size()) {
    throw DomainError("tuples x, y, z must have equal length");
  }
  return t;
}

int cmd_check(const std::vector<std::string>& tuples, const std::string& cone, double tol,
              std::ostream& out, std::ostream& err) {
  const Triple t = read_triple(tuples);
  const auto ineqs = cached_inequalities(static_cast<int>(t.x.size()), true, false, err);
  MembershipReport report;
  if (cone == "sp") {
    report = check_horn_sp(t.x, t.y, t.z, ineqs, tol);
  } else if (cone == "classical") {
    report = check_horn_classical(t.x, t.y, t.z, ineqs, tol);
  } else if (cone == "friedland") {
    report = check_friedland(t.x, t.y, t.z, ineqs, tol);
  } else {
    report = check_delta_sp(t.x, t.y, t.z, ineqs, tol);
  }
  out << to_json(report).dump() << '\n';
  return exit_for(report.verdict);
}

int cmd_sample(int n, int trials, std::uint64_t seed, double tol, std::ostream& out,
               std::ostream& err) {
  const auto ineqs = cached_inequalities(n, true, false, err);
  const ForwardSummary s = monte_carlo_forward(n, trials, seed, ineqs, tol);
  out << to_json(s).dump() << '\n';
  return s.outside() == 0 ? kOk : kNegative;
}

int cmd_witness(const std::vector<std::string>& tuples, const std::string& mode,
                SearchOptions opt, std::ostream& out, std::ostream& err) {
  const Triple t = read_triple(tuples);
  Spectrum x, y, z;
  try {
    x = Spectrum(t.x);
    y = Spectrum(t.y);
    z = Spectrum(t.z);
  } catch (const DomainError&) {
    throw DomainError("spectra must be non-increasing");
  }
  const auto ineqs = cached_inequalities(static_cast<int>(t.x.size()), true, false, err);
  MembershipReport oracle;
  WitnessResult result;
  if (mode == "symplectic") {
    oracle = check_horn_sp(t.x, t.y, t.z, ineqs);
    if (oracle.verdict == Verdict::invalid_input) {
      throw DomainError("symplectic witness needs positive spectra");
    }
    opt.oracle_verdict = oracle.verdict;
    result = find_symplectic_witness(x, y, z, opt);
  } else {
    oracle = check_friedland(t.x, t.y, t.z, ineqs);
    opt.oracle_verdict = oracle.verdict;
    result = find_hermitian_witness(x, y, z, opt);
  }
  nlohmann::ordered_json j = to_json(result);
  j["mode"] = mode;
  j["oracle_verdict"] = std::string(to_string(oracle.verdict));
  out << j.dump() << '\n';
  return result.status == WitnessStatus::found ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic eigenvalues, Horn inequalities and cone membership", "hornsp"};
  app.require_subcommand(1);

  double tol = 0.0;
  std::uint64_t seed = 0;

  std::string matrix_path;
  double pair_tol = kDefaultPairTol;
  auto* eigs = app.add_subcommand("eigs", "Symplectic eigenvalues of a positive definite form");
  eigs->add_option("matrix", matrix_path, "Matrix text file (2n x 2n)")->required();
  eigs->add_option("--tol", pair_tol, "Relative pairing tolerance")->check(CLI::PositiveNumber);

  int n = 1;
  bool minimal = false;
  bool override_large = false;
  std::string out_path;
  auto* ineq = app.add_subcommand("inequalities", "Write the Horn inequality list as JSON");
  ineq->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  ineq->add_flag("--minimal", minimal, "Keep only inequalities with LR coefficient 1");
  ineq->add_flag("--override-large-n", override_large, "Allow n > 7");
  ineq->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> tuples;
  std::string cone = "sp";
  auto* check = app.add_subcommand("check", "Cone membership report for a triple x y z");
  check->add_option("--cone", cone, "Cone to test")
      ->check(CLI::IsMember({"sp", "classical", "friedland", "delta"}));
  check->add_option("--tol", tol, "Absolute slack tolerance")->check(CLI::PositiveNumber);
  check->add_option("tuples", tuples, "x y z as comma-separated values or @file")->expected(3);

  int trials = 1000;
  auto* sample = app.add_subcommand("sample", "Forward Monte Carlo check of the symplectic cone");
  sample->add_option("--n", n, "Half-dimension")->required()->check(CLI::PositiveNumber);
  sample->add_option("--trials", trials, "Number of sampled pairs")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Random seed");
  sample->add_option("--tol", tol, "Absolute slack tolerance")->check(CLI::PositiveNumber);

  std::string mode = "symplectic";
  SearchOptions opt;
  auto* witness = app.add_subcommand("witness", "Search for a realizing witness");
  witness->add_option("--mode", mode, "Witness type")->check(CLI::IsMember({"symplectic", "hermitian"}));
  witness->add_option("--seed", seed, "Random seed");
  witness->add_option("--tol", tol, "Success tolerance")->check(CLI::PositiveNumber);
  witness->add_option("--budget", opt.budget, "Evaluations per restart")->check(CLI::PositiveNumber);
  witness->add_option("--restarts", opt.restarts, "Random restarts")->check(CLI::PositiveNumber);
  witness->add_option("tuples", tuples, "x y z as comma-separated values or @file")->expected(3);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (*eigs) return cmd_eigs(matrix_path, pair_tol, out);
    if (*ineq) return cmd_inequalities(n, minimal, override_large, out_path, out);
    if (*check) return cmd_check(tuples, cone, tol > 0.0 ? tol : kDefaultConeTol, out, err);
    if (*sample) return cmd_sample(n, trials, seed, tol > 0.0 ? tol : kDefaultConeTol, out, err);
    if (*witness) {
      opt.seed = seed;
      opt.tol = tol;
      return cmd_witness(tuples, mode, opt, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace hornsp::cli
