#include "hornsp/witness.hpp"

#include <cmath>
#include <limits>

#include "hornsp/jacobi.hpp"
#include "hornsp/linalg.hpp"
#include "hornsp/matrix_io.hpp"
#include "hornsp/optimize.hpp"
#include "hornsp/random.hpp"
#include "hornsp/williamson.hpp"

namespace hornsp {

HermitianTriple::HermitianTriple(HermMatrix a, HermMatrix b, HermMatrix c, double tol)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.dim() != b_.dim() || a_.dim() != c_.dim()) {
    throw DomainError("Hermitian triple: dimension mismatch");
  }
  const double lo = min_eigenvalue(c_ - a_ - b_);
  if (lo < -tol) throw DomainError("Hermitian triple: C - A - B is not positive semidefinite");
}

std::string_view to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::found: return "found";
    case WitnessStatus::not_found: return "not_found";
    case WitnessStatus::infeasible_claimed: return "infeasible_claimed";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const WitnessResult& result) {
  nlohmann::ordered_json j;
  j["status"] = std::string(to_string(result.status));
  j["residual"] = result.residual;
  j["iterations"] = result.iterations;
  j["seed"] = result.seed_used;
  j["restart"] = result.restart;
  if (!result.witness) {
    j["witness"] = nullptr;
  } else if (const auto* s = std::get_if<SympMatrix>(&*result.witness)) {
    j["witness"] = format_matrix(s->matrix());
  } else {
    const auto& t = std::get<HermitianTriple>(*result.witness);
    j["witness"] = {{"a", format_matrix(t.a().matrix())},
                    {"b", format_matrix(t.b().matrix())},
                    {"c", format_matrix(t.c().matrix())}};
  }
  return j;
}

namespace {

constexpr double kPenalty = 1e6;

RealSymMatrix symmetric_from_params(const RealVector& theta, Index d) {
  RealMatrix r(d, d);
  Index k = 0;
  for (Index j = 0; j < d; ++j) {
    for (Index i = j; i < d; ++i) r(i, j) = theta[k++];
  }
  return RealSymMatrix(r);
}

ComplexMatrix anti_hermitian_from_params(const RealVector& theta, Index offset, Index n) {
  ComplexMatrix a(n, n);
  Index k = offset;
  for (Index j = 0; j < n; ++j) {
    a(j, j) = Complex(0.0, theta[k++]);
    for (Index i = j + 1; i < n; ++i) {
      a(i, j) = Complex(theta[k], theta[k + 1]);
      a(j, i) = -std::conj(a(i, j));
      k += 2;
    }
  }
  return a;
}

void require_same_size(const Spectrum& x, const Spectrum& y, const Spectrum& z) {
  if (x.size() < 1 || y.size() != x.size() || z.size() != x.size()) {
    throw DomainError("witness search: x, y, z must have the same positive length");
  }
}

// Runs `restarts` independent local searches, each from its own seeded start,
// and keeps the lowest residual. `local` returns {parameters, squared residual, evals}.
template <typename Start, typename Local>
std::pair<SearchResult, int> multistart(const SearchOptions& opt, double target, Start&& start,
                                        Local&& local, int& total_evals) {
  SearchResult best{RealVector(), std::numeric_limits<double>::infinity(), 0};
  int best_restart = -1;
  for (int k = 0; k < opt.restarts; ++k) {
    Rng rng = make_rng(opt.seed, static_cast<std::uint64_t>(k));
    SearchResult res = local(start(k, rng));
    total_evals += res.evaluations;
    if (res.value < best.value) {
      best = std::move(res);
      best_restart = k;
    }
    if (best.value <= target) break;
  }
  return {std::move(best), best_restart};
}

// LM first; if it stalls short of the target, a compass pass to get past
// eigenvalue-crossing kinks, then LM again on what remains of the budget.
SearchResult hybrid_local(const ResidualFn& residual, RealVector x0, int budget, double target,
                          double step) {
  SearchResult lm = levenberg_marquardt(residual, std::move(x0), budget / 2, target);
  int used = lm.evaluations;
  while (lm.value > target && used < budget) {
    const Objective f = [&](const RealVector& t) { return residual(t).squaredNorm(); };
    SearchResult cs = compass_search(f, lm.x, step, std::min(budget - used, 40 * static_cast<int>(lm.x.size())),
                                     target);
    used += cs.evaluations;
    if (cs.value <= target || used >= budget) {
      cs.evaluations = used;
      return cs;
    }
    const double before = cs.value;
    lm = levenberg_marquardt(residual, std::move(cs.x), budget - used, target);
    used += lm.evaluations;
    if (lm.value > 0.999 * before && lm.value > target) break;
    step *= 0.5;
  }
  lm.evaluations = used;
  return lm;
}

}  // namespace

WitnessResult find_symplectic_witness(const Spectrum& x, const Spectrum& y, const Spectrum& z,
                                      const SearchOptions& opt) {
  require_same_size(x, y, z);
  const Index n = x.size();
  for (const Spectrum* s : {&x, &y, &z}) {
    if (!((*s)[n - 1] > 0.0)) throw DomainError("symplectic witness: spectra must be positive");
  }
  const double tol = opt.tol > 0.0 ? opt.tol : kSymplecticWitnessTol;
  const Index d = 2 * n;
  const Index m = d * (d + 1) / 2;
  const RealMatrix dx = doubled_diagonal(x.values());
  const RealMatrix dy = doubled_diagonal(y.values());
  const RealMatrix jn = j_matrix(n);

  const ResidualFn residual = [&](const RealVector& theta) -> RealVector {
    const RealMatrix s = expm(-jn * symmetric_from_params(theta, d).matrix());
    if (!s.allFinite()) return RealVector::Constant(n, kPenalty);
    try {
      const QuadForm q(RealSymMatrix(dx + s.transpose() * dy * s));
      return symplectic_eigenvalues(q).values() - z.values();
    } catch (const Error&) {
      return RealVector::Constant(n, kPenalty);
    }
  };
  const auto start = [&](int k, Rng& rng) -> RealVector {
    if (k == 0) return RealVector::Zero(m);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double radius = 0.3 + 0.1 * k;
    RealVector t(m);
    for (Index i = 0; i < m; ++i) t[i] = radius * u(rng);
    return t;
  };
  const double target = tol * tol;
  const auto local = [&](RealVector t0) { return hybrid_local(residual, std::move(t0), opt.budget, target, 0.1); };

  WitnessResult out;
  out.seed_used = opt.seed;
  auto [best, restart] = multistart(opt, target, start, local, out.iterations);
  out.residual = std::sqrt(best.value);
  out.restart = restart;
  if (best.value <= target) {
    out.status = WitnessStatus::found;
    out.witness = symplectic_exp(symmetric_from_params(best.x, d));
  } else {
    out.status = opt.oracle_verdict == Verdict::outside ? WitnessStatus::infeasible_claimed
                                                         : WitnessStatus::not_found;
  }
  return out;
}

WitnessResult find_hermitian_witness(const Spectrum& x, const Spectrum& y, const Spectrum& z,
                                     const SearchOptions& opt) {
  require_same_size(x, y, z);
  const Index n = x.size();
  const double tol = opt.tol > 0.0 ? opt.tol : kHermitianWitnessTol;
  const Index m = 2 * n * n;
  const ComplexMatrix dx = x.values().cast<Complex>().asDiagonal();
  const ComplexMatrix dy = y.values().cast<Complex>().asDiagonal();
  const ComplexMatrix dz = z.values().cast<Complex>().asDiagonal();

  struct Candidate {
    ComplexMatrix a, b;
  };
  const auto candidate = [&](const RealVector& theta) {
    const ComplexMatrix u = expm(anti_hermitian_from_params(theta, 0, n));
    const ComplexMatrix v = expm(anti_hermitian_from_params(theta, n * n, n));
    return Candidate{u * dx * u.adjoint(), v * dy * v.adjoint()};
  };
  const ResidualFn residual = [&](const RealVector& theta) -> RealVector {
    const Candidate c = candidate(theta);
    try {
      const Spectrum e = herm_eigen(HermMatrix(dz - c.a - c.b)).values;
      return e.values().cwiseMin(0.0);
    } catch (const Error&) {
      return RealVector::Constant(n, kPenalty);
    }
  };
  const auto start = [&](int k, Rng& rng) -> RealVector {
    if (k == 0) return RealVector::Zero(m);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    RealVector t(m);
    for (Index i = 0; i < m; ++i) t[i] = u(rng);
    return t;
  };
  const double target = tol * tol;
  const auto local = [&](RealVector t0) { return hybrid_local(residual, std::move(t0), opt.budget, target, 0.3); };

  WitnessResult out;
  out.seed_used = opt.seed;
  auto [best, restart] = multistart(opt, target, start, local, out.iterations);
  out.restart = restart;
  out.residual = std::sqrt(best.value);
  if (best.value <= target) {
    const Candidate c = candidate(best.x);
    HermMatrix a(c.a), b(c.b), cz(dz);
    const double lo = min_eigenvalue(cz - a - b);
    out.residual = std::max(0.0, -lo);
    if (lo >= -tol) {
      out.status = WitnessStatus::found;
      out.witness = HermitianTriple(std::move(a), std::move(b), std::move(cz), tol);
      return out;
    }
  }
  out.status = opt.oracle_verdict == Verdict::outside ? WitnessStatus::infeasible_claimed
                                                       : WitnessStatus::not_found;
  return out;
}

ComplexSymMatrix symmetric_sqrt_factor(const HermMatrix& p, double tol) {
  const auto e = herm_eigen(p, std::max(tol, kDefaultEigenTol));
  const Index d = p.dim();
  ComplexVector s(d);
  for (Index k = 0; k < d; ++k) s[k] = std::sqrt(detail::clamp_psd(e.values[k], tol) / 2.0);
  // V^T conj(V) = I for unitary V, so 2 M conj(M) = V D V^H = p.
  ComplexSymMatrix m(e.vectors * s.asDiagonal() * e.vectors.transpose());
  const double err = max_abs(2.0 * m.matrix() * m.matrix().conjugate() - p.matrix());
  if (err > 10.0 * tol * (1.0 + max_abs(p.matrix()))) {
    throw ConvergenceError("symmetric square-root factor misses its bound", err);
  }
  return m;
}

ComplexSymMatrix realize_majorization(const HermitianTriple& t, double tol) {
  return symmetric_sqrt_factor(t.c() - t.a() - t.b(), tol);
}

nlohmann::ordered_json to_json(const ForwardSummary& s) {
  nlohmann::ordered_json verdicts;
  for (Verdict v : {Verdict::inside, Verdict::boundary, Verdict::outside, Verdict::invalid_input}) {
    const auto it = s.verdicts.find(v);
    verdicts[std::string(to_string(v))] = it == s.verdicts.end() ? 0 : it->second;
  }
  return {{"n", s.n},
          {"trials", s.trials},
          {"seed", s.seed},
          {"verdicts", std::move(verdicts)},
          {"worst_slack", s.worst_slack},
          {"worst_trial", s.worst_trial}};
}

ForwardSample forward_sample(Index n, std::uint64_t seed, int trial) {
  const auto stream = static_cast<std::uint64_t>(trial);
  const QuadForm q1(random_pd(2 * n, derive_seed(seed, 2 * stream)));
  const QuadForm q2(random_pd(2 * n, derive_seed(seed, 2 * stream + 1)));
  return {symplectic_eigenvalues(q1), symplectic_eigenvalues(q2), symplectic_eigenvalues(q1 + q2)};
}

ForwardSummary monte_carlo_forward(Index n, int trials, std::uint64_t seed,
                                   std::span<const HornInequality> ineqs, double tol) {
  if (trials < 1) throw DomainError("monte_carlo_forward: trials must be positive");
  ForwardSummary summary;
  summary.n = n;
  summary.trials = trials;
  summary.seed = seed;
  summary.worst_slack = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    MembershipReport report;
    try {
      const ForwardSample s = forward_sample(n, seed, t);
      report = check_horn_sp(s.x.values(), s.y.values(), s.z.values(), ineqs, tol);
    } catch (const Error& e) {
      throw Error("trial " + std::to_string(t) + ": " + e.what());
    }
    ++summary.verdicts[report.verdict];
    if (report.min_slack < summary.worst_slack) {
      summary.worst_slack = report.min_slack;
      summary.worst_trial = t;
    }
  }
  return summary;
}

}  // namespace hornsp
