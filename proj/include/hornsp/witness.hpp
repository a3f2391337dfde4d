#ifndef HORNSP_WITNESS_HPP_
#define HORNSP_WITNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "hornsp/cone.hpp"
#include "hornsp/core.hpp"
#include "hornsp/symplectic.hpp"

namespace hornsp {

/// Hermitian A, B, C with C - A - B positive semidefinite up to `tol`.
class HermitianTriple {
 public:
  static constexpr double kMajorizationTol = 1e-9;

  HermitianTriple(HermMatrix a, HermMatrix b, HermMatrix c, double tol = kMajorizationTol);

  const HermMatrix& a() const noexcept { return a_; }
  const HermMatrix& b() const noexcept { return b_; }
  const HermMatrix& c() const noexcept { return c_; }
  Index dim() const noexcept { return a_.dim(); }

 private:
  HermMatrix a_, b_, c_;
};

enum class WitnessStatus { found, not_found, infeasible_claimed };

std::string_view to_string(WitnessStatus s);

struct WitnessResult {
  WitnessStatus status = WitnessStatus::not_found;
  std::optional<std::variant<SympMatrix, HermitianTriple>> witness;  // set iff found
  double residual = 0.0;
  int iterations = 0;  // objective evaluations across all restarts
  std::uint64_t seed_used = 0;
  int restart = -1;  // restart that produced the best residual
};

/// {"status", "residual", "iterations", "seed", "restart", "witness"} where the
/// witness is the symplectic matrix, or {"a","b","c"}, in matrix text format.
nlohmann::ordered_json to_json(const WitnessResult& result);

struct SearchOptions {
  int budget = 5000;  // objective evaluations per restart
  int restarts = 20;
  std::uint64_t seed = 0;
  double tol = 0.0;  // 0 selects the search's default
  /// A caller-supplied oracle verdict. When it is `outside` and nothing is
  /// found, the status becomes infeasible_claimed.
  std::optional<Verdict> oracle_verdict;
};

inline constexpr double kSymplecticWitnessTol = 1e-6;
inline constexpr double kHermitianWitnessTol = 1e-9;

/// Searches S = exp(-J R) in Sp(2n) with lambda(D(x) + S^T D(y) S) = z, where
/// D(mu) = diag(mu) (+) diag(mu). Found iff the residual 2-norm is below tol.
WitnessResult find_symplectic_witness(const Spectrum& x, const Spectrum& y, const Spectrum& z,
                                      const SearchOptions& options = {});

/// Searches unitaries U, V with diag(z) - U diag(x) U^H - V diag(y) V^H >= -tol.
/// W is fixed to the identity, since conjugating all three by W^H changes nothing.
WitnessResult find_hermitian_witness(const Spectrum& x, const Spectrum& y, const Spectrum& z,
                                     const SearchOptions& options = {});

/// Complex symmetric M with 2 M conj(M) = p, for Hermitian PSD p.
ComplexSymMatrix symmetric_sqrt_factor(const HermMatrix& p, double tol = kDefaultEigenTol);

/// Certifies C >= A + B through M with A + B + 2 M conj(M) = C.
ComplexSymMatrix realize_majorization(const HermitianTriple& t, double tol = 1e-9);

struct ForwardSummary {
  Index n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::map<Verdict, int> verdicts;
  double worst_slack = 0.0;
  int worst_trial = -1;

  int outside() const {
    auto it = verdicts.find(Verdict::outside);
    return it == verdicts.end() ? 0 : it->second;
  }
};

nlohmann::ordered_json to_json(const ForwardSummary& s);

/// Spectrum triple (lambda(q1), lambda(q2), lambda(q1 + q2)) for trial `trial`
/// of seed `seed`, with q1, q2 drawn by random_pd.
struct ForwardSample {
  Spectrum x, y, z;
};
ForwardSample forward_sample(Index n, std::uint64_t seed, int trial);

/// Samples `trials` pairs of positive definite forms and tallies check_horn_sp
/// verdicts on their spectrum triples. Solver failures are rethrown with the
/// trial index.
ForwardSummary monte_carlo_forward(Index n, int trials, std::uint64_t seed,
                                   std::span<const HornInequality> ineqs,
                                   double tol = kDefaultConeTol);

}  // namespace hornsp

#endif  // HORNSP_WITNESS_HPP_
