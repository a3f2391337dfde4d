#ifndef HORNSP_CONE_HPP_
#define HORNSP_CONE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hornsp/combinatorics.hpp"
#include "hornsp/core.hpp"

namespace hornsp {

inline constexpr double kDefaultConeTol = 1e-9;

enum class Verdict { inside, boundary, outside, invalid_input };

std::string_view to_string(Verdict v);

/// Outcome of checking a triple against an inequality system. Slacks are
/// rhs - lhs in the units of the spectra, not normalized. The tolerance is
/// absolute; callers working far from unit scale should rescale it.
struct MembershipReport {
  Verdict verdict = Verdict::invalid_input;
  double min_slack = 0.0;             // +inf when no constraint applies, NaN on invalid input
  std::vector<std::string> violated;  // "trace" or HornInequality::key()
  std::size_t checked_count = 0;
};

/// {"verdict":"inside","min_slack":s,"violated":[...],"checked":m}
nlohmann::ordered_json to_json(const MembershipReport& report);

/// Sum of x_i over i in I (1-based).
double partial_sum(const RealVector& x, const IndexSubset& subset);

/// mu* = (-mu_n, ..., -mu_1)
Spectrum dual_involution(const Spectrum& mu);

/// Symplectic Horn cone: |x| + |y| <= |z| plus (*)_{I,J,K} over `ineqs`, on
/// strictly positive non-increasing triples. Entries <= tol or a non-monotone
/// tuple give invalid_input.
MembershipReport check_horn_sp(const RealVector& x, const RealVector& y, const RealVector& z,
                               std::span<const HornInequality> ineqs, double tol = kDefaultConeTol);

/// Classical Horn cone: |x| + |y| = |z| (within tol) plus (*)_{I,J,K}. The
/// trace equality filters; the verdict comes from the inequalities.
MembershipReport check_horn_classical(const RealVector& x, const RealVector& y, const RealVector& z,
                                      std::span<const HornInequality> ineqs,
                                      double tol = kDefaultConeTol);

/// Triples realizable with C >= A + B: the symplectic system on
/// non-negative entries (entries down to -tol are accepted as round-off).
MembershipReport check_friedland(const RealVector& x, const RealVector& y, const RealVector& z,
                                 std::span<const HornInequality> ineqs, double tol = kDefaultConeTol);

/// z in Delta_sp(a, b).
MembershipReport check_delta_sp(const RealVector& a, const RealVector& b, const RealVector& z,
                                std::span<const HornInequality> ineqs, double tol = kDefaultConeTol);

}  // namespace hornsp

#endif  // HORNSP_CONE_HPP_
