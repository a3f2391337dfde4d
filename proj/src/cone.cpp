#include "hornsp/cone.hpp"

#include <cmath>
#include <limits>

namespace hornsp {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::boundary: return "boundary";
    case Verdict::outside: return "outside";
    case Verdict::invalid_input: return "invalid_input";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const MembershipReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = std::string(to_string(report.verdict));
  // nlohmann writes non-finite numbers as null.
  j["min_slack"] = report.min_slack;
  j["violated"] = report.violated;
  j["checked"] = report.checked_count;
  return j;
}

double partial_sum(const RealVector& x, const IndexSubset& subset) {
  double s = 0.0;
  for (int i : subset.elements()) {
    if (i > x.size()) throw DomainError("partial_sum: index exceeds tuple length");
    s += x[i - 1];
  }
  return s;
}

Spectrum dual_involution(const Spectrum& mu) { return Spectrum(-mu.values().reverse()); }

namespace {

enum class TraceRule { at_most, equal };

struct ConeRules {
  TraceRule trace;
  double lower_bound;  // entries must be > lower_bound (or >= when inclusive)
  bool inclusive;
  bool check_sign;
};

bool non_increasing(const RealVector& v) {
  for (Index k = 0; k + 1 < v.size(); ++k) {
    if (!(v[k] >= v[k + 1])) return false;
  }
  return true;
}

MembershipReport invalid() {
  return {Verdict::invalid_input, std::numeric_limits<double>::quiet_NaN(), {}, 0};
}

MembershipReport check_system(const RealVector& x, const RealVector& y, const RealVector& z,
                              std::span<const HornInequality> ineqs, double tol, ConeRules rules) {
  if (!(tol >= 0.0)) throw DomainError("cone check: tolerance must be non-negative");
  const Index n = x.size();
  if (n < 1 || y.size() != n || z.size() != n) {
    throw DomainError("cone check: x, y, z must have the same positive length");
  }
  for (const auto& h : ineqs) {
    if (h.I.n() != n) throw DomainError("cone check: inequality list built for a different n");
  }
  for (const RealVector* v : {&x, &y, &z}) {
    if (!v->allFinite() || !non_increasing(*v)) return invalid();
    if (rules.check_sign) {
      const double lo = v->minCoeff();
      if (rules.inclusive ? lo < rules.lower_bound : lo <= rules.lower_bound) return invalid();
    }
  }

  MembershipReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  const double trace_slack = z.sum() - x.sum() - y.sum();
  report.checked_count = 1;
  if (rules.trace == TraceRule::at_most) {
    report.min_slack = trace_slack;
    if (trace_slack < -tol) report.violated.emplace_back("trace");
  } else if (std::abs(trace_slack) > tol) {
    report.min_slack = -std::abs(trace_slack);
    report.violated.emplace_back("trace");
  }

  for (const auto& h : ineqs) {
    const double slack = partial_sum(z, h.K) - partial_sum(x, h.I) - partial_sum(y, h.J);
    report.min_slack = std::min(report.min_slack, slack);
    if (slack < -tol) report.violated.push_back(h.key());
    ++report.checked_count;
  }

  if (!report.violated.empty()) {
    report.verdict = Verdict::outside;
  } else if (report.min_slack <= tol) {
    report.verdict = Verdict::boundary;
  } else {
    report.verdict = Verdict::inside;
  }
  return report;
}

}  // namespace

MembershipReport check_horn_sp(const RealVector& x, const RealVector& y, const RealVector& z,
                               std::span<const HornInequality> ineqs, double tol) {
  return check_system(x, y, z, ineqs, tol, {TraceRule::at_most, tol, false, true});
}

MembershipReport check_horn_classical(const RealVector& x, const RealVector& y, const RealVector& z,
                                      std::span<const HornInequality> ineqs, double tol) {
  return check_system(x, y, z, ineqs, tol, {TraceRule::equal, 0.0, true, false});
}

MembershipReport check_friedland(const RealVector& x, const RealVector& y, const RealVector& z,
                                 std::span<const HornInequality> ineqs, double tol) {
  return check_system(x, y, z, ineqs, tol, {TraceRule::at_most, -tol, true, true});
}

MembershipReport check_delta_sp(const RealVector& a, const RealVector& b, const RealVector& z,
                                std::span<const HornInequality> ineqs, double tol) {
  return check_horn_sp(a, b, z, ineqs, tol);
}

}  // namespace hornsp
