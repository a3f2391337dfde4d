#ifndef HORNSP_COMBINATORICS_HPP_
#define HORNSP_COMBINATORICS_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hornsp {

/// Subset {i_1 < ... < i_r} of [n] = {1, ..., n}, 1-based.
class IndexSubset {
 public:
  IndexSubset(int n, std::vector<int> elements);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const noexcept { return elems_; }
  int operator[](int a) const { return elems_[static_cast<std::size_t>(a)]; }

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  int n_;
  std::vector<int> elems_;
};

/// Weakly decreasing non-negative integers. Trailing zeros are kept as given
/// but ignored by equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Number of non-zero parts.
  int length() const noexcept;
  int size() const noexcept;
  /// Part a (0-based); zero past the end.
  int operator[](int a) const noexcept {
    return a < static_cast<int>(parts_.size()) ? parts_[static_cast<std::size_t>(a)] : 0;
  }
  /// True when this diagram fits inside `outer`.
  bool contained_in(const Partition& outer) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
};

/// All r-subsets of [n] in lexicographic order.
std::vector<IndexSubset> subsets(int n, int r);

/// lambda(I)_a = n - r + a - i_a.
Partition partition_of_subset(const IndexSubset& subset);

inline constexpr std::uint64_t kUncapped = std::numeric_limits<std::uint64_t>::max();

/// min(cap, c^nu_{lambda mu}): the number of Littlewood-Richardson tableaux of
/// shape nu/lambda and content mu.
std::uint64_t lr_count(const Partition& lambda, const Partition& mu, const Partition& nu,
                       std::uint64_t cap = kUncapped);

/// Encodes |x|_I + |y|_J <= |z|_K. `lr` is metadata (saturating at 2) and is
/// ignored by comparisons.
struct HornInequality {
  int r;
  IndexSubset I;
  IndexSubset J;
  IndexSubset K;
  std::uint64_t lr;

  std::string key() const;

  friend bool operator==(const HornInequality& a, const HornInequality& b) {
    return a.r == b.r && a.I == b.I && a.J == b.J && a.K == b.K;
  }
  friend auto operator<=>(const HornInequality& a, const HornInequality& b) {
    if (auto c = a.r <=> b.r; c != 0) return c;
    if (auto c = a.I <=> b.I; c != 0) return c;
    if (auto c = a.J <=> b.J; c != 0) return c;
    return a.K <=> b.K;
  }
};

inline constexpr int kMaxDefaultN = 7;

/// The inequalities (*)_{I,J,K} for r = 1..n-1 with c_{IJ}^K >= 1, or with
/// c_{IJ}^K == 1 when `minimal`. Ordered by r, then lexicographically by I, J, K.
/// Throws DomainError for n > kMaxDefaultN unless `allow_large_n`.
std::vector<HornInequality> horn_inequalities(int n, bool minimal, bool allow_large_n = false);

// Versioned inequality schema:
// {"version":1,"n":N,"minimal":bool,"inequalities":[{"r":r,"I":[...],"J":[...],"K":[...],"lr":c}]}
inline constexpr int kInequalitySchemaVersion = 1;

struct InequalitySet {
  int n;
  bool minimal;
  std::vector<HornInequality> inequalities;
};

nlohmann::ordered_json to_json(const InequalitySet& set);
/// Throws DomainError on schema violations.
InequalitySet inequalities_from_json(const nlohmann::json& j);

}  // namespace hornsp

#endif  // HORNSP_COMBINATORICS_HPP_
