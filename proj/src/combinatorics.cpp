#include "hornsp/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "hornsp/core.hpp"

namespace hornsp {

IndexSubset::IndexSubset(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
  if (n < 1) throw DomainError("index subset: n must be positive");
  for (std::size_t a = 0; a < elems_.size(); ++a) {
    if (elems_[a] < 1 || elems_[a] > n) throw DomainError("index subset: element out of [n]");
    if (a > 0 && elems_[a - 1] >= elems_[a]) {
      throw DomainError("index subset: elements must be strictly increasing");
    }
  }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t a = 0; a < parts_.size(); ++a) {
    if (parts_[a] < 0) throw DomainError("partition: negative part");
    if (a > 0 && parts_[a - 1] < parts_[a]) throw DomainError("partition: parts must be weakly decreasing");
  }
}

int Partition::length() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contained_in(const Partition& outer) const noexcept {
  for (int a = 0; a < length(); ++a) {
    if ((*this)[a] > outer[a]) return false;
  }
  return true;
}

bool operator==(const Partition& a, const Partition& b) noexcept {
  const int len = std::max(a.length(), b.length());
  for (int k = 0; k < len; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

std::vector<IndexSubset> subsets(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw DomainError("subsets: need 0 < r <= n");
  std::vector<IndexSubset> out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.emplace_back(n, cur);
    int a = r - 1;
    while (a >= 0 && cur[static_cast<std::size_t>(a)] == n - r + a + 1) --a;
    if (a < 0) break;
    ++cur[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < r; ++b) cur[static_cast<std::size_t>(b)] = cur[static_cast<std::size_t>(b - 1)] + 1;
  }
  return out;
}

Partition partition_of_subset(const IndexSubset& subset) {
  const int n = subset.n();
  const int r = subset.size();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) parts[static_cast<std::size_t>(a - 1)] = n - r + a - subset[a - 1];
  return Partition(std::move(parts));
}

namespace {

// Fills the skew shape nu/lambda in reverse reading order (rows top to
// bottom, each row right to left), which is the order in which the lattice
// condition is checked.
class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu, std::uint64_t cap)
      : lambda_(lambda), nu_(nu), cap_(cap), content_(static_cast<std::size_t>(mu.length()) + 1, 0),
        counts_(content_.size(), 0) {
    for (int v = 1; v <= mu.length(); ++v) content_[static_cast<std::size_t>(v)] = mu[v - 1];
    rows_ = nu.length();
    grid_.assign(static_cast<std::size_t>(rows_), std::vector<int>(static_cast<std::size_t>(nu[0]), 0));
    for (int r = 0; r < rows_; ++r) {
      for (int c = nu[r] - 1; c >= lambda[r]; --c) cells_.push_back({r, c});
    }
  }

  std::uint64_t run() {
    dfs(0);
    return total_;
  }

 private:
  struct Cell {
    int row;
    int col;
  };

  void dfs(std::size_t idx) {
    if (total_ >= cap_) return;
    if (idx == cells_.size()) {
      ++total_;
      return;
    }
    const auto [r, c] = cells_[idx];
    const int max_value = static_cast<int>(content_.size()) - 1;
    const int hi = (c + 1 < nu_[r]) ? at(r, c + 1) : max_value;
    const int lo = (r > 0 && c >= lambda_[r - 1]) ? at(r - 1, c) + 1 : 1;
    for (int v = lo; v <= hi; ++v) {
      auto& cnt = counts_[static_cast<std::size_t>(v)];
      if (cnt >= content_[static_cast<std::size_t>(v)]) continue;
      if (v > 1 && cnt >= counts_[static_cast<std::size_t>(v - 1)]) continue;
      ++cnt;
      at(r, c) = v;
      dfs(idx + 1);
      at(r, c) = 0;
      --cnt;
      if (total_ >= cap_) return;
    }
  }

  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  const Partition& lambda_;
  const Partition& nu_;
  std::uint64_t cap_;
  std::vector<int> content_;
  std::vector<int> counts_;
  int rows_ = 0;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
  std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t lr_count(const Partition& lambda, const Partition& mu, const Partition& nu,
                       std::uint64_t cap) {
  if (cap < 1) throw DomainError("lr_count: cap must be positive");
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!lambda.contained_in(nu) || !mu.contained_in(nu)) return 0;
  if (mu.size() == 0) return 1;  // then lambda == nu
  return LrFiller(lambda, mu, nu, cap).run();
}

std::string HornInequality::key() const {
  auto list = [](const IndexSubset& s) {
    std::string out = "{";
    for (int a = 0; a < s.size(); ++a) out += (a ? "," : "") + std::to_string(s[a]);
    return out + "}";
  };
  return "I=" + list(I) + ";J=" + list(J) + ";K=" + list(K);
}

std::vector<HornInequality> horn_inequalities(int n, bool minimal, bool allow_large_n) {
  if (n < 1) throw DomainError("horn_inequalities: n must be positive");
  if (n > kMaxDefaultN && !allow_large_n) {
    throw DomainError("horn_inequalities: n > " + std::to_string(kMaxDefaultN) +
                      " requires an explicit override");
  }
  std::vector<HornInequality> out;
  for (int r = 1; r < n; ++r) {
    const auto family = subsets(n, r);
    std::vector<Partition> parts;
    std::vector<int> sums;
    for (const auto& s : family) {
      parts.push_back(partition_of_subset(s));
      sums.push_back(std::accumulate(s.elements().begin(), s.elements().end(), 0));
    }
    // |lambda(I)| + |lambda(J)| = |lambda(K)|  <=>  sum I + sum J - sum K = r(n-r) + r(r+1)/2
    const int target = r * (n - r) + r * (r + 1) / 2;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        for (std::size_t k = 0; k < family.size(); ++k) {
          if (sums[i] + sums[j] - sums[k] != target) continue;
          const std::uint64_t c = lr_count(parts[i], parts[j], parts[k], 2);
          if (c == 0 || (minimal && c != 1)) continue;
          out.push_back({r, family[i], family[j], family[k], c});
        }
      }
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const InequalitySet& set) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& h : set.inequalities) {
    list.push_back({{"r", h.r},
                    {"I", h.I.elements()},
                    {"J", h.J.elements()},
                    {"K", h.K.elements()},
                    {"lr", h.lr}});
  }
  return {{"version", kInequalitySchemaVersion},
          {"n", set.n},
          {"minimal", set.minimal},
          {"inequalities", std::move(list)}};
}

InequalitySet inequalities_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kInequalitySchemaVersion) {
      throw DomainError("inequality schema: unsupported version");
    }
    InequalitySet set{j.at("n").get<int>(), j.at("minimal").get<bool>(), {}};
    for (const auto& e : j.at("inequalities")) {
      const int r = e.at("r").get<int>();
      HornInequality h{r,
                       IndexSubset(set.n, e.at("I").get<std::vector<int>>()),
                       IndexSubset(set.n, e.at("J").get<std::vector<int>>()),
                       IndexSubset(set.n, e.at("K").get<std::vector<int>>()),
                       e.at("lr").get<std::uint64_t>()};
      if (h.I.size() != r || h.J.size() != r || h.K.size() != r || h.lr < 1) {
        throw DomainError("inequality schema: inconsistent entry");
      }
      set.inequalities.push_back(std::move(h));
    }
    return set;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("inequality schema: ") + e.what());
  }
}

}  // namespace hornsp
