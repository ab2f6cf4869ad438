#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "toporisk/diagram.hpp"
#include "toporisk/error.hpp"

namespace toporisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Finite {
  double birth;
  double death;
};

// Square assignment problem between A ∪ diag(B) on the left and
// B ∪ diag(A) on the right. A point may match its own diagonal projection;
// diagonal slots match each other for free.
class AugmentedCosts {
 public:
  AugmentedCosts(std::vector<Finite> a, std::vector<Finite> b)
      : a_(std::move(a)), b_(std::move(b)) {}

  std::size_t size() const noexcept { return a_.size() + b_.size(); }

  double operator()(std::size_t left, std::size_t right) const noexcept {
    const std::size_t na = a_.size();
    const std::size_t nb = b_.size();
    if (left < na) {
      if (right < nb) {
        return std::max(std::abs(a_[left].birth - b_[right].birth),
                        std::abs(a_[left].death - b_[right].death));
      }
      return right - nb == left ? half_life(a_[left]) : kInf;
    }
    const std::size_t j = left - na;
    if (right < nb) return right == j ? half_life(b_[j]) : kInf;
    return 0.0;
  }

  std::vector<double> candidates() const {
    std::vector<double> out{0.0};
    for (std::size_t l = 0; l < size(); ++l)
      for (std::size_t r = 0; r < size(); ++r) {
        const double c = (*this)(l, r);
        if (c != kInf) out.push_back(c);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static double half_life(const Finite& p) noexcept { return (p.death - p.birth) / 2.0; }

  std::vector<Finite> a_;
  std::vector<Finite> b_;
};

// Hopcroft-Karp on the threshold graph {(l, r) : cost(l, r) <= t}, with
// adjacency evaluated on the fly.
class ThresholdMatcher {
 public:
  explicit ThresholdMatcher(const AugmentedCosts& costs) : costs_(costs), n_(costs.size()) {}

  bool has_perfect_matching(double threshold) {
    threshold_ = threshold;
    match_left_.assign(n_, kNone);
    match_right_.assign(n_, kNone);
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t l = 0; l < n_; ++l) {
        if (match_left_[l] == kNone && dfs(l)) ++matched;
      }
    }
    return matched == n_;
  }

 private:
  bool edge(std::size_t l, std::size_t r) const { return costs_(l, r) <= threshold_; }

  bool bfs() {
    layer_.assign(n_, kNone);
    std::queue<std::size_t> q;
    for (std::size_t l = 0; l < n_; ++l) {
      if (match_left_[l] == kNone) {
        layer_[l] = 0;
        q.push(l);
      }
    }
    bool found = false;
    while (!q.empty()) {
      const std::size_t l = q.front();
      q.pop();
      for (std::size_t r = 0; r < n_; ++r) {
        if (!edge(l, r)) continue;
        const std::size_t next = match_right_[r];
        if (next == kNone) {
          found = true;
        } else if (layer_[next] == kNone) {
          layer_[next] = layer_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    for (std::size_t r = 0; r < n_; ++r) {
      if (!edge(l, r)) continue;
      const std::size_t next = match_right_[r];
      if (next == kNone || (layer_[next] == layer_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    layer_[l] = kNone;
    return false;
  }

  const AugmentedCosts& costs_;
  std::size_t n_;
  double threshold_ = 0.0;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> layer_;
};

void split(const PersistenceDiagram& d, std::vector<Finite>& finite,
           std::vector<double>& essential) {
  for (const auto& p : d.points) {
    if (p.death) {
      finite.push_back({p.birth, *p.death});
    } else {
      essential.push_back(p.birth);
    }
  }
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  if (a.dim != b.dim) {
    throw Error(ErrorCode::DimensionMismatch, "diagrams of dimension " +
                                                  std::to_string(a.dim) + " and " +
                                                  std::to_string(b.dim));
  }
  std::vector<Finite> fa, fb;
  std::vector<double> ea, eb;
  split(a, fa, ea);
  split(b, fb, eb);

  if (ea.size() != eb.size()) return kInf;
  // Essential points live on the line death = inf; sorted order is optimal.
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double essential_cost = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    essential_cost = std::max(essential_cost, std::abs(ea[i] - eb[i]));
  }

  if (fa.empty() && fb.empty()) return essential_cost;

  const AugmentedCosts costs(std::move(fa), std::move(fb));
  const auto candidates = costs.candidates();
  ThresholdMatcher matcher(costs);
  // The largest candidate is always feasible: everything to the diagonal.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matcher.has_perfect_matching(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max(essential_cost, candidates[lo]);
}

}  // namespace toporisk
