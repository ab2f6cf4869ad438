#include "toporisk/rips.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "toporisk/error.hpp"
#include "toporisk/kernels.hpp"

namespace toporisk {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::InvalidConfig, "distance matrix needs n*n entries");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) throw Error(ErrorCode::InvalidConfig, "nonzero diagonal", i);
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v) || v < 0.0 || v != (*this)(j, i)) {
        throw Error(ErrorCode::InvalidConfig,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is negative, non-finite or asymmetric");
      }
    }
  }
}

double DistanceMatrix::max() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, v);
  return m;
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  const auto cols = cloud.columns();
  const kernels::ColumnsView all{cols.data(), n, n, cloud.dim()};
  const auto& k = kernels::active_kernels();

  std::vector<double> entries(n * n, 0.0);
  std::vector<double> query(cloud.dim());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto p = cloud.point(i);
    std::copy(p.begin(), p.end(), query.begin());
    double* row = entries.data() + i * n;
    k.distances_to(all.tail(i + 1), query.data(), row + i + 1);
    for (std::size_t j = i + 1; j < n; ++j) entries[j * n + i] = row[j];
  }
  return {DistanceMatrix::Trusted{}, n, std::move(entries)};
}

Simplex make_simplex(std::initializer_list<VertexIndex> vertices, double value) {
  if (vertices.size() == 0 || vertices.size() > kMaxSimplexDim + 1) {
    throw Error(ErrorCode::UnsupportedDimension, "simplex needs 1.." +
                                                     std::to_string(kMaxSimplexDim + 1) +
                                                     " vertices");
  }
  Simplex s;
  std::copy(vertices.begin(), vertices.end(), s.vertices.begin());
  std::sort(s.vertices.begin(), s.vertices.begin() + vertices.size());
  s.dim = static_cast<std::uint8_t>(vertices.size() - 1);
  s.value = value;
  return s;
}

bool filtration_less(const Simplex& a, const Simplex& b) noexcept {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.vertices < b.vertices;
}

std::size_t Filtration::max_dim() const noexcept {
  std::size_t d = 0;
  for (const auto& s : simplices_) d = std::max<std::size_t>(d, s.dim);
  return d;
}

std::vector<std::size_t> Filtration::count_by_dim() const {
  std::vector<std::size_t> counts(simplices_.empty() ? 0 : max_dim() + 1, 0);
  for (const auto& s : simplices_) ++counts[s.dim];
  return counts;
}

bool Filtration::is_ordered() const noexcept {
  return std::is_sorted(simplices_.begin(), simplices_.end(), filtration_less);
}

namespace {

// Cliques of the epsilon-neighbourhood graph, grown by one vertex at a time
// from candidates that are larger than every current vertex and adjacent to
// all of them.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const DistanceMatrix& dist, std::size_t max_dim, double eps,
                   std::vector<Simplex>& out)
      : dist_(dist), max_dim_(max_dim), eps_(eps), out_(out) {}

  void run() {
    const std::size_t n = dist_.size();
    std::vector<VertexIndex> candidates;
    for (std::size_t v = 0; v < n; ++v) {
      Simplex s;
      s.vertices[0] = static_cast<VertexIndex>(v);
      out_.push_back(s);
      if (max_dim_ == 0) continue;
      candidates.clear();
      for (std::size_t w = v + 1; w < n; ++w) {
        if (dist_(v, w) <= eps_) candidates.push_back(static_cast<VertexIndex>(w));
      }
      expand(s, candidates);
    }
  }

 private:
  void expand(const Simplex& base, std::span<const VertexIndex> candidates) {
    const std::size_t next_dim = std::size_t{base.dim} + 1;
    std::vector<VertexIndex> narrowed;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const VertexIndex w = candidates[c];
      Simplex s = base;
      s.dim = static_cast<std::uint8_t>(next_dim);
      s.vertices[next_dim] = w;
      for (std::size_t i = 0; i < next_dim; ++i) {
        s.value = std::max(s.value, dist_(base.vertices[i], w));
      }
      out_.push_back(s);
      if (next_dim == max_dim_) continue;
      narrowed.clear();
      for (std::size_t c2 = c + 1; c2 < candidates.size(); ++c2) {
        if (dist_(w, candidates[c2]) <= eps_) narrowed.push_back(candidates[c2]);
      }
      if (!narrowed.empty()) expand(s, narrowed);
    }
  }

  const DistanceMatrix& dist_;
  std::size_t max_dim_;
  double eps_;
  std::vector<Simplex>& out_;
};

std::size_t estimate_size(const DistanceMatrix& dist, std::size_t max_dim, double eps) {
  const std::size_t n = dist.size();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges += dist(i, j) <= eps;
  double total = static_cast<double>(n + edges);
  if (max_dim >= 2 && n > 2) {
    // Density-scaled triangle estimate; only a reservation hint.
    const double density = static_cast<double>(edges) / (0.5 * n * (n - 1.0));
    total += density * density * density * n * (n - 1.0) * (n - 2.0) / 6.0;
  }
  return static_cast<std::size_t>(std::min(total, 4.0e8));
}

}  // namespace

Filtration build_rips_filtration(const DistanceMatrix& dist, std::size_t max_dim,
                                 std::optional<double> epsilon_max) {
  const std::size_t n = dist.size();
  if (max_dim > kMaxSimplexDim) {
    throw Error(ErrorCode::UnsupportedDimension,
                "max_dim " + std::to_string(max_dim) + " exceeds supported " +
                    std::to_string(kMaxSimplexDim));
  }
  if (max_dim >= n) {
    throw Error(ErrorCode::DimensionTooLarge,
                "max_dim " + std::to_string(max_dim) + " needs more than " +
                    std::to_string(n) + " points");
  }
  if (epsilon_max && !(*epsilon_max > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "epsilon_max must be > 0");
  }
  if (n > std::numeric_limits<VertexIndex>::max()) {
    throw Error(ErrorCode::InvalidConfig, "too many points");
  }
  const double eps = epsilon_max.value_or(std::numeric_limits<double>::infinity());

  std::vector<Simplex> simplices;
  simplices.reserve(estimate_size(dist, max_dim, eps));
  CliqueEnumerator(dist, max_dim, eps, simplices).run();
  std::sort(simplices.begin(), simplices.end(), filtration_less);
  return {n, std::move(simplices)};
}

}  // namespace toporisk
