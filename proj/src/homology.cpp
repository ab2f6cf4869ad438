#include "toporisk/homology.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "toporisk/error.hpp"

namespace toporisk {

namespace {

constexpr ColumnIndex kNoColumn = std::numeric_limits<ColumnIndex>::max();

// Filtration position of a simplex given by its sorted vertices. Uses a
// dense table indexed by the combinatorial number system when it fits and
// a hash map otherwise.
class SimplexIndex {
 public:
  SimplexIndex(std::size_t vertex_count, std::size_t dim) : dim_(dim) {
    binom_.assign(dim + 2, std::vector<std::uint64_t>(vertex_count + 1, 0));
    for (std::size_t n = 0; n <= vertex_count; ++n) {
      binom_[0][n] = 1;
      for (std::size_t k = 1; k <= dim + 1 && k <= n; ++k) {
        binom_[k][n] = binom_[k - 1][n - 1] + (k <= n - 1 ? binom_[k][n - 1] : 0);
      }
    }
    const std::uint64_t slots = binom_[dim + 1][vertex_count];
    dense_ = slots <= kDenseLimit;
    if (dense_) table_.assign(slots, kNoColumn);
  }

  void insert(std::span<const VertexIndex> vertices, ColumnIndex position) {
    const auto key = code(vertices);
    if (dense_) {
      table_[key] = position;
    } else {
      sparse_.emplace(key, position);
    }
  }

  ColumnIndex find(std::span<const VertexIndex> vertices) const {
    const auto key = code(vertices);
    if (dense_) return table_[key];
    const auto it = sparse_.find(key);
    return it == sparse_.end() ? kNoColumn : it->second;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;

  std::uint64_t code(std::span<const VertexIndex> vertices) const {
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < vertices.size(); ++k) c += binom_[k + 1][vertices[k]];
    return c;
  }

  std::size_t dim_;
  std::vector<std::vector<std::uint64_t>> binom_;
  bool dense_ = true;
  std::vector<ColumnIndex> table_;
  std::unordered_map<std::uint64_t, ColumnIndex> sparse_;
};

// In-place symmetric difference of two ascending index lists.
void add_column(std::vector<ColumnIndex>& target, std::span<const ColumnIndex> source,
                std::vector<ColumnIndex>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

// Working column for reduction: a set of row ranks with O(log_64 n)
// toggle and max, so adding a short column costs only its length.
class BitTreeColumn {
 public:
  explicit BitTreeColumn(std::size_t rows) {
    std::size_t width = std::max<std::size_t>(rows, 1);
    std::size_t total = 0;
    do {
      width = (width + 63) / 64;
      offsets_.push_back(total);
      total += width;
    } while (width > 1);
    words_.assign(total, 0);
    top_ = offsets_.back();
  }

  bool empty() const noexcept { return words_[top_] == 0; }

  void toggle(std::size_t row) noexcept {
    std::size_t index = row;
    for (std::size_t offset : offsets_) {
      std::uint64_t& word = words_[offset + index / 64];
      const std::uint64_t before = word;
      word ^= std::uint64_t{1} << (index % 64);
      // Parents only change when a word switches between zero and nonzero.
      if ((before == 0) == (word == 0)) return;
      index /= 64;
    }
  }

  /// Largest set row. Requires !empty().
  ColumnIndex max() const noexcept {
    std::size_t index = 0;
    for (std::size_t l = offsets_.size(); l-- > 0;) {
      const std::uint64_t word = words_[offsets_[l] + index];
      index = index * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(word)));
    }
    return static_cast<ColumnIndex>(index);
  }

  /// Moves the contents into `out` (ascending) and leaves the column empty.
  void drain(std::vector<ColumnIndex>& out) {
    out.clear();
    while (!empty()) {
      const ColumnIndex m = max();
      out.push_back(m);
      toggle(m);
    }
    std::reverse(out.begin(), out.end());
  }

 private:
  std::vector<std::size_t> offsets_;  // level starts, leaves first
  std::vector<std::uint64_t> words_;
  std::size_t top_ = 0;
};

// Reduced pivot columns keyed by their lowest row. The low entry itself is
// implicit; short remainders live inline in the row's slot and longer ones
// in an overflow arena.
class ReducedColumns {
 public:
  explicit ReducedColumns(std::size_t rows) : slots_(rows) {}

  bool has_owner(ColumnIndex row) const noexcept { return slots_[row].size != kNoColumn; }

  /// Entries of the column owning `row`, excluding `row`.
  std::span<const ColumnIndex> rest(ColumnIndex row) const noexcept {
    const Slot& s = slots_[row];
    if (s.size <= kInline) return {s.data.data(), s.size};
    return {overflow_.data() + s.data[0], s.size};
  }

  /// `column` is ascending with `low` as its last entry.
  void store(ColumnIndex low, std::span<const ColumnIndex> column) {
    Slot& s = slots_[low];
    const auto rest = column.first(column.size() - 1);
    s.size = static_cast<ColumnIndex>(rest.size());
    if (rest.size() <= kInline) {
      std::copy(rest.begin(), rest.end(), s.data.begin());
    } else {
      s.data[0] = static_cast<ColumnIndex>(overflow_.size());
      overflow_.insert(overflow_.end(), rest.begin(), rest.end());
    }
  }

 private:
  static constexpr std::size_t kInline = 3;
  struct Slot {
    ColumnIndex size = kNoColumn;
    std::array<ColumnIndex, kInline> data{};
  };

  std::vector<Slot> slots_;
  std::vector<ColumnIndex> overflow_;
};

Pairing finish(std::vector<PersistencePair> pairs, std::size_t columns) {
  std::vector<bool> paired(columns, false);
  for (const auto& p : pairs) {
    paired[p.birth] = true;
    paired[p.death] = true;
  }
  Pairing out;
  std::sort(pairs.begin(), pairs.end());
  out.pairs = std::move(pairs);
  for (std::size_t j = 0; j < columns; ++j) {
    if (!paired[j]) out.essentials.push_back(static_cast<ColumnIndex>(j));
  }
  return out;
}

}  // namespace

std::size_t BoundaryMatrix::max_dim() const noexcept {
  std::size_t d = 0;
  for (std::size_t j = 0; j < size(); ++j) d = std::max(d, dim(j));
  return d;
}

void BoundaryMatrix::push_column(std::span<const ColumnIndex> entries) {
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  offsets_.push_back(entries_.size());
}

BoundaryMatrix build_boundary_matrix(const Filtration& filtration) {
  if (filtration.size() >= kNoColumn) {
    throw Error(ErrorCode::InvalidConfig, "filtration too large for 32-bit column indices");
  }
  const std::size_t top = filtration.max_dim();
  std::vector<SimplexIndex> index;
  index.reserve(top);
  for (std::size_t d = 0; d < top; ++d) index.emplace_back(filtration.vertex_count(), d);

  BoundaryMatrix matrix;
  std::vector<ColumnIndex> column;
  std::array<VertexIndex, kMaxSimplexDim + 1> face{};
  for (std::size_t j = 0; j < filtration.size(); ++j) {
    const Simplex& s = filtration[j];
    const auto vertices = s.vertex_span();
    for (VertexIndex v : vertices) {
      if (v >= filtration.vertex_count()) {
        throw Error(ErrorCode::FaceNotFound, "vertex index out of range", j);
      }
    }
    column.clear();
    if (s.dim > 0) {
      for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
          if (i != drop) face[w++] = vertices[i];
        const ColumnIndex pos = index[s.dim - 1].find({face.data(), w});
        if (pos == kNoColumn) {
          throw Error(ErrorCode::FaceNotFound, "a face of this simplex is not in the filtration",
                      j);
        }
        column.push_back(pos);
      }
      std::sort(column.begin(), column.end());
    }
    if (s.dim < top) index[s.dim].insert(vertices, static_cast<ColumnIndex>(j));
    matrix.push_column(column);
  }
  return matrix;
}

Pairing reduce(const BoundaryMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<ColumnIndex>> by_dim(matrix.max_dim() + 1);
  std::vector<ColumnIndex> rank(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto& group = by_dim[matrix.dim(j)];
    rank[j] = static_cast<ColumnIndex>(group.size());
    group.push_back(static_cast<ColumnIndex>(j));
  }

  std::vector<bool> cleared(n, false);
  std::vector<PersistencePair> pairs;
  for (std::size_t d = by_dim.size(); d-- > 1;) {
    // Rows of dimension-d columns are (d-1)-simplices, addressed by rank.
    const auto& rows = by_dim[d - 1];
    BitTreeColumn work(rows.size());
    ReducedColumns reduced(rows.size());
    std::vector<ColumnIndex> extracted;

    for (ColumnIndex j : by_dim[d]) {
      if (cleared[j]) continue;
      for (ColumnIndex face : matrix.column(j)) work.toggle(rank[face]);
      while (!work.empty()) {
        const ColumnIndex low = work.max();
        if (!reduced.has_owner(low)) break;
        work.toggle(low);
        for (ColumnIndex r : reduced.rest(low)) work.toggle(r);
      }
      if (work.empty()) continue;
      const ColumnIndex low = work.max();
      work.drain(extracted);
      reduced.store(low, extracted);
      // A birth column reduces to zero; skip it in the next dimension down.
      cleared[rows[low]] = true;
      pairs.push_back({rows[low], j});
    }
  }
  return finish(std::move(pairs), n);
}

Pairing reduce_reference(const BoundaryMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<ColumnIndex>> r(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = matrix.column(j);
    r[j].assign(col.begin(), col.end());
  }
  std::vector<ColumnIndex> scratch;
  std::vector<PersistencePair> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    bool changed = true;
    while (changed && !r[j].empty()) {
      changed = false;
      for (std::size_t k = 0; k < j; ++k) {
        if (!r[k].empty() && r[k].back() == r[j].back()) {
          add_column(r[j], r[k], scratch);
          changed = true;
          break;
        }
      }
    }
    if (!r[j].empty()) pairs.push_back({r[j].back(), static_cast<ColumnIndex>(j)});
  }
  return finish(std::move(pairs), n);
}

std::vector<PersistenceDiagram> extract_diagrams(const Pairing& pairing,
                                                 const Filtration& filtration,
                                                 std::size_t max_homology_dim) {
  std::vector<PersistenceDiagram> out(max_homology_dim + 1);
  for (std::size_t k = 0; k <= max_homology_dim; ++k) out[k].dim = k;

  for (const auto& p : pairing.pairs) {
    const Simplex& birth = filtration[p.birth];
    if (birth.dim > max_homology_dim) continue;
    auto& diagram = out[birth.dim];
    const double death = filtration[p.death].value;
    if (death == birth.value) {
      ++diagram.zero_persistence_dropped;
    } else {
      diagram.points.push_back({birth.value, death});
    }
  }
  for (ColumnIndex e : pairing.essentials) {
    const Simplex& birth = filtration[e];
    if (birth.dim > max_homology_dim) continue;
    out[birth.dim].points.push_back({birth.value, std::nullopt});
  }
  return out;
}

}  // namespace toporisk
