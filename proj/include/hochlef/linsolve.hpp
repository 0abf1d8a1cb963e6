// Exact sparse linear algebra over the rationals: an incremental row-echelon
// accumulator with deterministic pivoting (leading entries normalized to 1)
// and optional provenance tracking, so any reduced vector can be rewritten
// as an explicit combination of the added rows.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hochlef/rational.hpp"

namespace hochlef {

// Sorted-by-index sparse vector.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

inline void axpy(SparseVec& v, const Rational& f, const SparseVec& w) {
  // v += f * w, both sorted; result sorted with no explicit zeros.
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, f * w[j].second);
      if (is_zero(out.back().second)) out.pop_back();
      ++j;
    } else {
      Rational c = v[i].second + f * w[j].second;
      if (!is_zero(c)) out.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

inline const Rational* coeff_at(const SparseVec& v, std::uint32_t col) {
  auto it = std::lower_bound(
      v.begin(), v.end(), col,
      [](const auto& p, std::uint32_t c) { return p.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

class RowEchelon {
 public:
  explicit RowEchelon(bool track_provenance = false)
      : track_(track_provenance) {}

  struct Added {
    bool independent = false;
    std::uint32_t pivot = 0;
    size_t index = 0;  // echelon row index when independent
  };

  // Adds a tagged row, reducing it against the current echelon.
  Added add_row(SparseVec row, std::uint32_t tag) {
    SparseVec combo;
    if (track_) combo.emplace_back(tag, Rational(1));
    reduce_combination(row, track_ ? &combo : nullptr);
    if (row.empty()) return {};
    Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    for (auto& [t, v] : combo) v /= lead;
    Added a{true, row.front().first, rows_.size()};
    pivot_of_col_.resize(
        std::max<size_t>(pivot_of_col_.size(), row.front().first + 1), npos);
    pivot_of_col_[row.front().first] = rows_.size();
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    return a;
  }

  const SparseVec& row(size_t i) const { return rows_[i]; }
  // Expression of echelon row i over the original tagged rows.
  const SparseVec& combo(size_t i) const { return combos_[i]; }
  size_t rank() const { return rows_.size(); }
  size_t pivot_row(std::uint32_t col) const {
    return col < pivot_of_col_.size() ? pivot_of_col_[col] : npos;
  }

  struct Reduction {
    SparseVec residual;
    // v = residual + sum combo[tag] * original_row[tag]
    SparseVec combo;
  };

  Reduction reduce(SparseVec v) const {
    Reduction r;
    SparseVec acc;
    reduce_combination(v, track_ ? &acc : nullptr);
    r.residual = std::move(v);
    // reduce_combination accumulates residual = v + sum acc * orig
    for (auto& [t, c] : acc) c = -c;
    r.combo = std::move(acc);
    return r;
  }

  static constexpr size_t npos = static_cast<size_t>(-1);

 private:
  // In place: v <- fully reduced; if combo, accumulates the row combination
  // that was *added* to v (combination semantics, not decomposition).
  void reduce_combination(SparseVec& v, SparseVec* combo) const {
    size_t scan = 0;
    while (scan < v.size()) {
      size_t pr = pivot_row(v[scan].first);
      if (pr == npos) {
        ++scan;
        continue;
      }
      Rational f = -v[scan].second;  // echelon rows have unit leading entry
      axpy(v, f, rows_[pr]);
      if (combo) axpy(*combo, f, combos_[pr]);
      // entries before `scan` have smaller columns than the pivot: untouched
    }
  }

  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<size_t> pivot_of_col_;
};

}  // namespace hochlef
