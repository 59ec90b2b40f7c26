#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "polyaut/poly.hpp"

namespace polyaut {

/// Sparse vector over Q keyed by column index.
using SparseVector = std::map<std::size_t, Rational>;

/// Detects the first linear dependence in a growing sequence of vectors.
///
/// Rows are stored with integer entries and reduced fraction-free: a new row w
/// is replaced by p*w - w[c]*r for each stored row r with pivot column c and
/// pivot entry p, then divided by its content. Each row carries the integer
/// combination of input vectors it represents, so a row that reduces to zero
/// yields the relation directly.
class LinearDependenceFinder {
 public:
  /// Adds v_k. Returns nullopt while v_0..v_k stay independent; otherwise the
  /// relation sum_i c_i v_i = 0 with c_k = 1 (the vector is not stored).
  std::optional<std::vector<Rational>> add(const SparseVector& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t vectors_seen() const { return seen_; }

 private:
  struct Row {
    std::map<std::size_t, Integer> data;
    std::vector<Integer> combination;
    std::size_t pivot;
  };

  std::vector<Row> rows_;
  std::size_t seen_ = 0;
};

/// Rank of a list of vectors by the same elimination.
std::size_t rank(const std::vector<SparseVector>& vectors);

}  // namespace polyaut
