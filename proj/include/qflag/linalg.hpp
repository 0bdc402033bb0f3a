#pragma once

#include "qflag/ratq.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qflag {

// Sparse vector: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, RatQ>>;

SparseVec sparse_from_map(const std::map<int, RatQ> &m);
// a + f * b
SparseVec axpy(const SparseVec &a, const RatQ &f, const SparseVec &b);
SparseVec scale(const SparseVec &a, const RatQ &f);

// Incremental row echelon form over Q(q). Pivot = smallest column of a row.
class Echelon {
public:
  // Reduces v against the stored rows; the result has no pivot columns.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec &v) const { return reduce(v).empty(); }
  // Inserts v; returns true if the rank grew.
  bool insert(const SparseVec &v);
  std::size_t rank() const { return rows_.size(); }
  // Reduced row echelon form, rows sorted by pivot, pivots normalized to 1.
  std::vector<SparseVec> rref() const;

private:
  std::map<int, SparseVec> rows_;  // pivot column -> row with leading 1
};

// Basis of {c : sum_j c_j v_j = 0} for the given vectors.
std::vector<SparseVec> kernel(const std::vector<SparseVec> &vs);

// Basis of {x : <x, c> = 0 for all c in cs} within coordinates 0..dim-1.
std::vector<SparseVec> annihilator(const std::vector<SparseVec> &cs, int dim);

}  // namespace qflag
