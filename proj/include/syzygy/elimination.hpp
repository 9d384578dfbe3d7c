#pragma once
// Exact rank and kernel computation over F_p.

#include <cstddef>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/matrix.hpp"

namespace syz {

struct LinalgConfig {
  /// Matrices with at most this many cells are eliminated densely.
  std::size_t dense_cell_threshold = 4'000'000;
  /// Working-memory cap for a single elimination.
  std::size_t memory_cap_bytes = std::size_t{8} << 30;
};

/// Process-wide configuration; adjust before starting computations.
LinalgConfig& linalg_config();

/// Throws ResourceLimitError with a sizing report if `bytes` exceeds the cap.
void check_memory(std::size_t bytes, const char* what);

std::size_t rank(const FieldMatrix& m);
std::size_t rank_dense(const FieldMatrix& m);
/// Sparse elimination with a static Markowitz pivot rule (lightest rows first,
/// pivot on the entry whose column is least populated).
std::size_t rank_sparse(const FieldMatrix& m);
/// Row blocks are echelonized concurrently and merged pairwise.
std::size_t rank_parallel(const FieldMatrix& m, unsigned workers);

/// Basis of the right kernel, one vector per free column of the RREF.
std::vector<Vec> kernel_basis(const FieldMatrix& m);

/// Span of vectors kept in reduced row echelon form, built incrementally.
class Echelon {
 public:
  Echelon(const PrimeField& f, std::size_t dim) : field_(f), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Pivot column of each stored row, in insertion order.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Subtracts the span from v so that v vanishes on every pivot column.
  void reduce(Vec& v) const;
  bool contains(Vec v) const;
  /// Adds v to the span; returns false if it was already contained.
  bool insert(Vec v);

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace syz
