#pragma once
// Exact matrices over F_p, dense row-major or sparse triples.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "syzygy/field.hpp"

namespace syz {

struct Triple {
  std::uint32_t row;
  std::uint32_t col;
  Residue value;

  bool operator==(const Triple&) const = default;
};

class FieldMatrix {
 public:
  /// Dense zero matrix.
  FieldMatrix(const PrimeField& f, std::size_t rows, std::size_t cols);

  /// Sparse matrix from triples; duplicates are summed and zeros dropped.
  static FieldMatrix sparse(const PrimeField& f, std::size_t rows, std::size_t cols, std::vector<Triple> entries);
  static FieldMatrix identity(const PrimeField& f, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t cells() const { return rows_ * cols_; }
  bool is_sparse() const { return sparse_; }
  /// Stored nonzeros (sparse) or rows*cols (dense).
  std::size_t stored() const { return sparse_ ? entries_.size() : dense_.size(); }

  Residue at(std::size_t i, std::size_t j) const;
  /// Dense only.
  void set(std::size_t i, std::size_t j, Residue v);
  const Residue* row_data(std::size_t i) const { return dense_.data() + i * cols_; }
  Residue* row_data(std::size_t i) { return dense_.data() + i * cols_; }

  /// Sparse only: sorted by (row, col).
  const std::vector<Triple>& triples() const { return entries_; }

  FieldMatrix to_dense() const;
  FieldMatrix to_sparse() const;
  FieldMatrix transpose() const;

  Vec apply(const Vec& v) const;
  FieldMatrix multiply(const FieldMatrix& rhs) const;
  bool is_zero() const;

  bool operator==(const FieldMatrix& o) const;

  /// "rows cols p" header then 1-indexed "i j v" lines, terminated by "0 0 0".
  void write_sms(std::ostream& out) const;
  static FieldMatrix read_sms(std::istream& in);

 private:
  FieldMatrix(const PrimeField& f, std::size_t rows, std::size_t cols, bool sparse)
      : field_(f), rows_(rows), cols_(cols), sparse_(sparse) {}

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  bool sparse_;
  std::vector<Residue> dense_;
  std::vector<Triple> entries_;
};

}  // namespace syz
