#include "syzygy/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "syzygy/errors.hpp"

namespace syz {

FieldMatrix::FieldMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), sparse_(false), dense_(rows * cols, 0) {}

FieldMatrix FieldMatrix::sparse(const PrimeField& f, std::size_t rows, std::size_t cols, std::vector<Triple> entries) {
  FieldMatrix m(f, rows, cols, true);
  std::sort(entries.begin(), entries.end(), [](const Triple& a, const Triple& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  m.entries_.reserve(entries.size());
  for (const Triple& t : entries) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("sparse entry outside matrix");
    Residue v = t.value % f.modulus();
    if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
      m.entries_.back().value = f.add(m.entries_.back().value, v);
    } else {
      m.entries_.push_back({t.row, t.col, v});
    }
  }
  std::erase_if(m.entries_, [](const Triple& t) { return t.value == 0; });
  return m;
}

FieldMatrix FieldMatrix::identity(const PrimeField& f, std::size_t n) {
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Residue FieldMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  if (!sparse_) return dense_[i * cols_ + j];
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Triple{static_cast<std::uint32_t>(i),
                                                                    static_cast<std::uint32_t>(j), 0},
                             [](const Triple& a, const Triple& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  return (it != entries_.end() && it->row == i && it->col == j) ? it->value : 0;
}

void FieldMatrix::set(std::size_t i, std::size_t j, Residue v) {
  if (sparse_) throw std::logic_error("set() on sparse matrix");
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  dense_[i * cols_ + j] = v % field_.modulus();
}

FieldMatrix FieldMatrix::to_dense() const {
  if (!sparse_) return *this;
  FieldMatrix d(field_, rows_, cols_);
  for (const Triple& t : entries_) d.dense_[t.row * cols_ + t.col] = t.value;
  return d;
}

FieldMatrix FieldMatrix::to_sparse() const {
  if (sparse_) return *this;
  FieldMatrix s(field_, rows_, cols_, true);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (Residue v = dense_[i * cols_ + j])
        s.entries_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
  return s;
}

FieldMatrix FieldMatrix::transpose() const {
  if (sparse_) {
    std::vector<Triple> t;
    t.reserve(entries_.size());
    for (const Triple& e : entries_) t.push_back({e.col, e.row, e.value});
    return sparse(field_, cols_, rows_, std::move(t));
  }
  FieldMatrix d(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) d.dense_[j * rows_ + i] = dense_[i * cols_ + j];
  return d;
}

Vec FieldMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(rows_, 0);
  if (sparse_) {
    for (const Triple& t : entries_) acc[t.row] = (acc[t.row] + static_cast<std::uint64_t>(t.value) * v[t.col]) % p;
  } else {
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t s = 0;
      const Residue* r = row_data(i);
      for (std::size_t j = 0; j < cols_; ++j) s = (s + static_cast<std::uint64_t>(r[j]) * v[j]) % p;
      acc[i] = s;
    }
  }
  return Vec(acc.begin(), acc.end());
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: dimension mismatch");
  if (!(field_ == rhs.field_)) throw std::invalid_argument("multiply: field mismatch");
  const FieldMatrix a = to_sparse();
  const FieldMatrix b = rhs.to_sparse();
  // Row offsets of b for the sparse-times-sparse product.
  std::vector<std::size_t> start(b.rows_ + 1, 0);
  for (const Triple& t : b.entries_) ++start[t.row + 1];
  for (std::size_t i = 0; i < b.rows_; ++i) start[i + 1] += start[i];
  std::vector<Triple> out;
  std::vector<Residue> acc(rhs.cols_, 0);
  std::vector<char> seen(rhs.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::size_t k = 0;
  while (k < a.entries_.size()) {
    std::uint32_t row = a.entries_[k].row;
    for (; k < a.entries_.size() && a.entries_[k].row == row; ++k) {
      const Triple& ta = a.entries_[k];
      for (std::size_t l = start[ta.col]; l < start[ta.col + 1]; ++l) {
        const Triple& tb = b.entries_[l];
        if (!seen[tb.col]) {
          seen[tb.col] = 1;
          touched.push_back(tb.col);
        }
        acc[tb.col] = field_.mul_add(acc[tb.col], ta.value, tb.value);
      }
    }
    for (std::uint32_t c : touched) {
      if (acc[c] != 0) out.push_back({row, c, acc[c]});
      acc[c] = 0;
      seen[c] = 0;
    }
    touched.clear();
  }
  FieldMatrix result = sparse(field_, rows_, rhs.cols_, std::move(out));
  return (sparse_ || rhs.sparse_) ? result : result.to_dense();
}

bool FieldMatrix::is_zero() const {
  if (sparse_) return entries_.empty();
  return std::all_of(dense_.begin(), dense_.end(), [](Residue v) { return v == 0; });
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return to_sparse().entries_ == o.to_sparse().entries_;
}

void FieldMatrix::write_sms(std::ostream& out) const {
  out << rows_ << ' ' << cols_ << ' ' << field_.modulus() << '\n';
  for (const Triple& t : to_sparse().entries_) out << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
  out << "0 0 0\n";
}

FieldMatrix FieldMatrix::read_sms(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::uint64_t p = 0;
  if (!(in >> rows >> cols >> p)) throw InputError("SMS: bad header");
  PrimeField f(static_cast<std::uint32_t>(p));
  std::vector<Triple> entries;
  std::int64_t i = 0, j = 0, v = 0;
  while (in >> i >> j >> v) {
    if (i == 0 && j == 0) break;
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows || static_cast<std::size_t>(j) > cols)
      throw InputError("SMS: entry out of range");
    entries.push_back({static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1), f.from_int(v)});
  }
  return sparse(f, rows, cols, std::move(entries));
}

}  // namespace syz
