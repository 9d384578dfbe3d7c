#include "syzygy/elimination.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

#include "syzygy/errors.hpp"
#include "syzygy/kernels.hpp"

namespace syz {

LinalgConfig& linalg_config() {
  static LinalgConfig config;
  return config;
}

void check_memory(std::size_t bytes, const char* what) {
  const std::size_t cap = linalg_config().memory_cap_bytes;
  if (bytes > cap) {
    std::ostringstream msg;
    msg << what << ": needs " << bytes << " bytes (" << (bytes >> 20) << " MiB), cap is " << cap << " bytes ("
        << (cap >> 20) << " MiB)";
    throw ResourceLimitError(msg.str());
  }
}

namespace {

struct DenseBlock {
  std::size_t rows;
  std::size_t cols;
  std::vector<Residue> data;

  Residue* row(std::size_t i) { return data.data() + i * cols; }
};

DenseBlock dense_copy(const FieldMatrix& m, std::size_t row_begin, std::size_t row_end) {
  DenseBlock b{row_end - row_begin, m.cols(), {}};
  check_memory(b.rows * b.cols * sizeof(Residue), "dense elimination");
  b.data.assign(b.rows * b.cols, 0);
  if (m.is_sparse()) {
    for (const Triple& t : m.triples())
      if (t.row >= row_begin && t.row < row_end) b.data[(t.row - row_begin) * b.cols + t.col] = t.value;
  } else {
    std::copy(m.row_data(row_begin), m.row_data(row_begin) + b.rows * b.cols, b.data.begin());
  }
  return b;
}

// Gaussian elimination in place; rows [0, rank) end up in echelon form with
// unit pivots. With `reduced`, entries above each pivot are cleared too.
std::size_t echelonize(DenseBlock& b, const PrimeField& f, bool reduced, std::vector<std::size_t>* pivots) {
  const kernels::RowOps& ops = kernels::select(f.modulus());
  const kernels::Reducer red(f.modulus());
  std::size_t r = 0;
  for (std::size_t c = 0; c < b.cols && r < b.rows; ++c) {
    std::size_t piv = r;
    while (piv < b.rows && b.row(piv)[c] == 0) ++piv;
    if (piv == b.rows) continue;
    if (piv != r) std::swap_ranges(b.row(piv) + c, b.row(piv) + b.cols, b.row(r) + c);
    Residue* prow = b.row(r);
    if (prow[c] != 1) ops.scale(prow + c, f.inv(prow[c]), b.cols - c, red);
    for (std::size_t i = reduced ? 0 : r + 1; i < b.rows; ++i) {
      if (i == r) continue;
      Residue* row = b.row(i);
      if (row[c] != 0) ops.axpy(row + c, prow + c, f.neg(row[c]), b.cols - c, red);
    }
    if (pivots != nullptr) pivots->push_back(c);
    ++r;
  }
  return r;
}

void truncate(DenseBlock& b, std::size_t rows) {
  b.rows = rows;
  b.data.resize(rows * b.cols);
  b.data.shrink_to_fit();
}

using SparseRow = std::vector<std::pair<std::uint32_t, Residue>>;

}  // namespace

std::size_t rank_dense(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side to bound the number of pivot sweeps.
  if (m.rows() > m.cols() && m.is_sparse()) {
    DenseBlock b = dense_copy(m.transpose(), 0, m.cols());
    return echelonize(b, m.field(), false, nullptr);
  }
  DenseBlock b = dense_copy(m, 0, m.rows());
  return echelonize(b, m.field(), false, nullptr);
}

std::size_t rank_sparse(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const PrimeField& f = m.field();
  const FieldMatrix s = m.to_sparse();
  std::vector<SparseRow> rows(m.rows());
  std::vector<std::uint32_t> col_count(m.cols(), 0);
  for (const Triple& t : s.triples()) {
    rows[t.row].emplace_back(t.col, t.value);
    ++col_count[t.col];
  }
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

  std::vector<SparseRow> pivot_rows;
  std::vector<std::uint32_t> pivot_col;
  std::vector<long> pivot_of_col(m.cols(), -1);
  std::vector<Residue> acc(m.cols(), 0);
  std::vector<char> touched_flag(m.cols(), 0);
  std::vector<std::uint32_t> touched;
  std::size_t stored = 0;

  auto touch = [&](std::uint32_t c, std::priority_queue<long, std::vector<long>, std::greater<>>& heap) {
    if (!touched_flag[c]) {
      touched_flag[c] = 1;
      touched.push_back(c);
    }
    if (pivot_of_col[c] >= 0) heap.push(pivot_of_col[c]);
  };

  for (std::size_t idx : order) {
    SparseRow& src = rows[idx];
    if (src.empty()) continue;
    std::priority_queue<long, std::vector<long>, std::greater<>> heap;
    for (auto [c, v] : src) {
      acc[c] = v;
      touch(c, heap);
    }
    SparseRow().swap(src);
    // Pivot k's row only meets pivot columns added after k, so ascending
    // pivot order terminates.
    while (!heap.empty()) {
      long k = heap.top();
      heap.pop();
      while (!heap.empty() && heap.top() == k) heap.pop();
      std::uint32_t pc = pivot_col[k];
      Residue factor = acc[pc];
      if (factor == 0) continue;
      Residue neg = f.neg(factor);
      for (auto [c, v] : pivot_rows[k]) {
        bool was_zero = acc[c] == 0;
        acc[c] = f.mul_add(acc[c], neg, v);
        if (was_zero && c != pc) touch(c, heap);
      }
    }
    SparseRow reduced;
    for (std::uint32_t c : touched) {
      if (acc[c] != 0) reduced.emplace_back(c, acc[c]);
      acc[c] = 0;
      touched_flag[c] = 0;
    }
    touched.clear();
    if (reduced.empty()) continue;
    std::sort(reduced.begin(), reduced.end());
    auto best = std::min_element(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      return col_count[a.first] != col_count[b.first] ? col_count[a.first] < col_count[b.first] : a.first < b.first;
    });
    Residue inv = f.inv(best->second);
    for (auto& [c, v] : reduced) v = f.mul(v, inv);
    pivot_of_col[best->first] = static_cast<long>(pivot_rows.size());
    pivot_col.push_back(best->first);
    stored += reduced.size();
    check_memory(stored * sizeof(SparseRow::value_type), "sparse elimination fill-in");
    pivot_rows.push_back(std::move(reduced));
  }
  return pivot_rows.size();
}

std::size_t rank(const FieldMatrix& m) {
  if (m.cells() <= linalg_config().dense_cell_threshold) return rank_dense(m);
  return rank_sparse(m);
}

std::size_t rank_parallel(const FieldMatrix& m, unsigned workers) {
  if (workers == 0) throw std::invalid_argument("rank_parallel: workers must be >= 1");
  if (workers == 1 || m.rows() < 2 * workers) return rank_dense(m);
  const PrimeField& f = m.field();
  std::vector<DenseBlock> blocks(workers);
  {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = m.rows() * w / workers, hi = m.rows() * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        blocks[w] = dense_copy(m, lo, hi);
        truncate(blocks[w], echelonize(blocks[w], f, false, nullptr));
      });
    }
    for (auto& t : pool) t.join();
  }
  while (blocks.size() > 1) {
    std::vector<DenseBlock> next((blocks.size() + 1) / 2);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < next.size(); ++i) {
      pool.emplace_back([&, i] {
        if (2 * i + 1 == blocks.size()) {
          next[i] = std::move(blocks[2 * i]);
          return;
        }
        DenseBlock merged{blocks[2 * i].rows + blocks[2 * i + 1].rows, m.cols(), {}};
        merged.data = std::move(blocks[2 * i].data);
        merged.data.insert(merged.data.end(), blocks[2 * i + 1].data.begin(), blocks[2 * i + 1].data.end());
        truncate(merged, echelonize(merged, f, false, nullptr));
        next[i] = std::move(merged);
      });
    }
    for (auto& t : pool) t.join();
    blocks = std::move(next);
  }
  return blocks[0].rows;
}

std::vector<Vec> kernel_basis(const FieldMatrix& m) {
  const PrimeField& f = m.field();
  std::vector<Vec> basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vec v(m.cols(), 0);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  DenseBlock b = dense_copy(m, 0, m.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = echelonize(b, f, true, &pivots);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), 0);
    v[j] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = f.neg(b.row(i)[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

void Echelon::reduce(Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("Echelon: dimension mismatch");
  const kernels::RowOps& ops = kernels::select(field_.modulus());
  const kernels::Reducer red(field_.modulus());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (v[c] != 0) ops.axpy(v.data(), rows_[i].data(), field_.neg(v[c]), dim_, red);
  }
}

bool Echelon::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

bool Echelon::insert(Vec v) {
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
  if (it == v.end()) return false;
  const std::size_t c = static_cast<std::size_t>(it - v.begin());
  const kernels::RowOps& ops = kernels::select(field_.modulus());
  const kernels::Reducer red(field_.modulus());
  ops.scale(v.data(), field_.inv(v[c]), dim_, red);
  for (Vec& row : rows_)
    if (row[c] != 0) ops.axpy(row.data(), v.data(), field_.neg(row[c]), dim_, red);
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

}  // namespace syz
