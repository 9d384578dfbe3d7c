#include "syzygy/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/exterior.hpp"

namespace syz {

namespace {

// Shared assembly: wedges of size k, products from `table` (stride = dim of source space).
FieldMatrix assemble(const GradedStrand& s, std::size_t k, std::size_t src_dim, std::size_t dst_dim,
                     const std::vector<Vec>& table) {
  const std::size_t c = s.c();
  const std::size_t cols = static_cast<std::size_t>(binomial(c, k)) * src_dim;
  const std::size_t rows = k == 0 ? 0 : static_cast<std::size_t>(binomial(c, k - 1)) * dst_dim;
  if (cols == 0 || rows == 0) return FieldMatrix::sparse(s.field, rows, cols, {});

  std::size_t nnz = 0;
  for (const Vec& v : table) nnz += static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue x) { return x != 0; }));
  // Each column touches k products of the source basis element; average over the table.
  const std::size_t estimate = cols * k * (nnz / std::max<std::size_t>(table.size(), 1) + 1);
  check_memory(estimate * sizeof(Triple) * 2, "Koszul differential assembly");
  if (rows > UINT32_MAX || cols > UINT32_MAX) throw ResourceLimitError("Koszul differential exceeds 32-bit indices");

  const SubsetRanker ranker(c);
  std::vector<Triple> entries;
  entries.reserve(estimate);
  const std::vector<Subset> wedges = all_subsets(c, k);
  for (std::size_t w = 0; w < wedges.size(); ++w) {
    const Subset& W = wedges[w];
    for (std::size_t i = 0; i < k; ++i) {
      const bool negative = i % 2 == 1;
      const std::size_t row_base = static_cast<std::size_t>(ranker.rank_without(W, i)) * dst_dim;
      for (std::size_t src = 0; src < src_dim; ++src) {
        const Vec& prod = table[W[i] * src_dim + src];
        const auto col = static_cast<std::uint32_t>(w * src_dim + src);
        for (std::size_t t = 0; t < dst_dim; ++t) {
          if (prod[t] == 0) continue;
          entries.push_back({static_cast<std::uint32_t>(row_base + t), col, negative ? s.field.neg(prod[t]) : prod[t]});
        }
      }
    }
  }
  return FieldMatrix::sparse(s.field, rows, cols, std::move(entries));
}

}  // namespace

FieldMatrix build_differential_in(const GradedStrand& s, std::size_t p) {
  s.validate();
  return assemble(s, p + 1, s.r1(), s.r2(), s.mult_prev);
}

FieldMatrix build_differential_out(const GradedStrand& s, std::size_t p) {
  if (p < 1) throw std::invalid_argument("build_differential_out requires p >= 1");
  s.validate();
  return assemble(s, p, s.r2(), s.r3(), s.mult_cur);
}

KoszulCell koszul_cell(const GradedStrand& s, std::size_t p) {
  KoszulCell cell;
  cell.chain_dim = static_cast<std::size_t>(binomial(s.c(), p)) * s.r2();
  if (cell.chain_dim == 0) return cell;
  cell.rank_in = rank(build_differential_in(s, p));
  cell.rank_out = p == 0 ? 0 : rank(build_differential_out(s, p));
  if (cell.rank_in + cell.rank_out > cell.chain_dim)
    throw ModelError("malformed strand: rank(d1) + rank(d2) = " + std::to_string(cell.rank_in + cell.rank_out) +
                     " exceeds chain dimension " + std::to_string(cell.chain_dim) + " at p=" + std::to_string(p));
  cell.dim = cell.chain_dim - cell.rank_in - cell.rank_out;
  return cell;
}

std::size_t koszul_dim(const GradedStrand& s, std::size_t p) { return koszul_cell(s, p).dim; }

std::size_t BettiTable::at(std::size_t p, int q) const {
  auto it = rows.find(q);
  if (it == rows.end() || p >= it->second.size()) throw std::out_of_range("Betti table cell not computed");
  return it->second[p];
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json r = nlohmann::json::object();
  for (const auto& [q, row] : rows) r[std::to_string(q)] = row;
  return {{"p_max", p_max}, {"modulus", modulus}, {"rows", r}, {"model", model}};
}

std::string BettiTable::to_text() const {
  std::size_t width = 3;
  for (const auto& [q, row] : rows)
    for (std::size_t v : row) width = std::max(width, std::to_string(v).size() + 1);
  std::ostringstream out;
  out << std::setw(6) << "p:";
  for (std::size_t p = 0; p <= p_max; ++p) out << std::setw(static_cast<int>(width)) << p;
  out << '\n';
  for (const auto& [q, row] : rows) {
    out << std::setw(5) << ("q=" + std::to_string(q)) << ':';
    for (std::size_t v : row) {
      if (v == 0)
        out << std::setw(static_cast<int>(width)) << '.';
      else
        out << std::setw(static_cast<int>(width)) << v;
    }
    out << '\n';
  }
  out << "(over F_" << modulus << ")\n";
  return out.str();
}

BettiTable betti_table(const StrandSource& src, std::size_t max_p, int q_min, int q_max, unsigned jobs) {
  BettiTable table;
  table.p_max = max_p;
  table.model = src.describe();
  std::vector<std::pair<int, GradedStrand>> strands;
  for (int q = q_min; q <= q_max; ++q) strands.emplace_back(q, src.strand(q));
  if (!strands.empty()) table.modulus = strands.front().second.field.modulus();

  struct Job {
    std::size_t strand;
    std::size_t p;
  };
  std::vector<Job> work;
  for (std::size_t i = 0; i < strands.size(); ++i) {
    table.rows[strands[i].first].assign(max_p + 1, 0);
    for (std::size_t p = 0; p <= max_p; ++p) work.push_back({i, p});
  }
  std::vector<std::size_t> results(work.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < work.size();) {
      try {
        results[j] = koszul_dim(strands[work[j].strand].second, work[j].p);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t j = 0; j < work.size(); ++j) table.rows[strands[work[j].strand].first][work[j].p] = results[j];
  return table;
}

StrandInvariants strand_invariants(const BettiTable& t) {
  StrandInvariants inv;
  if (auto it = t.rows.find(1); it != t.rows.end())
    for (std::size_t p = 0; p < it->second.size(); ++p)
      if (it->second[p] != 0) {
        inv.l1 = p;
        inv.b1 = it->second[p];
      }
  if (auto it = t.rows.find(2); it != t.rows.end())
    for (std::size_t p = 0; p < it->second.size(); ++p)
      if (it->second[p] != 0) {
        inv.l2 = p;
        inv.b2 = it->second[p];
        break;
      }
  return inv;
}

}  // namespace syz
