#pragma once
// Koszul complex assembly and Betti tables.
//
// Chain spaces are indexed as subset_rank(W) * dim(B) + s, with W a colex-ranked
// wedge of basis indices of V and s a basis index of the section space B.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/strand.hpp"

namespace syz {

/// Something that can emit the strand around H^0(L^q M) for each q.
class StrandSource {
 public:
  virtual ~StrandSource() = default;
  virtual GradedStrand strand(int q) const = 0;
  virtual nlohmann::json describe() const { return nlohmann::json::object(); }
};

/// delta_1 : wedge^{p+1} V (x) b_prev -> wedge^p V (x) b_cur.
FieldMatrix build_differential_in(const GradedStrand& s, std::size_t p);
/// delta_2 : wedge^p V (x) b_cur -> wedge^{p-1} V (x) b_next; requires p >= 1.
FieldMatrix build_differential_out(const GradedStrand& s, std::size_t p);

struct KoszulCell {
  std::size_t chain_dim = 0;  // r2 * C(c, p)
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  std::size_t dim = 0;
};

KoszulCell koszul_cell(const GradedStrand& s, std::size_t p);
std::size_t koszul_dim(const GradedStrand& s, std::size_t p);

struct BettiTable {
  std::uint32_t modulus = 0;
  std::size_t p_max = 0;
  /// rows[q][p] = dim K_{p,q}.
  std::map<int, std::vector<std::size_t>> rows;
  nlohmann::json model = nlohmann::json::object();

  std::size_t at(std::size_t p, int q) const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Cells 0 <= p <= max_p, q_min <= q <= q_max; `jobs` cells are computed concurrently.
BettiTable betti_table(const StrandSource& src, std::size_t max_p, int q_min = 0, int q_max = 3, unsigned jobs = 1);

struct StrandInvariants {
  std::optional<std::size_t> l1;
  std::optional<std::size_t> l2;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
};

StrandInvariants strand_invariants(const BettiTable& t);

}  // namespace syz
