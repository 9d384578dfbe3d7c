#pragma once
// Three consecutive graded pieces of a section module plus the two
// multiplication tables by H^0(L) that the Koszul complex needs.

#include <cstddef>
#include <string>
#include <vector>

#include "syzygy/field.hpp"

namespace syz {

struct GradedStrand {
  PrimeField field;
  std::vector<std::string> v_basis;  // H^0(L), size c
  std::vector<std::string> b_prev;   // H^0(L^{q-1} M), size r1
  std::vector<std::string> b_cur;    // H^0(L^q M), size r2
  std::vector<std::string> b_next;   // H^0(L^{q+1} M), size r3
  /// mult_prev[v * r1 + s] = coordinates of v*s in b_cur.
  std::vector<Vec> mult_prev;
  /// mult_cur[v * r2 + s] = coordinates of v*s in b_next.
  std::vector<Vec> mult_cur;

  std::size_t c() const { return v_basis.size(); }
  std::size_t r1() const { return b_prev.size(); }
  std::size_t r2() const { return b_cur.size(); }
  std::size_t r3() const { return b_next.size(); }

  const Vec& prev_product(std::size_t v, std::size_t s) const { return mult_prev[v * r1() + s]; }
  const Vec& cur_product(std::size_t v, std::size_t s) const { return mult_cur[v * r2() + s]; }

  /// Throws InputError if any table has the wrong shape or unreduced entries.
  void validate() const;

  /// Checks mult_cur(v, mult_prev(w, s)) == mult_cur(w, mult_prev(v, s)) for all v, w, s.
  bool is_commutative() const;
};

}  // namespace syz
