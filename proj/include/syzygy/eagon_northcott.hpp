#pragma once
// Scroll syzygies: closed-form Betti numbers, the explicit top linear
// syzygies built from a pencil, and their restriction from the scroll.

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/models/scroll.hpp"
#include "syzygy/models/section_model.hpp"

namespace syz {

/// p * C(a, p+1).
std::size_t scroll_betti(std::size_t a, std::size_t p);

/// Element of wedge^p V (x) B, indexed as subset_rank(W) * dim(B) + s.
struct SyzygyVector {
  std::size_t p = 0;
  std::size_t c = 0;
  std::size_t b = 0;
  Vec coords;

  /// Nonzero entries as [[subset...], index, value].
  nlohmann::json to_json() const;
};

struct ENSyzygySpec {
  /// Basis of H^0(L - A), n + 1 vectors, and a basis (sigma, sigma') of H^0(A), in section coordinates.
  std::vector<Vec> tau;
  Vec sigma;
  Vec sigma_prime;
  /// Exponent m of sigma' in sigma^{n-1-m} sigma'^m.
  std::size_t power = 0;
};

/// Default spec from the section bases of L - A and A.
ENSyzygySpec default_en_spec(const CurveRing& ring, const DivisorClass& pencil, std::size_t power);

/// The syzygy attached to spec.power, in the coordinates of the ring's strand at (n, 1).
/// Throws InputError if sigma, sigma' are dependent, ModelError if the result is not a cocycle.
SyzygyVector en_syzygy(const CurveRing& ring, const DivisorClass& pencil, const ENSyzygySpec& spec);
/// All n polarized components for the default bases.
std::vector<SyzygyVector> en_syzygies(const CurveRing& ring, const DivisorClass& pencil);

/// Rank of the span of the vectors in K_{p,1} = ker(delta_2) / im(delta_1).
std::size_t en_span_rank(const GradedStrand& strand, const std::vector<SyzygyVector>& syz);

/// Scroll X' swept by the pencil, with the restriction H^0(X', H') -> H^0(C, K_C).
struct ScrollRestriction {
  std::vector<int> invariants;
  std::shared_ptr<ScrollCurveModel> scroll;
  /// Columns: images of the basis of H^0(X', H') in H^0(C, K_C) coordinates.
  std::vector<Vec> phi;
};
ScrollRestriction restriction_scroll(const ScrollCurveModel& model);

/// Scrollar invariants from the jumps of h^0(K - jA), ascending.
std::vector<int> scrollar_invariants(const SectionModel& model);

struct AlphaRank {
  std::size_t a = 0;
  std::size_t scroll_dim = 0;
  std::size_t curve_dim = 0;
  std::size_t image_rank = 0;
};
/// alpha: K_{a-1,1}(X', H') -> K_{a-1,1}(C, K_C).
AlphaRank restriction_alpha_rank(const ScrollCurveModel& model);

struct GrauertCheck {
  std::size_t lhs = 0;
  std::size_t via_sequence = 0;
  std::size_t rhs = 0;
};
/// h^0(wedge^{a-2} M_H (x) H^2) on the balanced scroll (1, ..., 1, 2) of degree a.
GrauertCheck grauert_dimension_check(std::size_t a);

}  // namespace syz
