#pragma once
// y^2 = f(x) with f squarefree of degree 2h+1; one point P_inf at infinity.
// Classes are {m}, meaning m * P_inf. The ambient basis of degree m is
// x^i (2i <= m) followed by x^j y (2j + 2h + 1 <= m).

#include <vector>

#include "syzygy/models/section_model.hpp"
#include "syzygy/poly.hpp"

namespace syz {

class HyperellipticModel : public SectionModel {
 public:
  /// Throws InputError unless f is squarefree of odd degree 2h+1 >= 1.
  HyperellipticModel(const PrimeField& f, poly::Poly coeffs);
  /// Random monic f; with_root forces a rational Weierstrass point.
  static HyperellipticModel random(const PrimeField& f, int h, Rng& rng, bool with_root = false);

  const PrimeField& field() const override { return field_; }
  int genus() const override { return h_; }
  long class_degree(const DivisorClass& cls) const override;
  DivisorClass canonical_class() const override { return {2 * h_ - 2}; }
  std::optional<DivisorClass> pencil_class() const override { return DivisorClass{2}; }

  std::size_t ambient_dim(const DivisorClass& cls) const override;
  std::string ambient_label(const DivisorClass& cls, std::size_t i) const override;
  Vec ambient_multiply(const DivisorClass& c1, const Vec& a, const DivisorClass& c2, const Vec& b) const override;

  bool supports_points() const override { return true; }
  bool on_curve(const CurvePoint& p) const override;
  /// Uniform among points with y != 0.
  CurvePoint random_point(Rng& rng) const override;
  /// Local parameter x - x0 if y0 != 0, otherwise y.
  std::vector<Vec> jets(const DivisorClass& cls, const CurvePoint& p, int first, int count) const override;

  nlohmann::json describe() const override;

  const poly::Poly& f() const { return f_; }
  CurvePoint conjugate(const CurvePoint& p) const { return {p.x, field_.neg(p.y)}; }
  /// Affine ramification points (roots of f), ascending in x.
  std::vector<CurvePoint> weierstrass_points() const;

 private:
  /// Number of x-powers and of x^j y terms in degree m.
  std::pair<std::size_t, std::size_t> split_dims(long m) const;

  PrimeField field_;
  poly::Poly f_;
  int h_;
};

}  // namespace syz
