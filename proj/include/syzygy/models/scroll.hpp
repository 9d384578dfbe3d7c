#pragma once
// Rational normal scrolls X = P(O(e_1) + ... + O(e_r)) over P^1 as toric
// varieties, and complete intersections in them (Hirzebruch surface curves are
// the case r = 2 with one equation).
//
// Cox coordinates x_1..x_r, t0, t1 with deg x_i = (1, -e_i), deg t = (0, 1);
// a class (dH, dR) is dH*H + dR*R. Monomials of a class are listed with the
// x-exponents in descending lexicographic order, then t1 ascending.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "syzygy/elimination.hpp"
#include "syzygy/models/section_model.hpp"

namespace syz {

struct ScrollMonomial {
  std::vector<int> x;
  int t0 = 0;
  int t1 = 0;

  auto operator<=>(const ScrollMonomial&) const = default;
};

class ToricScroll {
 public:
  /// e_i >= 0, r >= 1.
  explicit ToricScroll(std::vector<int> e);

  std::size_t rank() const { return e_.size(); }
  const std::vector<int>& e() const { return e_; }
  int degree() const;

  std::vector<ScrollMonomial> monomials(int dH, int dR) const;
  std::size_t h0(int dH, int dR) const;
  /// h^0 .. h^r of O(dH, dR).
  std::vector<std::size_t> cohomology(int dH, int dR) const;
  /// Intersection number of r classes.
  long intersect(const std::vector<DivisorClass>& classes) const;
  DivisorClass canonical() const;
  std::string label(const ScrollMonomial& m) const;

 private:
  std::vector<int> e_;
};

std::string class_label(const DivisorClass& c);

/// X itself (no equations) or the complete intersection of the given forms in X.
class ScrollCurveModel : public SectionModel {
 public:
  struct Equation {
    DivisorClass cls;
    /// Coefficients over ToricScroll::monomials(cls).
    Vec coeffs;
  };

  ScrollCurveModel(const PrimeField& f, ToricScroll scroll, std::vector<Equation> equations);

  /// Random curve of class k*C0 + b*f on F_e, resampled until h^0(K) = g and h^0(A) = 2.
  static std::shared_ptr<ScrollCurveModel> hirzebruch(const PrimeField& f, int e, int k, int b, std::uint64_t seed);
  /// Random complete intersection of forms of the given classes.
  static std::shared_ptr<ScrollCurveModel> complete_intersection(const PrimeField& f, std::vector<int> e,
                                                                 std::vector<DivisorClass> classes, std::uint64_t seed);
  static std::shared_ptr<ScrollCurveModel> scroll(const PrimeField& f, std::vector<int> e);
  /// Class of a*C0 + b*f on F_e in (dH, dR) form.
  static DivisorClass hirzebruch_class(int e, int a, int b) { return {a, b - e * a}; }

  const PrimeField& field() const override { return field_; }
  int dimension() const override { return static_cast<int>(scroll_.rank() - equations_.size()); }
  int genus() const override { return genus_; }
  long class_degree(const DivisorClass& cls) const override;
  DivisorClass canonical_class() const override;
  std::optional<DivisorClass> pencil_class() const override { return DivisorClass{0, 1}; }

  /// h^0 of the class on the model; throws ModelError when the restriction sequence is not exact on H^0.
  std::size_t ambient_dim(const DivisorClass& cls) const override;
  std::string ambient_label(const DivisorClass& cls, std::size_t i) const override;
  Vec ambient_multiply(const DivisorClass& c1, const Vec& a, const DivisorClass& c2, const Vec& b) const override;

  bool supports_points() const override { return scroll_.rank() == 2 && equations_.size() == 1; }
  /// Points are (u, w) = (t1/t0, x1 t0^(e_1 - e_2) / x2), i.e. the chart t0 = x2 = 1.
  bool on_curve(const CurvePoint& p) const override;
  CurvePoint random_point(Rng& rng) const override;
  /// Local parameter u - u0.
  std::vector<Vec> jets(const DivisorClass& cls, const CurvePoint& p, int first, int count) const override;

  nlohmann::json describe() const override { return descriptor_; }
  void set_descriptor(nlohmann::json d) { descriptor_ = std::move(d); }

  const ToricScroll& toric() const { return scroll_; }
  const std::vector<Equation>& equations() const { return equations_; }
  /// Monomials of H^0(X, cls) and the reduction of a vector over them to model coordinates.
  const std::vector<ScrollMonomial>& scroll_monomials(const DivisorClass& cls) const;
  Vec reduce(const DivisorClass& cls, Vec full) const;

 private:
  struct ClassData {
    std::vector<ScrollMonomial> monomials;
    std::map<ScrollMonomial, std::size_t> index;
    std::unique_ptr<Echelon> relations;
    std::vector<std::size_t> free;
  };
  const ClassData& data(const DivisorClass& cls) const;
  void check_restriction(const DivisorClass& cls) const;
  /// F(u0 + t, w) terms as (coefficient, u exponent, w exponent).
  std::vector<std::tuple<Residue, int, int>> chart_terms() const;

  PrimeField field_;
  ToricScroll scroll_;
  std::vector<Equation> equations_;
  int genus_ = 0;
  nlohmann::json descriptor_;
  mutable std::mutex mutex_;
  mutable std::map<DivisorClass, std::unique_ptr<ClassData>> cache_;
};

}  // namespace syz
