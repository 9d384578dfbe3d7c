#pragma once
// Common interface of explicit models: ambient section spaces for divisor
// classes, their multiplication, and local jets at points. Sections of a
// bundle O(class)(-sum m_P P) are the kernel of the jet conditions.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "syzygy/field.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/rng.hpp"

namespace syz {

using DivisorClass = std::vector<int>;

/// Affine chart coordinates; meaning is model specific ((x, y) on hyperelliptic
/// curves, (u, w) = (t1/t0, x1/x2) on Hirzebruch surfaces).
struct CurvePoint {
  Residue x = 0;
  Residue y = 0;

  auto operator<=>(const CurvePoint&) const = default;
};

struct Bundle {
  DivisorClass cls;
  /// Subtracted points with multiplicity; sorted by point, no zero entries.
  std::vector<std::pair<CurvePoint, int>> points;

  static Bundle of_class(DivisorClass c) { return Bundle{std::move(c), {}}; }
  Bundle minus(const CurvePoint& p, int m = 1) const;
  Bundle plus(const Bundle& o) const;
  Bundle scaled(int n) const;
  int multiplicity(const CurvePoint& p) const;
  bool operator==(const Bundle&) const = default;
  nlohmann::json to_json() const;
};

class SectionModel {
 public:
  virtual ~SectionModel() = default;

  virtual const PrimeField& field() const = 0;
  /// Dimension of the modeled variety (1 for curves).
  virtual int dimension() const { return 1; }
  /// Arithmetic genus of a curve model.
  virtual int genus() const = 0;
  /// Degree of the class restricted to the curve.
  virtual long class_degree(const DivisorClass& cls) const = 0;
  virtual DivisorClass canonical_class() const = 0;
  virtual std::optional<DivisorClass> pencil_class() const { return std::nullopt; }

  virtual std::size_t ambient_dim(const DivisorClass& cls) const = 0;
  virtual std::string ambient_label(const DivisorClass& cls, std::size_t i) const = 0;
  /// Product of ambient vectors, in ambient coordinates of c1 + c2.
  virtual Vec ambient_multiply(const DivisorClass& c1, const Vec& a, const DivisorClass& c2, const Vec& b) const = 0;

  virtual bool supports_points() const { return false; }
  virtual bool on_curve(const CurvePoint&) const { return false; }
  /// A point outside the model's forbidden loci.
  virtual CurvePoint random_point(Rng& rng) const;
  /// Functionals (over ambient coordinates) giving the coefficients of
  /// t^first .. t^{first+count-1} of a section in the local parameter t at p.
  virtual std::vector<Vec> jets(const DivisorClass& cls, const CurvePoint& p, int first, int count) const;

  virtual nlohmann::json describe() const = 0;

  long degree(const Bundle& b) const;
};

/// H^0 of a bundle as a subspace of the ambient space. The basis is reduced on
/// its free columns, so coordinates are read off those columns.
class SectionSpace {
 public:
  SectionSpace(const SectionModel& model, Bundle bundle);

  const Bundle& bundle() const { return bundle_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Coordinates of an ambient vector; throws ModelError if it is not a section of this bundle.
  Vec coordinates(const Vec& ambient) const;
  Vec to_ambient(const Vec& coords) const;
  /// Value in the fiber at p (jet of order mult_p), as a functional on coordinates.
  Vec fiber_value(const SectionModel& model, const CurvePoint& p) const;

 private:
  Bundle bundle_;
  PrimeField field_;
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> free_cols_;
  std::vector<std::string> labels_;
};

Vec multiply_sections(const SectionModel& model, const SectionSpace& a, const Vec& a_coords, const SectionSpace& b,
                      const Vec& b_coords, const SectionSpace& target);

/// Graded ring  R_n = H^0(L^n M)  over a single model.
class CurveRing : public StrandSource {
 public:
  CurveRing(std::shared_ptr<const SectionModel> model, Bundle L, Bundle M = Bundle{});

  const SectionModel& model() const { return *model_; }
  std::shared_ptr<const SectionModel> model_ptr() const { return model_; }
  const Bundle& L() const { return L_; }
  const Bundle& M() const { return M_; }

  const SectionSpace& v_space() const;
  /// H^0(L^n M); n may be negative.
  const SectionSpace& piece(int n) const;
  Bundle piece_bundle(int n) const;

  GradedStrand strand(int q) const override;
  nlohmann::json describe() const override;

 private:
  std::shared_ptr<const SectionModel> model_;
  Bundle L_;
  Bundle M_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<SectionSpace>> pieces_;
  mutable std::shared_ptr<SectionSpace> v_space_;
};

/// Assembles a strand from bases and a product oracle: mult(v, n, s) gives the
/// coordinates in piece n+1 of v-th basis vector of V times s-th basis vector of piece n.
template <class Mult>
GradedStrand make_strand(const PrimeField& f, std::vector<std::string> v, std::vector<std::string> prev,
                         std::vector<std::string> cur, std::vector<std::string> next, int q, Mult&& mult) {
  GradedStrand s{f, std::move(v), std::move(prev), std::move(cur), std::move(next), {}, {}};
  s.mult_prev.reserve(s.c() * s.r1());
  for (std::size_t i = 0; i < s.c(); ++i)
    for (std::size_t j = 0; j < s.r1(); ++j) s.mult_prev.push_back(mult(i, q - 1, j));
  s.mult_cur.reserve(s.c() * s.r2());
  for (std::size_t i = 0; i < s.c(); ++i)
    for (std::size_t j = 0; j < s.r2(); ++j) s.mult_cur.push_back(mult(i, q, j));
  return s;
}

/// Throws ModelError if h^0 disagrees with Riemann-Roch in the non-special range.
void check_riemann_roch(const SectionModel& model, const Bundle& b, std::size_t h0);

}  // namespace syz
