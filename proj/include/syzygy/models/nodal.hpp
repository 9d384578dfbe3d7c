#pragma once
// Curves glued from smooth components at pairs of points. A section of the
// glued bundle is a tuple of component sections with s_a(P) = lambda^n s_b(Q)
// at every node, for the n-th power of a bundle glued with scalar lambda.

#include <memory>
#include <string>
#include <vector>

#include "syzygy/models/section_model.hpp"

namespace syz {

struct NodalComponent {
  std::string name;
  std::shared_ptr<const SectionModel> model;
  /// The bundle whose powers form the ring, and the twist M.
  Bundle L;
  Bundle M;
};

struct Node {
  std::size_t a = 0;
  CurvePoint pa;
  std::size_t b = 0;
  CurvePoint pb;
  Residue lambda = 1;
};

class NodalModel {
 public:
  /// Throws InputError on an empty or disconnected configuration, points off their component,
  /// or a point used by two nodes.
  NodalModel(std::vector<NodalComponent> components, std::vector<Node> nodes);

  const std::vector<NodalComponent>& components() const { return components_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const PrimeField& field() const { return components_.front().model->field(); }
  /// Arithmetic genus.
  int genus() const;
  nlohmann::json describe() const;

 private:
  std::vector<NodalComponent> components_;
  std::vector<Node> nodes_;
};

/// H^0 of a glued bundle, given one section space per component.
class GluedSpace {
 public:
  GluedSpace(const NodalModel& model, std::vector<std::shared_ptr<const SectionSpace>> parts, int power);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::shared_ptr<const SectionSpace>>& parts() const { return parts_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Component slice of a concatenated coordinate vector.
  Vec slice(const Vec& v, std::size_t component) const;
  /// Coordinates of a concatenated tuple; throws ModelError if it violates a node condition.
  Vec coordinates(const Vec& tuple) const;

 private:
  std::vector<std::shared_ptr<const SectionSpace>> parts_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  PrimeField field_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> free_;
  std::vector<std::string> labels_;
};

/// dim H^0 of the glued bundle L (power 1, no twist).
std::size_t nodal_h0(const NodalModel& model);

/// Ring of H^0(X, L^n M) over the glued curve.
class NodalRing : public StrandSource {
 public:
  explicit NodalRing(std::shared_ptr<const NodalModel> model);

  const NodalModel& model() const { return *model_; }
  const GluedSpace& v_space() const;
  const GluedSpace& piece(int n) const;
  GradedStrand strand(int q) const override;
  nlohmann::json describe() const override { return model_->describe(); }

 private:
  std::shared_ptr<const NodalModel> model_;
  std::vector<std::unique_ptr<CurveRing>> rings_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<GluedSpace>> pieces_;
  mutable std::shared_ptr<GluedSpace> v_space_;
};

}  // namespace syz
