#ifndef SPLINEFAN_FAN_HPP
#define SPLINEFAN_FAN_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splinefan/matrix.hpp"

namespace splinefan {

// Validation failure for a fan; names the offending cones.
struct FanError {
  enum class Kind { NotPointed, BadIntersection, NotFullDim };
  Kind kind;
  int cone_a = -1;
  int cone_b = -1;
  std::string message() const;
};

// A rational polyhedral fan in Q^d, given by primitive integer ray vectors
// and maximal cones as ray-index sets. Rays and cones are canonically sorted
// on construction so that all derived data is independent of input order.
// The listed generators of every maximal cone must be exactly its extreme
// rays.
class Fan {
public:
  Fan(int dim, std::vector<RatVec> rays, std::vector<std::vector<int>> maximal_cones);

  int dim() const { return dim_; }
  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& maximal_cones() const { return maximal_cones_; }

  // Index of the canonicalized position of an input ray (by vector value).
  int ray_index(const RatVec& primitive_ray) const;

private:
  int dim_;
  std::vector<RatVec> rays_;
  std::vector<std::vector<int>> maximal_cones_;
};

struct Face {
  int id = -1;
  std::vector<int> ray_indices;  // sorted global ray indices
  int dim = 0;
  std::vector<RatVec> span_basis;   // basis of the linear span
  std::vector<RatVec> orientation;  // ordered basis fixing the orientation
  bool interior = false;
  std::vector<int> adjacent_maximal;  // for (d-1)-faces: containing maximal cones
};

// All faces of all maximal cones of a fan, with incidence data.
class FaceLattice {
public:
  explicit FaceLattice(const Fan& fan);

  const Fan& fan() const { return fan_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  const std::vector<int>& faces_of_dim(int dim) const { return by_dim_[dim]; }
  std::vector<int> interior_faces_of_dim(int dim) const;

  // Face ids of the maximal cones, aligned with Fan::maximal_cones order.
  const std::vector<int>& maximal_face_ids() const { return maximal_face_ids_; }

  bool contains(int outer_id, int inner_id) const;  // inner is a face of outer
  std::vector<int> facets_of(int face_id) const;    // one dimension down

  // 0 unless beta is a facet of alpha; otherwise the sign comparing
  // orientation(beta) extended by an inward vector of alpha against
  // orientation(alpha).
  int incidence_sign(int alpha_id, int beta_id) const;

  // Primitive integer linear form vanishing on a (d-1)-face, positive on the
  // first adjacent maximal cone in canonical order.
  RatVec wall_form(int wall_id) const;

  // (f01, ..., f0_{d-1}, f_d)
  std::vector<long> interior_f_vector() const;

private:
  Fan fan_;  // stored by value so a lattice never outlives its fan
  std::vector<Face> faces_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> maximal_face_ids_;

  void classify_interior();
};

// Confirms the Fan invariants: full-dimensional pointed maximal cones that
// pairwise intersect in common faces.
std::optional<FanError> validate(const Fan& fan);

// True iff the dual graph of the star of every nonempty face (the origin
// included: the whole fan's dual graph) is connected.
bool hereditary_check(const Fan& fan, const FaceLattice& lattice);

// Facet inequality description of a single pointed full-dimensional cone
// (brute-force supporting-hyperplane enumeration).
std::vector<RatVec> cone_facet_normals(const std::vector<RatVec>& rays, int dim);

}  // namespace splinefan

#endif
