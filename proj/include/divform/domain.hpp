#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

namespace divform {

enum class DomainKind { box, arc };

/// Geometry request: an axis-aligned box in 1 or 2 dimensions, or a circular
/// arc of radius `radius` spanning `angle_span` radians. Arcs are intrinsically
/// one-dimensional; their operator domain is the arclength interval
/// (0, radius * angle_span).
struct DomainSpec {
  DomainKind kind = DomainKind::box;
  int dimension = 1;  // box only; arcs are always 1-D
  std::array<double, 2> lengths{1.0, 1.0};
  double radius = 1.0;       // arc only
  double angle_span = 3.141592653589793;  // arc only, in (0, 2*pi)
  int resolution = 16;       // cells per axis

  /// Config-level validation (resolution >= 8, positive sizes). Throws
  /// std::invalid_argument. build_domain itself accepts any resolution >= 2
  /// so that coarse closed-form cases remain constructible in tests.
  void validate() const;
};

/// Uniform structured grid with the full outer node layer marked as boundary
/// (corners included). Immutable after construction.
class DiscreteDomain {
 public:
  DiscreteDomain(const DomainSpec& spec);

  DomainKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int cells() const { return cells_; }
  int nodes_per_axis() const { return cells_ + 1; }
  int num_nodes() const { return num_nodes_; }
  int num_interior() const { return static_cast<int>(interior_nodes_.size()); }
  double length(int axis) const { return lengths_[axis]; }
  double spacing(int axis) const { return spacing_[axis]; }
  double radius() const { return radius_; }
  double cell_volume() const { return cell_volume_; }

  int node_index(int ix, int iy = 0) const {
    return ix + iy * nodes_per_axis();
  }
  int axis_index(int node, int axis) const {
    return axis == 0 ? node % nodes_per_axis() : node / nodes_per_axis();
  }
  double coord(int node, int axis) const {
    return axis_index(node, axis) * spacing_[axis];
  }
  bool is_boundary(int node) const { return interior_map_[node] < 0; }
  /// Index into the interior ordering, or -1 for boundary nodes.
  int interior_index(int node) const { return interior_map_[node]; }
  const std::vector<int>& interior_nodes() const { return interior_nodes_; }

 private:
  DomainKind kind_;
  int dim_;
  int cells_;
  int num_nodes_;
  std::array<double, 2> lengths_;
  std::array<double, 2> spacing_;
  double radius_;
  double cell_volume_;
  std::vector<int> interior_map_;
  std::vector<int> interior_nodes_;
};

/// Builds the grid for a spec. Throws std::invalid_argument on nonpositive
/// sizes, resolution < 2, or an angle span outside (0, 2*pi).
DiscreteDomain build_domain(const DomainSpec& spec);

}  // namespace divform
