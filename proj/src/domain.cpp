#include "divform/domain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace divform {

namespace {

void check_geometry(const DomainSpec& spec, int min_resolution) {
  if (spec.resolution < min_resolution) {
    throw std::invalid_argument("domain: resolution " +
                                std::to_string(spec.resolution) +
                                " below minimum " +
                                std::to_string(min_resolution));
  }
  if (spec.kind == DomainKind::box) {
    if (spec.dimension < 1 || spec.dimension > 2) {
      throw std::invalid_argument("domain: box dimension must be 1 or 2");
    }
    for (int a = 0; a < spec.dimension; ++a) {
      if (!(spec.lengths[a] > 0.0)) {
        throw std::invalid_argument("domain: nonpositive side length");
      }
    }
  } else {
    if (!(spec.radius > 0.0)) {
      throw std::invalid_argument("domain: nonpositive arc radius");
    }
    if (!(spec.angle_span > 0.0) ||
        !(spec.angle_span < 2.0 * std::numbers::pi)) {
      throw std::invalid_argument("domain: arc span must lie in (0, 2*pi)");
    }
  }
}

}  // namespace

void DomainSpec::validate() const { check_geometry(*this, 8); }

DiscreteDomain::DiscreteDomain(const DomainSpec& spec) {
  check_geometry(spec, 2);
  kind_ = spec.kind;
  cells_ = spec.resolution;
  radius_ = spec.kind == DomainKind::arc ? spec.radius : 0.0;
  if (spec.kind == DomainKind::arc) {
    dim_ = 1;
    lengths_ = {spec.radius * spec.angle_span, 0.0};
  } else {
    dim_ = spec.dimension;
    lengths_ = spec.lengths;
  }
  spacing_ = {0.0, 0.0};
  cell_volume_ = 1.0;
  for (int a = 0; a < dim_; ++a) {
    spacing_[a] = lengths_[a] / cells_;
    cell_volume_ *= spacing_[a];
  }

  const int per_axis = cells_ + 1;
  num_nodes_ = per_axis;
  if (dim_ == 2) num_nodes_ *= per_axis;

  interior_map_.assign(num_nodes_, -1);
  for (int node = 0; node < num_nodes_; ++node) {
    bool interior = true;
    for (int a = 0; a < dim_; ++a) {
      const int idx = axis_index(node, a);
      if (idx == 0 || idx == cells_) interior = false;
    }
    if (interior) {
      interior_map_[node] = static_cast<int>(interior_nodes_.size());
      interior_nodes_.push_back(node);
    }
  }
}

DiscreteDomain build_domain(const DomainSpec& spec) {
  return DiscreteDomain(spec);
}

}  // namespace divform
