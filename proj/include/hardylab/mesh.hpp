#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace hardylab {

/// Graded partition of (-R, R), symmetric about 0, with 0 always a node.
/// Power-law clustering toward the origin (grading_origin) and toward the
/// boundary (grading_boundary); both exponents >= 1, 1 meaning uniform.
struct Mesh1D {
  double R = 1.0;
  double grading_origin = 1.0;
  double grading_boundary = 1.0;
  std::vector<double> nodes;  // strictly increasing, nodes.front() = -R, back() = R

  std::size_t node_count() const { return nodes.size(); }
  std::size_t cell_count() const { return nodes.size() - 1; }
  std::size_t interior_count() const { return nodes.size() - 2; }
  std::size_t zero_index() const { return (nodes.size() - 1) / 2; }
  double min_cell_width() const;
  /// distance to the boundary, delta(x) = R - |x|
  double boundary_distance(double x) const { return R - std::abs(x); }
};

using MeshPtr = std::shared_ptr<const Mesh1D>;

Mesh1D build_mesh(double R, int cells, double grading_origin, double grading_boundary);
MeshPtr make_mesh(double R, int cells, double grading_origin, double grading_boundary);

/// Nodal values on a mesh with zero extension outside (-R, R): the first and
/// last values are pinned to 0.
struct GridFunction {
  MeshPtr mesh;
  std::vector<double> values;

  GridFunction() = default;
  explicit GridFunction(MeshPtr m, double fill = 0.0);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  void enforce_boundary() {
    if (!values.empty()) {
      values.front() = 0.0;
      values.back() = 0.0;
    }
  }
  double min_interior() const;
  double max_interior() const;
  /// min over nodes with lo <= x <= hi
  double min_on(double lo, double hi) const;
};

/// Sample a callable at the nodes, boundary pinned to zero.
template <typename F>
GridFunction sample(MeshPtr mesh, F&& f) {
  GridFunction g(mesh);
  for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] = f(mesh->nodes[i]);
  g.enforce_boundary();
  return g;
}

}  // namespace hardylab
