#include "hardylab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardylab {

double Mesh1D::min_cell_width() const {
  double w = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) w = std::min(w, nodes[i + 1] - nodes[i]);
  return w;
}

Mesh1D build_mesh(double R, int cells, double grading_origin, double grading_boundary) {
  if (!(R > 0.0)) throw std::invalid_argument("build_mesh: R must be positive");
  if (cells % 2 != 0) throw std::invalid_argument("build_mesh: cells must be even");
  if (cells < 16) throw std::invalid_argument("build_mesh: cells must be >= 16");
  if (grading_origin < 1.0 || grading_boundary < 1.0)
    throw std::invalid_argument("build_mesh: gradings must be >= 1");

  // Composite map on [0,1]: clustering exponent grading_origin at 0 and
  // grading_boundary at 1, continuous at the midpoint.
  const int K = cells / 2;
  std::vector<double> pos(K + 1);
  for (int k = 0; k <= K; ++k) {
    const double xi = static_cast<double>(k) / K;
    double x;
    if (xi <= 0.5)
      x = 0.5 * std::pow(2.0 * xi, grading_origin);
    else
      x = 1.0 - 0.5 * std::pow(2.0 * (1.0 - xi), grading_boundary);
    pos[k] = R * x;
  }
  pos[0] = 0.0;
  pos[K] = R;

  Mesh1D mesh;
  mesh.R = R;
  mesh.grading_origin = grading_origin;
  mesh.grading_boundary = grading_boundary;
  mesh.nodes.resize(2 * K + 1);
  for (int k = 0; k <= K; ++k) {
    mesh.nodes[K + k] = pos[k];
    mesh.nodes[K - k] = -pos[k];
  }
  for (std::size_t i = 0; i + 1 < mesh.nodes.size(); ++i)
    if (!(mesh.nodes[i + 1] > mesh.nodes[i]))
      throw std::runtime_error("build_mesh: grading collapsed adjacent nodes; reduce grading");
  return mesh;
}

MeshPtr make_mesh(double R, int cells, double grading_origin, double grading_boundary) {
  return std::make_shared<const Mesh1D>(build_mesh(R, cells, grading_origin, grading_boundary));
}

GridFunction::GridFunction(MeshPtr m, double fill) : mesh(std::move(m)) {
  values.assign(mesh->node_count(), fill);
  enforce_boundary();
}

double GridFunction::min_interior() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < values.size(); ++i) m = std::min(m, values[i]);
  return m;
}

double GridFunction::max_interior() const {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < values.size(); ++i) m = std::max(m, values[i]);
  return m;
}

double GridFunction::min_on(double lo, double hi) const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (mesh->nodes[i] >= lo && mesh->nodes[i] <= hi) m = std::min(m, values[i]);
  return m;
}

}  // namespace hardylab
