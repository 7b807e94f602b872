#pragma once

// SVG drawings of Delta P with additive faces, limit cones and n_F shading.

#include <string>
#include <vector>

#include "cgf/additivity.hpp"

namespace cgf {

struct DiagramOptions {
  bool show_additive = true;
  bool show_limit_cones = true;
  bool color_by_nf = false;
  int size = 640;
  std::string note;
};

/// A vertex where Delta pi_F vanishes on a face that is limit-additive only,
/// with the direction from the vertex into the face.
struct LimitCone {
  std::size_t face;
  Point2 vertex;
  double dx;
  double dy;
};

std::vector<LimitCone> limit_cones(const AdditivityReport& report);

std::string render_svg(const PwlFunction& pi, const AdditivityReport& report,
                       const DiagramOptions& opts = {});
/// Exact sidecar: the additivity report plus the limit cones.
std::string render_json(const PwlFunction& pi, const AdditivityReport& report);

}  // namespace cgf
