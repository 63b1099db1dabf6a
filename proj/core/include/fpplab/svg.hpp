#pragma once

#include <string>
#include <vector>

#include "fpplab/proximity_graph.hpp"

namespace fpplab::render {

// Accumulates drawing layers over a world-coordinate window and emits a
// standalone SVG. Output is deterministic: same calls, same bytes. The frame
// and, when they cross the window, the coordinate axes are always drawn.
class SvgScene {
 public:
  explicit SvgScene(geom::Window world, double width_px = 800.0);

  void add_points(const geom::PointSet& ps, double radius_px = 1.5,
                  const std::string& color = "#444444");
  void add_edges(const geom::PointSet& ps,
                 const std::vector<graphs::Edge>& edges, double stroke_px = 0.6,
                 const std::string& color = "#9bb7d4");
  // One segment per vertex with a non-negative parent/successor entry.
  void add_links(const geom::PointSet& ps, const std::vector<int>& link,
                 double stroke_px = 0.8, const std::string& color = "#5c8a64");
  void add_path(const geom::PointSet& ps, const std::vector<int>& vertices,
                double stroke_px = 1.8, const std::string& color = "#d1495b");
  void add_circle(geom::Point2 center, double radius, double stroke_px = 1.0,
                  const std::string& color = "#b08f26");
  // Counterclockwise from theta0 to theta1 (radians, world frame).
  void add_arc(geom::Point2 center, double radius, double theta0, double theta1,
               double stroke_px = 2.0, const std::string& color = "#b0262f");
  void add_vertical_line(double x, double stroke_px = 1.2,
                         const std::string& color = "#7a4fa3");

  std::string str() const;

 private:
  geom::Point2 to_px(geom::Point2 world) const;

  geom::Window world_;
  double scale_;
  double width_px_, height_px_;
  std::vector<std::string> layers_;
};

void write_svg(const std::string& path, const SvgScene& scene);

}  // namespace fpplab::render
