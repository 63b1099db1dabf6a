#include "fpplab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "fpplab/io.hpp"

namespace fpplab::render {

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

SvgScene::SvgScene(geom::Window world, double width_px) : world_(world) {
  if (!(world.half_width > 0.0) || !(world.half_height > 0.0))
    throw std::invalid_argument("svg: window must have positive extent");
  if (!(width_px > 0.0)) throw std::invalid_argument("svg: width must be positive");
  scale_ = width_px / (2.0 * world.half_width);
  width_px_ = width_px;
  height_px_ = 2.0 * world.half_height * scale_;

  std::string frame;
  frame += "<rect x=\"0\" y=\"0\" width=\"" + px(width_px_) + "\" height=\"" +
           px(height_px_) +
           "\" fill=\"white\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  // Coordinate axes, where they cross the window.
  double xmin = world.center.x - world.half_width;
  double xmax = world.center.x + world.half_width;
  double ymin = world.center.y - world.half_height;
  double ymax = world.center.y + world.half_height;
  if (xmin < 0.0 && 0.0 < xmax) {
    geom::Point2 a = to_px({0.0, ymin});
    geom::Point2 b = to_px({0.0, ymax});
    frame += "<line x1=\"" + px(a.x) + "\" y1=\"" + px(a.y) + "\" x2=\"" +
             px(b.x) + "\" y2=\"" + px(b.y) +
             "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  if (ymin < 0.0 && 0.0 < ymax) {
    geom::Point2 a = to_px({xmin, 0.0});
    geom::Point2 b = to_px({xmax, 0.0});
    frame += "<line x1=\"" + px(a.x) + "\" y1=\"" + px(a.y) + "\" x2=\"" +
             px(b.x) + "\" y2=\"" + px(b.y) +
             "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  layers_.push_back(frame);
}

geom::Point2 SvgScene::to_px(geom::Point2 world) const {
  double xmin = world_.center.x - world_.half_width;
  double ymax = world_.center.y + world_.half_height;
  return {(world.x - xmin) * scale_, (ymax - world.y) * scale_};
}

void SvgScene::add_points(const geom::PointSet& ps, double radius_px,
                          const std::string& color) {
  std::string g = "<g fill=\"" + color + "\">\n";
  for (const auto& p : ps.points) {
    geom::Point2 q = to_px(p);
    g += "<circle cx=\"" + px(q.x) + "\" cy=\"" + px(q.y) + "\" r=\"" +
         px(radius_px) + "\"/>\n";
  }
  g += "</g>\n";
  layers_.push_back(g);
}

void SvgScene::add_edges(const geom::PointSet& ps,
                         const std::vector<graphs::Edge>& edges,
                         double stroke_px, const std::string& color) {
  std::string g = "<g stroke=\"" + color + "\" stroke-width=\"" +
                  px(stroke_px) + "\">\n";
  for (const auto& e : edges) {
    geom::Point2 a = to_px(ps.points[e.i]);
    geom::Point2 b = to_px(ps.points[e.j]);
    g += "<line x1=\"" + px(a.x) + "\" y1=\"" + px(a.y) + "\" x2=\"" +
         px(b.x) + "\" y2=\"" + px(b.y) + "\"/>\n";
  }
  g += "</g>\n";
  layers_.push_back(g);
}

void SvgScene::add_links(const geom::PointSet& ps, const std::vector<int>& link,
                         double stroke_px, const std::string& color) {
  std::string g = "<g stroke=\"" + color + "\" stroke-width=\"" +
                  px(stroke_px) + "\">\n";
  for (int v = 0; v < (int)link.size(); ++v) {
    if (link[v] < 0) continue;
    geom::Point2 a = to_px(ps.points[v]);
    geom::Point2 b = to_px(ps.points[link[v]]);
    g += "<line x1=\"" + px(a.x) + "\" y1=\"" + px(a.y) + "\" x2=\"" +
         px(b.x) + "\" y2=\"" + px(b.y) + "\"/>\n";
  }
  g += "</g>\n";
  layers_.push_back(g);
}

void SvgScene::add_path(const geom::PointSet& ps,
                        const std::vector<int>& vertices, double stroke_px,
                        const std::string& color) {
  if (vertices.empty()) return;
  std::string d;
  for (size_t k = 0; k < vertices.size(); ++k) {
    geom::Point2 q = to_px(ps.points[vertices[k]]);
    d += (k == 0 ? "M" : " L");
    d += px(q.x) + " " + px(q.y);
  }
  layers_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
                    "\" stroke-width=\"" + px(stroke_px) + "\"/>\n");
}

void SvgScene::add_circle(geom::Point2 center, double radius, double stroke_px,
                          const std::string& color) {
  geom::Point2 c = to_px(center);
  layers_.push_back("<circle cx=\"" + px(c.x) + "\" cy=\"" + px(c.y) +
                    "\" r=\"" + px(radius * scale_) +
                    "\" fill=\"none\" stroke=\"" + color +
                    "\" stroke-width=\"" + px(stroke_px) + "\"/>\n");
}

void SvgScene::add_arc(geom::Point2 center, double radius, double theta0,
                       double theta1, double stroke_px,
                       const std::string& color) {
  double span = theta1 - theta0;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  span -= two_pi * std::floor(span / two_pi);
  if (span < 1e-12 || span > two_pi - 1e-9) {
    add_circle(center, radius, stroke_px, color);
    return;
  }
  geom::Point2 a = to_px({center.x + radius * std::cos(theta0),
                          center.y + radius * std::sin(theta0)});
  geom::Point2 b = to_px({center.x + radius * std::cos(theta0 + span),
                          center.y + radius * std::sin(theta0 + span)});
  // World counterclockwise runs clockwise on screen (y is flipped): sweep 0.
  std::string d = "M" + px(a.x) + " " + px(a.y) + " A" + px(radius * scale_) +
                  " " + px(radius * scale_) + " 0 " +
                  (span > std::numbers::pi ? "1" : "0") + " 0 " + px(b.x) +
                  " " + px(b.y);
  layers_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
                    "\" stroke-width=\"" + px(stroke_px) + "\"/>\n");
}

void SvgScene::add_vertical_line(double x, double stroke_px,
                                 const std::string& color) {
  geom::Point2 a = to_px({x, world_.center.y - world_.half_height});
  geom::Point2 b = to_px({x, world_.center.y + world_.half_height});
  layers_.push_back("<line x1=\"" + px(a.x) + "\" y1=\"" + px(a.y) +
                    "\" x2=\"" + px(b.x) + "\" y2=\"" + px(b.y) +
                    "\" stroke=\"" + color + "\" stroke-width=\"" +
                    px(stroke_px) + "\" stroke-dasharray=\"6 4\"/>\n");
}

std::string SvgScene::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    px(width_px_) + "\" height=\"" + px(height_px_) +
                    "\" viewBox=\"0 0 " + px(width_px_) + " " + px(height_px_) +
                    "\">\n";
  for (const auto& layer : layers_) out += layer;
  out += "</svg>\n";
  return out;
}

void write_svg(const std::string& path, const SvgScene& scene) {
  io::write_text_file(path, scene.str());
}

}  // namespace fpplab::render
