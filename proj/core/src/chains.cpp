#include "fpplab/chains.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fpplab::experiments {

using geom::Point2;

namespace {

// Bucket grid with cell side b: a radius-(<= b) query touches 3x3 cells.
class StepGrid {
 public:
  StepGrid(const geom::PointSet& ps, double cell) : ps_(ps), cell_(cell) {
    const geom::Window& w = ps.window;
    x0_ = w.center.x - w.half_width;
    y0_ = w.center.y - w.half_height;
    nx_ = std::max(1, static_cast<int>(std::ceil(2.0 * w.half_width / cell_)));
    ny_ = std::max(1, static_cast<int>(std::ceil(2.0 * w.half_height / cell_)));
    cells_.resize(static_cast<size_t>(nx_) * static_cast<size_t>(ny_));
    for (int i = 0; i < ps.size(); ++i) {
      cells_[cell_index(ps[i])].push_back(i);
    }
  }

  // Indices within distance d <= cell_ of q, ascending, excluding `skip`.
  void collect(Point2 q, double d, const std::vector<char>& skip,
               std::vector<int>& out) const {
    out.clear();
    double d2 = d * d;
    int cx = clamp_x(static_cast<int>(std::floor((q.x - x0_) / cell_)));
    int cy = clamp_y(static_cast<int>(std::floor((q.y - y0_) / cell_)));
    for (int gy = std::max(0, cy - 1); gy <= std::min(ny_ - 1, cy + 1); ++gy) {
      for (int gx = std::max(0, cx - 1); gx <= std::min(nx_ - 1, cx + 1); ++gx) {
        for (int i : cells_[static_cast<size_t>(gy) * nx_ + gx]) {
          if (!skip[static_cast<size_t>(i)] && geom::dist2(ps_[i], q) <= d2) {
            out.push_back(i);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
  }

 private:
  size_t cell_index(Point2 p) const {
    int cx = clamp_x(static_cast<int>(std::floor((p.x - x0_) / cell_)));
    int cy = clamp_y(static_cast<int>(std::floor((p.y - y0_) / cell_)));
    return static_cast<size_t>(cy) * nx_ + cx;
  }
  int clamp_x(int c) const { return std::clamp(c, 0, nx_ - 1); }
  int clamp_y(int c) const { return std::clamp(c, 0, ny_ - 1); }

  const geom::PointSet& ps_;
  double cell_;
  double x0_, y0_;
  int nx_, ny_;
  std::vector<std::vector<int>> cells_;
};

struct Search {
  const geom::PointSet& ps;
  const StepGrid& grid;
  std::vector<char> visited;
  int64_t budget;
  bool clipped = false;

  // Longest continuation from `cur` with next step at most `step`, counted
  // in additional points.
  int extend(int cur, double step) {
    std::vector<int> next;
    grid.collect(ps[cur], step, visited, next);
    int best = 0;
    for (int j : next) {
      if (--budget < 0) {
        clipped = true;
        break;
      }
      visited[static_cast<size_t>(j)] = 1;
      int len = 1 + extend(j, geom::dist(ps[cur], ps[j]));
      visited[static_cast<size_t>(j)] = 0;
      best = std::max(best, len);
    }
    return best;
  }
};

}  // namespace

ChainReport descending_chains(const geom::PointSet& ps, double b,
                              const geom::Window& start_region) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("descending_chains: b must be positive");
  }
  std::vector<int> starts;
  for (int i = 0; i < ps.size(); ++i) {
    if (start_region.contains(ps[i])) starts.push_back(i);
  }
  if (starts.empty()) {
    throw std::invalid_argument("descending_chains: no points in start region");
  }
  StepGrid grid(ps, b);
  Search search{ps, grid, std::vector<char>(ps.points.size(), 0),
                int64_t{10'000'000}, false};
  int best = 1;
  for (int s : starts) {
    search.visited[static_cast<size_t>(s)] = 1;
    best = std::max(best, 1 + search.extend(s, b));
    search.visited[static_cast<size_t>(s)] = 0;
  }
  ChainReport rep;
  rep.b = b;
  rep.max_chain_length = best;
  rep.start_region = start_region;
  rep.exact = !search.clipped;
  rep.starts = static_cast<int>(starts.size());
  return rep;
}

}  // namespace fpplab::experiments
