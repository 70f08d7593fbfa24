// Copyright 2026 The morrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORRT_GEOMETRY_HPP_
#define MORRT_GEOMETRY_HPP_

#include <cmath>
#include <span>
#include <vector>

namespace morrt {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double squared_distance(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}
inline double distance(Point2 a, Point2 b) { return std::sqrt(squared_distance(a, b)); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Closed axis-aligned rectangle or closed disk. Points exactly on the
/// boundary are inside.
struct Region {
  enum class Kind { rect, disk };

  Kind kind = Kind::rect;
  Point2 min;    // rect
  Point2 max;    // rect
  Point2 center; // disk
  double radius = 0.0;

  static Region make_rect(Point2 min_corner, Point2 max_corner) {
    Region r;
    r.kind = Kind::rect;
    r.min = min_corner;
    r.max = max_corner;
    return r;
  }
  static Region make_disk(Point2 center, double radius) {
    Region r;
    r.kind = Kind::disk;
    r.center = center;
    r.radius = radius;
    return r;
  }
};

/// Per-agent world: sampling bounds plus that agent's obstacles.
struct Workspace {
  Region bounds; // always Kind::rect
  std::vector<Region> obstacles;
};

bool point_in_region(Point2 p, const Region& r);

/// True iff the closed segment [a,b] intersects any obstacle. Exact
/// segment-rectangle (Liang-Barsky clip) and segment-disk tests, no sampling.
bool segment_collides(Point2 a, Point2 b, std::span<const Region> obstacles);

/// True iff the two closed regions share at least one point.
bool regions_intersect(const Region& a, const Region& b);

/// Point at distance min(step, |toward-from|) from `from` on the segment
/// toward `toward`. Returns `toward` exactly when it is within one step;
/// returns `from` when the two coincide (degenerate, caller discards).
Point2 steer(Point2 from, Point2 toward, double step);

} // namespace morrt

#endif // MORRT_GEOMETRY_HPP_
