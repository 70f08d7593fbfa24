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

#include "geometry.hpp"

#include <algorithm>

namespace morrt {

namespace {

bool point_in_rect(Point2 p, const Region& r) {
  return r.min.x <= p.x && p.x <= r.max.x && r.min.y <= p.y && p.y <= r.max.y;
}

bool point_in_disk(Point2 p, const Region& r) {
  return squared_distance(p, r.center) <= r.radius * r.radius;
}

// Liang-Barsky clip of the closed segment against the closed box. The
// parametric overlap [t0,t1] is nonempty iff segment and box intersect.
bool segment_hits_rect(Point2 a, Point2 b, const Region& r) {
  const double d[2] = {b.x - a.x, b.y - a.y};
  const double p0[2] = {a.x, a.y};
  const double lo[2] = {r.min.x, r.min.y};
  const double hi[2] = {r.max.x, r.max.y};
  double t0 = 0.0;
  double t1 = 1.0;
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (p0[axis] < lo[axis] || p0[axis] > hi[axis]) return false;
    } else {
      double ta = (lo[axis] - p0[axis]) / d[axis];
      double tb = (hi[axis] - p0[axis]) / d[axis];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1) return false;
    }
  }
  return true;
}

bool segment_hits_disk(Point2 a, Point2 b, const Region& r) {
  const Point2 ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = 0.0;
  if (len2 > 0.0) {
    const Point2 ac = r.center - a;
    t = std::clamp((ac.x * ab.x + ac.y * ab.y) / len2, 0.0, 1.0);
  }
  const Point2 closest = a + t * ab;
  return squared_distance(closest, r.center) <= r.radius * r.radius;
}

double clamp_to_rect_distance2(Point2 p, const Region& rect) {
  const double cx = std::clamp(p.x, rect.min.x, rect.max.x);
  const double cy = std::clamp(p.y, rect.min.y, rect.max.y);
  return squared_distance(p, {cx, cy});
}

} // namespace

bool point_in_region(Point2 p, const Region& r) {
  return r.kind == Region::Kind::rect ? point_in_rect(p, r) : point_in_disk(p, r);
}

bool segment_collides(Point2 a, Point2 b, std::span<const Region> obstacles) {
  for (const Region& r : obstacles) {
    const bool hit =
        r.kind == Region::Kind::rect ? segment_hits_rect(a, b, r) : segment_hits_disk(a, b, r);
    if (hit) return true;
  }
  return false;
}

bool regions_intersect(const Region& a, const Region& b) {
  using K = Region::Kind;
  if (a.kind == K::rect && b.kind == K::rect) {
    return a.min.x <= b.max.x && b.min.x <= a.max.x && a.min.y <= b.max.y && b.min.y <= a.max.y;
  }
  if (a.kind == K::disk && b.kind == K::disk) {
    const double rsum = a.radius + b.radius;
    return squared_distance(a.center, b.center) <= rsum * rsum;
  }
  const Region& disk = a.kind == K::disk ? a : b;
  const Region& rect = a.kind == K::rect ? a : b;
  return clamp_to_rect_distance2(disk.center, rect) <= disk.radius * disk.radius;
}

Point2 steer(Point2 from, Point2 toward, double step) {
  const double d = distance(from, toward);
  if (d <= step) return toward;
  const double s = step / d;
  return {from.x + s * (toward.x - from.x), from.y + s * (toward.y - from.y)};
}

} // namespace morrt
