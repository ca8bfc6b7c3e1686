#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

// Orbit of a point under an abstract action, with an optional Schreier
// vector of (predecessor index, generator index) words.
template <class Point>
struct OrbitRecord {
  Point representative;
  u64 length = 0;
  std::vector<Point> points;            // discovery order; points[0] == representative
  std::vector<u32> prev;                // Schreier tree, indices into points
  std::vector<u32> via;                 // generator labels on tree edges
  bool with_tree = false;

  // Word of generator indices mapping the representative to points[i].
  std::vector<u32> word(size_t i) const {
    std::vector<u32> w;
    while (i != 0) {
      w.push_back(via[i]);
      i = prev[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

// Breadth-first closure of `start` under `num_gens` generators given by
// image(point, gen_index). Throws CapExceeded past `cap` points.
template <class Point, class Image, class Hash = std::hash<Point>>
OrbitRecord<Point> orbit_closure(const Point& start, size_t num_gens, Image&& image,
                                 u64 cap, bool with_tree = false) {
  OrbitRecord<Point> rec;
  rec.representative = start;
  rec.with_tree = with_tree;
  std::unordered_map<Point, u32, Hash> index;
  rec.points.push_back(start);
  index.emplace(start, 0);
  if (with_tree) {
    rec.prev.push_back(0);
    rec.via.push_back(0);
  }
  for (size_t head = 0; head < rec.points.size(); ++head) {
    for (size_t gi = 0; gi < num_gens; ++gi) {
      Point q = image(rec.points[head], gi);
      if (index.find(q) == index.end()) {
        if (rec.points.size() >= cap)
          throw CapExceeded("orbit size cap " + std::to_string(cap) + " exceeded");
        index.emplace(q, static_cast<u32>(rec.points.size()));
        rec.points.push_back(std::move(q));
        if (with_tree) {
          rec.prev.push_back(static_cast<u32>(head));
          rec.via.push_back(static_cast<u32>(gi));
        }
      }
    }
  }
  rec.length = rec.points.size();
  return rec;
}

}  // namespace cgt
