#pragma once

// Faces, Euler characteristic and genus of the closed oriented surface a
// ribbon map fills, plus the petal family of one-vertex one-face maps.

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/error.hpp"
#include "ribbon/map.hpp"

namespace ribbon {

/// One boundary cycle; the successor of dart e is sigma(reverse(e)).
/// Stored starting from the face's smallest dart.
struct Face {
  std::vector<Dart> darts;

  friend bool operator==(const Face&, const Face&) = default;
};

inline Dart face_successor(const RibbonMap& map, Dart d) { return map.sigma(reverse(d)); }

/// Orbits of the face-successor permutation, ordered by smallest dart.
inline std::vector<Face> trace_faces(const RibbonMap& map) {
  if (map.num_edges() == 0) throw Error(ErrorCode::empty_map, "an edgeless map has no traced faces");
  const std::size_t n = map.num_darts();
  std::vector<bool> done(n, false);
  std::vector<Face> faces;
  for (Dart d = 0; d < n; ++d) {
    if (done[d]) continue;
    auto& f = faces.emplace_back();
    Dart x = d;
    do {
      done[x] = true;
      f.darts.push_back(x);
      x = face_successor(map, x);
    } while (x != d);
  }
  return faces;
}

/// Face count with the sphere convention F = 1 for the edgeless map.
inline std::size_t face_count(const RibbonMap& map) {
  return map.num_edges() == 0 ? 1 : trace_faces(map).size();
}

/// Face index of every dart.
inline std::vector<std::size_t> face_of_darts(const RibbonMap& map) {
  std::vector<std::size_t> out(map.num_darts());
  if (map.num_edges() == 0) return out;
  auto faces = trace_faces(map);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (Dart d : faces[f].darts) out[d] = f;
  }
  return out;
}

inline long euler_characteristic(const RibbonMap& map) {
  return static_cast<long>(map.num_vertices()) - static_cast<long>(map.num_edges()) +
         static_cast<long>(face_count(map));
}

inline std::size_t genus(const RibbonMap& map) {
  const long chi = euler_characteristic(map);
  if (chi % 2 != 0 || chi > 2) {
    throw Error(ErrorCode::internal_invariant_violation, "Euler characteristic " + std::to_string(chi));
  }
  return static_cast<std::size_t>((2 - chi) / 2);
}

inline std::vector<DartRef> face_word(const RibbonMap& map, const Face& face) {
  std::vector<DartRef> out;
  out.reserve(face.darts.size());
  for (Dart d : face.darts) out.push_back(map.dart_ref(d));
  return out;
}

struct SurfaceReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long chi = 0;
  std::size_t genus = 0;
  std::vector<std::vector<DartRef>> face_words;
};

inline SurfaceReport surface_report(const RibbonMap& map) {
  SurfaceReport r;
  r.vertices = map.num_vertices();
  r.edges = map.num_edges();
  if (map.num_edges() == 0) {
    r.faces = 1;
    r.face_words.emplace_back();
  } else {
    for (const auto& f : trace_faces(map)) r.face_words.push_back(face_word(map, f));
    r.faces = r.face_words.size();
  }
  r.chi = static_cast<long>(r.vertices) - static_cast<long>(r.edges) + static_cast<long>(r.faces);
  r.genus = genus(map);
  return r;
}

/// Generator names a_1, b_1, ..., a_g, b_g of the genus-g surface. Single
/// letters (a, b, c, d, ...) while they last, a1, b1, ... beyond genus 13.
inline std::vector<std::string> surface_labels(std::size_t g) {
  std::vector<std::string> out;
  out.reserve(2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    if (2 * g <= 26) {
      out.emplace_back(1, static_cast<char>('a' + 2 * i));
      out.emplace_back(1, static_cast<char>('a' + 2 * i + 1));
    } else {
      out.push_back("a" + std::to_string(i + 1));
      out.push_back("b" + std::to_string(i + 1));
    }
  }
  return out;
}

/// One vertex with g pairs of loops. The per-pair rotation block
/// (a, b-, a-, b) makes the single face read a b A B c d C D ...
inline RibbonMap petal(std::size_t g) {
  if (g == 0) return RibbonMap::sphere();
  std::vector<Dart> star;
  star.reserve(4 * g);
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t a = 2 * i;
    const std::size_t b = 2 * i + 1;
    star.insert(star.end(), {forward_dart(a), backward_dart(b), backward_dart(a), forward_dart(b)});
  }
  return RibbonMap::from_stars(surface_labels(g), {star});
}

}  // namespace ribbon
