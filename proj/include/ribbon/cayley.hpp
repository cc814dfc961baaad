#pragma once

// Finite balls in Cayley graphs and Cayley 2-complexes.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/group.hpp"

namespace ribbon {

struct CayleyEdge {
  std::size_t source = 0;
  std::size_t generator = 0;
  std::size_t target = 0;

  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

/// A relator loop based at `base`; `cycle` lists the vertices visited, one
/// per relator letter, starting at the base.
struct CayleyCell {
  std::size_t base = 0;
  std::size_t relator = 0;
  std::vector<std::size_t> cycle;

  friend bool operator==(const CayleyCell&, const CayleyCell&) = default;
};

/// Cells are recorded once per (base vertex, relator) whose loop stays in
/// the ball, so one geometric disc shows up once for every corner inside.
struct CayleyBall {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  /// Shortest first-discovered representatives; vertices[0] is the identity.
  std::vector<GroupWord> vertices;
  /// Distance from the identity of each vertex.
  std::vector<std::size_t> depth;
  /// One edge u -> u*a for every generator a (inverse moves are the same
  /// edges read backwards).
  std::vector<CayleyEdge> edges;
  std::vector<CayleyCell> cells;
  std::size_t radius = 0;
};

namespace detail {

class ElementIndex {
 public:
  explicit ElementIndex(const WordSolver& solver) : solver_(solver) {}

  std::optional<std::size_t> find(const GroupWord& w, const std::vector<GroupWord>& vertices) const {
    auto it = buckets_.find(solver_.abelian_key(w));
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t idx : it->second) {
      if (solver_.equal(w, vertices[idx])) return idx;
    }
    return std::nullopt;
  }

  void add(const GroupWord& w, std::size_t idx) { buckets_[solver_.abelian_key(w)].push_back(idx); }

 private:
  const WordSolver& solver_;
  std::map<std::vector<long>, std::vector<std::size_t>> buckets_;
};

}  // namespace detail

/// Breadth-first ball of the given radius around the identity. A word joins
/// the ball when it differs in the group from every vertex found so far.
inline CayleyBall cayley_ball(const Presentation& pres, std::size_t radius) {
  const WordSolver solver(pres);
  detail::ElementIndex index(solver);
  CayleyBall ball;
  ball.generators = pres.generators;
  ball.radius = radius;
  for (const auto& r : pres.relators) {
    if (!cyclic_reduce(r).empty()) ball.relators.push_back(r);
  }
  ball.vertices.emplace_back();
  ball.depth.push_back(0);
  index.add(ball.vertices.front(), 0);

  const std::size_t rank = pres.generators.size();
  std::size_t layer_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t layer_end = ball.vertices.size();
    for (std::size_t u = layer_begin; u < layer_end; ++u) {
      for (std::size_t g = 0; g < rank; ++g) {
        for (bool inv : {false, true}) {
          GroupWord w = ball.vertices[u] * GroupWord{{make_letter(g, inv)}};
          if (index.find(w, ball.vertices)) continue;
          index.add(w, ball.vertices.size());
          ball.vertices.push_back(std::move(w));
          ball.depth.push_back(r);
        }
      }
    }
    layer_begin = layer_end;
  }

  for (std::size_t u = 0; u < ball.vertices.size(); ++u) {
    for (std::size_t g = 0; g < rank; ++g) {
      if (auto v = index.find(ball.vertices[u] * GroupWord{{make_letter(g)}}, ball.vertices)) {
        ball.edges.push_back({u, g, *v});
      }
    }
  }

  for (std::size_t u = 0; u < ball.vertices.size(); ++u) {
    for (std::size_t j = 0; j < ball.relators.size(); ++j) {
      CayleyCell cell{u, j, {u}};
      GroupWord at = ball.vertices[u];
      bool inside = true;
      const auto& rel = ball.relators[j].letters;
      for (std::size_t i = 0; i + 1 < rel.size() && inside; ++i) {
        at = at * GroupWord{{rel[i]}};
        auto v = index.find(at, ball.vertices);
        if (v) {
          cell.cycle.push_back(*v);
        } else {
          inside = false;
        }
      }
      if (inside) ball.cells.push_back(std::move(cell));
    }
  }
  return ball;
}

}  // namespace ribbon
