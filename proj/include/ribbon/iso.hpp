#pragma once

// Isomorphism of ribbon maps: dart bijections commuting with the rotation
// and with edge reversal. Only orientation-preserving isomorphisms count; a
// map and its mirror image (all rotations reversed) generally compare as
// different.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "ribbon/error.hpp"
#include "ribbon/map.hpp"

namespace ribbon {

struct DartBijection {
  /// mapping[d] is the image in the second map of dart d of the first.
  std::vector<Dart> mapping;
};

namespace detail {

/// Relabels darts in breadth-first order from `root`, following sigma then
/// reversal. Returns the order in which darts were reached.
inline std::vector<Dart> bfs_order(const RibbonMap& map, Dart root) {
  const std::size_t n = map.num_darts();
  std::vector<bool> seen(n, false);
  std::vector<Dart> order;
  order.reserve(n);
  order.push_back(root);
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Dart d = order[head];
    for (Dart next : {map.sigma(d), reverse(d)}) {
      if (!seen[next]) {
        seen[next] = true;
        order.push_back(next);
      }
    }
  }
  return order;
}

inline std::vector<std::uint32_t> rooted_code(const RibbonMap& map, Dart root) {
  const auto order = bfs_order(map, root);
  std::vector<std::uint32_t> rank(map.num_darts());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> code;
  code.reserve(2 * order.size());
  for (Dart d : order) {
    code.push_back(rank[map.sigma(d)]);
    code.push_back(rank[reverse(d)]);
  }
  return code;
}

}  // namespace detail

/// Minimum over all root darts of the rooted breadth-first code, as
/// little-endian 32-bit words prefixed by the edge count. Two maps are
/// isomorphic exactly when their encodings are equal.
inline std::vector<std::uint8_t> canonical_encoding(const RibbonMap& map) {
  if (map.num_edges() == 0) throw Error(ErrorCode::empty_map, "no darts to encode");
  std::vector<std::uint32_t> best;
  for (Dart root = 0; root < map.num_darts(); ++root) {
    auto code = detail::rooted_code(map, root);
    if (best.empty() || code < best) best = std::move(code);
  }
  std::vector<std::uint8_t> bytes;
  auto put = [&bytes](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  };
  put(static_cast<std::uint32_t>(map.num_edges()));
  for (auto x : best) put(x);
  return bytes;
}

inline bool verify_bijection(const RibbonMap& a, const RibbonMap& b, const DartBijection& beta) {
  if (a.num_darts() != b.num_darts() || beta.mapping.size() != a.num_darts()) return false;
  std::vector<bool> hit(b.num_darts(), false);
  for (Dart d = 0; d < a.num_darts(); ++d) {
    const Dart img = beta.mapping[d];
    if (img >= b.num_darts() || hit[img]) return false;
    hit[img] = true;
  }
  for (Dart d = 0; d < a.num_darts(); ++d) {
    if (beta.mapping[a.sigma(d)] != b.sigma(beta.mapping[d])) return false;
    if (beta.mapping[reverse(d)] != reverse(beta.mapping[d])) return false;
  }
  return true;
}

/// A dart bijection commuting with sigma and reversal, if one exists.
inline std::optional<DartBijection> are_isomorphic(const RibbonMap& a, const RibbonMap& b) {
  if (a.num_edges() != b.num_edges() || a.num_vertices() != b.num_vertices()) return std::nullopt;
  if (a.num_edges() == 0) return DartBijection{};
  const std::size_t n = a.num_darts();
  const auto order = detail::bfs_order(a, 0);
  for (Dart root = 0; root < n; ++root) {
    std::vector<Dart> map(n, n);
    map[0] = root;
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      const Dart d = order[i];
      const Dart image = map[d];
      const std::pair<Dart, Dart> steps[] = {{a.sigma(d), b.sigma(image)}, {reverse(d), reverse(image)}};
      for (auto [from, to] : steps) {
        if (map[from] == n) {
          map[from] = to;
        } else if (map[from] != to) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    DartBijection beta{std::move(map)};
    if (verify_bijection(a, b, beta)) return beta;
  }
  return std::nullopt;
}

}  // namespace ribbon
