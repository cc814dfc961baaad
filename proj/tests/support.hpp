#pragma once

// Fixtures and independent oracles shared by the unit and acceptance suites.
// The oracles deliberately avoid the library's own algorithms: they work on
// raw permutation arrays, polygon corners and coordinate enumerations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/ribbon.hpp"

namespace ribbon::testing {

// ---------------------------------------------------------------- fixtures

/// Two vertices joined by three edges, drawn in the plane.
inline RibbonMap theta() { return from_rotation_lists({"a", "b", "c"}, {{"a+", "b+", "c+"}, {"a-", "c-", "b-"}}); }

/// Two loops at one vertex that do not cross (a sphere, three faces).
inline RibbonMap wedge_split() { return from_rotation_lists({"a", "b"}, {{"a+", "a-", "b+", "b-"}}); }

/// Two loops at one vertex that cross (a torus, one face).
inline RibbonMap wedge_linked() { return from_rotation_lists({"a", "b"}, {{"a+", "b+", "a-", "b-"}}); }

inline RibbonMap single_loop() { return from_rotation_lists({"a"}, {{"a+", "a-"}}); }

inline RibbonMap single_edge() { return from_rotation_lists({"a"}, {{"a+"}, {"a-"}}); }

/// Tetrahedron drawn in the plane: vertices 0..3, edges ij.
inline RibbonMap tetrahedron() {
  return from_rotation_lists({"e01", "e02", "e03", "e12", "e13", "e23"},
                             {{"e01+", "e02+", "e03+"},
                              {"e01-", "e13+", "e12+"},
                              {"e02-", "e12-", "e23+"},
                              {"e03-", "e23-", "e13-"}});
}

inline PolygonWord word(std::string_view text) { return parse_polygon_word(text); }

/// Same map with edge labels permuted and renamed.
inline RibbonMap relabeled(const RibbonMap& map, std::mt19937_64& rng) {
  const std::size_t m = map.num_edges();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<bool> flip_edge(m);
  for (std::size_t k = 0; k < m; ++k) flip_edge[k] = (rng() & 1U) != 0;
  std::vector<std::string> labels(m);
  for (std::size_t k = 0; k < m; ++k) labels[perm[k]] = "r" + std::to_string(k) + "_" + std::to_string(rng() % 97);
  auto image = [&](Dart d) {
    const std::size_t k = perm[edge_of(d)];
    const bool fwd = is_forward(d) != flip_edge[edge_of(d)];
    return fwd ? forward_dart(k) : backward_dart(k);
  };
  std::vector<std::vector<Dart>> stars;
  for (const auto& s : map.stars()) {
    auto& row = stars.emplace_back();
    const std::size_t shift = s.empty() ? 0 : rng() % s.size();
    for (std::size_t i = 0; i < s.size(); ++i) row.push_back(image(s[(i + shift) % s.size()]));
  }
  std::shuffle(stars.begin(), stars.end(), rng);
  return RibbonMap::from_stars(labels, stars);
}

// ---------------------------------------------------------------- oracles

inline std::size_t count_cycles(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t x = i; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

/// Faces counted as cycles of the composed permutation sigma o iota, with
/// iota given as an explicit pairing table.
inline std::size_t oracle_face_count(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> iota(sigma.size());
  for (std::size_t d = 0; d + 1 < sigma.size(); d += 2) {
    iota[d] = d + 1;
    iota[d + 1] = d;
  }
  std::vector<std::size_t> phi(sigma.size());
  for (std::size_t d = 0; d < sigma.size(); ++d) phi[d] = sigma[iota[d]];
  return count_cycles(phi);
}

inline long oracle_chi(const std::vector<std::size_t>& sigma) {
  if (sigma.empty()) return 2;
  return static_cast<long>(count_cycles(sigma)) - static_cast<long>(sigma.size() / 2) +
         static_cast<long>(oracle_face_count(sigma));
}

inline long oracle_chi(const RibbonMap& map) { return oracle_chi(map.rotation()); }

/// Euler characteristic of the surface glued from a polygon, by identifying
/// corners: corner p sits before letter p, so a side at position p runs from
/// corner p to corner p+1.
inline long oracle_polygon_chi(const PolygonWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return 2;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;  // label -> (plus position, minus position)
  for (std::size_t p = 0; p < n; ++p) {
    auto& slot = where[w[p].label];
    (w[p].sign == Sign::plus ? slot.first : slot.second) = p;
  }
  for (const auto& [label, pos] : where) {
    const auto [p, q] = pos;
    // the reversed side at q runs from corner q+1 to corner q in the forward direction
    parent[find(p)] = find((q + 1) % n);
    parent[find((p + 1) % n)] = find(q);
  }
  std::set<std::size_t> classes;
  for (std::size_t i = 0; i < n; ++i) classes.insert(find(i));
  return static_cast<long>(classes.size()) - static_cast<long>(where.size()) + 1;
}

/// Number of points (x, y) with |x| + |y| <= r.
inline std::size_t taxicab_ball_size(long r) {
  std::size_t count = 0;
  for (long x = -r; x <= r; ++x) {
    for (long y = -r; y <= r; ++y) count += (std::labs(x) + std::labs(y) <= r) ? 1 : 0;
  }
  return count;
}

/// Unit squares whose four corners all lie in the taxicab ball of radius r.
inline std::size_t unit_squares_in_taxicab_ball(long r) {
  auto in = [r](long x, long y) { return std::labs(x) + std::labs(y) <= r; };
  std::size_t count = 0;
  for (long x = -r; x <= r; ++x) {
    for (long y = -r; y <= r; ++y) count += (in(x, y) && in(x + 1, y) && in(x, y + 1) && in(x + 1, y + 1)) ? 1 : 0;
  }
  return count;
}

/// Freely reduced words of length <= r over `rank` generators, enumerated.
inline std::size_t reduced_words_up_to(std::size_t rank, std::size_t r) {
  std::vector<std::vector<int>> layer{{}};
  std::size_t total = 1;
  for (std::size_t len = 1; len <= r; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int g = 1; g <= static_cast<int>(rank); ++g) {
        for (int l : {g, -g}) {
          if (!w.empty() && w.back() == -l) continue;
          auto x = w;
          x.push_back(l);
          next.push_back(std::move(x));
        }
      }
    }
    total += next.size();
    layer = std::move(next);
  }
  return total;
}

// ---------------------------------------------------------------- corpora

/// A uniformly random rotation on 2m darts, redrawn until connected.
inline RibbonMap random_rotation_map(std::size_t m, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < m; ++k) labels.push_back("e" + std::to_string(k));
  for (;;) {
    std::vector<Dart> darts(2 * m);
    std::iota(darts.begin(), darts.end(), Dart{0});
    std::shuffle(darts.begin(), darts.end(), rng);
    // cut the shuffled darts into random consecutive stars
    std::vector<std::vector<Dart>> stars;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      if (stars.empty() || rng() % 3 == 0) stars.emplace_back();
      stars.back().push_back(darts[i]);
    }
    try {
      return RibbonMap::from_stars(labels, stars);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::disconnected) throw;
    }
  }
}

/// Mixed corpus: random rotations and random filling maps, all with m <= 12.
inline std::vector<RibbonMap> mixed_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RibbonMap> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      out.push_back(random_rotation_map(1 + rng() % 12, rng));
    } else {
      const std::size_t g = rng() % 4;
      const std::size_t k = rng() % (13 - 2 * g);
      out.push_back(random_filling_map(g, k, rng()));
    }
  }
  return out;
}

}  // namespace ribbon::testing
