#pragma once

// Dart-based ribbon graphs (rotation systems).
//
// A map with m geometric edges has darts 0..2m-1. Dart 2k walks edge k
// forward ("k+"), dart 2k+1 walks it backward ("k-"), so the reversal
// involution is d ^ 1 and can never have a fixed point. The rotation sigma is
// a permutation of the darts; each of its cycles is the cyclically ordered
// star of one vertex.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ribbon/error.hpp"

namespace ribbon {

using Dart = std::size_t;

inline constexpr Dart reverse(Dart d) noexcept { return d ^ 1U; }
inline constexpr std::size_t edge_of(Dart d) noexcept { return d >> 1U; }
inline constexpr bool is_forward(Dart d) noexcept { return (d & 1U) == 0; }
inline constexpr Dart forward_dart(std::size_t edge) noexcept { return 2 * edge; }
inline constexpr Dart backward_dart(std::size_t edge) noexcept { return 2 * edge + 1; }

enum class Sign : std::uint8_t { plus, minus };

inline constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// A dart named by its edge label and direction, e.g. "a+" or "a-".
struct DartRef {
  std::string label;
  Sign sign = Sign::plus;

  DartRef inverse() const { return {label, flip(sign)}; }
  std::string token() const { return label + (sign == Sign::plus ? "+" : "-"); }

  friend bool operator==(const DartRef&, const DartRef&) = default;
};

/// Labels follow [A-Za-z][A-Za-z0-9_]*.
inline bool is_valid_label(std::string_view label) {
  if (label.empty() || std::isalpha(static_cast<unsigned char>(label.front())) == 0) return false;
  return std::all_of(label.begin() + 1, label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

/// Parses "label+" / "label-". Returns nothing on malformed tokens.
inline std::optional<DartRef> parse_dart_token(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  const char last = token.back();
  if (last != '+' && last != '-') return std::nullopt;
  std::string_view label = token.substr(0, token.size() - 1);
  if (!is_valid_label(label)) return std::nullopt;
  return DartRef{std::string(label), last == '+' ? Sign::plus : Sign::minus};
}

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
};

class RibbonMap {
 public:
  /// The edgeless single-vertex representative of the sphere.
  static RibbonMap sphere() {
    RibbonMap map;
    map.stars_.emplace_back();
    return map;
  }

  /// Builds a map from explicit stars given as dart indices. Each inner list
  /// is one vertex's cyclic rotation. Throws on anything that is not a valid
  /// connected map; a single empty star with no labels yields sphere().
  static RibbonMap from_stars(std::vector<std::string> labels, const std::vector<std::vector<Dart>>& stars);

  std::size_t num_edges() const noexcept { return labels_.size(); }
  std::size_t num_darts() const noexcept { return sigma_.size(); }
  std::size_t num_vertices() const noexcept { return stars_.size(); }
  bool is_sphere_marker() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& edge_labels() const noexcept { return labels_; }
  const std::string& label(std::size_t edge) const { return labels_.at(edge); }

  Dart sigma(Dart d) const { return sigma_.at(d); }
  const std::vector<Dart>& rotation() const noexcept { return sigma_; }
  std::size_t vertex_of(Dart d) const { return vertex_of_.at(d); }
  std::size_t tail(Dart d) const { return vertex_of(d); }
  std::size_t head(Dart d) const { return vertex_of(reverse(d)); }

  /// Star of vertex v in cyclic order, starting at its smallest dart.
  const std::vector<Dart>& star(std::size_t v) const {
    if (v >= stars_.size()) {
      throw Error(ErrorCode::index_out_of_range, "vertex " + std::to_string(v) + " of " + std::to_string(stars_.size()));
    }
    return stars_[v];
  }
  const std::vector<std::vector<Dart>>& stars() const noexcept { return stars_; }

  std::optional<std::size_t> find_edge(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  DartRef dart_ref(Dart d) const { return {labels_.at(edge_of(d)), is_forward(d) ? Sign::plus : Sign::minus}; }

  Dart dart(const DartRef& ref) const {
    auto e = find_edge(ref.label);
    if (!e) throw Error(ErrorCode::unknown_label, "no edge labelled '" + ref.label + "'");
    return ref.sign == Sign::plus ? forward_dart(*e) : backward_dart(*e);
  }

  /// Rotation lists as dart tokens, one list per vertex in vertex order.
  std::vector<std::vector<std::string>> rotation_tokens() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(stars_.size());
    for (const auto& s : stars_) {
      auto& row = out.emplace_back();
      for (Dart d : s) row.push_back(dart_ref(d).token());
    }
    return out;
  }

  friend bool operator==(const RibbonMap& a, const RibbonMap& b) {
    return a.labels_ == b.labels_ && a.sigma_ == b.sigma_ && a.stars_.size() == b.stars_.size();
  }

 private:
  RibbonMap() = default;

  std::vector<std::string> labels_;
  std::vector<Dart> sigma_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::vector<Dart>> stars_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline bool is_connected(const std::vector<Dart>& sigma) {
  if (sigma.empty()) return true;
  UnionFind uf(sigma.size());
  std::size_t components = sigma.size();
  for (Dart d = 0; d < sigma.size(); ++d) {
    if (uf.unite(d, sigma[d])) --components;
    if (uf.unite(d, reverse(d))) --components;
  }
  return components == 1;
}

}  // namespace detail

inline RibbonMap RibbonMap::from_stars(std::vector<std::string> labels, const std::vector<std::vector<Dart>>& stars) {
  const std::size_t darts = 2 * labels.size();
  if (stars.empty()) throw Error(ErrorCode::empty_map, "map has no vertices");
  if (labels.empty()) {
    if (stars.size() == 1 && stars.front().empty()) return sphere();
    throw Error(ErrorCode::isolated_vertex, "an edgeless map must be a single isolated vertex");
  }
  std::vector<Dart> sigma(darts, darts);
  for (std::size_t v = 0; v < stars.size(); ++v) {
    const auto& s = stars[v];
    if (s.empty()) throw Error(ErrorCode::isolated_vertex, "vertex " + std::to_string(v) + " has an empty star");
    for (std::size_t i = 0; i < s.size(); ++i) {
      Dart d = s[i];
      if (d >= darts) throw Error(ErrorCode::index_out_of_range, "dart " + std::to_string(d));
      if (sigma[d] != darts) throw Error(ErrorCode::duplicate_dart, "dart " + std::to_string(d) + " appears twice");
      sigma[d] = s[(i + 1) % s.size()];
    }
  }
  for (Dart d = 0; d < darts; ++d) {
    if (sigma[d] == darts) throw Error(ErrorCode::missing_dart, "dart " + std::to_string(d) + " is in no star");
  }
  if (!detail::is_connected(sigma)) throw Error(ErrorCode::disconnected, "the map has more than one component");

  RibbonMap map;
  map.labels_ = std::move(labels);
  map.sigma_ = std::move(sigma);
  map.vertex_of_.assign(darts, darts);
  // Orbits are discovered in increasing order of their smallest dart.
  for (Dart d = 0; d < darts; ++d) {
    if (map.vertex_of_[d] != darts) continue;
    const std::size_t v = map.stars_.size();
    auto& orbit = map.stars_.emplace_back();
    Dart x = d;
    do {
      map.vertex_of_[x] = v;
      orbit.push_back(x);
      x = map.sigma_[x];
    } while (x != d);
  }
  return map;
}

/// Collects every problem with a rotation-list description instead of
/// stopping at the first.
inline ValidationReport check_rotation_lists(const std::vector<std::string>& labels,
                                             const std::vector<std::vector<std::string>>& rotations) {
  ValidationReport report;
  auto add = [&report](ErrorCode code, std::string msg) { report.issues.push_back({code, std::move(msg)}); };

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!is_valid_label(labels[k])) add(ErrorCode::invalid_label, "edges[" + std::to_string(k) + "]: invalid label '" + labels[k] + "'");
    if (!index.emplace(labels[k], k).second) {
      add(ErrorCode::duplicate_label, "edges[" + std::to_string(k) + "]: label '" + labels[k] + "' declared twice");
    }
  }
  if (rotations.empty()) add(ErrorCode::empty_map, "no vertices");

  std::vector<int> seen(2 * labels.size(), 0);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    if (rotations[v].empty() && !(labels.empty() && rotations.size() == 1)) {
      add(ErrorCode::isolated_vertex, "vertices[" + std::to_string(v) + "]: empty rotation");
    }
    for (std::size_t i = 0; i < rotations[v].size(); ++i) {
      const std::string where = "vertices[" + std::to_string(v) + "].rotation[" + std::to_string(i) + "]";
      const std::string& token = rotations[v][i];
      auto ref = parse_dart_token(token);
      if (!ref) {
        add(ErrorCode::bad_token, where + ": malformed dart token '" + token + "'");
        continue;
      }
      auto it = index.find(ref->label);
      if (it == index.end()) {
        add(ErrorCode::unknown_label, where + ": unknown label '" + ref->label + "'");
        continue;
      }
      Dart d = ref->sign == Sign::plus ? forward_dart(it->second) : backward_dart(it->second);
      if (++seen[d] == 2) add(ErrorCode::duplicate_dart, where + ": dart '" + token + "' appears twice");
    }
  }
  for (Dart d = 0; d < seen.size(); ++d) {
    if (seen[d] == 0) {
      DartRef ref{labels[edge_of(d)], is_forward(d) ? Sign::plus : Sign::minus};
      add(ErrorCode::missing_dart, "dart '" + ref.token() + "' is in no rotation");
    }
  }
  if (!report.ok()) return report;

  std::vector<std::vector<Dart>> stars;
  for (const auto& row : rotations) {
    auto& s = stars.emplace_back();
    for (const auto& token : row) {
      auto ref = parse_dart_token(token);
      Dart e = index.at(ref->label);
      s.push_back(ref->sign == Sign::plus ? forward_dart(e) : backward_dart(e));
    }
  }
  try {
    (void)RibbonMap::from_stars(labels, stars);
  } catch (const Error& e) {
    add(e.code(), e.what());
  }
  return report;
}

/// Builds a validated map whose sigma-orbits are exactly the given rotations.
inline RibbonMap from_rotation_lists(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<std::string>>& rotations) {
  auto report = check_rotation_lists(labels, rotations);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    throw Error(first.code, first.message);
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < labels.size(); ++k) index.emplace(labels[k], k);
  std::vector<std::vector<Dart>> stars;
  for (const auto& row : rotations) {
    auto& s = stars.emplace_back();
    for (const auto& token : row) {
      auto ref = parse_dart_token(token);
      Dart e = index.at(ref->label);
      s.push_back(ref->sign == Sign::plus ? forward_dart(e) : backward_dart(e));
    }
  }
  return RibbonMap::from_stars(labels, stars);
}

/// Number of darts in the star of v; a loop contributes two.
inline std::size_t degree(const RibbonMap& map, std::size_t v) { return map.star(v).size(); }

/// Subdivides every edge e into e_1 (tail half) and e_2 (head half) joined
/// at a new degree-2 vertex.
inline RibbonMap refine(const RibbonMap& map) {
  if (map.is_sphere_marker()) return map;
  std::vector<std::string> labels;
  labels.reserve(2 * map.num_edges());
  for (const auto& l : map.edge_labels()) {
    labels.push_back(l + "_1");
    labels.push_back(l + "_2");
  }
  // Old forward dart 2k becomes the first half's forward dart 4k, old
  // backward dart 2k+1 becomes the second half's backward dart 4k+3.
  auto image = [](Dart d) -> Dart { return is_forward(d) ? 2 * d : 2 * d + 1; };
  std::vector<std::vector<Dart>> stars;
  for (const auto& s : map.stars()) {
    auto& out = stars.emplace_back();
    for (Dart d : s) out.push_back(image(d));
  }
  for (std::size_t k = 0; k < map.num_edges(); ++k) stars.push_back({4 * k + 1, 4 * k + 2});
  return RibbonMap::from_stars(std::move(labels), stars);
}

}  // namespace ribbon
