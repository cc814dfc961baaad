#pragma once

// Reduction of a ribbon map to a single polygon and normalization of the
// polygon's boundary word to the commutator form
//     x1 y1 X1 Y1 x2 y2 X2 Y2 ... xg yg Xg Yg
// which identifies the surface as the genus-g surface.
//
// Map moves (delete an edge separating two faces, contract a non-loop edge)
// bring any map to one vertex and one face. Word moves (cancel an adjacent
// x X, erase a non-loop letter, cut along a new diagonal and glue along an
// old side) then rearrange the polygon. Every move preserves the Euler
// characteristic; normalize() checks that after each step.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ribbon/error.hpp"
#include "ribbon/map.hpp"
#include "ribbon/surface.hpp"

namespace ribbon {

/// Cyclic boundary word of a gluing polygon. Every label occurs exactly
/// twice, once with each sign.
struct PolygonWord {
  std::vector<DartRef> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  const DartRef& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const PolygonWord&, const PolygonWord&) = default;
};

inline PolygonWord rotated(const PolygonWord& w, std::size_t start) {
  PolygonWord out;
  const std::size_t n = w.size();
  out.letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.letters.push_back(w[(start + i) % n]);
  return out;
}

/// Equality as cyclic sequences.
inline bool cyclically_equal(const PolygonWord& a, const PolygonWord& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (rotated(a, s) == b) return true;
  }
  return false;
}

struct DeleteEdge {
  std::string label;
  friend bool operator==(const DeleteEdge&, const DeleteEdge&) = default;
};
struct ContractEdge {
  std::string label;
  friend bool operator==(const ContractEdge&, const ContractEdge&) = default;
};
struct Cancel {
  std::string label;
  friend bool operator==(const Cancel&, const Cancel&) = default;
};
/// Cut the polygon along a new side `new_label` so that one piece holds the
/// letters at positions [from, to) (cyclically), then glue the two pieces
/// back along the two occurrences of `old_label`.
struct CutGlue {
  std::string new_label;
  std::string old_label;
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const CutGlue&, const CutGlue&) = default;
};

using Move = std::variant<DeleteEdge, ContractEdge, Cancel, CutGlue>;

struct MoveTrace {
  std::vector<Move> moves;

  void append(const MoveTrace& other) { moves.insert(moves.end(), other.moves.begin(), other.moves.end()); }
  friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

// ---------------------------------------------------------------- map moves

namespace detail {

/// Removes edge k from every star, renumbering the later darts.
inline RibbonMap without_edge(const RibbonMap& map, std::size_t k,
                              std::vector<std::vector<Dart>> stars) {
  std::vector<std::string> labels = map.edge_labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::vector<Dart>> out;
  for (auto& s : stars) {
    std::vector<Dart> row;
    for (Dart d : s) {
      if (edge_of(d) == k) continue;
      row.push_back(edge_of(d) > k ? d - 2 : d);
    }
    if (!row.empty() || labels.empty()) out.push_back(std::move(row));
  }
  if (labels.empty()) return RibbonMap::sphere();
  return RibbonMap::from_stars(std::move(labels), out);
}

inline std::size_t edge_index(const RibbonMap& map, const std::string& label) {
  auto k = map.find_edge(label);
  if (!k) throw Error(ErrorCode::unknown_label, "no edge labelled '" + label + "'");
  return *k;
}

}  // namespace detail

/// Deletes the named edge; its two darts must lie in different faces.
inline RibbonMap delete_edge(const RibbonMap& map, const std::string& label) {
  const std::size_t k = detail::edge_index(map, label);
  auto face = face_of_darts(map);
  if (face[forward_dart(k)] == face[backward_dart(k)]) {
    throw Error(ErrorCode::precondition_violation, "both sides of '" + label + "' lie in the same face");
  }
  try {
    return detail::without_edge(map, k, map.stars());
  } catch (const Error& e) {
    throw Error(ErrorCode::internal_invariant_violation, std::string("deleting '") + label + "' broke the map: " + e.what());
  }
}

/// Deletes the first edge (by dart index) whose two darts are in different
/// faces. Returns nothing when every edge borders a single face.
inline std::optional<std::pair<RibbonMap, std::string>> delete_face_merging_edge(const RibbonMap& map) {
  if (map.num_edges() == 0) return std::nullopt;
  auto face = face_of_darts(map);
  for (std::size_t k = 0; k < map.num_edges(); ++k) {
    if (face[forward_dart(k)] != face[backward_dart(k)]) {
      return std::make_pair(delete_edge(map, map.label(k)), map.label(k));
    }
  }
  return std::nullopt;
}

/// Merges the two endpoints of a non-loop edge. In the star of the tail the
/// edge's dart is replaced by the rest of the head's star, read in cyclic
/// order after the reversed dart.
inline RibbonMap contract_edge(const RibbonMap& map, const std::string& label) {
  const std::size_t k = detail::edge_index(map, label);
  const Dart e = forward_dart(k);
  const Dart back = backward_dart(k);
  const std::size_t u = map.vertex_of(e);
  const std::size_t w = map.vertex_of(back);
  if (u == w) throw Error(ErrorCode::loop_not_contractible, "'" + label + "' is a loop");

  std::vector<Dart> spliced;
  for (Dart x = map.sigma(back); x != back; x = map.sigma(x)) spliced.push_back(x);

  std::vector<std::vector<Dart>> stars;
  for (std::size_t v = 0; v < map.num_vertices(); ++v) {
    if (v == w) continue;
    auto& row = stars.emplace_back();
    for (Dart d : map.star(v)) {
      if (d == e) {
        row.insert(row.end(), spliced.begin(), spliced.end());
      } else {
        row.push_back(d);
      }
    }
  }
  return detail::without_edge(map, k, std::move(stars));
}

/// Deletes face-merging edges until one face remains, then contracts
/// non-loop edges until one vertex remains.
inline std::pair<RibbonMap, MoveTrace> reduce_to_one_vertex_one_face(const RibbonMap& map) {
  MoveTrace trace;
  RibbonMap current = map;
  while (auto step = delete_face_merging_edge(current)) {
    current = std::move(step->first);
    trace.moves.emplace_back(DeleteEdge{std::move(step->second)});
  }
  while (current.num_vertices() > 1) {
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < current.num_edges() && !pick; ++k) {
      if (current.tail(forward_dart(k)) != current.head(forward_dart(k))) pick = k;
    }
    if (!pick) throw Error(ErrorCode::internal_invariant_violation, "several vertices but no contractible edge");
    std::string label = current.label(*pick);
    current = contract_edge(current, label);
    trace.moves.emplace_back(ContractEdge{std::move(label)});
  }
  return {std::move(current), std::move(trace)};
}

/// Boundary word of the single face of a one-vertex one-face map, read from
/// dart 0.
inline PolygonWord polygon_word(const RibbonMap& map) {
  if (map.num_edges() == 0 || map.num_vertices() != 1 || face_count(map) != 1) {
    throw Error(ErrorCode::precondition_violation, "polygon word needs one vertex, one face and at least one edge (V=" +
                                                       std::to_string(map.num_vertices()) +
                                                       ", m=" + std::to_string(map.num_edges()) + ")");
  }
  PolygonWord w;
  w.letters = face_word(map, trace_faces(map).front());
  return w;
}

// ---------------------------------------------------------------- words

/// Throws MalformedWord unless every label is valid and occurs exactly once
/// with each sign.
inline void check_polygon_word(const PolygonWord& word) {
  std::vector<std::pair<std::string, int>> seen;
  for (const auto& l : word.letters) {
    if (!is_valid_label(l.label)) throw Error(ErrorCode::malformed_word, "invalid label '" + l.label + "'");
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == l.label; });
    const int bit = l.sign == Sign::plus ? 1 : 2;
    if (it == seen.end()) {
      seen.emplace_back(l.label, bit);
    } else if ((it->second & bit) != 0) {
      throw Error(ErrorCode::malformed_word, "label '" + l.label + "' occurs twice with the same sign");
    } else {
      it->second |= bit;
    }
  }
  for (const auto& [label, bits] : seen) {
    if (bits != 3) throw Error(ErrorCode::malformed_word, "label '" + label + "' occurs only once");
  }
}

/// The one-face map obtained by gluing the polygon's sides: labels in order
/// of first appearance, and sigma(reverse(w[p])) = w[p+1].
inline RibbonMap word_to_map(const PolygonWord& word) {
  check_polygon_word(word);
  if (word.empty()) return RibbonMap::sphere();
  std::vector<std::string> labels;
  for (const auto& l : word.letters) {
    if (std::find(labels.begin(), labels.end(), l.label) == labels.end()) labels.push_back(l.label);
  }
  auto dart_of = [&labels](const DartRef& r) {
    const auto k = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), r.label) - labels.begin());
    return r.sign == Sign::plus ? forward_dart(k) : backward_dart(k);
  };
  const std::size_t n = word.size();
  std::vector<Dart> sigma(n);
  for (std::size_t p = 0; p < n; ++p) sigma[reverse(dart_of(word[p]))] = dart_of(word[(p + 1) % n]);
  std::vector<std::vector<Dart>> stars;
  std::vector<bool> done(n, false);
  for (Dart d = 0; d < n; ++d) {
    if (done[d]) continue;
    auto& s = stars.emplace_back();
    for (Dart x = d; !done[x]; x = sigma[x]) {
      done[x] = true;
      s.push_back(x);
    }
  }
  return RibbonMap::from_stars(std::move(labels), stars);
}

inline long word_euler_characteristic(const PolygonWord& word) { return euler_characteristic(word_to_map(word)); }

/// Two labels are linked when their occurrences interleave: x .. y .. x' .. y'.
inline bool is_linked(const PolygonWord& word, const std::string& x, const std::string& y) {
  std::vector<std::size_t> px;
  std::vector<std::size_t> py;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].label == x) px.push_back(i);
    if (word[i].label == y) py.push_back(i);
  }
  if (px.size() != 2 || py.size() != 2 || x == y) return false;
  const bool first_inside = px[0] < py[0] && py[0] < px[1];
  const bool second_inside = px[0] < py[1] && py[1] < px[1];
  return first_inside != second_inside;
}

/// Every label is linked with at least one other label.
inline bool every_edge_linked(const PolygonWord& word) {
  std::vector<std::string> labels;
  for (const auto& l : word.letters) {
    if (std::find(labels.begin(), labels.end(), l.label) == labels.end()) labels.push_back(l.label);
  }
  return std::all_of(labels.begin(), labels.end(), [&](const std::string& x) {
    return std::any_of(labels.begin(), labels.end(), [&](const std::string& y) { return is_linked(word, x, y); });
  });
}

/// Whether x y X Y starts at position p (cyclically).
inline bool is_commutator_block(const PolygonWord& w, std::size_t p) {
  const std::size_t n = w.size();
  if (n < 4) return false;
  const auto& x = w[p % n];
  const auto& y = w[(p + 1) % n];
  return x.label != y.label && w[(p + 2) % n] == x.inverse() && w[(p + 3) % n] == y.inverse();
}

/// True for the empty word and for concatenations of commutator blocks
/// starting at position 0.
inline bool is_canonical(const PolygonWord& w) {
  if (w.size() % 4 != 0) return false;
  for (std::size_t p = 0; p < w.size(); p += 4) {
    if (!is_commutator_block(w, p)) return false;
  }
  return true;
}

namespace detail {

inline PolygonWord erase_label(const PolygonWord& w, const std::string& label) {
  PolygonWord out;
  for (const auto& l : w.letters) {
    if (l.label != label) out.letters.push_back(l);
  }
  return out;
}

inline std::size_t find_letter(const std::vector<DartRef>& letters, const std::string& label) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].label == label) return i;
  }
  return letters.size();
}

class FreshLabels {
 public:
  explicit FreshLabels(const PolygonWord& w) {
    for (const auto& l : w.letters) used_.insert(l.label);
  }

  void reserve(const std::string& label) { used_.insert(label); }

  std::string next() {
    for (char c = 'a'; c <= 'z'; ++c) {
      std::string s(1, c);
      if (used_.insert(s).second) return s;
    }
    for (std::size_t i = 1;; ++i) {
      std::string s = "t" + std::to_string(i);
      if (used_.insert(s).second) return s;
    }
  }

 private:
  std::set<std::string> used_;
};

}  // namespace detail

/// Deletes an adjacent pair x X (in either order, cyclically).
inline PolygonWord cancel_pair(const PolygonWord& w, const std::string& label) {
  const std::size_t n = w.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (w[p].label == label && w[(p + 1) % n] == w[p].inverse()) return detail::erase_label(w, label);
  }
  throw Error(ErrorCode::precondition_violation, "no adjacent pair for '" + label + "'");
}

/// Erases both occurrences of a letter whose ends are different vertex
/// classes of the glued polygon (contraction of that side).
inline PolygonWord contract_letter(const PolygonWord& w, const std::string& label) {
  auto map = word_to_map(w);
  auto k = map.find_edge(label);
  if (!k) throw Error(ErrorCode::unknown_label, "no letter '" + label + "'");
  if (map.tail(forward_dart(*k)) == map.head(forward_dart(*k))) {
    throw Error(ErrorCode::loop_not_contractible, "'" + label + "' joins a vertex class to itself");
  }
  return detail::erase_label(w, label);
}

struct CutGlueParts {
  PolygonWord result;
  /// The first piece (including the new side) read after the glued letter.
  PolygonWord complement;
  /// Sign of the glued letter inside the first piece.
  Sign sign_in_first = Sign::plus;
};

inline CutGlueParts cut_glue_parts(const PolygonWord& w, const CutGlue& move) {
  const std::size_t n = w.size();
  if (n == 0 || move.from >= n || move.to >= n) throw Error(ErrorCode::precondition_violation, "cut positions out of range");
  const std::size_t count = (move.to + n - move.from) % n;
  if (count == 0) throw Error(ErrorCode::precondition_violation, "cut must split the word into two nonempty pieces");
  if (detail::find_letter(w.letters, move.new_label) != n || !is_valid_label(move.new_label)) {
    throw Error(ErrorCode::precondition_violation, "'" + move.new_label + "' is not a fresh label");
  }
  std::vector<DartRef> first;
  std::vector<DartRef> second{DartRef{move.new_label, Sign::minus}};
  for (std::size_t i = 0; i < n; ++i) {
    (i < count ? first : second).push_back(w[(move.from + i) % n]);
  }
  first.push_back(DartRef{move.new_label, Sign::plus});
  const std::size_t ia = detail::find_letter(first, move.old_label);
  const std::size_t ib = detail::find_letter(second, move.old_label);
  if (ia == first.size() || ib == second.size()) {
    throw Error(ErrorCode::precondition_violation, "'" + move.old_label + "' must occur once in each piece");
  }
  CutGlueParts parts;
  parts.sign_in_first = first[ia].sign;
  for (std::size_t i = 1; i < first.size(); ++i) parts.complement.letters.push_back(first[(ia + i) % first.size()]);
  parts.result = parts.complement;
  for (std::size_t i = 1; i < second.size(); ++i) parts.result.letters.push_back(second[(ib + i) % second.size()]);
  return parts;
}

inline PolygonWord cut_glue(const PolygonWord& w, const CutGlue& move) { return cut_glue_parts(w, move).result; }

inline PolygonWord apply_move(const PolygonWord& w, const Move& move) {
  return std::visit(
      [&w](const auto& m) -> PolygonWord {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Cancel>) {
          return cancel_pair(w, m.label);
        } else if constexpr (std::is_same_v<T, ContractEdge>) {
          return contract_letter(w, m.label);
        } else if constexpr (std::is_same_v<T, CutGlue>) {
          return cut_glue(w, m);
        } else {
          throw Error(ErrorCode::precondition_violation, "edge deletion is not a word move");
        }
      },
      move);
}

/// Every word produced while replaying the trace, starting with `w` itself.
inline std::vector<PolygonWord> replay_steps(const PolygonWord& w, const MoveTrace& trace) {
  std::vector<PolygonWord> out{w};
  for (const auto& m : trace.moves) out.push_back(apply_move(out.back(), m));
  return out;
}

inline PolygonWord replay(const PolygonWord& w, const MoveTrace& trace) { return replay_steps(w, trace).back(); }

/// Rewrites a polygon word into commutator blocks. The result is rotated to
/// start at a block boundary; the input's existing blocks are kept as they
/// are and never split.
inline std::pair<PolygonWord, MoveTrace> normalize(const PolygonWord& input) {
  check_polygon_word(input);
  const long chi = word_euler_characteristic(input);
  MoveTrace trace;
  PolygonWord w = input;
  detail::FreshLabels fresh(w);

  auto step = [&](Move move) {
    w = apply_move(w, move);
    trace.moves.push_back(std::move(move));
    if (word_euler_characteristic(w) != chi) {
      throw Error(ErrorCode::internal_invariant_violation, "a word move changed the Euler characteristic");
    }
  };

  // Bring the polygon down to a single vertex class.
  for (;;) {
    const std::size_t n = w.size();
    std::optional<std::string> pair;
    for (std::size_t p = 0; p < n && !pair; ++p) {
      if (w[(p + 1) % n] == w[p].inverse()) pair = w[p].label;
    }
    if (pair) {
      step(Cancel{*pair});
      continue;
    }
    if (n == 0) break;
    auto map = word_to_map(w);
    if (map.num_vertices() == 1) break;
    std::optional<std::string> letter;
    for (std::size_t p = 0; p < n && !letter; ++p) {
      auto k = *map.find_edge(w[p].label);
      if (map.tail(forward_dart(k)) != map.head(forward_dart(k))) letter = w[p].label;
    }
    if (!letter) throw Error(ErrorCode::internal_invariant_violation, "several vertex classes but no contractible letter");
    step(ContractEdge{*letter});
  }
  if (w.empty()) return {w, trace};

  std::set<std::string> gathered;
  {
    std::vector<bool> taken(w.size(), false);
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (!is_commutator_block(w, p)) continue;
      bool free = true;
      for (std::size_t i = 0; i < 4; ++i) free = free && !taken[(p + i) % w.size()];
      if (!free) continue;
      for (std::size_t i = 0; i < 4; ++i) taken[(p + i) % w.size()] = true;
      gathered.insert(w[p].label);
      gathered.insert(w[(p + 1) % w.size()].label);
    }
  }

  for (;;) {
    const std::size_t n = w.size();
    std::size_t p = 0;
    while (p < n && gathered.count(w[p].label) != 0) ++p;
    if (p == n) break;

    auto partner = [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && w[j].label == w[i].label) return j;
      }
      return n;
    };
    const std::size_t q = (partner(p) + n - p) % n;  // offset of u's inverse
    std::optional<std::size_t> v;
    for (std::size_t r = 1; r < q && !v; ++r) {
      const std::size_t i = (p + r) % n;
      if (gathered.count(w[i].label) != 0) continue;
      if ((partner(i) + n - p) % n > q) v = i;
    }
    if (!v) throw Error(ErrorCode::internal_invariant_violation, "'" + w[p].label + "' is linked with no free letter");

    const std::string u = w[p].label;
    const std::string c = fresh.next();
    step(CutGlue{c, w[*v].label, (p + 1) % n, (p + q) % n});

    // w now reads ... u C U ...; collect u and C into one block.
    std::size_t back = n;
    std::size_t fwd = n;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].label == c) (w[i].sign == Sign::minus ? back : fwd) = i;
    }
    const std::string e = fresh.next();
    step(CutGlue{e, u, back, fwd});
    gathered.insert(c);
    gathered.insert(e);
  }

  for (std::size_t start = 0; start < 4 && start < w.size(); ++start) {
    PolygonWord candidate = rotated(w, start);
    if (is_canonical(candidate)) return {candidate, trace};
  }
  throw Error(ErrorCode::internal_invariant_violation, "normalization did not reach commutator form");
}

// ---------------------------------------------------------------- classify

struct ClassificationResult {
  std::size_t genus = 0;
  /// Empty for the sphere.
  PolygonWord canonical_word;
  MoveTrace trace;

  bool is_sphere() const noexcept { return canonical_word.empty(); }
};

inline ClassificationResult classify(const RibbonMap& map) {
  ClassificationResult result;
  if (map.num_edges() == 0) return result;
  auto [reduced, trace] = reduce_to_one_vertex_one_face(map);
  result.trace = std::move(trace);
  if (reduced.num_edges() > 0) {
    auto [canonical, word_trace] = normalize(polygon_word(reduced));
    result.canonical_word = std::move(canonical);
    result.trace.append(word_trace);
  }
  result.genus = result.canonical_word.size() / 4;
  if (result.genus != genus(map)) {
    throw Error(ErrorCode::internal_invariant_violation, "classification disagrees with the Euler characteristic");
  }
  return result;
}

/// Replays a classification trace: map moves until the map has one vertex
/// and one face, then word moves on its polygon word.
inline PolygonWord replay(const RibbonMap& map, const MoveTrace& trace) {
  RibbonMap current = map;
  std::size_t i = 0;
  for (; i < trace.moves.size(); ++i) {
    if (current.num_edges() > 0 && current.num_vertices() == 1 && face_count(current) == 1) break;
    const auto& m = trace.moves[i];
    if (const auto* d = std::get_if<DeleteEdge>(&m)) {
      current = delete_edge(current, d->label);
    } else if (const auto* c = std::get_if<ContractEdge>(&m)) {
      current = contract_edge(current, c->label);
    } else {
      break;
    }
  }
  if (current.num_edges() == 0) {
    if (i != trace.moves.size()) throw Error(ErrorCode::precondition_violation, "moves left after reaching the sphere");
    return {};
  }
  MoveTrace rest;
  rest.moves.assign(trace.moves.begin() + static_cast<std::ptrdiff_t>(i), trace.moves.end());
  return replay(polygon_word(current), rest);
}

// ---------------------------------------------------------------- inverse moves

/// Adds a new edge across face `face` (index into trace_faces) joining the
/// corner after its i-th dart to the corner after its j-th dart, splitting
/// the face in two. On the sphere representative a loop is added.
inline RibbonMap split_face(const RibbonMap& map, std::size_t face, std::size_t i, std::size_t j, const std::string& label) {
  if (map.find_edge(label)) throw Error(ErrorCode::duplicate_label, "'" + label + "' already exists");
  std::vector<std::string> labels = map.edge_labels();
  labels.push_back(label);
  const Dart plus = forward_dart(map.num_edges());
  const Dart minus = backward_dart(map.num_edges());
  if (map.num_edges() == 0) return RibbonMap::from_stars(std::move(labels), {{plus, minus}});

  auto faces = trace_faces(map);
  if (face >= faces.size() || i >= faces[face].darts.size() || j >= faces[face].darts.size()) {
    throw Error(ErrorCode::index_out_of_range, "face corner out of range");
  }
  auto stars = map.stars();
  auto insert_after = [&stars](Dart anchor, Dart d) {
    for (auto& s : stars) {
      auto it = std::find(s.begin(), s.end(), anchor);
      if (it != s.end()) {
        s.insert(it + 1, d);
        return;
      }
    }
  };
  insert_after(reverse(faces[face].darts[i]), plus);
  insert_after(i == j ? plus : reverse(faces[face].darts[j]), minus);
  return RibbonMap::from_stars(std::move(labels), stars);
}

/// Moves the arc of `length` consecutive darts starting at position `start`
/// of vertex v's star onto a new vertex joined to v by a new edge. The new
/// edge's forward dart stays at v; contracting it restores the input.
inline RibbonMap split_vertex(const RibbonMap& map, std::size_t v, std::size_t start, std::size_t length,
                              const std::string& label) {
  if (map.find_edge(label)) throw Error(ErrorCode::duplicate_label, "'" + label + "' already exists");
  const auto& star = map.star(v);
  const std::size_t k = star.size();
  if ((k > 0 && start >= k) || length > k) throw Error(ErrorCode::index_out_of_range, "arc out of range");
  std::vector<std::string> labels = map.edge_labels();
  labels.push_back(label);
  const Dart plus = forward_dart(map.num_edges());
  const Dart minus = backward_dart(map.num_edges());

  std::vector<Dart> kept{plus};
  std::vector<Dart> moved{minus};
  for (std::size_t i = 0; i < k; ++i) {
    const Dart d = star[(start + i) % k];
    (i < length ? moved : kept).push_back(d);
  }
  std::vector<std::vector<Dart>> stars;
  for (std::size_t x = 0; x < map.num_vertices(); ++x) stars.push_back(x == v ? kept : map.star(x));
  stars.push_back(std::move(moved));
  return RibbonMap::from_stars(std::move(labels), stars);
}

/// Starts from petal(g) and applies `moves` random face splits and vertex
/// splits. New edges are labelled x1, x2, ... (skipping labels in use).
inline RibbonMap random_filling_map(std::size_t g, std::size_t moves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  RibbonMap map = petal(g);
  std::size_t counter = 0;
  auto fresh = [&]() {
    for (;;) {
      std::string s = "x" + std::to_string(++counter);
      if (!map.find_edge(s)) return s;
    }
  };
  for (std::size_t step = 0; step < moves; ++step) {
    const std::string label = fresh();
    if (pick(2) == 0) {
      if (map.num_edges() == 0) {
        map = split_face(map, 0, 0, 0, label);
        continue;
      }
      auto faces = trace_faces(map);
      const std::size_t f = pick(faces.size());
      const std::size_t len = faces[f].darts.size();
      const std::size_t i = pick(len);
      const std::size_t j = pick(len);
      map = split_face(map, f, i, j, label);
    } else {
      const std::size_t v = pick(map.num_vertices());
      const std::size_t k = map.star(v).size();
      const std::size_t start = k == 0 ? 0 : pick(k);
      const std::size_t length = pick(k + 1);
      map = split_vertex(map, v, start, length, label);
    }
  }
  return map;
}

}  // namespace ribbon
