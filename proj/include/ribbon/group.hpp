#pragma once

// Group words, presentations and the word problem for the groups that arise
// from closed oriented surfaces.
//
// A presentation is first simplified by Tietze moves: a relator in which
// some generator occurs exactly once eliminates that generator. For the
// face relators of a ribbon map this merges faces until a single polygon
// relator is left, which is then cut and glued into commutator form. The
// resulting target group is decided by
//   - free reduction when no relator survives (free groups),
//   - exponent sums for one commutator (the torus group is abelian),
//   - Dehn's algorithm for two or more commutators (the relator of length
//     4g has only length-1 pieces, so it satisfies C'(1/6) for g >= 2).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/classify.hpp"
#include "ribbon/error.hpp"
#include "ribbon/map.hpp"
#include "ribbon/surface.hpp"

namespace ribbon {

/// Generator i is the letter i+1, its inverse is -(i+1).
using Letter = std::int32_t;

inline constexpr Letter make_letter(std::size_t generator, bool inverse = false) {
  const auto l = static_cast<Letter>(generator + 1);
  return inverse ? -l : l;
}
inline constexpr std::size_t generator_of(Letter l) { return static_cast<std::size_t>(std::abs(l) - 1); }
inline constexpr bool is_inverse(Letter l) { return l < 0; }

struct GroupWord {
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord& a, const GroupWord& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters <=> b.letters;
  }
};

inline GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (auto& l : out.letters) l = -l;
  return out;
}

inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (Letter l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

inline GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

/// Freely reduces, then strips inverse pairs from the two ends.
inline GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord{{r.letters.begin() + static_cast<std::ptrdiff_t>(lo), r.letters.begin() + static_cast<std::ptrdiff_t>(hi)}};
}

/// Exponent sum of every generator.
inline std::vector<long> abelianization(const GroupWord& w, std::size_t rank) {
  std::vector<long> out(rank, 0);
  for (Letter l : w.letters) {
    const std::size_t g = generator_of(l);
    if (g >= rank) out.resize(g + 1, 0);
    out[g] += is_inverse(l) ? -1 : 1;
  }
  return out;
}

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  /// Genus of the surface this presents, when known.
  std::optional<std::size_t> genus_hint;
};

inline Presentation free_group(std::size_t rank) {
  Presentation p;
  for (std::size_t i = 0; i < rank; ++i) {
    p.generators.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  }
  return p;
}

/// < a1, b1, ..., ag, bg | a1 b1 A1 B1 ... ag bg Ag Bg >; genus 0 is the
/// trivial group with no generators.
inline Presentation surface_group(std::size_t g) {
  Presentation p;
  p.generators = surface_labels(g);
  p.genus_hint = g;
  if (g == 0) return p;
  GroupWord r;
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t a = 2 * i;
    const std::size_t b = 2 * i + 1;
    r.letters.insert(r.letters.end(), {make_letter(a), make_letter(b), make_letter(a, true), make_letter(b, true)});
  }
  p.relators.push_back(std::move(r));
  return p;
}

/// Same generator count and identical relators after renaming generators
/// in order of first appearance. Empty relators are ignored.
inline bool equal_up_to_renaming(const Presentation& p, const Presentation& q) {
  if (p.generators.size() != q.generators.size()) return false;
  auto canon = [](const Presentation& x) {
    std::vector<std::size_t> rename(x.generators.size(), x.generators.size());
    std::size_t next = 0;
    std::vector<GroupWord> out;
    for (const auto& r : x.relators) {
      if (r.empty()) continue;
      auto& w = out.emplace_back();
      for (Letter l : r.letters) {
        auto& slot = rename[generator_of(l)];
        if (slot == x.generators.size()) slot = next++;
        w.letters.push_back(make_letter(slot, is_inverse(l)));
      }
    }
    return out;
  };
  return canon(p) == canon(q);
}

// ---------------------------------------------------------------- paths

/// A walk along darts: the head of each dart is the tail of the next. The
/// start vertex is explicit so that constant paths can be expressed.
struct DiscretePath {
  std::size_t start = 0;
  std::vector<Dart> darts;
};

inline std::size_t path_end(const RibbonMap& map, const DiscretePath& p) {
  return p.darts.empty() ? p.start : map.head(p.darts.back());
}

inline void check_path(const RibbonMap& map, const DiscretePath& p) {
  if (p.start >= map.num_vertices()) throw Error(ErrorCode::index_out_of_range, "path start vertex " + std::to_string(p.start));
  std::size_t at = p.start;
  for (std::size_t i = 0; i < p.darts.size(); ++i) {
    const Dart d = p.darts[i];
    if (d >= map.num_darts()) throw Error(ErrorCode::invalid_path, "dart " + std::to_string(d) + " out of range");
    if (map.tail(d) != at) throw Error(ErrorCode::invalid_path, "step " + std::to_string(i) + " does not continue the path");
    at = map.head(d);
  }
}

inline DiscretePath inverse(const RibbonMap& map, const DiscretePath& p) {
  DiscretePath out{path_end(map, p), {}};
  for (auto it = p.darts.rbegin(); it != p.darts.rend(); ++it) out.darts.push_back(reverse(*it));
  return out;
}

/// Path along the darts of a face, starting at the tail of its first dart.
inline DiscretePath face_path(const RibbonMap& map, const Face& f) { return {map.tail(f.darts.front()), f.darts}; }

// ---------------------------------------------------------------- pi1

/// The fundamental group presentation read off a map, with the spanning
/// tree used to build it.
struct RibbonGroup {
  Presentation presentation;
  /// Generator index of each edge; nothing for tree edges.
  std::vector<std::optional<std::size_t>> generator_of_edge;
};

inline RibbonGroup ribbon_group(const RibbonMap& map, std::size_t v0) {
  if (v0 >= map.num_vertices()) throw Error(ErrorCode::index_out_of_range, "base vertex " + std::to_string(v0));
  RibbonGroup out;
  std::vector<bool> in_tree(map.num_edges(), false);
  std::vector<bool> visited(map.num_vertices(), false);
  std::vector<std::size_t> queue{v0};
  visited[v0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto star = map.star(queue[i]);
    std::sort(star.begin(), star.end());
    for (Dart d : star) {
      const std::size_t w = map.head(d);
      if (!visited[w]) {
        visited[w] = true;
        in_tree[edge_of(d)] = true;
        queue.push_back(w);
      }
    }
  }
  out.generator_of_edge.resize(map.num_edges());
  for (std::size_t k = 0; k < map.num_edges(); ++k) {
    if (in_tree[k]) continue;
    out.generator_of_edge[k] = out.presentation.generators.size();
    out.presentation.generators.push_back(map.label(k));
  }
  if (map.num_edges() == 0) {
    out.presentation.relators.emplace_back();
  } else {
    for (const auto& f : trace_faces(map)) {
      GroupWord w;
      for (Dart d : f.darts) {
        if (auto g = out.generator_of_edge[edge_of(d)]) w.letters.push_back(make_letter(*g, !is_forward(d)));
      }
      out.presentation.relators.push_back(cyclic_reduce(w));
    }
  }
  out.presentation.genus_hint = genus(map);
  return out;
}

/// Generators are the non-tree edges of a breadth-first spanning tree rooted
/// at v0; relators are the face words with tree edges erased, one per face.
inline Presentation pi1_presentation(const RibbonMap& map, std::size_t v0) { return ribbon_group(map, v0).presentation; }

/// The group element of a path: tree edges read as the identity.
inline GroupWord project(const RibbonGroup& group, const DiscretePath& p) {
  GroupWord w;
  for (Dart d : p.darts) {
    if (auto g = group.generator_of_edge.at(edge_of(d))) w.letters.push_back(make_letter(*g, !is_forward(d)));
  }
  return free_reduce(w);
}

// ---------------------------------------------------------------- word problem

class WordSolver {
 public:
  enum class Method { free, abelian, dehn };

  explicit WordSolver(const Presentation& pres) {
    names_ = pres.generators;
    alive_.assign(names_.size(), true);
    for (std::size_t i = 0; i < names_.size(); ++i) image_.push_back(GroupWord{{make_letter(i)}});

    std::vector<GroupWord> relators;
    for (const auto& r : pres.relators) {
      for (Letter l : r.letters) {
        if (l == 0 || generator_of(l) >= names_.size()) {
          throw Error(ErrorCode::unsupported_presentation, "relator uses an undeclared generator");
        }
      }
      relators.push_back(cyclic_reduce(r));
    }
    eliminate(relators);
    relators.erase(std::remove_if(relators.begin(), relators.end(), [](const GroupWord& r) { return r.empty(); }),
                   relators.end());
    if (relators.size() > 1) {
      throw Error(ErrorCode::unsupported_presentation,
                  std::to_string(relators.size()) + " independent relators remain after simplification");
    }
    if (relators.empty()) {
      method_ = Method::free;
    } else {
      bring_to_commutator_form(relators.front());
    }
    if (pres.genus_hint && method_ != Method::free && genus_ != *pres.genus_hint) {
      throw Error(ErrorCode::unsupported_presentation, "presentation does not match its genus");
    }
    if (pres.genus_hint && method_ == Method::free && (*pres.genus_hint != 0 || rank() != 0)) {
      throw Error(ErrorCode::unsupported_presentation, "presentation does not match its genus");
    }
  }

  Method method() const noexcept { return method_; }
  /// Genus of the target surface group; 0 for free groups.
  std::size_t genus() const noexcept { return genus_; }
  /// Number of generators of the simplified group.
  std::size_t rank() const noexcept { return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true)); }
  const GroupWord& target_relator() const noexcept { return relator_; }

  /// Rewrites a word over the original generators into the simplified group.
  GroupWord transport(const GroupWord& w) const {
    GroupWord out;
    for (Letter l : w.letters) {
      if (l == 0 || generator_of(l) >= image_.size()) throw Error(ErrorCode::index_out_of_range, "letter out of range");
      const GroupWord& img = image_[generator_of(l)];
      const GroupWord piece = is_inverse(l) ? inverse(img) : img;
      out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return free_reduce(out);
  }

  /// Exponent sums in the simplified group; equal elements have equal keys.
  std::vector<long> abelian_key(const GroupWord& w) const { return abelianization(transport(w), names_.size()); }

  bool is_trivial(const GroupWord& w) const {
    GroupWord t = transport(w);
    switch (method_) {
      case Method::free:
        return t.empty();
      case Method::abelian: {
        auto sums = abelianization(t, names_.size());
        return std::all_of(sums.begin(), sums.end(), [](long s) { return s == 0; });
      }
      case Method::dehn:
        return dehn_reduce(t).empty();
    }
    return false;
  }

  bool equal(const GroupWord& a, const GroupWord& b) const { return is_trivial(a * inverse(b)); }

  /// Dehn's algorithm: repeatedly replaces more than half of a cyclic
  /// permutation of the relator (or its inverse) by the shorter remainder.
  /// The word is treated cyclically; the result is empty iff w is trivial.
  GroupWord dehn_reduce(const GroupWord& w) const {
    GroupWord cur = cyclic_reduce(w);
    const std::size_t len = relator_.size();
    for (;;) {
      const std::size_t n = cur.size();
      if (n == 0) return cur;
      bool moved = false;
      for (std::size_t i = 0; i < n && !moved; ++i) {
        for (const auto& rot : rotations_) {
          std::size_t k = 0;
          while (k < n && k < len && cur.letters[(i + k) % n] == rot.letters[k]) ++k;
          if (2 * k <= len) continue;
          GroupWord rest{{rot.letters.begin() + static_cast<std::ptrdiff_t>(k), rot.letters.end()}};
          GroupWord next = inverse(rest);
          for (std::size_t j = k; j < n; ++j) next.letters.push_back(cur.letters[(i + j) % n]);
          cur = cyclic_reduce(next);
          moved = true;
          break;
        }
      }
      if (!moved) return cur;
    }
  }

 private:
  static std::size_t occurrences(const GroupWord& w, std::size_t g) {
    return static_cast<std::size_t>(
        std::count_if(w.letters.begin(), w.letters.end(), [g](Letter l) { return generator_of(l) == g; }));
  }

  static GroupWord substitute(const GroupWord& w, std::size_t g, const GroupWord& expr) {
    GroupWord out;
    const GroupWord inv = inverse(expr);
    for (Letter l : w.letters) {
      if (generator_of(l) != g) {
        out.letters.push_back(l);
        continue;
      }
      const GroupWord& piece = is_inverse(l) ? inv : expr;
      out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return free_reduce(out);
  }

  void retire(std::size_t g, const GroupWord& expr, std::vector<GroupWord>& relators) {
    for (auto& r : relators) r = cyclic_reduce(substitute(r, g, expr));
    for (auto& img : image_) img = substitute(img, g, expr);
    alive_[g] = false;
  }

  void eliminate(std::vector<GroupWord>& relators) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pick;  // relator, position
      for (std::size_t r = 0; r < relators.size() && !pick; ++r) {
        for (std::size_t p = 0; p < relators[r].size() && !pick; ++p) {
          if (occurrences(relators[r], generator_of(relators[r].letters[p])) == 1) pick = std::make_pair(r, p);
        }
      }
      if (!pick) return;
      auto [r, p] = *pick;
      const GroupWord rel = relators[r];
      const Letter x = rel.letters[p];
      GroupWord tail;
      for (std::size_t i = 1; i < rel.size(); ++i) tail.letters.push_back(rel.letters[(p + i) % rel.size()]);
      // x T = 1 gives x = T^-1; X T = 1 gives x = T.
      const GroupWord expr = is_inverse(x) ? tail : inverse(tail);
      relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(r));
      retire(generator_of(x), free_reduce(expr), relators);
    }
  }

  PolygonWord to_polygon(const GroupWord& w) const {
    PolygonWord out;
    for (Letter l : w.letters) out.letters.push_back({names_[generator_of(l)], is_inverse(l) ? Sign::minus : Sign::plus});
    return out;
  }

  GroupWord from_polygon(const PolygonWord& w) {
    GroupWord out;
    for (const auto& l : w.letters) {
      std::size_t g = names_.size();
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (alive_[i] && names_[i] == l.label) g = i;
      }
      if (g == names_.size()) {
        names_.push_back(l.label);
        alive_.push_back(true);
      }
      out.letters.push_back(make_letter(g, l.sign == Sign::minus));
    }
    return out;
  }

  void bring_to_commutator_form(const GroupWord& relator) {
    PolygonWord word = to_polygon(relator);
    try {
      check_polygon_word(word);
    } catch (const Error&) {
      throw Error(ErrorCode::unsupported_presentation, "the remaining relator is not a surface polygon");
    }
    for (std::size_t g = 0; g < names_.size(); ++g) {
      if (alive_[g] && occurrences(relator, g) == 0) {
        throw Error(ErrorCode::unsupported_presentation, "generator '" + names_[g] + "' is free next to a surface relator");
      }
    }
    if (word_to_map(word).num_vertices() != 1) {
      throw Error(ErrorCode::unsupported_presentation, "the remaining relator glues to more than one vertex");
    }
    auto [canonical, trace] = normalize(word);
    std::vector<GroupWord> none;
    for (const auto& move : trace.moves) {
      const auto* cg = std::get_if<CutGlue>(&move);
      if (cg == nullptr) throw Error(ErrorCode::internal_invariant_violation, "unexpected move on a one-vertex polygon");
      auto parts = cut_glue_parts(word, *cg);
      GroupWord complement = from_polygon(parts.complement);  // registers the new side
      std::size_t old = names_.size();
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (alive_[i] && names_[i] == cg->old_label) old = i;
      }
      // The first piece reads (glued letter)^(+-1) followed by the complement.
      const GroupWord expr = parts.sign_in_first == Sign::plus ? inverse(complement) : complement;
      retire(old, expr, none);
      word = parts.result;
    }
    relator_ = from_polygon(canonical);
    genus_ = relator_.size() / 4;
    if (genus_ == 1) {
      method_ = Method::abelian;
      return;
    }
    method_ = Method::dehn;
    const std::size_t len = relator_.size();
    for (const GroupWord& base : {relator_, inverse(relator_)}) {
      for (std::size_t s = 0; s < len; ++s) {
        GroupWord rot;
        for (std::size_t i = 0; i < len; ++i) rot.letters.push_back(base.letters[(s + i) % len]);
        rotations_.push_back(std::move(rot));
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<bool> alive_;
  std::vector<GroupWord> image_;
  GroupWord relator_;
  std::vector<GroupWord> rotations_;
  Method method_ = Method::free;
  std::size_t genus_ = 0;
};

/// Word problem for free groups and for presentations that simplify to a
/// surface group; anything else raises UnsupportedPresentation.
inline bool is_trivial_word(const GroupWord& word, const Presentation& pres) { return WordSolver(pres).is_trivial(word); }

/// p1 and p2 are homotopic when p1 followed by the reverse of p2 is trivial
/// in the ribbon fundamental group.
inline bool homotopic(const RibbonMap& map, std::size_t v0, const DiscretePath& p1, const DiscretePath& p2) {
  check_path(map, p1);
  check_path(map, p2);
  if (p1.start != p2.start || path_end(map, p1) != path_end(map, p2)) {
    throw Error(ErrorCode::endpoint_mismatch, "paths must share their start and end vertices");
  }
  const auto group = ribbon_group(map, v0);
  const GroupWord loop = project(group, p1) * inverse(project(group, p2));
  return WordSolver(group.presentation).is_trivial(loop);
}

}  // namespace ribbon
