#pragma once

// Graph documents (JSON), the word grammar shared by the command line tool,
// and DOT / JSON emitters.
//
// Graph document schema:
//   { "edges": ["a", "b"],
//     "vertices": [ { "rotation": ["a+", "b-", "a-", "b+"] } ],
//     "name": "optional" }
//
// Word grammar: whitespace-separated tokens. A token naming a label is that
// label; a trailing apostrophe inverts it. Other tokens are read letter by
// letter, where an uppercase letter stands for the inverse of the matching
// single-letter lowercase label. The token "1" is the empty word.

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ribbon/cayley.hpp"
#include "ribbon/classify.hpp"
#include "ribbon/error.hpp"
#include "ribbon/group.hpp"
#include "ribbon/map.hpp"
#include "ribbon/surface.hpp"

namespace ribbon {

using ordered_json = nlohmann::ordered_json;

struct GraphDocument {
  std::vector<std::string> edges;
  std::vector<std::vector<std::string>> rotations;
  std::optional<std::string> name;
};

inline GraphDocument parse_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, e.what());
  }
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::syntax_error, msg); };
  if (!j.is_object()) fail("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "edges" && key != "vertices" && key != "name") fail("unknown key '" + key + "'");
  }
  GraphDocument doc;
  if (!j.contains("edges") || !j["edges"].is_array()) fail("\"edges\" must be an array of strings");
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_string()) fail("edges[" + std::to_string(i) + "] must be a string");
    doc.edges.push_back(e.get<std::string>());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) fail("\"vertices\" must be an array");
  for (std::size_t v = 0; v < j["vertices"].size(); ++v) {
    const auto& vert = j["vertices"][v];
    const std::string where = "vertices[" + std::to_string(v) + "]";
    if (!vert.is_object() || !vert.contains("rotation") || !vert["rotation"].is_array() || vert.size() != 1) {
      fail(where + " must be an object with a single \"rotation\" array");
    }
    auto& row = doc.rotations.emplace_back();
    for (std::size_t i = 0; i < vert["rotation"].size(); ++i) {
      const auto& t = vert["rotation"][i];
      if (!t.is_string()) fail(where + ".rotation[" + std::to_string(i) + "] must be a string");
      row.push_back(t.get<std::string>());
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

inline RibbonMap to_map(const GraphDocument& doc) { return from_rotation_lists(doc.edges, doc.rotations); }

inline RibbonMap parse_graph(std::string_view text) { return to_map(parse_document(text)); }

inline GraphDocument to_document(const RibbonMap& map, std::optional<std::string> name = std::nullopt) {
  GraphDocument doc;
  doc.edges = map.edge_labels();
  doc.rotations = map.rotation_tokens();
  doc.name = std::move(name);
  return doc;
}

/// Canonical form: keys in schema order, two-space indent, trailing newline.
inline std::string serialize(const GraphDocument& doc) {
  ordered_json j;
  j["edges"] = doc.edges;
  j["vertices"] = ordered_json::array();
  for (const auto& row : doc.rotations) {
    ordered_json v;
    v["rotation"] = row;
    j["vertices"].push_back(std::move(v));
  }
  if (doc.name) j["name"] = *doc.name;
  return j.dump(2) + "\n";
}

inline std::string serialize_graph(const RibbonMap& map, std::optional<std::string> name = std::nullopt) {
  return serialize(to_document(map, std::move(name)));
}

// ---------------------------------------------------------------- words

namespace detail {

inline bool is_compact_letter_token(std::string_view t) {
  for (char c : t) {
    if (std::isalpha(static_cast<unsigned char>(c)) == 0 && c != '\'') return false;
  }
  return !t.empty() && t.front() != '\'';
}

}  // namespace detail

/// Signed labels of a word. With `known` given, labels must come from it;
/// without it any syntactically valid label is accepted.
inline std::vector<DartRef> parse_signed_labels(std::string_view text, const std::vector<std::string>* known) {
  auto is_known = [known](const std::string& l) {
    if (known == nullptr) return is_valid_label(l);
    return std::find(known->begin(), known->end(), l) != known->end();
  };
  std::vector<DartRef> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    const bool primed = token.size() > 1 && token.back() == '\'';
    const std::string bare = primed ? token.substr(0, token.size() - 1) : token;
    const bool whole = known != nullptr ? is_known(bare)
                                        : (is_valid_label(bare) && !detail::is_compact_letter_token(token));
    if (whole && is_known(bare)) {
      out.push_back({bare, primed ? Sign::minus : Sign::plus});
      continue;
    }
    if (!detail::is_compact_letter_token(token)) {
      throw Error(ErrorCode::syntax_error, "cannot read word token '" + token + "'");
    }
    for (std::size_t i = 0; i < token.size(); ++i) {
      const char c = token[i];
      const bool prime = i + 1 < token.size() && token[i + 1] == '\'';
      std::string single(1, c);
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      DartRef ref;
      if (is_known(single) && (known != nullptr || std::islower(static_cast<unsigned char>(c)) != 0)) {
        ref = {single, Sign::plus};
      } else if (std::isupper(static_cast<unsigned char>(c)) != 0 && is_known(lower)) {
        if (prime) throw Error(ErrorCode::syntax_error, "'" + single + "'' inverts twice");
        ref = {lower, Sign::minus};
      } else {
        throw Error(ErrorCode::syntax_error, "unknown letter '" + single + "' in '" + token + "'");
      }
      if (prime) {
        ref.sign = flip(ref.sign);
        ++i;
      }
      out.push_back(std::move(ref));
    }
  }
  return out;
}

inline std::string render_letter(const std::string& label, Sign sign) {
  if (sign == Sign::plus) return label;
  if (label.size() == 1 && std::islower(static_cast<unsigned char>(label[0])) != 0) {
    return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))));
  }
  return label + "'";
}

inline std::string render(const std::vector<DartRef>& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += render_letter(l.label, l.sign);
  }
  return out.empty() ? "1" : out;
}

inline std::string render(const PolygonWord& w) { return render(w.letters); }

inline std::string render(const GroupWord& w, const std::vector<std::string>& generators) {
  std::vector<DartRef> letters;
  for (Letter l : w.letters) letters.push_back({generators.at(generator_of(l)), is_inverse(l) ? Sign::minus : Sign::plus});
  return render(letters);
}

inline PolygonWord parse_polygon_word(std::string_view text) { return PolygonWord{parse_signed_labels(text, nullptr)}; }

inline GroupWord parse_group_word(std::string_view text, const std::vector<std::string>& generators) {
  GroupWord w;
  for (const auto& ref : parse_signed_labels(text, &generators)) {
    const auto g = static_cast<std::size_t>(std::find(generators.begin(), generators.end(), ref.label) - generators.begin());
    w.letters.push_back(make_letter(g, ref.sign == Sign::minus));
  }
  return w;
}

/// A path in a map written as a word over its edge labels.
inline DiscretePath parse_path(std::string_view text, const RibbonMap& map, std::size_t start) {
  DiscretePath p{start, {}};
  for (const auto& ref : parse_signed_labels(text, &map.edge_labels())) p.darts.push_back(map.dart(ref));
  if (!p.darts.empty()) p.start = map.tail(p.darts.front());
  return p;
}

inline std::string render(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i == 0 ? "" : ", ") + p.generators[i];
  out += p.generators.empty() ? "|" : " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) out += (i == 0 ? " " : ", ") + render(p.relators[i], p.generators);
  return out + " >";
}

/// "free:k", "surface:g" or "zxz".
inline Presentation parse_group_spec(std::string_view spec) {
  auto number = [&spec](std::size_t prefix) {
    const std::string digits(spec.substr(prefix));
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
      throw Error(ErrorCode::syntax_error, "bad group spec '" + std::string(spec) + "'");
    }
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (spec == "zxz") return surface_group(1);
  if (spec.starts_with("free:")) return free_group(number(5));
  if (spec.starts_with("surface:")) return surface_group(number(8));
  throw Error(ErrorCode::syntax_error, "bad group spec '" + std::string(spec) + "' (expected free:k, surface:g or zxz)");
}

// ---------------------------------------------------------------- emitters

inline std::string render_move(const Move& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DeleteEdge>) return "delete " + x.label;
        if constexpr (std::is_same_v<T, ContractEdge>) return "contract " + x.label;
        if constexpr (std::is_same_v<T, Cancel>) return "cancel " + x.label;
        if constexpr (std::is_same_v<T, CutGlue>) {
          return "cut " + x.new_label + " [" + std::to_string(x.from) + "," + std::to_string(x.to) + ") glue " + x.old_label;
        }
      },
      m);
}

inline ordered_json move_json(const Move& m) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, CutGlue>) {
          j["kind"] = "CutGlue";
          j["new_label"] = x.new_label;
          j["old_label"] = x.old_label;
          j["from"] = x.from;
          j["to"] = x.to;
        } else {
          j["kind"] = std::is_same_v<T, DeleteEdge> ? "DeleteEdge" : std::is_same_v<T, ContractEdge> ? "ContractEdge" : "Cancel";
          j["label"] = x.label;
        }
        return j;
      },
      m);
}

inline ordered_json report_json(const SurfaceReport& r) {
  ordered_json j;
  j["V"] = r.vertices;
  j["m"] = r.edges;
  j["F"] = r.faces;
  j["chi"] = r.chi;
  j["genus"] = r.genus;
  j["faces"] = ordered_json::array();
  for (const auto& f : r.face_words) j["faces"].push_back(render(f));
  return j;
}

inline ordered_json classification_json(const ClassificationResult& c) {
  ordered_json j;
  j["genus"] = c.genus;
  j["canonical_word"] = c.is_sphere() ? "S0" : render(c.canonical_word);
  j["moves"] = ordered_json::array();
  for (const auto& m : c.trace.moves) j["moves"].push_back(move_json(m));
  return j;
}

inline std::string map_dot(const RibbonMap& map) {
  std::ostringstream out;
  const auto r = surface_report(map);
  out << "graph ribbon {\n";
  out << "  // V=" << r.vertices << " m=" << r.edges << " F=" << r.faces << " chi=" << r.chi << " genus=" << r.genus << "\n";
  for (std::size_t f = 0; f < r.face_words.size(); ++f) out << "  // face " << f << ": " << render(r.face_words[f]) << "\n";
  for (std::size_t v = 0; v < map.num_vertices(); ++v) out << "  v" << v << ";\n";
  for (std::size_t k = 0; k < map.num_edges(); ++k) {
    out << "  v" << map.tail(forward_dart(k)) << " -- v" << map.head(forward_dart(k)) << " [label=\"" << map.label(k) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline constexpr std::string_view cayley_cell_convention =
    "one cell per (base vertex, relator) whose boundary loop lies inside the ball";

inline ordered_json cayley_json(const CayleyBall& ball) {
  ordered_json j;
  j["generators"] = ball.generators;
  j["relators"] = ordered_json::array();
  for (const auto& r : ball.relators) j["relators"].push_back(render(r, ball.generators));
  j["radius"] = ball.radius;
  j["cell_convention"] = cayley_cell_convention;
  j["vertices"] = ordered_json::array();
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    ordered_json x;
    x["id"] = v;
    x["word"] = render(ball.vertices[v], ball.generators);
    x["depth"] = ball.depth[v];
    j["vertices"].push_back(std::move(x));
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : ball.edges) {
    ordered_json x;
    x["source"] = e.source;
    x["label"] = ball.generators[e.generator];
    x["target"] = e.target;
    j["edges"].push_back(std::move(x));
  }
  j["cells"] = ordered_json::array();
  for (const auto& c : ball.cells) {
    ordered_json x;
    x["base"] = c.base;
    x["relator"] = c.relator;
    x["cycle"] = c.cycle;
    j["cells"].push_back(std::move(x));
  }
  return j;
}

inline std::string cayley_dot(const CayleyBall& ball) {
  std::ostringstream out;
  out << "digraph cayley {\n";
  out << "  // radius " << ball.radius << ", " << ball.vertices.size() << " vertices, " << ball.edges.size() << " edges, "
      << ball.cells.size() << " cells\n";
  out << "  // " << cayley_cell_convention << "\n";
  for (const auto& c : ball.cells) {
    out << "  // cell base=n" << c.base << " relator=" << c.relator << " cycle:";
    for (auto v : c.cycle) out << " n" << v;
    out << "\n";
  }
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    out << "  n" << v << " [label=\"" << render(ball.vertices[v], ball.generators) << "\"];\n";
  }
  for (const auto& e : ball.edges) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\"" << ball.generators[e.generator] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ribbon
