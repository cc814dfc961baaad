#pragma once

// Command dispatch for the `ribbon` tool. Exit codes: 0 success, 1 domain
// error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ribbon/cayley.hpp"
#include "ribbon/classify.hpp"
#include "ribbon/error.hpp"
#include "ribbon/group.hpp"
#include "ribbon/io.hpp"
#include "ribbon/iso.hpp"
#include "ribbon/map.hpp"
#include "ribbon/surface.hpp"

namespace ribbon {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::syntax_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RibbonMap load_map(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

}  // namespace detail

inline CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out;

  CLI::App app{"Ribbon graphs, surface classification and surface groups", "ribbon"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string file;
  std::string file_b;
  std::string spec;
  std::string word;
  std::string word_b;
  std::size_t base = 0;
  std::size_t radius = 0;
  std::size_t g = 0;
  std::size_t moves = 0;
  std::uint64_t seed = 0;
  bool dot = false;

  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Graph document (JSON)")->required();
    sub->add_flag("--json", json, "Emit JSON instead of text");
    return sub;
  };
  auto* validate = with_file("validate", "Check a graph document");
  auto* faces = with_file("faces", "List the faces of a map");
  auto* genus_cmd = with_file("genus", "Genus of the surface a map fills");
  auto* report = with_file("report", "Vertices, edges, faces, Euler characteristic and genus");
  auto* refine_cmd = with_file("refine", "Subdivide every edge");
  auto* classify_cmd = with_file("classify", "Reduce to one polygon and normalize its word");
  auto* emit_dot = with_file("emit-dot", "Write the map as a DOT graph");

  auto* iso = app.add_subcommand("iso", "Decide whether two maps are isomorphic");
  iso->add_option("a", file, "First graph document")->required();
  iso->add_option("b", file_b, "Second graph document")->required();
  iso->add_flag("--json", json, "Emit JSON instead of text");

  auto* pi1 = with_file("pi1", "Fundamental group presentation");
  pi1->add_option("--base", base, "Base vertex");

  auto* trivial = app.add_subcommand("trivial", "Decide whether a word is trivial in a group");
  trivial->add_option("--group", spec, "free:k, surface:g or zxz")->required();
  trivial->add_option("word", word, "Word, e.g. abAB or \"a1 b1 a1' b1'\"")->required();
  trivial->add_flag("--json", json, "Emit JSON instead of text");

  auto* homotopic_cmd = app.add_subcommand("homotopic", "Decide whether two paths in a map are homotopic");
  homotopic_cmd->add_option("file", file, "Graph document (JSON)")->required();
  homotopic_cmd->add_option("w1", word, "First path as a word over edge labels")->required();
  homotopic_cmd->add_option("w2", word_b, "Second path")->required();
  homotopic_cmd->add_option("--base", base, "Base vertex (also the start of constant paths)");
  homotopic_cmd->add_flag("--json", json, "Emit JSON instead of text");

  auto* cayley = app.add_subcommand("cayley", "Ball of a Cayley 2-complex");
  cayley->add_option("--group", spec, "free:k, surface:g or zxz")->required();
  cayley->add_option("--radius", radius, "Ball radius")->required();
  cayley->add_flag("--dot", dot, "Emit DOT instead of JSON");
  cayley->add_flag("--json", json, "Emit JSON (default)");

  auto* petal_cmd = app.add_subcommand("petal", "Graph document of the petal map of genus g");
  petal_cmd->add_option("g", g, "Genus")->required();

  auto* random_cmd = app.add_subcommand("random", "Random map of a given genus");
  random_cmd->add_option("--genus", g, "Genus")->required();
  random_cmd->add_option("--moves", moves, "Number of random inverse moves")->required();
  random_cmd->add_option("--seed", seed, "Random seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + " (run with --help for usage)\n";
    return result;
  }

  auto emit = [&out](const ordered_json& j) { out << j.dump(2) << "\n"; };

  try {
    if (validate->parsed()) {
      auto doc = parse_document(detail::read_file(file));
      auto rep = check_rotation_lists(doc.edges, doc.rotations);
      if (json) {
        ordered_json j;
        j["ok"] = rep.ok();
        j["issues"] = ordered_json::array();
        for (const auto& i : rep.issues) j["issues"].push_back({{"code", to_string(i.code)}, {"message", i.message}});
        emit(j);
      } else if (rep.ok()) {
        out << "ok\n";
      } else {
        for (const auto& i : rep.issues) out << to_string(i.code) << ": " << i.message << "\n";
      }
      result.exit_code = rep.ok() ? 0 : 1;
    } else if (faces->parsed()) {
      auto r = surface_report(detail::load_map(file));
      if (json) {
        emit(report_json(r)["faces"]);
      } else {
        for (std::size_t f = 0; f < r.face_words.size(); ++f) {
          out << "face " << f << " (" << r.face_words[f].size() << "): " << render(r.face_words[f]) << "\n";
        }
      }
    } else if (genus_cmd->parsed()) {
      const auto gen = genus(detail::load_map(file));
      if (json) {
        emit({{"genus", gen}});
      } else {
        out << "genus: " << gen << "\n";
      }
    } else if (report->parsed()) {
      auto r = surface_report(detail::load_map(file));
      if (json) {
        emit(report_json(r));
      } else {
        out << "V: " << r.vertices << "\nm: " << r.edges << "\nF: " << r.faces << "\nchi: " << r.chi << "\ngenus: " << r.genus << "\n";
        for (std::size_t f = 0; f < r.face_words.size(); ++f) out << "face " << f << ": " << render(r.face_words[f]) << "\n";
      }
    } else if (refine_cmd->parsed()) {
      out << serialize_graph(refine(detail::load_map(file)));
    } else if (classify_cmd->parsed()) {
      auto c = classify(detail::load_map(file));
      if (json) {
        emit(classification_json(c));
      } else {
        out << "genus: " << c.genus << "\ncanonical: " << (c.is_sphere() ? "S0" : render(c.canonical_word)) << "\n";
        out << "moves: " << c.trace.moves.size() << "\n";
        for (const auto& m : c.trace.moves) out << "  " << render_move(m) << "\n";
      }
    } else if (emit_dot->parsed()) {
      out << map_dot(detail::load_map(file));
    } else if (iso->parsed()) {
      const auto a = detail::load_map(file);
      const auto b = detail::load_map(file_b);
      const auto beta = are_isomorphic(a, b);
      if (json) {
        ordered_json j;
        j["isomorphic"] = beta.has_value();
        if (beta) {
          j["mapping"] = ordered_json::object();
          for (Dart d = 0; d < a.num_darts(); ++d) j["mapping"][a.dart_ref(d).token()] = b.dart_ref(beta->mapping[d]).token();
        }
        emit(j);
      } else if (beta) {
        out << "isomorphic\n";
        for (Dart d = 0; d < a.num_darts(); ++d) out << "  " << a.dart_ref(d).token() << " -> " << b.dart_ref(beta->mapping[d]).token() << "\n";
      } else {
        out << "not isomorphic\n";
      }
    } else if (pi1->parsed()) {
      const auto p = pi1_presentation(detail::load_map(file), base);
      if (json) {
        ordered_json j;
        j["generators"] = p.generators;
        j["relators"] = ordered_json::array();
        for (const auto& r : p.relators) j["relators"].push_back(render(r, p.generators));
        emit(j);
      } else {
        out << render(p) << "\n";
      }
    } else if (trivial->parsed()) {
      const auto p = parse_group_spec(spec);
      const bool t = is_trivial_word(parse_group_word(word, p.generators), p);
      if (json) {
        emit({{"trivial", t}});
      } else {
        out << (t ? "trivial" : "nontrivial") << "\n";
      }
    } else if (homotopic_cmd->parsed()) {
      const auto map = detail::load_map(file);
      if (base >= map.num_vertices()) throw Error(ErrorCode::index_out_of_range, "base vertex " + std::to_string(base));
      auto p1 = parse_path(word, map, base);
      auto p2 = parse_path(word_b, map, base);
      if (p1.darts.empty()) p1.start = p2.darts.empty() ? base : p2.start;
      if (p2.darts.empty()) p2.start = p1.start;
      const bool h = homotopic(map, base, p1, p2);
      if (json) {
        emit({{"homotopic", h}});
      } else {
        out << (h ? "homotopic" : "not homotopic") << "\n";
      }
    } else if (cayley->parsed()) {
      const auto ball = cayley_ball(parse_group_spec(spec), radius);
      if (dot) {
        out << cayley_dot(ball);
      } else {
        emit(cayley_json(ball));
      }
    } else if (petal_cmd->parsed()) {
      out << serialize_graph(petal(g), "petal" + std::to_string(g));
    } else if (random_cmd->parsed()) {
      out << serialize_graph(random_filling_map(g, moves, seed));
    }
  } catch (const Error& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.out = out.str();
  return result;
}

}  // namespace ribbon
