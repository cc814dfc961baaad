// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/cli.hpp"
#include "support.hpp"

namespace {

using namespace ribbon;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::vector<std::string> shipped_documents() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(RIBBON_DATA_DIR)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool all_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Connectivity from raw tail/head data, independent of map validation.
bool oracle_connected(const RibbonMap& map) {
  std::vector<std::size_t> parent(map.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t k = 0; k < map.num_edges(); ++k) parent[find(map.tail(forward_dart(k)))] = find(map.head(forward_dart(k)));
  for (std::size_t v = 0; v < map.num_vertices(); ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

std::vector<RibbonMap> corpus() { return testing::mixed_corpus(1000, 2024); }

// 1. Petal family
Outcome petal_family() {
  Outcome o;
  for (std::size_t g = 0; g <= 6; ++g) {
    const auto p = petal(g);
    const auto tag = "g=" + std::to_string(g) + ": ";
    o.expect(p.num_edges() == 2 * g, tag + "m");
    o.expect(euler_characteristic(p) == 2 - 2 * static_cast<long>(g), tag + "chi");
    o.expect(genus(p) == g, tag + "genus");
    if (g == 0) continue;
    o.expect(p.num_vertices() == 1, tag + "V");
    o.expect(face_count(p) == 1, tag + "F");
    std::string expected;
    for (std::size_t i = 0; i < g; ++i) {
      const char a = static_cast<char>('a' + 2 * i);
      const char b = static_cast<char>(a + 1);
      for (char c : {a, b, static_cast<char>(a - 'a' + 'A'), static_cast<char>(b - 'a' + 'A')}) {
        expected += expected.empty() ? "" : " ";
        expected += c;
      }
    }
    o.expect(render(polygon_word(p)) == expected, tag + "polygon word " + render(polygon_word(p)));
  }
  return o;
}

// 2. Face partition
Outcome face_partition() {
  Outcome o;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto map = testing::random_rotation_map(1 + rng() % 12, rng);
    std::vector<int> hits(map.num_darts(), 0);
    std::size_t total = 0;
    for (const auto& f : trace_faces(map)) {
      total += f.darts.size();
      for (Dart d : f.darts) ++hits[d];
    }
    o.expect(total == map.num_darts(), "lengths do not sum to 2m");
    o.expect(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }), "faces do not partition the darts");
    o.expect(trace_faces(map).size() == testing::oracle_face_count(map.rotation()), "face count disagrees with oracle");
  }
  return o;
}

// 3. Move invariance
Outcome move_invariance() {
  Outcome o;
  std::size_t deletions = 0;
  std::size_t contractions = 0;
  for (const auto& map : corpus()) {
    if (map.num_edges() == 0) continue;
    const auto V = map.num_vertices();
    const auto m = map.num_edges();
    const auto F = face_count(map);
    const long chi = testing::oracle_chi(map);
    if (auto step = delete_face_merging_edge(map)) {
      ++deletions;
      const auto& d = step->first;
      o.expect(d.num_vertices() == V && d.num_edges() == m - 1 && face_count(d) == F - 1, "delete changed (V, m, F) wrongly");
      o.expect(testing::oracle_chi(d) == chi, "delete changed chi");
      o.expect(oracle_connected(d), "delete disconnected the map");
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (map.tail(forward_dart(k)) == map.head(forward_dart(k))) continue;
      ++contractions;
      const auto c = contract_edge(map, map.label(k));
      o.expect(c.num_vertices() == V - 1 && c.num_edges() == m - 1 && face_count(c) == F, "contract changed (V, m, F) wrongly");
      o.expect(testing::oracle_chi(c) == chi, "contract changed chi");
      o.expect(oracle_connected(c), "contract disconnected the map");
      break;
    }
  }
  o.expect(deletions > 100 && contractions > 100, "corpus exercised too few moves");
  if (o.ok) o.detail = std::to_string(deletions) + " deletions, " + std::to_string(contractions) + " contractions";
  return o;
}

// 4. Classification round trip
Outcome classification_round_trip() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t g = static_cast<std::size_t>(i % 6);
    const std::size_t k = rng() % 31;
    const std::uint64_t seed = rng();
    const auto map = random_filling_map(g, k, seed);
    const auto tag = "g=" + std::to_string(g) + " k=" + std::to_string(k) + ": ";
    const auto c = classify(map);
    o.expect(c.genus == g, tag + "wrong genus");
    o.expect(c.canonical_word.size() == 4 * g, tag + "wrong word length");
    o.expect(c.is_sphere() || is_canonical(c.canonical_word), tag + "not canonical");
    const auto [reduced, trace] = reduce_to_one_vertex_one_face(map);
    if (reduced.num_edges() == 0) continue;
    const auto start = polygon_word(reduced);
    const auto [w, word_trace] = normalize(start);
    for (const auto& step : replay_steps(start, word_trace)) {
      const long expected = 2 - 2 * static_cast<long>(g);
      o.expect(word_euler_characteristic(step) == expected, tag + "intermediate word changed chi");
      o.expect(testing::oracle_polygon_chi(step) == expected, tag + "polygon oracle disagrees");
    }
    o.expect(cyclically_equal(replay(map, c.trace), c.canonical_word), tag + "trace does not replay");
  }
  return o;
}

// 5. Linkedness
Outcome linkedness() {
  Outcome o;
  std::size_t checked = 0;
  auto check = [&](const RibbonMap& map) {
    if (map.num_edges() == 0 || map.num_vertices() != 1 || face_count(map) != 1) return;
    ++checked;
    o.expect(every_edge_linked(polygon_word(map)), "unlinked edge in " + render(polygon_word(map)));
  };
  for (const auto& map : corpus()) {
    check(map);
    if (map.num_edges() > 0) check(reduce_to_one_vertex_one_face(map).first);
  }
  for (std::size_t g = 1; g <= 6; ++g) check(petal(g));
  if (o.ok) o.detail = std::to_string(checked) + " one-vertex one-face maps";
  return o;
}

// 6. Presentations
Outcome presentations() {
  Outcome o;
  for (std::size_t g = 0; g <= 6; ++g) {
    o.expect(equal_up_to_renaming(pi1_presentation(petal(g), 0), surface_group(g)), "petal(" + std::to_string(g) + ")");
  }
  for (const auto& map : corpus()) {
    const auto p = pi1_presentation(map, 0);
    const long deficiency = static_cast<long>(p.generators.size()) - static_cast<long>(p.relators.size());
    o.expect(deficiency == 2 * static_cast<long>(genus(map)) - 1, "deficiency");
    o.expect(static_cast<long>(p.generators.size()) ==
                 static_cast<long>(map.num_edges()) - static_cast<long>(map.num_vertices()) + 1,
             "generator count");
  }
  return o;
}

// 7. Word problem
Outcome word_problem() {
  Outcome o;
  for (std::size_t g = 1; g <= 4; ++g) {
    o.expect(is_trivial_word(surface_group(g).relators[0], surface_group(g)), "relator of A_" + std::to_string(g));
  }
  std::mt19937_64 rng(7);
  std::size_t words = 0;
  while (words < 1000) {
    const std::size_t g = 2 + words % 2;
    const auto p = surface_group(g);
    GroupWord w;
    for (std::size_t j = 0, len = 1 + rng() % 8; j < len; ++j) w.letters.push_back(make_letter(rng() % (2 * g), rng() & 1U));
    w = free_reduce(w);
    if (all_zero(abelianization(w, 2 * g))) continue;
    ++words;
    o.expect(!is_trivial_word(w, p), "word with nonzero abelianization reported trivial");
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t g = 2 + static_cast<std::size_t>(i % 2);
    const auto p = surface_group(g);
    GroupWord w;
    for (std::size_t c = 0, count = 1 + rng() % 4; c < count; ++c) {
      GroupWord conj;
      for (std::size_t j = 0, len = rng() % 7; j < len; ++j) conj.letters.push_back(make_letter(rng() % (2 * g), rng() & 1U));
      const GroupWord r = (rng() & 1U) ? p.relators[0] : inverse(p.relators[0]);
      w = w * conj * r * inverse(conj);
    }
    o.expect(is_trivial_word(w, p), "product of conjugates reported nontrivial");
  }
  const auto a1 = surface_group(1);
  const auto a2 = surface_group(2);
  o.expect(is_trivial_word(parse_group_word("a b A B", a1.generators), a1), "commutator in A_1");
  o.expect(!is_trivial_word(parse_group_word("a b A B", a2.generators), a2), "commutator in A_2");
  return o;
}

// 8. Cayley balls
Outcome cayley_balls() {
  Outcome o;
  const std::vector<std::size_t> free_counts{1, 5, 17, 53, 161, 485};
  for (std::size_t r = 0; r <= 5; ++r) {
    const auto ball = cayley_ball(free_group(2), r);
    std::size_t pow3 = 1;
    for (std::size_t i = 0; i < r; ++i) pow3 *= 3;
    o.expect(ball.vertices.size() == free_counts[r] && free_counts[r] == 1 + 2 * (pow3 - 1), "free count r=" + std::to_string(r));
    o.expect(ball.edges.size() + 1 == ball.vertices.size() && ball.cells.empty(), "free ball is not a tree");
  }
  for (long r = 0; r <= 10; ++r) {
    const auto ball = cayley_ball(parse_group_spec("zxz"), static_cast<std::size_t>(r));
    o.expect(ball.vertices.size() == static_cast<std::size_t>(2 * r * r + 2 * r + 1) &&
                 ball.vertices.size() == testing::taxicab_ball_size(r),
             "ZxZ count r=" + std::to_string(r));
    o.expect(ball.cells.size() == testing::unit_squares_in_taxicab_ball(r), "ZxZ cells r=" + std::to_string(r));
    for (const auto& c : ball.cells) o.expect(c.cycle.size() == 4, "ZxZ cell boundary length");
  }
  o.expect(cayley_ball(parse_group_spec("zxz"), 2).cells.size() == 4, "ZxZ radius-2 cells");
  o.expect(cayley_ball(surface_group(2), 1).vertices.size() == 9, "A_2 radius 1");
  return o;
}

// 9. Isomorphism
Outcome isomorphism() {
  Outcome o;
  std::vector<RibbonMap> maps;
  for (const auto& path : shipped_documents()) {
    auto m = parse_graph(slurp(path));
    if (m.num_edges() > 0) maps.push_back(std::move(m));
  }
  auto extra = testing::mixed_corpus(30, 99);
  for (auto& m : extra) {
    if (m.num_edges() > 0) maps.push_back(std::move(m));
  }
  std::mt19937_64 rng(9);
  std::size_t verified = 0;
  for (const auto& map : maps) {
    const auto code = canonical_encoding(map);
    for (int i = 0; i < 200; ++i) {
      const auto other = testing::relabeled(map, rng);
      o.expect(canonical_encoding(other) == code, "encoding changed under relabeling");
      if (i % 20 == 0) {
        const auto beta = are_isomorphic(map, other);
        o.expect(beta.has_value(), "relabeled copy not found isomorphic");
        if (beta) {
          ++verified;
          o.expect(verify_bijection(map, other, *beta), "returned bijection does not commute with sigma and iota");
        }
      }
    }
  }
  o.expect(!are_isomorphic(testing::wedge_split(), testing::wedge_linked()), "wedges reported isomorphic");
  o.expect(canonical_encoding(testing::wedge_split()) != canonical_encoding(testing::wedge_linked()), "wedges share an encoding");
  if (o.ok) o.detail = std::to_string(maps.size()) + " maps, " + std::to_string(verified) + " bijections verified";
  return o;
}

// 10. CLI round trip
Outcome cli_round_trip() {
  Outcome o;
  const auto docs = shipped_documents();
  o.expect(docs.size() >= 5, "too few shipped documents");
  for (const auto& path : docs) {
    const std::string text = slurp(path);
    o.expect(serialize(parse_document(text)) == text, path + " is not byte-stable");
    for (const char* cmd : {"classify", "report"}) {
      const auto a = dispatch({cmd, path, "--json"});
      const auto b = dispatch({cmd, path, "--json"});
      o.expect(a.exit_code == 0 && a.out == b.out, std::string(cmd) + " not deterministic on " + path);
    }
  }
  const std::vector<std::string> random_args{"random", "--genus", "2", "--moves", "15", "--seed", "77"};
  const auto r1 = dispatch(random_args);
  o.expect(r1.out == dispatch(random_args).out, "random not deterministic");
  o.expect(serialize(parse_document(r1.out)) == r1.out, "random output not byte-stable");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::optional<double> limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "petal family", 1.0, petal_family},
      {2, "face partition", 5.0, face_partition},
      {3, "move invariance", 10.0, move_invariance},
      {4, "classification round trip", 30.0, classification_round_trip},
      {5, "linkedness", std::nullopt, linkedness},
      {6, "presentations", std::nullopt, presentations},
      {7, "word problem", 10.0, word_problem},
      {8, "cayley balls", 5.0, cayley_balls},
      {9, "isomorphism", std::nullopt, isomorphism},
      {10, "cli round trip", std::nullopt, cli_round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds && secs > *c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(*c.limit_seconds) + " s");
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %d (%s): %.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds ? (" (limit " + std::to_string(static_cast<int>(*c.limit_seconds)) + " s)").c_str() : "",
                o.detail.empty() ? "" : (" - " + o.detail).c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
