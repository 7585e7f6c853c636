#include <algorithm>
#include <set>

#include "doctest.h"
#include "tetralab/error.hpp"
#include "tetralab/hypercube.hpp"

using namespace tetralab;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Orientation straight from the word text: rank of the fixed position among
// the parent's stars, compared with the alternating pattern 0,1,0,1,...
bool incoming_by_text(const std::string& g, const std::string& f) {
  int rank = 0;
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g[p] == '*') ++rank;
    if (g[p] == '*' && f[p] != '*') return (f[p] - '0') == (rank % 2 == 0 ? 1 : 0);
  }
  throw std::logic_error("not a facet");
}

std::vector<std::string> all_words(int N, int k) {
  std::vector<std::string> out;
  std::string w(N, '0');
  std::function<void(int, int)> rec = [&](int p, int stars) {
    if (p == N) {
      if (stars == k) out.push_back(w);
      return;
    }
    for (char c : {'0', '1', '*'}) {
      w[p] = c;
      rec(p + 1, stars + (c == '*'));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("face words parse and print") {
  const auto f = FaceWord::parse("0*1*");
  CHECK(f.str() == "0*1*");
  CHECK(f.dimension() == 2);
  CHECK(f.free_positions() == std::vector<int>{1, 3});
  CHECK(f.rank_of(3) == 2);
  CHECK_THROWS_AS(FaceWord::parse("01x"), UsageError);
}

TEST_CASE("face enumeration sizes") {
  for (int N = 0; N <= 6; ++N)
    for (int k = 0; k <= N; ++k) CHECK(enumerate_faces(N, k).size() == static_cast<std::size_t>(binomial(N, k) << (N - k)));
  std::vector<std::string> sq;
  for (const auto& f : enumerate_faces(2, 1)) sq.push_back(f.str());
  std::sort(sq.begin(), sq.end());
  CHECK(sq == std::vector<std::string>{"*0", "*1", "0*", "1*"});
  CHECK(enumerate_faces(4, 1).size() == 32);
  CHECK_THROWS_AS(enumerate_faces(9, 1), UsageError);
}

TEST_CASE("orientation rule") {
  CHECK(orientation(FaceWord::parse("0***"), FaceWord::parse("01**")) == Orientation::Outgoing);
  CHECK(orientation(FaceWord::parse("*1**"), FaceWord::parse("01**")) == Orientation::Incoming);
  CHECK(orientation(FaceWord::parse("***"), FaceWord::parse("*1*")) == Orientation::Incoming);
  CHECK_THROWS(orientation(FaceWord::parse("0**"), FaceWord::parse("1*0")));
}

TEST_CASE("orientation agrees with a text-level oracle and splits facets evenly") {
  for (int N = 1; N <= 5; ++N)
    for (int n = 1; n <= N; ++n)
      for (const auto& g : all_words(N, n)) {
        const auto face = FaceWord::parse(g);
        int in = 0, out = 0;
        for (const auto& fc : facets(face)) {
          const bool expect = incoming_by_text(g, fc.face.str());
          CHECK((fc.orientation == Orientation::Incoming) == expect);
          (expect ? in : out)++;
        }
        CHECK(in == n);
        CHECK(out == n);
      }
}

TEST_CASE("component graph chains") {
  const auto g2 = component_graph(2);
  CHECK(g2.component_count == 2);
  std::set<std::string> left, right;
  for (const auto& f : g2.left.chain) left.insert(f.str());
  for (const auto& f : g2.right.chain) right.insert(f.str());
  CHECK(left == std::set<std::string>{"0**", "*1*", "**0"});
  CHECK(right == std::set<std::string>{"1**", "*0*", "**1"});
  CHECK(g2.left.transitive_tournament);

  const auto g3 = component_graph(3);
  std::vector<std::string> chain;
  for (const auto& f : g3.left.chain) chain.push_back(f.str());
  CHECK(chain == std::vector<std::string>{"0***", "*1**", "**0*", "***1"});

  for (int n = 1; n <= 5; ++n) {
    const auto g = component_graph(n);
    CHECK(g.component_count == 2);
    // every edge joins members of the same component and respects the chain order
    for (const auto& e : g.graph.edges) {
      for (const auto* c : {&g.left, &g.right}) {
        auto a = std::find(c->chain.begin(), c->chain.end(), e.from);
        auto b = std::find(c->chain.begin(), c->chain.end(), e.to);
        if (a != c->chain.end() || b != c->chain.end()) {
          REQUIRE(a != c->chain.end());
          REQUIRE(b != c->chain.end());
          CHECK(a < b);
        }
      }
      CHECK(orientation(e.from, e.via) == Orientation::Outgoing);
      CHECK(orientation(e.to, e.via) == Orientation::Incoming);
    }
    // edges of a transitive tournament on n+1 vertices, twice
    CHECK(g.graph.edges.size() == static_cast<std::size_t>(n * (n + 1)));
  }
}

TEST_CASE("absolutely incoming faces") {
  auto count = [](int N, int k, bool in) {
    int c = 0;
    for (const auto& f : enumerate_faces(N, k)) c += in ? is_absolutely_incoming(N, f) : is_absolutely_outgoing(N, f);
    return c;
  };
  CHECK(count(4, 2, true) == 6);
  CHECK(count(3, 1, true) == 3);
  CHECK_FALSE(is_absolutely_incoming(3, FaceWord::parse("**1")));

  // brute force over parents, and the absolute-position pattern
  for (int N = 2; N <= 6; ++N)
    for (int k = 0; k < N; ++k)
      for (const auto& f : enumerate_faces(N, k)) {
        bool outgoing_somewhere = false;
        for (const auto& g : enumerate_faces(N, k + 1))
          if (g.contains(f) && orientation(g, f) == Orientation::Outgoing) outgoing_somewhere = true;
        CHECK(is_absolutely_incoming(N, f) == !outgoing_somewhere);
        CHECK(matches_absolute_tau_pattern(f) == is_absolutely_incoming(N, f));
      }
}

TEST_CASE("each absolutely incoming face is incoming for one facet per component") {
  for (int n = 2; n <= 5; ++n) {
    const auto g = component_graph(n);
    for (const auto& f : enumerate_faces(n + 1, n - 1)) {
      if (!is_absolutely_incoming(n + 1, f)) continue;
      for (const auto* c : {&g.left, &g.right}) {
        int hits = 0;
        for (const auto& facet : c->chain)
          if (facet.contains(f) && orientation(facet, f) == Orientation::Incoming) ++hits;
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("flow graphs are acyclic with sources first") {
  for (int N = 1; N <= 6; ++N)
    for (int n = 1; n <= N; ++n) {
      const auto fg = flow_graph(N, n);
      std::vector<std::size_t> pos(fg.vertices.size());
      for (std::size_t i = 0; i < fg.order.size(); ++i) pos[fg.order[i]] = i;
      for (const auto& [a, b] : fg.edges) CHECK(pos[a] < pos[b]);
    }
  const auto sq = flow_graph(2, 1);
  CHECK(sq.vertices.size() == 8);
  CHECK(sq.edges.size() == 8);
  const auto g = flow_graph(3, 2);
  std::size_t last_in = 0, first_out = g.order.size();
  for (std::size_t i = 0; i < g.order.size(); ++i) {
    const auto& f = g.vertices[g.order[i]];
    if (f.dimension() != 1) continue;
    if (is_absolutely_incoming(3, f)) last_in = std::max(last_in, i);
    if (is_absolutely_outgoing(3, f)) first_out = std::min(first_out, i);
  }
  CHECK(last_in < first_out);
}

TEST_CASE("topological order reports cycles") {
  auto name = [](std::size_t i) { return std::to_string(i); };
  CHECK_THROWS_AS(topological_order(3, {{0, 1}, {1, 2}, {2, 0}}, std::less<>(), name), StructuralError);
}

TEST_CASE("incidence census along the left chain") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& row : i_configuration_census(n)) {
      CHECK(row.matches());
      CHECK(row.expected == std::array<int, 4>{n - row.k + 1, row.k - 1, row.k - 1, n - row.k + 1});
    }
  const auto c3 = i_configuration_census(3);
  CHECK(c3.front().counts == std::array<int, 4>{3, 0, 0, 3});
  CHECK(c3.back().counts == std::array<int, 4>{0, 3, 3, 0});
  CHECK(i_configuration_census(2)[1].counts == std::array<int, 4>{1, 1, 1, 1});
}
