#include "doctest.h"

#include <set>
#include <vector>

#include "gch/oriented_graph.hpp"
#include "oracle.hpp"

using namespace gch;

namespace {

OrientedGraph make(int n_param, int V, std::vector<Edge> edges) {
    return OrientedGraph{n_param, V, std::move(edges)};
}

/* K4 minus one edge */
OrientedGraph diamond() {
    return make(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

/* 5-cycle with one chord */
OrientedGraph house() {
    return make(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
}

/* two triangles sharing one vertex */
OrientedGraph butterfly() {
    return make(2, 5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

OrientedGraph k23() {
    return make(2, 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

bool has_isolated(const OrientedGraph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (auto& [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (deg[v] == 0) return true;
    return false;
}

void check_against_oracle(const OrientedGraph& g) {
    auto info = oracle::graph_class(g);
    Canon c = canonicalize(g);
    if (info.zero) {
        CHECK(c.is_zero());
        return;
    }
    REQUIRE(!c.is_zero());
    auto it = info.signs_by_key.find(c.key.edges);
    REQUIRE(it != info.signs_by_key.end());
    REQUIRE(it->second.size() == 1);
    CHECK(*it->second.begin() == c.sign);
}

} // namespace

TEST_SUITE("graph_core") {

TEST_CASE("canonicalize matches the all-labelings oracle") {
    for (int V : {3, 4, 5}) {
        std::vector<Edge> pairs;
        for (int a = 0; a < V; ++a)
            for (int b = a + 1; b < V; ++b) pairs.emplace_back(a, b);
        const int P = static_cast<int>(pairs.size());
        for (int mask = 0; mask < (1 << P); ++mask) {
            OrientedGraph g{2, V, {}};
            for (int i = 0; i < P; ++i)
                if (mask & (1 << i)) g.edges.push_back(pairs[i]);
            if (g.edges.empty() || has_isolated(g)) continue;
            check_against_oracle(g);
        }
    }
}

TEST_CASE("parallel edges vanish") {
    OrientedGraph g = make(2, 3, {{0, 1}, {1, 2}, {0, 1}});
    CHECK(canonicalize(g).is_zero());
    OrientedGraph theta = make(2, 2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(canonicalize(theta).is_zero());
}

TEST_CASE("loop classes vanish except length 1 mod 4") {
    for (int j = 3; j <= 10; ++j) {
        Canon c = canonicalize(loop_graph(2, j));
        if (j % 4 == 1)
            CHECK(!c.is_zero());
        else
            CHECK(c.is_zero());
    }
}

TEST_CASE("frozen small classes") {
    CHECK(canonicalize(loop_graph(2, 3)).is_zero()); // triangle
    CHECK(!canonicalize(complete_graph(2, 4)).is_zero());
    CHECK(!canonicalize(diamond()).is_zero());
    CHECK(!canonicalize(house()).is_zero());
    CHECK(canonicalize(butterfly()).is_zero());
    CHECK(canonicalize(k23()).is_zero());
}

TEST_CASE("canonical form is a fixed point") {
    for (const OrientedGraph& g :
         {complete_graph(2, 4), diamond(), house(), loop_graph(2, 5)}) {
        Canon c = canonicalize(g);
        REQUIRE(!c.is_zero());
        Canon again = canonicalize(c.key.graph());
        CHECK(again.sign == 1);
        CHECK(again.key == c.key);
    }
}

TEST_CASE("relabeling leaves the canonical form unchanged") {
    std::vector<int> perm{2, 0, 3, 1};
    for (const OrientedGraph& g : {complete_graph(2, 4), diamond()}) {
        Canon a = canonicalize(g);
        Canon b = canonicalize(oracle::relabel(g, perm));
        CHECK(a.sign == b.sign);
        CHECK(a.key == b.key);
    }
    std::vector<int> perm5{4, 2, 0, 1, 3};
    Canon a = canonicalize(house());
    Canon b = canonicalize(oracle::relabel(house(), perm5));
    CHECK(a.sign == b.sign);
    CHECK(a.key == b.key);
}

TEST_CASE("edge reorder flips the sign") {
    OrientedGraph g = diamond();
    std::swap(g.edges[0], g.edges[1]);
    Canon a = canonicalize(diamond());
    Canon b = canonicalize(g);
    CHECK(a.key == b.key);
    CHECK(a.sign == -b.sign);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(canonicalize(make(2, 2, {{0, 0}, {0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(make(2, 3, {{0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(canonicalize(make(2, 2, {{0, 2}})),
                    std::invalid_argument);
}

TEST_CASE("degree and parity bookkeeping") {
    GraphKey k4 = canonicalize(complete_graph(2, 4)).key;
    CHECK(k4.degree() == 4 * 3 - 3 * 6); // 2n(V-1) - (2n-1)E with n = 2
    GraphKey c5 = canonicalize(loop_graph(2, 5)).key;
    CHECK(c5.degree() == 4 * 4 - 3 * 5);
    GraphKey k4n1 = canonicalize(complete_graph(1, 4)).key;
    CHECK(k4n1.degree() == 2 * 3 - 1 * 6);
}

TEST_CASE("to_element drops zero classes and carries coefficients") {
    CHECK(to_element(loop_graph(2, 3)).is_zero());
    GCElement e = to_element(complete_graph(2, 4), Coeff(3) / 2);
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->second == Coeff(3) / 2);
}

TEST_CASE("enumerate matches the subset oracle") {
    for (int V = 3; V <= 6; ++V) {
        int maxE = V * (V - 1) / 2;
        for (int E = V; E <= std::min(maxE, V + 3); ++E) {
            auto got = enumerate_gc(2, V, E, 2);
            std::set<GraphKey> got_set(got.begin(), got.end());
            CHECK(got_set == oracle::enumerate_classes(2, V, E, 2));
            CHECK(got.size() == got_set.size());
        }
        for (int E = (3 * V + 1) / 2; E <= maxE; ++E) {
            auto got = enumerate_gc(2, V, E, 3);
            std::set<GraphKey> got_set(got.begin(), got.end());
            CHECK(got_set == oracle::enumerate_classes(2, V, E, 3));
        }
    }
}

TEST_CASE("frozen bidegree bases") {
    CHECK(enumerate_gc(2, 3, 3, 2).empty());
    auto c5 = enumerate_gc(2, 5, 5, 2);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0] == canonicalize(loop_graph(2, 5)).key);
    auto d = enumerate_gc(2, 4, 5, 2);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == canonicalize(diamond()).key);
    auto k4 = enumerate_gc(2, 4, 6, 3);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == canonicalize(complete_graph(2, 4)).key);
    for (int j = 3; j <= 10; ++j) {
        auto loops = enumerate_gc(2, j, j, 2);
        CHECK(loops.size() == (j % 4 == 1 ? 1u : 0u));
    }
}

TEST_CASE("frozen class counts at larger sizes") {
    CHECK(enumerate_gc(2, 6, 8, 2).size() == 4);
    CHECK(enumerate_gc(2, 6, 9, 2).size() == 9);
    CHECK(enumerate_gc(2, 7, 8, 2).size() == 2);
    CHECK(enumerate_gc(2, 7, 9, 2).size() == 18);
    CHECK(enumerate_gc(2, 8, 9, 2).size() == 6);
    CHECK(enumerate_gc(2, 6, 9, 3).empty());
    CHECK(enumerate_gc(2, 7, 11, 3).size() == 1);
}

TEST_CASE("enumerate handles infeasible ranges") {
    CHECK(enumerate_gc(2, 4, 7, 2).empty());  // above the simple-graph cap
    CHECK(enumerate_gc(2, 5, 4, 2).empty());  // below the valence bound
    CHECK(enumerate_gc(2, 2, 1, 2).empty());
    EnumLimits tiny;
    tiny.max_nodes = 10;
    CHECK_THROWS_AS(enumerate_gc(2, 7, 10, 2, tiny), ResourceLimitError);
}

} // TEST_SUITE
