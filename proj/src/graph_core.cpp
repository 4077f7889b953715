#include "gch/oriented_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gch/koszul.hpp"

namespace gch {

bool is_connected(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count <= 1) return true;
    std::vector<std::vector<int>> adj(vertex_count);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertex_count;
}

namespace {

/* Backtracking search for the labeling that maximizes the packed adjacency
 * bit string.  Column k encodes label k's adjacency to labels 0..k-1 with
 * the earliest label in the most significant bit, so comparing the column
 * vectors lexicographically compares the full upper-triangle bit string. */
struct CanonSearch {
    int V;
    const std::vector<Edge>& edges;
    std::vector<uint32_t> adj;     // adjacency bitmask per original vertex
    std::vector<int> label2orig;
    std::vector<char> used;
    std::vector<uint32_t> best;    // best column vector found so far
    bool have_best = false;
    std::vector<Edge> canon_edges; // sorted edge list of the best labeling
    bool seen_plus = false, seen_minus = false;

    CanonSearch(int v, const std::vector<Edge>& e) : V(v), edges(e) {
        adj.assign(V, 0);
        for (const auto& [a, b] : edges) {
            adj[a] |= (1u << b);
            adj[b] |= (1u << a);
        }
        label2orig.assign(V, -1);
        used.assign(V, 0);
        best.assign(V, 0);
    }

    void at_leaf() {
        std::vector<int> orig2label(V);
        for (int k = 0; k < V; ++k) orig2label[label2orig[k]] = k;
        std::vector<Edge> relabeled;
        relabeled.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            int x = orig2label[a], y = orig2label[b];
            relabeled.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::vector<Edge> sorted = relabeled;
        int sgn = odd_sort_sign(sorted);
        // Simple graph: equal edges cannot occur here.
        if (!have_best || canon_edges.empty()) canon_edges = sorted;
        if (sgn > 0) seen_plus = true;
        else seen_minus = true;
        have_best = true;
    }

    /* Every surviving path coincides with the best prefix: smaller columns
     * are pruned and a strictly larger column overwrites the best from its
     * depth on, invalidating previously collected leaves. */
    void dfs(int k) {
        if (k == V) {
            at_leaf();
            return;
        }
        std::vector<std::pair<uint32_t, int>> cands;
        cands.reserve(V - k);
        for (int v = 0; v < V; ++v) {
            if (used[v]) continue;
            uint32_t col = 0;
            for (int i = 0; i < k; ++i)
                if (adj[v] & (1u << label2orig[i])) col |= (1u << (k - 1 - i));
            cands.emplace_back(col, v);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first
                                                : a.second < b.second;
                  });
        for (const auto& [col, v] : cands) {
            if (have_best) {
                if (col < best[k]) break; // candidates are sorted descending
                if (col > best[k]) {
                    best[k] = col;
                    std::fill(best.begin() + k + 1, best.end(), 0u);
                    seen_plus = seen_minus = false;
                    canon_edges.clear();
                }
            } else {
                best[k] = col;
            }
            label2orig[k] = v;
            used[v] = 1;
            dfs(k + 1);
            used[v] = 0;
            label2orig[k] = -1;
        }
    }
};

} // namespace

Canon canonicalize(const OrientedGraph& g) {
    const int V = g.vertex_count;
    if (V < 1 || V > 31)
        throw std::invalid_argument("canonicalize: vertex count out of range");
    std::vector<int> valence(V, 0);
    std::set<Edge> simple;
    bool parallel = false;
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || a >= V || b < 0 || b >= V)
            throw std::invalid_argument("canonicalize: endpoint out of range");
        if (a == b)
            throw std::invalid_argument("canonicalize: tadpole edge");
        ++valence[a];
        ++valence[b];
        if (!simple.emplace(std::min(a, b), std::max(a, b)).second)
            parallel = true;
    }
    for (int v = 0; v < V; ++v)
        if (valence[v] == 0)
            throw std::invalid_argument("canonicalize: isolated vertex");
    if (parallel) return Canon{}; // odd swap of the parallel pair

    CanonSearch search(V, g.edges);
    search.dfs(0);
    if (search.seen_plus && search.seen_minus) return Canon{};
    Canon result;
    result.sign = search.seen_plus ? 1 : -1;
    result.key = GraphKey{g.n_param, V, search.canon_edges};
    return result;
}

GCElement to_element(const OrientedGraph& g, const Coeff& c) {
    GCElement r;
    Canon cn = canonicalize(g);
    if (!cn.is_zero()) r.add(cn.key, Coeff(cn.sign) * c);
    return r;
}

OrientedGraph loop_graph(int n_param, int j) {
    OrientedGraph g{n_param, j, {}};
    for (int i = 0; i < j; ++i) g.edges.emplace_back(i, (i + 1) % j);
    return g;
}

OrientedGraph complete_graph(int n_param, int v) {
    OrientedGraph g{n_param, v, {}};
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) g.edges.emplace_back(a, b);
    return g;
}

namespace {

struct EnumSearch {
    int V, E, min_valence, n_param;
    long long max_nodes, nodes = 0;
    std::vector<Edge> pairs;
    std::vector<std::vector<int>> suffix_inc; // pairs >= idx incident to v
    std::vector<int> deg;
    std::vector<Edge> chosen;
    std::set<GraphKey>* out;

    void run() {
        for (int a = 0; a < V; ++a)
            for (int b = a + 1; b < V; ++b) pairs.emplace_back(a, b);
        suffix_inc.assign(pairs.size() + 1, std::vector<int>(V, 0));
        for (int i = static_cast<int>(pairs.size()) - 1; i >= 0; --i) {
            suffix_inc[i] = suffix_inc[i + 1];
            ++suffix_inc[i][pairs[i].first];
            ++suffix_inc[i][pairs[i].second];
        }
        deg.assign(V, 0);
        dfs(0);
    }

    bool feasible(int idx, int remaining) const {
        int total_deficit = 0;
        for (int v = 0; v < V; ++v) {
            int d = min_valence - deg[v];
            if (d <= 0) continue;
            if (d > suffix_inc[idx][v]) return false;
            total_deficit += d;
        }
        return total_deficit <= 2 * remaining;
    }

    void dfs(std::size_t idx) {
        if (++nodes > max_nodes)
            throw ResourceLimitError("enumerate: node limit exceeded");
        int remaining = E - static_cast<int>(chosen.size());
        if (remaining == 0) {
            for (int v = 0; v < V; ++v)
                if (deg[v] < min_valence) return;
            if (!is_connected(V, chosen)) return;
            Canon c = canonicalize(OrientedGraph{n_param, V, chosen});
            if (!c.is_zero()) out->insert(c.key);
            return;
        }
        if (idx >= pairs.size()) return;
        if (static_cast<int>(pairs.size() - idx) < remaining) return;
        if (!feasible(static_cast<int>(idx), remaining)) return;
        // include pairs[idx]
        chosen.push_back(pairs[idx]);
        ++deg[pairs[idx].first];
        ++deg[pairs[idx].second];
        dfs(idx + 1);
        --deg[pairs[idx].first];
        --deg[pairs[idx].second];
        chosen.pop_back();
        // exclude pairs[idx]
        dfs(idx + 1);
    }
};

} // namespace

std::vector<GraphKey> enumerate_gc(int n_param, int vertices, int edge_total,
                                   int min_valence,
                                   const EnumLimits& limits) {
    if (min_valence != 2 && min_valence != 3)
        throw std::invalid_argument("enumerate: min_valence must be 2 or 3");
    std::vector<GraphKey> result;
    if (vertices < 3 || edge_total < 1) return result;
    long long max_edges = 1LL * vertices * (vertices - 1) / 2;
    if (edge_total > max_edges) return result;
    if (2LL * edge_total < 1LL * min_valence * vertices) return result;

    if (min_valence == 2 && edge_total == vertices) {
        // Degree sum forces 2-regularity; connected 2-regular = one cycle.
        Canon c = canonicalize(loop_graph(n_param, vertices));
        if (!c.is_zero()) result.push_back(c.key);
        return result;
    }

    std::set<GraphKey> keys;
    EnumSearch s{vertices, edge_total, min_valence, n_param,
                 limits.max_nodes, 0, {}, {}, {}, {}, &keys};
    s.run();
    result.assign(keys.begin(), keys.end());
    return result;
}

} // namespace gch
