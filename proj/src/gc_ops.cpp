#include "gch/gc_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace gch {

namespace {

/* Edge ends incident to v as (edge index, side) in list order. */
std::vector<std::pair<int, int>> ends_at(const std::vector<Edge>& edges,
                                         int v) {
    std::vector<std::pair<int, int>> r;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].first == v) r.emplace_back(e, 0);
        if (edges[e].second == v) r.emplace_back(e, 1);
    }
    return r;
}

void redirect_end(std::vector<Edge>& edges, std::pair<int, int> end,
                  int target) {
    auto& [a, b] = edges[end.first];
    (end.second == 0 ? a : b) = target;
}

} // namespace

GCElement bullet(const GraphKey& a, const GraphKey& b) {
    if (a.n_param != b.n_param)
        throw std::invalid_argument("bullet: mixed n parameters");
    GCElement out;
    const int V1 = a.vertex_count, V2 = b.vertex_count;
    const int base = V1 - 1;
    for (int v = 0; v < V1; ++v) {
        auto ends = ends_at(a.edges, v);
        const int d = static_cast<int>(ends.size());
        std::vector<int> relab(V1);
        for (int x = 0; x < V1; ++x) relab[x] = x < v ? x : x - 1;
        std::vector<int> phi(d, 0);
        while (true) {
            OrientedGraph g{a.n_param, base + V2, {}};
            g.edges.reserve(a.edges.size() + b.edges.size());
            for (const auto& [x, y] : a.edges)
                g.edges.emplace_back(relab[x], relab[y]);
            for (int i = 0; i < d; ++i)
                redirect_end(g.edges, ends[i], base + phi[i]);
            for (const auto& [x, y] : b.edges)
                g.edges.emplace_back(base + x, base + y);
            Canon c = canonicalize(g);
            if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
            int i = 0;
            while (i < d && ++phi[i] == V2) phi[i++] = 0;
            if (i == d) break;
        }
    }
    return out;
}

GCElement bullet(const GCElement& a, const GCElement& b) {
    GCElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(bullet(ka, kb), ca * cb);
    return out;
}

GCElement lie_bracket(const GraphKey& a, const GraphKey& b) {
    GCElement out = bullet(a, b);
    int kos = (graph_parity(a) * graph_parity(b)) % 2 ? -1 : 1;
    out.add(bullet(b, a), Coeff(-kos));
    return out;
}

GCElement lie_bracket(const GCElement& a, const GCElement& b) {
    GCElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(lie_bracket(ka, kb), ca * cb);
    return out;
}

GCElement delta_tilde(const GraphKey& g, int min_ends) {
    if (min_ends < 1 || min_ends > 2)
        throw std::invalid_argument("delta_tilde: min_ends must be 1 or 2");
    GCElement out;
    const int V = g.vertex_count;
    for (int v = 0; v < V; ++v) {
        auto ends = ends_at(g.edges, v);
        const int d = static_cast<int>(ends.size());
        if (d < 2 * min_ends) continue;
        /* Unordered distributions, each taken once: the moved set always
         * contains the first end at v. */
        for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
            int moved = 1 + __builtin_popcount(mask);
            if (moved < min_ends || d - moved < min_ends) continue;
            OrientedGraph h{g.n_param, V + 1, g.edges};
            redirect_end(h.edges, ends[0], V);
            for (int i = 1; i < d; ++i)
                if (mask & (1u << (i - 1))) redirect_end(h.edges, ends[i], V);
            h.edges.emplace_back(v, V);
            Canon c = canonicalize(h);
            if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
        }
    }
    return out;
}

GCElement delta_tilde(const GCElement& e, int min_ends) {
    GCElement out;
    for (const auto& [k, c] : e) out.add(delta_tilde(k, min_ends), c);
    return out;
}

GCElement add_edge_all_ways(const GraphKey& g) {
    GCElement out;
    const int V = g.vertex_count;
    std::vector<std::vector<char>> adj(V, std::vector<char>(V, 0));
    for (const auto& [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;
    for (int a = 0; a < V; ++a)
        for (int b = a + 1; b < V; ++b) {
            if (adj[a][b]) continue; // parallel pair, contributes zero
            OrientedGraph h{g.n_param, V, g.edges};
            h.edges.emplace_back(a, b);
            Canon c = canonicalize(h);
            if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
        }
    return out;
}

UGCElement d_tilde(const UGraphKey& g) {
    UGCElement out;
    for (const auto& [k, c] : delta_tilde(g.graph, 1))
        out.add(UGraphKey{g.u_pow, k}, c);
    for (const auto& [k, c] : add_edge_all_ways(g.graph))
        out.add(UGraphKey{g.u_pow + 1, k}, c);
    return out;
}

UGCElement d_tilde(const UGCElement& e) {
    UGCElement out;
    for (const auto& [k, c] : e) out.add(d_tilde(k), c);
    return out;
}

long long GCWordKey::degree() const {
    if (factors.empty())
        throw std::logic_error("degree: empty word");
    long long d = 0;
    for (const auto& f : factors) d += f.degree();
    return d + 2LL * factors.front().n_param * u_pow;
}

int GCWordKey::parity() const {
    std::size_t e = 0;
    for (const auto& f : factors) e += f.edges.size();
    return static_cast<int>(e % 2);
}

GCWordElement canonicalize_word(const GCWordKey& raw, const Coeff& c) {
    GCWordKey w = raw;
    int sign = 1;
    auto& f = w.factors;
    const int k = static_cast<int>(f.size());
    for (int i = 1; i < k; ++i)
        for (int j = i; j > 0 && f[j] < f[j - 1]; --j) {
            if (graph_parity(f[j]) && graph_parity(f[j - 1])) sign = -sign;
            std::swap(f[j], f[j - 1]);
        }
    for (int i = 0; i + 1 < k; ++i)
        if (f[i] == f[i + 1] && graph_parity(f[i])) return GCWordElement{};
    GCWordElement out;
    out.add(w, Coeff(sign) * c);
    return out;
}

GCWordElement word_mul(const GCWordKey& a, const GCWordKey& b) {
    GCWordKey raw;
    raw.u_pow = a.u_pow + b.u_pow;
    raw.factors = a.factors;
    raw.factors.insert(raw.factors.end(), b.factors.begin(),
                       b.factors.end());
    return canonicalize_word(raw);
}

GCWordElement word_mul(const GCWordElement& a, const GCWordElement& b) {
    GCWordElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(word_mul(ka, kb), ca * cb);
    return out;
}

GCWordElement d_tilde_word(const GCWordKey& w) {
    GCWordElement out;
    int prefix = 0;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        Coeff pre(prefix % 2 ? -1 : 1);
        for (const auto& [uk, c] : d_tilde(UGraphKey{w.u_pow, w.factors[i]})) {
            GCWordKey raw;
            raw.u_pow = uk.u_pow;
            raw.factors = w.factors;
            raw.factors[i] = uk.graph;
            out += canonicalize_word(raw, pre * c);
        }
        prefix += graph_parity(w.factors[i]);
    }
    return out;
}

GCWordElement d_tilde_word(const GCWordElement& e) {
    GCWordElement out;
    for (const auto& [k, c] : e) out.add(d_tilde_word(k), c);
    return out;
}

} // namespace gch
