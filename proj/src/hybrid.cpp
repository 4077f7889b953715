#include "gch/hybrid_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "gch/koszul.hpp"

namespace gch {

namespace {

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

/* Color refinement on the internals.  Returns one class id per internal;
 * ids order the classes by their signature, independent of labeling. */
std::vector<int> refine_colors(const HybridGraph& g) {
    const int N = g.ext_count, K = g.int_count;
    std::vector<std::vector<int>> nbr(K);
    std::vector<std::string> seed(K);
    for (int j = 0; j < K; ++j) {
        std::vector<int> ext, inn;
        for (const auto& [a, b] : g.edges) {
            int other = -1;
            if (a == N + j) other = b;
            else if (b == N + j) other = a;
            else continue;
            (other < N ? ext : inn).push_back(other);
        }
        std::sort(ext.begin(), ext.end());
        std::sort(inn.begin(), inn.end());
        nbr[j].clear();
        for (int x : inn) nbr[j].push_back(x - N);
        std::string s = "d" + std::to_string(ext.size() + inn.size()) + "x";
        for (int x : ext) s += std::to_string(x) + ",";
        s += "i" + std::to_string(inn.size());
        seed[j] = s;
    }
    auto rank_by = [K](const std::vector<std::string>& sig,
                       std::vector<int>& cid) {
        std::map<std::string, int> order;
        for (const auto& s : sig) order[s] = 0;
        int r = 0;
        for (auto& [s, v] : order) v = r++;
        for (int j = 0; j < K; ++j) cid[j] = order.at(sig[j]);
        return r;
    };
    std::vector<int> cid(K, 0);
    int distinct = rank_by(seed, cid);
    for (int round = 0; round < K; ++round) {
        std::vector<std::string> sig(K);
        for (int j = 0; j < K; ++j) {
            std::vector<int> nc;
            for (int x : nbr[j]) nc.push_back(cid[x]);
            std::sort(nc.begin(), nc.end());
            std::string s = std::to_string(cid[j]) + "|";
            for (int c : nc) s += std::to_string(c) + ",";
            sig[j] = s;
        }
        std::vector<int> next(K);
        int d2 = rank_by(sig, next);
        cid = next;
        if (d2 == distinct) break;
        distinct = d2;
    }
    return cid;
}

struct HybridCanonSearch {
    int N, K;
    const std::vector<Edge>& edges;
    std::vector<uint64_t> adj; // bitmask over vertex indices
    std::vector<std::vector<int>> position_cands; // per position: orig ids
    std::vector<int> label2orig; // internal position -> orig internal index
    std::vector<char> used;
    std::vector<uint64_t> best;
    bool have_best = false;
    std::vector<Edge> canon_edges;
    bool seen_plus = false, seen_minus = false;

    HybridCanonSearch(const HybridGraph& g, const std::vector<int>& cid)
        : N(g.ext_count), K(g.int_count), edges(g.edges) {
        adj.assign(N + K, 0);
        for (const auto& [a, b] : edges) {
            adj[a] |= (1ull << b);
            adj[b] |= (1ull << a);
        }
        /* positions grouped by class id */
        position_cands.assign(K, {});
        std::vector<std::vector<int>> members;
        for (int j = 0; j < K; ++j) {
            if (static_cast<int>(members.size()) <= cid[j])
                members.resize(cid[j] + 1);
            members[cid[j]].push_back(j);
        }
        int pos = 0;
        for (const auto& m : members)
            for (std::size_t t = 0; t < m.size(); ++t)
                position_cands[pos++] = m;
        used.assign(K, 0);
        label2orig.assign(K, -1);
        best.assign(K, 0);
    }

    void at_leaf() {
        std::vector<int> orig2label(K);
        for (int p = 0; p < K; ++p) orig2label[label2orig[p]] = p;
        std::vector<Edge> relabeled;
        relabeled.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            int x = a < N ? a : N + orig2label[a - N];
            int y = b < N ? b : N + orig2label[b - N];
            relabeled.emplace_back(std::min(x, y), std::max(x, y));
        }
        int sgn = odd_sort_sign(relabeled);
        if (!have_best || canon_edges.empty()) canon_edges = relabeled;
        if (sgn > 0) seen_plus = true;
        else seen_minus = true;
        have_best = true;
    }

    void dfs(int p) {
        if (p == K) {
            at_leaf();
            return;
        }
        std::vector<std::pair<uint64_t, int>> cands;
        for (int j : position_cands[p]) {
            if (used[j]) continue;
            uint64_t col = 0;
            for (int e = 0; e < N; ++e)
                if (adj[N + j] & (1ull << e)) col |= (1ull << (N + p - 1 - e));
            for (int q = 0; q < p; ++q)
                if (adj[N + j] & (1ull << (N + label2orig[q])))
                    col |= (1ull << (p - 1 - q));
            cands.emplace_back(col, j);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first
                                                : a.second < b.second;
                  });
        for (const auto& [col, j] : cands) {
            if (have_best) {
                if (col < best[p]) break;
                if (col > best[p]) {
                    best[p] = col;
                    std::fill(best.begin() + p + 1, best.end(), 0ull);
                    seen_plus = seen_minus = false;
                    canon_edges.clear();
                }
            } else {
                best[p] = col;
            }
            label2orig[p] = j;
            used[j] = 1;
            dfs(p + 1);
            used[j] = 0;
            label2orig[p] = -1;
        }
    }
};

} // namespace

HCanon canonicalize(const HybridGraph& g) {
    const int N = g.ext_count, K = g.int_count, V = N + K;
    if (N < 1 || K < 0 || V > 31)
        throw std::invalid_argument("canonicalize: vertex counts out of range");
    std::vector<int> valence(V, 0);
    std::set<Edge> simple;
    bool parallel = false;
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || a >= V || b < 0 || b >= V)
            throw std::invalid_argument("canonicalize: endpoint out of range");
        if (a == b)
            throw std::invalid_argument("canonicalize: self edge");
        ++valence[a];
        ++valence[b];
        if (!simple.emplace(std::min(a, b), std::max(a, b)).second)
            parallel = true;
    }
    for (int v = N; v < V; ++v)
        if (valence[v] < 3)
            throw std::invalid_argument("canonicalize: internal below valence 3");
    for (int m : g.marks)
        if (m < 0 || m >= N)
            throw std::invalid_argument("canonicalize: mark not on an external");
    /* every component must contain an external */
    {
        std::vector<int> comp(V, -1);
        int nc = 0;
        for (int s = 0; s < V; ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& [a, b] : g.edges) {
                    int w = -1;
                    if (a == v) w = b;
                    else if (b == v) w = a;
                    else continue;
                    if (comp[w] == -1) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
                }
            }
            ++nc;
        }
        std::vector<char> has_ext(nc, 0);
        for (int e = 0; e < N; ++e) has_ext[comp[e]] = 1;
        for (int c = 0; c < nc; ++c)
            if (!has_ext[c])
                throw std::invalid_argument(
                    "canonicalize: component without an external");
    }
    if (parallel) return HCanon{};

    std::vector<int> marks = g.marks;
    int mark_sign = odd_sort_sign(marks);
    if (mark_sign == 0) return HCanon{}; // two marks on one external

    HybridCanonSearch search(g, refine_colors(g));
    search.dfs(0);
    if (search.seen_plus && search.seen_minus) return HCanon{};
    HCanon result;
    int edge_sign = search.seen_plus ? 1 : -1;
    result.sign = edge_sign * mark_sign;
    result.key = HybridKey{g.n_param, N, K, search.canon_edges, marks};
    return result;
}

HybridElement to_element(const HybridGraph& g, const Coeff& c) {
    HybridElement r;
    HCanon cn = canonicalize(g);
    if (!cn.is_zero()) r.add(cn.key, Coeff(cn.sign) * c);
    return r;
}

HybridElement delta_hybrid(const HybridKey& g) {
    HybridElement out;
    const int N = g.ext_count, K = g.int_count, V = N + K;
    /* external splitting */
    for (int i = 0; i < N; ++i) {
        auto ends = ends_at(g.edges, i);
        const int d = static_cast<int>(ends.size());
        if (d < 2) continue;
        for (unsigned long long mask = 0; mask < (1ull << d); ++mask) {
            if (__builtin_popcountll(mask) < 2) continue;
            HybridGraph h = g.graph();
            h.int_count = K + 1;
            for (int t = 0; t < d; ++t)
                if (mask & (1ull << t)) redirect_end(h.edges, ends[t], V);
            h.edges.emplace_back(i, V);
            HCanon c = canonicalize(h);
            if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
        }
    }
    /* internal splitting, unordered: the moved set contains the first end */
    for (int v = N; v < V; ++v) {
        auto ends = ends_at(g.edges, v);
        const int d = static_cast<int>(ends.size());
        if (d < 4) continue;
        for (unsigned long long mask = 0; mask < (1ull << (d - 1)); ++mask) {
            int moved = 1 + __builtin_popcountll(mask);
            if (moved < 2 || d - moved < 2) continue;
            HybridGraph h = g.graph();
            h.int_count = K + 1;
            redirect_end(h.edges, ends[0], V);
            for (int t = 1; t < d; ++t)
                if (mask & (1ull << (t - 1))) redirect_end(h.edges, ends[t], V);
            h.edges.emplace_back(v, V);
            HCanon c = canonicalize(h);
            if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
        }
    }
    return out;
}

HybridElement delta_hybrid(const HybridElement& e) {
    HybridElement out;
    for (const auto& [k, c] : e) out.add(delta_hybrid(k), c);
    return out;
}

HybridElement circ(const HybridKey& a, int slot, const HybridKey& b) {
    if (a.n_param != b.n_param)
        throw std::invalid_argument("circ: mixed n parameters");
    if (slot < 0 || slot >= a.ext_count)
        throw std::invalid_argument("circ: slot out of range");
    const int Na = a.ext_count, Nb = b.ext_count;
    const int Ka = a.int_count, Kb = b.int_count;
    const int N = Na + Nb - 1, K = Ka + Kb;
    const int Vb = Nb + Kb;

    auto map_a = [&](int x) {
        if (x < Na) return x < slot ? x : x + Nb - 1; // slot itself never kept
        return N + (x - Na);
    };
    auto map_b = [&](int x) {
        if (x < Nb) return slot + x;
        return N + Ka + (x - Nb);
    };

    auto ends = ends_at(a.edges, slot);
    const int d = static_cast<int>(ends.size());

    /* marks: a's marks with the slot mark singled out */
    int slot_mark_pos = -1;
    std::vector<int> base_marks; // relabeled, slot mark excluded
    for (int t = 0; t < a.mark_count(); ++t) {
        if (a.marks[t] == slot) slot_mark_pos = t;
        else base_marks.push_back(map_a(a.marks[t]));
    }
    /* bringing [E1][M1][E2][M2] to [E1 E2][M1 M2] */
    int concat_sign =
        (a.mark_count() * b.edge_count()) % 2 ? -1 : 1;

    HybridElement out;
    std::vector<int> phi(d, 0);
    while (true) {
        HybridGraph base{a.n_param, N, K, {}, {}};
        base.edges.reserve(a.edges.size() + b.edges.size() + 1);
        for (const auto& [x, y] : a.edges)
            base.edges.emplace_back(map_a(x), map_a(y));
        for (int t = 0; t < d; ++t)
            redirect_end(base.edges, ends[t], map_b(phi[t]));
        for (const auto& [x, y] : b.edges)
            base.edges.emplace_back(map_b(x), map_b(y));

        auto emit = [&](HybridGraph h, int sign) {
            for (int m : b.marks) h.marks.push_back(map_b(m));
            HCanon c = canonicalize(h);
            if (!c.is_zero()) out.add(c.key, Coeff(sign * c.sign));
        };

        if (slot_mark_pos < 0) {
            HybridGraph h = base;
            h.marks = base_marks;
            emit(std::move(h), concat_sign);
        } else {
            /* both mark legs reconnect independently */
            for (int p = 0; p < Vb; ++p)
                for (int q = 0; q < Vb; ++q) {
                    if (p == q) {
                        if (p >= Nb) continue; // tadpole on an internal
                        HybridGraph h = base;
                        h.marks = base_marks;
                        h.marks.insert(h.marks.begin() + slot_mark_pos,
                                       map_b(p));
                        emit(std::move(h), concat_sign);
                    } else {
                        HybridGraph h = base;
                        h.edges.emplace_back(map_b(p), map_b(q));
                        h.marks = base_marks;
                        int move_sign = slot_mark_pos % 2 ? -1 : 1;
                        emit(std::move(h), concat_sign * move_sign);
                    }
                }
        }
        int t = 0;
        while (t < d && ++phi[t] == Vb) phi[t++] = 0;
        if (t == d) break;
    }
    return out;
}

HybridElement circ(const HybridElement& a, int slot, const HybridElement& b) {
    HybridElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(circ(ka, slot, kb), ca * cb);
    return out;
}

HybridElement add_edge_all_ways(const HybridKey& g) {
    HybridElement out;
    const int V = g.ext_count + g.int_count;
    std::vector<std::vector<char>> adj(V, std::vector<char>(V, 0));
    for (const auto& [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;
    for (int x = 0; x < V; ++x)
        for (int y = x + 1; y < V; ++y) {
            if (adj[x][y]) continue;
            HybridGraph h = g.graph();
            h.edges.emplace_back(x, y);
            HCanon c = canonicalize(h);
            if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
        }
    return out;
}

HybridElement add_mark_all_ways(const HybridKey& g) {
    HybridElement out;
    std::set<int> marked(g.marks.begin(), g.marks.end());
    for (int e = 0; e < g.ext_count; ++e) {
        if (marked.count(e)) continue;
        HybridGraph h = g.graph();
        h.marks.push_back(e);
        HCanon c = canonicalize(h);
        if (!c.is_zero()) out.add(c.key, Coeff(c.sign));
    }
    return out;
}

HybridKey hybrid_unit(int n_param) { return HybridKey{n_param, 1, 0, {}, {}}; }

} // namespace gch
