#ifndef GCH_TESTS_ORACLE_HPP
#define GCH_TESTS_ORACLE_HPP

/* Independent reference implementations used only by the test suite.
 * Everything here is deliberately brute force: all V! labelings, all
 * edge subsets, no pruning.  Expected values in the test files were
 * produced by these routines and then frozen. */

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gch/koszul.hpp"
#include "gch/oriented_graph.hpp"

namespace gch::oracle {

struct ClassInfo {
    bool zero = false;
    /* every relabeled sorted edge list together with the sign of the
     * sort, keyed by the edge list */
    std::map<std::vector<Edge>, std::set<int>> signs_by_key;
};

inline ClassInfo graph_class(const OrientedGraph& g) {
    ClassInfo info;
    const int V = g.vertex_count;
    std::vector<int> perm(V);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Edge> relabeled;
        relabeled.reserve(g.edges.size());
        for (const auto& [a, b] : g.edges) {
            int x = perm[a], y = perm[b];
            relabeled.emplace_back(std::min(x, y), std::max(x, y));
        }
        int sgn = odd_sort_sign(relabeled);
        if (sgn == 0) {
            info.zero = true; // repeated edge: the class is zero outright
            return info;
        }
        info.signs_by_key[relabeled].insert(sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [key, signs] : info.signs_by_key)
        if (signs.size() == 2) info.zero = true;
    return info;
}

/* All isomorphism classes with the given vertex and edge counts, every
 * vertex at least min_valence-valent, connected, and not killed by an
 * odd automorphism.  Classes are named by production canonical keys so
 * the caller can compare sets directly. */
inline std::set<GraphKey> enumerate_classes(int n_param, int V, int E,
                                            int min_valence) {
    std::set<GraphKey> out;
    std::vector<Edge> pairs;
    for (int a = 0; a < V; ++a)
        for (int b = a + 1; b < V; ++b) pairs.emplace_back(a, b);
    const int P = static_cast<int>(pairs.size());
    if (E < 0 || E > P) return out;
    std::vector<int> idx(E);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<Edge> edges;
        for (int i : idx) edges.push_back(pairs[i]);
        std::vector<int> deg(V, 0);
        for (const auto& [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        bool ok = true;
        for (int v = 0; v < V; ++v)
            if (deg[v] < min_valence) ok = false;
        if (ok && is_connected(V, edges)) {
            Canon c = canonicalize(OrientedGraph{n_param, V, edges});
            if (!c.is_zero()) out.insert(c.key);
        }
        // advance the combination
        int i = E - 1;
        while (i >= 0 && idx[i] == P - E + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < E; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline OrientedGraph relabel(const OrientedGraph& g,
                             const std::vector<int>& perm) {
    OrientedGraph r{g.n_param, g.vertex_count, {}};
    for (const auto& [a, b] : g.edges) r.edges.emplace_back(perm[a], perm[b]);
    return r;
}

} // namespace gch::oracle

#include "gch/hybrid_graph.hpp"

namespace gch::oracle {

struct HybridClassInfo {
    bool zero = false;
    std::map<std::pair<std::vector<Edge>, std::vector<int>>, std::set<int>>
        signs_by_key;
};

/* All k! relabelings of the internals, externals fixed. */
inline HybridClassInfo hybrid_class(const HybridGraph& g) {
    HybridClassInfo info;
    const int N = g.ext_count, K = g.int_count;
    std::vector<int> perm(K);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Edge> relabeled;
        for (const auto& [a, b] : g.edges) {
            int x = a < N ? a : N + perm[a - N];
            int y = b < N ? b : N + perm[b - N];
            relabeled.emplace_back(std::min(x, y), std::max(x, y));
        }
        int esgn = odd_sort_sign(relabeled);
        std::vector<int> marks = g.marks;
        int msgn = odd_sort_sign(marks);
        if (esgn * msgn == 0) {
            info.zero = true;
            return info;
        }
        info.signs_by_key[{relabeled, marks}].insert(esgn * msgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [key, signs] : info.signs_by_key)
        if (signs.size() == 2) info.zero = true;
    return info;
}

} // namespace gch::oracle

#include "gch/coeff.hpp"

namespace gch::oracle {

/* Polynomial model of an odd Poisson algebra, used to cross check the
 * bracket word calculus.  Take the matrix superalgebra with two even
 * and two odd rows, flip the parity of every basis matrix, and extend
 * the flipped commutator to polynomials in the sixteen generators by
 * the antibracket Leibniz rules.  Evaluating a bracket word at matrix
 * generators and comparing against direct substitution is independent
 * of the production code paths. */

/* generator id g encodes the matrix unit with row g/4, column g%4 */
inline int gl_parity(int g) { return ((g / 4 >= 2) + (g % 4 >= 2)) % 2; }
inline int pgen_parity(int g) { return 1 - gl_parity(g); }

using PMono = std::vector<int>;
using PElem = std::map<PMono, Coeff>;

inline int pmono_parity(const PMono& m) {
    int p = 0;
    for (int g : m) p ^= pgen_parity(g);
    return p;
}

/* sort generator ids, tracking the Koszul sign; a repeated odd
 * generator squares to zero */
inline std::pair<int, PMono> psort(PMono m) {
    int sign = 1;
    for (size_t i = 1; i < m.size(); ++i)
        for (size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
            if (pgen_parity(m[j]) && pgen_parity(m[j - 1])) sign = -sign;
            std::swap(m[j], m[j - 1]);
        }
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && pgen_parity(m[i])) return {0, {}};
    return {sign, m};
}

inline void padd(PElem& e, PMono m, Coeff c) {
    auto [s, sorted] = psort(std::move(m));
    if (s == 0 || c == 0) return;
    Coeff& slot = e[sorted];
    slot += Coeff(s) * c;
    if (slot == 0) e.erase(sorted);
}

inline PElem pmul(const PElem& a, const PElem& b) {
    PElem r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            PMono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            padd(r, std::move(m), ca * cb);
        }
    return r;
}

inline PElem pscale(PElem a, const Coeff& c) {
    if (c == 0) return {};
    for (auto& [m, v] : a) v *= c;
    return a;
}

inline PElem padd_elem(PElem a, const PElem& b) {
    for (const auto& [m, c] : b) padd(a, m, c);
    return a;
}

/* flipped commutator of two matrix units */
inline PElem pgen_bracket(int g, int h) {
    PElem r;
    int gi = g / 4, gj = g % 4, hi = h / 4, hj = h % 4;
    if (gj == hi) padd(r, {gi * 4 + hj}, Coeff(1));
    if (hj == gi) {
        int s = (gl_parity(g) * gl_parity(h)) % 2 ? 1 : -1;
        padd(r, {hi * 4 + gj}, Coeff(s));
    }
    return r;
}

/* antibracket extended by Leibniz in both slots */
inline PElem pbracket(const PElem& a, const PElem& b) {
    PElem r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma.empty() || mb.empty()) continue;
            Coeff c = ca * cb;
            if (ma.size() == 1 && mb.size() == 1) {
                r = padd_elem(std::move(r),
                              pscale(pgen_bracket(ma[0], mb[0]), c));
                continue;
            }
            if (ma.size() > 1) {
                /* [xA, B] = x [A, B] + (-1)^{|A| (|B|+1)} [x, B] A */
                PMono x{ma[0]}, rest(ma.begin() + 1, ma.end());
                PElem ex{{x, Coeff(1)}}, erest{{rest, Coeff(1)}},
                    eb{{mb, Coeff(1)}};
                PElem t1 = pmul(ex, pbracket(erest, eb));
                int s = (pmono_parity(rest) * (pmono_parity(mb) + 1)) % 2;
                PElem t2 = pscale(pmul(pbracket(ex, eb), erest),
                                  Coeff(s ? -1 : 1));
                r = padd_elem(std::move(r),
                              pscale(padd_elem(std::move(t1), t2), c));
                continue;
            }
            /* [A, xB] = [A, x] B + (-1)^{|x| (|A|+1)} x [A, B] */
            PMono x{mb[0]}, rest(mb.begin() + 1, mb.end());
            PElem ex{{x, Coeff(1)}}, erest{{rest, Coeff(1)}},
                ea{{ma, Coeff(1)}};
            PElem t1 = pmul(pbracket(ea, ex), erest);
            int s = (pgen_parity(mb[0]) * (pmono_parity(ma) + 1)) % 2;
            PElem t2 =
                pscale(pmul(ex, pbracket(ea, erest)), Coeff(s ? -1 : 1));
            r = padd_elem(std::move(r),
                          pscale(padd_elem(std::move(t1), t2), c));
        }
    return r;
}

/* second order differential: one pair of factors merges into their
 * bracket, D(a b) = (-1)^{(|a| + 1) |b|} [a, b], with swap signs for
 * the factors crossed on the way to the front; D = 0 on generators */
inline PElem pdelta(const PElem& a) {
    PElem r;
    for (const auto& [m, c] : a) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                const int qi = pgen_parity(m[i]), qj = pgen_parity(m[j]);
                int pre_i = 0, pre_j = 0;
                for (std::size_t l = 0; l < i; ++l)
                    pre_i += pgen_parity(m[l]);
                for (std::size_t l = 0; l < j; ++l)
                    if (l != i) pre_j += pgen_parity(m[l]);
                const int e = (qi + 1) * qj + qi * pre_i + qj * pre_j;
                PMono rest;
                for (std::size_t l = 0; l < m.size(); ++l)
                    if (l != i && l != j) rest.push_back(m[l]);
                PElem t = pbracket(PElem{{PMono{m[i]}, Coeff(1)}},
                                   PElem{{PMono{m[j]}, Coeff(1)}});
                if (!rest.empty()) t = pmul(t, PElem{{rest, Coeff(1)}});
                r = padd_elem(std::move(r),
                              pscale(t, Coeff(e % 2 ? -1 : 1) * c));
            }
    }
    return r;
}

} // namespace gch::oracle

#endif
