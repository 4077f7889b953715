#ifndef GCH_HYBRID_GRAPH_HPP
#define GCH_HYBRID_GRAPH_HPP

/* Graphs with numbered external vertices, unlabeled internal vertices of
 * valence at least 3, ordered solid edges, and ordered marks sitting on
 * external vertices (at most one each).  Edges and marks are both odd;
 * the ledger order is all edges first, then all marks.  Externals are
 * vertices 0..ext_count-1, internals follow. */

#include <compare>
#include <vector>

#include "gch/lincomb.hpp"
#include "gch/oriented_graph.hpp"

namespace gch {

struct HybridGraph {
    int n_param = 1;
    int ext_count = 0;
    int int_count = 0;
    std::vector<Edge> edges; // position = order; endpoints in either order
    std::vector<int> marks;  // position = order; values are external indices

    int vertex_count() const { return ext_count + int_count; }

    /* 2n k - (2n-1)(E + t): internals carry degree 2n, edges and marks
     * carry 1-2n, externals carry 0. */
    long long degree() const {
        return 2LL * n_param * int_count
             - (2LL * n_param - 1) * (static_cast<long long>(edges.size())
                                      + static_cast<long long>(marks.size()));
    }

    int parity() const {
        return static_cast<int>((edges.size() + marks.size()) % 2);
    }
};

/* Canonical representative: internals labeled by the refinement-and-search
 * procedure below, edges normalized and sorted, marks sorted. */
struct HybridKey {
    int n_param = 1;
    int ext_count = 0;
    int int_count = 0;
    std::vector<Edge> edges;
    std::vector<int> marks;

    auto operator<=>(const HybridKey&) const = default;

    HybridGraph graph() const {
        return {n_param, ext_count, int_count, edges, marks};
    }
    long long degree() const { return graph().degree(); }
    int parity() const { return graph().parity(); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int mark_count() const { return static_cast<int>(marks.size()); }
};

struct HCanon {
    int sign = 0;
    HybridKey key;

    bool is_zero() const { return sign == 0; }
};

/* Canonical labeling of the internals: iterated color refinement first
 * (seeded by solid degree, the exact set of external neighbors, and the
 * internal degree; refined by sorted neighbor-color multisets), then the
 * same maximal-bit-string backtracking as for ordinary graphs, restricted
 * to permutations within color classes.  Color classes are ordered by
 * their signature strings, which is labeling independent.  All maximal
 * labelings are collected; opposite sort parities give Zero.  Graphs with
 * a parallel edge pair or two marks on one external are Zero.  Throws
 * std::invalid_argument on malformed input: self edges, marks on
 * internals, internals of valence below 3, or a connected component
 * without an external. */
HCanon canonicalize(const HybridGraph& g);

using HybridElement = LinComb<HybridKey>;

HybridElement to_element(const HybridGraph& g, const Coeff& c = Coeff(1));

} // namespace gch

#endif
