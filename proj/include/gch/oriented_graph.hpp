#ifndef GCH_ORIENTED_GRAPH_HPP
#define GCH_ORIENTED_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gch/coeff.hpp"
#include "gch/lincomb.hpp"

namespace gch {

using Edge = std::pair<int, int>;

/* A graph with unlabeled vertices and an ordered edge list.  Edges carry odd
 * degree 1-2n, so the list position is the orientation datum: reordering the
 * list by an odd permutation flips the element's sign.  Vertices are
 * 0-based internally; serialization is 1-based. */
struct OrientedGraph {
    int n_param = 1;
    int vertex_count = 0;
    std::vector<Edge> edges; // endpoints in either order; position = edge order

    int edge_count() const { return static_cast<int>(edges.size()); }

    /* 2n(V-1) - (2n-1)E. */
    long long degree() const {
        return 2LL * n_param * (vertex_count - 1)
             - (2LL * n_param - 1) * edge_count();
    }
};

/* Canonical representative: a simple graph, edges normalized to (a<b) and
 * sorted lexicographically.  Totally ordered so it can key a LinComb. */
struct GraphKey {
    int n_param = 1;
    int vertex_count = 0;
    std::vector<Edge> edges;

    auto operator<=>(const GraphKey&) const = default;

    OrientedGraph graph() const { return {n_param, vertex_count, edges}; }
    long long degree() const { return graph().degree(); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

/* Result of canonicalization: Zero (sign == 0) when some automorphism of the
 * underlying graph induces an odd permutation of the edge list; otherwise
 * the canonical representative together with the sign relating the input's
 * edge order to the canonical one (input = sign * canonical). */
struct Canon {
    int sign = 0;
    GraphKey key;

    bool is_zero() const { return sign == 0; }
};

/* Canonical labeling maximizes the packed adjacency bit string read column
 * by column (label k's adjacencies to labels 0..k-1, earliest label most
 * significant), searched by backtracking with prefix pruning.  All maximal
 * labelings are collected; if two of them sort the edge list with opposite
 * parities the class is Zero.  Graphs with a parallel edge pair are Zero
 * immediately (swapping the pair is an odd automorphism).  Throws
 * std::invalid_argument on tadpoles or isolated vertices. */
Canon canonicalize(const OrientedGraph& g);

using GCElement = LinComb<GraphKey>;

/* canonicalize() folded into a formal sum. */
GCElement to_element(const OrientedGraph& g, const Coeff& c = Coeff(1));

struct EnumLimits {
    // Upper bound on search-tree nodes the enumerator may visit.
    long long max_nodes = 4'000'000'000;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* All distinct nonzero canonical classes of connected simple graphs with the
 * given vertex and edge counts and minimum valence (2 or 3), sorted by key.
 * Parallel-edge graphs canonicalize to Zero, so enumerating simple graphs is
 * exhaustive.  Throws ResourceLimitError when the pruned search would exceed
 * limits.max_nodes. */
std::vector<GraphKey> enumerate_gc(int n_param, int vertices, int edge_total,
                                   int min_valence,
                                   const EnumLimits& limits = {});

/* Helper constructions used across tests and the CLI. */
OrientedGraph loop_graph(int n_param, int j);     // cycle with j vertices
OrientedGraph complete_graph(int n_param, int v); // K_v

bool is_connected(int vertex_count, const std::vector<Edge>& edges);

} // namespace gch

#endif
