#ifndef GCH_GC_OPS_HPP
#define GCH_GC_OPS_HPP

/* Operations on graph classes: the insertion product, the induced Lie
 * bracket, vertex splitting, edge addition, and the deformed
 * differential on polynomials in the degree-2n generator u.  Words in
 * the free graded-symmetric algebra on graph classes live here too.
 *
 * Sign conventions used throughout: edges produced by an operation are
 * appended after the edges of the input, in the order stated in each
 * doc comment, and every raw term carries sign +1 before
 * canonicalization.  All global prefactors are absorbed into the
 * orientation of the generators. */

#include <compare>
#include <vector>

#include "gch/lincomb.hpp"
#include "gch/oriented_graph.hpp"

namespace gch {

/* Parity of a graph class inside the complex: the edge count mod 2.
 * The degree-(2n) variable u never changes parity. */
inline int graph_parity(const GraphKey& g) {
    return static_cast<int>(g.edges.size() % 2);
}

/* Insertion product a . b: sum over the vertices v of a and over all
 * maps from the edge ends at v to the vertices of b.  Host edges keep
 * their positions with redirected endpoints; the edges of b follow in
 * their own order. */
GCElement bullet(const GraphKey& a, const GraphKey& b);
GCElement bullet(const GCElement& a, const GCElement& b);

/* [a, b] = a . b - (-1)^{|a||b|} b . a with |x| the edge-count parity. */
GCElement lie_bracket(const GraphKey& a, const GraphKey& b);
GCElement lie_bracket(const GCElement& a, const GCElement& b);

/* Vertex splitting: for every vertex, every unordered way of
 * distributing its edge ends over the two daughter vertices so that
 * each daughter keeps at least min_ends of the old ends, counted once
 * per unordered distribution.  The edge joining the daughters is
 * appended last.  min_ends = 1 preserves valence >= 2, min_ends = 2
 * preserves valence >= 3. */
GCElement delta_tilde(const GraphKey& g, int min_ends = 1);
GCElement delta_tilde(const GCElement& e, int min_ends = 1);

/* Sum over all unordered vertex pairs of adding one edge, appended
 * last.  Pairs that are already adjacent would create a parallel pair
 * and contribute zero. */
GCElement add_edge_all_ways(const GraphKey& g);

/* A graph class times a power of u. */
struct UGraphKey {
    int u_pow = 0;
    GraphKey graph;
    auto operator<=>(const UGraphKey&) const = default;
};

using UGCElement = LinComb<UGraphKey>;

/* Deformed differential on classes with u-powers: vertex splitting at
 * the same u-power plus u times the sum of single edge additions. */
UGCElement d_tilde(const UGraphKey& g);
UGCElement d_tilde(const UGCElement& e);

/* A word in the free graded-symmetric algebra on graph classes, with
 * one global u-power.  Factors are kept sorted; the constructor-like
 * canonicalizer reports the Koszul sign of sorting and detects squares
 * of odd factors. */
struct GCWordKey {
    int u_pow = 0;
    std::vector<GraphKey> factors;
    auto operator<=>(const GCWordKey&) const = default;

    long long degree() const;
    int parity() const; // total edge count mod 2
};

using GCWordElement = LinComb<GCWordKey>;

/* Sorts the factors of a raw word.  Returns the signed single-term
 * combination, or zero when the word contains a repeated odd factor. */
GCWordElement canonicalize_word(const GCWordKey& raw, const Coeff& c = 1);

GCWordElement word_mul(const GCWordKey& a, const GCWordKey& b);
GCWordElement word_mul(const GCWordElement& a, const GCWordElement& b);

/* The deformed differential extended to words as a coderivation: it
 * acts on one factor at a time and never joins factors. */
GCWordElement d_tilde_word(const GCWordKey& w);
GCWordElement d_tilde_word(const GCWordElement& e);

} // namespace gch

#endif
