#ifndef GCH_HYBRID_OPS_HPP
#define GCH_HYBRID_OPS_HPP

/* The differential and the operadic composition on hybrid graphs.
 *
 * Ledger rule used by every operation: the raw ledger of a composite is
 * the first factor's objects followed by the second factor's, each block
 * in the order [edges][marks]; the output is brought to the standard
 * form [all edges][all marks], transformed objects keep their ledger
 * positions, newly created objects are appended to their block, and the
 * sign is the parity of crossings of odd objects. */

#include "gch/hybrid_graph.hpp"

namespace gch {

/* Differential: external splitting plus internal splitting.
 *
 * External splitting: for every external i, every set of at least two
 * solid edge ends at i moves to a new internal vertex, which is joined
 * to i by an edge appended to the edge block.  Marks never move.
 *
 * Internal splitting: for every internal, every unordered distribution
 * of its ends over two daughters with at least two old ends on each
 * side, the joining edge appended likewise. */
HybridElement delta_hybrid(const HybridKey& g);
HybridElement delta_hybrid(const HybridElement& e);

/* Operadic composition: substitutes b into external slot of a (0-based).
 * The externals of b take over labels slot..slot+N_b-1; higher externals
 * of a shift up.  Solid ends at the slot reconnect independently to every
 * vertex of b.  A mark at the slot reconnects both legs independently:
 * both on one external leaves a mark there (two marks on one vertex
 * vanish), both on one internal gives zero, and a distinct pair gives an
 * edge, which moves from the mark block to the end of the edge block
 * with the crossing sign. */
HybridElement circ(const HybridKey& a, int slot, const HybridKey& b);
HybridElement circ(const HybridElement& a, int slot, const HybridElement& b);

/* One solid edge added in every possible way: all unordered nonadjacent
 * vertex pairs, appended to the edge block. */
HybridElement add_edge_all_ways(const HybridKey& g);

/* One mark added on every unmarked external, appended to the mark
 * block. */
HybridElement add_mark_all_ways(const HybridKey& g);

/* The operadic unit: one bare external. */
HybridKey hybrid_unit(int n_param);

} // namespace gch

#endif
