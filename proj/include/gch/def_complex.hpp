#ifndef GCH_DEF_COMPLEX_HPP
#define GCH_DEF_COMPLEX_HPP

/* The two-factor complex of arity-indexed pairs: a wedge of Lie words on
 * the external labels, tensored with a hybrid graph on the same labels,
 * with a global power of the central degree-2n variable u.  Carries the
 * convolution pre-Lie product, its Lie bracket, and the total
 * differential. */

#include <compare>
#include <vector>

#include "gch/hybrid_graph.hpp"
#include "gch/lie_word.hpp"

namespace gch {

struct DefKey {
    int u_pow = 0;
    std::vector<LieWord> words; // canonical wedge order, letters 0..N-1
    HybridKey graph;            // canonical, ext_count == letter count

    auto operator<=>(const DefKey&) const = default;

    int arity() const { return graph.ext_count; }
    int word_count() const { return static_cast<int>(words.size()); }

    int e_parity() const {
        return (arity() - word_count()) % 2;
    }
    /* Braiding parity: odd objects are the word ledger, the edges, and the
     * marks.  Equals the raw degree mod 2. */
    int parity() const { return (e_parity() + graph.parity()) % 2; }

    /* Word block first, then the graph block; u is central and even.
     * The word degrees carry the shifts that make every summand of the
     * total differential raise this by exactly one. */
    long long raw_degree() const {
        const int n = graph.n_param;
        const int N = arity(), k = word_count();
        return (N - k) + 2LL * n * (k - 1) + 2LL * n * u_pow
             + graph.degree();
    }
};

/* The singly-shifted degree used for derivation-complex reports. */
inline constexpr int kDerivationDegreeShift = 1;

inline long long shifted_degree(const DefKey& x) {
    return x.raw_degree() - kDerivationDegreeShift;
}

using DefElement = LinComb<DefKey>;

/* Sort the words (sign per odd-odd swap, zero on a repeated odd word);
 * the graph key must already be canonical. */
DefElement def_canonicalize(int u_pow, std::vector<LieWord> words,
                            const HybridKey& graph,
                            const Coeff& c = Coeff(1));

/* Generator factories, letters 0-based. */
DefKey def_unit(int n_param);          // x0 on a bare external
DefKey dedge_generator(int n_param);   // [x0,x1] on two bare externals
DefKey sedge_generator(int n_param);   // x0^x1 on a solid edge
DefKey stadpole_generator(int n_param); // x0 on a marked external

/* Pre-Lie product on relabel-invariant elements.  Both factors are
 * composed diagonally into slot 0, with the crossing sign
 * (-1)^{|graph of f||words of g|} and u powers adding; the result is
 * then spread over every size-|g| subset of the composite labels, the
 * subset receiving g's labels in order and the rest keeping f's order.
 * On invariant elements this sum is independent of the chosen slot and
 * is again invariant. */
DefElement conv_prelie(const DefKey& f, const DefKey& g);
DefElement conv_prelie(const DefElement& f, const DefElement& g);

/* [f,g] = {f,g} - (-1)^{|f||g|}{g,f}. */
DefElement conv_bracket(const DefKey& f, const DefKey& g);
DefElement conv_bracket(const DefElement& f, const DefElement& g);

/* The odd element the differential twists by: both arity-2 generators
 * plus half the tadpole generator with one power of u.  Bracketing
 * with it squares to zero against the graph and word differentials. */
DefElement def_twist(int n_param);

/* The five summands of the total differential.  The graph part carries
 * the crossing sign of passing the word block; the bracket parts are
 * well defined on relabel-invariant inputs only. */
struct TotalDParts {
    DefElement graph_delta; // vertex splitting on the graph factor
    DefElement dashed_edge; // bracket with the dedge generator
    DefElement solid_edge;  // bracket with the sedge generator
    DefElement u_tadpole;   // half the bracket with u times stadpole
    DefElement u_bv;        // u times rebracketing two words into one
};
TotalDParts total_d_parts(const DefKey& x);

/* Sum of the five parts.  Raises the raw degree by one, squares to
 * zero, and preserves invariance. */
DefElement total_d(const DefKey& x);
DefElement total_d(const DefElement& e);

/* Relabel the external slots by a permutation (perm[i] = new label of
 * slot i): words are rebracketed letterwise and renormalized, the graph's
 * externals are renamed, and both factors are recanonicalized. */
DefElement def_relabel(const DefKey& x, const std::vector<int>& perm);

/* Sum over all arity! relabelings. */
DefElement symmetrize(const DefKey& x);
DefElement symmetrize(const DefElement& e);

} // namespace gch

#endif
