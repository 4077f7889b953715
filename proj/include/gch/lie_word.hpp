#ifndef GCH_LIE_WORD_HPP
#define GCH_LIE_WORD_HPP

#include <compare>
#include <vector>

#include "gch/hybrid_graph.hpp"
#include "gch/lincomb.hpp"

namespace gch {

/* A left nested bracket word over 0-based letters: {a, s1, s2, ...}
 * stands for [...[[x_a, x_s1], x_s2]...].  Normal forms keep the
 * smallest letter of the word in front; every multilinear bracket
 * expression reduces to a combination of such words.
 *
 * The bracket has odd internal degree, so a word of length l carries
 * parity (l - 1) mod 2 and internal degree (l - 1)(1 - 2n). */
struct LieWord {
    std::vector<int> letters;

    auto operator<=>(const LieWord&) const = default;

    int length() const { return static_cast<int>(letters.size()); }
    int parity() const { return (length() - 1) % 2; }
    int degree(int n_param) const {
        return (1 - 2 * n_param) * (length() - 1);
    }
};

using LieElement = LinComb<LieWord>;

/* Normal form of the bracket of two normal form words. */
LieElement lie_word_bracket(const LieWord& a, const LieWord& b);

/* A product of bracket words with a power of the degree 2n parameter.
 * The words are kept sorted; adjacent transpositions of two odd words
 * cost a sign.  Every letter 0..N-1 appears in exactly one word, so N
 * is recoverable as the total letter count. */
struct EnMonomial {
    int u_pow = 0;
    std::vector<LieWord> words;

    auto operator<=>(const EnMonomial&) const = default;

    int arity() const {
        int n = 0;
        for (const auto& w : words) n += w.length();
        return n;
    }
    int parity() const {
        int p = 0;
        for (const auto& w : words) p ^= w.parity();
        return p;
    }
    int degree(int n_param) const {
        int d = 2 * n_param * u_pow;
        for (const auto& w : words) d += w.degree(n_param);
        return d;
    }
};

using EnElement = LinComb<EnMonomial>;

/* Sort the words of a raw monomial, accumulating the Koszul sign. */
EnElement en_canonicalize(int u_pow, std::vector<LieWord> words,
                          Coeff c = Coeff(1));

/* Substitute b into letter `slot` of a.  Letters of a above the slot
 * shift up by arity(b) - 1 and letters of b move up by the slot, as in
 * graph composition.  Substituting a product into a bracket slot
 * expands by the Leibniz rule. */
EnElement en_circ(const EnMonomial& a, int slot, const EnMonomial& b);
EnElement en_circ(const EnElement& a, int slot, const EnElement& b);

/* Bracket two words of the monomial together, all ways, raising the
 * parameter power by one. */
EnElement d_bv(const EnMonomial& m);
EnElement d_bv(const EnElement& e);

/* Graph realization: letters become bare external vertices and each
 * bracket node contributes one edge between any two vertices of its
 * operands, summed over all choices. */
HybridElement en_inclusion(const EnMonomial& m, int n_param);

} // namespace gch

#endif
