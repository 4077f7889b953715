#ifndef GCH_SYMPROD_HPP
#define GCH_SYMPROD_HPP

/* Words in the completed symmetric product of a cogenerator space.  A word
 * is a canonically sorted list of factors; sorting two odd factors past
 * each other flips the sign, and a repeated odd factor kills the word.
 * Parity of a factor is supplied by the caller as a callable so the same
 * machinery serves every cogenerator type. */

#include <cstddef>
#include <utility>
#include <vector>

#include "gch/lincomb.hpp"

namespace gch {

template <class K>
struct SymWord {
    std::vector<K> factors;

    auto operator<=>(const SymWord&) const = default;

    std::size_t length() const { return factors.size(); }
};

/* Sort the factors, tracking the Koszul sign; zero on a repeated odd
 * factor. */
template <class K, class Parity>
LinComb<SymWord<K>> sym_canonicalize(std::vector<K> factors, Parity parity,
                                     const Coeff& c = Coeff(1)) {
    int sign = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        for (std::size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
            if (parity(factors[j]) % 2 && parity(factors[j - 1]) % 2)
                sign = -sign;
            std::swap(factors[j], factors[j - 1]);
        }
    }
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i] == factors[i - 1] && parity(factors[i]) % 2)
            return {};
    return LinComb<SymWord<K>>::single(SymWord<K>{std::move(factors)},
                                       c * Coeff(sign));
}

/* Deconcatenation coproduct on the multiset representation: every split of
 * the factors into a nonempty left and right part, with the sign of
 * unshuffling odd factors.  Words of length one have an empty coproduct. */
template <class K, class Parity>
LinComb<std::pair<SymWord<K>, SymWord<K>>> deconcat(const SymWord<K>& w,
                                                    Parity parity) {
    LinComb<std::pair<SymWord<K>, SymWord<K>>> out;
    const std::size_t n = w.length();
    if (n < 2) return out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        SymWord<K> left, right;
        int sign = 1;
        int odd_skipped = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                if (parity(w.factors[i]) % 2 && odd_skipped % 2)
                    sign = -sign;
                left.factors.push_back(w.factors[i]);
            } else {
                if (parity(w.factors[i]) % 2) ++odd_skipped;
                right.factors.push_back(w.factors[i]);
            }
        }
        out.add({std::move(left), std::move(right)}, Coeff(sign));
    }
    return out;
}

/* Extend a factor-wise map to the whole word as a coderivation: apply it
 * in each position, with the operator's parity crossing the factors to the
 * left, and resort each resulting word. */
template <class K, class Parity, class F>
LinComb<SymWord<K>> extend_coderivation(const SymWord<K>& w, Parity parity,
                                        F f, int op_parity = 1) {
    LinComb<SymWord<K>> out;
    int prefix = 0;
    for (std::size_t j = 0; j < w.length(); ++j) {
        const Coeff s((op_parity % 2) && (prefix % 2) ? -1 : 1);
        for (const auto& [img, c] : f(w.factors[j])) {
            std::vector<K> factors = w.factors;
            factors[j] = img;
            out.add(sym_canonicalize(std::move(factors), parity, s * c));
        }
        prefix += parity(w.factors[j]) % 2;
    }
    return out;
}

} // namespace gch

#endif
