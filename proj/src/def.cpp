#include "gch/def_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gch/hybrid_ops.hpp"

namespace gch {

namespace {

int letter_count(const std::vector<LieWord>& words) {
    int n = 0;
    for (const auto& w : words) n += static_cast<int>(w.letters.size());
    return n;
}

/* Left-normed rebracketing of one word under a letter relabeling. */
LieElement relabel_word(const LieWord& w, const std::vector<int>& perm) {
    LieElement cur = LieElement::single(LieWord{{perm[w.letters[0]]}});
    for (std::size_t i = 1; i < w.letters.size(); ++i) {
        LieElement next;
        for (const auto& [wk, c] : cur)
            next.add(lie_word_bracket(wk, LieWord{{perm[w.letters[i]]}}), c);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

DefElement def_canonicalize(int u_pow, std::vector<LieWord> words,
                            const HybridKey& graph, const Coeff& c) {
    if (letter_count(words) != graph.ext_count)
        throw std::invalid_argument("def_canonicalize: arity mismatch");
    EnElement e = en_canonicalize(0, std::move(words), c);
    DefElement out;
    for (const auto& [m, cm] : e)
        out.add(DefKey{u_pow, m.words, graph}, cm);
    return out;
}

DefKey def_unit(int n_param) {
    HCanon c = canonicalize(HybridGraph{n_param, 1, 0, {}, {}});
    return DefKey{0, {LieWord{{0}}}, c.key};
}

DefKey dedge_generator(int n_param) {
    HCanon c = canonicalize(HybridGraph{n_param, 2, 0, {}, {}});
    return DefKey{0, {LieWord{{0, 1}}}, c.key};
}

DefKey sedge_generator(int n_param) {
    HCanon c = canonicalize(HybridGraph{n_param, 2, 0, {{0, 1}}, {}});
    return DefKey{0, {LieWord{{0}}, LieWord{{1}}}, c.key};
}

DefKey stadpole_generator(int n_param) {
    HCanon c = canonicalize(HybridGraph{n_param, 1, 0, {}, {0}});
    return DefKey{0, {LieWord{{0}}}, c.key};
}

namespace {

/* Composite at one fixed slot, before spreading over label subsets. */
DefElement slot_composite(const DefKey& f, const DefKey& g, int slot) {
    DefElement out;
    const int cross = (f.graph.parity() * g.e_parity()) % 2;
    const Coeff s0(cross ? -1 : 1);
    EnElement ew = en_circ(EnMonomial{0, f.words}, slot,
                           EnMonomial{0, g.words});
    if (ew.is_zero()) return out;
    HybridElement hw = circ(f.graph, slot, g.graph);
    for (const auto& [em, ce] : ew)
        for (const auto& [hk, ch] : hw)
            out.add(DefKey{f.u_pow + g.u_pow + em.u_pow, em.words, hk},
                    s0 * ce * ch);
    return out;
}

DefElement relabel_elem(const DefElement& e, const std::vector<int>& perm) {
    DefElement out;
    for (const auto& [k, c] : e) out.add(def_relabel(k, perm), c);
    return out;
}

} // namespace

DefElement conv_prelie(const DefKey& f, const DefKey& g) {
    const int ng = g.arity();
    const int m = f.arity() + ng - 1;
    DefElement base = slot_composite(f, g, 0), out;
    if (base.is_zero()) return out;
    std::vector<int> idx(ng);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> perm(m, -1);
        std::vector<char> taken(m, 0);
        for (int j = 0; j < ng; ++j) {
            perm[j] = idx[j];
            taken[idx[j]] = 1;
        }
        int next = 0;
        for (int pos = ng; pos < m; ++pos) {
            while (taken[next]) ++next;
            perm[pos] = next++;
        }
        out.add(relabel_elem(base, perm));
        int j = ng - 1;
        while (j >= 0 && idx[j] == m - ng + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < ng; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

DefElement conv_prelie(const DefElement& f, const DefElement& g) {
    DefElement out;
    for (const auto& [fk, fc] : f)
        for (const auto& [gk, gc] : g)
            out.add(conv_prelie(fk, gk), fc * gc);
    return out;
}

DefElement conv_bracket(const DefKey& f, const DefKey& g) {
    DefElement out = conv_prelie(f, g);
    const Coeff s((f.parity() * g.parity()) % 2 ? 1 : -1);
    out.add(conv_prelie(g, f), s);
    return out;
}

DefElement conv_bracket(const DefElement& f, const DefElement& g) {
    DefElement out;
    for (const auto& [fk, fc] : f)
        for (const auto& [gk, gc] : g)
            out.add(conv_bracket(fk, gk), fc * gc);
    return out;
}

DefElement def_twist(int n_param) {
    DefElement a = DefElement::single(dedge_generator(n_param))
                 + DefElement::single(sedge_generator(n_param));
    const DefKey st = stadpole_generator(n_param);
    a.add(DefKey{st.u_pow + 1, st.words, st.graph}, Coeff(1) / Coeff(2));
    return a;
}

TotalDParts total_d_parts(const DefKey& x) {
    TotalDParts parts;
    const int n = x.graph.n_param;
    const Coeff se(x.e_parity() ? -1 : 1);

    for (const auto& [hk, c] : delta_hybrid(x.graph))
        parts.graph_delta.add(DefKey{x.u_pow, x.words, hk}, se * c);

    parts.dashed_edge = conv_bracket(dedge_generator(n), x);
    parts.solid_edge = conv_bracket(sedge_generator(n), x);

    const DefKey st = stadpole_generator(n);
    parts.u_tadpole =
        Coeff(1) / Coeff(2) *
        conv_bracket(DefKey{st.u_pow + 1, st.words, st.graph}, x);

    for (const auto& [em, c] : d_bv(EnMonomial{0, x.words}))
        parts.u_bv.add(DefKey{x.u_pow + em.u_pow, em.words, x.graph}, c);

    return parts;
}

DefElement total_d(const DefKey& x) {
    TotalDParts p = total_d_parts(x);
    DefElement out = std::move(p.graph_delta);
    out.add(p.dashed_edge);
    out.add(p.solid_edge);
    out.add(p.u_tadpole);
    out.add(p.u_bv);
    return out;
}

DefElement total_d(const DefElement& e) {
    DefElement out;
    for (const auto& [k, c] : e) out.add(total_d(k), c);
    return out;
}

DefElement def_relabel(const DefKey& x, const std::vector<int>& perm) {
    const int N = x.arity();
    if (static_cast<int>(perm.size()) != N)
        throw std::invalid_argument("def_relabel: permutation size mismatch");

    HybridGraph g = x.graph.graph();
    for (auto& [a, b] : g.edges) {
        if (a < N) a = perm[a];
        if (b < N) b = perm[b];
    }
    for (auto& m : g.marks) m = perm[m];
    HCanon hc = canonicalize(g);
    if (hc.is_zero()) return {};

    std::vector<std::pair<std::vector<LieWord>, Coeff>> acc;
    acc.push_back({{}, Coeff(hc.sign)});
    for (const auto& w : x.words) {
        LieElement img = relabel_word(w, perm);
        std::vector<std::pair<std::vector<LieWord>, Coeff>> next;
        for (const auto& [ws, c] : acc)
            for (const auto& [wk, cw] : img) {
                auto ws2 = ws;
                ws2.push_back(wk);
                next.push_back({std::move(ws2), c * cw});
            }
        acc = std::move(next);
    }

    DefElement out;
    for (auto& [ws, c] : acc)
        out.add(def_canonicalize(x.u_pow, std::move(ws), hc.key, c));
    return out;
}

DefElement symmetrize(const DefKey& x) {
    const int N = x.arity();
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    DefElement out;
    do {
        out.add(def_relabel(x, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

DefElement symmetrize(const DefElement& e) {
    DefElement out;
    for (const auto& [k, c] : e) out.add(symmetrize(k), c);
    return out;
}

} // namespace gch
