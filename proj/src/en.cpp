#include "gch/lie_word.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

#include "gch/hybrid_ops.hpp"

namespace gch {

namespace {

constexpr int kSubstLeaf = -2;

/* Bracket trees.  Words are left combs, but substituting a product
 * into a slot creates general shapes, so normal forms are computed on
 * trees. */
struct Tree {
    int leaf = -1;
    std::shared_ptr<const Tree> l, r;
};
using TreeP = std::shared_ptr<const Tree>;

TreeP make_leaf(int v) {
    auto t = std::make_shared<Tree>();
    t->leaf = v;
    return t;
}

TreeP make_node(TreeP l, TreeP r) {
    auto t = std::make_shared<Tree>();
    t->l = std::move(l);
    t->r = std::move(r);
    return t;
}

TreeP word_tree(const LieWord& w, const std::vector<int>& relabel) {
    TreeP t = make_leaf(relabel[w.letters[0]]);
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        t = make_node(t, make_leaf(relabel[w.letters[i]]));
    return t;
}

int tree_size(const Tree& t) {
    return t.leaf != -1 ? 1 : tree_size(*t.l) + tree_size(*t.r);
}

bool tree_has(const Tree& t, int v) {
    if (t.leaf != -1) return t.leaf == v;
    return tree_has(*t.l, v) || tree_has(*t.r, v);
}

void tree_letters(const Tree& t, std::vector<int>& out) {
    if (t.leaf != -1) {
        out.push_back(t.leaf);
        return;
    }
    tree_letters(*t.l, out);
    tree_letters(*t.r, out);
}

/* expansion into the free associative superalgebra on odd letters */
using AWord = std::vector<int>;
using AExp = std::map<AWord, Coeff>;

AExp expand(const Tree& t) {
    if (t.leaf != -1) return {{{t.leaf}, Coeff(1)}};
    AExp L = expand(*t.l), R = expand(*t.r);
    AExp r;
    for (const auto& [wa, ca] : L)
        for (const auto& [wb, cb] : R) {
            AWord ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            r[ab] += ca * cb;
            AWord ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            int mm = (wa.size() % 2) * (wb.size() % 2);
            r[ba] += (mm ? Coeff(1) : Coeff(-1)) * ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

/* A multilinear bracket element is recovered from its expansion by the
 * monomials that start with the smallest letter: each such monomial is
 * the expansion footprint of exactly one left-normed word, with unit
 * coefficient. */
LieElement extract(const AExp& e) {
    LieElement r;
    if (e.empty()) return r;
    int a = e.begin()->first[0];
    for (int x : e.begin()->first) a = std::min(a, x);
    for (const auto& [w, c] : e)
        if (w[0] == a) r.add(LieWord{w}, c);
    return r;
}

LieElement tree_nf(const Tree& t) { return extract(expand(t)); }

std::vector<int> identity_relabel(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = i;
    return r;
}

} // namespace

LieElement lie_word_bracket(const LieWord& a, const LieWord& b) {
    int n = 0;
    for (int x : a.letters) n = std::max(n, x + 1);
    for (int x : b.letters) n = std::max(n, x + 1);
    auto id = identity_relabel(n);
    return tree_nf(*make_node(word_tree(a, id), word_tree(b, id)));
}

EnElement en_canonicalize(int u_pow, std::vector<LieWord> words, Coeff c) {
    int sign = 1;
    for (std::size_t i = 1; i < words.size(); ++i)
        for (std::size_t j = i; j > 0 && words[j] < words[j - 1]; --j) {
            if (words[j].parity() && words[j - 1].parity()) sign = -sign;
            std::swap(words[j], words[j - 1]);
        }
    for (std::size_t i = 1; i < words.size(); ++i)
        if (words[i] == words[i - 1] && words[i].parity()) return {};
    return EnElement::single(EnMonomial{u_pow, std::move(words)},
                             Coeff(sign) * c);
}

namespace {

/* candidate support of the composite: plain substitution, Leibniz
 * expansion, coefficients ignored */
std::vector<EnMonomial> subst_support(const EnMonomial& a, int slot,
                                      const EnMonomial& b);

} // namespace

EnElement en_circ(const EnMonomial& a, int slot, const EnMonomial& b) {
    const int na = a.arity(), nb = b.arity();
    if (slot < 0 || slot >= na)
        throw std::invalid_argument("en_circ: slot out of range");

    /* unit shortcuts */
    if (nb == 1 && b.words.size() == 1)
        return EnElement::single(EnMonomial{a.u_pow + b.u_pow, a.words});
    if (na == 1 && a.words.size() == 1)
        return EnElement::single(EnMonomial{a.u_pow + b.u_pow, b.words});

    /* The signs of the composition are pinned by the graph realization:
     * the coefficients are solved for so that including the composite
     * equals composing the inclusions.  Substitution alone fixes the
     * support but not the Koszul convention. */
    std::vector<EnMonomial> cand = subst_support(a, slot, b);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    HybridElement rhs;
    for (const auto& [ka, ca] : en_inclusion(EnMonomial{0, a.words}, 1))
        for (const auto& [kb, cb] : en_inclusion(EnMonomial{0, b.words}, 1))
            rhs.add(circ(ka, slot, kb), ca * cb);

    std::map<HybridKey, std::size_t> rows;
    auto row_of = [&rows](const HybridKey& k) {
        return rows.emplace(k, rows.size()).first->second;
    };
    std::vector<std::map<std::size_t, Coeff>> cols(cand.size());
    for (std::size_t t = 0; t < cand.size(); ++t)
        for (const auto& [k, c] : en_inclusion(EnMonomial{0, cand[t].words}, 1))
            cols[t][row_of(k)] = c;
    std::map<std::size_t, Coeff> target;
    for (const auto& [k, c] : rhs) target[row_of(k)] = c;

    /* dense Gaussian elimination, rows x candidates */
    const std::size_t R = rows.size(), C = cand.size();
    std::vector<std::vector<Coeff>> m(R, std::vector<Coeff>(C + 1, Coeff(0)));
    for (std::size_t t = 0; t < C; ++t)
        for (const auto& [r, c] : cols[t]) m[r][t] = c;
    for (const auto& [r, c] : target) m[r][C] = c;

    std::vector<std::size_t> pivot_of_col(C, R);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t p = rank;
        while (p < R && m[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(m[p], m[rank]);
        Coeff inv = m[rank][c];
        for (auto& x : m[rank]) x /= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Coeff f = m[r][c];
            for (std::size_t j = c; j <= C; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < R; ++r)
        if (m[r][C] != 0)
            throw std::logic_error("en_circ: graph system inconsistent");
    for (std::size_t c = 0; c < C; ++c)
        if (pivot_of_col[c] == R)
            throw std::logic_error("en_circ: underdetermined system");

    EnElement result;
    for (std::size_t c = 0; c < C; ++c)
        if (pivot_of_col[c] != R)
            result.add(EnMonomial{a.u_pow + b.u_pow, cand[c].words},
                       m[pivot_of_col[c]][C]);
    return result;
}

namespace {

std::vector<EnMonomial> subst_support(const EnMonomial& a, int slot,
                                      const EnMonomial& b) {
    const int na = a.arity(), nb = b.arity();

    /* letters of a above the slot shift up, the slot letter becomes a
     * placeholder leaf; letters of b move up by the slot */
    std::vector<int> ra(na);
    for (int x = 0; x < na; ++x)
        ra[x] = x < slot ? x : (x == slot ? kSubstLeaf : x + nb - 1);
    std::vector<int> rb(nb);
    for (int j = 0; j < nb; ++j) rb[j] = slot + j;

    std::vector<TreeP> cluster;
    cluster.reserve(b.words.size());
    for (const auto& w : b.words) cluster.push_back(word_tree(w, rb));

    int host = -1;
    for (std::size_t i = 0; i < a.words.size(); ++i)
        for (int x : a.words[i].letters)
            if (x == slot) host = static_cast<int>(i);
    if (host < 0) throw std::invalid_argument("en_circ: slot not present");

    /* substitute the cluster for the placeholder; a bracket against a
     * product expands by the Leibniz rule */
    auto subst = [](auto&& self, const TreeP& t,
                    const std::vector<TreeP>& cl)
        -> std::vector<std::vector<TreeP>> {
        if (t->leaf == kSubstLeaf) return {cl};
        std::vector<std::vector<TreeP>> out;
        const bool in_left = tree_has(*t->l, kSubstLeaf);
        const TreeP& fixed = in_left ? t->r : t->l;
        for (auto& sub : self(self, in_left ? t->l : t->r, cl)) {
            for (std::size_t j = 0; j < sub.size(); ++j) {
                std::vector<TreeP> next = sub;
                next[j] = in_left ? make_node(sub[j], fixed)
                                  : make_node(fixed, sub[j]);
                out.push_back(std::move(next));
            }
        }
        return out;
    };

    TreeP host_tree = word_tree(a.words[host], ra);
    std::vector<EnMonomial> result;
    for (const auto& trees : subst(subst, host_tree, cluster)) {
        /* normal form every tree of the cluster, distribute, splice the
         * cluster words where the host word stood */
        std::vector<std::vector<LieWord>> parts{{}};
        for (const auto& t : trees) {
            LieElement nf = tree_nf(*t);
            std::vector<std::vector<LieWord>> next;
            for (const auto& ws : parts)
                for (const auto& [w, cw] : nf) {
                    (void)cw;
                    auto ws2 = ws;
                    ws2.push_back(w);
                    next.push_back(std::move(ws2));
                }
            parts = std::move(next);
        }
        for (const auto& ws : parts) {
            std::vector<LieWord> words;
            for (int i = 0; i < host; ++i) {
                LieWord w = a.words[i];
                for (int& x : w.letters) x = ra[x];
                words.push_back(std::move(w));
            }
            words.insert(words.end(), ws.begin(), ws.end());
            for (std::size_t i = host + 1; i < a.words.size(); ++i) {
                LieWord w = a.words[i];
                for (int& x : w.letters) x = ra[x];
                words.push_back(std::move(w));
            }
            EnElement cm = en_canonicalize(0, std::move(words));
            if (!cm.is_zero()) result.push_back(cm.only().first);
        }
    }
    return result;
}

} // namespace

EnElement en_circ(const EnElement& a, int slot, const EnElement& b) {
    EnElement r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) r.add(en_circ(ka, slot, kb), ca * cb);
    return r;
}

/* Merges one pair of words into their bracket, summed over all pairs.
 * The pair rule is d(a b) = (-1)^{(|a|+1)|b|} [a, b]; words crossed on
 * the way to the front contribute the usual swap signs.  This is the
 * unique square-zero extension of d(x y) = u [x, y] that commutes with
 * relabeling and acts as a derivation of the insertion product. */
EnElement d_bv(const EnMonomial& m) {
    EnElement r;
    const auto& ws = m.words;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            int pre_i = 0, pre_j = 0;
            for (std::size_t l = 0; l < i; ++l) pre_i += ws[l].parity();
            for (std::size_t l = 0; l < j; ++l)
                if (l != i) pre_j += ws[l].parity();
            const int e = (ws[i].parity() + 1) * ws[j].parity()
                        + ws[i].parity() * pre_i + ws[j].parity() * pre_j;
            for (const auto& [bw, bc] : lie_word_bracket(ws[i], ws[j])) {
                std::vector<LieWord> nw;
                nw.reserve(ws.size() - 1);
                nw.push_back(bw);
                for (std::size_t l = 0; l < ws.size(); ++l)
                    if (l != i && l != j) nw.push_back(ws[l]);
                r += en_canonicalize(m.u_pow + 1, std::move(nw),
                                     Coeff(e % 2 ? -1 : 1) * bc);
            }
        }
    return r;
}

EnElement d_bv(const EnElement& e) {
    EnElement r;
    for (const auto& [k, c] : e) r.add(d_bv(k), c);
    return r;
}

namespace {

/* every bracket node turns into one edge between a vertex of each
 * operand; the node's edge precedes the edges of its operands */
void inclusion_edges(const Tree& t, std::vector<std::vector<Edge>>& out) {
    if (t.leaf != -1) {
        out = {{}};
        return;
    }
    std::vector<std::vector<Edge>> le, re;
    inclusion_edges(*t.l, le);
    inclusion_edges(*t.r, re);
    std::vector<int> lp, rp;
    tree_letters(*t.l, lp);
    tree_letters(*t.r, rp);
    out.clear();
    for (int p : lp)
        for (int q : rp)
            for (const auto& el : le)
                for (const auto& er : re) {
                    std::vector<Edge> es{{p, q}};
                    es.insert(es.end(), el.begin(), el.end());
                    es.insert(es.end(), er.begin(), er.end());
                    out.push_back(std::move(es));
                }
}

} // namespace

HybridElement en_inclusion(const EnMonomial& m, int n_param) {
    const int n_ext = m.arity();
    auto id = identity_relabel(n_ext);
    std::vector<std::pair<Coeff, std::vector<Edge>>> parts{{Coeff(1), {}}};
    for (const auto& w : m.words) {
        std::vector<std::vector<Edge>> we;
        inclusion_edges(*word_tree(w, id), we);
        std::vector<std::pair<Coeff, std::vector<Edge>>> next;
        for (const auto& [c, es] : parts)
            for (const auto& add : we) {
                auto es2 = es;
                es2.insert(es2.end(), add.begin(), add.end());
                next.emplace_back(c, std::move(es2));
            }
        parts = std::move(next);
    }
    HybridElement r;
    for (const auto& [c, es] : parts) {
        HCanon hc = canonicalize(HybridGraph{n_param, n_ext, 0, es, {}});
        if (!hc.is_zero()) r.add(hc.key, Coeff(hc.sign) * c);
    }
    return r;
}

} // namespace gch
