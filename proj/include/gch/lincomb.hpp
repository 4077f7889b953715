#ifndef GCH_LINCOMB_HPP
#define GCH_LINCOMB_HPP

#include <map>
#include <stdexcept>

#include "gch/coeff.hpp"

namespace gch {

/* Formal linear combination over canonical generator keys.
 *
 * Keys must be canonical forms (each operation canonicalizes before
 * inserting) and zero coefficients are never stored, so operator== is
 * structural equality of elements.  Backed by std::map to keep iteration
 * order, and therefore every downstream output, deterministic. */
template <class K>
class LinComb {
  public:
    using Map = std::map<K, Coeff>;

    LinComb() = default;

    static LinComb single(const K& key, Coeff c = Coeff(1)) {
        LinComb r;
        r.add(key, c);
        return r;
    }

    void add(const K& key, const Coeff& c) {
        if (c == 0) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Coeff& scale = Coeff(1)) {
        if (scale == 0) return;
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    LinComb& operator+=(const LinComb& o) { add(o); return *this; }
    LinComb& operator-=(const LinComb& o) { add(o, Coeff(-1)); return *this; }
    LinComb& operator*=(const Coeff& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Coeff& c, LinComb a) { a *= c; return a; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    Coeff coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /* The single term of a one-term combination. */
    const std::pair<const K, Coeff>& only() const {
        if (terms_.size() != 1)
            throw std::logic_error("LinComb::only on a non-singleton");
        return *terms_.begin();
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

  private:
    Map terms_;
};

} // namespace gch

#endif
