#pragma once

// Sparse elements of a free module over the point ring: a finite map from
// basis keys to nonzero coefficients.

#include "eqcohom/coeff.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace eqcohom {

template <typename Key>
class FreeElement
{
public:
    using map_type = std::map<Key, CoeffElement>;
    using const_iterator = typename map_type::const_iterator;

    FreeElement() = default;
    explicit FreeElement(Key k, CoeffElement c = CoeffElement::one()) { add(std::move(k), c); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    CoeffElement coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? CoeffElement{} : it->second;
    }

    void add(const Key& k, const CoeffElement& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    FreeElement& operator+=(const FreeElement& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    friend FreeElement operator+(FreeElement x, const FreeElement& y) { return x += y; }

    friend FreeElement operator*(const CoeffElement& c, const FreeElement& x)
    {
        FreeElement out;
        if (c.is_zero())
            return out;
        for (const auto& [k, v] : x.terms_)
            out.add(k, c * v);
        return out;
    }

    // Keep only the terms whose total bidegree is d.
    template <typename DegreeOf>
    FreeElement component(BiDegree d, DegreeOf&& degree_of) const
    {
        FreeElement out;
        for (const auto& [k, c] : terms_) {
            const BiDegree rest = d - degree_of(k);
            out.add(k, c.component(rest));
        }
        return out;
    }

    friend bool operator==(const FreeElement&, const FreeElement&) = default;

private:
    map_type terms_;
};

// Expands each coefficient into monomials: "r*B[1] + t*B[2]". Unit
// coefficients and unit keys are elided.
template <typename Key, typename KeyName, typename IsUnit>
std::string format_element(const FreeElement<Key>& x, KeyName&& key_name, IsUnit&& is_unit)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, c] : x) {
        for (const auto& m : c.terms()) {
            if (!out.empty())
                out += " + ";
            const bool unit_coeff = m == ConeMonomial::one();
            if (is_unit(k))
                out += to_string(m);
            else if (unit_coeff)
                out += key_name(k);
            else
                out += to_string(m) + "*" + key_name(k);
        }
    }
    return out;
}

}  // namespace eqcohom
