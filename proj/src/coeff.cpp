#include "eqcohom/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace eqcohom {

std::string to_string(BiDegree d)
{
    return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

std::ostream& operator<<(std::ostream& os, BiDegree d) { return os << to_string(d); }

namespace {

std::string power(const char* base, int e)
{
    if (e == 0)
        return {};
    if (e == 1)
        return base;
    return std::string(base) + "^" + std::to_string(e);
}

std::string rho_tau_word(int a, int b)
{
    std::string r = power("r", a);
    std::string t = power("t", b);
    if (!r.empty() && !t.empty())
        return r + " " + t;
    return r + t;
}

}  // namespace

std::string to_string(const ConeMonomial& m)
{
    std::string word = rho_tau_word(m.rho_exp(), m.tau_exp());
    if (m.is_top())
        return word.empty() ? "1" : word;
    return word.empty() ? "th" : "th/(" + word + ")";
}

int dim_at(BiDegree d)
{
    const bool top = d.p >= 0 && d.q >= d.p;
    const bool bottom = d.p <= 0 && d.q <= d.p - 2;
    return (top || bottom) ? 1 : 0;
}

int orbit_dim_at(BiDegree d) { return d.p == 0 ? 1 : 0; }

std::optional<ConeMonomial> monomial_at(BiDegree d)
{
    if (d.p >= 0 && d.q >= d.p)
        return ConeMonomial::top(d.p, d.q - d.p);
    if (d.p <= 0 && d.q <= d.p - 2)
        return ConeMonomial::bottom(-d.p, d.p - d.q - 2);
    return std::nullopt;
}

std::optional<ConeMonomial> monomial_mul(const ConeMonomial& x, const ConeMonomial& y)
{
    if (x.is_top() && y.is_top())
        return ConeMonomial::top(x.rho_exp() + y.rho_exp(), x.tau_exp() + y.tau_exp());
    if (x.is_bottom() && y.is_bottom())
        return std::nullopt;
    const ConeMonomial& t = x.is_top() ? x : y;
    const ConeMonomial& b = x.is_top() ? y : x;
    if (b.rho_exp() < t.rho_exp() || b.tau_exp() < t.tau_exp())
        return std::nullopt;
    return ConeMonomial::bottom(b.rho_exp() - t.rho_exp(), b.tau_exp() - t.tau_exp());
}

CoeffElement CoeffElement::from_terms(std::vector<ConeMonomial> terms)
{
    std::sort(terms.begin(), terms.end());
    CoeffElement out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.terms_.push_back(terms[i]);
        i = j;
    }
    return out;
}

bool CoeffElement::contains(const ConeMonomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

CoeffElement CoeffElement::component(BiDegree d) const
{
    for (const auto& m : terms_)
        if (m.degree() == d)
            return m;
    return {};
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o)
{
    std::vector<ConeMonomial> sum;
    sum.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(sum));
    terms_ = std::move(sum);
    return *this;
}

CoeffElement operator*(const CoeffElement& x, const CoeffElement& y)
{
    if (x.is_one())
        return y;
    if (y.is_one())
        return x;
    std::vector<ConeMonomial> products;
    for (const auto& m : x.terms_)
        for (const auto& n : y.terms_)
            if (auto mn = monomial_mul(m, n))
                products.push_back(*mn);
    return CoeffElement::from_terms(std::move(products));
}

std::string to_string(const CoeffElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < x.terms().size(); ++i) {
        if (i)
            os << " + ";
        os << to_string(x.terms()[i]);
    }
    return os.str();
}

}  // namespace eqcohom
