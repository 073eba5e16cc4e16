#include "eqcohom/projective.hpp"

#include "eqcohom/gf2.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace eqcohom {

Ambient Ambient::finite(int n)
{
    if (n <= 0)
        throw std::invalid_argument("RP^n_tw needs n >= 1, got " + std::to_string(n));
    return Ambient(n);
}

std::string to_string(const Ambient& n) { return n.is_infinite() ? "inf" : std::to_string(n.n()); }

std::vector<ProjMonomial> rp_basis(Ambient n)
{
    if (n.is_infinite())
        throw std::invalid_argument("rp_basis: RP^inf has an infinite basis, use rp_basis_prefix");
    return rp_basis_prefix(static_cast<std::size_t>(n.n()) + 1);
}

std::vector<ProjMonomial> rp_basis_prefix(std::size_t count)
{
    std::vector<ProjMonomial> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back({static_cast<std::uint8_t>(k % 2), static_cast<std::uint16_t>(k / 2)});
    return out;
}

ProjElement rp_mul(Ambient n, const ProjMonomial& x, const ProjMonomial& y)
{
    ProjElement out;
    const int eps = x.eps + y.eps;
    const int j = x.j + y.j;
    auto put = [&](int e, int jj, CoeffElement c) {
        if (n.admits(e, jj))
            out.add({static_cast<std::uint8_t>(e), static_cast<std::uint16_t>(jj)}, c);
    };
    if (eps < 2) {
        put(eps, j, CoeffElement::one());
        return out;
    }
    // a^2 = rho a + tau b, and a^2 = rho a on S^{1,1}
    put(1, j, ConeMonomial::rho());
    if (n.is_infinite() || n.n() >= 2)
        put(0, j + 1, ConeMonomial::tau());
    return out;
}

void check_ambient(Ambient n, const ProjElement& x)
{
    for (const auto& [m, c] : x)
        if (!n.admits(m.eps, m.j))
            throw std::invalid_argument("monomial " + to_string(m) + " does not exist in RP^" + to_string(n) +
                                        "_tw");
}

ProjElement rp_mul(Ambient n, const ProjElement& x, const ProjElement& y)
{
    check_ambient(n, x);
    check_ambient(n, y);
    ProjElement out;
    for (const auto& [m, c] : x)
        for (const auto& [k, d] : y) {
            const CoeffElement cd = c * d;
            if (!cd.is_zero())
                out += cd * rp_mul(n, m, k);
        }
    return out;
}

ProjElement truncate(Ambient n, const ProjElement& x)
{
    ProjElement out;
    for (const auto& [m, c] : x)
        if (n.admits(m.eps, m.j))
            out.add(m, c);
    return out;
}

std::string to_string(const ProjMonomial& m, int index)
{
    const std::string suffix = index > 0 ? std::to_string(index) : std::string{};
    std::string out;
    if (m.eps)
        out = "a" + suffix;
    if (m.j) {
        if (!out.empty())
            out += "*";
        out += "b" + suffix;
        if (m.j > 1)
            out += "^" + std::to_string(m.j);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const ProjElement& x)
{
    return format_element(
        x, [](const ProjMonomial& m) { return to_string(m); },
        [](const ProjMonomial& m) { return m.eps == 0 && m.j == 0; });
}

TensorFactors::TensorFactors(std::vector<Ambient> ambients) : ambients_(std::move(ambients)) {}

TensorFactors TensorFactors::descending(int top)
{
    std::vector<Ambient> a;
    for (int n = top; n >= 1; --n)
        a.push_back(Ambient::finite(n));
    return TensorFactors(std::move(a));
}

std::optional<std::size_t> TensorFactors::position_of(int n) const
{
    for (std::size_t k = 0; k < ambients_.size(); ++k)
        if (!ambients_[k].is_infinite() && ambients_[k].n() == n)
            return k;
    return std::nullopt;
}

BiDegree TensorMonomial::degree() const
{
    BiDegree d{};
    for (const auto& m : parts)
        d += m.degree();
    return d;
}

bool TensorMonomial::is_unit() const
{
    for (const auto& m : parts)
        if (m.eps || m.j)
            return false;
    return true;
}

BiDegree degree_of(const TensorMonomial& m) { return m.degree(); }

TensorMonomial tensor_unit(const TensorFactors& f) { return TensorMonomial{std::vector<ProjMonomial>(f.size())}; }

TensorMonomial tensor_single(const TensorFactors& f, std::size_t k, ProjMonomial m)
{
    if (k >= f.size())
        throw std::out_of_range("tensor_single: factor index out of range");
    if (!f[k].admits(m.eps, m.j))
        throw std::invalid_argument("tensor_single: monomial outside RP^" + to_string(f[k]) + "_tw");
    TensorMonomial t = tensor_unit(f);
    t.parts[k] = m;
    return t;
}

void check_factors(const TensorFactors& f, const TensorElement& x)
{
    for (const auto& [t, c] : x) {
        if (t.parts.size() != f.size())
            throw std::invalid_argument("tensor element has the wrong number of factors");
        for (std::size_t k = 0; k < f.size(); ++k)
            if (!f[k].admits(t.parts[k].eps, t.parts[k].j))
                throw std::invalid_argument("tensor monomial outside its factor RP^" + to_string(f[k]) + "_tw");
    }
}

namespace {

// Product of two tensor monomials as a list of (coefficient, monomial) terms.
void multiply_into(const TensorFactors& f, const TensorMonomial& x, const TensorMonomial& y,
                   const CoeffElement& scale, TensorElement& out)
{
    // Each factor contributes at most two terms, so expand factor by factor.
    std::vector<std::pair<CoeffElement, TensorMonomial>> partial{{scale, TensorMonomial{}}};
    for (auto& [c, t] : partial)
        t.parts.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const ProjElement prod = rp_mul(f[k], x.parts[k], y.parts[k]);
        if (prod.is_zero())
            return;
        if (prod.size() == 1 && prod.begin()->second.is_one()) {
            for (auto& [c, t] : partial)
                t.parts.push_back(prod.begin()->first);
            continue;
        }
        std::vector<std::pair<CoeffElement, TensorMonomial>> next;
        next.reserve(partial.size() * prod.size());
        for (const auto& [c, t] : partial)
            for (const auto& [m, d] : prod) {
                CoeffElement cd = c * d;
                if (cd.is_zero())
                    continue;
                TensorMonomial u = t;
                u.parts.push_back(m);
                next.emplace_back(std::move(cd), std::move(u));
            }
        if (next.empty())
            return;
        partial = std::move(next);
    }
    for (const auto& [c, t] : partial)
        out.add(t, c);
}

}  // namespace

TensorElement tensor_mul(const TensorFactors& f, const TensorElement& x, const TensorElement& y)
{
    check_factors(f, x);
    check_factors(f, y);
    TensorElement out;
    for (const auto& [s, c] : x)
        for (const auto& [t, d] : y) {
            const CoeffElement cd = c * d;
            if (!cd.is_zero())
                multiply_into(f, s, t, cd, out);
        }
    return out;
}

std::string to_string(const TensorFactors& f, const TensorMonomial& m)
{
    std::string out;
    for (std::size_t k = 0; k < f.size() && k < m.parts.size(); ++k) {
        if (m.parts[k].eps == 0 && m.parts[k].j == 0)
            continue;
        if (!out.empty())
            out += "|";
        out += to_string(m.parts[k], f[k].is_infinite() ? 0 : f[k].n());
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const TensorFactors& f, const TensorElement& x)
{
    return format_element(
        x, [&f](const TensorMonomial& m) { return to_string(f, m); },
        [](const TensorMonomial& m) { return m.is_unit(); });
}

std::optional<BiDegree> homogeneous_degree(const TensorElement& x)
{
    std::optional<BiDegree> d;
    for (const auto& [t, c] : x)
        for (const auto& m : c.terms()) {
            const BiDegree e = m.degree() + t.degree();
            if (d && *d != e)
                throw std::invalid_argument("expected a homogeneous element, found bidegrees " + to_string(*d) +
                                            " and " + to_string(e));
            d = e;
        }
    return d;
}

std::optional<std::vector<CoeffElement>> expand_in_basis(const TensorFactors& f,
                                                         std::span<const TensorElement> basis,
                                                         const TensorElement& target, BiDegree degree)
{
    std::vector<const TensorElement*> ptrs;
    ptrs.reserve(basis.size());
    for (const auto& b : basis)
        ptrs.push_back(&b);
    return expand_in_basis(f, std::span<const TensorElement* const>(ptrs), target, degree);
}

std::optional<std::vector<CoeffElement>> expand_in_basis(const TensorFactors& f,
                                                         std::span<const TensorElement* const> basis,
                                                         const TensorElement& target, BiDegree degree)
{
    if (auto d = homogeneous_degree(target); d && *d != degree)
        throw std::invalid_argument("expand_in_basis: target lives in " + to_string(*d) + ", not " +
                                    to_string(degree));
    check_factors(f, target);

    using RowKey = std::pair<ConeMonomial, TensorMonomial>;
    std::map<RowKey, std::size_t> rows;
    auto row_of = [&rows](const ConeMonomial& m, const TensorMonomial& t) {
        auto [it, inserted] = rows.try_emplace(RowKey{m, t}, rows.size());
        return it->second;
    };

    // Column i is m_i * basis_i where m_i is the monomial in degree - deg(basis_i).
    std::vector<std::optional<ConeMonomial>> scalar(basis.size());
    std::vector<std::vector<std::size_t>> columns(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        check_factors(f, *basis[i]);
        const auto bdeg = homogeneous_degree(*basis[i]);
        if (!bdeg)
            continue;
        scalar[i] = monomial_at(degree - *bdeg);
        if (!scalar[i])
            continue;
        for (const auto& [t, c] : *basis[i])
            for (const auto& m : c.terms())
                if (auto mm = monomial_mul(*scalar[i], m))
                    columns[i].push_back(row_of(*mm, t));
    }
    std::vector<std::size_t> rhs;
    for (const auto& [t, c] : target)
        for (const auto& m : c.terms())
            rhs.push_back(row_of(m, t));

    gf2::BitMatrix a(rows.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t r : columns[i])
            a.flip(r, i);
    gf2::BitVector b(rows.size());
    for (std::size_t r : rhs)
        b.flip(r);

    auto x = gf2::solve(a, b);
    if (!x)
        return std::nullopt;
    std::vector<CoeffElement> coords(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (x->get(i))
            coords[i] = *scalar[i];
    return coords;
}

std::optional<std::vector<CoeffElement>> expand_in_basis(const TensorFactors& f,
                                                         std::span<const TensorElement> basis,
                                                         const TensorElement& target)
{
    const auto d = homogeneous_degree(target);
    if (!d)
        return std::vector<CoeffElement>(basis.size());
    return expand_in_basis(f, basis, target, *d);
}

}  // namespace eqcohom
