#include "eqcohom/stiefel.hpp"

#include <algorithm>
#include <functional>

namespace eqcohom {

FrameClass FrameClass::from_indices(std::vector<int> indices)
{
    std::sort(indices.begin(), indices.end(), std::greater<>());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw std::invalid_argument("frame class indices must be distinct");
    return FrameClass(AdmissibleSequence::from_indices(indices));
}

std::string to_string(const FrameClass& s)
{
    if (s.empty())
        return "[0]";
    std::string out = "[";
    bool first = true;
    auto idx = s.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        const int i = *it;
        if (!first)
            out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "]";
}

std::string to_string(const StiefelElement& x)
{
    return format_element(
        x, [](const FrameClass& s) { return to_string(s); }, [](const FrameClass& s) { return s.empty(); });
}

namespace {

void require_p(int p)
{
    if (p < 2 || p > 31)
        throw std::invalid_argument("V_q(R^{p,q}) needs 2 <= p <= 31, got " + std::to_string(p));
}

void check_element(int p, const StiefelElement& x)
{
    for (const auto& [s, c] : x)
        if (!in_stiefel_range(p, s))
            throw std::invalid_argument(to_string(s) + " is not a class of V_" + std::to_string(stiefel_q(p)) +
                                        "(R^{" + std::to_string(p) + "," + std::to_string(stiefel_q(p)) + "})");
}

std::uint32_t range_mask(int p)
{
    std::uint32_t m = 0;
    for (int i = stiefel_low(p); i < p; ++i)
        m |= std::uint32_t{1} << (i - 1);
    return m;
}

}  // namespace

bool in_stiefel_range(int p, const FrameClass& s) { return (s.sequence().mask() & ~range_mask(p)) == 0; }

std::vector<FrameClass> stiefel_basis(int p)
{
    require_p(p);
    const std::uint32_t range = range_mask(p);
    std::vector<FrameClass> out;
    // Enumerate submasks of the range in increasing order.
    for (std::uint32_t sub = 0;; sub = (sub - range) & range) {
        out.emplace_back(AdmissibleSequence::from_mask(sub));
        if (sub == range)
            break;
    }
    return out;
}

FreeModule stiefel_generators(int p)
{
    std::vector<Generator> gens;
    for (const auto& s : stiefel_basis(p))
        gens.push_back({to_string(s), s.degree()});
    return FreeModule(std::move(gens));
}

RotElement pi_star(int p, const StiefelElement& x)
{
    if (p <= 2)
        throw std::invalid_argument("pi_star needs p > 2");
    check_element(p, x);
    RotElement out;
    for (const auto& [s, c] : x)
        out.add(s.sequence(), c);
    return out;
}

std::optional<StiefelElement> pi_star_preimage(int p, const RotElement& x)
{
    StiefelElement out;
    for (const auto& [s, c] : x) {
        FrameClass f(s);
        if (!in_stiefel_range(p, f))
            return std::nullopt;
        out.add(f, c);
    }
    return out;
}

StiefelElement stiefel_mul(int p, const StiefelElement& x, const StiefelElement& y)
{
    require_p(p);
    check_element(p, x);
    check_element(p, y);
    if (p == 2) {
        const FrameClass top = FrameClass::from_indices({1});
        auto to_sphere = [&](const StiefelElement& e) { return SphereElement{e.coefficient({}), e.coefficient(top)}; };
        const SphereElement z = sphere_mul({1, 1}, to_sphere(x), to_sphere(y));
        StiefelElement out;
        out.add({}, z.unit);
        out.add(top, z.top);
        return out;
    }
    const RotElement product = so_mul(p, pi_star(p, x), pi_star(p, y));
    auto pre = pi_star_preimage(p, product);
    if (!pre)
        throw InconsistencyError("product " + to_string(product) + " is not in the image of pi^* for p=" +
                                 std::to_string(p));
    return *pre;
}

StiefelElement disjoint_union_rule(int p, const StiefelElement& x, const StiefelElement& y)
{
    require_p(p);
    check_element(p, x);
    check_element(p, y);
    StiefelElement out;
    for (const auto& [s, c] : x)
        for (const auto& [t, d] : y)
            if ((s.sequence().mask() & t.sequence().mask()) == 0)
                out.add(FrameClass(AdmissibleSequence::from_mask(s.sequence().mask() | t.sequence().mask())), c * d);
    return out;
}

std::vector<ProductRuleDeviation> audit_product_rule(int p)
{
    std::vector<ProductRuleDeviation> out;
    const auto basis = stiefel_basis(p);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            const StiefelElement x(basis[i]);
            const StiefelElement y(basis[j]);
            StiefelElement oracle = stiefel_mul(p, x, y);
            StiefelElement closed = disjoint_union_rule(p, x, y);
            if (!(oracle == closed))
                out.push_back({basis[i], basis[j], std::move(oracle), std::move(closed)});
        }
    return out;
}

}  // namespace eqcohom
