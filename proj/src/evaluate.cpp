#include "eqcohom/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqcohom {

namespace {

using expr::Atom;
using expr::Node;

class Evaluator
{
public:
    explicit Evaluator(const Space& s) : s_(s) {}

    Value eval(const Node& n) const
    {
        switch (n.kind) {
        case Node::Kind::atom:
            return atom(n.atom);
        case Node::Kind::sum: {
            Value acc = zero();
            for (const auto& c : n.children)
                acc = add(acc, eval(*c));
            return acc;
        }
        case Node::Kind::product: {
            Value acc = eval(*n.children.front());
            for (std::size_t k = 1; k < n.children.size(); ++k)
                acc = mul(acc, eval(*n.children[k]));
            return acc;
        }
        case Node::Kind::power: {
            const Value base = eval(*n.children.front());
            Value acc = one();
            for (int k = 0; k < n.exponent; ++k)
                acc = mul(acc, base);
            return acc;
        }
        }
        throw std::logic_error("bad expression node");
    }

    Value scalar(const CoeffElement& c) const
    {
        switch (s_.kind) {
        case Space::Kind::point:
            return c;
        case Space::Kind::sphere:
            return SphereElement{c, {}};
        case Space::Kind::rp:
            return ProjElement(ProjMonomial{}, c);
        case Space::Kind::tensor:
            return TensorElement(tensor_unit(s_.factors), c);
        case Space::Kind::so:
            return RotElement(AdmissibleSequence{}, c);
        case Space::Kind::stiefel:
            return StiefelElement(FrameClass{}, c);
        }
        throw std::logic_error("bad space");
    }

    Value zero() const { return scalar({}); }
    Value one() const { return scalar(CoeffElement::one()); }

private:
    Value atom(const Atom& a) const
    {
        switch (a.kind) {
        case Atom::Kind::integer:
            return a.value % 2 ? one() : zero();
        case Atom::Kind::rho:
            return scalar(ConeMonomial::rho());
        case Atom::Kind::tau:
            return scalar(ConeMonomial::tau());
        case Atom::Kind::theta:
            return scalar(ConeMonomial::bottom(a.rho_div, a.tau_div));
        case Atom::Kind::x:
            return SphereElement{{}, CoeffElement::one()};
        case Atom::Kind::a:
        case Atom::Kind::b: {
            const ProjMonomial m = a.kind == Atom::Kind::a ? ProjMonomial{1, 0} : ProjMonomial{0, 1};
            if (s_.kind == Space::Kind::rp)
                return ProjElement(m);
            return TensorElement(tensor_single(s_.factors, *s_.factors.position_of(a.value), m));
        }
        case Atom::Kind::rot_generator:
            return rotation_algebra(s_.n).generator(a.value);
        case Atom::Kind::rot_class:
            if (a.indices == std::vector<int>{0})
                return one();
            return RotElement(AdmissibleSequence::from_indices(a.indices));
        case Atom::Kind::frame_class: {
            if (a.indices == std::vector<int>{0})
                return one();
            std::vector<int> idx = a.indices;
            std::sort(idx.begin(), idx.end());
            if (std::adjacent_find(idx.begin(), idx.end()) != idx.end() || idx.front() < 1 || idx.back() > 31)
                return zero();
            const FrameClass f = FrameClass::from_indices(idx);
            if (!in_stiefel_range(s_.n, f))
                return zero();
            return StiefelElement(f);
        }
        }
        throw std::logic_error("bad atom");
    }

    Value add(const Value& x, const Value& y) const
    {
        return std::visit(
            [&](const auto& u) -> Value {
                using T = std::decay_t<decltype(u)>;
                const T& v = std::get<T>(y);
                if constexpr (std::is_same_v<T, SphereElement>)
                    return SphereElement{u.unit + v.unit, u.top + v.top};
                else
                    return u + v;
            },
            x);
    }

    Value mul(const Value& x, const Value& y) const
    {
        return std::visit(
            [&](const auto& u) -> Value {
                using T = std::decay_t<decltype(u)>;
                const T& v = std::get<T>(y);
                if constexpr (std::is_same_v<T, CoeffElement>)
                    return u * v;
                else if constexpr (std::is_same_v<T, SphereElement>)
                    return sphere_mul(s_.sphere, u, v);
                else if constexpr (std::is_same_v<T, ProjElement>)
                    return rp_mul(s_.rp, u, v);
                else if constexpr (std::is_same_v<T, TensorElement>)
                    return tensor_mul(s_.factors, u, v);
                else if constexpr (std::is_same_v<T, RotElement>)
                    return so_mul(s_.n, u, v);
                else
                    return stiefel_mul(s_.n, u, v);
            },
            x);
    }

    const Space& s_;
};

std::string format_sphere(const SphereElement& x)
{
    std::string out;
    for (const auto& m : x.unit.terms())
        out += (out.empty() ? "" : " + ") + to_string(m);
    for (const auto& m : x.top.terms())
        out += (out.empty() ? "" : " + ") + (m == ConeMonomial::one() ? std::string("x") : to_string(m) + "*x");
    return out.empty() ? "0" : out;
}

}  // namespace

Value evaluate(const expr::Node& node, const Space& space)
{
    expr::resolve(node, space);
    return Evaluator(space).eval(node);
}

Value evaluate(std::string_view input, const Space& space)
{
    const expr::Expr e = expr::parse_expr(input, space);
    return Evaluator(space).eval(*e);
}

std::string format_value(const Space& space, const Value& v)
{
    return std::visit(
        [&](const auto& u) -> std::string {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, SphereElement>)
                return format_sphere(u);
            else if constexpr (std::is_same_v<T, TensorElement>)
                return to_string(space.factors, u);
            else
                return to_string(u);
        },
        v);
}

ClassicalElement psi_value(const Space& space, const Value& v)
{
    return std::visit(
        [&](const auto& u) -> ClassicalElement {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, CoeffElement>) {
                ClassicalElement out;
                if (psi_coeff(u))
                    out.toggle({"1", 0});
                return out;
            } else if constexpr (std::is_same_v<T, SphereElement>) {
                return psi_element(space.sphere, u);
            } else if constexpr (std::is_same_v<T, TensorElement>) {
                return psi_element(space.factors, u);
            } else {
                return psi_element(u);
            }
        },
        v);
}

}  // namespace eqcohom
