#include "eqcohom/projective.hpp"
#include "eqcohom/rotation.hpp"

#include <doctest.h>

#include <vector>

using namespace eqcohom;

namespace {

const ProjMonomial one{0, 0};
const ProjMonomial a{1, 0};
const ProjMonomial b{0, 1};
const ProjMonomial ab{1, 1};

ProjElement e(ProjMonomial m, CoeffElement c = CoeffElement::one()) { return ProjElement(m, c); }

std::vector<BiDegree> degrees(const std::vector<ProjMonomial>& ms)
{
    std::vector<BiDegree> out;
    for (const auto& m : ms)
        out.push_back(m.degree());
    return out;
}

}  // namespace

TEST_CASE("rp_basis")
{
    CHECK(degrees(rp_basis(Ambient::finite(3))) == std::vector<BiDegree>{{0, 0}, {1, 1}, {2, 1}, {3, 2}});
    CHECK(rp_basis(Ambient::finite(1)) == std::vector<ProjMonomial>{one, a});
    CHECK(rp_basis(Ambient::finite(4)) == std::vector<ProjMonomial>{one, a, b, ab, ProjMonomial{0, 2}});
    CHECK(degrees(rp_basis(Ambient::finite(4))) == std::vector<BiDegree>{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 2}});
    CHECK_THROWS(rp_basis(Ambient::infinite()));
    CHECK_THROWS(Ambient::finite(0));
    CHECK(rp_basis_prefix(3) == std::vector<ProjMonomial>{one, a, b});
}

TEST_CASE("rp_mul examples")
{
    const Ambient n3 = Ambient::finite(3);
    CHECK(rp_mul(n3, a, a) == e(a, ConeMonomial::rho()) + e(b, ConeMonomial::tau()));
    CHECK(rp_mul(n3, b, b).is_zero());
    CHECK(rp_mul(Ambient::finite(4), ab, b).is_zero());
    CHECK(rp_mul(Ambient::finite(1), a, a) == e(a, ConeMonomial::rho()));
    CHECK(rp_mul(Ambient::infinite(), b, b) == e(ProjMonomial{0, 2}));
    CHECK(rp_mul(n3, one, ab) == e(ab));
}

TEST_CASE("a^3 in RP^inf")
{
    const Ambient inf = Ambient::infinite();
    const ProjElement a3 = rp_mul(inf, rp_mul(inf, a, a), e(a));
    // a^3 = r a^2 + t ab = r^2 a + r t b + t ab
    CHECK(a3 == e(a, ConeMonomial::top(2, 0)) + e(b, ConeMonomial::top(1, 1)) + e(ab, ConeMonomial::tau()));
}

TEST_CASE("rp_mul is commutative and associative for n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        const Ambient amb = Ambient::finite(n);
        const auto basis = rp_basis(amb);
        for (const auto& x : basis)
            for (const auto& y : basis) {
                REQUIRE(rp_mul(amb, x, y) == rp_mul(amb, y, x));
                for (const auto& z : basis)
                    REQUIRE(rp_mul(amb, rp_mul(amb, x, y), e(z)) == rp_mul(amb, e(x), rp_mul(amb, y, z)));
            }
    }
}

TEST_CASE("finite products are truncations of infinite ones")
{
    for (int n = 2; n <= 7; ++n) {
        const Ambient amb = Ambient::finite(n);
        for (const auto& x : rp_basis(amb))
            for (const auto& y : rp_basis(amb))
                CHECK(truncate(amb, rp_mul(Ambient::infinite(), x, y)) == rp_mul(amb, x, y));
    }
}

TEST_CASE("monomials outside the ambient are rejected")
{
    CHECK_THROWS(check_ambient(Ambient::finite(2), e(ab)));
    CHECK_NOTHROW(check_ambient(Ambient::finite(3), e(ab)));
}

TEST_CASE("strings")
{
    CHECK(to_string(a) == "a");
    CHECK(to_string(ProjMonomial{0, 2}) == "b^2");
    CHECK(to_string(ab) == "a*b");
    CHECK(to_string(ProjMonomial{1, 2}, 3) == "a3*b3^2");
    CHECK(to_string(e(a, ConeMonomial::rho()) + e(b, ConeMonomial::tau())) == "r*a + t*b");
}

TEST_CASE("tensor_mul")
{
    const TensorFactors f({Ambient::finite(3), Ambient::finite(2)});
    const TensorElement a3(tensor_single(f, 0, a));
    const TensorElement b3(tensor_single(f, 0, b));
    const TensorElement a2(tensor_single(f, 1, a));
    CHECK(tensor_mul(f, a3, a3) == ConeMonomial::rho() * a3 + ConeMonomial::tau() * b3);
    CHECK(tensor_mul(f, a3, a2) == TensorElement(TensorMonomial{{a, a}}));
    CHECK(tensor_mul(f, b3, b3).is_zero());
    CHECK(to_string(f, TensorMonomial{{ab, a}}) == "a3*b3|a2");
    CHECK(to_string(f, tensor_unit(f)) == "1");
    CHECK(f.position_of(2) == 1u);
    CHECK_FALSE(f.position_of(5).has_value());
    CHECK(TensorFactors::descending(3).ambients() ==
          std::vector<Ambient>{Ambient::finite(3), Ambient::finite(2), Ambient::finite(1)});
}

TEST_CASE("homogeneous_degree")
{
    const TensorFactors f({Ambient::finite(3)});
    CHECK_FALSE(homogeneous_degree(TensorElement{}).has_value());
    CHECK(homogeneous_degree(TensorElement(tensor_single(f, 0, ab))) == BiDegree{3, 2});
    const TensorElement mixed = TensorElement(tensor_single(f, 0, a)) + TensorElement(tensor_single(f, 0, b));
    CHECK_THROWS(homogeneous_degree(mixed));
}

TEST_CASE("expand_in_basis in the SO(4,2) setup")
{
    const RotationAlgebra& alg = rotation_algebra(4);
    const TensorFactors& f = alg.factors();
    std::vector<TensorElement> basis;
    for (const auto& s : alg.basis())
        basis.push_back(alg.omega_basis(s));
    const auto idx = [&](std::vector<int> i) {
        const auto s = AdmissibleSequence::from_indices(i);
        return static_cast<std::size_t>(std::find(alg.basis().begin(), alg.basis().end(), s) - alg.basis().begin());
    };

    const TensorElement b1 = alg.omega_generator(1);
    auto c = expand_in_basis(f, basis, tensor_mul(f, b1, b1));
    REQUIRE(c.has_value());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == idx({1}))
            CHECK((*c)[k] == CoeffElement(ConeMonomial::rho()));
        else if (k == idx({2}))
            CHECK((*c)[k] == CoeffElement(ConeMonomial::tau()));
        else
            CHECK((*c)[k].is_zero());
    }

    c = expand_in_basis(f, basis, basis[idx({3, 1})]);
    REQUIRE(c.has_value());
    for (std::size_t k = 0; k < basis.size(); ++k)
        CHECK((*c)[k] == (k == idx({3, 1}) ? CoeffElement::one() : CoeffElement{}));

    const TensorElement b2 = alg.omega_generator(2);
    c = expand_in_basis(f, basis, tensor_mul(f, b2, b2));
    REQUIRE(c.has_value());
    for (const auto& x : *c)
        CHECK(x.is_zero());

    // a single factor monomial is not in the image
    CHECK_FALSE(expand_in_basis(f, basis, TensorElement(tensor_single(f, 0, a))).has_value());
}
