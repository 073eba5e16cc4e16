#include "eqcohom/coeff.hpp"

#include <doctest.h>

#include <vector>

using namespace eqcohom;

namespace {

const ConeMonomial r = ConeMonomial::rho();
const ConeMonomial t = ConeMonomial::tau();
const ConeMonomial th = ConeMonomial::theta();

CoeffElement mul(ConeMonomial x, ConeMonomial y) { return CoeffElement(x) * CoeffElement(y); }

std::vector<ConeMonomial> monomials(int e)
{
    std::vector<ConeMonomial> out;
    for (int a = 0; a <= e; ++a)
        for (int b = 0; b <= e; ++b) {
            out.push_back(ConeMonomial::top(a, b));
            out.push_back(ConeMonomial::bottom(a, b));
        }
    return out;
}

}  // namespace

TEST_CASE("dim_at on the two cones")
{
    CHECK(dim_at({0, -2}) == 1);
    CHECK(dim_at({1, -1}) == 0);
    CHECK(dim_at({2, 2}) == 1);
    CHECK(dim_at({0, 0}) == 1);
    CHECK(dim_at({0, -1}) == 0);
    CHECK(dim_at({-1, -3}) == 1);
    CHECK(dim_at({-1, -2}) == 0);
    CHECK(dim_at({3, 2}) == 0);
}

TEST_CASE("orbit_dim_at lives on p = 0")
{
    CHECK(orbit_dim_at({0, 5}) == 1);
    CHECK(orbit_dim_at({1, 0}) == 0);
    CHECK(orbit_dim_at({0, -3}) == 1);
}

TEST_CASE("monomial_at finds the generator of each group")
{
    CHECK(monomial_at({0, -2}) == th);
    CHECK(monomial_at({0, -3}) == ConeMonomial::bottom(0, 1));
    CHECK(monomial_at({-1, -3}) == ConeMonomial::bottom(1, 0));
    CHECK(monomial_at({2, 2}) == ConeMonomial::top(2, 0));
    CHECK(monomial_at({2, 5}) == ConeMonomial::top(2, 3));
    CHECK_FALSE(monomial_at({1, -1}).has_value());
    for (int p = -6; p <= 6; ++p)
        for (int q = -8; q <= 8; ++q) {
            auto m = monomial_at({p, q});
            CHECK(m.has_value() == (dim_at({p, q}) == 1));
            if (m)
                CHECK(m->degree() == BiDegree{p, q});
        }
}

TEST_CASE("products")
{
    CHECK(mul(r, t) == CoeffElement(ConeMonomial::top(1, 1)));
    CHECK(mul(r, ConeMonomial::bottom(1, 0)) == CoeffElement(th));
    CHECK(mul(t, th).is_zero());
    CHECK(mul(th, ConeMonomial::bottom(0, 1)).is_zero());
    CHECK(mul(ConeMonomial::top(2, 1), ConeMonomial::bottom(3, 5)) == CoeffElement(ConeMonomial::bottom(1, 4)));
    CHECK(mul(ConeMonomial::top(2, 0), ConeMonomial::bottom(1, 5)).is_zero());
    CHECK(mul(ConeMonomial::one(), th) == CoeffElement(th));
}

TEST_CASE("sums cancel mod 2")
{
    CoeffElement x = CoeffElement(r) + CoeffElement(t);
    CHECK(x.terms().size() == 2);
    x += CoeffElement(r);
    CHECK(x == CoeffElement(t));
    x += CoeffElement(t);
    CHECK(x.is_zero());
    CHECK(CoeffElement::from_terms({r, r, t}) == CoeffElement(t));
}

TEST_CASE("strings")
{
    CHECK(to_string(ConeMonomial::top(2, 1)) == "r^2 t");
    CHECK(to_string(ConeMonomial::bottom(1, 2)) == "th/(r t^2)");
    CHECK(to_string(ConeMonomial::one()) == "1");
    CHECK(to_string(th) == "th");
    CHECK(to_string(CoeffElement{}) == "0");
    CHECK(to_string(CoeffElement(r) + CoeffElement(t)) == "t + r");
}

TEST_CASE("commutative and associative on monomials with exponents <= 4")
{
    const auto ms = monomials(4);
    for (const auto& x : ms)
        for (const auto& y : ms) {
            REQUIRE(mul(x, y) == mul(y, x));
            for (const auto& z : ms)
                REQUIRE(mul(x, y) * CoeffElement(z) == CoeffElement(x) * mul(y, z));
        }
}

TEST_CASE("products respect degrees")
{
    const auto ms = monomials(3);
    for (const auto& x : ms)
        for (const auto& y : ms) {
            const CoeffElement xy = mul(x, y);
            for (const auto& m : xy.terms())
                CHECK(m.degree() == x.degree() + y.degree());
        }
}

TEST_CASE("bottom cone is divisible by rho and tau")
{
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            CHECK(mul(r, ConeMonomial::bottom(a + 1, b)) == CoeffElement(ConeMonomial::bottom(a, b)));
            CHECK(mul(t, ConeMonomial::bottom(a, b + 1)) == CoeffElement(ConeMonomial::bottom(a, b)));
        }
}
