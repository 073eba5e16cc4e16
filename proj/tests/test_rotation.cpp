#include "eqcohom/rotation.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace eqcohom;

namespace {

RotElement B(std::vector<int> idx, CoeffElement c = CoeffElement::one())
{
    return RotElement(AdmissibleSequence::from_indices(idx), c);
}

RotElement g(int p, int i) { return rotation_algebra(p).generator(i); }

const ConeMonomial r = ConeMonomial::rho();
const ConeMonomial t = ConeMonomial::tau();

// Monomial with exponents at one factor of (RP^{p-1}, ..., RP^1).
TensorMonomial at(const TensorFactors& f, int j, ProjMonomial m) { return tensor_single(f, *f.position_of(j), m); }

}  // namespace

TEST_CASE("admissible sequences")
{
    CHECK(admissible_sequences(2) == std::vector<AdmissibleSequence>{{}, AdmissibleSequence::single(1)});
    const auto s3 = admissible_sequences(3);
    CHECK(std::set<AdmissibleSequence>(s3.begin(), s3.end()) ==
          std::set<AdmissibleSequence>{{}, AdmissibleSequence::single(1), AdmissibleSequence::single(2),
                                       AdmissibleSequence::from_indices({2, 1})});
    CHECK(admissible_sequences(4).size() == 8);
    CHECK_THROWS(AdmissibleSequence::from_indices({1, 2}));
    CHECK_THROWS(AdmissibleSequence::from_indices({2, 2}));
    const auto s = AdmissibleSequence::from_indices({4, 3});
    CHECK(s.indices() == std::vector<int>{4, 3});
    CHECK(s.degree() == BiDegree{7, 4});
    CHECK(to_string(s) == "B[4,3]");
    CHECK(to_string(AdmissibleSequence{}) == "B[0]");
    CHECK(s.valid_for(5));
    CHECK_FALSE(s.valid_for(4));
}

TEST_CASE("so_generators")
{
    auto degs = [](int p) { return so_generators(p).degrees(); };
    CHECK(degs(4) == std::vector<BiDegree>{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {3, 2}, {4, 3}, {5, 3}, {6, 4}});
    CHECK(degs(5) == std::vector<BiDegree>{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {3, 2}, {4, 2}, {4, 3}, {5, 3},
                                           {5, 3}, {6, 3}, {6, 4}, {7, 4}, {7, 4}, {8, 5}, {9, 5}, {10, 6}});
    CHECK(degs(2) == std::vector<BiDegree>{{0, 0}, {1, 1}});
}

TEST_CASE("exponent_bound")
{
    CHECK(exponent_bound(2, 5) == 4);
    CHECK(exponent_bound(3, 4) == 2);
    CHECK(exponent_bound(3, 7) == 4);
    CHECK(exponent_bound(5, 6) == 2);
    CHECK_THROWS(exponent_bound(1, 5));
    CHECK_THROWS(exponent_bound(5, 5));
}

TEST_CASE("omega^* on generators")
{
    const RotationAlgebra& a4 = rotation_algebra(4);
    const TensorFactors& f = a4.factors();
    const ProjMonomial a{1, 0}, b{0, 1}, ab{1, 1};
    CHECK(a4.omega_generator(1) ==
          TensorElement(at(f, 1, a)) + TensorElement(at(f, 2, a)) + TensorElement(at(f, 3, a)));
    CHECK(a4.omega_generator(2) == TensorElement(at(f, 2, b)) + TensorElement(at(f, 3, b)));
    CHECK(a4.omega_generator(3) == TensorElement(at(f, 3, ab)));

    const RotationAlgebra& a5 = rotation_algebra(5);
    CHECK(a5.omega_generator(4) == TensorElement(at(a5.factors(), 4, ProjMonomial{0, 2})));
    CHECK(a5.omega_generator(3) ==
          TensorElement(at(a5.factors(), 3, ab)) + TensorElement(at(a5.factors(), 4, ab)));
}

TEST_CASE("so_mul examples")
{
    CHECK(so_mul(5, g(5, 2), g(5, 2)) == B({4}));
    CHECK(so_mul(4, g(4, 3), g(4, 3)).is_zero());
    CHECK(so_mul(5, g(5, 1), g(5, 1)) == B({1}, r) + B({2}, t));
    CHECK(so_mul(5, g(5, 2), g(5, 3)) == B({3, 2}));
    CHECK(so_mul(4, g(4, 2), g(4, 2)).is_zero());
    CHECK(so_mul(2, g(2, 1), g(2, 1)) == B({1}, r));
}

TEST_CASE("pinned oracle values where the closed form differs")
{
    // (a5 b5)^2 = r a5 b5^2 survives in RP^5_tw.
    CHECK(so_mul(6, g(6, 3), g(6, 3)) == B({5}, r));
    CHECK(so_mul(7, g(7, 3), g(7, 3)) == B({5}, r) + B({6}, t));
    CHECK(so_mul(8, g(8, 3), g(8, 3)) == B({5}, r) + B({6}, t));
}

TEST_CASE("check_presentation")
{
    CHECK(check_presentation(4).all_match());
    CHECK(check_presentation(5).all_match());
    CHECK(check_presentation(3).all_match());
    const PresentationReport r6 = check_presentation(6);
    CHECK_FALSE(r6.all_match());
    const PresentationReport r7 = check_presentation(7);
    bool found = false;
    for (const auto& rel : r7.relations)
        if (rel.lhs == "B3^2") {
            found = true;
            CHECK(rel.oracle == so_mul(7, g(7, 3), g(7, 3)));
            CHECK(rel.claimed == B({6}));
            CHECK_FALSE(rel.match);
        }
    CHECK(found);
    CHECK(r7.to_text().find("B3^2") != std::string::npos);
}

TEST_CASE("cached and direct products agree")
{
    for (int p = 2; p <= 6; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        for (const auto& s : alg.basis())
            for (const auto& u : alg.basis())
                REQUIRE(alg.mul(RotElement(s), RotElement(u)) == alg.mul_direct(RotElement(s), RotElement(u)));
    }
}

TEST_CASE("omega^* is a ring map")
{
    for (int p = 2; p <= 7; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        for (int i = 1; i < p; ++i)
            for (int j = 1; j < p; ++j)
                REQUIRE(alg.omega_star(alg.mul(g(p, i), g(p, j))) ==
                        tensor_mul(alg.factors(), alg.omega_generator(i), alg.omega_generator(j)));
    }
}

TEST_CASE("omega^* images are homogeneous and pull back")
{
    for (int p = 2; p <= 7; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        for (const auto& s : alg.basis()) {
            REQUIRE(homogeneous_degree(alg.omega_basis(s)) == s.degree());
            REQUIRE(alg.pull_back(alg.omega_basis(s)) == RotElement(s));
        }
    }
}

TEST_CASE("so_mul is commutative and associative for p <= 6")
{
    for (int p = 2; p <= 6; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        for (const auto& x : alg.basis())
            for (const auto& y : alg.basis()) {
                const RotElement xy = alg.mul(RotElement(x), RotElement(y));
                REQUIRE(xy == alg.mul(RotElement(y), RotElement(x)));
                for (const auto& z : alg.basis())
                    REQUIRE(alg.mul(xy, RotElement(z)) == alg.mul(RotElement(x), alg.basis_product(y, z)));
            }
    }
}

TEST_CASE("products of distinct generators in decreasing order are basis elements")
{
    CHECK(so_mul(7, g(7, 4), so_mul(7, g(7, 5), g(7, 6))) == B({6, 5, 4}));
    CHECK(so_mul(6, g(6, 1), g(6, 5)) == B({5, 1}));
}

TEST_CASE("bad input")
{
    CHECK_THROWS(rotation_algebra(1));
    CHECK_THROWS(g(4, 4));
    CHECK_THROWS(so_mul(4, B({4}), g(4, 1)));
}
