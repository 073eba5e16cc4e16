#include "eqcohom/forgetful.hpp"
#include "eqcohom/space.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace eqcohom;

namespace {

RotElement B(std::vector<int> idx, CoeffElement c = CoeffElement::one())
{
    return RotElement(AdmissibleSequence::from_indices(idx), c);
}

ClassicalElement classical(std::initializer_list<ClassicalTerm> ts)
{
    ClassicalElement out;
    for (const auto& t : ts)
        out.toggle(t);
    return out;
}

}  // namespace

TEST_CASE("psi_coeff")
{
    CHECK(psi_coeff(ConeMonomial::top(0, 5)) == 1);
    CHECK(psi_coeff(ConeMonomial::rho()) == 0);
    CHECK(psi_coeff(ConeMonomial::theta()) == 0);
    CHECK(psi_coeff(ConeMonomial::bottom(0, 3)) == 0);
    CHECK(psi_coeff(CoeffElement(ConeMonomial::tau()) + CoeffElement::one()) == 0);
}

TEST_CASE("psi on SO(4,2)")
{
    const RotElement b1 = rotation_algebra(4).generator(1);
    CHECK(psi_element(so_mul(4, b1, b1)) == classical({{"B[2]", 2}}));
    CHECK(psi_element(B({3}, ConeMonomial::tau())) == classical({{"B[3]", 3}}));
    CHECK(psi_element(B({3}, ConeMonomial::rho())).is_zero());
}

TEST_CASE("classical Poincare polynomials")
{
    CHECK(to_string(classical_poincare_so(4)) == "1 + t + t^2 + 2t^3 + t^4 + t^5 + t^6");
    CHECK(to_string(classical_poincare_stiefel(5)) == "1 + t^3 + t^4 + t^7");
    CHECK(to_string(classical_poincare_so(2)) == "1 + t");
    CHECK(psi_image_poincare(so_generators(4)).at(3) == 2);
    CHECK(psi_image_poincare(stiefel_generators(5)) == classical_poincare_stiefel(5));
    CHECK(psi_image_poincare(so_generators(2)) == classical_poincare_so(2));
    for (int p = 2; p <= 12; ++p) {
        CHECK(psi_image_poincare(so_generators(p)) == classical_poincare_so(p));
        CHECK(psi_image_poincare(stiefel_generators(p)) == classical_poincare_stiefel(p));
        CHECK(classical_poincare_so(p).total() == (std::uint64_t{1} << (p - 1)));
    }
}

TEST_CASE("psi is a ring map on SO(p) and V(p)")
{
    for (int p = 2; p <= 6; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        for (const auto& s : alg.basis())
            for (const auto& u : alg.basis()) {
                const RotElement x(s), y(u);
                REQUIRE(psi_element(alg.mul(x, y)) == classical_so_mul(p, psi_element(x), psi_element(y)));
            }
    }
    for (int p = 3; p <= 8; ++p)
        for (const auto& s : stiefel_basis(p))
            for (const auto& u : stiefel_basis(p)) {
                const StiefelElement x(s), y(u);
                REQUIRE(psi_element(stiefel_mul(p, x, y)) ==
                        classical_stiefel_mul(p, psi_element(x), psi_element(y)));
            }
}

TEST_CASE("classical RP products")
{
    const Ambient n3 = Ambient::finite(3);
    const ClassicalElement a = classical({{"a", 1}});
    CHECK(classical_rp_mul(n3, a, a) == classical({{"b", 2}}));
    CHECK(classical_rp_mul(Ambient::finite(1), a, a).is_zero());
}

TEST_CASE("LES exactness on the standard examples")
{
    CHECK(les_exactness_check("pt", FreeModule::point(), {-3, 3, -4, 4}).passed());
    CHECK(les_exactness_check("RP^3", module_of(parse_space("rp:3")), {0, 4, -1, 4}).passed());
    const LesReport r = les_exactness_check("SO(4,2)", so_generators(4), {0, 7, 0, 5});
    CHECK(r.passed());
    CHECK(r.checked.size() == 8 * 6);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["space"] == "SO(4,2)");
    CHECK(j["checked"].size() == 48);
    CHECK(j["failures"].empty());
}

TEST_CASE("LES report with a failure")
{
    LesReport r;
    r.space = "x";
    r.failures.push_back({{1, 2}, 0, 1});
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["failures"][0]["p"] == 1);
    CHECK(j["failures"][0]["ker_dim"] == 1);
    CHECK_FALSE(r.passed());
}

TEST_CASE("SO(4,2) remark audit")
{
    const RemarkAudit a = audit_so42_remark();
    CHECK(a.claimed_dimension == 6);
    CHECK(a.psi_image_dimension == 8);
    CHECK(a.classical_dimension == 8);
    CHECK(a.psi_b1_cubed_nonzero);
    CHECK(a.psi_b2_equals_psi_b1_squared);
    CHECK(a.flagged());
}
