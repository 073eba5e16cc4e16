#include "eqcohom/evaluate.hpp"
#include "eqcohom/expr.hpp"

#include <doctest.h>

#include <random>

using namespace eqcohom;
using expr::Node;

namespace {

Space sp(const char* s) { return parse_space(s); }

template <typename T>
T eval(const char* input, const char* space)
{
    return std::get<T>(evaluate(input, sp(space)));
}

RotElement B(std::vector<int> idx, CoeffElement c = CoeffElement::one())
{
    return RotElement(AdmissibleSequence::from_indices(idx), c);
}

}  // namespace

TEST_CASE("grammar")
{
    auto e = expr::parse_expr("B2*B3", sp("so:5"));
    REQUIRE(e->kind == Node::Kind::product);
    REQUIRE(e->children.size() == 2);
    CHECK(e->children[0]->atom.kind == expr::Atom::Kind::rot_generator);
    CHECK(e->children[1]->atom.value == 3);

    e = expr::parse_expr("r*B1 + t*B2", sp("so:5"));
    REQUIRE(e->kind == Node::Kind::sum);
    CHECK(e->children[0]->kind == Node::Kind::product);
    CHECK(e->children[1]->kind == Node::Kind::product);

    e = expr::parse_expr("[3]*[4]", sp("stiefel:5"));
    REQUIRE(e->kind == Node::Kind::product);
    CHECK(e->children[0]->atom.kind == expr::Atom::Kind::frame_class);
    CHECK(e->children[1]->atom.indices == std::vector<int>{4});

    e = expr::parse_syntax("(B1 + B2)^3");
    REQUIRE(e->kind == Node::Kind::power);
    CHECK(e->exponent == 3);
    CHECK(e->children[0]->kind == Node::Kind::sum);

    e = expr::parse_syntax("th/(r t^2)");
    CHECK(e->atom.kind == expr::Atom::Kind::theta);
    CHECK(e->atom.rho_div == 1);
    CHECK(e->atom.tau_div == 2);
}

TEST_CASE("syntax errors carry byte offsets")
{
    auto offset_of = [](const char* s) -> std::size_t {
        try {
            expr::parse_syntax(s);
        } catch (const expr::SyntaxError& e) {
            return e.offset();
        }
        return 999;
    };
    CHECK(offset_of("B1 +") == 4);
    CHECK(offset_of("B1 * ) ") == 5);
    CHECK(offset_of("B1^x") == 3);
    CHECK(offset_of("(B1") == 3);
    CHECK(offset_of("B1 @ B2") == 3);
    CHECK(offset_of("[3,") == 3);
    CHECK(offset_of("") == 0);
}

TEST_CASE("unknown generators name the token and the space")
{
    try {
        expr::parse_expr("B1*B7", sp("so:5"));
        FAIL("expected an error");
    } catch (const expr::UnknownGenerator& e) {
        CHECK(e.token() == "B7");
        CHECK(std::string(e.what()).find("SO(5,2)") != std::string::npos);
    }
    CHECK_THROWS_AS(expr::parse_expr("x", sp("so:4")), expr::UnknownGenerator);
    CHECK_THROWS_AS(expr::parse_expr("b", sp("rp:1")), expr::UnknownGenerator);
    CHECK_THROWS_AS(expr::parse_expr("a4", sp("rp:3")), expr::UnknownGenerator);
    CHECK_THROWS_AS(expr::parse_expr("B[1,2]", sp("so:4")), expr::UnknownGenerator);
    CHECK_THROWS_AS(expr::parse_expr("[3]", sp("so:5")), expr::UnknownGenerator);
    CHECK_NOTHROW(expr::parse_expr("a3*b2", sp("tensor:3,2")));
}

TEST_CASE("evaluation")
{
    CHECK(eval<RotElement>("B2*B2", "so:5") == B({4}));
    CHECK(eval<RotElement>("B1^2", "so:4") == B({1}, ConeMonomial::rho()) + B({2}, ConeMonomial::tau()));
    CHECK(eval<RotElement>("B1 B2", "so:4") == eval<RotElement>("B[2,1]", "so:4"));
    CHECK(eval<RotElement>("B1^0", "so:4") == eval<RotElement>("B[0]", "so:4"));
    CHECK(eval<RotElement>("2*B1", "so:4").is_zero());
    CHECK(eval<RotElement>("B3 + B3", "so:4").is_zero());
    CHECK(eval<RotElement>("ρ*β1", "so:4") == B({1}, ConeMonomial::rho()));
    CHECK(eval<StiefelElement>("[3]*[4]", "stiefel:5") == eval<StiefelElement>("[3,4]", "stiefel:5"));
    CHECK(eval<StiefelElement>("[3,3]", "stiefel:5").is_zero());
    CHECK(eval<StiefelElement>("[9]", "stiefel:5").is_zero());
    CHECK(eval<CoeffElement>("r*th/(r)", "pt") == CoeffElement(ConeMonomial::theta()));
    CHECK(eval<CoeffElement>("t*th", "pt").is_zero());
    CHECK(eval<SphereElement>("x*x", "sphere:1,1") == SphereElement{{}, ConeMonomial::rho()});
    CHECK(eval<ProjElement>("a*a", "rp:1") == ProjElement(ProjMonomial{1, 0}, ConeMonomial::rho()));
    CHECK(eval<ProjElement>("b^2", "rp:inf") == ProjElement(ProjMonomial{0, 2}));
    CHECK(eval<ProjElement>("b3^2", "rp:3").is_zero());
    CHECK(format_value(sp("tensor:3,2"), evaluate("a3|a2", sp("tensor:3,2"))) == "a3|a2");
}

TEST_CASE("printing then parsing gives the same element")
{
    std::mt19937 rng(12345);
    const char* spaces[] = {"pt", "sphere:1,1", "sphere:3,2", "rp:4", "rp:inf", "tensor:3,2,1",
                            "so:4", "so:5", "so:6", "stiefel:5", "stiefel:7"};
    const char* atoms_by_space[][6] = {
        {"r", "t", "th", "th/(r)", "th/(t^2)", "1"},
        {"x", "r", "t", "1", "th", "x"},
        {"x", "r", "t", "1", "th/(r t)", "x"},
        {"a", "b", "r", "t", "1", "th"},
        {"a", "b", "r", "t", "1", "th/(t)"},
        {"a3", "b3", "a2", "b2", "a1", "r"},
        {"B1", "B2", "B3", "r", "t", "th"},
        {"B1", "B2", "B3", "B4", "t", "th/(r)"},
        {"B1", "B3", "B5", "B2", "r", "t"},
        {"[3]", "[4]", "r", "t", "th", "1"},
        {"[4]", "[5]", "[6]", "r", "t", "1"},
    };
    for (std::size_t k = 0; k < std::size(spaces); ++k) {
        const Space s = sp(spaces[k]);
        for (int trial = 0; trial < 40; ++trial) {
            std::string input;
            const int terms = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < terms; ++i) {
                if (i)
                    input += " + ";
                const int factors = 1 + static_cast<int>(rng() % 3);
                for (int j = 0; j < factors; ++j)
                    input += std::string(j ? "*" : "") + atoms_by_space[k][rng() % 6];
            }
            const Value v = evaluate(input, s);
            const std::string printed = format_value(s, v);
            CAPTURE(input);
            CAPTURE(printed);
            REQUIRE(evaluate(printed, s) == v);
        }
    }
}

TEST_CASE("psi of values")
{
    CHECK(to_string(psi_value(sp("so:4"), evaluate("B1^2", sp("so:4")))) == "B[2]");
    CHECK(to_string(psi_value(sp("pt"), evaluate("t^3", sp("pt")))) == "1");
    CHECK(psi_value(sp("pt"), evaluate("r", sp("pt"))).is_zero());
}
