#pragma once

// Arithmetic in the bigraded cohomology ring of a point with constant Z/2
// coefficients. Additively the ring has a Z/2 in every lattice point of two
// cones:
//
//   top cone     rho^a tau^b        at (a, a+b)
//   bottom cone  theta/(rho^a tau^b) at (-a, -a-b-2)
//
// so every bidegree carries at most one monomial.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eqcohom {

struct BiDegree
{
    int p = 0;  // topological degree
    int q = 0;  // weight

    friend constexpr BiDegree operator+(BiDegree x, BiDegree y) { return {x.p + y.p, x.q + y.q}; }
    friend constexpr BiDegree operator-(BiDegree x, BiDegree y) { return {x.p - y.p, x.q - y.q}; }
    constexpr BiDegree& operator+=(BiDegree o)
    {
        p += o.p;
        q += o.q;
        return *this;
    }
    friend constexpr auto operator<=>(BiDegree, BiDegree) = default;
};

std::string to_string(BiDegree d);
std::ostream& operator<<(std::ostream& os, BiDegree d);

enum class Cone : std::uint8_t { top, bottom };

class ConeMonomial
{
public:
    static constexpr ConeMonomial top(int a, int b) { return ConeMonomial(Cone::top, a, b); }
    static constexpr ConeMonomial bottom(int a, int b) { return ConeMonomial(Cone::bottom, a, b); }
    static constexpr ConeMonomial one() { return top(0, 0); }
    static constexpr ConeMonomial rho() { return top(1, 0); }
    static constexpr ConeMonomial tau() { return top(0, 1); }
    static constexpr ConeMonomial theta() { return bottom(0, 0); }

    constexpr Cone cone() const { return cone_; }
    constexpr bool is_top() const { return cone_ == Cone::top; }
    constexpr bool is_bottom() const { return cone_ == Cone::bottom; }
    constexpr int rho_exp() const { return a_; }
    constexpr int tau_exp() const { return b_; }

    constexpr BiDegree degree() const
    {
        return is_top() ? BiDegree{a_, a_ + b_} : BiDegree{-a_, -a_ - b_ - 2};
    }

    // Top before bottom, then lexicographic on (a, b).
    friend constexpr auto operator<=>(const ConeMonomial&, const ConeMonomial&) = default;

private:
    constexpr ConeMonomial(Cone c, int a, int b) : cone_(c), a_(a), b_(b) {}

    Cone cone_;
    int a_;
    int b_;
};

// "r^a t^b" and "th/(r^a t^b)"; exponent 1 and factor ^0 are omitted.
std::string to_string(const ConeMonomial& m);

int dim_at(BiDegree d);
int orbit_dim_at(BiDegree d);

// The unique monomial living in bidegree d, if the group there is nonzero.
std::optional<ConeMonomial> monomial_at(BiDegree d);

// Product of two monomials; nullopt when the product vanishes.
// Bottom-cone classes annihilate each other.
std::optional<ConeMonomial> monomial_mul(const ConeMonomial& x, const ConeMonomial& y);

// A Z/2 formal sum of cone monomials, kept sorted with no duplicates.
class CoeffElement
{
public:
    CoeffElement() = default;
    CoeffElement(ConeMonomial m) : terms_{m} {}  // NOLINT(google-explicit-constructor)

    static CoeffElement zero() { return {}; }
    static CoeffElement one() { return ConeMonomial::one(); }
    static CoeffElement from_terms(std::vector<ConeMonomial> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0] == ConeMonomial::one(); }
    const std::vector<ConeMonomial>& terms() const { return terms_; }
    bool contains(const ConeMonomial& m) const;

    bool is_homogeneous() const { return terms_.size() <= 1; }
    CoeffElement component(BiDegree d) const;

    CoeffElement& operator+=(const CoeffElement& o);
    friend CoeffElement operator+(CoeffElement x, const CoeffElement& y) { return x += y; }
    friend CoeffElement operator*(const CoeffElement& x, const CoeffElement& y);
    CoeffElement& operator*=(const CoeffElement& o) { return *this = *this * o; }

    friend bool operator==(const CoeffElement&, const CoeffElement&) = default;
    friend auto operator<=>(const CoeffElement&, const CoeffElement&) = default;

private:
    std::vector<ConeMonomial> terms_;
};

std::string to_string(const CoeffElement& x);

}  // namespace eqcohom
