#pragma once

// Cohomology algebras of the twisted projective spaces RP^n_tw and their
// tensor products over the point ring.
//
// H(RP^n_tw) is free on the monomials a^e b^j (e in {0,1}, e + 2j <= n) with
// deg a = (1,1), deg b = (2,1). Products reduce by a^2 = rho a + tau b
// (a^2 = rho a when n = 1) and by dropping monomials with e + 2j > n, which
// encodes both b^k = 0 and a b^{n/2} = 0.

#include "eqcohom/coeff.hpp"
#include "eqcohom/linear.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eqcohom {

class Ambient
{
public:
    static Ambient finite(int n);
    static Ambient infinite() { return Ambient(0); }

    bool is_infinite() const { return n_ == 0; }
    // Only meaningful when finite.
    int n() const { return n_; }

    bool admits(int eps, int j) const { return is_infinite() || eps + 2 * j <= n_; }

    friend auto operator<=>(const Ambient&, const Ambient&) = default;

private:
    explicit Ambient(int n) : n_(n) {}
    int n_;
};

std::string to_string(const Ambient& n);

struct ProjMonomial
{
    std::uint8_t eps = 0;  // exponent of a
    std::uint16_t j = 0;   // exponent of b

    BiDegree degree() const { return {eps + 2 * j, eps + j}; }
    // By topological degree, which determines the monomial.
    friend auto operator<=>(const ProjMonomial& x, const ProjMonomial& y)
    {
        return std::pair(x.eps + 2 * x.j, x.eps) <=> std::pair(y.eps + 2 * y.j, y.eps);
    }
    friend bool operator==(const ProjMonomial&, const ProjMonomial&) = default;
};

using ProjElement = FreeElement<ProjMonomial>;

// Finite: all n+1 basis monomials ordered by degree.
std::vector<ProjMonomial> rp_basis(Ambient n);
// First `count` basis monomials of RP^infinity.
std::vector<ProjMonomial> rp_basis_prefix(std::size_t count);

// Product of two basis monomials, reduced to normal form.
ProjElement rp_mul(Ambient n, const ProjMonomial& x, const ProjMonomial& y);
ProjElement rp_mul(Ambient n, const ProjElement& x, const ProjElement& y);

// Throws if some monomial of x does not exist in ambient n.
void check_ambient(Ambient n, const ProjElement& x);

// Drop the monomials not present in ambient n.
ProjElement truncate(Ambient n, const ProjElement& x);

// "a", "b^2", "a*b"; with an index suffix ("a3*b3^2") when index > 0.
std::string to_string(const ProjMonomial& m, int index = 0);
std::string to_string(const ProjElement& x);

// Factors of a tensor product, e.g. (RP^3, RP^2, RP^1).
class TensorFactors
{
public:
    TensorFactors() = default;
    explicit TensorFactors(std::vector<Ambient> ambients);

    // (RP^{p-1}, ..., RP^1), the order used for rotation groups.
    static TensorFactors descending(int top);

    std::size_t size() const { return ambients_.size(); }
    const Ambient& operator[](std::size_t k) const { return ambients_[k]; }
    const std::vector<Ambient>& ambients() const { return ambients_; }
    // Position of the factor whose ambient is RP^n, if present.
    std::optional<std::size_t> position_of(int n) const;

    friend bool operator==(const TensorFactors&, const TensorFactors&) = default;

private:
    std::vector<Ambient> ambients_;
};

struct TensorMonomial
{
    std::vector<ProjMonomial> parts;

    BiDegree degree() const;
    bool is_unit() const;
    friend auto operator<=>(const TensorMonomial&, const TensorMonomial&) = default;
};

using TensorElement = FreeElement<TensorMonomial>;

TensorMonomial tensor_unit(const TensorFactors& f);
// The monomial with m in factor k and 1 elsewhere.
TensorMonomial tensor_single(const TensorFactors& f, std::size_t k, ProjMonomial m);

TensorElement tensor_mul(const TensorFactors& f, const TensorElement& x, const TensorElement& y);
void check_factors(const TensorFactors& f, const TensorElement& x);

BiDegree degree_of(const TensorMonomial& m);

// Tensor monomials of f: "a3*b3^2|a2"; the unit prints as "1".
std::string to_string(const TensorFactors& f, const TensorMonomial& m);
std::string to_string(const TensorFactors& f, const TensorElement& x);

// The unique bidegree of a nonzero homogeneous element; throws otherwise.
std::optional<BiDegree> homogeneous_degree(const TensorElement& x);

// Coordinates c_i in the point ring with sum c_i * basis_i == target.
// Solved by GF(2) elimination in the span of {monomial * tensor monomial} at
// the target's bidegree. Returns nullopt when no solution exists; free
// variables are set to zero.
std::optional<std::vector<CoeffElement>> expand_in_basis(const TensorFactors& f,
                                                         std::span<const TensorElement> basis,
                                                         const TensorElement& target, BiDegree degree);
std::optional<std::vector<CoeffElement>> expand_in_basis(const TensorFactors& f,
                                                         std::span<const TensorElement> basis,
                                                         const TensorElement& target);
// Same, over borrowed basis elements.
std::optional<std::vector<CoeffElement>> expand_in_basis(const TensorFactors& f,
                                                         std::span<const TensorElement* const> basis,
                                                         const TensorElement& target, BiDegree degree);

}  // namespace eqcohom
