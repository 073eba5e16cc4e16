#pragma once

// The forgetful map psi to singular Z/2 cohomology, the classical Poincare
// polynomials it must reproduce, and the exactness check
//
//   H^{p,q}(X) --rho--> H^{p+1,q+1}(X) --psi--> H^{p+1}(X; Z/2).
//
// On coefficients psi sends tau^b to 1 and every other cone monomial to 0;
// on a free module it keeps basis labels and forgets weights.

#include "eqcohom/coeff.hpp"
#include "eqcohom/grading.hpp"
#include "eqcohom/projective.hpp"
#include "eqcohom/rotation.hpp"
#include "eqcohom/stiefel.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace eqcohom {

int psi_coeff(const ConeMonomial& m);
int psi_coeff(const CoeffElement& c);

struct ClassicalTerm
{
    std::string label;
    int degree = 0;

    friend auto operator<=>(const ClassicalTerm&, const ClassicalTerm&) = default;
};

class ClassicalElement
{
public:
    void toggle(const ClassicalTerm& t);
    bool is_zero() const { return terms_.empty(); }
    const std::set<ClassicalTerm>& terms() const { return terms_; }

    ClassicalElement& operator+=(const ClassicalElement& o);
    friend bool operator==(const ClassicalElement&, const ClassicalElement&) = default;

private:
    std::set<ClassicalTerm> terms_;
};

std::string to_string(const ClassicalElement& x);

ClassicalElement psi_element(const RotElement& x);
ClassicalElement psi_element(const StiefelElement& x);
ClassicalElement psi_element(const ProjElement& x);
ClassicalElement psi_element(const TensorFactors& f, const TensorElement& x);
ClassicalElement psi_element(BiDegree sphere_dim, const SphereElement& x);

// Classical products, computed by specializing rho -> 0, tau -> 1 in the
// projective engines. For SO(p) the product is formed in the classical
// tensor algebra and pulled back by GF(2) elimination against psi(omega^*),
// independently of so_mul.
ClassicalElement classical_rp_mul(Ambient n, const ClassicalElement& x, const ClassicalElement& y);
ClassicalElement classical_so_mul(int p, const ClassicalElement& x, const ClassicalElement& y);
ClassicalElement classical_stiefel_mul(int p, const ClassicalElement& x, const ClassicalElement& y);

class PoincarePolynomial
{
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(std::map<int, std::uint64_t> coeffs);

    // prod_k (1 + t^{e_k})
    static PoincarePolynomial product_of_binomials(const std::vector<int>& exponents);

    std::uint64_t at(int degree) const;
    std::uint64_t total() const;  // value at t = 1
    const std::map<int, std::uint64_t>& coefficients() const { return coeffs_; }

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    std::map<int, std::uint64_t> coeffs_;
};

// "1 + t + t^2 + 2t^3"
std::string to_string(const PoincarePolynomial& x);

PoincarePolynomial classical_poincare_so(int p);
PoincarePolynomial classical_poincare_stiefel(int p);
// Free generators counted by topological degree.
PoincarePolynomial psi_image_poincare(const FreeModule& m);

struct LesFailure
{
    BiDegree at;
    int im_dim = 0;
    int ker_dim = 0;
};

struct LesReport
{
    std::string space;
    std::vector<BiDegree> checked;
    std::vector<LesFailure> failures;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
};

// For each (p,q) in the window, checks im(rho: H^{p,q} -> H^{p+1,q+1}) =
// ker(psi: H^{p+1,q+1} -> H^{p+1}) on explicit bases.
LesReport les_exactness_check(const std::string& space, const FreeModule& m, const Window& w);

// The remark identifying psi(H(SO(4,2))) with Z/2[b1,b3]/(b1^3, b3^2).
struct RemarkAudit
{
    int claimed_dimension = 0;     // size of the stated presentation
    int psi_image_dimension = 0;   // rank of psi on H(SO(4,2))
    int classical_dimension = 0;   // classical_poincare_so(4) at t = 1
    bool psi_b1_cubed_nonzero = false;
    bool psi_b2_equals_psi_b1_squared = false;

    bool flagged() const { return claimed_dimension != psi_image_dimension; }
    std::string to_text() const;
};

RemarkAudit audit_so42_remark();

}  // namespace eqcohom
