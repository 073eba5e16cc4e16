#pragma once

// H(SO(p, floor(p/2))) as an algebra over the point ring.
//
// Additively it is free on classes beta_I indexed by admissible sequences
// p > i_1 > ... > i_m > 0. Products are computed by pushing both factors
// through the injective comparison map
//
//   omega^* : H(SO(p,q)) -> H(RP^{p-1}_tw) (x) ... (x) H(RP^1_tw)
//
// multiplying there, and solving for the unique preimage. The closed-form
// presentation is only ever checked against this, never used to multiply.

#include "eqcohom/coeff.hpp"
#include "eqcohom/grading.hpp"
#include "eqcohom/linear.hpp"
#include "eqcohom/projective.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcohom {

// Raised when a product falls outside the image of omega^*. This can only
// mean a bug or a failed structural hypothesis, so it is never swallowed.
class InconsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

constexpr BiDegree generator_degree(int i) { return {i, (i + 1) / 2}; }

// A strictly decreasing list of indices in (0, 32), stored as a bit mask
// (bit i-1 for index i). The empty sequence is the unit class.
class AdmissibleSequence
{
public:
    AdmissibleSequence() = default;
    static AdmissibleSequence from_mask(std::uint32_t mask) { return AdmissibleSequence(mask); }
    // Indices must be strictly decreasing and positive.
    static AdmissibleSequence from_indices(const std::vector<int>& indices);
    static AdmissibleSequence single(int i) { return from_indices({i}); }

    std::uint32_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return i >= 1 && i <= 32 && (mask_ >> (i - 1) & 1u); }
    int size() const;
    int max_index() const;
    std::vector<int> indices() const;  // decreasing
    BiDegree degree() const;
    bool valid_for(int p) const { return p >= 32 || (mask_ >> (p - 1)) == 0; }

    friend auto operator<=>(const AdmissibleSequence&, const AdmissibleSequence&) = default;

private:
    explicit AdmissibleSequence(std::uint32_t m) : mask_(m) {}
    std::uint32_t mask_ = 0;
};

// "B[4,3]"; the unit is "B[0]".
std::string to_string(const AdmissibleSequence& s);

using RotElement = FreeElement<AdmissibleSequence>;

std::string to_string(const RotElement& x);

// All 2^{p-1} admissible sequences, ordered by mask.
std::vector<AdmissibleSequence> admissible_sequences(int p);
FreeModule so_generators(int p);
// Smallest power of two n with i * n >= p.
int exponent_bound(int i, int p);

class RotationAlgebra
{
public:
    explicit RotationAlgebra(int p);
    RotationAlgebra(const RotationAlgebra&) = delete;
    RotationAlgebra& operator=(const RotationAlgebra&) = delete;

    int p() const { return p_; }
    int q() const { return p_ / 2; }
    const TensorFactors& factors() const { return factors_; }
    const std::vector<AdmissibleSequence>& basis() const { return basis_; }

    RotElement generator(int i) const;
    RotElement basis_element(AdmissibleSequence s) const;
    void check_element(const RotElement& x) const;

    // Image of beta_i: sum over j >= i of a_j b_j^{(i-1)/2} (i odd) or
    // b_j^{i/2} (i even), dropping monomials truncated in RP^j_tw.
    TensorElement omega_generator(int i) const;
    // Image of beta_I, the product of the generator images; cached.
    const TensorElement& omega_basis(AdmissibleSequence s) const;
    TensorElement omega_star(const RotElement& x) const;

    // Preimage under omega^*, or nullopt if x is not in the image.
    std::optional<RotElement> pull_back(const TensorElement& x) const;

    // Product through cached structure constants.
    RotElement mul(const RotElement& x, const RotElement& y) const;
    // Product by expanding tensor_mul(omega^* x, omega^* y) directly, no cache.
    RotElement mul_direct(const RotElement& x, const RotElement& y) const;

    // beta_I * beta_J, memoized.
    const RotElement& basis_product(AdmissibleSequence s, AdmissibleSequence t) const;

private:
    const RotElement& generator_product(AdmissibleSequence s, int i) const;
    RotElement times_generator(const RotElement& x, int i) const;
    void ensure_images() const;

    int p_;
    TensorFactors factors_;
    std::vector<AdmissibleSequence> basis_;

    mutable std::once_flag images_once_;
    mutable std::map<AdmissibleSequence, TensorElement> images_;
    mutable std::map<AdmissibleSequence, BiDegree> image_degrees_;

    // Write-once caches; concurrent first computations race to the same value.
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<AdmissibleSequence, int>, std::unique_ptr<RotElement>> generator_table_;
    mutable std::map<std::pair<AdmissibleSequence, AdmissibleSequence>, std::unique_ptr<RotElement>> pair_table_;
};

// Shared per-p instances.
const RotationAlgebra& rotation_algebra(int p);

RotElement so_mul(int p, const RotElement& x, const RotElement& y);
TensorElement omega_star(int p, const RotElement& x);

struct RelationCheck
{
    std::string lhs;     // e.g. "B3^2"
    RotElement claimed;  // right-hand side asserted by the closed-form presentation
    RotElement oracle;   // computed through omega^*
    bool match = false;
};

struct PresentationReport
{
    int p = 0;
    std::vector<RelationCheck> relations;

    bool all_match() const;
    std::string to_text() const;
};

// Compares beta_1^2 = rho beta_1 + tau beta_2, beta_i^2 = beta_{2i} (2i < p)
// or 0, and beta_i^{n_i} = 0 for i = 2 and odd i >= 3, against the oracle.
PresentationReport check_presentation(int p, int max_p = 8);

}  // namespace eqcohom
