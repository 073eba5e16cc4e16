#pragma once

// H(V_q(R^{p,q})) for q = floor(p/2). Additively free on classes [S] for
// subsets S of {p-q, ..., p-1}; the ring structure is read off through the
// injection pi^* : [S] -> beta_S into H(SO(p,q)).

#include "eqcohom/grading.hpp"
#include "eqcohom/linear.hpp"
#include "eqcohom/rotation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqcohom {

class FrameClass
{
public:
    FrameClass() = default;
    explicit FrameClass(AdmissibleSequence s) : seq_(s) {}
    // Indices in any order; they must be distinct and positive.
    static FrameClass from_indices(std::vector<int> indices);

    const AdmissibleSequence& sequence() const { return seq_; }
    bool empty() const { return seq_.empty(); }
    std::vector<int> indices() const { return seq_.indices(); }
    BiDegree degree() const { return seq_.degree(); }

    friend auto operator<=>(const FrameClass&, const FrameClass&) = default;

private:
    AdmissibleSequence seq_;
};

// Increasing indices, "[3,4]"; the unit is "[0]".
std::string to_string(const FrameClass& s);

using StiefelElement = FreeElement<FrameClass>;

std::string to_string(const StiefelElement& x);

constexpr int stiefel_q(int p) { return p / 2; }
constexpr int stiefel_low(int p) { return p - p / 2; }

bool in_stiefel_range(int p, const FrameClass& s);

std::vector<FrameClass> stiefel_basis(int p);
FreeModule stiefel_generators(int p);

RotElement pi_star(int p, const StiefelElement& x);
// Inverse of pi^* on its image; nullopt if x uses classes outside the range.
std::optional<StiefelElement> pi_star_preimage(int p, const RotElement& x);

// Product pulled back from H(SO(p,q)) through pi^*; for p = 2 the algebra of
// S^{1,1}.
StiefelElement stiefel_mul(int p, const StiefelElement& x, const StiefelElement& y);

// The closed-form rule [S][T] = [S u T] if S and T are disjoint, else 0.
StiefelElement disjoint_union_rule(int p, const StiefelElement& x, const StiefelElement& y);

struct ProductRuleDeviation
{
    FrameClass left;
    FrameClass right;
    StiefelElement oracle;
    StiefelElement closed_form;
};

// Basis pairs on which the closed-form rule disagrees with stiefel_mul.
std::vector<ProductRuleDeviation> audit_product_rule(int p);

}  // namespace eqcohom
