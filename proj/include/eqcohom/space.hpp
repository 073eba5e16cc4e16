#pragma once

// Named spaces understood by the command line and the verification runner.

#include "eqcohom/grading.hpp"
#include "eqcohom/projective.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqcohom {

struct Space
{
    enum class Kind { point, sphere, rp, tensor, so, stiefel };

    Kind kind = Kind::point;
    int n = 0;                     // p for so/stiefel
    BiDegree sphere{};             // sphere only
    Ambient rp = Ambient::infinite();  // rp only
    TensorFactors factors;         // tensor only
};

// Accepts "pt", "sphere:P,Q", "rp:N", "rp:inf", "tensor:N1,N2,..." (finite), "so:P",
// "so:P,Q" (Q must be floor(P/2)), "stiefel:P".
Space parse_space(std::string_view text);

// Human-readable name, e.g. "SO(4,2)" or "RP^3_tw".
std::string display_name(const Space& s);

// Generators of the cohomology as a free module. RP^inf is rejected.
FreeModule module_of(const Space& s);

}  // namespace eqcohom
