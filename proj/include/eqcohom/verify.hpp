#pragma once

// Verification checks shared by `eqcohom verify` and the acceptance runner.
// Every check is exact; each returns pass, fail, or flagged (a documented
// disagreement with a closed-form statement that does not indicate a bug).

#include "eqcohom/grading.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqcohom::verify {

enum class Status { pass, fail, flagged };

std::string_view to_string(Status s);

struct CheckResult
{
    std::string suite;
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

enum class Suite { additive, ring, forgetful, stiefel, all };

Suite parse_suite(std::string_view s);
std::string_view to_string(Suite s);

// Individual checks.
CheckResult point_chart(const Window& w);
CheckResult additive_collapse(int max_p);
CheckResult stiefel_additive(int max_p);
CheckResult coeff_laws(int max_exp);
CheckResult rp_laws(int max_n);
CheckResult so_laws(int max_p);
CheckResult omega_injective(int max_p);
CheckResult omega_ring_map(int max_p);
CheckResult worked_examples(int p);  // p = 4 or 5
CheckResult presentation(int min_p, int max_p);
CheckResult presentation_consistency(int min_p, int max_p);
CheckResult stiefel_examples();
CheckResult stiefel_squares(int max_p);
CheckResult pi_star_ring_map(int max_p);
CheckResult stiefel_laws(int max_p);
CheckResult stiefel_rule(int max_p);
CheckResult poincare(int max_p);
CheckResult remark();
CheckResult psi_ring_map(int max_p);
CheckResult les(int max_rp, int max_so, int max_stiefel);

// The standard window of a free module: generator degrees padded so that
// both cones of every generator are visible.
Window standard_window(const FreeModule& m);

// Checks of a suite in fixed order, at depth max_p, on up to `threads`
// workers. Output order does not depend on `threads`.
std::vector<CheckResult> run(Suite suite, int max_p, unsigned threads);

bool any_failure(const std::vector<CheckResult>& results);

// format: "ascii", "csv" or "json".
std::string render(const std::vector<CheckResult>& results, std::string_view format);

}  // namespace eqcohom::verify
