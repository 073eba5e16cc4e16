// Acceptance criteria 1-9: one line per criterion, exit 1 if any fails.

#include "eqcohom/forgetful.hpp"
#include "eqcohom/rotation.hpp"
#include "eqcohom/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace eqcohom;
using verify::CheckResult;
using verify::Status;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(const CheckResult& r, Status wanted = Status::pass)
    {
        const bool good = r.status == wanted;
        ok = ok && good;
        if (!detail.empty())
            detail += "; ";
        detail += r.name + ": " + std::string(verify::to_string(r.status));
        if (!good || wanted != Status::pass)
            detail += " (" + r.detail + ")";
    }
    void require(bool cond, const std::string& what)
    {
        ok = ok && cond;
        if (!detail.empty())
            detail += "; ";
        detail += what + (cond ? ": pass" : ": FAIL");
    }
};

struct Criterion
{
    int number;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "point chart", 1.0,
         [] {
             Outcome o;
             o.require(verify::point_chart({-4, 4, -5, 5}));
             return o;
         }},
        {2, "additive collapse, 2 <= p <= 12", 5.0,
         [] {
             Outcome o;
             o.require(verify::additive_collapse(12));
             return o;
         }},
        {3, "SO(4,2) and SO(5,2) worked examples", 10.0,
         [] {
             Outcome o;
             o.require(verify::worked_examples(4));
             o.require(verify::worked_examples(5));
             return o;
         }},
        {4, "omega^* injective ring map, p <= 8", 60.0,
         [] {
             Outcome o;
             o.require(verify::omega_injective(8));
             o.require(verify::omega_ring_map(8));
             return o;
         }},
        {5, "presentation audit", 60.0,
         [] {
             Outcome o;
             o.require(verify::presentation(2, 6));
             bool emitted = true;
             for (int p = 7; p <= 8; ++p)
                 emitted = emitted && !check_presentation(p).relations.empty();
             o.require(emitted, "audit reports emitted for p = 7, 8");
             o.require(verify::presentation_consistency(2, 8));
             return o;
         }},
        {6, "Stiefel manifolds, p <= 10", 30.0,
         [] {
             Outcome o;
             o.require(verify::stiefel_additive(10));
             o.require(verify::pi_star_ring_map(10));
             o.require(verify::stiefel_examples());
             o.require(verify::stiefel_squares(10));
             return o;
         }},
        {7, "forgetful consistency", 5.0,
         [] {
             Outcome o;
             o.require(verify::poincare(12));
             o.require(verify::remark(), Status::flagged);
             o.require(audit_so42_remark().psi_image_dimension == 8, "psi-image dimension 8");
             return o;
         }},
        {8, "LES exactness", 120.0,
         [] {
             Outcome o;
             o.require(verify::les(6, 6, 8));
             return o;
         }},
        {9, "algebra laws", 120.0,
         [] {
             Outcome o;
             o.require(verify::coeff_laws(4));
             o.require(verify::rp_laws(6));
             o.require(verify::so_laws(6));
             o.require(verify::stiefel_laws(8));
             return o;
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s) {
            o.ok = false;
            o.detail += "; over time budget";
        }
        failures += o.ok ? 0 : 1;
        std::printf("criterion %d: %s  %s [%.2fs / %.0fs]  %s\n", c.number, o.ok ? "PASS" : "FAIL", c.title, secs,
                    c.budget_s, o.detail.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
