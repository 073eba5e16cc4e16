#include "eqcohom/verify.hpp"

#include "eqcohom/evaluate.hpp"
#include "eqcohom/forgetful.hpp"
#include "eqcohom/gf2.hpp"
#include "eqcohom/projective.hpp"
#include "eqcohom/rotation.hpp"
#include "eqcohom/space.hpp"
#include "eqcohom/stiefel.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eqcohom::verify {

namespace {

// Collects the first few problems of a check.
class Problems
{
public:
    void add(std::string s)
    {
        ++count_;
        if (shown_.size() < 3)
            shown_.push_back(std::move(s));
    }
    bool empty() const { return count_ == 0; }

    CheckResult result(std::string name, std::string ok_detail, Status bad = Status::fail) const
    {
        if (empty())
            return {"", std::move(name), Status::pass, std::move(ok_detail)};
        std::string d = std::to_string(count_) + " problem(s): ";
        for (std::size_t k = 0; k < shown_.size(); ++k)
            d += (k ? "; " : "") + shown_[k];
        if (count_ > shown_.size())
            d += "; ...";
        return {"", std::move(name), bad, std::move(d)};
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> shown_;
};

Space so_space(int p)
{
    Space s;
    s.kind = Space::Kind::so;
    s.n = p;
    return s;
}

Space stiefel_space(int p)
{
    Space s;
    s.kind = Space::Kind::stiefel;
    s.n = p;
    return s;
}

std::vector<ConeMonomial> small_monomials(int max_exp)
{
    std::vector<ConeMonomial> out;
    for (int a = 0; a <= max_exp; ++a)
        for (int b = 0; b <= max_exp; ++b) {
            out.push_back(ConeMonomial::top(a, b));
            out.push_back(ConeMonomial::bottom(a, b));
        }
    return out;
}

template <typename Key>
std::optional<BiDegree> degree_of(const FreeElement<Key>& x)
{
    std::optional<BiDegree> d;
    for (const auto& [k, c] : x)
        for (const auto& m : c.terms()) {
            const BiDegree e = m.degree() + k.degree();
            if (d && *d != e)
                return std::nullopt;
            d = e;
        }
    return d;
}

// Homogeneous elements of a free module whose reductions modulo the
// augmentation ideal are Z/2-independent extend to a basis, so they are
// linearly independent over the point ring.
template <typename Key>
std::size_t unit_rank(const std::vector<FreeElement<Key>>& xs)
{
    std::map<Key, std::size_t> cols;
    for (const auto& x : xs)
        for (const auto& [k, c] : x)
            if (c.contains(ConeMonomial::one()))
                cols.try_emplace(k, cols.size());
    gf2::BitMatrix m(xs.size(), cols.size());
    for (std::size_t r = 0; r < xs.size(); ++r)
        for (const auto& [k, c] : xs[r])
            if (c.contains(ConeMonomial::one()))
                m.set(r, cols.at(k));
    return gf2::rank(m);
}

std::vector<BiDegree> sphere_dims(int from, int to)
{
    std::vector<BiDegree> dims;
    for (int k = from; k <= to; ++k)
        dims.push_back({k, (k + 1) / 2});
    return dims;
}

int cap_triples(int max_p) { return std::min(max_p, 7); }

}  // namespace

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "FAIL";
    case Status::flagged:
        return "flagged";
    }
    return "?";
}

Suite parse_suite(std::string_view s)
{
    if (s == "additive")
        return Suite::additive;
    if (s == "ring")
        return Suite::ring;
    if (s == "forgetful")
        return Suite::forgetful;
    if (s == "stiefel")
        return Suite::stiefel;
    if (s == "all")
        return Suite::all;
    throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

std::string_view to_string(Suite s)
{
    switch (s) {
    case Suite::additive:
        return "additive";
    case Suite::ring:
        return "ring";
    case Suite::forgetful:
        return "forgetful";
    case Suite::stiefel:
        return "stiefel";
    case Suite::all:
        return "all";
    }
    return "?";
}

CheckResult point_chart(const Window& w)
{
    Problems bad;
    int points = 0;
    for (int p = w.p0; p <= w.p1; ++p)
        for (int q = w.q0; q <= w.q1; ++q) {
            ++points;
            const BiDegree d{p, q};
            const int cones = ((p >= 0 && q >= p) || (p <= 0 && q <= p - 2)) ? 1 : 0;
            if (dim_at(d) != cones)
                bad.add("dim at " + to_string(d));
            const auto m = monomial_at(d);
            if (m.has_value() != (cones == 1) || (m && m->degree() != d))
                bad.add("monomial at " + to_string(d));
        }
    const std::pair<BiDegree, ConeMonomial> named[] = {
        {{0, -2}, ConeMonomial::theta()},
        {{0, -3}, ConeMonomial::bottom(0, 1)},
        {{-1, -3}, ConeMonomial::bottom(1, 0)},
        {{1, 1}, ConeMonomial::rho()},
        {{0, 1}, ConeMonomial::tau()},
    };
    for (const auto& [d, m] : named)
        if (monomial_at(d) != m)
            bad.add(to_string(m) + " not at " + to_string(d));
    return bad.result("point chart", std::to_string(points) + " lattice points");
}

CheckResult additive_collapse(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        const auto dims = sphere_dims(1, p - 1);
        const FreeModule so = so_generators(p);
        if (so.rank() != (std::size_t{1} << (p - 1)))
            bad.add("rank at p=" + std::to_string(p));
        if (!module_iso_check(so, sphere_product_module(dims)))
            bad.add("SO(" + std::to_string(p) + ") degrees");
    }
    return bad.result("SO additive collapse", "p <= " + std::to_string(max_p));
}

CheckResult stiefel_additive(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        const auto basis = stiefel_basis(p);
        if (basis.size() != (std::size_t{1} << (p / 2)))
            bad.add("basis size at p=" + std::to_string(p));
        const auto dims = sphere_dims(p - p / 2, p - 1);
        if (!module_iso_check(stiefel_generators(p), sphere_product_module(dims)))
            bad.add("V(" + std::to_string(p) + ") degrees");
    }
    return bad.result("Stiefel additive structure", "p <= " + std::to_string(max_p));
}

CheckResult coeff_laws(int max_exp)
{
    Problems bad;
    const auto ms = small_monomials(max_exp);
    for (const auto& x : ms)
        for (const auto& y : ms) {
            const CoeffElement xy = CoeffElement(x) * y;
            if (!(xy == CoeffElement(y) * x))
                bad.add("commutativity " + to_string(x) + ", " + to_string(y));
            for (const auto& z : ms)
                if (!(xy * z == CoeffElement(x) * (CoeffElement(y) * z)))
                    bad.add("associativity " + to_string(x) + ", " + to_string(y) + ", " + to_string(z));
        }
    return bad.result("point ring laws", std::to_string(ms.size()) + " monomials");
}

CheckResult rp_laws(int max_n)
{
    Problems bad;
    for (int n = 1; n <= max_n; ++n) {
        const Ambient a = Ambient::finite(n);
        const auto basis = rp_basis(a);
        for (const auto& x : basis)
            for (const auto& y : basis) {
                const ProjElement xy = rp_mul(a, x, y);
                if (!(xy == rp_mul(a, y, x)))
                    bad.add("RP^" + std::to_string(n) + " commutativity");
                for (const auto& z : basis)
                    if (!(rp_mul(a, xy, ProjElement(z)) == rp_mul(a, ProjElement(x), rp_mul(a, y, z))))
                        bad.add("RP^" + std::to_string(n) + " associativity " + to_string(x) + ", " + to_string(y) +
                                ", " + to_string(z));
            }
    }
    return bad.result("RP^n_tw laws", "n <= " + std::to_string(max_n));
}

CheckResult so_laws(int max_p)
{
    Problems bad;
    const int triple_p = cap_triples(max_p);
    for (int p = 2; p <= max_p; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        const auto& basis = alg.basis();
        for (const auto& s : basis)
            for (const auto& t : basis) {
                const RotElement st = alg.mul(RotElement(s), RotElement(t));
                if (!(st == alg.mul(RotElement(t), RotElement(s))))
                    bad.add("commutativity " + to_string(s) + ", " + to_string(t));
                if (p > triple_p)
                    continue;
                for (const auto& u : basis)
                    if (!(alg.mul(st, RotElement(u)) == alg.mul(RotElement(s), alg.basis_product(t, u))))
                        bad.add("associativity at p=" + std::to_string(p) + ": " + to_string(s) + ", " +
                                to_string(t) + ", " + to_string(u));
            }
    }
    return bad.result("SO product laws", "commutativity p <= " + std::to_string(max_p) + ", associativity p <= " +
                                              std::to_string(triple_p));
}

CheckResult omega_injective(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        std::vector<TensorElement> images;
        for (const auto& s : alg.basis())
            images.push_back(alg.omega_basis(s));
        for (std::size_t k = 0; k < images.size(); ++k)
            if (!homogeneous_degree(images[k]) || *homogeneous_degree(images[k]) != alg.basis()[k].degree())
                bad.add("omega^*(" + to_string(alg.basis()[k]) + ") has the wrong bidegree");
        if (unit_rank(images) != images.size())
            bad.add("no independence certificate at p=" + std::to_string(p));
    }
    return bad.result("omega^* injective", "p <= " + std::to_string(max_p));
}

CheckResult omega_ring_map(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        const TensorFactors& f = alg.factors();
        for (const auto& s : alg.basis())
            for (int i = 1; i < p; ++i) {
                const RotElement g = alg.generator(i);
                const RotElement prod = alg.mul(RotElement(s), g);
                if (!(alg.omega_star(prod) == tensor_mul(f, alg.omega_basis(s), alg.omega_star(g))))
                    bad.add("omega^*(" + to_string(s) + " * B" + std::to_string(i) + ") at p=" + std::to_string(p));
                if (s.size() <= 1 && !(prod == alg.mul_direct(RotElement(s), g)))
                    bad.add("cached and direct products differ at p=" + std::to_string(p));
            }
    }
    return bad.result("omega^* ring map", "basis x generator, p <= " + std::to_string(max_p));
}

CheckResult worked_examples(int p)
{
    if (p != 4 && p != 5)
        throw std::invalid_argument("worked examples exist for p = 4, 5");
    enum class Kind { equals, nonzero, free };
    struct Item
    {
        const char* lhs;
        Kind kind;
        const char* rhs;
        BiDegree degree;
    };
    static const std::vector<Item> so4 = {
        {"B1", Kind::free, "", {1, 1}},
        {"B2", Kind::free, "", {2, 1}},
        {"B3", Kind::free, "", {3, 2}},
        {"B1^2", Kind::equals, "r*B1 + t*B2", {}},
        {"B1^3", Kind::equals, "r*B1^2 + t*B1*B2", {}},
        {"B1^3", Kind::nonzero, "", {}},
        {"B1*B2", Kind::free, "", {3, 2}},
        {"B2^2", Kind::equals, "0", {}},
        {"B1*B3", Kind::free, "", {4, 3}},
        {"B2*B3", Kind::free, "", {5, 3}},
        {"B3^2", Kind::equals, "0", {}},
        {"B1*B2*B3", Kind::free, "", {6, 4}},
    };
    static const std::vector<Item> so5 = {
        {"B1", Kind::free, "", {1, 1}},
        {"B2", Kind::free, "", {2, 1}},
        {"B1^2", Kind::equals, "r*B1 + t*B2", {}},
        {"B3", Kind::free, "", {3, 2}},
        {"B1*B2", Kind::free, "", {3, 2}},
        {"B2^2", Kind::equals, "B4", {}},
        {"B2^2", Kind::free, "", {4, 2}},
        {"B1*B3", Kind::free, "", {4, 3}},
        {"B1*B2^2", Kind::free, "", {5, 3}},
        {"B2*B3", Kind::free, "", {5, 3}},
        {"B2^3", Kind::free, "", {6, 3}},
        {"B3^2", Kind::equals, "0", {}},
        {"B1*B2*B3", Kind::free, "", {6, 4}},
        {"B1*B2^3", Kind::free, "", {7, 4}},
        {"B2^2*B3", Kind::free, "", {7, 4}},
        {"B2^4", Kind::equals, "0", {}},
        {"B1*B2^2*B3", Kind::free, "", {8, 5}},
        {"B2^3*B3", Kind::free, "", {9, 5}},
        {"B1*B2^3*B3", Kind::free, "", {10, 6}},
    };
    const Space space = so_space(p);
    Problems bad;
    std::vector<RotElement> generators{RotElement(AdmissibleSequence{})};
    std::vector<std::string> seen;
    const auto& items = p == 4 ? so4 : so5;
    for (const auto& it : items) {
        const RotElement lhs = std::get<RotElement>(evaluate(it.lhs, space));
        switch (it.kind) {
        case Kind::equals:
            if (!(lhs == std::get<RotElement>(evaluate(it.rhs, space))))
                bad.add(std::string(it.lhs) + " = " + to_string(lhs) + ", not " + it.rhs);
            break;
        case Kind::nonzero:
            if (lhs.is_zero())
                bad.add(std::string(it.lhs) + " vanishes");
            break;
        case Kind::free:
            if (degree_of(lhs) != it.degree)
                bad.add(std::string(it.lhs) + " is not in bidegree " + to_string(it.degree));
            if (std::find(seen.begin(), seen.end(), it.lhs) == seen.end()) {
                generators.push_back(lhs);
                seen.push_back(it.lhs);
            }
            break;
        }
    }
    if (generators.size() != (std::size_t{1} << (p - 1)))
        bad.add("expected " + std::to_string((std::size_t{1} << (p - 1))) + " free generators, listed " +
                std::to_string(generators.size()));
    else if (unit_rank(generators) != generators.size())
        bad.add("listed products do not form a basis");
    return bad.result("SO(" + std::to_string(p) + "," + std::to_string(p / 2) + ") worked example",
                      std::to_string(items.size()) + " identities");
}

CheckResult presentation(int min_p, int max_p)
{
    Problems bad;
    for (int p = min_p; p <= max_p; ++p) {
        const PresentationReport r = check_presentation(p, std::max(max_p, 8));
        for (const auto& rel : r.relations)
            if (!rel.match)
                bad.add("p=" + std::to_string(p) + ": " + rel.lhs + " = " + to_string(rel.oracle) + ", stated " +
                        to_string(rel.claimed));
    }
    return bad.result("SO presentation audit", "all relations match for " + std::to_string(min_p) +
                                                    " <= p <= " + std::to_string(max_p),
                      Status::flagged);
}

CheckResult presentation_consistency(int min_p, int max_p)
{
    Problems bad;
    for (int p = min_p; p <= max_p; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        const PresentationReport r = check_presentation(p, std::max(max_p, 8));
        for (int i = 1; i < p; ++i) {
            const RotElement g = alg.generator(i);
            const RotElement sq = alg.mul(g, g);
            if (!(alg.omega_star(sq) == tensor_mul(alg.factors(), alg.omega_star(g), alg.omega_star(g))))
                bad.add("omega^*(B" + std::to_string(i) + "^2) at p=" + std::to_string(p));
            if (!(sq == alg.mul_direct(g, g)))
                bad.add("B" + std::to_string(i) + "^2 cached vs direct at p=" + std::to_string(p));
            for (int j = 1; j < p; ++j)
                for (int k = 1; k < p; ++k) {
                    const RotElement gj = alg.generator(j);
                    const RotElement gk = alg.generator(k);
                    if (!(alg.mul(alg.mul(g, gj), gk) == alg.mul(g, alg.mul(gj, gk))))
                        bad.add("generator associativity at p=" + std::to_string(p));
                }
        }
        for (const auto& rel : r.relations)
            if (rel.lhs.size() > 3 && rel.lhs.substr(rel.lhs.size() - 2) == "^2") {
                const int i = std::stoi(rel.lhs.substr(1, rel.lhs.size() - 3));
                const RotElement g = alg.generator(i);
                if (!(rel.oracle == alg.mul(g, g)))
                    bad.add("report entry " + rel.lhs + " at p=" + std::to_string(p));
            }
    }
    return bad.result("SO oracle consistency", std::to_string(min_p) + " <= p <= " + std::to_string(max_p));
}

CheckResult stiefel_examples()
{
    struct Item
    {
        int p;
        const char* lhs;
        const char* rhs;
    };
    static const Item items[] = {
        {5, "[3]*[4]", "[3,4]"},
        {5, "[3]*[3]", "0"},
        {5, "[4]*[4]", "0"},
        {7, "[4]*[5,6]", "[4,5,6]"},
    };
    Problems bad;
    for (const auto& it : items) {
        const Space s = stiefel_space(it.p);
        const auto lhs = std::get<StiefelElement>(evaluate(it.lhs, s));
        if (!(lhs == std::get<StiefelElement>(evaluate(it.rhs, s))))
            bad.add(std::string(it.lhs) + " = " + to_string(lhs) + " at p=" + std::to_string(it.p) + ", expected " +
                    it.rhs);
    }
    return bad.result("Stiefel worked products", std::to_string(std::size(items)) + " identities");
}

CheckResult stiefel_squares(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p)
        for (const auto& f : stiefel_basis(p)) {
            if (f.sequence().size() != 1)
                continue;
            const StiefelElement x(f);
            const StiefelElement sq = stiefel_mul(p, x, x);
            if (!sq.is_zero())
                bad.add(to_string(f) + "^2 = " + to_string(sq) + " at p=" + std::to_string(p));
        }
    return bad.result("Stiefel squares [i]^2 = 0", "p <= " + std::to_string(max_p), Status::flagged);
}

CheckResult pi_star_ring_map(int max_p)
{
    Problems bad;
    for (int p = 3; p <= max_p; ++p) {
        const auto basis = stiefel_basis(p);
        std::vector<RotElement> images;
        for (const auto& s : basis) {
            const StiefelElement x(s);
            images.push_back(pi_star(p, x));
            if (pi_star_preimage(p, images.back()) != x)
                bad.add("pi^* not invertible on " + to_string(s));
            if (degree_of(images.back()) != s.degree())
                bad.add("pi^* moves the bidegree of " + to_string(s));
        }
        if (unit_rank(images) != images.size())
            bad.add("pi^* not injective at p=" + std::to_string(p));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                const RotElement lhs = pi_star(p, stiefel_mul(p, StiefelElement(basis[i]), StiefelElement(basis[j])));
                if (!(lhs == so_mul(p, images[i], images[j])))
                    bad.add("pi^*(" + to_string(basis[i]) + " * " + to_string(basis[j]) + ")");
            }
    }
    return bad.result("pi^* injective ring map", "3 <= p <= " + std::to_string(max_p));
}

CheckResult stiefel_laws(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        const auto basis = stiefel_basis(p);
        for (const auto& s : basis)
            for (const auto& t : basis) {
                const StiefelElement st = stiefel_mul(p, StiefelElement(s), StiefelElement(t));
                if (!(st == stiefel_mul(p, StiefelElement(t), StiefelElement(s))))
                    bad.add("commutativity at p=" + std::to_string(p));
                for (const auto& u : basis)
                    if (!(stiefel_mul(p, st, StiefelElement(u)) ==
                          stiefel_mul(p, StiefelElement(s), stiefel_mul(p, StiefelElement(t), StiefelElement(u)))))
                        bad.add("associativity at p=" + std::to_string(p));
            }
    }
    return bad.result("Stiefel product laws", "p <= " + std::to_string(max_p));
}

CheckResult stiefel_rule(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p)
        for (const auto& d : audit_product_rule(p))
            bad.add("p=" + std::to_string(p) + ": " + to_string(d.left) + "*" + to_string(d.right) + " = " +
                    to_string(d.oracle) + ", disjoint-union rule gives " + to_string(d.closed_form));
    return bad.result("Stiefel disjoint-union rule", "p <= " + std::to_string(max_p), Status::flagged);
}

CheckResult poincare(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        if (!(psi_image_poincare(so_generators(p)) == classical_poincare_so(p)))
            bad.add("SO(" + std::to_string(p) + ")");
        if (!(psi_image_poincare(stiefel_generators(p)) == classical_poincare_stiefel(p)))
            bad.add("V(" + std::to_string(p) + ")");
    }
    return bad.result("psi-image Poincare series", "p <= " + std::to_string(max_p));
}

CheckResult remark()
{
    const RemarkAudit a = audit_so42_remark();
    const std::string dims = "stated " + std::to_string(a.claimed_dimension) + ", psi-image " +
                             std::to_string(a.psi_image_dimension) + ", classical " +
                             std::to_string(a.classical_dimension);
    if (a.psi_image_dimension != a.classical_dimension || !a.psi_b2_equals_psi_b1_squared)
        return {"", "SO(4,2) psi-image remark", Status::fail, dims};
    if (a.flagged())
        return {"", "SO(4,2) psi-image remark", Status::flagged, "stated presentation too small: " + dims};
    return {"", "SO(4,2) psi-image remark", Status::pass, dims};
}

CheckResult psi_ring_map(int max_p)
{
    Problems bad;
    for (int p = 2; p <= max_p; ++p) {
        const RotationAlgebra& alg = rotation_algebra(p);
        for (const auto& s : alg.basis())
            for (int i = 1; i < p; ++i) {
                const RotElement x(s);
                const RotElement g = alg.generator(i);
                if (!(psi_element(alg.mul(x, g)) == classical_so_mul(p, psi_element(x), psi_element(g))))
                    bad.add("psi(" + to_string(s) + " * B" + std::to_string(i) + ") at p=" + std::to_string(p));
            }
        if (p < 3)
            continue;
        for (const auto& s : stiefel_basis(p))
            for (const auto& t : stiefel_basis(p)) {
                const StiefelElement x(s);
                const StiefelElement y(t);
                if (!(psi_element(stiefel_mul(p, x, y)) ==
                      classical_stiefel_mul(p, psi_element(x), psi_element(y))))
                    bad.add("psi(" + to_string(s) + " * " + to_string(t) + ") at p=" + std::to_string(p));
            }
    }
    return bad.result("psi ring map", "p <= " + std::to_string(max_p));
}

Window standard_window(const FreeModule& m)
{
    Window w{0, 0, 0, 0};
    for (const auto& g : m.generators()) {
        w.p1 = std::max(w.p1, g.degree.p);
        w.q1 = std::max(w.q1, g.degree.q);
    }
    w.p0 = -3;
    w.q0 = -5;
    w.p1 += 3;
    w.q1 += 4;
    return w;
}

CheckResult les(int max_rp, int max_so, int max_stiefel)
{
    std::vector<Space> spaces;
    spaces.push_back(parse_space("pt"));
    spaces.push_back(parse_space("sphere:1,1"));
    for (int n = 1; n <= max_rp; ++n)
        spaces.push_back(parse_space("rp:" + std::to_string(n)));
    for (int p = 2; p <= max_so; ++p)
        spaces.push_back(so_space(p));
    for (int p = 2; p <= max_stiefel; ++p)
        spaces.push_back(stiefel_space(p));
    Problems bad;
    std::size_t points = 0;
    for (const auto& s : spaces) {
        const FreeModule m = module_of(s);
        const LesReport r = les_exactness_check(display_name(s), m, standard_window(m));
        points += r.checked.size();
        for (const auto& f : r.failures)
            bad.add(r.space + " at " + to_string(f.at));
    }
    return bad.result("forgetful LES exactness", std::to_string(spaces.size()) + " spaces, " +
                                                     std::to_string(points) + " bidegrees");
}

std::vector<CheckResult> run(Suite suite, int max_p, unsigned threads)
{
    if (max_p < 2)
        throw std::invalid_argument("max p must be at least 2");
    struct Job
    {
        Suite suite;
        std::function<CheckResult()> fn;
    };
    std::vector<Job> jobs;
    auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
    if (want(Suite::additive)) {
        jobs.push_back({Suite::additive, [] { return point_chart({-4, 4, -5, 5}); }});
        jobs.push_back({Suite::additive, [=] { return additive_collapse(max_p); }});
        jobs.push_back({Suite::additive, [=] { return stiefel_additive(max_p); }});
    }
    if (want(Suite::ring)) {
        jobs.push_back({Suite::ring, [] { return coeff_laws(4); }});
        jobs.push_back({Suite::ring, [] { return rp_laws(6); }});
        jobs.push_back({Suite::ring, [=] { return so_laws(max_p); }});
        jobs.push_back({Suite::ring, [=] { return omega_injective(max_p); }});
        jobs.push_back({Suite::ring, [=] { return omega_ring_map(max_p); }});
        jobs.push_back({Suite::ring, [] { return worked_examples(4); }});
        jobs.push_back({Suite::ring, [] { return worked_examples(5); }});
        jobs.push_back({Suite::ring, [=] { return presentation(2, max_p); }});
        jobs.push_back({Suite::ring, [=] { return presentation_consistency(2, max_p); }});
    }
    if (want(Suite::forgetful)) {
        jobs.push_back({Suite::forgetful, [=] { return poincare(max_p); }});
        jobs.push_back({Suite::forgetful, [] { return remark(); }});
        jobs.push_back({Suite::forgetful, [=] { return psi_ring_map(max_p); }});
        jobs.push_back({Suite::forgetful, [=] { return les(6, max_p, max_p); }});
    }
    if (want(Suite::stiefel)) {
        jobs.push_back({Suite::stiefel, [] { return stiefel_examples(); }});
        jobs.push_back({Suite::stiefel, [=] { return stiefel_squares(max_p); }});
        jobs.push_back({Suite::stiefel, [=] { return pi_star_ring_map(max_p); }});
        jobs.push_back({Suite::stiefel, [=] { return stiefel_laws(max_p); }});
        jobs.push_back({Suite::stiefel, [=] { return stiefel_rule(max_p); }});
    }

    std::vector<CheckResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < jobs.size();) {
            CheckResult r;
            try {
                r = jobs[k].fn();
            } catch (const std::exception& e) {
                r.status = Status::fail;
                r.detail = std::string("exception: ") + e.what();
            }
            r.suite = std::string(to_string(jobs[k].suite));
            results[k] = std::move(r);
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return results;
}

bool any_failure(const std::vector<CheckResult>& results)
{
    return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::fail; });
}

std::string render(const std::vector<CheckResult>& results, std::string_view format)
{
    std::size_t pass = 0, flagged = 0, fail = 0;
    for (const auto& r : results)
        (r.status == Status::pass ? pass : r.status == Status::flagged ? flagged : fail)++;

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : results)
            checks.push_back({{"suite", r.suite}, {"check", r.name}, {"status", to_string(r.status)},
                              {"detail", r.detail}});
        nlohmann::json j{{"checks", checks}, {"summary", {{"pass", pass}, {"flagged", flagged}, {"fail", fail}}}};
        os << j.dump(2) << '\n';
        return os.str();
    }
    if (format == "csv") {
        auto quote = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s)
                out += c == '"' ? std::string("\"\"") : std::string(1, c);
            return out + "\"";
        };
        os << "suite,check,status,detail\n";
        for (const auto& r : results)
            os << r.suite << ',' << quote(r.name) << ',' << to_string(r.status) << ',' << quote(r.detail) << '\n';
        return os.str();
    }
    std::size_t w_suite = 5, w_name = 5;
    for (const auto& r : results) {
        w_suite = std::max(w_suite, r.suite.size());
        w_name = std::max(w_name, r.name.size());
    }
    os << std::left << std::setw(static_cast<int>(w_suite) + 2) << "suite" << std::setw(static_cast<int>(w_name) + 2)
       << "check" << std::setw(9) << "status"
       << "detail\n";
    for (const auto& r : results)
        os << std::setw(static_cast<int>(w_suite) + 2) << r.suite << std::setw(static_cast<int>(w_name) + 2) << r.name
           << std::setw(9) << to_string(r.status) << r.detail << '\n';
    os << results.size() << " checks: " << pass << " pass, " << flagged << " flagged, " << fail << " fail\n";
    return os.str();
}

}  // namespace eqcohom::verify
