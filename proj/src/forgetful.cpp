#include "eqcohom/forgetful.hpp"

#include "eqcohom/gf2.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace eqcohom {

int psi_coeff(const ConeMonomial& m) { return (m.is_top() && m.rho_exp() == 0) ? 1 : 0; }

int psi_coeff(const CoeffElement& c)
{
    int v = 0;
    for (const auto& m : c.terms())
        v ^= psi_coeff(m);
    return v;
}

void ClassicalElement::toggle(const ClassicalTerm& t)
{
    if (!terms_.erase(t))
        terms_.insert(t);
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o)
{
    for (const auto& t : o.terms_)
        toggle(t);
    return *this;
}

std::string to_string(const ClassicalElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& t : x.terms())
        out += (out.empty() ? "" : " + ") + t.label;
    return out;
}

namespace {

template <typename Key, typename Label>
ClassicalElement specialize(const FreeElement<Key>& x, Label&& label_of)
{
    ClassicalElement out;
    for (const auto& [k, c] : x)
        if (psi_coeff(c))
            out.toggle(label_of(k));
    return out;
}

// psi applied to a tensor element, kept as a set of tensor monomials.
std::set<TensorMonomial> psi_tensor(const TensorElement& x)
{
    std::set<TensorMonomial> out;
    for (const auto& [t, c] : x)
        if (psi_coeff(c))
            out.insert(t);
    return out;
}

TensorElement lift(const std::set<TensorMonomial>& x)
{
    TensorElement out;
    for (const auto& t : x)
        out.add(t, CoeffElement::one());
    return out;
}

std::set<TensorMonomial> symmetric_sum(std::set<TensorMonomial> a, const std::set<TensorMonomial>& b)
{
    for (const auto& t : b)
        if (!a.erase(t))
            a.insert(t);
    return a;
}

}  // namespace

ClassicalElement psi_element(const RotElement& x)
{
    return specialize(x, [](const AdmissibleSequence& s) { return ClassicalTerm{to_string(s), s.degree().p}; });
}

ClassicalElement psi_element(const StiefelElement& x)
{
    return specialize(x, [](const FrameClass& s) { return ClassicalTerm{to_string(s), s.degree().p}; });
}

ClassicalElement psi_element(const ProjElement& x)
{
    return specialize(x, [](const ProjMonomial& m) { return ClassicalTerm{to_string(m), m.degree().p}; });
}

ClassicalElement psi_element(const TensorFactors& f, const TensorElement& x)
{
    return specialize(x, [&f](const TensorMonomial& m) { return ClassicalTerm{to_string(f, m), m.degree().p}; });
}

ClassicalElement psi_element(BiDegree sphere_dim, const SphereElement& x)
{
    ClassicalElement out;
    if (psi_coeff(x.unit))
        out.toggle({"1", 0});
    if (psi_coeff(x.top))
        out.toggle({"x", sphere_dim.p});
    return out;
}

ClassicalElement classical_rp_mul(Ambient n, const ClassicalElement& x, const ClassicalElement& y)
{
    // In RP^n the topological degree pins down the monomial.
    auto lift_rp = [&n](const ClassicalElement& e) {
        ProjElement out;
        for (const auto& t : e.terms()) {
            const ProjMonomial m{static_cast<std::uint8_t>(t.degree % 2), static_cast<std::uint16_t>(t.degree / 2)};
            if (t.degree < 0 || to_string(m) != t.label || !n.admits(m.eps, m.j))
                throw std::invalid_argument("'" + t.label + "' is not a class of RP^" + to_string(n) + "_tw");
            out.add(m, CoeffElement::one());
        }
        return out;
    };
    return psi_element(rp_mul(n, lift_rp(x), lift_rp(y)));
}

ClassicalElement classical_so_mul(int p, const ClassicalElement& x, const ClassicalElement& y)
{
    const RotationAlgebra& alg = rotation_algebra(p);
    const TensorFactors& f = alg.factors();

    std::map<std::string, AdmissibleSequence> by_label;
    std::map<AdmissibleSequence, std::set<TensorMonomial>> image;
    for (const auto& s : alg.basis()) {
        by_label.emplace(to_string(s), s);
        image.emplace(s, psi_tensor(alg.omega_basis(s)));
    }
    auto to_tensor = [&](const ClassicalElement& e) {
        std::set<TensorMonomial> out;
        for (const auto& t : e.terms()) {
            auto it = by_label.find(t.label);
            if (it == by_label.end())
                throw std::invalid_argument("'" + t.label + "' is not a class of SO(" + std::to_string(p) + ")");
            out = symmetric_sum(std::move(out), image.at(it->second));
        }
        return out;
    };

    const std::set<TensorMonomial> product = psi_tensor(tensor_mul(f, lift(to_tensor(x)), lift(to_tensor(y))));

    // Solve separately in each topological degree.
    std::map<int, std::vector<TensorMonomial>> by_degree;
    for (const auto& t : product)
        by_degree[t.degree().p].push_back(t);

    ClassicalElement out;
    for (const auto& [deg, target] : by_degree) {
        std::vector<AdmissibleSequence> cols;
        std::map<TensorMonomial, std::size_t> rows;
        auto row_of = [&rows](const TensorMonomial& t) { return rows.try_emplace(t, rows.size()).first->second; };
        for (const auto& s : alg.basis())
            if (s.degree().p == deg)
                cols.push_back(s);
        std::vector<std::vector<std::size_t>> entries(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& t : image.at(cols[c]))
                entries[c].push_back(row_of(t));
        std::vector<std::size_t> rhs;
        for (const auto& t : target)
            rhs.push_back(row_of(t));

        gf2::BitMatrix a(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r : entries[c])
                a.flip(r, c);
        gf2::BitVector b(rows.size());
        for (std::size_t r : rhs)
            b.flip(r);
        auto sol = gf2::solve(a, b);
        if (!sol)
            throw InconsistencyError("classical product in degree " + std::to_string(deg) +
                                     " is not in the image of psi(omega^*) for p=" + std::to_string(p));
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (sol->get(c))
                out.toggle({to_string(cols[c]), deg});
    }
    return out;
}

ClassicalElement classical_stiefel_mul(int p, const ClassicalElement& x, const ClassicalElement& y)
{
    std::map<std::string, FrameClass> frame_by_label;
    std::map<std::string, FrameClass> frame_by_rot_label;
    for (const auto& s : stiefel_basis(p)) {
        frame_by_label.emplace(to_string(s), s);
        frame_by_rot_label.emplace(to_string(s.sequence()), s);
    }
    auto to_rot = [&](const ClassicalElement& e) {
        ClassicalElement out;
        for (const auto& t : e.terms()) {
            auto it = frame_by_label.find(t.label);
            if (it == frame_by_label.end())
                throw std::invalid_argument("'" + t.label + "' is not a class of V(" + std::to_string(p) + ")");
            out.toggle({to_string(it->second.sequence()), t.degree});
        }
        return out;
    };
    const ClassicalElement product = classical_so_mul(p, to_rot(x), to_rot(y));
    ClassicalElement out;
    for (const auto& t : product.terms()) {
        auto it = frame_by_rot_label.find(t.label);
        if (it == frame_by_rot_label.end())
            throw InconsistencyError("classical product leaves the image of pi^*: " + t.label);
        out.toggle({to_string(it->second), t.degree});
    }
    return out;
}

PoincarePolynomial::PoincarePolynomial(std::map<int, std::uint64_t> coeffs)
{
    for (const auto& [d, c] : coeffs)
        if (c)
            coeffs_.emplace(d, c);
}

PoincarePolynomial PoincarePolynomial::product_of_binomials(const std::vector<int>& exponents)
{
    std::map<int, std::uint64_t> acc{{0, 1}};
    for (int e : exponents) {
        std::map<int, std::uint64_t> next = acc;
        for (const auto& [d, c] : acc)
            next[d + e] += c;
        acc = std::move(next);
    }
    return PoincarePolynomial(std::move(acc));
}

std::uint64_t PoincarePolynomial::at(int degree) const
{
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

std::uint64_t PoincarePolynomial::total() const
{
    std::uint64_t s = 0;
    for (const auto& [d, c] : coeffs_)
        s += c;
    return s;
}

std::string to_string(const PoincarePolynomial& x)
{
    if (x.coefficients().empty())
        return "0";
    std::string out;
    for (const auto& [d, c] : x.coefficients()) {
        if (!out.empty())
            out += " + ";
        std::string mono = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
        if (mono.empty())
            out += std::to_string(c);
        else
            out += (c == 1 ? "" : std::to_string(c)) + mono;
    }
    return out;
}

PoincarePolynomial classical_poincare_so(int p)
{
    if (p < 2)
        throw std::invalid_argument("classical_poincare_so needs p >= 2");
    std::vector<int> e;
    for (int i = 1; i < p; ++i)
        e.push_back(i);
    return PoincarePolynomial::product_of_binomials(e);
}

PoincarePolynomial classical_poincare_stiefel(int p)
{
    if (p < 2)
        throw std::invalid_argument("classical_poincare_stiefel needs p >= 2");
    std::vector<int> e;
    for (int i = p - p / 2; i < p; ++i)
        e.push_back(i);
    return PoincarePolynomial::product_of_binomials(e);
}

PoincarePolynomial psi_image_poincare(const FreeModule& m)
{
    std::map<int, std::uint64_t> c;
    for (const auto& g : m.generators())
        ++c[g.degree.p];
    return PoincarePolynomial(std::move(c));
}

std::string LesReport::to_json() const
{
    nlohmann::json checked_j = nlohmann::json::array();
    for (const auto& d : checked)
        checked_j.push_back({{"p", d.p}, {"q", d.q}});
    nlohmann::json failures_j = nlohmann::json::array();
    for (const auto& f : failures)
        failures_j.push_back({{"p", f.at.p}, {"q", f.at.q}, {"im_dim", f.im_dim}, {"ker_dim", f.ker_dim}});
    return nlohmann::json{{"space", space}, {"checked", checked_j}, {"failures", failures_j}}.dump(2) + "\n";
}

LesReport les_exactness_check(const std::string& space, const FreeModule& m, const Window& w)
{
    LesReport report;
    report.space = space;
    const auto& gens = m.generators();

    struct Cell
    {
        std::size_t gen;
        ConeMonomial mono;
    };
    auto basis_at = [&gens](BiDegree d) {
        std::vector<Cell> out;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (auto mono = monomial_at(d - gens[g].degree))
                out.push_back({g, *mono});
        return out;
    };

    for (int p = w.p0; p <= w.p1; ++p)
        for (int q = w.q0; q <= w.q1; ++q) {
            const BiDegree src_deg{p, q};
            const BiDegree dst_deg{p + 1, q + 1};
            const auto src = basis_at(src_deg);
            const auto dst = basis_at(dst_deg);
            std::map<std::pair<std::size_t, ConeMonomial>, std::size_t> dst_index;
            for (std::size_t k = 0; k < dst.size(); ++k)
                dst_index.emplace(std::make_pair(dst[k].gen, dst[k].mono), k);

            // rho: columns are source cells, rows target cells.
            gf2::BitMatrix rho(dst.size(), src.size());
            for (std::size_t c = 0; c < src.size(); ++c)
                if (auto image = monomial_mul(ConeMonomial::rho(), src[c].mono)) {
                    auto it = dst_index.find({src[c].gen, *image});
                    if (it == dst_index.end())
                        throw std::logic_error("rho carries a cell outside H^" + to_string(dst_deg));
                    rho.set(it->second, c);
                }

            // psi: rows are classical generators of topological degree p+1.
            std::vector<std::size_t> classical;
            for (std::size_t g = 0; g < gens.size(); ++g)
                if (gens[g].degree.p == p + 1)
                    classical.push_back(g);
            gf2::BitMatrix psi(classical.size(), dst.size());
            for (std::size_t c = 0; c < dst.size(); ++c)
                for (std::size_t r = 0; r < classical.size(); ++r)
                    if (classical[r] == dst[c].gen && psi_coeff(dst[c].mono))
                        psi.set(r, c);

            // psi o rho must vanish.
            bool composite_zero = true;
            for (std::size_t c = 0; c < src.size() && composite_zero; ++c)
                for (std::size_t r = 0; r < classical.size() && composite_zero; ++r) {
                    bool v = false;
                    for (std::size_t k = 0; k < dst.size(); ++k)
                        v ^= psi.get(r, k) && rho.get(k, c);
                    if (v)
                        composite_zero = false;
                }

            const int im_dim = static_cast<int>(gf2::rank(rho));
            const int ker_dim = static_cast<int>(dst.size()) - static_cast<int>(gf2::rank(psi));
            report.checked.push_back(src_deg);
            if (!composite_zero || im_dim != ker_dim)
                report.failures.push_back({src_deg, im_dim, ker_dim});
        }
    return report;
}

std::string RemarkAudit::to_text() const
{
    std::ostringstream os;
    os << "psi(H(SO(4,2))) remark audit\n"
       << "  stated presentation Z/2[B1,B3]/(B1^3, B3^2) has dimension " << claimed_dimension << '\n'
       << "  psi-image computed here has dimension " << psi_image_dimension << '\n'
       << "  classical H^*(SO(4); Z/2) has dimension " << classical_dimension << '\n'
       << "  psi(B1)^3 " << (psi_b1_cubed_nonzero ? "is nonzero" : "vanishes") << '\n'
       << "  psi(B2) = psi(B1^2): " << (psi_b2_equals_psi_b1_squared ? "yes" : "no") << '\n'
       << (flagged() ? "  FLAGGED: stated presentation does not match the psi-image\n" : "  consistent\n");
    return os.str();
}

RemarkAudit audit_so42_remark()
{
    constexpr int p = 4;
    const RotationAlgebra& alg = rotation_algebra(p);
    RemarkAudit audit;

    // Standard monomials B1^a B3^b of the stated presentation.
    const int b1_bound = 3;
    const int b3_bound = 2;
    audit.claimed_dimension = b1_bound * b3_bound;

    const ClassicalElement one = psi_element(RotElement(AdmissibleSequence{}));
    const ClassicalElement b1 = psi_element(alg.generator(1));
    const ClassicalElement b3 = psi_element(alg.generator(3));

    // Span of the subalgebra generated by psi(B1), psi(B3).
    std::vector<ClassicalElement> span;
    ClassicalElement b1_power = one;
    for (int a = 0; a < 4; ++a) {
        span.push_back(b1_power);
        span.push_back(classical_so_mul(p, b1_power, b3));
        if (a == 3)
            audit.psi_b1_cubed_nonzero = !b1_power.is_zero();
        b1_power = classical_so_mul(p, b1_power, b1);
    }
    std::map<ClassicalTerm, std::size_t> cols;
    for (const auto& e : span)
        for (const auto& t : e.terms())
            cols.try_emplace(t, cols.size());
    gf2::BitMatrix m(span.size(), cols.size());
    for (std::size_t r = 0; r < span.size(); ++r)
        for (const auto& t : span[r].terms())
            m.set(r, cols.at(t));
    audit.psi_image_dimension = static_cast<int>(gf2::rank(m));
    audit.classical_dimension = static_cast<int>(classical_poincare_so(p).total());
    audit.psi_b2_equals_psi_b1_squared =
        psi_element(alg.generator(2)) == psi_element(alg.mul(alg.generator(1), alg.generator(1)));
    return audit;
}

}  // namespace eqcohom
