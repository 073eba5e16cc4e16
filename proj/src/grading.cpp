#include "eqcohom/grading.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqcohom {

FreeModule::FreeModule(std::vector<Generator> gens) : gens_(std::move(gens))
{
    std::set<std::string> seen;
    for (const auto& g : gens_)
        if (!seen.insert(g.label).second)
            throw std::invalid_argument("FreeModule: duplicate generator label '" + g.label + "'");
}

FreeModule FreeModule::point() { return FreeModule({{"1", {0, 0}}}); }

std::vector<BiDegree> FreeModule::degrees() const
{
    std::vector<BiDegree> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.push_back(g.degree);
    std::sort(out.begin(), out.end());
    return out;
}

int betti(const FreeModule& m, BiDegree d)
{
    int total = 0;
    for (const auto& g : m.generators())
        total += dim_at(d - g.degree);
    return total;
}

FreeModule tensor_module(const FreeModule& m, const FreeModule& n)
{
    std::vector<Generator> gens;
    gens.reserve(m.rank() * n.rank());
    for (const auto& g : m.generators())
        for (const auto& h : n.generators()) {
            std::string label;
            if (g.label == "1")
                label = h.label;
            else if (h.label == "1")
                label = g.label;
            else
                label = g.label + "|" + h.label;
            gens.push_back({std::move(label), g.degree + h.degree});
        }
    return FreeModule(std::move(gens));
}

FreeModule sphere_product_module(std::span<const BiDegree> dims)
{
    if (dims.size() >= 31)
        throw std::invalid_argument("sphere_product_module: too many factors");
    std::vector<Generator> gens;
    const std::uint32_t count = std::uint32_t{1} << dims.size();
    gens.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        BiDegree d{};
        std::string label;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (!(mask >> k & 1u))
                continue;
            d += dims[k];
            if (!label.empty())
                label += "|";
            label += "x" + std::to_string(k + 1);
        }
        gens.push_back({label.empty() ? "1" : label, d});
    }
    return FreeModule(std::move(gens));
}

bool module_iso_check(const FreeModule& m, const FreeModule& n) { return m.degrees() == n.degrees(); }

BettiTable::BettiTable(std::string space, Window w, std::map<BiDegree, int> entries)
    : space_(std::move(space)), window_(w), entries_(std::move(entries))
{
    if (w.p0 > w.p1 || w.q0 > w.q1)
        throw std::invalid_argument("BettiTable: empty window");
}

BettiTable BettiTable::of(std::string space, const FreeModule& m, Window w)
{
    std::map<BiDegree, int> entries;
    for (int p = w.p0; p <= w.p1; ++p)
        for (int q = w.q0; q <= w.q1; ++q)
            entries[{p, q}] = betti(m, {p, q});
    return BettiTable(std::move(space), w, std::move(entries));
}

int BettiTable::at(BiDegree d) const
{
    auto it = entries_.find(d);
    return it == entries_.end() ? 0 : it->second;
}

std::string BettiTable::to_csv() const
{
    std::ostringstream os;
    os << "q\\p";
    for (int p = window_.p0; p <= window_.p1; ++p)
        os << ',' << p;
    os << '\n';
    for (int q = window_.q1; q >= window_.q0; --q) {
        os << q;
        for (int p = window_.p0; p <= window_.p1; ++p)
            os << ',' << at({p, q});
        os << '\n';
    }
    return os.str();
}

std::string BettiTable::to_json() const
{
    nlohmann::json entries = nlohmann::json::array();
    for (int q = window_.q1; q >= window_.q0; --q)
        for (int p = window_.p0; p <= window_.p1; ++p)
            entries.push_back({{"p", p}, {"q", q}, {"dim", at({p, q})}});
    nlohmann::json j{{"space", space_}, {"entries", std::move(entries)}};
    return j.dump(2) + "\n";
}

std::string BettiTable::to_ascii() const
{
    int width = 1;
    for (const auto& [d, v] : entries_)
        width = std::max<int>(width, static_cast<int>(std::to_string(v).size()));
    for (int p = window_.p0; p <= window_.p1; ++p)
        width = std::max<int>(width, static_cast<int>(std::to_string(p).size()));

    auto cell = [width](const std::string& s) {
        return std::string(static_cast<std::size_t>(width + 1) - s.size(), ' ') + s;
    };
    int label_width = 1;
    for (int q = window_.q0; q <= window_.q1; ++q)
        label_width = std::max<int>(label_width, static_cast<int>(std::to_string(q).size()));

    std::ostringstream os;
    os << space_ << "\n";
    for (int q = window_.q1; q >= window_.q0; --q) {
        std::string ql = std::to_string(q);
        os << std::string(static_cast<std::size_t>(label_width) - ql.size(), ' ') << ql << " |";
        for (int p = window_.p0; p <= window_.p1; ++p) {
            const int v = at({p, q});
            os << cell(v == 0 ? "." : std::to_string(v));
        }
        os << '\n';
    }
    os << std::string(static_cast<std::size_t>(label_width), ' ') << " +"
       << std::string(static_cast<std::size_t>((window_.p1 - window_.p0 + 1) * (width + 1)), '-') << '\n';
    os << std::string(static_cast<std::size_t>(label_width), ' ') << "  ";
    for (int p = window_.p0; p <= window_.p1; ++p)
        os << cell(std::to_string(p));
    os << "  p\n";
    return os.str();
}

SphereElement sphere_mul(BiDegree dim, const SphereElement& x, const SphereElement& y)
{
    if (dim == BiDegree{0, 0})
        throw std::invalid_argument("sphere_mul: S^{0,0} has no top cell");
    SphereElement out;
    out.unit = x.unit * y.unit;
    out.top = x.unit * y.top + x.top * y.unit;
    if (dim == BiDegree{1, 1})
        out.top += ConeMonomial::rho() * (x.top * y.top);
    return out;
}

}  // namespace eqcohom
