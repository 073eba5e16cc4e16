#include "eqcohom/space.hpp"

#include "eqcohom/rotation.hpp"
#include "eqcohom/stiefel.hpp"

#include <charconv>
#include <stdexcept>

namespace eqcohom {

namespace {

int parse_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

}  // namespace

Space parse_space(std::string_view text)
{
    Space s;
    const std::size_t colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (kind == "pt" || kind == "point") {
        s.kind = Space::Kind::point;
        return s;
    }
    if (arg.empty())
        throw std::invalid_argument("space '" + std::string(text) + "' needs a parameter");
    if (kind == "sphere") {
        auto parts = split(arg, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("sphere needs P,Q");
        s.kind = Space::Kind::sphere;
        s.sphere = {parse_int(parts[0], "sphere P"), parse_int(parts[1], "sphere Q")};
        if (s.sphere == BiDegree{0, 0})
            throw std::invalid_argument("S^{0,0} is not supported");
        return s;
    }
    if (kind == "rp") {
        s.kind = Space::Kind::rp;
        s.rp = (arg == "inf") ? Ambient::infinite() : Ambient::finite(parse_int(arg, "rp N"));
        return s;
    }
    if (kind == "tensor") {
        s.kind = Space::Kind::tensor;
        std::vector<Ambient> amb;
        for (auto part : split(arg, ','))
            amb.push_back(Ambient::finite(parse_int(part, "tensor factor")));
        s.factors = TensorFactors(std::move(amb));
        return s;
    }
    if (kind == "so" || kind == "stiefel") {
        auto parts = split(arg, ',');
        s.kind = kind == "so" ? Space::Kind::so : Space::Kind::stiefel;
        s.n = parse_int(parts[0], "P");
        if (s.n < 2)
            throw std::invalid_argument("P must be at least 2");
        if (parts.size() > 2)
            throw std::invalid_argument("too many parameters in '" + std::string(text) + "'");
        if (parts.size() == 2 && parse_int(parts[1], "Q") != s.n / 2)
            throw std::invalid_argument("only Q = floor(P/2) is supported; got " + std::string(arg));
        return s;
    }
    throw std::invalid_argument("unknown space '" + std::string(text) + "'");
}

std::string display_name(const Space& s)
{
    switch (s.kind) {
    case Space::Kind::point:
        return "pt";
    case Space::Kind::sphere:
        return "S^" + to_string(s.sphere);
    case Space::Kind::rp:
        return "RP^" + to_string(s.rp) + "_tw";
    case Space::Kind::tensor: {
        std::string out;
        for (const auto& a : s.factors.ambients())
            out += (out.empty() ? "" : " x ") + ("RP^" + to_string(a) + "_tw");
        return out;
    }
    case Space::Kind::so:
        return "SO(" + std::to_string(s.n) + "," + std::to_string(s.n / 2) + ")";
    case Space::Kind::stiefel:
        return "V_" + std::to_string(s.n / 2) + "(R^{" + std::to_string(s.n) + "," + std::to_string(s.n / 2) + "})";
    }
    return {};
}

FreeModule module_of(const Space& s)
{
    switch (s.kind) {
    case Space::Kind::point:
        return FreeModule::point();
    case Space::Kind::sphere:
        return FreeModule({{"1", {0, 0}}, {"x", s.sphere}});
    case Space::Kind::rp: {
        std::vector<Generator> gens;
        for (const auto& m : rp_basis(s.rp))
            gens.push_back({to_string(m), m.degree()});
        return FreeModule(std::move(gens));
    }
    case Space::Kind::tensor: {
        FreeModule out = FreeModule::point();
        for (std::size_t k = 0; k < s.factors.size(); ++k) {
            std::vector<Generator> gens;
            const int index = s.factors[k].is_infinite() ? 0 : s.factors[k].n();
            for (const auto& m : rp_basis(s.factors[k]))
                gens.push_back({to_string(m, index), m.degree()});
            out = tensor_module(out, FreeModule(std::move(gens)));
        }
        return out;
    }
    case Space::Kind::so:
        return so_generators(s.n);
    case Space::Kind::stiefel:
        return stiefel_generators(s.n);
    }
    return {};
}

}  // namespace eqcohom
