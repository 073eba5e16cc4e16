#include "eqcohom/cli.hpp"

#include "eqcohom/evaluate.hpp"
#include "eqcohom/expr.hpp"
#include "eqcohom/forgetful.hpp"
#include "eqcohom/projective.hpp"
#include "eqcohom/rotation.hpp"
#include "eqcohom/space.hpp"
#include "eqcohom/stiefel.hpp"
#include "eqcohom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

namespace eqcohom::cli {

namespace {

int parse_int(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

struct Config
{
    std::optional<Window> window;
    std::string format = "ascii";
};

void print_basis(std::ostream& out, const std::string& space, const std::vector<Generator>& gens,
                 const std::string& format)
{
    if (format == "json") {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& g : gens)
            basis.push_back({{"label", g.label}, {"p", g.degree.p}, {"q", g.degree.q}});
        out << nlohmann::json{{"space", space}, {"basis", basis}}.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        out << "label,p,q\n";
        for (const auto& g : gens)
            out << g.label << ',' << g.degree.p << ',' << g.degree.q << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& g : gens)
        width = std::max(width, g.label.size());
    for (const auto& g : gens)
        out << g.label << std::string(width - g.label.size() + 2, ' ') << to_string(g.degree) << '\n';
}

void print_value(std::ostream& out, const Config& cfg, const Space& space, const std::string& input,
                 const std::string& value)
{
    if (cfg.format == "json")
        out << nlohmann::json{{"space", display_name(space)}, {"input", input}, {"value", value}}.dump(2) << '\n';
    else
        out << value << '\n';
}

void print_table(std::ostream& out, const BettiTable& t, const std::string& format)
{
    if (format == "csv")
        out << t.to_csv();
    else if (format == "json")
        out << t.to_json();
    else
        out << t.to_ascii();
}

Window module_window(const FreeModule& m)
{
    Window w{0, 0, 0, 0};
    for (const auto& g : m.generators()) {
        w.p1 = std::max(w.p1, g.degree.p);
        w.q1 = std::max(w.q1, g.degree.q);
    }
    return w;
}

int rp_present(std::ostream& out, Ambient n)
{
    struct Relation
    {
        std::string text;
        std::string lhs;
        std::string rhs;
    };
    std::vector<Relation> rels;
    std::string gens = "a, b";
    if (!n.is_infinite() && n.n() == 1) {
        gens = "a";
        rels.push_back({"a^2 = r*a", "a^2", "r*a"});
    } else {
        rels.push_back({"a^2 = r*a + t*b", "a^2", "r*a + t*b"});
        if (!n.is_infinite()) {
            const int k = n.n() / 2 + 1;  // first vanishing power of b
            rels.push_back({"b^" + std::to_string(k) + " = 0", "b^" + std::to_string(k), "0"});
            if (n.n() % 2 == 0)
                rels.push_back({"a*b^" + std::to_string(n.n() / 2) + " = 0", "a*b^" + std::to_string(n.n() / 2), "0"});
        }
    }
    Space s;
    s.kind = Space::Kind::rp;
    s.rp = n;
    out << "H(RP^" << to_string(n) << "_tw) = M2[" << gens << "]/(";
    for (std::size_t k = 0; k < rels.size(); ++k)
        out << (k ? ", " : "") << rels[k].text;
    out << ")\n";
    out << "  a in (1,1)" << (gens == "a" ? "" : ", b in (2,1)") << '\n';
    bool all = true;
    for (const auto& r : rels) {
        const bool holds = evaluate(r.lhs, s) == evaluate(r.rhs, s);
        all = all && holds;
        out << "  " << r.text << ": " << (holds ? "holds" : "FAILS") << '\n';
    }
    return all ? ok : verification_failure;
}

int max_p_from(std::optional<int> flag, std::ostream& err)
{
    int max_p = flag.value_or(6);
    if (const char* env = std::getenv("EQCOHOM_MAX_P"); env && *env) {
        const int cap = parse_int(env);
        if (cap < 2)
            throw std::invalid_argument("EQCOHOM_MAX_P must be at least 2");
        if (max_p > cap) {
            if (flag)
                err << "note: --max-p " << max_p << " capped to " << cap << " by EQCOHOM_MAX_P\n";
            max_p = cap;
        }
    }
    if (max_p < 2)
        throw std::invalid_argument("--max-p must be at least 2");
    return max_p;
}

Space space_for(Space::Kind kind, int p)
{
    Space s;
    s.kind = kind;
    s.n = p;
    if (p < 2)
        throw std::invalid_argument("p must be at least 2");
    if (p > 31)
        throw std::invalid_argument("p must be at most 31");
    return s;
}

const std::string& need_expr(const std::string& e, const char* action)
{
    if (e.empty())
        throw CLI::ValidationError(std::string(action) + " needs an expression");
    return e;
}

}  // namespace

Window parse_window(std::string_view s)
{
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("window must look like p0:p1,q0:q1");
    auto range = [](std::string_view r) {
        // The separator is the first ':' after a possible leading sign.
        const std::size_t colon = r.find(':', 1);
        if (r.empty() || colon == std::string_view::npos)
            throw std::invalid_argument("window must look like p0:p1,q0:q1");
        return std::make_pair(parse_int(r.substr(0, colon)), parse_int(r.substr(colon + 1)));
    };
    const auto [p0, p1] = range(s.substr(0, comma));
    const auto [q0, q1] = range(s.substr(comma + 1));
    if (p0 > p1 || q0 > q1)
        throw std::invalid_argument("window bounds are reversed");
    return {p0, p1, q0, q1};
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"RO(Z/2)-graded Bredon cohomology calculator", "eqcohom"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::string window_text;
    app.add_option("--window", window_text, "Lattice window p0:p1,q0:q1");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"ascii", "csv", "json"}));

    std::string action, expr_text, target;
    int p = 0;

    auto* point = app.add_subcommand("point", "The point ring M2");
    point->add_option("action", action)->required()->check(CLI::IsMember({"chart"}));

    auto* rp = app.add_subcommand("rp", "RP^n_tw");
    rp->add_option("n", target, "n or inf")->required();
    rp->add_option("action", action)->required()->check(CLI::IsMember({"basis", "present", "mul"}));
    rp->add_option("expr", expr_text);

    auto* so = app.add_subcommand("so", "SO(p, floor(p/2))");
    so->add_option("p", p)->required();
    so->add_option("action", action)
        ->required()
        ->check(CLI::IsMember({"basis", "betti", "mul", "check-presentation", "omega"}));
    so->add_option("expr", expr_text);

    auto* stiefel = app.add_subcommand("stiefel", "V_q(R^{p,q}), q = floor(p/2)");
    stiefel->add_option("p", p)->required();
    stiefel->add_option("action", action)->required()->check(CLI::IsMember({"basis", "mul"}));
    stiefel->add_option("expr", expr_text);

    auto* psi = app.add_subcommand("psi", "Forgetful map to singular cohomology");
    psi->add_option("space", target, "pt, sphere:P,Q, rp:N, tensor:N1,..., so:P, stiefel:P")->required();
    psi->add_option("expr", expr_text)->required();

    std::optional<int> max_p_flag;
    std::string suite_text = "all";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--max-p", max_p_flag, "Largest p checked");
    verify->add_option("--suite", suite_text)->check(CLI::IsMember({"additive", "ring", "forgetful", "stiefel", "all"}));
    verify->add_option("--threads", threads, "Worker threads");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        if (!args.empty())
            args.pop_back();
        app.parse(args);
        if (!window_text.empty())
            cfg.window = parse_window(window_text);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (point->parsed()) {
            const Window w = cfg.window.value_or(Window{-4, 4, -5, 5});
            print_table(out, BettiTable::of("pt", FreeModule::point(), w), cfg.format);
            return ok;
        }
        if (rp->parsed()) {
            Space s;
            s.kind = Space::Kind::rp;
            s.rp = target == "inf" ? Ambient::infinite() : Ambient::finite(parse_int(target));
            if (action == "basis") {
                std::vector<Generator> gens;
                if (s.rp.is_infinite()) {
                    const int top = cfg.window ? cfg.window->p1 : 8;
                    for (const auto& m : rp_basis_prefix(static_cast<std::size_t>(std::max(top + 1, 0))))
                        if (!cfg.window || cfg.window->contains(m.degree()))
                            gens.push_back({to_string(m), m.degree()});
                } else {
                    const FreeModule m = module_of(s);
                    for (const auto& g : m.generators())
                        if (!cfg.window || cfg.window->contains(g.degree))
                            gens.push_back(g);
                }
                print_basis(out, display_name(s), gens, cfg.format);
                return ok;
            }
            if (action == "present")
                return rp_present(out, s.rp);
            const auto& e = need_expr(expr_text, "mul");
            print_value(out, cfg, s, e, format_value(s, evaluate(e, s)));
            return ok;
        }
        if (so->parsed()) {
            const Space s = space_for(Space::Kind::so, p);
            if (action == "basis") {
                print_basis(out, display_name(s), so_generators(p).generators(), cfg.format);
                return ok;
            }
            if (action == "betti") {
                const FreeModule m = so_generators(p);
                print_table(out, BettiTable::of(display_name(s), m, cfg.window.value_or(module_window(m))), cfg.format);
                return ok;
            }
            if (action == "check-presentation") {
                const PresentationReport r = check_presentation(p, std::max(p, 8));
                out << r.to_text();
                return r.all_match() ? ok : verification_failure;
            }
            const auto& e = need_expr(expr_text, action.c_str());
            const RotElement x = std::get<RotElement>(evaluate(e, s));
            const std::string value =
                action == "omega" ? to_string(rotation_algebra(p).factors(), omega_star(p, x)) : to_string(x);
            print_value(out, cfg, s, e, value);
            return ok;
        }
        if (stiefel->parsed()) {
            const Space s = space_for(Space::Kind::stiefel, p);
            if (action == "basis") {
                print_basis(out, display_name(s), stiefel_generators(p).generators(), cfg.format);
                return ok;
            }
            const auto& e = need_expr(expr_text, "mul");
            print_value(out, cfg, s, e, format_value(s, evaluate(e, s)));
            return ok;
        }
        if (psi->parsed()) {
            const Space s = parse_space(target);
            print_value(out, cfg, s, expr_text, to_string(psi_value(s, evaluate(expr_text, s))));
            return ok;
        }
        if (verify->parsed()) {
            const int max_p = max_p_from(max_p_flag, err);
            const auto results = verify::run(verify::parse_suite(suite_text), max_p, threads);
            if (cfg.format == "ascii")
                out << "verification at max p = " << max_p << '\n';
            out << verify::render(results, cfg.format);
            return verify::any_failure(results) ? verification_failure : ok;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const expr::SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const expr::UnknownGenerator& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << '\n';
        return verification_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return verification_failure;
    }
    return usage_error;
}

}  // namespace eqcohom::cli
