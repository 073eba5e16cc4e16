#include "eqcohom/expr.hpp"

#include "eqcohom/rotation.hpp"
#include "eqcohom/stiefel.hpp"

#include <cctype>
#include <optional>

namespace eqcohom::expr {

namespace {

enum class Tok { plus, star, bar, caret, lparen, rparen, slash, atom, end };

struct Token
{
    Tok kind = Tok::end;
    std::size_t offset = 0;
    Atom atom;
};

class Lexer
{
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.offset = pos_;
            if (pos_ >= s_.size()) {
                out.push_back(t);
                return out;
            }
            t.kind = Tok::atom;
            const char c = s_[pos_];
            switch (c) {
            case '+': t.kind = Tok::plus; ++pos_; break;
            case '*': t.kind = Tok::star; ++pos_; break;
            case '|': t.kind = Tok::bar; ++pos_; break;
            case '^': t.kind = Tok::caret; ++pos_; break;
            case '(': t.kind = Tok::lparen; ++pos_; break;
            case ')': t.kind = Tok::rparen; ++pos_; break;
            case '/': t.kind = Tok::slash; ++pos_; break;
            case '[':
                t.atom = bracket(Atom::Kind::frame_class, pos_);
                break;
            default:
                t.atom = word();
            }
            out.push_back(std::move(t));
        }
    }

private:
    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool starts_with(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }

    std::optional<int> digits()
    {
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000)
                throw SyntaxError(start, "number too large");
            ++pos_;
        }
        if (pos_ == start)
            return std::nullopt;
        return static_cast<int>(v);
    }

    Atom bracket(Atom::Kind kind, std::size_t start)
    {
        // at '['
        ++pos_;
        Atom a;
        a.kind = kind;
        for (;;) {
            skip_space();
            auto v = digits();
            if (!v)
                throw SyntaxError(pos_, "expected an index inside brackets");
            a.indices.push_back(*v);
            skip_space();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < s_.size() && s_[pos_] == ']') {
                ++pos_;
                break;
            }
            throw SyntaxError(pos_, "expected ',' or ']'");
        }
        a.text = std::string(s_.substr(start, pos_ - start));
        return a;
    }

    Atom word()
    {
        const std::size_t start = pos_;
        Atom a;
        auto finish = [&] {
            a.text = std::string(s_.substr(start, pos_ - start));
            return a;
        };
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            a.kind = Atom::Kind::integer;
            a.value = *digits();
            return finish();
        }
        if (starts_with("th") || starts_with("θ")) {
            pos_ += starts_with("th") ? 2 : 2;
            a.kind = Atom::Kind::theta;
            return finish();
        }
        if (starts_with("ρ")) {
            pos_ += 2;
            a.kind = Atom::Kind::rho;
            return finish();
        }
        if (starts_with("τ")) {
            pos_ += 2;
            a.kind = Atom::Kind::tau;
            return finish();
        }
        if (starts_with("β")) {
            pos_ += 2;
            return rot_atom(start);
        }
        switch (s_[pos_]) {
        case 'r':
            ++pos_;
            a.kind = Atom::Kind::rho;
            return finish();
        case 't':
            ++pos_;
            a.kind = Atom::Kind::tau;
            return finish();
        case 'x':
            ++pos_;
            a.kind = Atom::Kind::x;
            return finish();
        case 'a':
        case 'b':
            a.kind = s_[pos_] == 'a' ? Atom::Kind::a : Atom::Kind::b;
            ++pos_;
            a.value = digits().value_or(0);
            return finish();
        case 'B':
            ++pos_;
            return rot_atom(start);
        default:
            break;
        }
        throw SyntaxError(start, "unexpected character '" + std::string(1, s_[start]) + "'");
    }

    Atom rot_atom(std::size_t start)
    {
        if (pos_ < s_.size() && s_[pos_] == '[') {
            Atom a = bracket(Atom::Kind::rot_class, pos_);
            a.text = std::string(s_.substr(start, pos_ - start));
            return a;
        }
        Atom a;
        a.kind = Atom::Kind::rot_generator;
        auto v = digits();
        if (!v)
            throw SyntaxError(pos_, "expected a generator index or '[' after B");
        a.value = *v;
        a.text = std::string(s_.substr(start, pos_ - start));
        return a;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

class Parser
{
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse()
    {
        Expr e = sum();
        if (peek().kind != Tok::end)
            throw SyntaxError(peek().offset, "unexpected trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    void expect(Tok k, const char* what)
    {
        if (peek().kind != k)
            throw SyntaxError(peek().offset, std::string("expected ") + what);
        ++pos_;
    }

    Expr sum()
    {
        const std::size_t offset = peek().offset;
        std::vector<Expr> terms;
        terms.push_back(product());
        while (peek().kind == Tok::plus) {
            ++pos_;
            terms.push_back(product());
        }
        return collapse(Node::Kind::sum, offset, std::move(terms));
    }

    bool starts_factor() const { return peek().kind == Tok::atom || peek().kind == Tok::lparen; }

    Expr product()
    {
        const std::size_t offset = peek().offset;
        std::vector<Expr> factors;
        factors.push_back(power());
        for (;;) {
            if (peek().kind == Tok::star || peek().kind == Tok::bar) {
                ++pos_;
                factors.push_back(power());
            } else if (starts_factor()) {
                factors.push_back(power());
            } else {
                break;
            }
        }
        return collapse(Node::Kind::product, offset, std::move(factors));
    }

    Expr power()
    {
        const std::size_t offset = peek().offset;
        Expr base = primary();
        if (peek().kind != Tok::caret)
            return base;
        ++pos_;
        const Token& t = next();
        if (t.kind != Tok::atom || t.atom.kind != Atom::Kind::integer)
            throw SyntaxError(t.offset, "expected a natural-number exponent after '^'");
        auto node = std::make_unique<Node>();
        node->kind = Node::Kind::power;
        node->offset = offset;
        node->exponent = t.atom.value;
        node->children.push_back(std::move(base));
        return node;
    }

    Expr primary()
    {
        const Token& t = peek();
        if (t.kind == Tok::lparen) {
            ++pos_;
            Expr inner = sum();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind != Tok::atom)
            throw SyntaxError(t.offset, t.kind == Tok::end ? "unexpected end of input" : "expected an operand");
        ++pos_;
        auto node = std::make_unique<Node>();
        node->kind = Node::Kind::atom;
        node->offset = t.offset;
        node->atom = t.atom;
        if (node->atom.kind == Atom::Kind::theta && peek().kind == Tok::slash) {
            ++pos_;
            divisor(node->atom);
        }
        return node;
    }

    // th/(r^a t^b): a product of r and t powers in parentheses.
    void divisor(Atom& theta)
    {
        expect(Tok::lparen, "'(' after 'th/'");
        bool any = false;
        while (peek().kind != Tok::rparen) {
            if (any && peek().kind == Tok::star)
                ++pos_;
            const Token& t = next();
            if (t.kind != Tok::atom || (t.atom.kind != Atom::Kind::rho && t.atom.kind != Atom::Kind::tau))
                throw SyntaxError(t.offset, "only r and t may divide th");
            int e = 1;
            if (peek().kind == Tok::caret) {
                ++pos_;
                const Token& n = next();
                if (n.kind != Tok::atom || n.atom.kind != Atom::Kind::integer)
                    throw SyntaxError(n.offset, "expected an exponent");
                e = n.atom.value;
            }
            (t.atom.kind == Atom::Kind::rho ? theta.rho_div : theta.tau_div) += e;
            any = true;
        }
        ++pos_;
    }

    static Expr collapse(Node::Kind kind, std::size_t offset, std::vector<Expr> items)
    {
        if (items.size() == 1)
            return std::move(items.front());
        auto node = std::make_unique<Node>();
        node->kind = kind;
        node->offset = offset;
        node->children = std::move(items);
        return node;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void resolve_atom(const Atom& a, const Space& space)
{
    const std::string where = display_name(space);
    auto fail = [&] { throw UnknownGenerator(a.text, where); };
    switch (a.kind) {
    case Atom::Kind::integer:
    case Atom::Kind::rho:
    case Atom::Kind::tau:
    case Atom::Kind::theta:
        return;
    case Atom::Kind::x:
        if (space.kind != Space::Kind::sphere)
            fail();
        return;
    case Atom::Kind::a:
    case Atom::Kind::b:
        if (space.kind == Space::Kind::rp) {
            if (a.value != 0 && (space.rp.is_infinite() || a.value != space.rp.n()))
                fail();
            if (a.kind == Atom::Kind::b && !space.rp.is_infinite() && space.rp.n() < 2)
                fail();
            return;
        }
        if (space.kind == Space::Kind::tensor) {
            auto k = space.factors.position_of(a.value);
            if (a.value == 0 || !k)
                fail();
            if (a.kind == Atom::Kind::b && space.factors[*k].n() < 2)
                fail();
            return;
        }
        fail();
        return;
    case Atom::Kind::rot_generator:
        if (space.kind != Space::Kind::so || a.value < 1 || a.value >= space.n)
            fail();
        return;
    case Atom::Kind::rot_class: {
        if (space.kind != Space::Kind::so)
            fail();
        if (a.indices == std::vector<int>{0})
            return;
        for (std::size_t k = 0; k < a.indices.size(); ++k)
            if (a.indices[k] < 1 || a.indices[k] >= space.n || (k > 0 && a.indices[k - 1] <= a.indices[k]))
                fail();
        return;
    }
    case Atom::Kind::frame_class:
        // Out-of-range or repeated indices denote zero, by the bracket conventions.
        if (space.kind != Space::Kind::stiefel)
            fail();
        return;
    }
}

}  // namespace

Expr parse_syntax(std::string_view input) { return Parser(Lexer(input).run()).parse(); }

void resolve(const Node& node, const Space& space)
{
    if (node.kind == Node::Kind::atom) {
        resolve_atom(node.atom, space);
        return;
    }
    for (const auto& c : node.children)
        resolve(*c, space);
}

Expr parse_expr(std::string_view input, const Space& space)
{
    Expr e = parse_syntax(input);
    resolve(*e, space);
    return e;
}

}  // namespace eqcohom::expr
