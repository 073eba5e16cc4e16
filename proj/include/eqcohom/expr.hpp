#pragma once

// Expression language for elements of the supported algebras.
//
//   sum     := product ('+' product)*
//   product := power (('*' | '|')? power)*      juxtaposition multiplies
//   power   := primary ('^' nat)?
//   primary := atom | '(' sum ')'
//
// Atoms: integers (read mod 2), r t th (also ρ τ θ), th/(r^a t^b), a<j> b<j>,
// x, B<i>, B[i1,...], [i1,...], [0].

#include "eqcohom/space.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqcohom::expr {

class SyntaxError : public std::runtime_error
{
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownGenerator : public std::runtime_error
{
public:
    UnknownGenerator(const std::string& token, const std::string& space)
        : std::runtime_error("unknown generator '" + token + "' in " + space), token_(token)
    {
    }
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

struct Atom
{
    enum class Kind { integer, rho, tau, theta, a, b, x, rot_generator, rot_class, frame_class };

    Kind kind = Kind::integer;
    int value = 0;             // integer value, or generator index (0 when absent)
    std::vector<int> indices;  // rot_class / frame_class
    int rho_div = 0;           // theta/(r^rho_div t^tau_div)
    int tau_div = 0;
    std::string text;          // source spelling, for error messages
};

struct Node
{
    enum class Kind { sum, product, power, atom };

    Kind kind = Kind::atom;
    std::size_t offset = 0;
    std::vector<std::unique_ptr<Node>> children;  // sum/product operands; power base
    int exponent = 0;
    Atom atom;
};

using Expr = std::unique_ptr<Node>;

// Parses and checks that every atom names something in `space`.
Expr parse_expr(std::string_view input, const Space& space);

// Parses without resolving atoms.
Expr parse_syntax(std::string_view input);

// Throws UnknownGenerator if some atom does not exist in `space`.
void resolve(const Node& node, const Space& space);

}  // namespace eqcohom::expr
