#pragma once

// Bookkeeping for free modules over the point ring: generator lists, Betti
// numbers, products of spheres, and the two-cell sphere algebras.

#include "eqcohom/coeff.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace eqcohom {

struct Generator
{
    std::string label;
    BiDegree degree;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class FreeModule
{
public:
    FreeModule() = default;
    explicit FreeModule(std::vector<Generator> gens);

    // The rank-one module of the point.
    static FreeModule point();

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t rank() const { return gens_.size(); }

    // Generator bidegrees, sorted; the multiset used for all comparisons.
    std::vector<BiDegree> degrees() const;

private:
    std::vector<Generator> gens_;
};

int betti(const FreeModule& m, BiDegree d);
FreeModule tensor_module(const FreeModule& m, const FreeModule& n);
FreeModule sphere_product_module(std::span<const BiDegree> dims);
bool module_iso_check(const FreeModule& m, const FreeModule& n);

// Inclusive on both ends in p and q.
struct Window
{
    int p0 = 0, p1 = 0, q0 = 0, q1 = 0;

    bool contains(BiDegree d) const { return d.p >= p0 && d.p <= p1 && d.q >= q0 && d.q <= q1; }
};

class BettiTable
{
public:
    BettiTable(std::string space, Window w, std::map<BiDegree, int> entries);

    static BettiTable of(std::string space, const FreeModule& m, Window w);

    const std::string& space() const { return space_; }
    const Window& window() const { return window_; }
    int at(BiDegree d) const;

    // Rows are q descending, columns p ascending.
    std::string to_csv() const;
    std::string to_json() const;
    // Lattice picture with q increasing upward; '.' marks a zero group.
    std::string to_ascii() const;

private:
    std::string space_;
    Window window_;
    std::map<BiDegree, int> entries_;
};

// H(S^{p,q}) as the free algebra on {1, x}: x^2 = rho x for S^{1,1}, else 0.
struct SphereElement
{
    CoeffElement unit;
    CoeffElement top;

    friend bool operator==(const SphereElement&, const SphereElement&) = default;
};

SphereElement sphere_mul(BiDegree dim, const SphereElement& x, const SphereElement& y);

}  // namespace eqcohom
