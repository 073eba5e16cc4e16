#include "eqcohom/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eqcohom::gf2 {

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

BitVector& BitVector::operator^=(const BitVector& o)
{
    if (o.size_ != size_)
        throw std::invalid_argument("gf2: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= o.words_[i];
    return *this;
}

namespace {

struct Echelon
{
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;  // pivot column of rows[k]
};

// Gauss-Jordan on the given rows, restricted to the first `cols` columns.
Echelon reduce(std::vector<BitVector> rows, std::size_t cols)
{
    Echelon e;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t r = next;
        while (r < rows.size() && !rows[r].get(c))
            ++r;
        if (r == rows.size())
            continue;
        std::swap(rows[r], rows[next]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != next && rows[k].get(c))
                rows[k] ^= rows[next];
        e.pivots.push_back(c);
        ++next;
    }
    e.rows = std::move(rows);
    return e;
}

}  // namespace

std::size_t rank(BitMatrix m)
{
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return reduce(std::move(rows), m.cols()).pivots.size();
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("gf2::solve: right-hand side has wrong length");
    const std::size_t n = a.cols();
    std::vector<BitVector> aug;
    aug.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector row(n + 1);
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c))
                row.set(c);
        row.set(n, b.get(r));
        aug.push_back(std::move(row));
    }
    Echelon e = reduce(std::move(aug), n);
    // A nonzero right-hand side below the pivots means no solution.
    for (std::size_t k = e.pivots.size(); k < e.rows.size(); ++k)
        if (e.rows[k].get(n))
            return std::nullopt;
    BitVector x(n);
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        x.set(e.pivots[k], e.rows[k].get(n));
    return x;
}

}  // namespace eqcohom::gf2
