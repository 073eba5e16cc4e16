#pragma once

// Dense linear algebra over GF(2) on packed 64-bit words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace eqcohom::gf2 {

class BitVector
{
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v = true)
    {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool any() const;
    BitVector& operator^=(const BitVector& o);

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major matrix: rows() vectors of length cols().
class BitMatrix
{
public:
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

std::size_t rank(BitMatrix m);

// Some x with A x = b, free variables set to zero; nullopt if inconsistent.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

}  // namespace eqcohom::gf2
