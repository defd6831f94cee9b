#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "f2/kernels.hpp"

// Dense bit-packed linear algebra over GF(2).  Rows are packed into 64-bit
// words; elimination always pivots on the lowest available column index so
// kernel and image bases are reproducible across runs.

namespace su::f2 {

class F2Vec {
  public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : n_(n), w_((n + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool v)
    {
        Word m = Word(1) << (i % kWordBits);
        if (v)
            w_[i / kWordBits] |= m;
        else
            w_[i / kWordBits] &= ~m;
    }
    void flip(std::size_t i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    void add(const F2Vec& o)  // +=, i.e. xor
    {
        xor_rows(w_.data(), o.w_.data(), w_.size());
    }
    bool is_zero() const
    {
        for (Word x : w_)
            if (x) return false;
        return true;
    }
    // Lowest set bit, or size() if zero.
    std::size_t leading() const;

    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

  private:
    std::size_t n_ = 0;
    std::vector<Word> w_;
};

class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, F2Vec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    F2Vec& row(std::size_t r) { return data_[r]; }
    const F2Vec& row(std::size_t r) const { return data_[r]; }

    F2Matrix transposed() const;
    static F2Matrix identity(std::size_t n);
    // Matrix product over GF(2); this->cols() must equal rhs.rows().
    F2Matrix operator*(const F2Matrix& rhs) const;
    bool operator==(const F2Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vec> data_;
};

struct ImageNotContained : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankResult {
    std::size_t rank = 0;
    std::vector<F2Vec> kernel;  // reduced echelon basis of the null space
    std::vector<F2Vec> image;   // reduced echelon basis of the column space
};

// Rank, kernel basis and image basis of m acting on column vectors.
// rank + kernel.size() == cols always.
RankResult rank_kernel_image(const F2Matrix& m);

std::size_t rank(const F2Matrix& m);

// Reduced echelon form of a list of vectors (span basis, deterministic).
std::vector<F2Vec> echelon_basis(std::vector<F2Vec> vecs);

// Reduce v against an echelon basis in place; returns true if v ended at 0,
// i.e. v was in the span.
bool reduce_against(F2Vec& v, const std::vector<F2Vec>& basis);

struct Subquotient {
    std::size_t dim = 0;
    std::vector<F2Vec> representatives;
};

// Dimension and representatives of span(ker)/span(im).  The representatives
// complete im_basis to a basis of span(ker).  Throws ImageNotContained when
// an image vector falls outside span(ker); upstream that signals d^2 != 0.
Subquotient subquotient(const std::vector<F2Vec>& ker_basis, const std::vector<F2Vec>& im_basis);

}  // namespace su::f2
