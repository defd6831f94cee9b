#include "f2/bitmat.hpp"

namespace su::f2 {

std::size_t F2Vec::leading() const
{
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        if (w_[wi]) {
            std::size_t b = wi * kWordBits + static_cast<std::size_t>(__builtin_ctzll(w_[wi]));
            return b < n_ ? b : n_;
        }
    }
    return n_;
}

F2Matrix F2Matrix::transposed() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const
{
    F2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k)) out.row(r).add(rhs.row(k));
    return out;
}

std::vector<F2Vec> echelon_basis(std::vector<F2Vec> vecs)
{
    std::vector<F2Vec> basis;  // kept sorted by leading index, fully reduced
    for (auto& v : vecs) {
        for (const auto& b : basis)
            if (v.get(b.leading())) v.add(b);
        if (v.is_zero()) continue;
        std::size_t lead = v.leading();
        for (auto& b : basis)
            if (b.get(lead)) b.add(v);
        auto pos = basis.begin();
        while (pos != basis.end() && pos->leading() < lead) ++pos;
        basis.insert(pos, v);
    }
    return basis;
}

bool reduce_against(F2Vec& v, const std::vector<F2Vec>& basis)
{
    for (const auto& b : basis)
        if (v.get(b.leading())) v.add(b);
    return v.is_zero();
}

RankResult rank_kernel_image(const F2Matrix& m)
{
    RankResult out;
    const std::size_t rows = m.rows(), cols = m.cols();

    // Row echelon form of a working copy, pivoting on the lowest column.
    std::vector<F2Vec> work;
    work.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r)
        work.push_back(m.row(r));

    std::vector<std::size_t> pivot_col;          // per echelon row
    std::vector<long> col_pivot(cols, -1);       // col -> echelon row index
    std::vector<F2Vec> ech;
    for (auto& v : work) {
        for (const auto& b : ech)
            if (v.get(b.leading())) v.add(b);
        if (v.is_zero()) continue;
        std::size_t lead = v.leading();
        for (auto& b : ech)
            if (b.get(lead)) b.add(v);
        auto pos = ech.begin();
        std::size_t idx = 0;
        while (pos != ech.end() && pos->leading() < lead) ++pos, ++idx;
        ech.insert(pos, v);
    }
    out.rank = ech.size();
    pivot_col.clear();
    for (const auto& b : ech) {
        pivot_col.push_back(b.leading());
        col_pivot[b.leading()] = static_cast<long>(pivot_col.size() - 1);
    }

    // Kernel basis from free columns: canonical RREF null-space vectors.
    for (std::size_t c = 0; c < cols; ++c) {
        if (col_pivot[c] >= 0) continue;
        F2Vec k(cols);
        k.set(c, true);
        for (std::size_t pr = 0; pr < ech.size(); ++pr)
            if (ech[pr].get(c)) k.set(pivot_col[pr], true);
        out.kernel.push_back(std::move(k));
    }

    // Image basis: reduced echelon basis of the column space.
    std::vector<F2Vec> colvecs;
    colvecs.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        F2Vec v(rows);
        for (std::size_t r = 0; r < rows; ++r)
            if (m.get(r, c)) v.set(r, true);
        colvecs.push_back(std::move(v));
    }
    out.image = echelon_basis(std::move(colvecs));
    return out;
}

std::size_t rank(const F2Matrix& m)
{
    std::vector<F2Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return echelon_basis(std::move(rows)).size();
}

Subquotient subquotient(const std::vector<F2Vec>& ker_basis, const std::vector<F2Vec>& im_basis)
{
    std::vector<F2Vec> kech = echelon_basis(ker_basis);
    std::vector<F2Vec> span = echelon_basis(im_basis);
    for (const auto& v0 : im_basis) {
        F2Vec v = v0;
        if (!reduce_against(v, kech))
            throw ImageNotContained("image vector outside kernel span");
    }

    Subquotient out;
    out.dim = kech.size() - span.size();
    // Greedily extend the image span to a basis of the kernel; the added
    // kernel vectors represent the quotient.
    for (const auto& k : kech) {
        F2Vec v = k;
        if (!reduce_against(v, span)) {
            out.representatives.push_back(k);
            span = echelon_basis([&] {
                auto s = span;
                s.push_back(k);
                return s;
            }());
        }
    }
    return out;
}

}  // namespace su::f2
