#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "f2/bitmat.hpp"
#include "f2/kernels.hpp"

using namespace su::f2;

namespace {

// Independent elimination oracle: plain bool matrix, no bit packing.
std::size_t naive_rank(const F2Matrix& m)
{
    std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m.get(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && !a[piv][c])
            ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t k = 0; k < m.cols(); ++k)
                    a[r][k] = a[r][k] ^ a[rank][k];
        ++rank;
    }
    return rank;
}

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rng() & 1);
    return m;
}

}  // namespace

TEST_CASE("empty and identity matrices")
{
    F2Matrix empty(0, 0);
    auto r = rank_kernel_image(empty);
    CHECK(r.rank == 0);
    CHECK(r.kernel.empty());
    CHECK(r.image.empty());

    auto id = F2Matrix::identity(3);
    auto ri = rank_kernel_image(id);
    CHECK(ri.rank == 3);
    CHECK(ri.kernel.empty());
    REQUIRE(ri.image.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(ri.image[i].leading() == i);
    }
}

TEST_CASE("rank + kernel dimension equals column count")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
        auto m = random_matrix(rng, rows, cols);
        auto r = rank_kernel_image(m);
        CHECK(r.rank + r.kernel.size() == cols);
        CHECK(r.rank == naive_rank(m));
        CHECK(r.rank == rank(m.transposed()));
        for (const auto& k : r.kernel) {
            // m k = 0.
            F2Vec out(rows);
            for (std::size_t c = 0; c < cols; ++c)
                if (k.get(c))
                    for (std::size_t rr = 0; rr < rows; ++rr)
                        if (m.get(rr, c)) out.flip(rr);
            CHECK(out.is_zero());
        }
    }
}

TEST_CASE("subquotient basics")
{
    F2Vec e1(2), e2(2);
    e1.set(0, true);
    e2.set(1, true);
    CHECK(subquotient({e1}, {e1}).dim == 0);
    CHECK(subquotient({e1, e2}, {}).dim == 2);
    F2Vec outside(2);
    outside.set(1, true);
    CHECK_THROWS_AS(subquotient({e1}, {outside}), ImageNotContained);
}

TEST_CASE("subquotient dim invariant under change of image spanning set")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 6 + rng() % 10;
        std::vector<F2Vec> ker;
        for (int i = 0; i < 5; ++i) {
            F2Vec v(n);
            for (std::size_t j = 0; j < n; ++j)
                v.set(j, rng() & 1);
            ker.push_back(v);
        }
        auto kech = echelon_basis(ker);
        std::vector<F2Vec> im;
        for (int i = 0; i < 3 && i < static_cast<int>(kech.size()); ++i)
            im.push_back(kech[i]);
        auto q1 = subquotient(kech, im);
        // Re-span the image with random combinations.
        std::vector<F2Vec> im2;
        for (int i = 0; i < 6; ++i) {
            F2Vec v(n);
            for (const auto& b : im)
                if (rng() & 1) v.add(b);
            im2.push_back(v);
        }
        im2.insert(im2.end(), im.begin(), im.end());
        auto q2 = subquotient(kech, im2);
        CHECK(q1.dim == q2.dim);
    }
}

TEST_CASE("representatives complete the image to a kernel basis")
{
    std::mt19937_64 rng(13);
    std::size_t n = 12;
    std::vector<F2Vec> ker;
    for (int i = 0; i < 7; ++i) {
        F2Vec v(n);
        for (std::size_t j = 0; j < n; ++j)
            v.set(j, rng() & 1);
        ker.push_back(v);
    }
    auto kech = echelon_basis(ker);
    std::vector<F2Vec> im = {kech[0], kech[1]};
    auto q = subquotient(kech, im);
    auto all = im;
    all.insert(all.end(), q.representatives.begin(), q.representatives.end());
    CHECK(echelon_basis(all).size() == kech.size());
}

TEST_CASE("compiled xor kernels agree")
{
    std::size_t count = 0;
    const KernelEntry* ks = compiled_kernels(&count);
    REQUIRE(count >= 1);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 33;
        std::vector<Word> src(n), base(n);
        for (auto& w : src)
            w = rng();
        for (auto& w : base)
            w = rng();
        std::vector<Word> expect = base;
        xor_rows_scalar(expect.data(), src.data(), n);
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<Word> got = base;
            ks[k].fn(got.data(), src.data(), n);
            CHECK(got == expect);
        }
    }
    CHECK(active_kernel_name() != nullptr);
}
