#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dl_classify.hpp"

using namespace su::dl_classify;
using su::dyer_lashof::EpsilonStructure;

TEST_CASE("binomial parity against a Pascal triangle")
{
    std::vector<std::vector<int>> pascal(80, std::vector<int>(80, 0));
    for (int a = 0; a < 80; ++a) {
        pascal[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            pascal[a][b] = (pascal[a - 1][b - 1] + (b <= a - 1 ? pascal[a - 1][b] : 0)) % 2;
    }
    for (int a = 0; a < 80; ++a)
        for (int b = 0; b < 80; ++b)
            CHECK(binom_parity(a, b) == (b <= a ? pascal[a][b] : 0));

    for (int a = 0; a <= 100; ++a)
        for (int b = 0; 2 * b + 1 <= 2 * a; ++b)
            CHECK(binom_parity(2 * a, 2 * b + 1) == 0);
    for (int n = 0; n <= 200; ++n)
        CHECK(binom_parity(n, 0) == 1);
    for (int q = 0; q <= 200; ++q)
        CHECK(binom_parity(3 * q + 2, 2 * q + 1) == 0);
}

TEST_CASE("the a/b identity and recurrences")
{
    CHECK(a_nq(0, 1) == 1);
    CHECK(b_nq(0, 1) == 1);
    for (int n = 0; n <= 40; ++n)
        for (int q = 1; q <= 40; ++q)
            CHECK(check_identity_anq(n, q));
    for (int n = 3; n <= 40; ++n)
        for (int q = 1; q <= 40; ++q) {
            CHECK(b_nq(n, q) == (b_nq(n - 1, q + 1) ^ b_nq(n - 3, q + 1)));
            CHECK(a_nq(n, q) == (a_nq(n - 1, q + 1) ^ a_nq(n - 3, q + 1)));
        }
}

TEST_CASE("classification survivors")
{
    std::vector<std::string> expect = {"bllmm", "segal", "thh", "odd"};
    for (int R : {8, 16, 32, 64}) {
        auto rep = enumerate_structures(R);
        REQUIRE(rep.survivors.size() == 4);
        std::vector<std::string> got;
        for (const auto& s : rep.survivors)
            got.push_back(s.name);
        std::sort(got.begin(), got.end());
        auto want = expect;
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(rep.eliminated.empty());
        CHECK(rep.instances_checked > 0);
    }
}

TEST_CASE("single bit flips are eliminated")
{
    const int R = 32;
    for (const auto& name : {"segal", "bllmm", "thh", "odd"}) {
        auto base = EpsilonStructure::preset(name, R);
        for (int flip = 2; flip + 2 <= R / 2; ++flip) {
            std::vector<std::uint8_t> bits;
            for (int r = 0; r <= R; ++r)
                bits.push_back(static_cast<std::uint8_t>(r == flip ? 1 - base.at(r) : base.at(r)));
            EpsilonStructure cand(bits);
            bool violated = !structural_constraints(cand).empty();
            for (int s = 1; !violated && s <= R; ++s)
                for (int r = 2 * s + 1; !violated && r + s <= R; ++r)
                    if (adem_instance_holds(cand, r, s) == 0) violated = true;
            CHECK(violated);
        }
    }
}

TEST_CASE("structural constraints")
{
    CHECK(structural_constraints(EpsilonStructure::preset("thh", 64)).empty());
    CHECK(structural_constraints(EpsilonStructure::preset("odd", 64)).empty());
    CHECK(structural_constraints(EpsilonStructure::preset("bllmm", 64)).empty());

    // eps_2 = 0 with eps_4 = 1 violates even-vanishing.
    std::vector<std::uint8_t> bits = {0, 1, 0, 0, 1, 0, 0, 0, 0};
    CHECK_FALSE(structural_constraints(EpsilonStructure(bits)).empty());

    // eps_2 = 0, eps_3 = 1, eps_5 != eps_11 violates the doubling relation.
    std::vector<std::uint8_t> bits2(13, 0);
    bits2[1] = 1;
    bits2[3] = 1;
    bits2[5] = 1;
    bits2[7] = 1;
    bits2[9] = 1;
    bits2[11] = 0;  // should equal eps_3 * eps_5 = 1
    CHECK_FALSE(structural_constraints(EpsilonStructure(bits2)).empty());

    // A candidate with eps_2 = 1 and a later zero is caught by the Adem sweep.
    std::vector<std::uint8_t> bits3;
    for (int r = 0; r <= 32; ++r)
        bits3.push_back(r >= 1 && r != 6);
    EpsilonStructure cand(bits3);
    bool violated = false;
    for (int s = 1; s <= 32 && !violated; ++s)
        for (int r = 2 * s + 1; r + s <= 32 && !violated; ++r)
            if (adem_instance_holds(cand, r, s) == 0) violated = true;
    CHECK(violated);
}

TEST_CASE("thh pattern matches the dual-formula specialization")
{
    // eps_r = 1 exactly when r+1 is a power of two, on the stored range.
    auto thh = EpsilonStructure::preset("thh", 64);
    for (int r = 1; r <= 64; ++r) {
        int x = r + 1;
        bool pow2 = (x & (x - 1)) == 0;
        CHECK(thh.at(r) == (pow2 ? 1 : 0));
    }
}
