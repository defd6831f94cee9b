#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dyer_lashof.hpp"

using namespace su::dyer_lashof;

namespace {

// Composition-enumeration oracle for the action coefficient: sum over all
// ways to write r as an ordered sum of n nonnegative parts of the product of
// structure constants.
int oracle_act(const EpsilonStructure& eps, int r, int n)
{
    if (n == 1) return eps.at(r);
    int acc = 0;
    for (int a = 0; a <= r; ++a)
        acc ^= eps.at(a) & oracle_act(eps, r - a, n - 1);
    return acc;
}

}  // namespace

TEST_CASE("allowability and reduction")
{
    CHECK(allowable({1, 2}));
    CHECK(dl_adem_reduce({1, 2}) == DLElement{{1, 2}});

    for (int r : {1, 2, 5, 9})
        CHECK(dl_adem_reduce({2 * r, r}) == DLElement{{2 * r, r}});

    // Q^5 Q^2 rewrites with every binomial coefficient even.
    CHECK(dl_adem_reduce({5, 2}).empty());

    for (int i = 0; i <= 12; ++i)
        for (int j = 0; j <= 12; ++j) {
            auto e = dl_adem_reduce({i, j});
            for (const auto& m : e) {
                CHECK(allowable(m));
                CHECK(dl_degree(m) == i + j);
                CHECK(dl_adem_reduce(m) == DLElement{m});
            }
        }
}

TEST_CASE("action on powers of u")
{
    const int R = 64;
    auto segal = EpsilonStructure::preset("segal", R);
    auto bllmm = EpsilonStructure::preset("bllmm", R);
    auto thh = EpsilonStructure::preset("thh", R);
    auto odd = EpsilonStructure::preset("odd", R);

    for (int n = 1; n <= 12; ++n)
        for (int r = 0; r <= 2 * n + 4; ++r)
            CHECK(act_on_power(segal, r, n) == (r == n ? 1 : 0));

    CHECK(act_on_power(bllmm, 2, 1) == 1);  // Q^4 u = u^3
    for (int n = 1; n <= 8; ++n)
        CHECK(act_on_power(bllmm, 0, n) == 0);

    // The closed-form rule against plain composition enumeration.
    for (const auto& eps : {segal, bllmm, thh, odd})
        for (int n = 1; n <= 6; ++n)
            for (int r = 0; r <= 20; ++r)
                CHECK(act_on_power(eps, r, n) == oracle_act(eps, r, n));
}

TEST_CASE("cartan bilinearity")
{
    const int R = 64;
    for (const auto& name : {"segal", "bllmm", "thh", "odd"}) {
        auto eps = EpsilonStructure::preset(name, R);
        for (int a = 1; a <= 10; ++a)
            for (int b = 1; b <= 10; ++b)
                for (int r = 0; r <= 40; ++r) {
                    int lhs = act_on_power(eps, r, a + b);
                    int rhs = 0;
                    for (int s = 0; s <= r; ++s)
                        rhs ^= act_on_power(eps, s, a) & act_on_power(eps, r - s, b);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("iterated words")
{
    auto segal = EpsilonStructure::preset("segal", 64);
    auto thh = EpsilonStructure::preset("thh", 64);

    // Two squarings in a row: Q^4 Q^2 u = Q^4 u^2 = u^4 (unhalved indices).
    CHECK(act_word(segal, {4, 2}, 1) == 4);
    CHECK_FALSE(act_word(segal, {4, 4}, 1).has_value());  // Q^4 u already dies
    CHECK(act_word(segal, {}, 7) == 7);
    CHECK_FALSE(act_word(thh, {4}, 1).has_value());       // Q^4 u = 0 for the thh structure
    CHECK_FALSE(act_word(thh, {8, 4}, 1).has_value());
    CHECK_FALSE(act_word(segal, {3, 2}, 1).has_value());  // odd operations vanish
}

TEST_CASE("kahler action")
{
    auto segal = EpsilonStructure::preset("segal", 8);
    auto bllmm = EpsilonStructure::preset("bllmm", 8);
    CHECK(kahler_action(segal, 1) == 0);   // eps_1 (1+1) = 0 mod 2
    CHECK(kahler_action(bllmm, 2) == 1);   // eps_2 (2+1) = 1
    CHECK(kahler_action(bllmm, 0) == 0);
    // Only the all-ones structure supports nonzero values: elsewhere eps
    // vanishes on odd r and (r+1) is even on even r.
    auto thh = EpsilonStructure::preset("thh", 32);
    auto odd = EpsilonStructure::preset("odd", 32);
    auto segal32 = EpsilonStructure::preset("segal", 32);
    for (int r = 1; r <= 32; ++r) {
        CHECK(kahler_action(thh, r) == ((r % 2 == 0) && thh.at(r) ? 1 : 0));
        CHECK(kahler_action(odd, r) == 0);
        CHECK(kahler_action(segal32, r) == 0);
    }
}

TEST_CASE("cutoff is enforced")
{
    auto eps = EpsilonStructure::preset("segal", 8);
    CHECK_THROWS_AS(eps.at(9), PastCutoff);
    CHECK_THROWS_AS(act_on_power(eps, 9, 1), PastCutoff);
}

TEST_CASE("bitstring io")
{
    auto eps = EpsilonStructure::parse("eps=0110");
    CHECK(eps.at(2) == 1);
    CHECK(eps.bitstring() == "eps=0110");
    CHECK_THROWS(EpsilonStructure::parse("eps=10"));  // eps_0 must vanish
}

TEST_CASE("adem consistency of the action")
{
    // For every valid structure and inadmissible pair, acting by the word
    // agrees with acting by its allowable normal form.
    const int R = 64;
    for (const auto& name : {"segal", "bllmm", "thh", "odd"}) {
        auto eps = EpsilonStructure::preset(name, R);
        for (int b = 0; b <= 10; ++b)
            for (int a = 2 * b + 1; a <= 24; ++a) {
                if ((a % 2) || (b % 2)) continue;  // odd entries act by zero on our powers
                auto direct = act_word(eps, {a, b}, 1);
                int direct_c = direct.has_value() ? 1 : 0;
                int reduced_c = 0;
                for (const auto& m : dl_adem_reduce({a, b}))
                    if (act_word(eps, m, 1).has_value()) reduced_c ^= 1;
                CHECK(direct_c == reduced_c);
            }
    }
}
