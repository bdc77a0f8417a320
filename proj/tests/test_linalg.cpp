#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zariski/errors.hpp"
#include "zariski/linalg.hpp"

using namespace zariski;
using namespace zariski::linalg;
using testutil::ones_bordered_negative_identity;

TEST_CASE("Rat canonical form and parsing") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(6, 4).num() == 3);
    CHECK(Rat(6, 4).den() == 2);
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(3, -6).den() == 2);  // denominator stays positive
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(-5, 1).str() == "-5");
    CHECK(Rat(7, 3).str() == "7/3");
    CHECK(Rat::parse("7/3") == Rat(7, 3));
    CHECK(Rat::parse("-12") == Rat(-12));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK(Rat(5, 3).floor() == 1);
    CHECK(Rat(-5, 3).floor() == -2);
    CHECK(Rat(4, 2).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), InvalidParameter);
    CHECK_THROWS_AS(Rat::parse("x"), ParseError);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), InvalidParameter);
}

TEST_CASE("det on pinned inputs") {
    CHECK(det(IntMatrix{{-1}}) == -1);
    CHECK(det(IntMatrix::identity(3)) == 1);
    // ones-bordered family member with r=6, k=2
    CHECK(abs(det(ones_bordered_negative_identity(6, 2))) == 3);
    CHECK(det(IntMatrix{{2, 1}, {1, -2}}) == -5);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);  // zero pivot forces a row swap
    CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(det(IntMatrix{{0, 0}, {0, 1}}) == 0);
}

TEST_CASE("det of the ones-bordered family is r-1-k in absolute value") {
    for (long r = 2; r <= 20; ++r)
        for (std::size_t k = 0; k + 1 <= static_cast<std::size_t>(r) - 1; ++k)
            CHECK(abs(det(ones_bordered_negative_identity(r, k))) == r - 1 - static_cast<long>(k));
}

TEST_CASE("adjugate on pinned inputs") {
    CHECK(adjugate(IntMatrix{{2, 0}, {0, 3}}) == IntMatrix{{3, 0}, {0, 2}});
    CHECK(adjugate(IntMatrix{{-1}}) == IntMatrix{{1}});
}

TEST_CASE("adjugate identity M * adj(M) == det(M) * I on random matrices") {
    testutil::Rng rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto m = testutil::random_symmetric(n, -9, 9, rng);
        const Int dm = det(m);
        const auto prod = m.mul(adjugate(m));
        IntMatrix expect(n);
        for (std::size_t i = 0; i < n; ++i) expect.at(i, i) = dm;
        CHECK(prod == expect);
    }
}

TEST_CASE("solve on pinned inputs") {
    CHECK(solve(IntMatrix{{-1}}, {-3}) == RatVector{Rat(3)});
    CHECK(solve(IntMatrix{{-4}}, {-3}) == RatVector{Rat(3, 4)});

    // Support system of H + L1 + L2 on the two-line surface with k1=4, k2=5:
    // S = [[-3,1],[1,-4]], b = (-1,-2). Cross-checked against the closed-form
    // 2x2 solver; both entries carry the denominator 11.
    const auto got = solve(IntMatrix{{-3, 1}, {1, -4}}, {-1, -2});
    const auto oracle = testutil::solve2x2(-3, 1, 1, -4, -1, -2);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == oracle[0]);
    CHECK(got[1] == oracle[1]);
    CHECK(got[0] == Rat(6, 11));
    CHECK(got[1] == Rat(7, 11));
    CHECK(got[0].den() == 11);
    CHECK(got[1].den() == 11);
}

TEST_CASE("solve rejects bad inputs") {
    CHECK_THROWS_AS(solve(IntMatrix{{1, 2}, {2, 4}}, {1, 1}), SingularMatrix);
    CHECK_THROWS_AS(solve(IntMatrix{{0, 1}, {1, 0}}, {1}), DimensionMismatch);
    CHECK(solve(IntMatrix{{0, 1}, {1, 0}}, {5, 7}) == RatVector{Rat(7), Rat(5)});
}

TEST_CASE("solve: residual is zero and denominators divide det on random systems") {
    testutil::Rng rng(7);
    std::uniform_int_distribution<long> dist(-9, 9);
    int solved = 0;
    while (solved < 60) {
        const std::size_t n = 1 + static_cast<std::size_t>(dist(rng) + 9) % 6;
        const auto s = testutil::random_symmetric(n, -9, 9, rng);
        const Int ds = det(s);
        if (ds == 0) continue;
        IntVector b(n);
        for (auto& v : b) v = dist(rng);
        const auto a = solve(s, b);
        for (std::size_t i = 0; i < n; ++i) {
            Rat residual(-b[i]);
            for (std::size_t j = 0; j < n; ++j) residual += Rat(s.at(i, j)) * a[j];
            CHECK(residual.is_zero());
            CHECK((a[i] * Rat(ds)).is_integer());  // Cramer
        }
        ++solved;
    }
}

TEST_CASE("is_negative_definite on pinned inputs") {
    for (std::size_t n = 1; n <= 6; ++n) {
        IntVector d(n, Int(-1));
        CHECK(is_negative_definite(IntMatrix::diagonal(d)));
    }
    CHECK_FALSE(is_negative_definite(IntMatrix{{0, 1}, {1, -4}}));
    // bordered family: definite exactly up to k = r-2
    for (long r = 3; r <= 9; ++r) {
        CHECK(is_negative_definite(ones_bordered_negative_identity(r, static_cast<std::size_t>(r) - 2)));
        CHECK_FALSE(
            is_negative_definite(ones_bordered_negative_identity(r, static_cast<std::size_t>(r) - 1)));
    }
    CHECK_THROWS_AS(is_negative_definite(IntMatrix{{1, 2}, {0, 1}}), NotSymmetric);
}

TEST_CASE("signature on pinned inputs") {
    CHECK(signature(IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}) == Inertia{1, 2, 0});
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
    CHECK(signature(IntMatrix{{0, 1}, {1, -4}}) == Inertia{1, 1, 0});
    CHECK(signature(IntMatrix{{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
    CHECK(signature(IntMatrix{{1, 2}, {2, 4}}) == Inertia{1, 0, 1});
    CHECK_THROWS_AS(signature(IntMatrix{{1, 2}, {0, 1}}), NotSymmetric);
}

TEST_CASE("is_negative_definite agrees with signature == (0, n, 0)") {
    testutil::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto s = testutil::random_symmetric(n, -6, 6, rng);
        const bool nd = is_negative_definite(s);
        const auto inertia = signature(s);
        CHECK(nd == (inertia == Inertia{0, n, 0}));
    }
}

TEST_CASE("leading principal minors match determinants of leading blocks") {
    testutil::Rng rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto m = testutil::random_symmetric(n, -5, 5, rng);
        const auto minors = leading_principal_minors(m);
        REQUIRE(!minors.empty());
        for (std::size_t j = 0; j < minors.size(); ++j) {
            std::vector<std::size_t> idx(j + 1);
            for (std::size_t t = 0; t <= j; ++t) idx[t] = t;
            CHECK(minors[j] == det(m.principal_submatrix(idx)));
        }
        // the sweep only stops early at a zero minor
        if (minors.size() < n) CHECK(minors.back() == 0);
    }
}
