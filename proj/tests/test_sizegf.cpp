#include "robdd/errors.hpp"
#include "robdd/sizegf.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace robdd;

namespace {

PhiTable table_for(std::size_t n) { return PhiTable(n, CombinTables(n + 1)); }

UPoly streamed(unsigned k, std::size_t n, unsigned threads = 1) {
    return distribution(k, n, EngineOptions{.threads = threads});
}

const UPoly kF1(1, {2, 2});
const UPoly kF2(3, {2, 4, 8, 2});
const UPoly kF3(5, {2, 6, 24, 62, 88, 74});
const UPoly kF4(9, {2, 8, 48, 236, 960, 3248, 8928, 17666, 23280, 11160});

}  // namespace

TEST_SUITE("sizegf") {

TEST_CASE("max_size sequence") {
    const std::uint64_t expected[] = {1, 3, 5, 9, 17, 29, 45, 77, 141, 269, 509, 765, 1277};
    for (int k = 1; k <= 13; ++k) CHECK(max_size(k) == expected[k - 1]);
    CHECK_THROWS_AS(max_size(0), input_error);
    CHECK_THROWS_AS(max_size(-3), input_error);
}

TEST_CASE("varphi basis") {
    const PhiTable t = table_for(4);
    const VarphiBasis basis(t, 4);
    REQUIRE(basis.size() == 6);
    CHECK(basis.entry(0).x_degree() == 0);
    CHECK(basis.entry(0).coefficient(0) == UPoly(4, {1}));
    CHECK(basis.entry(1).coefficient(1) == UPoly(4, {1, -1}));
    CHECK(basis.entry(1).coefficient(2) == UPoly(4, {0, 1}));
    for (std::size_t m = 0; m <= 5; ++m) {
        const BiPoly& e = basis.entry(m);
        CHECK(e.x_degree() <= static_cast<long>(2 * m));
        CHECK(e.u_degree() <= static_cast<long>(std::min<std::size_t>(m, 4)));
        // u^0 part is the identity term X^m
        for (std::size_t j = 0; j <= 2 * m; ++j) CHECK(e.coefficient(j)[0] == (j == m ? 1 : 0));
    }
}

TEST_CASE("next_level on the three-variable worked example") {
    // cap 4 keeps entry 2 through u^3
    const std::size_t n = 4;
    const PhiTable t = table_for(n);
    const VarphiBasis basis(t, n);
    const MemoLevel l0 = base_level(n, n + 1);
    for (std::size_t m = 0; m <= n + 1; ++m) CHECK(l0.polys[m] == UPoly(entry_precision(n, m), {1l << m}));
    const MemoLevel l1 = next_level(l0, basis);
    CHECK(l1.level == 1);
    CHECK(l1.polys[1] == UPoly(n, {2, 2}));
    const MemoLevel l2 = next_level(l1, basis);
    CHECK(l2.polys[0] == UPoly(n, {1}));
    CHECK(l2.polys[1] == UPoly(n, {2, 4, 8, 2}));
    CHECK(l2.polys[2] == UPoly(3, {4, 20, 68, 90}));

    // with n = 3 entry 2 only carries u^0..u^2
    const PhiTable t3 = table_for(3);
    const VarphiBasis b3(t3, 3);
    const MemoLevel m2 = next_level(next_level(base_level(3, 4), b3), b3);
    CHECK(m2.polys[1] == UPoly(3, {2, 4, 8, 2}));
    CHECK(m2.polys[2] == UPoly(2, {4, 20, 68}));
}

TEST_CASE("next_level needs enough entries below") {
    const PhiTable t = table_for(4);
    const VarphiBasis basis(t, 4);
    CHECK_THROWS_AS(next_level(base_level(4, 2), basis, 2), contract_violation);
    CHECK_NOTHROW(next_level(base_level(4, 4), basis, 2));
}

TEST_CASE("golden distributions") {
    CHECK(streamed(0, 0) == UPoly(0, {2}));
    CHECK(streamed(1, 1) == kF1);
    CHECK(streamed(2, 3) == kF2);
    CHECK(streamed(3, 5) == kF3);
    CHECK(streamed(4, 9) == kF4);
    CHECK(streamed(3, 3) == UPoly(3, {2, 6, 24, 62}));
    const PhiTable t = table_for(9);
    CHECK(distribution(3, 5, t) == kF3);
    CHECK(distribution(4, 9, t) == kF4);
    CHECK(distribution(3, 3, t) == UPoly(3, {2, 6, 24, 62}));
}

TEST_CASE("stored-table and streamed routes agree") {
    const PhiTable t = table_for(40);
    for (unsigned k = 0; k <= 7; ++k)
        for (std::size_t n : {0, 1, 5, 17, 40}) CHECK(distribution(k, n, t) == streamed(k, n));
}

TEST_CASE("mass conservation") {
    for (unsigned k = 1; k <= 8; ++k) {
        const UPoly f = streamed(k, max_size(k));
        CHECK(f.sum() == test::pow2(1ul << k));
        CHECK(f.degree() == static_cast<long>(max_size(k)));
    }
}

TEST_CASE("truncation prefix property") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned k = 1 + trial % 6;
        const std::size_t top = max_size(k) + 3;
        std::uniform_int_distribution<std::size_t> pick(0, top);
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) b = a + 1;
        const std::size_t n1 = std::min(a, b), n2 = std::max(a, b);
        const UPoly lo = streamed(k, n1), hi = streamed(k, n2);
        CHECK(hi.with_cap(n1) == lo);
    }
}

TEST_CASE("nothing beyond the maximal size") {
    for (unsigned k = 1; k <= 7; ++k) {
        const std::size_t mk = max_size(k);
        const UPoly f = streamed(k, mk + 5);
        CHECK(sgn(f[mk]) > 0);
        CHECK(f.degree() == static_cast<long>(mk));
    }
}

TEST_CASE("constants and literals") {
    for (unsigned k = 1; k <= 9; ++k) {
        const UPoly f = streamed(k, 1);
        CHECK(f[0] == 2);
        CHECK(f[1] == 2 * k);
    }
}

TEST_CASE("thread count does not change results") {
    for (unsigned k : {5u, 7u}) {
        const std::size_t n = max_size(k);
        const UPoly one = streamed(k, n, 1);
        CHECK(streamed(k, n, 2) == one);
        CHECK(streamed(k, n, 5) == one);
        const PhiTable t = table_for(n);
        CHECK(distribution(k, n, t, 3) == one);
    }
}

TEST_CASE("resume from an intermediate level") {
    const unsigned k = 6;
    const std::size_t n = max_size(k);
    std::vector<MemoLevel> seen;
    EngineOptions record{.threads = 1, .resume_from = std::nullopt,
                         .on_level = [&](const MemoLevel& l) { seen.push_back(l); }};
    const UPoly full = distribution(k, n, record);
    REQUIRE(seen.size() == k);
    for (std::size_t l = 0; l < k; ++l) {
        CHECK(seen[l].level == l + 1);
        CHECK(seen[l].polys.size() == level_width(k, n, static_cast<unsigned>(l + 1)) + 1);
    }
    EngineOptions resume{.threads = 1, .resume_from = seen[2], .on_level = {}};
    CHECK(distribution(k, n, resume) == full);

    EngineOptions wrong{.threads = 1, .resume_from = seen[2], .on_level = {}};
    CHECK_THROWS_AS(distribution(k, n + 1, wrong), contract_violation);
}

TEST_CASE("level widths") {
    CHECK(level_width(11, 509, 0) == 510);
    CHECK(level_width(11, 509, 2) == 510);
    CHECK(level_width(11, 509, 3) == 256);
    CHECK(level_width(11, 509, 11) == 1);
    CHECK(level_width(0, 0, 0) == 1);
    CHECK(level_width(3, 0, 0) == 1);
}

}  // TEST_SUITE
