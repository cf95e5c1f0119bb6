#include "olines/latin.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace olines;

TEST(DiagonalSquare, OrderThreeIsLexicographicallyFirst) {
    const auto l = diagonal_square(3);
    EXPECT_EQ(l, LatinSquare(3, {1, 3, 2, 3, 2, 1, 2, 1, 3}));
    EXPECT_THROW(diagonal_square(2), std::invalid_argument);
}

TEST(DiagonalSquare, OrderSixIsTheExplicitMatrix) {
    const auto l = diagonal_square(6);
    EXPECT_EQ(l, explicit_square_6());
    EXPECT_EQ(l(1, 2), 4);
    EXPECT_EQ(l(6, 4), 1);
    EXPECT_TRUE(is_latin(l));
    EXPECT_TRUE(is_diagonal(l));
    EXPECT_TRUE(is_skew(l));
}

TEST(DiagonalSquare, FirstRowIsPermutation) {
    for (int r = 3; r <= 12; ++r) {
        const auto l = diagonal_square(r);
        std::vector<int> row;
        for (int j = 1; j <= r; ++j) row.push_back(l(1, j));
        std::sort(row.begin(), row.end());
        std::vector<int> want(static_cast<std::size_t>(r));
        std::iota(want.begin(), want.end(), 1);
        EXPECT_EQ(row, want);
    }
}

TEST(SkewSquare, FormulaForFive) {
    const auto l = skew_diagonal_square(5);
    EXPECT_EQ(l(1, 1), 1);
    EXPECT_EQ(l(2, 1), 3);
    EXPECT_TRUE(is_latin(l) && is_diagonal(l) && is_skew(l));
}

TEST(SkewSquare, SearchForFour) {
    const auto l = skew_diagonal_square(4);
    EXPECT_TRUE(is_latin(l) && is_diagonal(l) && is_skew(l));
    EXPECT_EQ(l, skew_diagonal_square(4));
    EXPECT_THROW(skew_diagonal_square(3), std::invalid_argument);
}

TEST(SkewSquare, SearchIsSeedDeterministic) {
    EXPECT_EQ(search_square(10, true, 5), search_square(10, true, 5));
}

TEST(Predicates, RejectBrokenSquares) {
    EXPECT_FALSE(is_latin(LatinSquare(2, {1, 1, 2, 2})));
    EXPECT_FALSE(is_diagonal(LatinSquare(2, {2, 1, 1, 2})));
    EXPECT_FALSE(is_skew(diagonal_square(3)));
}

TEST(TripleSystem, OrderThree) {
    const auto t = triple_system(3);
    EXPECT_EQ(t.triples.size(), 6u);
    int with12 = 0;
    for (const auto& x : t.triples) {
        with12 += std::count(x.begin(), x.end(), 1) && std::count(x.begin(), x.end(), 2);
    }
    EXPECT_EQ(with12, 6);
}

TEST(TripleSystem, OrderSixDistinctThirds) {
    const auto t = triple_system(6);
    EXPECT_NE(std::find(t.triples.begin(), t.triples.end(), Triple{1, 2, 4}), t.triples.end());
    EXPECT_NE(std::find(t.triples.begin(), t.triples.end(), Triple{2, 1, 3}), t.triples.end());
}

TEST(TripleSystem, OrderTen) {
    const auto t = triple_system(10);
    EXPECT_EQ(t.triples.size(), 90u);
    EXPECT_TRUE(check_triple_system(t).ok());
}

TEST(TripleSystem, AllOrdersUpToFifty) {
    for (int r = 3; r <= 50; ++r) {
        const auto t = triple_system(r);
        const auto c = check_triple_system(t);
        EXPECT_TRUE(c.size_ok) << r;
        EXPECT_TRUE(c.distinct) << r;
        EXPECT_TRUE(c.pairs_six) << r;
        EXPECT_TRUE(c.distinct_third) << r;
        if (r >= 4) {
            const auto l = skew_diagonal_square(r);
            EXPECT_TRUE(is_latin(l) && is_diagonal(l) && is_skew(l)) << r;
        }
    }
}

TEST(TripleSystem, CheckDetectsViolations) {
    TripleSystem t = triple_system(4);
    t.triples[0][2] = t.triples[0][0];
    EXPECT_FALSE(check_triple_system(t).distinct);
    TripleSystem sym = triple_system_from(diagonal_square(3));
    sym.r = 3;
    EXPECT_TRUE(check_triple_system(sym).ok());
}

TEST(Format, Grid) {
    EXPECT_EQ(format_grid(diagonal_square(3)), "1 3 2\n3 2 1\n2 1 3\n");
}
