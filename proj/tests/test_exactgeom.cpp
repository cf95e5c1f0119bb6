#include "olines/configgen.hpp"
#include "olines/exactgeom.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace olines;

namespace {

using GConfig = BasicPointConfig<GaussianRational>;

GConfig rational_config(std::size_t dim, const std::vector<std::vector<long>>& pts) {
    std::vector<Point<GaussianRational>> out;
    for (const auto& p : pts) {
        Point<GaussianRational> q;
        for (long c : p) q.emplace_back(c);
        out.push_back(q);
    }
    return GConfig(dim, out);
}

// Lines by closure over the triple relation, with collinearity decided by the
// rank of the lifted 3-row submatrix.
template <class F>
std::set<std::vector<std::size_t>> oracle_lines(const BasicPointConfig<F>& c) {
    const std::size_t n = c.size();
    const Matrix<F> v = lift(c);
    auto triple = [&](std::size_t a, std::size_t b, std::size_t s) {
        Matrix<F> m(3, v.cols());
        const std::size_t idx[3] = {a, b, s};
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t j = 0; j < v.cols(); ++j) m(r, j) = v(idx[r], j);
        return rank(m) <= 2;
    };
    std::set<std::vector<std::size_t>> lines;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<std::size_t> l;
            for (std::size_t s = 0; s < n; ++s) {
                if (s == a || s == b || triple(a, b, s)) l.push_back(s);
            }
            lines.insert(l);
        }
    }
    return lines;
}

template <class F>
void expect_matches_oracle(const BasicPointConfig<F>& c) {
    const auto s = enumerate_lines(c);
    std::set<std::vector<std::size_t>> got;
    for (const auto& l : s.lines) got.insert(l.points);
    EXPECT_EQ(got, oracle_lines(c));
    EXPECT_EQ(pair_count(s), c.size() * (c.size() - 1) / 2);
}

}  // namespace

TEST(Lift, AppendsOne) {
    GConfig c(3, {{GaussianRational(Rational(1, 2)), GaussianRational(-3), GaussianRational(Rational(0), Rational(2))}});
    const auto v = lift(c);
    ASSERT_EQ(v.cols(), 4u);
    EXPECT_EQ(v(0, 0), GaussianRational(Rational(1, 2)));
    EXPECT_EQ(v(0, 2), GaussianRational(Rational(0), Rational(2)));
    EXPECT_EQ(v(0, 3), GaussianRational(1));
    const auto z = lift(rational_config(3, {{0, 0, 0}}));
    EXPECT_EQ(z(0, 3), GaussianRational(1));
    EXPECT_EQ(z(0, 0), GaussianRational(0));
}

TEST(Lift, HesseRankThree) {
    EXPECT_EQ(rank(lift(fermat(3))), 3u);
}

TEST(PointConfig, Validation) {
    EXPECT_THROW(rational_config(2, {{0, 0}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(rational_config(2, {{0, 0}, {1}}), std::invalid_argument);
    EXPECT_THROW(GConfig(2, {}), std::invalid_argument);
    const auto c = rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(c.without(1).size(), 2u);
    EXPECT_EQ(c.without(1)[1], c[2]);
}

TEST(Collinear, Basics) {
    const auto diag = rational_config(2, {{0, 0}, {1, 1}, {2, 2}});
    EXPECT_TRUE(collinear(0, 1, 2, diag));
    const auto tri = rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
    EXPECT_FALSE(collinear(0, 1, 2, tri));
    EXPECT_THROW(collinear(0, 0, 2, tri), std::invalid_argument);
}

TEST(Collinear, HesseFamilyLines) {
    // a_i, b_j, c_l are collinear exactly when the root exponents match up;
    // every line of the Hesse configuration has three points.
    const auto h = fermat(3);
    const auto s = enumerate_lines(h);
    std::size_t cross = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 3; b < 6; ++b)
            for (std::size_t c = 6; c < 9; ++c) cross += collinear(a, b, c, h);
    EXPECT_EQ(cross, 9u);
    EXPECT_TRUE(collinear(0, 1, 2, h));
}

TEST(EnumerateLines, SmallCases) {
    const auto tri = rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(enumerate_lines(tri).t(2), 3u);
    EXPECT_EQ(ordinary_count_through(tri, 0), 2u);
    const auto h = enumerate_lines(fermat(3));
    EXPECT_EQ(h.t(2), 0u);
    EXPECT_EQ(h.t(3), 12u);
    const auto f4 = enumerate_lines(fermat(4));
    EXPECT_EQ(f4.t(4), 3u);
    EXPECT_EQ(f4.t(3), 16u);
    EXPECT_EQ(f4.t(2), 0u);
}

TEST(EnumerateLines, MatchesOracle) {
    expect_matches_oracle(fermat(3));
    expect_matches_oracle(fermat(4));
    expect_matches_oracle(fermat_with_apex(3));
    expect_matches_oracle(coplanar_plus(9, 2, 3));
    expect_matches_oracle(rational_config(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 2}, {0, 2}, {3, 3}}));
}

TEST(EnumerateLines, DeterministicAcrossThreads) {
    for (const auto& c : {fermat(5), fermat_with_apex(4), coplanar_plus(20, 4, 9), random_generic(15, 2, 1)}) {
        const auto one = enumerate_lines(c, 1);
        EXPECT_EQ(one, enumerate_lines(c, 1));
        EXPECT_EQ(one, enumerate_lines(c, 2));
        EXPECT_EQ(one, enumerate_lines(c, 4));
    }
}

TEST(EnumerateLines, Maximality) {
    for (const auto& c : {fermat(4), fermat_with_apex(3), coplanar_plus(12, 3, 5)}) {
        const auto s = enumerate_lines(c);
        for (const auto& l : s.lines) {
            for (std::size_t p = 0; p < c.size(); ++p) {
                if (!l.contains(p)) EXPECT_FALSE(collinear(l.points[0], l.points[1], p, c));
            }
        }
    }
}

TEST(OrdinaryCount, ApexAndHesse) {
    const auto a = fermat_with_apex(3);
    EXPECT_EQ(ordinary_count_through(a, 9), 9u);
    const auto h = fermat(3);
    for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(ordinary_count_through(h, i), 0u);
}

TEST(AffineDim, Examples) {
    EXPECT_EQ(affine_dim(rational_config(2, {{5, 7}})), 0u);
    EXPECT_EQ(affine_dim(fermat(3)), 2u);
    EXPECT_EQ(affine_dim(fermat_with_apex(3)), 3u);
    EXPECT_EQ(affine_dim_of(fermat_with_apex(3), {0, 1, 2}), 1u);
}

TEST(RemovePoint, MatchesReenumeration) {
    for (const auto& c : {fermat(4), fermat_with_apex(3), coplanar_plus(13, 3, 2), random_generic(10, 3, 4)}) {
        const auto s = enumerate_lines(c);
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(remove_point(s, i), enumerate_lines(c.without(i)));
    }
}
