#include "olines/configgen.hpp"
#include "olines/depmat.hpp"
#include "olines/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace olines;

namespace {

using G = GaussianRational;

Point<G> real_point(Rational x) { return {G(x)}; }

std::vector<Point<G>> real_line(const std::vector<Rational>& xs) {
    std::vector<Point<G>> out;
    for (const auto& x : xs) out.push_back(real_point(x));
    return out;
}

// Random points on the complex line p + t u in C^2 with Gaussian t.
std::vector<Point<G>> random_complex_line(std::size_t r, std::mt19937_64& rng) {
    auto q = [&] {
        Rational x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
        x.canonicalize();
        return x;
    };
    auto rnd = [&] { return G(q(), q()); };
    const Point<G> p{rnd(), rnd()};
    Point<G> u{rnd(), rnd()};
    while (is_zero(u[0]) && is_zero(u[1])) u = {rnd(), rnd()};
    std::vector<Point<G>> out;
    while (out.size() < r) {
        const G t = rnd();
        Point<G> x{p[0] + t * u[0], p[1] + t * u[1]};
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST(DependencyCoeffs, RealLine) {
    const auto c = dependency_coeffs(real_point(0), real_point(1), real_point(Rational(1, 2)));
    EXPECT_EQ(c[0], G(Rational(-1, 2)));
    EXPECT_EQ(c[1], G(Rational(-1, 2)));
    EXPECT_EQ(c[2], G(1));
    EXPECT_THROW(dependency_coeffs(real_point(0), real_point(1), real_point(0)), std::invalid_argument);
    const Point<G> a{G(0), G(0)}, b{G(1), G(0)}, d{G(0), G(1)};
    EXPECT_THROW(dependency_coeffs(a, b, d), std::invalid_argument);
}

TEST(DependencyCoeffs, NonzeroOnRandomLines) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const auto pts = random_complex_line(3, rng);
        const auto c = dependency_coeffs(pts[0], pts[1], pts[2]);
        EXPECT_FALSE(is_zero(c[0]));
        EXPECT_FALSE(is_zero(c[1]));
    }
}

TEST(Angle, Basics) {
    EXPECT_DOUBLE_EQ(angle_between(G(1), G(1)), 0.0);
    EXPECT_DOUBLE_EQ(angle_between(G(1), G(-1)), std::numbers::pi);
    EXPECT_DOUBLE_EQ(angle_between(G(1), G::i()), std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(angle_between(G::i(), G(1)), std::numbers::pi / 2);
    EXPECT_THROW(angle_between(G(0), G(1)), std::invalid_argument);
    EXPECT_FALSE(angle_at_least_pi_over_3(G(1), G(1)));
    EXPECT_TRUE(angle_at_least_pi_over_3(G(1), G::i()));
    // exactly pi/3: 1 vs (1 + sqrt3 i)/2 needs sqrt3, so use Q(zeta_6)
    EXPECT_TRUE(angle_at_least_pi_over_3(Cyclotomic(1), Cyclotomic::zeta(6)));
    EXPECT_FALSE(angle_at_least_pi_over_3(Cyclotomic(1), Cyclotomic::zeta(12)));
}

TEST(FourPoint, RealExample) {
    const auto p = real_line({Rational(0), Rational(1), Rational(1, 2), Rational(2)});
    const auto r = four_point_angle_case(p[0], p[1], p[2], p[3]);
    int pis = 0;
    for (double a : r.angles) {
        EXPECT_TRUE(a == 0.0 || a == std::numbers::pi);
        pis += a == std::numbers::pi;
    }
    EXPECT_EQ(pis, 1);
    EXPECT_NEAR(r.angle_sum(), std::numbers::pi, 1e-12);
}

TEST(FourPoint, RandomLinesAlwaysHaveACase) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_complex_line(4, rng);
        const auto r = four_point_angle_case(p[0], p[1], p[2], p[3]);
        EXPECT_TRUE(r.at_least_pi_over_3[0] || r.at_least_pi_over_3[1] || r.at_least_pi_over_3[2]);
        EXPECT_NEAR(r.angle_sum(), std::numbers::pi, 1e-9);
        for (std::size_t c = 0; c < 3; ++c) {
            if (std::abs(r.angles[c] - std::numbers::pi / 3) > 1e-9) {
                EXPECT_EQ(r.at_least_pi_over_3[c], r.angles[c] > std::numbers::pi / 3);
            }
        }
    }
}

TEST(LineMatrix, ThreePoints) {
    const auto pts = real_line({Rational(0), Rational(1), Rational(3)});
    const auto a = line_dep_matrix(pts, 1);
    EXPECT_EQ(a.m(), 6u);
    EXPECT_EQ(a.n, 3u);
    const auto dense = a.dense();
    for (std::size_t k = 0; k < a.m(); ++k) {
        G x(0), one(0);
        for (std::size_t c = 0; c < 3; ++c) {
            x += dense(k, c) * pts[c][0];
            one += dense(k, c);
        }
        EXPECT_TRUE(is_zero(x));
        EXPECT_TRUE(is_zero(one));
    }
}

TEST(LineMatrix, FourEquallySpaced) {
    const auto pts = real_line({Rational(0), Rational(1), Rational(2), Rational(3)});
    const auto a = line_dep_matrix(pts, 7);
    EXPECT_EQ(a.m(), 12u);
    EXPECT_GE(a.witnesses.size(), 4u);
    EXPECT_TRUE(a.lines.front().property4);
    std::size_t both = 0;
    for (const auto& row : a.rows) both += row.coefficient(0) && row.coefficient(1);
    EXPECT_EQ(both, 6u);
}

TEST(LineMatrix, WitnessesAreGenuine) {
    std::mt19937_64 rng(5);
    const auto pts = random_complex_line(6, rng);
    const auto a = line_dep_matrix(pts, 11);
    for (const auto& w : a.witnesses) {
        const auto& k = a.rows[w.row];
        const auto& k2 = a.rows[w.other_row];
        ASSERT_TRUE(k.coefficient(w.p) && k.coefficient(w.q) && k2.coefficient(w.p) && k2.coefficient(w.q));
        const G c1 = *k.coefficient(w.p) * conj(*k.coefficient(w.q));
        const G c2 = *k2.coefficient(w.p) * conj(*k2.coefficient(w.q));
        EXPECT_TRUE(angle_at_least_pi_over_3(c1, c2));
        EXPECT_GE(w.angle, std::numbers::pi / 3 - 1e-12);
        EXPECT_NE(k.support, k2.support);
    }
}

TEST(LineMatrix, Property4DensityAcrossSeeds) {
    std::mt19937_64 rng(23);
    for (std::size_t r = 4; r <= 20; ++r) {
        const auto pts = random_complex_line(r, rng);
        for (std::uint64_t seed = 0; seed < 100; seed += (r > 10 ? 9 : 1)) {
            const auto a = line_dep_matrix(pts, seed);
            EXPECT_GE(3 * a.witnesses.size(), r * r - r) << "r=" << r << " seed=" << seed;
        }
    }
}

TEST(LineMatrix, Errors) {
    EXPECT_THROW(line_dep_matrix(real_line({Rational(0), Rational(1)}), 0), std::invalid_argument);
    std::vector<Point<G>> tri{{G(0), G(0)}, {G(1), G(0)}, {G(0), G(1)}};
    EXPECT_THROW(line_dep_matrix(tri, 0), std::invalid_argument);
}

TEST(FullMatrix, Hesse) {
    const auto h = fermat(3);
    const auto s = enumerate_lines(h);
    for (auto c : {Construction::v1, Construction::v2}) {
        const auto a = full_dep_matrix(h, s, c, 3);
        EXPECT_EQ(a.m(), 72u);
        EXPECT_TRUE(check_dependency_matrix(a, h, s).ok());
    }
}

TEST(FullMatrix, ApexAndTriangle) {
    const auto c = fermat_with_apex(3);
    const auto s = enumerate_lines(c);
    const auto a = full_dep_matrix(c, s, Construction::v2, 1);
    EXPECT_EQ(a.m(), 72u);
    EXPECT_TRUE(check_dependency_matrix(a, c, s).ok());
    const auto tri = random_generic(3, 2, 1);
    EXPECT_TRUE(full_dep_matrix(tri, Construction::v1).empty());
}

TEST(FullMatrix, InvariantsOnFamilies) {
    for (const auto& c : {fermat(4), fermat(5), coplanar_plus(12, 2, 4, PlanePart::generic),
                          coplanar_plus(13, 1, 0, PlanePart::fermat)}) {
        const auto s = enumerate_lines(c);
        for (auto k : {Construction::v1, Construction::v2}) {
            const auto a = full_dep_matrix(c, s, k, 9);
            const auto chk = check_dependency_matrix(a, c, s);
            EXPECT_TRUE(chk.annihilates);
            EXPECT_TRUE(chk.support_three);
            EXPECT_TRUE(chk.pair_counts);
            EXPECT_TRUE(chk.row_count) << a.m() << " vs " << chk.expected_rows;
        }
    }
}

TEST(FullMatrix, Deterministic) {
    const auto c = fermat(4);
    const auto a = full_dep_matrix(c, Construction::v2, 5);
    const auto b = full_dep_matrix(c, Construction::v2, 5);
    EXPECT_EQ(a.rows, b.rows);
}

TEST(Dump, RoundTrip) {
    for (const auto& c : {fermat(3), fermat(4)}) {
        const auto a = full_dep_matrix(c, Construction::v1);
        const std::string text = dump_dependency_matrix(a);
        const auto b = parse_dependency_dump(text);
        EXPECT_EQ(b.n, a.n);
        EXPECT_EQ(b.rows.size(), a.rows.size());
        for (std::size_t k = 0; k < a.rows.size(); ++k) {
            EXPECT_EQ(b.rows[k].support, a.rows[k].support);
            EXPECT_EQ(b.rows[k].coeffs, a.rows[k].coeffs);
        }
        EXPECT_EQ(dump_dependency_matrix(b), text);
    }
    EXPECT_THROW(parse_dependency_dump("2 3\n0 1 2  1  1  1\n"), ParseError);
}
