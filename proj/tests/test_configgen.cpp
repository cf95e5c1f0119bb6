#include "olines/configgen.hpp"
#include "olines/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace olines;

namespace {

std::filesystem::path fixture(const std::string& name) {
    if (const char* env = std::getenv("OLINES_FIXTURES")) return std::filesystem::path(env) / name;
    return std::filesystem::path(OLINES_FIXTURE_DIR) / name;
}

Cyclotomic line_value(const AffineChart& c, const ProjectivePoint& p) {
    return Cyclotomic(c.rows[2][0]) * p[0] + Cyclotomic(c.rows[2][1]) * p[1] + Cyclotomic(c.rows[2][2]) * p[2];
}

}  // namespace

TEST(Fermat, OddKPointsLieOnCurve) {
    for (int k = 3; k <= 9; k += 2) {
        for (const auto& p : fermat_projective(k)) {
            Cyclotomic s(0);
            for (const auto& x : p) {
                Cyclotomic y(1);
                for (int e = 0; e < k; ++e) y *= x;
                s += y;
            }
            EXPECT_TRUE(is_zero(s)) << k;
        }
    }
}

TEST(Fermat, Profiles) {
    EXPECT_THROW(fermat(2), std::invalid_argument);
    const auto f3 = enumerate_lines(fermat(3));
    EXPECT_EQ(f3.n, 9u);
    EXPECT_EQ(f3.t(3), 12u);
    EXPECT_EQ(3 * f3.t(3), 36u);
    const auto f5 = enumerate_lines(fermat(5));
    EXPECT_EQ(f5.n, 15u);
    EXPECT_EQ(f5.t(5), 3u);
    EXPECT_EQ(f5.t(2), 0u);
}

TEST(Fermat, StructureForAllSmallK) {
    for (int k = 3; k <= 12; ++k) {
        const auto s = enumerate_lines(fermat(k));
        std::size_t size_k = 0;
        for (const auto& l : s.lines) {
            if (l.size() == static_cast<std::size_t>(k)) {
                ++size_k;
            } else {
                EXPECT_EQ(l.size(), 3u) << k;
            }
        }
        EXPECT_EQ(size_k, k == 3 ? 12u : 3u) << k;
        EXPECT_EQ(s.t(2), 0u) << k;
    }
}

TEST(Fermat, ChartAvoidsAllPoints) {
    for (int k = 3; k <= 9; ++k) {
        const auto pts = fermat_projective(k);
        const auto chart = choose_chart(pts);
        for (const auto& p : pts) EXPECT_FALSE(is_zero(line_value(chart, p)));
        EXPECT_EQ(fermat_affine(k), fermat(k));
    }
    EXPECT_EQ(enumerate_lines(fermat_affine(4)).t(4), 3u);
    EXPECT_EQ(enumerate_lines(fermat_affine(4)).t(3), 16u);
}

TEST(FermatApex, OrdinaryLinesThroughApex) {
    for (int k = 3; k <= 6; ++k) {
        const auto c = fermat_with_apex(k);
        ASSERT_EQ(c.size(), static_cast<std::size_t>(3 * k + 1));
        const auto s = enumerate_lines(c);
        EXPECT_EQ(s.t(2), static_cast<std::size_t>(3 * k));
        for (const auto& l : s.lines) {
            if (l.size() == 2) EXPECT_TRUE(l.contains(c.size() - 1));
        }
        EXPECT_EQ(affine_dim(c), 3u);
    }
}

TEST(CoplanarPlus, Examples) {
    const auto f = coplanar_plus(10, 1, 0, PlanePart::fermat);
    EXPECT_EQ(enumerate_lines(f).t(2), 9u);
    const auto g = coplanar_plus(10, 1, 42);
    EXPECT_EQ(ordinary_count_through(g, 9), 9u);
    const auto big = coplanar_plus(30, 5, 3);
    EXPECT_GE(enumerate_lines(big).t(2), 5u * (30 - 10));
    EXPECT_EQ(affine_dim_of(big, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24}), 2u);
    EXPECT_THROW(coplanar_plus(10, 5, 0), std::invalid_argument);
    EXPECT_THROW(coplanar_plus(10, 2, 0, PlanePart::fermat), std::invalid_argument);
}

TEST(RandomGeneric, Generic) {
    const auto c = random_generic(10, 3, 5);
    const auto s = enumerate_lines(c);
    EXPECT_EQ(s.t(2), 45u);
    EXPECT_TRUE(s.special_lines().empty());
    EXPECT_EQ(enumerate_lines(random_generic(3, 2, 1)).t(2), 3u);
    EXPECT_EQ(random_generic(12, 2, 99), random_generic(12, 2, 99));
    EXPECT_NE(random_generic(12, 2, 99), random_generic(12, 2, 100));
}

TEST(Recipe, Validation) {
    ConfigRecipe r;
    r.kind = RecipeKind::fermat_with_apex;
    r.k = 2;
    EXPECT_THROW(validate(r), std::invalid_argument);
    r.k = 3;
    EXPECT_EQ(generate(r).size(), 10u);
    r.kind = RecipeKind::random_generic;
    r.n = 0;
    EXPECT_THROW(generate(r), std::invalid_argument);
}

TEST(Format, ParseLiteral) {
    const auto c = parse_config("dim 2\n(1/2, -3+2i)\n");
    EXPECT_EQ(c[0][0], Cyclotomic(Rational(1, 2)));
    EXPECT_EQ(c[0][1], Cyclotomic(GaussianRational(Rational(-3), Rational(2))));
    EXPECT_EQ(parse_literal("1/2+3/4 i"), parse_literal("1/2+3/4i"));
    EXPECT_EQ(parse_literal("-i"), Cyclotomic(GaussianRational(Rational(0), Rational(-1))));
    EXPECT_EQ(parse_literal("1 + z^3", 6), Cyclotomic(0));
}

TEST(Format, Errors) {
    try {
        parse_config("dim 1\n# header\n1//2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 3u);
    }
    EXPECT_THROW(parse_config("dim 2\n(1, 2, 3)\n"), ParseError);
    EXPECT_THROW(parse_config("dim 2\n(1, 2)\n(1, 2)\n"), ParseError);
    EXPECT_THROW(parse_config("(1, 2)\n"), ParseError);
    EXPECT_THROW(parse_config("dim 1\nz\n"), ParseError);
    EXPECT_THROW(parse_config("dim 1\n1 2\n"), ParseError);
}

TEST(Format, RoundTripAllGenerators) {
    for (const auto& c : {fermat(3), fermat(4), fermat(5), fermat_with_apex(3), coplanar_plus(12, 2, 1),
                          coplanar_plus(10, 1, 0, PlanePart::fermat), random_generic(8, 4, 3)}) {
        const std::string text = serialize_config(c);
        EXPECT_TRUE(same_structure(parse_config(text), c)) << text;
        EXPECT_EQ(serialize_config(parse_config(text)), text);
    }
}

TEST(Format, Fixtures) {
    const auto hesse = read_config_file(fixture("hesse.cfg"));
    EXPECT_TRUE(same_structure(hesse, fermat(3)));
    EXPECT_TRUE(same_structure(parse_config(serialize_config(hesse)), hesse));
    EXPECT_TRUE(same_structure(read_config_file(fixture("fermat4.cfg")), fermat(4)));
    EXPECT_TRUE(same_structure(read_config_file(fixture("hesse-apex.cfg")), fermat_with_apex(3)));
}
