#include "olines/cyclotomic.hpp"
#include "olines/field.hpp"
#include "olines/matrix.hpp"
#include "olines/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace olines;

namespace {

using Poly = std::vector<Rational>;

// x^n - 1 divided by phi_d for every proper divisor d, by schoolbook division.
Poly oracle_phi(unsigned n) {
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d) continue;
        Poly den = oracle_phi(d);
        Poly q(num.size() - den.size() + 1, Rational(0));
        Poly r = num;
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = r[i + den.size() - 1] / den.back();
            for (std::size_t j = 0; j < den.size(); ++j) r[i + j] -= q[i] * den[j];
        }
        num = q;
    }
    return num;
}

Poly oracle_reduce(Poly p, const Poly& m) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        const Rational c = p[i] / m.back();
        for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * m[j];
    }
    p.resize(deg, Rational(0));
    return p;
}

Poly random_poly(std::mt19937_64& rng, std::size_t len) {
    Poly p;
    for (std::size_t i = 0; i < len; ++i) p.emplace_back(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
    for (auto& c : p) c.canonicalize();
    return p;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(to_string(parse_rational("10/5")), "2");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1//2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("3x"), std::invalid_argument);
}

TEST(Gaussian, ArithmeticAndText) {
    GaussianRational a(Rational(1, 2), Rational(-3));
    GaussianRational b(Rational(2), Rational(1));
    EXPECT_EQ(a * b, GaussianRational(Rational(4), Rational(-11, 2)));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(conj(a), GaussianRational(Rational(1, 2), Rational(3)));
    EXPECT_EQ(to_string(a), "1/2-3 i");
    EXPECT_EQ(to_string(GaussianRational::i()), "i");
    EXPECT_EQ(to_string(GaussianRational(Rational(0), Rational(-2, 3))), "-2/3 i");
    EXPECT_THROW(a / GaussianRational(0), std::domain_error);
}

TEST(Cyclotomic, PolynomialsMatchOracle) {
    for (unsigned n = 1; n <= 40; ++n) {
        const Poly phi = oracle_phi(n);
        const auto& got = cyclotomic_polynomial(n);
        ASSERT_EQ(got.size(), phi.size()) << n;
        for (std::size_t i = 0; i < phi.size(); ++i) EXPECT_EQ(Rational(static_cast<long>(got[i])), phi[i]) << n;
        EXPECT_EQ(phi.size() - 1, euler_phi(n));
    }
}

TEST(Cyclotomic, OmegaPowerKIsMinusOne) {
    for (unsigned k = 3; k <= 12; ++k) {
        const Cyclotomic w = Cyclotomic::zeta(2 * k);
        Cyclotomic p(1);
        for (unsigned e = 0; e < k; ++e) p *= w;
        EXPECT_EQ(p, Cyclotomic(-1)) << k;
        EXPECT_TRUE(p.is_rational());
    }
}

TEST(Cyclotomic, RandomArithmeticMatchesPolynomialOracle) {
    std::mt19937_64 rng(7);
    for (unsigned n : {3u, 5u, 8u, 9u, 10u, 12u, 15u, 16u, 24u}) {
        const Poly phi = oracle_phi(n);
        for (int trial = 0; trial < 20; ++trial) {
            Poly pa = random_poly(rng, n);
            Poly pb = random_poly(rng, n);
            Poly prod(2 * n, Rational(0));
            Poly sum(n, Rational(0));
            for (unsigned i = 0; i < n; ++i) {
                sum[i] = pa[i] + pb[i];
                for (unsigned j = 0; j < n; ++j) prod[i + j] += pa[i] * pb[j];
            }
            const Cyclotomic a = Cyclotomic::from_powers(n, pa);
            const Cyclotomic b = Cyclotomic::from_powers(n, pb);
            for (auto [got, want] : {std::pair{a * b, oracle_reduce(prod, phi)}, std::pair{a + b, oracle_reduce(sum, phi)}}) {
                const Cyclotomic lifted = got.lifted(n);
                ASSERT_EQ(lifted.coefficients().size(), want.size());
                for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(lifted.coefficients()[i], want[i]);
            }
            if (!is_zero(b)) EXPECT_EQ((a / b) * b, a);
            const auto za = to_complex(a);
            const auto zb = to_complex(b);
            EXPECT_NEAR(std::abs(to_complex(a * b) - za * zb), 0.0, 1e-6 * (1 + std::abs(za * zb)));
            EXPECT_NEAR(std::abs(to_complex(conj(a)) - std::conj(za)), 0.0, 1e-6 * (1 + std::abs(za)));
        }
    }
}

TEST(Cyclotomic, MixedOrdersAndGaussianView) {
    const Cyclotomic i = Cyclotomic::zeta(4);
    const Cyclotomic w = Cyclotomic::zeta(3);
    const Cyclotomic s = i * w;
    EXPECT_EQ(s.order(), 12u);
    EXPECT_EQ(s * conj(s), Cyclotomic(1));
    EXPECT_EQ(i.as_gaussian(), GaussianRational::i());
    EXPECT_FALSE(w.as_gaussian().has_value());
    // sqrt(-3) = 1 + 2w
    const Cyclotomic r = Cyclotomic(1) + Cyclotomic(2) * w;
    EXPECT_EQ(r * r, Cyclotomic(-3));
    EXPECT_EQ(Cyclotomic::zeta(6, 6), Cyclotomic(1));
}

TEST(Cyclotomic, RealSignIsExactNearZero) {
    const Cyclotomic w = Cyclotomic::zeta(5);
    // Re(w + w^4) = 2cos(72deg) = (sqrt5 - 1)/2
    const Cyclotomic g = w + Cyclotomic::zeta(5, 4);
    EXPECT_EQ(real_sign(g), 1);
    EXPECT_EQ(real_sign(g * g + g - Cyclotomic(1)), 0);
    // Fibonacci convergents straddle (sqrt5-1)/2 within 4e-9
    EXPECT_EQ(real_sign(g - Cyclotomic(Rational(10946, 17711))), -1);
    EXPECT_EQ(real_sign(g - Cyclotomic(Rational(6765, 10946))), 1);
    EXPECT_EQ(real_sign(Cyclotomic::zeta(4)), 0);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const Cyclotomic a = Cyclotomic::from_powers(7, random_poly(rng, 7));
        const double re = to_complex(a).real();
        if (std::abs(re) > 1e-6) EXPECT_EQ(real_sign(a), re > 0 ? 1 : -1);
    }
}

TEST(Matrix, RankAndDeterminant) {
    Matrix<GaussianRational> m(3, 3);
    int v = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = GaussianRational(v++);
    EXPECT_EQ(rank(m), 2u);
    EXPECT_TRUE(is_zero(determinant(m)));
    m(2, 2) = GaussianRational(Rational(10), Rational(1));
    EXPECT_EQ(rank(m), 3u);
    EXPECT_EQ(determinant(m), GaussianRational(Rational(-3), Rational(-3)));
    Matrix<Cyclotomic> z(2, 3);
    EXPECT_EQ(rank(z), 0u);
}
