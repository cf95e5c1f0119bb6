#include "olines/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace olines {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long long> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long long c = num[i];
        quot[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return quot;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<long long>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(poly)).first->second;
}

namespace detail {

struct CyclotomicContext {
    unsigned order;
    unsigned degree;
    // powers[e] = zeta^e in the power basis, for 0 <= e < 2*order.
    std::vector<std::vector<long long>> powers;
};

namespace {

const CyclotomicContext* context_for(unsigned order) {
    if (order == 2) order = 1;
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CyclotomicContext>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second.get();

    auto ctx = std::make_unique<CyclotomicContext>();
    ctx->order = order;
    const auto& phi_poly = cyclotomic_polynomial(order);
    ctx->degree = static_cast<unsigned>(phi_poly.size() - 1);
    const unsigned deg = ctx->degree;
    std::vector<long long> cur(deg, 0);
    cur[0] = 1;
    ctx->powers.reserve(2 * order);
    for (unsigned e = 0; e < 2 * order; ++e) {
        ctx->powers.push_back(cur);
        // multiply by x and reduce with the monic cyclotomic polynomial
        long long top = cur[deg - 1];
        for (unsigned j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0) {
            for (unsigned j = 0; j < deg; ++j) cur[j] -= top * phi_poly[j];
        }
    }
    auto* raw = ctx.get();
    cache.emplace(order, std::move(ctx));
    return raw;
}

}  // namespace
}  // namespace detail

using detail::context_for;

Cyclotomic::Cyclotomic() : ctx_(context_for(1)), coeffs_(1, Rational(0)) {}
Cyclotomic::Cyclotomic(long v) : ctx_(context_for(1)), coeffs_(1, Rational(v)) {}
Cyclotomic::Cyclotomic(const Rational& q) : ctx_(context_for(1)), coeffs_(1, q) { coeffs_[0].canonicalize(); }
Cyclotomic::Cyclotomic(const GaussianRational& z) : Cyclotomic(z.re()) {
    if (z.im() != 0) *this += Cyclotomic(context_for(4), {Rational(0), z.im()});
}
Cyclotomic::Cyclotomic(const detail::CyclotomicContext* ctx, std::vector<Rational> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
    simplify();
}

unsigned Cyclotomic::order() const { return ctx_->order; }

Cyclotomic Cyclotomic::zeta(unsigned order, long exponent) {
    if (order == 0) throw std::invalid_argument("Cyclotomic::zeta: order must be positive");
    std::vector<Rational> c(static_cast<std::size_t>(((exponent % long(order)) + order) % order) + 1, Rational(0));
    c.back() = 1;
    return from_powers(order, c);
}

Cyclotomic Cyclotomic::from_powers(unsigned order, const std::vector<Rational>& coeffs) {
    if (order == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
    const auto* ctx = context_for(order);
    const unsigned n = ctx->order;
    std::vector<Rational> out(ctx->degree, Rational(0));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] == 0) continue;
        // order 2 is stored as order 1; zeta_2 = -1
        if (order == 2) {
            out[0] += (e % 2 == 0) ? coeffs[e] : Rational(-coeffs[e]);
            continue;
        }
        const auto& p = ctx->powers[e % n];
        for (unsigned j = 0; j < ctx->degree; ++j) {
            if (p[j] != 0) out[j] += coeffs[e] * static_cast<long>(p[j]);
        }
    }
    return Cyclotomic(ctx, std::move(out));
}

void Cyclotomic::simplify() {
    if (ctx_->order == 1) return;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != 0) return;
    }
    Rational c = coeffs_[0];
    ctx_ = context_for(1);
    coeffs_.assign(1, std::move(c));
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
    if (target == ctx_->order) return *this;
    if (target == 0 || target % ctx_->order != 0) {
        throw std::invalid_argument("Cyclotomic::lifted: target order must be a multiple");
    }
    const auto* tctx = context_for(target);
    const unsigned step = tctx->order / ctx_->order;
    std::vector<Rational> out(tctx->degree, Rational(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        const auto& p = tctx->powers[e * step];
        for (unsigned j = 0; j < tctx->degree; ++j) {
            if (p[j] != 0) out[j] += coeffs_[e] * static_cast<long>(p[j]);
        }
    }
    Cyclotomic r;
    r.ctx_ = tctx;
    r.coeffs_ = std::move(out);
    return r;  // not simplified: callers want the target order
}

bool Cyclotomic::is_rational() const { return ctx_->order == 1; }

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

std::optional<GaussianRational> Cyclotomic::as_gaussian() const {
    if (is_rational()) return GaussianRational(coeffs_[0]);
    const unsigned l = std::lcm(ctx_->order, 4u);
    const Cyclotomic i = zeta(4).lifted(l);
    const Cyclotomic x = lifted(l);
    const Cyclotomic c = conj(x);
    const Cyclotomic re = (x + c) * Cyclotomic(Rational(1, 2));
    const Cyclotomic im = (x - c) * Cyclotomic(Rational(1, 2)) * conj(i);
    if (!re.is_rational() || !im.is_rational()) return std::nullopt;
    return GaussianRational(re.coeffs_[0], im.coeffs_[0]);
}

namespace {

unsigned common_order(const Cyclotomic& a, const Cyclotomic& b) { return std::lcm(a.order(), b.order()); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order() != order()) {
        const unsigned l = common_order(*this, o);
        *this = lifted(l);
        return *this += o.lifted(l);
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    simplify();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (o.order() != order()) {
        const unsigned l = common_order(*this, o);
        *this = lifted(l);
        return *this -= o.lifted(l);
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    simplify();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.is_rational()) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        simplify();
        return *this;
    }
    if (is_rational()) {
        Rational s = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= s;
        simplify();
        return *this;
    }
    if (o.order() != order()) {
        const unsigned l = common_order(*this, o);
        *this = lifted(l);
        return *this *= o.lifted(l);
    }
    const unsigned deg = ctx_->degree;
    std::vector<Rational> raw(2 * deg - 1, Rational(0));
    for (unsigned a = 0; a < deg; ++a) {
        if (coeffs_[a] == 0) continue;
        for (unsigned b = 0; b < deg; ++b) {
            if (o.coeffs_[b] == 0) continue;
            raw[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    std::vector<Rational> out(raw.begin(), raw.begin() + deg);
    for (unsigned e = deg; e < raw.size(); ++e) {
        if (raw[e] == 0) continue;
        const auto& p = ctx_->powers[e];
        for (unsigned j = 0; j < deg; ++j) {
            if (p[j] != 0) out[j] += raw[e] * static_cast<long>(p[j]);
        }
    }
    coeffs_ = std::move(out);
    simplify();
    return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    // simplified rationals never compare equal to genuine irrationals, but the
    // power basis of a larger field can still represent the same number
    const unsigned l = std::lcm(a.order(), b.order());
    return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

bool is_zero(const Cyclotomic& a) {
    for (const auto& c : a.coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

Cyclotomic conj(const Cyclotomic& a) {
    if (a.is_rational()) return a;
    const unsigned n = a.order();
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t e = 0; e < a.coeffs_.size(); ++e) c[(n - e) % n] = a.coeffs_[e];
    return Cyclotomic::from_powers(n, c);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero(*this)) throw std::domain_error("Cyclotomic: division by zero");
    if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
    // Solve (this * x) = 1 with the multiplication matrix; columns are this*zeta^j.
    const unsigned deg = ctx_->degree;
    std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
    for (unsigned j = 0; j < deg; ++j) {
        std::vector<Rational> shifted(j + deg, Rational(0));
        for (unsigned e = 0; e < deg; ++e) shifted[e + j] = coeffs_[e];
        const Cyclotomic col = from_powers(ctx_->order, shifted).lifted(ctx_->order);
        for (unsigned i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
    }
    m[0][deg] = 1;
    for (unsigned c = 0; c < deg; ++c) {
        unsigned p = c;
        while (p < deg && m[p][c] == 0) ++p;
        if (p == deg) throw std::logic_error("Cyclotomic::inverse: singular multiplication matrix");
        std::swap(m[p], m[c]);
        const Rational piv = m[c][c];
        for (unsigned k = c; k <= deg; ++k) m[c][k] /= piv;
        for (unsigned r = 0; r < deg; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (unsigned k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(deg);
    for (unsigned i = 0; i < deg; ++i) x[i] = m[i][deg];
    return Cyclotomic(ctx_, std::move(x));
}

namespace {

// Re(sum c_e zeta^e) = sum c_e cos(2 pi e / N), evaluated in MPFR at `bits`
// of precision. Returns the sign if the computed value clears a conservative
// error bound, otherwise 0 (undecided).
int mpfr_real_sign(const std::vector<Rational>& coeffs, unsigned order, mpfr_prec_t bits) {
    mpfr_t acc, term, angle, pi, bound, absval;
    mpfr_inits2(bits, acc, term, angle, pi, bound, absval, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    mpfr_set_zero(bound, 1);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] == 0) continue;
        mpfr_mul_ui(angle, pi, static_cast<unsigned long>(2 * e), MPFR_RNDN);
        mpfr_div_ui(angle, angle, order, MPFR_RNDN);
        mpfr_cos(term, angle, MPFR_RNDN);
        mpfr_mul_q(term, term, coeffs[e].get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
        mpfr_set_q(absval, coeffs[e].get_mpq_t(), MPFR_RNDN);
        mpfr_abs(absval, absval, MPFR_RNDN);
        mpfr_add_ui(absval, absval, 1, MPFR_RNDU);
        mpfr_add(bound, bound, absval, MPFR_RNDU);
    }
    // Each term carries a few ulps of relative error; 2^-(bits-16) per unit of
    // coefficient mass is far beyond that.
    mpfr_mul_2si(bound, bound, -(static_cast<long>(bits) - 16), MPFR_RNDU);
    mpfr_abs(absval, acc, MPFR_RNDN);
    int s = 0;
    if (mpfr_cmp(absval, bound) > 0) s = mpfr_sgn(acc);
    mpfr_clears(acc, term, angle, pi, bound, absval, static_cast<mpfr_ptr>(nullptr));
    return s;
}

}  // namespace

int real_sign(const Cyclotomic& a) {
    if (a.is_rational()) return sgn(a.coeffs_[0]);
    if (a.order() == 4) return sgn(a.coeffs_[0]);
    if (is_zero(a + conj(a))) return 0;
    for (mpfr_prec_t bits = 128; bits <= (1 << 20); bits *= 2) {
        if (int s = mpfr_real_sign(a.coeffs_, a.order(), bits); s != 0) return s;
    }
    throw std::runtime_error("real_sign: precision limit reached");
}

std::complex<double> to_complex(const Cyclotomic& a) {
    std::complex<double> acc{0.0, 0.0};
    const unsigned n = a.order();
    for (std::size_t e = 0; e < a.coeffs_.size(); ++e) {
        if (a.coeffs_[e] == 0) continue;
        const double t = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
        acc += a.coeffs_[e].get_d() * std::complex<double>(std::cos(t), std::sin(t));
    }
    return acc;
}

std::string to_string(const Cyclotomic& a, unsigned order) {
    const Cyclotomic x = a.lifted(order);
    std::ostringstream out;
    bool first = true;
    const auto& c = x.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        Rational mag = abs(c[e]);
        if (!first) out << (sgn(c[e]) < 0 ? " - " : " + ");
        else if (sgn(c[e]) < 0) out << "-";
        first = false;
        if (e == 0) {
            out << to_string(mag);
        } else {
            if (mag != 1) out << to_string(mag) << " ";
            out << "z";
            if (e != 1) out << "^" << e;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::string to_string(const Cyclotomic& a) {
    if (auto g = a.as_gaussian()) return to_string(*g);
    return to_string(a, a.order());
}

}  // namespace olines
