#pragma once

// Property-S, Sinkhorn and l2 scaling, the diagonal-dominance rank bound, and
// the cancellation functionals D and E.

#include "olines/depmat.hpp"
#include "olines/field.hpp"
#include "olines/matrix.hpp"
#include "olines/rational.hpp"

#include <algorithm>
#include <complex>
#include <iterator>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace olines {

using Mask = std::vector<std::vector<bool>>;  // mask[row][col]: entry nonzero

// ---- Property-S ----

struct ZeroSubmatrixWitness {
    std::vector<std::size_t> rows;  // U
    std::vector<std::size_t> cols;  // W
    Rational score;                 // |U|/m + |W|/n
};

enum class PropertyS { satisfied, violated, unknown };

struct PropertySResult {
    PropertyS verdict = PropertyS::unknown;
    std::size_t m = 0;
    std::size_t n = 0;
    /// Best zero submatrix found (b >= 1). Exhaustive runs return a maximizer.
    std::optional<ZeroSubmatrixWitness> witness;
    bool exhaustive = false;
};

/// Searches column subsets W; U is forced to be every row with no support in W.
/// Exhaustive branch and bound when n <= budget_cols, otherwise a seeded
/// simulated-annealing witness search that can only prove violation.
PropertySResult property_s(const Mask& mask, std::size_t budget_cols = 24, std::uint64_t seed = 0);

/// Zero submatrix U x W: every entry zero, U = forced rows of W.
ZeroSubmatrixWitness witness_for_columns(const Mask& mask, const std::vector<std::size_t>& cols);

// ---- Sinkhorn ----

struct ScalingResult {
    std::vector<double> row;  // rho
    std::vector<double> col;  // gamma
    double epsilon = 0;
    double target_col = 0;    // m / n
    double min_col_sum = 0;
    double max_row_sum = 0;
    std::size_t iterations = 0;
    bool converged = false;
    /// sum_i log(row sum i) after each column normalization
    std::vector<double> potential;
};

/// Alternating row/column normalization of a nonnegative matrix: rows to 1,
/// columns to m/n, until every column sum is >= m/n - eps; finally rows are
/// scaled to exactly 1 + eps. Throws on negative entries.
ScalingResult sinkhorn(const Matrix<double>& a, double eps = 1e-6, std::size_t max_iters = 100000);

/// The scaled matrix rho_i a_ij gamma_j.
Matrix<double> apply_scaling(const Matrix<double>& a, const ScalingResult& s);

using CMatrix = Matrix<std::complex<double>>;

struct L2Scaling {
    CMatrix scaled;         // sqrt(rho_i) A_ij sqrt(gamma_j)
    ScalingResult result;   // coefficients of the squared problem
    std::vector<double> row_l2sq;
    std::vector<double> col_l2sq;
};

/// Sinkhorn on |A_ij|^2, then square roots of the coefficients.
L2Scaling l2_scale(const CMatrix& a, double eps = 1e-6, std::size_t max_iters = 100000);

template <ComplexField F>
CMatrix to_complex_matrix(const Matrix<F>& a) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_complex(a(i, j));
    }
    return out;
}

// ---- Rank bound ----

/// n^2 L^2 / (n L^2 + sum_{i != j} |M_ij|^2) for hermitian M with |M_ii| >= L.
template <ExactField F>
F rank_lower_bound(const Matrix<F>& m, const F& L) {
    const std::size_t n = m.rows();
    if (m.cols() != n || n == 0) throw std::invalid_argument("rank_lower_bound: matrix must be square and nonempty");
    if (!is_zero(L - conj(L)) || real_sign(L) <= 0) throw std::invalid_argument("rank_lower_bound: L must be positive");
    F off(0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(m(i, j) == conj(m(j, i)))) throw std::invalid_argument("rank_lower_bound: matrix is not hermitian");
            if (i != j) off += m(i, j) * conj(m(i, j));
        }
        if (real_sign(m(i, i) * conj(m(i, i)) - L * L) < 0) {
            throw std::invalid_argument("rank_lower_bound: diagonal entry " + std::to_string(i) + " below L");
        }
    }
    const F nn(static_cast<long>(n));
    return nn * nn * L * L / (nn * L * L + off);
}

/// Exact bound as a rational, for matrices over Q(i).
Rational rank_lower_bound_rational(const Matrix<GaussianRational>& m, const Rational& L);
double rank_lower_bound(const CMatrix& m, double L);

/// A^* A, optionally with row weights: sum_k w_k conj(A_ki) A_kj.
template <ComplexField F>
Matrix<F> gram(const Matrix<F>& a, const std::vector<F>& w = {}) {
    Matrix<F> m(a.cols(), a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const F wk = w.empty() ? F(1) : w[k];
        for (std::size_t i = 0; i < a.cols(); ++i) {
            if (is_zero(a(k, i))) continue;
            const F left = wk * conj(a(k, i));
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (!is_zero(a(k, j))) m(i, j) += left * a(k, j);
            }
        }
    }
    return m;
}

template <ComplexField F>
F offdiag_square_sum(const Matrix<F>& m) {
    F s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) s += m(i, j) * conj(m(i, j));
        }
    }
    return s;
}

// ---- Cancellation functionals ----

template <class F>
struct Functionals {
    F D;
    F E;
};

/// D sums |x_k - x_k'|^2, x_k = w_k A_ki conj(A_kj), over ordered column pairs
/// i != j and row pairs k < k' in the common support of columns i and j.
/// E sums (w_k|A_ki|^2 - w_k|A_kj|^2)^2 over rows k and pairs i < j in supp(R_k).
/// Row weights w_k stand for the row scaling A' = diag(sqrt w) A.
template <ComplexField F>
Functionals<F> cancellation_functionals(const Matrix<F>& a, const std::vector<F>& w = {}) {
    const std::size_t m = a.rows(), n = a.cols();
    auto weight = [&](std::size_t k) { return w.empty() ? F(1) : w[k]; };
    std::vector<std::vector<std::size_t>> col_support(n);
    std::vector<std::vector<std::size_t>> row_support(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_zero(a(k, i))) {
                col_support[i].push_back(k);
                row_support[k].push_back(i);
            }
        }
    }
    F d(0);
    std::vector<std::size_t> common;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            common.clear();
            std::set_intersection(col_support[i].begin(), col_support[i].end(), col_support[j].begin(),
                                  col_support[j].end(), std::back_inserter(common));
            for (std::size_t p = 0; p < common.size(); ++p) {
                const std::size_t k = common[p];
                const F xk = weight(k) * a(k, i) * conj(a(k, j));
                for (std::size_t q = p + 1; q < common.size(); ++q) {
                    const std::size_t k2 = common[q];
                    const F diff = xk - weight(k2) * a(k2, i) * conj(a(k2, j));
                    d += diff * conj(diff);
                }
            }
        }
    }
    d = d + d;  // (i, j) and (j, i) contribute equally
    F e(0);
    for (std::size_t k = 0; k < m; ++k) {
        const auto& s = row_support[k];
        for (std::size_t p = 0; p < s.size(); ++p) {
            for (std::size_t q = p + 1; q < s.size(); ++q) {
                const F diff = weight(k) * (a(k, s[p]) * conj(a(k, s[p])) - a(k, s[q]) * conj(a(k, s[q])));
                e += diff * diff;
            }
        }
    }
    return {d, e};
}

/// w_k = alpha2 / sum_i |A_ki|^2, so that every row of diag(sqrt w) A has l2 norm^2 alpha2.
template <ExactField F>
std::vector<F> exact_row_weights(const Matrix<F>& a, const F& alpha2) {
    std::vector<F> w;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        F s(0);
        for (std::size_t i = 0; i < a.cols(); ++i) s += a(k, i) * conj(a(k, i));
        if (is_zero(s)) throw std::invalid_argument("exact_row_weights: zero row");
        w.push_back(alpha2 / s);
    }
    return w;
}

template <class F>
struct IdentityCheck {
    bool applicable = false;
    std::string failure;  // which hypothesis broke
    std::size_t t = 0;
    std::size_t q = 0;
    F alpha2{};
    F lhs{};              // sum_{i != j} |M_ij|^2
    F rhs{};              // (1 - 1/q) t m alpha^4 - (D + (t/q) E)
    F residual{};
    F corollary_bound{};  // (1 - 1/q) t m alpha^4
    Functionals<F> functionals{};
};

/// Off-diagonal identity for A' = diag(sqrt w) A. Hypotheses: constant row
/// support size q, constant column-pair support intersection t, constant
/// weighted row norm alpha^2.
template <ComplexField F>
IdentityCheck<F> offdiag_identity_check(const Matrix<F>& a, const std::vector<F>& w = {}) {
    IdentityCheck<F> c;
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n < 2) {
        c.failure = "matrix too small";
        return c;
    }
    auto weight = [&](std::size_t k) { return w.empty() ? F(1) : w[k]; };
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t sup = 0;
        F norm(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_zero(a(k, i))) ++sup;
            norm += weight(k) * a(k, i) * conj(a(k, i));
        }
        if (k == 0) {
            c.q = sup;
            c.alpha2 = norm;
        } else if (sup != c.q) {
            c.failure = "q: row " + std::to_string(k) + " has support " + std::to_string(sup) + ", row 0 has " +
                        std::to_string(c.q);
            return c;
        } else if (!(norm == c.alpha2)) {
            if constexpr (ExactField<F>) {
                c.failure = "alpha: row " + std::to_string(k) + " norm differs from row 0";
                return c;
            } else if (std::abs(norm - c.alpha2) > 1e-9 * std::abs(c.alpha2)) {
                c.failure = "alpha: row " + std::to_string(k) + " norm differs from row 0";
                return c;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t inter = 0;
            for (std::size_t k = 0; k < m; ++k) inter += !is_zero(a(k, i)) && !is_zero(a(k, j));
            if (i == 0 && j == 1) {
                c.t = inter;
            } else if (inter != c.t) {
                c.failure = "t: columns " + std::to_string(i) + "," + std::to_string(j) + " share " +
                            std::to_string(inter) + " rows, columns 0,1 share " + std::to_string(c.t);
                return c;
            }
        }
    }
    c.applicable = true;
    c.functionals = cancellation_functionals(a, w);
    c.lhs = offdiag_square_sum(gram(a, w));
    const F q(static_cast<long>(c.q)), t(static_cast<long>(c.t)), mm(static_cast<long>(m));
    c.corollary_bound = (F(1) - F(1) / q) * t * mm * c.alpha2 * c.alpha2;
    c.rhs = c.corollary_bound - (c.functionals.D + t / q * c.functionals.E);
    c.residual = c.lhs - c.rhs;
    return c;
}

// ---- Balance and the squares bound ----

/// Row k is balanced when ||A_ki|^2 - |A_kj|^2| <= eta for all i, j in its support.
std::vector<bool> eta_balance(const CMatrix& a, double eta);
/// eta = alpha / 10 with alpha the l2 norm of row 0.
std::vector<bool> eta_balance(const CMatrix& a);

inline Rational default_c0() { return Rational(1, 150); }

template <class F>
struct SquaresBound {
    F lhs{};     // sum_{i != j} |M_ij|^2
    F bound{};   // 4 (r^2 - r) alpha^4 - c0 (r^2 - r) alpha^2
    F margin{};  // bound - lhs
    bool holds = false;
};

/// For a per-line matrix A(l) (r >= 4) with its angle certificates, rows
/// normalized exactly to l2 norm^2 alpha2.
template <ExactField F>
SquaresBound<F> squares_bound_check(const DependencyMatrix<F>& line_matrix, const Rational& alpha2 = Rational(1),
                                    const Rational& c0 = default_c0()) {
    const std::size_t r = line_matrix.n;
    if (r < 4) throw std::invalid_argument("squares_bound_check: need r >= 4");
    if (line_matrix.lines.empty() || !line_matrix.lines.front().property4) {
        throw std::invalid_argument("squares_bound_check: angle certificates missing");
    }
    const Matrix<F> a = line_matrix.dense();
    const F a2(alpha2);
    const auto w = exact_row_weights(a, a2);
    SquaresBound<F> s;
    s.lhs = offdiag_square_sum(gram(a, w));
    const F m(static_cast<long>(r * r - r));
    s.bound = F(4) * m * a2 * a2 - F(c0) * m * a2;
    s.margin = s.bound - s.lhs;
    s.holds = real_sign(s.margin) >= 0;
    return s;
}

// ---- Summary ----

struct GramSummary {
    double L = 0;             // min |M_ii|
    double offdiag = 0;       // sum_{i != j} |M_ij|^2
    double D = 0;
    double E = 0;
    double rank_bound = 0;
};

GramSummary gram_summary(const CMatrix& scaled);

}  // namespace olines
