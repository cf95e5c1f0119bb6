#include "olines/scalerank.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <random>

namespace olines {

namespace {

using Bits = std::vector<std::uint64_t>;

struct ColumnBits {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Bits> cols;  // rows where the column is nonzero

    explicit ColumnBits(const Mask& mask) : m(mask.size()), n(mask.empty() ? 0 : mask.front().size()) {
        const std::size_t words = (m + 63) / 64;
        cols.assign(n, Bits(words, 0));
        for (std::size_t i = 0; i < m; ++i) {
            if (mask[i].size() != n) throw std::invalid_argument("property_s: ragged mask");
            for (std::size_t j = 0; j < n; ++j) {
                if (mask[i][j]) cols[j][i / 64] |= 1ULL << (i % 64);
            }
        }
    }

    std::size_t words() const { return (m + 63) / 64; }
};

std::size_t popcount(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

// score = a/m + b/n compared as a*n + b*m
struct BranchAndBound {
    const ColumnBits& bits;
    std::size_t best_key = 0;
    std::vector<std::size_t> best_cols;
    std::vector<std::size_t> current;
    bool have_best = false;

    void dfs(std::size_t next, const Bits& covered) {
        const std::size_t a = bits.m - popcount(covered);
        if (!current.empty()) {
            const std::size_t key = a * bits.n + current.size() * bits.m;
            if (!have_best || key > best_key) {
                best_key = key;
                best_cols = current;
                have_best = true;
            }
        }
        if (next == bits.n) return;
        const std::size_t reach = a * bits.n + (current.size() + bits.n - next) * bits.m;
        if (have_best && reach <= best_key) return;
        Bits with = covered;
        for (std::size_t w = 0; w < with.size(); ++w) with[w] |= bits.cols[next][w];
        current.push_back(next);
        dfs(next + 1, with);
        current.pop_back();
        dfs(next + 1, covered);
    }
};

std::vector<std::size_t> anneal(const ColumnBits& bits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = bits.n;
    std::vector<std::size_t> cover_count(bits.m, 0);
    std::vector<bool> in(n, false);
    std::size_t b = 0;
    std::size_t uncovered = bits.m;

    auto flip = [&](std::size_t j) {
        const int delta = in[j] ? -1 : 1;
        in[j] = !in[j];
        b = static_cast<std::size_t>(static_cast<long>(b) + delta);
        for (std::size_t i = 0; i < bits.m; ++i) {
            if (!((bits.cols[j][i / 64] >> (i % 64)) & 1ULL)) continue;
            if (delta > 0) {
                if (cover_count[i]++ == 0) --uncovered;
            } else if (--cover_count[i] == 0) {
                ++uncovered;
            }
        }
    };
    auto score = [&] { return b == 0 ? -1.0 : double(uncovered) / double(bits.m) + double(b) / double(n); };

    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<std::size_t> best;
    double best_score = -1;
    const std::size_t steps = 200 * n;
    for (int restart = 0; restart < 8; ++restart) {
        while (b > 0) {
            for (std::size_t j = 0; j < n; ++j) {
                if (in[j]) flip(j);
            }
        }
        flip(pick(rng));
        double cur = score();
        for (std::size_t s = 0; s < steps; ++s) {
            const double temp = 0.05 * (1.0 - double(s) / double(steps)) + 1e-6;
            const std::size_t j = pick(rng);
            flip(j);
            const double next = score();
            if (next >= cur || unit(rng) < std::exp((next - cur) / temp)) {
                cur = next;
            } else {
                flip(j);
            }
            if (cur > best_score) {
                best_score = cur;
                best.clear();
                for (std::size_t c = 0; c < n; ++c) {
                    if (in[c]) best.push_back(c);
                }
            }
        }
    }
    return best;
}

void check_entries(const Matrix<double>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!(a(i, j) >= 0)) throw std::invalid_argument("sinkhorn: entries must be nonnegative");
        }
    }
}

}  // namespace

ZeroSubmatrixWitness witness_for_columns(const Mask& mask, const std::vector<std::size_t>& cols) {
    ZeroSubmatrixWitness w;
    w.cols = cols;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        bool zero = true;
        for (auto c : cols) zero = zero && !mask[i][c];
        if (zero) w.rows.push_back(i);
    }
    const long m = static_cast<long>(mask.size());
    const long n = mask.empty() ? 1 : static_cast<long>(mask.front().size());
    w.score = Rational(static_cast<long>(w.rows.size()), m) + Rational(static_cast<long>(cols.size()), n);
    w.score.canonicalize();
    return w;
}

PropertySResult property_s(const Mask& mask, std::size_t budget_cols, std::uint64_t seed) {
    if (mask.empty() || mask.front().empty()) throw std::invalid_argument("property_s: empty mask");
    const ColumnBits bits(mask);
    PropertySResult r;
    r.m = bits.m;
    r.n = bits.n;
    std::vector<std::size_t> cols;
    if (bits.n <= budget_cols) {
        BranchAndBound bb{bits, 0, {}, {}, false};
        bb.dfs(0, Bits(bits.words(), 0));
        cols = bb.best_cols;
        r.exhaustive = true;
    } else {
        cols = anneal(bits, seed);
    }
    r.witness = witness_for_columns(mask, cols);
    if (r.witness->score > 1) {
        r.verdict = PropertyS::violated;
    } else {
        r.verdict = r.exhaustive ? PropertyS::satisfied : PropertyS::unknown;
    }
    return r;
}

ScalingResult sinkhorn(const Matrix<double>& a, double eps, std::size_t max_iters) {
    check_entries(a);
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) throw std::invalid_argument("sinkhorn: empty matrix");
    ScalingResult s;
    s.epsilon = eps;
    s.target_col = double(m) / double(n);
    s.row.assign(m, 1.0);
    s.col.assign(n, 1.0);
    std::vector<double> rs(m), cs(n);

    auto row_sums = [&] {
        for (std::size_t i = 0; i < m; ++i) {
            double t = 0;
            for (std::size_t j = 0; j < n; ++j) t += a(i, j) * s.col[j];
            rs[i] = s.row[i] * t;
        }
    };
    auto col_sums = [&] {
        std::fill(cs.begin(), cs.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) cs[j] += s.row[i] * a(i, j) * s.col[j];
        }
    };

    row_sums();
    col_sums();
    const bool degenerate = std::any_of(rs.begin(), rs.end(), [](double v) { return v == 0; }) ||
                            std::any_of(cs.begin(), cs.end(), [](double v) { return v == 0; });
    if (!degenerate) {
        while (true) {
            for (std::size_t i = 0; i < m; ++i) s.row[i] /= rs[i];
            col_sums();
            if (*std::min_element(cs.begin(), cs.end()) >= s.target_col - eps) {
                s.converged = true;
                break;
            }
            if (s.iterations >= max_iters) break;
            for (std::size_t j = 0; j < n; ++j) s.col[j] *= s.target_col / cs[j];
            row_sums();
            double pot = 0;
            for (double v : rs) pot += std::log(v);
            s.potential.push_back(pot);
            ++s.iterations;
        }
        for (auto& r : s.row) r *= 1.0 + eps;
    }
    row_sums();
    col_sums();
    s.min_col_sum = *std::min_element(cs.begin(), cs.end());
    s.max_row_sum = *std::max_element(rs.begin(), rs.end());
    return s;
}

Matrix<double> apply_scaling(const Matrix<double>& a, const ScalingResult& s) {
    Matrix<double> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s.row[i] * a(i, j) * s.col[j];
    }
    return out;
}

L2Scaling l2_scale(const CMatrix& a, double eps, std::size_t max_iters) {
    Matrix<double> sq(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) sq(i, j) = std::norm(a(i, j));
    }
    L2Scaling out;
    out.result = sinkhorn(sq, eps, max_iters);
    out.scaled = CMatrix(a.rows(), a.cols());
    out.row_l2sq.assign(a.rows(), 0.0);
    out.col_l2sq.assign(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double ri = std::sqrt(out.result.row[i]);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto v = ri * a(i, j) * std::sqrt(out.result.col[j]);
            out.scaled(i, j) = v;
            out.row_l2sq[i] += std::norm(v);
            out.col_l2sq[j] += std::norm(v);
        }
    }
    return out;
}

Rational rank_lower_bound_rational(const Matrix<GaussianRational>& m, const Rational& L) {
    return rank_lower_bound(m, GaussianRational(L)).re();
}

double rank_lower_bound(const CMatrix& m, double L) {
    const std::size_t n = m.rows();
    if (m.cols() != n || n == 0) throw std::invalid_argument("rank_lower_bound: matrix must be square and nonempty");
    if (!(L > 0)) throw std::invalid_argument("rank_lower_bound: L must be positive");
    double off = 0, scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-9 * scale) {
                throw std::invalid_argument("rank_lower_bound: matrix is not hermitian");
            }
            if (i != j) off += std::norm(m(i, j));
        }
        if (std::abs(m(i, i)) < L * (1 - 1e-12)) {
            throw std::invalid_argument("rank_lower_bound: diagonal entry " + std::to_string(i) + " below L");
        }
    }
    const double nn = double(n);
    return nn * nn * L * L / (nn * L * L + off);
}

std::vector<bool> eta_balance(const CMatrix& a, double eta) {
    std::vector<bool> out;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t i = 0; i < a.cols(); ++i) {
            if (a(k, i) == std::complex<double>{}) continue;
            lo = std::min(lo, std::norm(a(k, i)));
            hi = std::max(hi, std::norm(a(k, i)));
        }
        out.push_back(hi - lo <= eta || hi < lo);
    }
    return out;
}

std::vector<bool> eta_balance(const CMatrix& a) {
    double alpha2 = 0;
    for (std::size_t i = 0; a.rows() > 0 && i < a.cols(); ++i) alpha2 += std::norm(a(0, i));
    return eta_balance(a, std::sqrt(alpha2) / 10);
}

GramSummary gram_summary(const CMatrix& scaled) {
    GramSummary g;
    const CMatrix m = gram(scaled);
    g.L = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.rows(); ++i) g.L = std::min(g.L, std::abs(m(i, i)));
    if (m.rows() == 0) g.L = 0;
    g.offdiag = offdiag_square_sum(m).real();
    const auto f = cancellation_functionals(scaled);
    g.D = f.D.real();
    g.E = f.E.real();
    g.rank_bound = g.L > 0 ? rank_lower_bound(m, g.L) : 0.0;
    return g;
}

}  // namespace olines
