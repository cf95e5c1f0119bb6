#pragma once

// Linear dependency coefficients, co-factors, the four-point angle lemma and
// dependency matrices (per line and for a whole configuration).

#include "olines/exactgeom.hpp"
#include "olines/latin.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace olines {

/// (a1, a2, 1) with a1 v1' + a2 v2' + v3' = 0 for the lifted points v' = (v, 1).
template <ExactField F>
std::array<F, 3> dependency_coeffs(const Point<F>& v1, const Point<F>& v2, const Point<F>& v3) {
    if (v1.size() != v2.size() || v2.size() != v3.size()) throw std::invalid_argument("dependency_coeffs: dimension mismatch");
    if (v1 == v2 || v2 == v3 || v1 == v3) throw std::invalid_argument("dependency_coeffs: points must be distinct");
    std::size_t c = 0;
    while (c < v1.size() && v1[c] == v2[c]) ++c;
    const F a1 = (v2[c] - v3[c]) / (v1[c] - v2[c]);
    const F a2 = -F(1) - a1;
    for (std::size_t k = 0; k < v1.size(); ++k) {
        if (!is_zero(a1 * v1[k] + a2 * v2[k] + v3[k])) {
            throw std::invalid_argument("dependency_coeffs: points are not collinear");
        }
    }
    return {a1, a2, F(1)};
}

/// |arg(a conj b)| in [0, pi], numerically; for reports only.
template <ComplexField F>
double angle_between(const F& a, const F& b) {
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("angle_between: zero argument");
    return std::abs(std::arg(to_complex(a) * std::conj(to_complex(b))));
}

/// angle(a, b) >= pi/3, decided exactly: with z = a conj b this is
/// Re z <= 0 or 4 Re(z)^2 <= |z|^2, i.e. (z + conj z)^2 <= z conj z.
template <ExactField F>
bool angle_at_least_pi_over_3(const F& a, const F& b) {
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("angle_at_least_pi_over_3: zero argument");
    const F z = a * conj(b);
    const F two_re = z + conj(z);
    if (real_sign(two_re) <= 0) return true;
    return real_sign(two_re * two_re - z * conj(z)) <= 0;
}

/// Unnormalized co-factor a_i conj(a_j) of v_s with respect to (v_i, v_j);
/// dividing by its modulus gives the unit co-factor.
template <ExactField F>
F cofactor(const Point<F>& vi, const Point<F>& vj, const Point<F>& vs) {
    const auto a = dependency_coeffs(vi, vj, vs);
    return a[0] * conj(a[1]);
}

struct FourPointAngles {
    std::array<bool, 3> at_least_pi_over_3{};  // cases 1..3
    std::array<double, 3> angles{};
    double angle_sum() const { return angles[0] + angles[1] + angles[2]; }
};

/// The three co-factor pairs of the four-point lemma:
/// C(1,2)(3) vs C(1,2)(4), C(1,3)(4) vs C(1,3)(2), C(1,4)(2) vs C(1,4)(3).
template <ExactField F>
FourPointAngles four_point_angle_case(const Point<F>& v1, const Point<F>& v2, const Point<F>& v3, const Point<F>& v4) {
    const std::array<std::pair<F, F>, 3> pairs{{
        {cofactor(v1, v2, v3), cofactor(v1, v2, v4)},
        {cofactor(v1, v3, v4), cofactor(v1, v3, v2)},
        {cofactor(v1, v4, v2), cofactor(v1, v4, v3)},
    }};
    FourPointAngles out;
    for (std::size_t c = 0; c < 3; ++c) {
        out.at_least_pi_over_3[c] = angle_at_least_pi_over_3(pairs[c].first, pairs[c].second);
        out.angles[c] = angle_between(pairs[c].first, pairs[c].second);
    }
    return out;
}

/// Row of a dependency matrix: coefficients (a_i, a_j, 1) at columns (i, j, s).
template <class F>
struct DependencyRow {
    std::array<std::size_t, 3> support{};
    std::array<F, 3> coeffs{};
    std::size_t line_id = 0;

    const F* coefficient(std::size_t col) const {
        for (std::size_t p = 0; p < 3; ++p) {
            if (support[p] == col) return &coeffs[p];
        }
        return nullptr;
    }
    friend bool operator==(const DependencyRow&, const DependencyRow&) = default;
};

/// Row k has a partner row k' sharing the columns {p, q} with a different
/// third column, and the co-factors of the two rows w.r.t. (p, q) are at
/// least pi/3 apart.
struct AngleWitness {
    std::size_t row = 0;
    std::size_t other_row = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    double angle = 0.0;
};

enum class Construction { v1, v2 };

struct LineBlockInfo {
    std::vector<std::size_t> points;  // global indices, sorted
    std::vector<std::size_t> sigma;   // sigma[local point] = label in [1, r]
    std::size_t first_row = 0;
    std::size_t rows = 0;
    std::size_t certified = 0;
    std::size_t required = 0;         // ceil((r^2 - r) / 3), 0 when r < 4
    std::size_t attempts = 0;
    bool property4 = true;
};

template <class F>
struct DependencyMatrix {
    std::size_t n = 0;
    std::vector<DependencyRow<F>> rows;
    Construction construction = Construction::v1;
    std::vector<LineBlockInfo> lines;
    std::vector<AngleWitness> witnesses;  // indices refer to rows of this matrix

    std::size_t m() const { return rows.size(); }
    bool empty() const { return rows.empty(); }

    Matrix<F> dense() const {
        Matrix<F> a(rows.size(), n);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            for (std::size_t p = 0; p < 3; ++p) a(k, rows[k].support[p]) = rows[k].coeffs[p];
        }
        return a;
    }

    std::vector<std::vector<bool>> support_mask() const {
        std::vector<std::vector<bool>> mask(rows.size(), std::vector<bool>(n, false));
        for (std::size_t k = 0; k < rows.size(); ++k) {
            for (std::size_t c : rows[k].support) mask[k][c] = true;
        }
        return mask;
    }
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::vector<std::size_t> random_bijection(std::size_t r, std::mt19937_64& rng) {
    std::vector<std::size_t> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = i + 1;
    for (std::size_t i = r; i > 1; --i) std::swap(s[i - 1], s[rng() % i]);
    return s;
}

/// Rows of A_sigma over local column indices 0..r-1.
template <ExactField F>
std::vector<DependencyRow<F>> rows_for_bijection(const std::vector<Point<F>>& pts, const std::vector<std::size_t>& sigma,
                                                 const TripleSystem& t) {
    std::vector<std::size_t> inverse(pts.size() + 1);
    for (std::size_t local = 0; local < sigma.size(); ++local) inverse[sigma[local]] = local;
    std::vector<DependencyRow<F>> rows;
    rows.reserve(t.triples.size());
    for (const auto& tr : t.triples) {
        const std::size_t i = inverse[static_cast<std::size_t>(tr[0])];
        const std::size_t j = inverse[static_cast<std::size_t>(tr[1])];
        const std::size_t s = inverse[static_cast<std::size_t>(tr[2])];
        rows.push_back({{i, j, s}, dependency_coeffs(pts[i], pts[j], pts[s]), 0});
    }
    return rows;
}

}  // namespace detail

/// For each row, the first witness found (pairs of its support in order, partner
/// rows in order), or nothing.
template <ExactField F>
std::vector<std::optional<AngleWitness>> certify_property4(const std::vector<DependencyRow<F>>& rows) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& s = rows[k].support;
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a + 1; b < 3; ++b) by_pair[std::minmax(s[a], s[b])].push_back(k);
        }
    }
    std::vector<std::optional<AngleWitness>> out(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        for (std::size_t a = 0; a < 3 && !out[k]; ++a) {
            for (std::size_t b = a + 1; b < 3 && !out[k]; ++b) {
                const std::size_t p = row.support[a], q = row.support[b];
                const F ck = row.coeffs[a] * conj(row.coeffs[b]);
                for (std::size_t k2 : by_pair[std::minmax(p, q)]) {
                    if (k2 == k) continue;
                    const auto& other = rows[k2];
                    const std::size_t third = row.support[3 - a - b];
                    if (other.coefficient(third)) continue;
                    const F c2 = *other.coefficient(p) * conj(*other.coefficient(q));
                    if (angle_at_least_pi_over_3(ck, c2)) {
                        out[k] = AngleWitness{k, k2, p, q, angle_between(ck, c2)};
                        break;
                    }
                }
            }
        }
    }
    return out;
}

/// Per-line matrix A(l) over local columns 0..r-1: rows in triple-system order
/// for a random bijection, resampled (up to `retries` times) until at least a
/// third of the rows carry an angle witness. Falls back to the best attempt
/// with property4 = false.
template <ExactField F>
DependencyMatrix<F> line_dep_matrix(const std::vector<Point<F>>& pts, std::uint64_t seed, unsigned retries = 64) {
    const std::size_t r = pts.size();
    if (r < 3) throw std::invalid_argument("line_dep_matrix: need at least 3 points");
    for (std::size_t k = 2; k < r; ++k) {
        if (!detail::dependent(detail::difference(pts[1], pts[0]), detail::difference(pts[k], pts[0]))) {
            throw std::invalid_argument("line_dep_matrix: points are not collinear");
        }
    }
    const TripleSystem t = triple_system(static_cast<int>(r));
    std::mt19937_64 rng(seed);
    DependencyMatrix<F> best;
    best.n = r;
    best.construction = Construction::v2;
    LineBlockInfo info;
    info.rows = r * r - r;
    info.required = r >= 4 ? (r * r - r + 2) / 3 : 0;
    bool have = false;
    std::size_t attempts = 0;
    for (unsigned attempt = 0; attempt < std::max(1u, retries); ++attempt) {
        ++attempts;
        auto sigma = detail::random_bijection(r, rng);
        auto rows = detail::rows_for_bijection(pts, sigma, t);
        std::vector<AngleWitness> witnesses;
        if (r >= 4) {
            for (auto& w : certify_property4(rows)) {
                if (w) witnesses.push_back(*w);
            }
        }
        if (!have || witnesses.size() > best.witnesses.size()) {
            best.rows = std::move(rows);
            best.witnesses = std::move(witnesses);
            info.sigma = std::move(sigma);
            have = true;
        }
        if (best.witnesses.size() >= info.required) break;
    }
    info.attempts = attempts;
    info.certified = best.witnesses.size();
    info.property4 = info.certified >= info.required;
    for (std::size_t i = 0; i < r; ++i) info.points.push_back(i);
    best.lines.push_back(std::move(info));
    return best;
}

/// Dependency matrix of a configuration. v1: on each special line the
/// triple system applied to the points in index order. v2: the per-line
/// matrices A(l) with seeds derived from `seed` and the line's position.
/// Lines are taken in sorted order. No special lines gives an empty matrix.
template <ExactField F>
DependencyMatrix<F> full_dep_matrix(const BasicPointConfig<F>& config, const IncidenceStructure& s, Construction c,
                                    std::uint64_t seed = 0, unsigned retries = 64) {
    DependencyMatrix<F> out;
    out.n = config.size();
    out.construction = c;
    std::size_t line_id = 0;
    for (const auto& line : s.lines) {
        if (line.size() < 3) continue;
        const std::size_t r = line.size();
        std::vector<Point<F>> pts;
        for (std::size_t g : line.points) pts.push_back(config[g]);
        DependencyMatrix<F> block;
        if (c == Construction::v1) {
            std::vector<std::size_t> identity(r);
            for (std::size_t i = 0; i < r; ++i) identity[i] = i + 1;
            block.rows = detail::rows_for_bijection(pts, identity, triple_system(static_cast<int>(r)));
            LineBlockInfo info;
            info.sigma = identity;
            info.rows = block.rows.size();
            info.attempts = 1;
            block.lines.push_back(info);
        } else {
            block = line_dep_matrix(pts, detail::splitmix(seed ^ detail::splitmix(line_id)), retries);
        }
        LineBlockInfo info = block.lines.front();
        info.points = line.points;
        info.first_row = out.rows.size();
        for (const auto& w : block.witnesses) {
            out.witnesses.push_back({w.row + info.first_row, w.other_row + info.first_row, line.points[w.p],
                                     line.points[w.q], w.angle});
        }
        for (auto& row : block.rows) {
            for (auto& col : row.support) col = line.points[col];
            row.line_id = line_id;
            out.rows.push_back(std::move(row));
        }
        out.lines.push_back(std::move(info));
        ++line_id;
    }
    return out;
}

template <ExactField F>
DependencyMatrix<F> full_dep_matrix(const BasicPointConfig<F>& config, Construction c, std::uint64_t seed = 0,
                                    unsigned retries = 64) {
    return full_dep_matrix(config, enumerate_lines(config), c, seed, retries);
}

struct DependencyCheck {
    bool annihilates = false;       // A V = 0 exactly
    bool support_three = false;     // every row has three nonzero entries
    bool pair_counts = false;       // special-line pairs in 6 rows, other pairs in none
    bool row_count = false;         // m = n^2 - n - 2 t_2 (0 without special lines)
    std::size_t expected_rows = 0;
    bool ok() const { return annihilates && support_three && pair_counts && row_count; }
};

template <ExactField F>
DependencyCheck check_dependency_matrix(const DependencyMatrix<F>& a, const BasicPointConfig<F>& config,
                                        const IncidenceStructure& s) {
    DependencyCheck c;
    const std::size_t n = config.size();
    c.annihilates = true;
    c.support_three = true;
    std::vector<std::size_t> pair_rows(n * n, 0);
    for (const auto& row : a.rows) {
        for (std::size_t k = 0; k <= config.dim(); ++k) {
            F sum(0);
            for (std::size_t p = 0; p < 3; ++p) {
                sum += row.coeffs[p] * (k < config.dim() ? config[row.support[p]][k] : F(1));
            }
            if (!is_zero(sum)) c.annihilates = false;
        }
        const auto& sp = row.support;
        if (sp[0] == sp[1] || sp[1] == sp[2] || sp[0] == sp[2]) c.support_three = false;
        for (const auto& x : row.coeffs) {
            if (is_zero(x)) c.support_three = false;
        }
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t q = p + 1; q < 3; ++q) {
                const auto [lo, hi] = std::minmax(sp[p], sp[q]);
                ++pair_rows[lo * n + hi];
            }
        }
    }
    c.pair_counts = true;
    for (const auto& line : s.lines) {
        const std::size_t want = line.size() >= 3 ? 6 : 0;
        for (std::size_t p = 0; p < line.size(); ++p) {
            for (std::size_t q = p + 1; q < line.size(); ++q) {
                if (pair_rows[line.points[p] * n + line.points[q]] != want) c.pair_counts = false;
            }
        }
    }
    c.expected_rows = n * n - n - 2 * s.t(2);
    c.row_count = a.m() == c.expected_rows;
    return c;
}

/// Text dump: "m n", optional "field N", then "i j s  a_i  a_j  1" per row
/// (0-based columns, literals without internal spaces).
std::string dump_dependency_matrix(const DependencyMatrix<Cyclotomic>& a);
DependencyMatrix<Cyclotomic> parse_dependency_dump(std::string_view text);

}  // namespace olines
