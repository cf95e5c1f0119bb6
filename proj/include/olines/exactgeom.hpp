#pragma once

// Point configurations over an exact field, collinearity, line enumeration
// and the t_r incidence profile.

#include "olines/field.hpp"
#include "olines/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace olines {

template <class F>
using Point = std::vector<F>;

/// Ordered, duplicate-free list of points in F^dim. Indices are identities.
template <ExactField F>
class BasicPointConfig {
public:
    using Scalar = F;

    BasicPointConfig(std::size_t dim, std::vector<Point<F>> points, std::vector<std::string> labels = {})
        : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
        if (dim_ == 0) throw std::invalid_argument("PointConfig: dimension must be positive");
        if (points_.empty()) throw std::invalid_argument("PointConfig: needs at least one point");
        if (!labels_.empty() && labels_.size() != points_.size()) {
            throw std::invalid_argument("PointConfig: label count does not match point count");
        }
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (points_[i].size() != dim_) {
                throw std::invalid_argument("PointConfig: point " + std::to_string(i) + " has " +
                                            std::to_string(points_[i].size()) + " coordinates, expected " +
                                            std::to_string(dim_));
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (points_[i] == points_[j]) {
                    throw std::invalid_argument("PointConfig: points " + std::to_string(j) + " and " +
                                                std::to_string(i) + " coincide");
                }
            }
        }
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const Point<F>& operator[](std::size_t i) const { return points_.at(i); }
    const std::vector<Point<F>>& points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// The configuration with point i deleted; later indices shift down by one.
    BasicPointConfig without(std::size_t i) const {
        if (i >= size()) throw std::out_of_range("PointConfig::without: bad index");
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < size(); ++k) {
            if (k != i) keep.push_back(k);
        }
        return subset(keep);
    }

    BasicPointConfig subset(const std::vector<std::size_t>& indices) const {
        std::vector<Point<F>> pts;
        std::vector<std::string> labels;
        for (std::size_t k : indices) {
            pts.push_back(points_.at(k));
            if (!labels_.empty()) labels.push_back(labels_[k]);
        }
        return BasicPointConfig(dim_, std::move(pts), std::move(labels));
    }

    friend bool operator==(const BasicPointConfig&, const BasicPointConfig&) = default;

private:
    std::size_t dim_;
    std::vector<Point<F>> points_;
    std::vector<std::string> labels_;
};

using PointConfig = BasicPointConfig<Cyclotomic>;

/// n x (d+1) matrix whose row i is (v_i, 1).
template <ExactField F>
Matrix<F> lift(const BasicPointConfig<F>& config) {
    Matrix<F> v(config.size(), config.dim() + 1);
    for (std::size_t i = 0; i < config.size(); ++i) {
        for (std::size_t c = 0; c < config.dim(); ++c) v(i, c) = config[i][c];
        v(i, config.dim()) = F(1);
    }
    return v;
}

namespace detail {

template <ExactField F>
Point<F> difference(const Point<F>& a, const Point<F>& b) {
    Point<F> d(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) d[c] = a[c] - b[c];
    return d;
}

/// u and v linearly dependent: every 2x2 minor vanishes.
template <ExactField F>
bool dependent(const Point<F>& u, const Point<F>& v) {
    // pivot on a nonzero coordinate of u; with u_p != 0 it suffices to check
    // the minors that involve p
    std::size_t p = 0;
    while (p < u.size() && is_zero(u[p])) ++p;
    if (p == u.size()) return true;
    for (std::size_t c = 0; c < u.size(); ++c) {
        if (c == p) continue;
        if (!(u[p] * v[c] == u[c] * v[p])) return false;
    }
    return true;
}

}  // namespace detail

/// Points p, q, s lie on one line. Decided exactly: the lifted 3 x (d+1)
/// submatrix has rank <= 2 iff q - p and s - p are dependent.
template <ExactField F>
bool collinear(std::size_t p, std::size_t q, std::size_t s, const BasicPointConfig<F>& config) {
    if (p == q || q == s || p == s) throw std::invalid_argument("collinear: indices must be distinct");
    return detail::dependent(detail::difference(config[q], config[p]), detail::difference(config[s], config[p]));
}

struct Line {
    std::vector<std::size_t> points;  // sorted
    std::size_t size() const { return points.size(); }
    bool contains(std::size_t i) const { return std::binary_search(points.begin(), points.end(), i); }
    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;
};

/// All lines determined by a configuration, sorted by their index sets.
struct IncidenceStructure {
    std::size_t n = 0;
    std::vector<Line> lines;

    std::map<std::size_t, std::size_t> t_profile() const {
        std::map<std::size_t, std::size_t> t;
        for (const auto& l : lines) ++t[l.size()];
        return t;
    }
    std::size_t t(std::size_t r) const {
        std::size_t c = 0;
        for (const auto& l : lines) c += (l.size() == r);
        return c;
    }
    std::vector<const Line*> lines_through(std::size_t i) const {
        std::vector<const Line*> out;
        for (const auto& l : lines) {
            if (l.contains(i)) out.push_back(&l);
        }
        return out;
    }
    std::vector<const Line*> special_lines() const {
        std::vector<const Line*> out;
        for (const auto& l : lines) {
            if (l.size() >= 3) out.push_back(&l);
        }
        return out;
    }

    friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

namespace detail {

template <ExactField F>
std::vector<Line> lines_seeded_at(const BasicPointConfig<F>& config, std::size_t i) {
    // lines whose two smallest members are i and some j > i
    const std::size_t n = config.size();
    std::vector<Line> out;
    std::vector<bool> seen(n, false);
    for (std::size_t j = i + 1; j < n; ++j) {
        if (seen[j]) continue;
        const Point<F> u = difference(config[j], config[i]);
        Line line{{i, j}};
        bool seeded_here = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            if (dependent(u, difference(config[k], config[i]))) {
                if (k < j) seeded_here = false;
                line.points.push_back(k);
                if (k > j) seen[k] = true;
            }
        }
        if (seeded_here) {
            std::sort(line.points.begin(), line.points.end());
            out.push_back(std::move(line));
        }
    }
    return out;
}

}  // namespace detail

/// Partition of all pairs into maximal collinear sets. With threads > 1 the
/// per-first-point searches run concurrently; the merged result is sorted, so
/// output does not depend on the thread count.
template <ExactField F>
IncidenceStructure enumerate_lines(const BasicPointConfig<F>& config, unsigned threads = 1) {
    const std::size_t n = config.size();
    IncidenceStructure s;
    s.n = n;
    if (threads <= 1 || n < 8) {
        std::vector<std::vector<bool>> assigned(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (assigned[i][j]) continue;
                const Point<F> u = detail::difference(config[j], config[i]);
                Line line{{i, j}};
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (!assigned[i][k] && detail::dependent(u, detail::difference(config[k], config[i]))) {
                        line.points.push_back(k);
                    }
                }
                for (std::size_t a = 0; a < line.points.size(); ++a) {
                    for (std::size_t b = a + 1; b < line.points.size(); ++b) {
                        assigned[line.points[a]][line.points[b]] = true;
                    }
                }
                s.lines.push_back(std::move(line));
            }
        }
    } else {
        std::vector<std::vector<Line>> per_point(n);
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < n; i += threads) per_point[i] = detail::lines_seeded_at(config, i);
            });
        }
        pool.clear();
        for (auto& v : per_point) {
            for (auto& l : v) s.lines.push_back(std::move(l));
        }
    }
    std::sort(s.lines.begin(), s.lines.end());
    return s;
}

/// Number of 2-point lines through point i.
inline std::size_t ordinary_count_through(const IncidenceStructure& s, std::size_t i) {
    if (i >= s.n) throw std::out_of_range("ordinary_count_through: bad index");
    std::size_t c = 0;
    for (const auto& l : s.lines) c += (l.size() == 2 && l.contains(i));
    return c;
}

template <ExactField F>
std::size_t ordinary_count_through(const BasicPointConfig<F>& config, std::size_t i) {
    return ordinary_count_through(enumerate_lines(config), i);
}

/// Dimension of the affine span: rank of the lifted matrix minus one.
template <ExactField F>
std::size_t affine_dim(const BasicPointConfig<F>& config) {
    return rank(lift(config)) - 1;
}

/// Affine dimension of the points with the given indices.
template <ExactField F>
std::size_t affine_dim_of(const BasicPointConfig<F>& config, const std::vector<std::size_t>& indices) {
    if (indices.empty()) throw std::invalid_argument("affine_dim_of: empty index set");
    Matrix<F> v(indices.size(), config.dim() + 1);
    for (std::size_t r = 0; r < indices.size(); ++r) {
        for (std::size_t c = 0; c < config.dim(); ++c) v(r, c) = config[indices[r]][c];
        v(r, config.dim()) = F(1);
    }
    return rank(std::move(v)) - 1;
}

/// Incidence structure of V \ {v_i} derived from that of V: lines through i
/// lose i, and those left with one point disappear. Indices above i shift down.
inline IncidenceStructure remove_point(const IncidenceStructure& s, std::size_t i) {
    if (i >= s.n) throw std::out_of_range("remove_point: bad index");
    IncidenceStructure out;
    out.n = s.n - 1;
    for (const auto& l : s.lines) {
        Line m;
        for (std::size_t p : l.points) {
            if (p == i) continue;
            m.points.push_back(p > i ? p - 1 : p);
        }
        if (m.size() >= 2) out.lines.push_back(std::move(m));
    }
    std::sort(out.lines.begin(), out.lines.end());
    return out;
}

/// sum_r C(r,2) t_r; equals C(n,2) for every enumerated structure.
inline std::size_t pair_count(const IncidenceStructure& s) {
    std::size_t c = 0;
    for (const auto& l : s.lines) c += l.size() * (l.size() - 1) / 2;
    return c;
}

}  // namespace olines
