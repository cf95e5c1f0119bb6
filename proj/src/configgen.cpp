#include "olines/configgen.hpp"

#include "olines/io.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace olines {

namespace {

void require_fermat_k(int k) {
    if (k < 3) throw std::invalid_argument("fermat: k must be at least 3 (got " + std::to_string(k) + ")");
    if (k > 200) throw std::invalid_argument("fermat: k too large");
}

Rational sample_rational(std::mt19937_64& rng) {
    const long p = static_cast<long>(rng() % 1999) - 999;
    const long q = static_cast<long>(rng() % 9) + 1;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// x coincides with an existing point or is collinear with two of them
bool spoils(const std::vector<Point<Cyclotomic>>& pts, const Point<Cyclotomic>& x, bool check_lines) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
        if (pts[a] == x) return true;
        if (!check_lines) continue;
        const auto xa = detail::difference(x, pts[a]);
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (detail::dependent(detail::difference(pts[b], pts[a]), xa)) return true;
        }
    }
    return false;
}

template <class Make>
void add_generic(std::vector<Point<Cyclotomic>>& pts, int count, bool check_lines, std::mt19937_64& rng,
                 Make make) {
    for (int added = 0; added < count;) {
        Point<Cyclotomic> x = make(rng);
        if (spoils(pts, x, check_lines)) continue;
        pts.push_back(std::move(x));
        ++added;
    }
}

Cyclotomic dot(const std::array<long, 3>& row, const ProjectivePoint& p) {
    return Cyclotomic(row[0]) * p[0] + Cyclotomic(row[1]) * p[1] + Cyclotomic(row[2]) * p[2];
}

long det3(const std::array<std::array<long, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<std::string> fermat_labels(int k) {
    std::vector<std::string> labels;
    for (const char* family : {"a", "b", "c"}) {
        for (int i = 1; i <= k; ++i) labels.push_back(family + std::to_string(i));
    }
    return labels;
}

}  // namespace

std::vector<ProjectivePoint> fermat_projective(int k) {
    require_fermat_k(k);
    std::vector<Cyclotomic> roots;
    for (int i = 0; i < k; ++i) roots.push_back(-Cyclotomic::zeta(static_cast<unsigned>(k), i));
    std::vector<ProjectivePoint> pts;
    for (const auto& e : roots) pts.push_back({Cyclotomic(1), e, Cyclotomic(0)});
    for (const auto& e : roots) pts.push_back({e, Cyclotomic(0), Cyclotomic(1)});
    for (const auto& e : roots) pts.push_back({Cyclotomic(0), Cyclotomic(1), e});
    return pts;
}

AffineChart choose_chart(const std::vector<ProjectivePoint>& points) {
    for (long r = 1; r <= 16; ++r) {
        for (long a = -r; a <= r; ++a) {
            for (long b = -r; b <= r; ++b) {
                for (long c = -r; c <= r; ++c) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != r) continue;
                    const std::array<long, 3> line{a, b, c};
                    bool misses = true;
                    for (const auto& p : points) {
                        if (is_zero(dot(line, p))) {
                            misses = false;
                            break;
                        }
                    }
                    if (!misses) continue;
                    for (int p = 0; p < 3; ++p) {
                        for (int q = p + 1; q < 3; ++q) {
                            AffineChart chart;
                            chart.rows[0] = {0, 0, 0};
                            chart.rows[1] = {0, 0, 0};
                            chart.rows[0][p] = 1;
                            chart.rows[1][q] = 1;
                            chart.rows[2] = line;
                            if (det3(chart.rows) != 0) return chart;
                        }
                    }
                }
            }
        }
    }
    throw std::runtime_error("choose_chart: no small-coefficient line avoids the points");
}

PointConfig apply_chart(const std::vector<ProjectivePoint>& points, const AffineChart& chart,
                        std::vector<std::string> labels) {
    std::vector<Point<Cyclotomic>> out;
    for (const auto& p : points) {
        const Cyclotomic l = dot(chart.rows[2], p);
        if (is_zero(l)) throw std::invalid_argument("apply_chart: point on the line at infinity");
        out.push_back({dot(chart.rows[0], p) / l, dot(chart.rows[1], p) / l});
    }
    return PointConfig(2, std::move(out), std::move(labels));
}

PointConfig fermat_affine(int k) {
    const auto pts = fermat_projective(k);
    return apply_chart(pts, choose_chart(pts), fermat_labels(k));
}

PointConfig fermat(int k) { return fermat_affine(k); }

PointConfig fermat_with_apex(int k) {
    const PointConfig plane = fermat_affine(k);
    std::vector<Point<Cyclotomic>> pts;
    for (const auto& p : plane.points()) pts.push_back({p[0], p[1], Cyclotomic(0)});
    pts.push_back({Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)});
    auto labels = plane.labels();
    labels.push_back("apex");
    return PointConfig(3, std::move(pts), std::move(labels));
}

PointConfig coplanar_plus(int n, int k, std::uint64_t seed, PlanePart plane) {
    ConfigRecipe r;
    r.kind = RecipeKind::coplanar_plus;
    r.n = n;
    r.k = k;
    r.plane = plane;
    validate(r);
    std::mt19937_64 rng(seed);
    std::vector<Point<Cyclotomic>> pts;
    if (plane == PlanePart::fermat) {
        const PointConfig f = fermat_affine((n - k) / 3);
        for (const auto& p : f.points()) pts.push_back({p[0], p[1], Cyclotomic(0)});
    } else {
        add_generic(pts, n - k, true, rng, [](std::mt19937_64& g) {
            return Point<Cyclotomic>{sample_rational(g), sample_rational(g), Cyclotomic(0)};
        });
    }
    add_generic(pts, k, true, rng, [](std::mt19937_64& g) {
        Rational z(0);
        while (z == 0) z = sample_rational(g);
        return Point<Cyclotomic>{sample_rational(g), sample_rational(g), z};
    });
    return PointConfig(3, std::move(pts));
}

PointConfig random_generic(int n, int d, std::uint64_t seed) {
    ConfigRecipe r;
    r.kind = RecipeKind::random_generic;
    r.n = n;
    r.d = d;
    validate(r);
    std::mt19937_64 rng(seed);
    std::vector<Point<Cyclotomic>> pts;
    // on a line every triple is collinear, so only distinctness is enforced
    add_generic(pts, n, d >= 2, rng, [d](std::mt19937_64& g) {
        Point<Cyclotomic> x;
        for (int c = 0; c < d; ++c) x.push_back(sample_rational(g));
        return x;
    });
    return PointConfig(static_cast<std::size_t>(d), std::move(pts));
}

void validate(const ConfigRecipe& r) {
    switch (r.kind) {
        case RecipeKind::fermat:
        case RecipeKind::fermat_affine:
        case RecipeKind::fermat_with_apex:
            require_fermat_k(r.k);
            return;
        case RecipeKind::coplanar_plus:
            if (r.k < 1) throw std::invalid_argument("coplanar_plus: need k >= 1");
            if (2 * r.k >= r.n) throw std::invalid_argument("coplanar_plus: need k < n/2");
            if (r.n - r.k < 3) throw std::invalid_argument("coplanar_plus: need n - k >= 3");
            if (r.plane == PlanePart::fermat && ((r.n - r.k) % 3 != 0 || (r.n - r.k) / 3 < 3)) {
                throw std::invalid_argument("coplanar_plus: a Fermat plane part needs n - k = 3k' with k' >= 3");
            }
            return;
        case RecipeKind::random_generic:
            if (r.n < 1) throw std::invalid_argument("random_generic: need n >= 1");
            if (r.d < 1) throw std::invalid_argument("random_generic: need d >= 1");
            if (r.d == 1 && r.n > 1999 * 9) throw std::invalid_argument("random_generic: n too large for d = 1");
            return;
        case RecipeKind::explicit_file:
            if (r.path.empty()) throw std::invalid_argument("explicit recipe needs a path");
            return;
    }
}

PointConfig generate(const ConfigRecipe& r) {
    validate(r);
    switch (r.kind) {
        case RecipeKind::fermat: return fermat(r.k);
        case RecipeKind::fermat_affine: return fermat_affine(r.k);
        case RecipeKind::fermat_with_apex: return fermat_with_apex(r.k);
        case RecipeKind::coplanar_plus: return coplanar_plus(r.n, r.k, r.seed, r.plane);
        case RecipeKind::random_generic: return random_generic(r.n, r.d, r.seed);
        case RecipeKind::explicit_file: return read_config_file(r.path);
    }
    throw std::logic_error("generate: unknown recipe kind");
}

}  // namespace olines
