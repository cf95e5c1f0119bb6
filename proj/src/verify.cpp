#include "olines/verify.hpp"

#include "olines/depmat.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace olines {

bool VerdictReport::require(std::string name, bool ok, std::string detail) {
    if (hypotheses.empty()) applicable = true;
    hypotheses.push_back({std::move(name), ok, std::move(detail)});
    applicable = applicable && ok;
    return ok;
}

void VerdictReport::conclude(Rational claimed_value, Rational observed_value) {
    claimed = std::move(claimed_value);
    observed = std::move(observed_value);
    margin = observed - claimed;
    pass = applicable && margin >= 0;
}

namespace {

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational q(std::size_t v) { return Rational(static_cast<long>(v)); }

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string str(const Rational& r) { return r.get_str(); }

// Row-reduced basis of the direction space of an affine span. T needs field
// arithmetic and T(0) comparison only.
template <class T>
class AffineSpan {
public:
    explicit AffineSpan(std::vector<T> origin) : origin_(std::move(origin)) {}

    std::size_t dim() const { return basis_.size(); }

    bool contains(const std::vector<T>& p) const {
        auto v = direction(p);
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const T& x) { return x == T(0); });
    }

    bool add(const std::vector<T>& p) {
        auto v = direction(p);
        reduce(v);
        std::size_t c = 0;
        while (c < v.size() && v[c] == T(0)) ++c;
        if (c == v.size()) return false;
        const T lead = v[c];
        for (auto& x : v) x /= lead;
        for (auto& [b, piv] : basis_) {
            if (b[c] == T(0)) continue;
            const T f = b[c];
            for (std::size_t j = 0; j < b.size(); ++j) b[j] -= f * v[j];
        }
        basis_.emplace_back(std::move(v), c);
        return true;
    }

private:
    std::vector<T> direction(const std::vector<T>& p) const {
        std::vector<T> v(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) v[j] = p[j] - origin_[j];
        return v;
    }

    void reduce(std::vector<T>& v) const {
        for (const auto& [b, piv] : basis_) {
            if (v[piv] == T(0)) continue;
            const T f = v[piv];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
        }
    }

    std::vector<T> origin_;
    std::vector<std::pair<std::vector<T>, std::size_t>> basis_;
};

template <class T>
std::vector<Flat> flats_of(const std::vector<std::vector<T>>& pts, std::size_t k) {
    const std::size_t n = pts.size();
    AffineSpan<T> all(pts[0]);
    for (std::size_t i = 1; i < n; ++i) all.add(pts[i]);
    std::vector<std::size_t> everything(n);
    for (std::size_t i = 0; i < n; ++i) everything[i] = i;
    if (all.dim() <= k) return {Flat{all.dim(), everything}};

    std::vector<Flat> out;
    std::vector<std::size_t> combo(k + 1);
    for (std::size_t i = 0; i <= k; ++i) combo[i] = i;
    while (true) {
        AffineSpan<T> span(pts[combo[0]]);
        bool independent = true;
        for (std::size_t i = 1; i <= k && independent; ++i) independent = span.add(pts[combo[i]]);
        if (independent) {
            // the flat is reported once: when combo is its lexicographically first basis
            AffineSpan<T> greedy(pts[combo[0]]);
            std::vector<std::size_t> basis{combo[0]}, members;
            bool canonical = true;
            for (std::size_t p = 0; p < n && canonical; ++p) {
                if (p != combo[0] && !span.contains(pts[p])) continue;
                members.push_back(p);
                if (p < combo[0]) canonical = false;
                if (p > combo[0] && greedy.dim() < k && greedy.add(pts[p])) basis.push_back(p);
            }
            if (canonical && basis == combo) out.push_back({k, std::move(members)});
        }
        std::size_t i = k + 1;
        while (i > 0 && combo[i - 1] == n - (k + 1) + (i - 1)) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j <= k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return out;
}

std::optional<std::vector<std::vector<Rational>>> rational_points(const PointConfig& config) {
    std::vector<std::vector<Rational>> out;
    for (const auto& p : config.points()) {
        std::vector<Rational> row;
        for (const auto& x : p) {
            auto r = x.as_rational();
            if (!r) return std::nullopt;
            row.push_back(*r);
        }
        out.push_back(std::move(row));
    }
    return out;
}

bool is_real(const PointConfig& config) {
    for (const auto& p : config.points()) {
        for (const auto& x : p) {
            if (!(x == conj(x))) return false;
        }
    }
    return true;
}

std::string lines_text(const IncidenceStructure& s) {
    std::string out;
    for (const auto& [r, c] : s.t_profile()) out += (out.empty() ? "" : " ") + ("t" + std::to_string(r)) + "=" + std::to_string(c);
    return out;
}

std::size_t max_ordinary_point(const IncidenceStructure& s, std::size_t& count) {
    std::vector<std::size_t> o(s.n, 0);
    for (const auto& l : s.lines) {
        if (l.size() == 2) {
            ++o[l.points[0]];
            ++o[l.points[1]];
        }
    }
    const auto it = std::max_element(o.begin(), o.end());
    count = *it;
    return static_cast<std::size_t>(it - o.begin());
}

std::string witness_text(const ZeroSubmatrixWitness& w) {
    return "zero submatrix " + std::to_string(w.rows.size()) + "x" + std::to_string(w.cols.size()) + " score " +
           str(w.score) + " columns " + join(w.cols);
}

PropertySResult property_s_of(const PointConfig& config, const IncidenceStructure& s, const PropertySOptions& opt,
                              bool& empty) {
    const auto a = full_dep_matrix(config, s, Construction::v1, opt.seed, opt.retries);
    empty = a.empty();
    if (empty) return {};
    return property_s(a.support_mask(), opt.budget_cols, opt.seed);
}

}  // namespace

std::vector<Flat> enumerate_flats(const PointConfig& config, std::size_t k) {
    if (auto r = rational_points(config)) return flats_of(*r, k);
    std::vector<std::vector<Cyclotomic>> pts(config.points().begin(), config.points().end());
    return flats_of(pts, k);
}

Flat richest_flat(const PointConfig& config, std::size_t k) {
    const auto flats = enumerate_flats(config, k);
    return *std::max_element(flats.begin(), flats.end(),
                             [](const Flat& a, const Flat& b) { return a.points.size() < b.points.size(); });
}

std::size_t rich_pair_weight(const IncidenceStructure& s) {
    std::size_t w = 0;
    for (const auto& l : s.lines) {
        if (l.size() >= 4) w += l.size() * l.size() - l.size();
    }
    return w;
}

std::size_t rich_square_weight(const IncidenceStructure& s) {
    std::size_t w = 0;
    for (const auto& l : s.lines) {
        if (l.size() >= 4) w += l.size() * l.size();
    }
    return w;
}

VerdictReport check_melchior(const PointConfig& config) {
    VerdictReport r;
    r.statement = "melchior";
    const std::size_t d = affine_dim(config);
    r.require("real coordinates", is_real(config));
    r.require("planar", d <= 2, "affine dimension " + std::to_string(d));
    r.require("not collinear", d >= 2, "affine dimension " + std::to_string(d));
    if (!r.applicable) return r;
    const auto s = enumerate_lines(config);
    Rational claimed(3);
    for (const auto& [size, count] : s.t_profile()) {
        if (size >= 4) claimed += q((size - 3) * count);
    }
    r.conclude(claimed, q(s.t(2)));
    r.witnesses.push_back(lines_text(s));
    return r;
}

VerdictReport check_hirzebruch(const PointConfig& config) {
    VerdictReport r;
    r.statement = "hirzebruch";
    const std::size_t n = config.size();
    const std::size_t d = affine_dim(config);
    r.require("planar", d <= 2, "affine dimension " + std::to_string(d));
    r.require("n >= 3", n >= 3);
    if (!r.applicable) return r;
    const auto s = enumerate_lines(config);
    const bool rich_free = s.t(n) == 0 && s.t(n - 1) == 0 && s.t(n - 2) == 0;
    r.require("t_n = t_{n-1} = t_{n-2} = 0", rich_free, lines_text(s));
    if (!r.applicable) return r;
    Rational claimed = q(n);
    for (const auto& [size, count] : s.t_profile()) {
        if (size >= 5) claimed += q((2 * static_cast<long>(size) - 9) * static_cast<long>(count));
    }
    r.conclude(claimed, q(s.t(2)) + Rational(3, 4) * q(s.t(3)));
    r.witnesses.push_back(lines_text(s));
    return r;
}

VerdictReport check_kelly(const PointConfig& config) {
    VerdictReport r;
    r.statement = "kelly";
    const std::size_t d = affine_dim(config);
    r.require("not contained in a plane", d >= 3, "affine dimension " + std::to_string(d));
    if (!r.applicable) return r;
    const auto s = enumerate_lines(config);
    r.conclude(Rational(1), q(s.t(2)));
    for (const auto& l : s.lines) {
        if (l.size() == 2) {
            r.witnesses.push_back("ordinary line " + join(l.points));
            break;
        }
    }
    return r;
}

VerdictReport check_3n2(const PointConfig& config) {
    VerdictReport r;
    r.statement = "3n2";
    const std::size_t n = config.size();
    const std::size_t d = affine_dim(config);
    r.require("spans three dimensions", d == 3, "affine dimension " + std::to_string(d));
    r.require("n >= 24", n >= 24, "n = " + std::to_string(n));
    if (!r.applicable) return r;
    const auto s = enumerate_lines(config);
    const std::size_t t2 = s.t(2);
    std::optional<std::size_t> off_plane;
    for (std::size_t i = 0; i < n && !off_plane; ++i) {
        if (affine_dim(config.without(i)) <= 2) off_plane = i;
    }
    if (2 * t2 >= 3 * n || !off_plane) {
        r.branch = "3n/2";
        r.conclude(q(static_cast<long>(3 * n), 2), q(t2));
    } else {
        r.branch = "n-1 coplanar";
        r.witnesses.push_back("point off the plane " + std::to_string(*off_plane));
        r.conclude(q(n - 1), q(t2));
    }
    return r;
}

VerdictReport check_main(const PointConfig& config, const Rational& c_min) {
    VerdictReport r;
    r.statement = "main";
    const std::size_t n = config.size();
    const std::size_t d = affine_dim(config);
    r.require("in three dimensions", d <= 3, "affine dimension " + std::to_string(d));
    if (!r.applicable) return r;
    const Flat plane = richest_flat(config, 2);
    const bool ok = 3 * plane.points.size() <= 2 * n;
    r.require("at most 2n/3 points on any plane", ok,
              "richest plane has " + std::to_string(plane.points.size()) + " points");
    if (!ok) {
        r.witnesses.push_back("plane " + join(plane.points));
        return r;
    }
    const auto s = enumerate_lines(config);
    const std::size_t sq = rich_square_weight(s);
    const Rational base = q(static_cast<long>(3 * n), 2);
    const Rational t2 = q(s.t(2));
    r.conclude(base + c_min * q(sq), t2);
    if (sq == 0) {
        r.branch = "vacuous";
        r.fitted_unbounded = t2 >= base;
    } else {
        Rational c = (t2 - base) / q(sq);
        c.canonicalize();
        r.fitted = c;
    }
    r.witnesses.push_back(lines_text(s));
    return r;
}

VerdictReport check_higherdim(const PointConfig& config) {
    VerdictReport r;
    r.statement = "higherdim";
    const std::size_t n = config.size();
    const std::size_t d = affine_dim(config);
    r.require("in four dimensions", d <= 4, "affine dimension " + std::to_string(d));
    if (!r.applicable) return r;
    const Flat flat = richest_flat(config, 3);
    const bool ok = 3 * flat.points.size() <= 2 * n;
    r.require("at most 2n/3 points in any 3-flat", ok,
              "richest 3-flat has " + std::to_string(flat.points.size()) + " points");
    if (!ok) {
        r.witnesses.push_back("3-flat " + join(flat.points));
        return r;
    }
    const auto s = enumerate_lines(config);
    r.conclude(q(static_cast<long>(n * n), 12), q(s.t(2)));
    return r;
}

VerdictReport check_dichotomy(const PointConfig& config, const Rational& b_star, const PropertySOptions& opt) {
    VerdictReport r;
    r.statement = "dichotomy";
    const std::size_t n = config.size();
    r.require("1 < b* < 2n/3", b_star > 1 && 3 * b_star < q(2 * n), "b* = " + str(b_star));
    if (!r.applicable) return r;
    const auto s = enumerate_lines(config);
    bool empty = false;
    const auto ps = property_s_of(config, s, opt, empty);
    if (empty) {
        r.require("dependency matrix violates Property-S", false, "no special lines: satisfied vacuously");
        return r;
    }
    const bool violated = ps.verdict == PropertyS::violated;
    r.budget_exhausted = ps.verdict == PropertyS::unknown;
    r.require("dependency matrix violates Property-S", violated,
              ps.verdict == PropertyS::satisfied ? "satisfied" : "undecided within budget");
    r.witnesses.push_back(witness_text(*ps.witness));
    if (!r.applicable) return r;
    std::size_t best = 0;
    const std::size_t v = max_ordinary_point(s, best);
    const Rational point_bound = Rational(2, 3) * q(n + 1) - b_star;
    if (q(best) >= point_bound) {
        r.branch = "point";
        r.witnesses.push_back("point " + std::to_string(v) + " on " + std::to_string(best) + " ordinary lines");
        r.conclude(point_bound, q(best));
    } else {
        r.branch = "t2";
        r.conclude(q(n) * b_star / 2, q(s.t(2)));
    }
    return r;
}

VerdictReport check_propS_bound(const PointConfig& config, const PropertySOptions& opt) {
    VerdictReport r;
    r.statement = "propS_bound";
    const std::size_t n = config.size();
    const std::size_t d = affine_dim(config);
    r.require("affine dimension >= 3", d >= 3, "affine dimension " + std::to_string(d));
    if (!r.applicable) return r;
    const auto s = enumerate_lines(config);
    bool empty = false;
    const auto ps = property_s_of(config, s, opt, empty);
    if (empty) {
        r.require("Property-S certified", true, "no special lines: satisfied vacuously");
    } else {
        r.budget_exhausted = ps.verdict == PropertyS::unknown;
        r.require("Property-S certified", ps.verdict == PropertyS::satisfied,
                  ps.verdict == PropertyS::violated ? "violated" : "undecided within budget");
        r.witnesses.push_back(witness_text(*ps.witness));
    }
    if (!r.applicable) return r;
    const long dd = static_cast<long>(d), nn = static_cast<long>(n);
    r.conclude(q(dd - 3, 2 * (dd + 1)) * q(nn * nn) + q(3 * nn, 2), q(s.t(2)));
    return r;
}

VerdictReport check_removal_lemma(const PointConfig& config, std::size_t i) {
    VerdictReport r;
    r.statement = "removal_lemma";
    const std::size_t n = config.size();
    r.require("n >= 2", n >= 2);
    r.require("index in range", i < n, "index " + std::to_string(i));
    if (!r.applicable) return r;
    const auto before = enumerate_lines(config);
    const auto after = enumerate_lines(config.without(i));
    r.conclude(q(rich_pair_weight(before)) - q(4 * (n - 1)), q(rich_pair_weight(after)));
    r.witnesses.push_back("removed point " + std::to_string(i));
    return r;
}

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::case2: return "case2";
        case StopReason::j_cap: return "j-cap";
        case StopReason::none_found: return "none-found";
    }
    return "?";
}

std::string to_string(PruneFloor f) { return f == PruneFloor::plane ? "plane" : "3-flat"; }

PruneResult run_prune(const PointConfig& config, PruneFloor floor, const PruneOptions& opt) {
    PruneResult out;
    auto& tr = out.trace;
    auto& rep = out.report;
    rep.statement = floor == PruneFloor::plane ? "prune_main" : "prune_higherdim";
    const std::size_t n = config.size();
    const std::size_t floor_dim = floor == PruneFloor::plane ? 2 : 3;
    const std::size_t d = affine_dim(config);
    rep.require("n >= 3", n >= 3, "n = " + std::to_string(n));
    rep.require(floor == PruneFloor::plane ? "in three dimensions" : "in four dimensions", d <= floor_dim + 1,
                "affine dimension " + std::to_string(d));
    if (!rep.applicable) return out;
    const Flat rich = richest_flat(config, floor_dim);
    rep.require(floor == PruneFloor::plane ? "at most 2n/3 points on any plane" : "at most 2n/3 points in any 3-flat",
                3 * rich.points.size() <= 2 * n, "richest flat has " + std::to_string(rich.points.size()) + " points");
    if (!rep.applicable) return out;

    tr.floor = floor;
    tr.cap = n / 3;
    PointConfig current = config;
    std::vector<std::size_t> original(n);
    for (std::size_t i = 0; i < n; ++i) original[i] = i;
    IncidenceStructure s = enumerate_lines(current);
    tr.t2 = s.t(2);
    Rational pruned_net(0);  // sum of (ordinary - special) over pruned points
    Rational capped(0);      // sum of (ordinary - (i - 1))
    bool bookkeeping = true;

    while (true) {
        const std::size_t nn = current.size();
        const std::size_t t2 = s.t(2);
        bool case2 = false;
        if (floor == PruneFloor::plane) {
            case2 = q(t2) >= q(static_cast<long>(3 * nn), 2) + opt.c1 * q(rich_pair_weight(s));
        } else {
            case2 = 12 * t2 >= nn * nn;
        }
        if (opt.order == PruneOrder::case2_first && case2) {
            tr.stop = StopReason::case2;
            break;
        }
        std::vector<std::size_t> ordinary(nn, 0), special(nn, 0);
        for (const auto& l : s.lines) {
            for (std::size_t p : l.points) ++(l.size() == 2 ? ordinary : special)[p];
        }
        std::optional<std::size_t> pick;
        for (std::size_t p = 0; p < nn; ++p) {
            if (2 * ordinary[p] < nn) continue;
            if (!pick || ordinary[p] > ordinary[*pick]) pick = p;
        }
        if (!pick) {
            tr.stop = case2 ? StopReason::case2 : StopReason::none_found;
            break;
        }
        PruneStep step;
        step.removed = original[*pick];
        step.ordinary = ordinary[*pick];
        step.special = special[*pick];
        current = current.without(*pick);
        original.erase(original.begin() + static_cast<long>(*pick));
        s = enumerate_lines(current);
        step.remaining = current.size();
        step.affine_dim = affine_dim(current);
        if (step.affine_dim <= floor_dim) tr.floor_reached = true;
        const std::size_t i = tr.steps.size() + 1;
        pruned_net += q(step.ordinary) - q(step.special);
        capped += q(step.ordinary) - q(i - 1);
        const Rational net = pruned_net + q(s.t(2));
        step.lower_bound = net > capped ? net : capped;
        bookkeeping = bookkeeping && step.lower_bound <= q(tr.t2);
        tr.steps.push_back(step);
        if (tr.steps.size() == tr.cap) {
            tr.stop = StopReason::j_cap;
            break;
        }
    }
    tr.t2_final = s.t(2);
    tr.lower_bound = tr.stop == StopReason::j_cap ? capped : pruned_net + q(tr.t2_final);
    rep.branch = to_string(tr.stop);
    rep.conclude(tr.lower_bound, q(tr.t2));
    rep.pass = rep.pass && bookkeeping;
    rep.witnesses.push_back("stop " + to_string(tr.stop) + " at j = " + std::to_string(tr.steps.size()));
    if (tr.floor_reached) rep.witnesses.push_back("set collapsed into a " + to_string(floor) + " mid-run");
    return out;
}

// ---- generators ----

namespace {

using RPoint = std::vector<Rational>;

Rational sample(std::mt19937_64& rng) {
    return q(static_cast<long>(rng() % 1999) - 999, static_cast<long>(rng() % 9) + 1);
}

bool collinear_r(const RPoint& a, const RPoint& b, const RPoint& c) {
    std::size_t p = 0;
    while (p < a.size() && b[p] == a[p]) ++p;
    if (p == a.size()) return true;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if ((b[p] - a[p]) * (c[j] - a[j]) != (b[j] - a[j]) * (c[p] - a[p])) return false;
    }
    return true;
}

// x would coincide with or be collinear with two accepted points
bool spoils(const std::vector<RPoint>& pts, const RPoint& x) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
        if (pts[a] == x) return true;
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (collinear_r(pts[a], pts[b], x)) return true;
        }
    }
    return false;
}

PointConfig to_config(const std::vector<RPoint>& pts, std::size_t d) {
    std::vector<Point<Cyclotomic>> out;
    for (const auto& p : pts) {
        Point<Cyclotomic> x;
        for (const auto& c : p) x.push_back(Cyclotomic(c));
        out.push_back(std::move(x));
    }
    return PointConfig(d, std::move(out));
}

template <class Sampler>
void add_generic(std::vector<RPoint>& pts, int count, std::mt19937_64& rng, Sampler sampler) {
    for (int added = 0; added < count;) {
        RPoint x = sampler(rng);
        if (spoils(pts, x)) continue;
        pts.push_back(std::move(x));
        ++added;
    }
}

PointConfig planted(std::size_t d, int lines, int per_line, int extra, std::uint64_t seed) {
    if (lines < 0 || extra < 0 || (lines > 0 && per_line < 3)) throw std::invalid_argument("planted: bad sizes");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<RPoint> pts;
        for (int l = 0; l < lines; ++l) {
            RPoint p0(d), u(d);
            for (auto& c : p0) c = sample(rng);
            for (auto& c : u) c = sample(rng);
            if (std::all_of(u.begin(), u.end(), [](const Rational& c) { return c == 0; })) u[0] = 1;
            long step = 0;
            for (int t = 1; t <= per_line; ++t) {
                RPoint x(d);
                step += static_cast<long>(rng() % 5) + 1;
                const Rational tt = q(step);
                for (std::size_t c = 0; c < d; ++c) x[c] = p0[c] + tt * u[c];
                pts.push_back(std::move(x));
            }
        }
        std::vector<RPoint> sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        add_generic(pts, extra, rng, [d](std::mt19937_64& g) {
            RPoint x(d);
            for (auto& c : x) c = sample(g);
            return x;
        });
        PointConfig config = to_config(pts, d);
        const auto s = enumerate_lines(config);
        const auto special = s.special_lines();
        const bool exact = static_cast<int>(special.size()) == lines &&
                           std::all_of(special.begin(), special.end(), [per_line](const Line* l) {
                               return static_cast<int>(l->size()) == per_line;
                           });
        if (exact) return config;
    }
    throw std::runtime_error("planted: could not avoid accidental collinearities");
}

}  // namespace

PointConfig planted_lines(int lines, int per_line, int extra, std::uint64_t seed) {
    return planted(3, lines, per_line, extra, seed);
}

PointConfig random_real_planar(int n, std::uint64_t seed, int lines, int per_line) {
    if (lines * per_line > n) throw std::invalid_argument("random_real_planar: planted points exceed n");
    return planted(2, lines, per_line, n - lines * per_line, seed);
}

PointConfig generic_with_flat(int n, int on_flat, int flat_dim, int d, std::uint64_t seed) {
    if (n < on_flat || on_flat < 0 || flat_dim < 1 || flat_dim > d) {
        throw std::invalid_argument("generic_with_flat: bad sizes");
    }
    std::mt19937_64 rng(seed);
    std::vector<RPoint> pts;
    const auto dd = static_cast<std::size_t>(d);
    const auto fd = static_cast<std::size_t>(flat_dim);
    add_generic(pts, on_flat, rng, [dd, fd](std::mt19937_64& g) {
        RPoint x(dd, Rational(0));
        for (std::size_t c = 0; c < fd; ++c) x[c] = sample(g);
        return x;
    });
    add_generic(pts, n - on_flat, rng, [dd, fd](std::mt19937_64& g) {
        RPoint x(dd);
        for (auto& c : x) c = sample(g);
        while (fd < dd && x[fd] == 0) x[fd] = sample(g);
        return x;
    });
    return to_config(pts, dd);
}

PointConfig two_flats(int a, int b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RPoint> pts;
    add_generic(pts, a, rng, [](std::mt19937_64& g) {
        return RPoint{sample(g), sample(g), sample(g), Rational(0)};
    });
    // second flat: x1 + x2 + x3 + x4 = 1, kept off the first
    add_generic(pts, b, rng, [](std::mt19937_64& g) {
        RPoint x{sample(g), sample(g), sample(g), Rational(0)};
        while (x[0] + x[1] + x[2] == 1) x[0] = sample(g);
        x[3] = 1 - x[0] - x[1] - x[2];
        return x;
    });
    return to_config(pts, 4);
}

}  // namespace olines
