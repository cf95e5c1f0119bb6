#pragma once

// Executable checks of the ordinary-line bounds on concrete configurations.

#include "olines/exactgeom.hpp"
#include "olines/rational.hpp"
#include "olines/scalerank.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace olines {

struct Hypothesis {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerdictReport {
    std::string statement;
    std::vector<Hypothesis> hypotheses;
    bool applicable = false;
    bool pass = false;
    Rational claimed;
    Rational observed;
    Rational margin;                 // observed - claimed
    std::string branch;              // which case or disjunct decided the verdict
    std::optional<Rational> fitted;  // check_main: largest c; nullopt with fitted_unbounded
    bool fitted_unbounded = false;
    bool budget_exhausted = false;   // a hypothesis could not be decided within the search budget
    std::vector<std::string> witnesses;

    /// Records a hypothesis; applicable stays true only while all pass.
    bool require(std::string name, bool ok, std::string detail = {});
    void conclude(Rational claimed_value, Rational observed_value);
};

// ---- flats ----

struct Flat {
    std::size_t dim = 0;
    std::vector<std::size_t> points;
};

/// Every k-flat spanned by k+1 affinely independent points, with all its
/// members. If the whole configuration spans at most k dimensions the result
/// is the single flat of all points.
std::vector<Flat> enumerate_flats(const PointConfig& config, std::size_t k);
/// A k-flat with the most points (first in enumeration order on ties).
Flat richest_flat(const PointConfig& config, std::size_t k);

/// sum_{r >= 4} (r^2 - r) t_r
std::size_t rich_pair_weight(const IncidenceStructure& s);
/// sum_{r >= 4} r^2 t_r
std::size_t rich_square_weight(const IncidenceStructure& s);

// ---- checkers ----

VerdictReport check_melchior(const PointConfig& config);
VerdictReport check_hirzebruch(const PointConfig& config);
VerdictReport check_kelly(const PointConfig& config);
VerdictReport check_3n2(const PointConfig& config);
VerdictReport check_main(const PointConfig& config, const Rational& c_min = Rational(0));
VerdictReport check_higherdim(const PointConfig& config);

struct PropertySOptions {
    std::size_t budget_cols = 24;
    std::uint64_t seed = 0;  // dependency matrix and annealing
    unsigned retries = 64;
};

VerdictReport check_dichotomy(const PointConfig& config, const Rational& b_star, const PropertySOptions& opt = {});
VerdictReport check_propS_bound(const PointConfig& config, const PropertySOptions& opt = {});
VerdictReport check_removal_lemma(const PointConfig& config, std::size_t i);

// ---- pruning ----

enum class PruneFloor { plane, three_flat };
enum class StopReason { case2, j_cap, none_found };
/// prune_first: look for a qualifying point before testing the stop bound.
enum class PruneOrder { prune_first, case2_first };

struct PruneStep {
    std::size_t removed = 0;    // original index
    std::size_t ordinary = 0;   // ordinary lines through it in the current set
    std::size_t special = 0;    // special lines through it in the current set
    std::size_t remaining = 0;  // size after removal
    std::size_t affine_dim = 0; // of the set after removal
    Rational lower_bound;       // bookkeeping bound on t2(V) after this step
};

struct PruneTrace {
    PruneFloor floor = PruneFloor::plane;
    std::vector<PruneStep> steps;
    StopReason stop = StopReason::none_found;
    std::size_t cap = 0;
    std::size_t t2 = 0;        // of the original set
    std::size_t t2_final = 0;  // of the set at the stop
    Rational lower_bound;      // accounting at the stop
    bool floor_reached = false;  // the set collapsed into a plane / 3-flat mid-run
};

struct PruneOptions {
    Rational c1 = default_c0() / 8;
    PruneOrder order = PruneOrder::prune_first;
};

struct PruneResult {
    PruneTrace trace;
    VerdictReport report;
};

PruneResult run_prune(const PointConfig& config, PruneFloor floor, const PruneOptions& opt = {});

std::string to_string(StopReason r);
std::string to_string(PruneFloor f);

// ---- generators for the checkers' test families ----

/// `lines` disjoint planted lines with `per_line` points each plus `extra`
/// generic points in Q^3; no other three points collinear.
PointConfig planted_lines(int lines, int per_line, int extra, std::uint64_t seed);
/// n points in Q^d with `on_flat` of them in the coordinate flat of dimension
/// flat_dim; no three collinear.
PointConfig generic_with_flat(int n, int on_flat, int flat_dim, int d, std::uint64_t seed);
/// a + b points on two generic 3-flats of Q^4; no three collinear.
PointConfig two_flats(int a, int b, std::uint64_t seed);
/// n points in Q^2: `lines` planted lines of `per_line` points, the rest
/// generic; no other three points collinear.
PointConfig random_real_planar(int n, std::uint64_t seed, int lines = 0, int per_line = 0);

}  // namespace olines
