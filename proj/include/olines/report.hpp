#pragma once

// JSON and text renderings of run results.

#include "olines/exactgeom.hpp"
#include "olines/scalerank.hpp"
#include "olines/verify.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace olines {

using Json = nlohmann::ordered_json;

/// Everything needed to rerun a command; embedded in each report.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::string recipe;
    std::uint64_t seed = 0;
    std::string mode = "exact";  // exact | float
    double epsilon = 1e-6;
    std::size_t budget_cols = 24;
    unsigned retries = 64;
    unsigned threads = 1;
    Rational c0 = default_c0();
    Rational c1 = default_c0() / 8;
    std::string construction;
    std::string statement;
    std::vector<std::string> outputs;
};

/// Integers that fit in 64 bits become JSON numbers, others strings.
Json json_integer(const mpz_class& z);
std::string rational_text(const Rational& r);

Json to_json(const RunManifest& m);
Json to_json(const VerdictReport& r);
Json to_json(const PruneTrace& t);
Json to_json(const PropertySResult& p);

struct ScalingReport {
    std::size_t m = 0;
    std::size_t n = 0;
    ScalingResult scaling;
    GramSummary gram;
    std::optional<PropertySResult> property_s;
};

Json to_json(const ScalingReport& r);
Json stats_json(const IncidenceStructure& s, std::size_t dim, std::size_t affine);

/// "t2=0 t3=12" in increasing r.
std::string profile_text(const IncidenceStructure& s);
std::string verdict_text(const VerdictReport& r);
std::string prune_text(const PruneTrace& t);
std::string scaling_text(const ScalingReport& r);

}  // namespace olines
