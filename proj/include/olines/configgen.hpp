#pragma once

// Example and random point configurations.

#include "olines/cyclotomic.hpp"
#include "olines/exactgeom.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace olines {

enum class RecipeKind { fermat, fermat_affine, fermat_with_apex, coplanar_plus, random_generic, explicit_file };
enum class PlanePart { generic, fermat };

struct ConfigRecipe {
    RecipeKind kind = RecipeKind::fermat;
    int k = 3;
    int n = 0;
    int d = 2;
    std::uint64_t seed = 0;
    PlanePart plane = PlanePart::generic;
    std::string path;  // explicit_file
};

/// Throws std::invalid_argument when the parameters are not valid for the kind.
void validate(const ConfigRecipe& recipe);
PointConfig generate(const ConfigRecipe& recipe);

using ProjectivePoint = std::array<Cyclotomic, 3>;

/// [1:e:0], [e:0:1], [0:1:e] for e = -w, w running over the k-th roots of
/// unity. Three points from different families are collinear iff the product
/// of their e's is -1. For odd k these are the inflection points of
/// x^k + y^k + z^k = 0.
std::vector<ProjectivePoint> fermat_projective(int k);

/// Rows u, w, l of the projective map used for the chart; l is the line sent
/// to infinity and the affine image of P is (u.P / l.P, w.P / l.P).
struct AffineChart {
    std::array<std::array<long, 3>, 3> rows{};
};

/// First line (in order of max |coefficient|, then lexicographically) that
/// misses every point, completed to an invertible map by standard basis rows.
AffineChart choose_chart(const std::vector<ProjectivePoint>& points);
PointConfig apply_chart(const std::vector<ProjectivePoint>& points, const AffineChart& chart,
                        std::vector<std::string> labels = {});

PointConfig fermat(int k);
PointConfig fermat_affine(int k);
/// fermat_affine(k) placed in the plane z = 0 plus the apex (0,0,1) as the last point.
PointConfig fermat_with_apex(int k);
/// n - k points in the plane z = 0 and k points off it, in C^3.
PointConfig coplanar_plus(int n, int k, std::uint64_t seed, PlanePart plane = PlanePart::generic);
/// Rational points with no three collinear (for d >= 2), deterministic in seed.
PointConfig random_generic(int n, int d, std::uint64_t seed);

}  // namespace olines
