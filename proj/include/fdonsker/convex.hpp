#pragma once

#include <cstddef>
#include <vector>

namespace fdonsker {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(double s, const Vec& a);

/// Geometric dedup / hull-membership tolerance (absolute distance).
inline constexpr double kGeomTol = 1e-12;

/// Halfspace membership tolerance.
inline constexpr double kMembershipTol = 1e-9;

/// Non-empty compact convex subset of R^d, stored as the exact list of
/// extreme points of its convex hull (canonical form).
///
/// Canonical order: for d = 2 the vertices run counterclockwise starting
/// from the lexicographically smallest one; for d >= 3 they are sorted
/// lexicographically. Singletons and segments are valid polytopes.
class Polytope {
public:
    /// Convex hull of `points` in canonical form. Interior points and
    /// duplicates (within kGeomTol) are dropped.
    static Polytope from_points(std::vector<Vec> points);

    int dim() const { return dim_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const Vec& vertex(std::size_t i) const { return vertices_[i]; }
    bool is_singleton() const { return vertices_.size() == 1; }

    /// Support value sup_{a in P} <u, a> = max over vertices. `u` may be any
    /// finite vector, not only a unit one.
    double support(const Vec& u) const;

private:
    Polytope(int dim, std::vector<Vec> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {}

    int dim_;
    std::vector<Vec> vertices_;
};

inline Polytope canonicalize(std::vector<Vec> points) {
    return Polytope::from_points(std::move(points));
}

inline double support_value(const Polytope& p, const Vec& u) { return p.support(u); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale_set(double lambda, const Polytope& p);

/// Deterministic quadrature grid on the unit sphere S^{d-1}: unit directions
/// with positive weights summing to one.
class DirectionGrid {
public:
    /// Default construction per dimension: equally spaced angles for d = 2,
    /// a Fibonacci sphere for d = 3, normalized low-discrepancy (Halton)
    /// points for d > 3. Uniform weights 1/M throughout.
    static DirectionGrid uniform(int dim, int count);

    /// Explicit grid; directions must be unit length, weights positive and
    /// summing to one, at least 4 of them.
    DirectionGrid(int dim, std::vector<Vec> directions, std::vector<double> weights);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(directions_.size()); }
    const Vec& direction(int m) const { return directions_[static_cast<std::size_t>(m)]; }
    double weight(int m) const { return weights_[static_cast<std::size_t>(m)]; }
    const std::vector<Vec>& directions() const { return directions_; }
    const std::vector<double>& weights() const { return weights_; }

    bool operator==(const DirectionGrid& other) const;

private:
    int dim_;
    std::vector<Vec> directions_;
    std::vector<double> weights_;
};

/// Hausdorff distance through support functions.
///
/// d = 2: exact, via the merged normal fans of both polygons (the grid is
/// ignored). On each arc between consecutive fan breakpoints the difference
/// of support functions is a single sinusoid, so its extrema are the arc
/// endpoints plus at most two interior critical directions.
///
/// d > 2: max of |s_P - s_Q| over the grid directions, a lower bound that
/// converges as the grid is refined.
double hausdorff(const Polytope& p, const Polytope& q, const DirectionGrid& grid);

/// Exact 2-D Hausdorff distance (see above).
double hausdorff_2d(const Polytope& p, const Polytope& q);

/// A convex set described by support samples: x belongs iff
/// <u_m, x> <= value_m + kMembershipTol for every grid direction.
class HalfspaceOracle {
public:
    HalfspaceOracle(DirectionGrid grid, std::vector<double> values);

    const DirectionGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    bool contains(const Vec& x) const;

private:
    DirectionGrid grid_;
    std::vector<double> values_;
};

/// Intersection of the halfplanes <u_m, x> <= values_m as a canonical
/// polygon (d = 2 only). The grid directions must positively span R^2.
/// Throws EmptyIntersection when the constraints are inconsistent.
Polytope reconstruct_2d(const DirectionGrid& grid, const std::vector<double>& values);

/// Exact Euclidean distance from a point to a 2-D polytope (0 inside).
double point_polytope_distance_2d(const Vec& x, const Polytope& p);

}  // namespace fdonsker
