#include "fdonsker/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fdonsker/errors.hpp"

namespace fdonsker {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

namespace {

bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

// z-component of the cross product (a-o) x (b-o); positive for a left turn.
double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain with a distance-based collinearity tolerance.
// Returns CCW order starting at the lexicographically smallest vertex.
std::vector<Vec> hull_2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    auto keeps_turn = [](const Vec& o, const Vec& a, const Vec& b) {
        // drop `a` when it lies within kGeomTol of the line o-b
        return cross2(o, a, b) > kGeomTol * dist(o, b);
    };

    std::vector<Vec> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && !keeps_turn(h[k - 2], h[k - 1], pts[i])) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper hull
        while (k >= lo && !keeps_turn(h[k - 2], h[k - 1], pts[i])) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point equals the first
    return h;
}

// --- min-norm point in a convex hull (Wolfe's algorithm), used to filter
// --- extreme points in dimension >= 3.

// Solves the (k+1)x(k+1) system by Gaussian elimination with partial
// pivoting; returns false on a (numerically) singular matrix.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-30) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        double s = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * rhs[c];
        rhs[r] = s / a[r][r];
    }
    return true;
}

// Min-norm point in the affine hull of the corral: minimize ||sum b_i v_i||^2
// subject to sum b_i = 1.
bool affine_min_norm(const std::vector<const Vec*>& corral, std::vector<double>& beta) {
    const std::size_t k = corral.size();
    std::vector<std::vector<double>> a(k + 1, std::vector<double>(k + 1, 0.0));
    std::vector<double> rhs(k + 1, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = 2.0 * dot(*corral[i], *corral[j]);
        a[i][k] = 1.0;
        a[k][i] = 1.0;
    }
    rhs[k] = 1.0;
    if (!solve_dense(a, rhs)) return false;
    beta.assign(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(k));
    return true;
}

// Squared distance from the origin to conv(pts).
double min_norm_sq(const std::vector<Vec>& pts, double scale) {
    const std::size_t n = pts.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (dot(pts[i], pts[i]) < dot(pts[start], pts[start])) start = i;

    std::vector<std::size_t> corral{start};
    std::vector<double> lambda{1.0};
    Vec x = pts[start];
    const double sup_tol = 1e-14 * std::max(1.0, scale * scale);

    const std::size_t max_outer = 50 + 10 * n;
    for (std::size_t outer = 0; outer < max_outer; ++outer) {
        const double xx = dot(x, x);
        std::size_t best = 0;
        double best_val = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            const double v = dot(x, pts[j]);
            if (v < best_val) {
                best_val = v;
                best = j;
            }
        }
        if (best_val >= xx - sup_tol) return xx;
        if (std::find(corral.begin(), corral.end(), best) != corral.end()) return xx;

        corral.push_back(best);
        lambda.push_back(0.0);

        for (std::size_t minor = 0; minor <= n + 2; ++minor) {
            std::vector<const Vec*> pts_in;
            pts_in.reserve(corral.size());
            for (std::size_t idx : corral) pts_in.push_back(&pts[idx]);
            std::vector<double> beta;
            if (!affine_min_norm(pts_in, beta)) return dot(x, x);

            bool interior = true;
            for (double b : beta)
                if (b < 1e-12) {
                    interior = false;
                    break;
                }
            if (interior) {
                lambda = beta;
                break;
            }
            double theta = 1.0;
            for (std::size_t i = 0; i < beta.size(); ++i)
                if (beta[i] < 1e-12 && lambda[i] > beta[i])
                    theta = std::min(theta, lambda[i] / (lambda[i] - beta[i]));
            for (std::size_t i = 0; i < lambda.size(); ++i)
                lambda[i] += theta * (beta[i] - lambda[i]);
            for (std::size_t i = lambda.size(); i-- > 0;)
                if (lambda[i] <= 1e-12) {
                    lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
                    corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(i));
                }
        }

        x.assign(x.size(), 0.0);
        for (std::size_t i = 0; i < corral.size(); ++i)
            for (std::size_t c = 0; c < x.size(); ++c) x[c] += lambda[i] * pts[corral[i]][c];
    }
    return dot(x, x);
}

// Extreme points for d >= 3: keep p iff dist(p, conv(rest)) exceeds kGeomTol.
std::vector<Vec> extreme_points_nd(const std::vector<Vec>& pts, double scale) {
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    const double thresh = kGeomTol * std::max(1.0, scale);
    std::vector<Vec> kept;
    std::vector<Vec> rest;
    rest.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        rest.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(sub(pts[j], pts[i]));
        if (min_norm_sq(rest, 2.0 * scale) > thresh * thresh) kept.push_back(pts[i]);
    }
    return kept;
}

// Inverse standard normal CDF (Acklam's rational approximation, ~1e-9).
double inv_norm_cdf(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double halton(std::size_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % static_cast<std::size_t>(base));
        index /= static_cast<std::size_t>(base);
    }
    return r;
}

}  // namespace

Polytope Polytope::from_points(std::vector<Vec> points) {
    if (points.empty()) throw EmptyInput("canonicalize: empty point list");
    const std::size_t d = points[0].size();
    if (d < 2) throw DimensionMismatch("canonicalize: dimension must be at least 2");
    double scale = 0.0;
    for (const Vec& p : points) {
        if (p.size() != d) throw DimensionMismatch("canonicalize: inconsistent point dimensions");
        if (!all_finite(p)) throw InvalidArgument("canonicalize: non-finite coordinate");
        scale = std::max(scale, norm(p));
    }

    // dedup within kGeomTol
    std::sort(points.begin(), points.end(), lex_less);
    std::vector<Vec> uniq;
    uniq.reserve(points.size());
    for (const Vec& p : points) {
        bool dup = false;
        for (const Vec& q : uniq)
            if (dist(p, q) <= kGeomTol) {
                dup = true;
                break;
            }
        if (!dup) uniq.push_back(p);
    }

    std::vector<Vec> verts;
    if (uniq.size() == 1) {
        verts = std::move(uniq);
    } else if (d == 2) {
        verts = hull_2d(std::move(uniq));
    } else {
        verts = extreme_points_nd(uniq, scale);
        std::sort(verts.begin(), verts.end(), lex_less);
    }
    return Polytope(static_cast<int>(d), std::move(verts));
}

double Polytope::support(const Vec& u) const {
    if (static_cast<int>(u.size()) != dim_)
        throw DimensionMismatch("support_value: direction dimension mismatch");
    if (!all_finite(u)) throw InvalidArgument("support_value: non-finite direction");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& v : vertices_) best = std::max(best, dot(u, v));
    return best;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("minkowski_sum: dimension mismatch");
    std::vector<Vec> sums;
    sums.reserve(p.vertex_count() * q.vertex_count());
    for (const Vec& a : p.vertices())
        for (const Vec& b : q.vertices()) sums.push_back(add(a, b));
    return Polytope::from_points(std::move(sums));
}

Polytope scale_set(double lambda, const Polytope& p) {
    if (!std::isfinite(lambda)) throw InvalidArgument("scale_set: non-finite factor");
    std::vector<Vec> pts;
    pts.reserve(p.vertex_count());
    for (const Vec& v : p.vertices()) pts.push_back(scaled(lambda, v));
    return Polytope::from_points(std::move(pts));
}

DirectionGrid::DirectionGrid(int dim, std::vector<Vec> directions, std::vector<double> weights)
    : dim_(dim), directions_(std::move(directions)), weights_(std::move(weights)) {
    if (dim_ < 2) throw InvalidArgument("DirectionGrid: dimension must be at least 2");
    if (directions_.size() < 4) throw InvalidArgument("DirectionGrid: need at least 4 directions");
    if (weights_.size() != directions_.size())
        throw InvalidArgument("DirectionGrid: weights/directions size mismatch");
    double wsum = 0.0;
    for (const Vec& u : directions_) {
        if (static_cast<int>(u.size()) != dim_)
            throw DimensionMismatch("DirectionGrid: direction dimension mismatch");
        if (std::fabs(norm(u) - 1.0) > 1e-12)
            throw InvalidArgument("DirectionGrid: direction is not unit length");
    }
    for (double w : weights_) {
        if (!(w > 0.0)) throw InvalidArgument("DirectionGrid: weights must be positive");
        wsum += w;
    }
    if (std::fabs(wsum - 1.0) > 1e-12)
        throw InvalidArgument("DirectionGrid: weights must sum to one");
}

DirectionGrid DirectionGrid::uniform(int dim, int count) {
    if (count < 4) throw InvalidArgument("DirectionGrid: need at least 4 directions");
    if (dim < 2) throw InvalidArgument("DirectionGrid: dimension must be at least 2");
    std::vector<Vec> dirs;
    dirs.reserve(static_cast<std::size_t>(count));
    if (dim == 2) {
        for (int m = 0; m < count; ++m) {
            const double th = 2.0 * std::numbers::pi * m / count;
            dirs.push_back({std::cos(th), std::sin(th)});
        }
    } else if (dim == 3) {
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int m = 0; m < count; ++m) {
            const double z = 1.0 - (2.0 * m + 1.0) / count;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden_angle * m;
            dirs.push_back({r * std::cos(phi), r * std::sin(phi), z});
        }
    } else {
        static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
        if (dim > static_cast<int>(std::size(primes)))
            throw InvalidArgument("DirectionGrid: dimension too large for the Halton grid");
        for (int m = 0; m < count; ++m) {
            Vec g(static_cast<std::size_t>(dim));
            for (int c = 0; c < dim; ++c) {
                double h = halton(static_cast<std::size_t>(m + 1), primes[c]);
                h = std::min(std::max(h, 1e-12), 1.0 - 1e-12);
                g[static_cast<std::size_t>(c)] = inv_norm_cdf(h);
            }
            const double n = norm(g);
            dirs.push_back(scaled(1.0 / n, g));
        }
    }
    std::vector<double> w(static_cast<std::size_t>(count), 1.0 / count);
    return DirectionGrid(dim, std::move(dirs), std::move(w));
}

bool DirectionGrid::operator==(const DirectionGrid& other) const {
    return dim_ == other.dim_ && directions_ == other.directions_ && weights_ == other.weights_;
}

namespace {

// Outward edge-normal angles of a canonical polygon, in [0, 2pi).
void collect_normal_angles(const Polytope& p, std::vector<double>& angles) {
    const auto& v = p.vertices();
    if (v.size() < 2) return;
    const std::size_t n = v.size();
    const std::size_t edges = (n == 2) ? 2 : n;  // a segment has two opposite normals
    for (std::size_t i = 0; i < edges; ++i) {
        const Vec& a = v[i % n];
        const Vec& b = v[(i + 1) % n];
        const double ex = b[0] - a[0], ey = b[1] - a[1];
        double th = std::atan2(-ex, ey);  // angle of outward normal (ey, -ex)
        if (th < 0.0) th += 2.0 * std::numbers::pi;
        angles.push_back(th);
    }
}

const Vec& argmax_vertex(const Polytope& p, double ux, double uy) {
    const auto& vs = p.vertices();
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const double val = ux * vs[i][0] + uy * vs[i][1];
        if (val > best_val) {
            best_val = val;
            best = i;
        }
    }
    return vs[best];
}

}  // namespace

double hausdorff_2d(const Polytope& p, const Polytope& q) {
    if (p.dim() != 2 || q.dim() != 2) throw DimensionMismatch("hausdorff_2d: expects d = 2");
    constexpr double two_pi = 2.0 * std::numbers::pi;

    std::vector<double> angles;
    collect_normal_angles(p, angles);
    collect_normal_angles(q, angles);
    if (angles.empty())  // two singletons
        return dist(p.vertex(0), q.vertex(0));
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
                 angles.end());
    if (angles.size() > 1 && (angles.front() + two_pi - angles.back()) < 1e-13) angles.pop_back();

    double best = 0.0;
    const std::size_t nb = angles.size();
    for (std::size_t b = 0; b < nb; ++b) {
        const double ta = angles[b];
        double tb = angles[(b + 1) % nb];
        if (tb <= ta) tb += two_pi;
        const double tm = 0.5 * (ta + tb);

        // active vertices are constant on the open arc
        const Vec& vp = argmax_vertex(p, std::cos(tm), std::sin(tm));
        const Vec& vq = argmax_vertex(q, std::cos(tm), std::sin(tm));
        const double dx = vp[0] - vq[0], dy = vp[1] - vq[1];

        auto eval = [&](double th) { return std::fabs(dx * std::cos(th) + dy * std::sin(th)); };
        best = std::max(best, std::max(eval(ta), eval(tb)));

        // interior extrema of the arc's sinusoid, value +-|vp - vq|
        const double r = std::hypot(dx, dy);
        if (r > 0.0) {
            double phi = std::atan2(dy, dx);
            for (int half = 0; half < 2; ++half) {
                double t = phi + half * std::numbers::pi;
                while (t < ta) t += two_pi;
                while (t >= ta + two_pi) t -= two_pi;
                if (t <= tb) best = std::max(best, r);
            }
        }
    }
    return best;
}

double hausdorff(const Polytope& p, const Polytope& q, const DirectionGrid& grid) {
    if (p.dim() != q.dim()) throw DimensionMismatch("hausdorff: dimension mismatch");
    if (grid.dim() != p.dim()) throw DimensionMismatch("hausdorff: grid dimension mismatch");
    if (p.dim() == 2) return hausdorff_2d(p, q);
    double best = 0.0;
    for (int m = 0; m < grid.size(); ++m)
        best = std::max(best, std::fabs(p.support(grid.direction(m)) - q.support(grid.direction(m))));
    return best;
}

HalfspaceOracle::HalfspaceOracle(DirectionGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.size()))
        throw InvalidArgument("HalfspaceOracle: one value per direction required");
    for (double v : values_)
        if (!std::isfinite(v)) throw InvalidArgument("HalfspaceOracle: non-finite support value");
}

bool HalfspaceOracle::contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != grid_.dim())
        throw DimensionMismatch("contains: point dimension mismatch");
    for (int m = 0; m < grid_.size(); ++m)
        if (dot(grid_.direction(m), x) > values_[static_cast<std::size_t>(m)] + kMembershipTol)
            return false;
    return true;
}

Polytope reconstruct_2d(const DirectionGrid& grid, const std::vector<double>& values) {
    if (grid.dim() != 2) throw DimensionMismatch("reconstruct_2d: expects d = 2");
    const std::size_t m = static_cast<std::size_t>(grid.size());
    if (values.size() != m) throw InvalidArgument("reconstruct_2d: one value per direction required");
    double vmax = 1.0;
    for (double v : values) {
        if (!std::isfinite(v)) throw InvalidArgument("reconstruct_2d: non-finite support value");
        vmax = std::max(vmax, std::fabs(v));
    }

    // positively spanning directions keep the intersection bounded
    std::vector<double> angles(m);
    for (std::size_t i = 0; i < m; ++i)
        angles[i] = std::atan2(grid.direction(static_cast<int>(i))[1],
                               grid.direction(static_cast<int>(i))[0]);
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (std::size_t i = 1; i < m; ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
    if (gap >= std::numbers::pi - 1e-12)
        throw InvalidArgument("reconstruct_2d: directions do not positively span R^2");

    const double feas_tol = 1e-10 * vmax;
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& ui = grid.direction(static_cast<int>(i));
        for (std::size_t j = i + 1; j < m; ++j) {
            const Vec& uj = grid.direction(static_cast<int>(j));
            const double det = ui[0] * uj[1] - ui[1] * uj[0];
            if (std::fabs(det) < 1e-12) continue;
            const double x = (values[i] * uj[1] - values[j] * ui[1]) / det;
            const double y = (ui[0] * values[j] - uj[0] * values[i]) / det;
            bool feasible = std::isfinite(x) && std::isfinite(y);
            for (std::size_t k = 0; feasible && k < m; ++k) {
                const Vec& uk = grid.direction(static_cast<int>(k));
                if (uk[0] * x + uk[1] * y > values[k] + feas_tol) feasible = false;
            }
            if (feasible) candidates.push_back({x, y});
        }
    }
    if (candidates.empty())
        throw EmptyIntersection("reconstruct_2d: inconsistent support values");
    return Polytope::from_points(std::move(candidates));
}

namespace {

double point_segment_distance(const Vec& x, const Vec& a, const Vec& b) {
    const double abx = b[0] - a[0], aby = b[1] - a[1];
    const double len2 = abx * abx + aby * aby;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((x[0] - a[0]) * abx + (x[1] - a[1]) * aby) / len2, 0.0, 1.0);
    const double px = a[0] + t * abx, py = a[1] + t * aby;
    return std::hypot(x[0] - px, x[1] - py);
}

}  // namespace

double point_polytope_distance_2d(const Vec& x, const Polytope& p) {
    if (p.dim() != 2 || x.size() != 2)
        throw DimensionMismatch("point_polytope_distance_2d: expects d = 2");
    const auto& v = p.vertices();
    if (v.size() == 1) return dist(x, v[0]);
    if (v.size() >= 3) {
        bool inside = true;
        for (std::size_t i = 0; i < v.size() && inside; ++i) {
            const Vec& a = v[i];
            const Vec& b = v[(i + 1) % v.size()];
            if (cross2(a, b, x) < 0.0) inside = false;
        }
        if (inside) return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    const std::size_t edges = (v.size() == 2) ? 1 : v.size();
    for (std::size_t i = 0; i < edges; ++i)
        best = std::min(best, point_segment_distance(x, v[i], v[(i + 1) % v.size()]));
    return best;
}

}  // namespace fdonsker
