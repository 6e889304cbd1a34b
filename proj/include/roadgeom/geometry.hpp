#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <type_traits>

namespace roadgeom {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
using Point2d = Point2<double>;

template <typename Scalar>
struct Circle {
    Point2<Scalar> center = Point2<Scalar>::Zero();
    Scalar radius = Scalar(0);
};
using Circle2d = Circle<double>;

/// Euclidean distance. Symmetric bit-for-bit, so every module that compares lengths against
/// sums of half-lengths gets identical answers for the same pair.
template <typename Scalar>
inline Scalar distance(const Point2<Scalar>& a, const Point2<Scalar>& b) {
    const Scalar dx = a.x() - b.x();
    const Scalar dy = a.y() - b.y();
    return std::sqrt(dx * dx + dy * dy);
}

template <typename Scalar>
inline Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
    return a.x() * b.y() - a.y() * b.x();
}

namespace exact {

// Error-free transformations (Knuth two-sum, fma two-product) and expansion growth in the
// nonoverlapping representation; enough to evaluate a small sum of products exactly.

inline void two_sum(double a, double b, double& sum, double& err) {
    sum = a + b;
    const double bv = sum - a;
    const double av = sum - bv;
    err = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& prod, double& err) {
    prod = a * b;
    err = std::fma(a, b, -prod);
}

/// Adds `b` to the expansion `e[0..len)`; returns the new length. Zero components are dropped.
template <std::size_t N>
inline std::size_t grow_expansion(std::array<double, N>& e, std::size_t len, double b) {
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < len; ++i) {
        double sum;
        double err;
        two_sum(q, e[i], sum, err);
        q = sum;
        if (err != 0.0) e[out++] = err;
    }
    if (q != 0.0) e[out++] = q;
    return out;
}

/// Sign of ax*by - ax*cy - cx*by - ay*bx + ay*cx + cy*bx, evaluated exactly.
inline int orientation_sign(double ax, double ay, double bx, double by, double cx, double cy) {
    const std::array<std::array<double, 2>, 6> products = {{
        {ax, by}, {-ax, cy}, {-cx, by}, {-ay, bx}, {ay, cx}, {cy, bx},
    }};
    std::array<double, 16> e{};
    std::size_t len = 0;
    for (const auto& [p, q] : products) {
        double hi;
        double lo;
        two_product(p, q, hi, lo);
        len = grow_expansion(e, len, lo);
        len = grow_expansion(e, len, hi);
    }
    if (len == 0) return 0;
    return e[len - 1] > 0.0 ? 1 : -1;
}

}  // namespace exact

/// Sign of the turn a -> b -> c: +1 counter-clockwise, -1 clockwise, 0 collinear.
/// Exact for double via a filtered fallback; plain evaluation for other scalars.
template <typename Scalar>
inline int orientation(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c) {
    const Scalar left = (a.x() - c.x()) * (b.y() - c.y());
    const Scalar right = (a.y() - c.y()) * (b.x() - c.x());
    const Scalar det = left - right;
    if constexpr (std::is_same_v<Scalar, double>) {
        constexpr double kErrBound = 3.3306690738754716e-16;  // (3 + 16 eps) eps
        const double bound = kErrBound * (std::abs(left) + std::abs(right));
        if (det > bound) return 1;
        if (-det > bound) return -1;
        return exact::orientation_sign(a.x(), a.y(), b.x(), b.y(), c.x(), c.y());
    } else {
        return (det > Scalar(0)) - (det < Scalar(0));
    }
}

enum class ContactKind : std::uint8_t { none, proper, endpoint_touch, collinear_overlap };

template <typename Scalar>
struct SegmentContact {
    ContactKind kind = ContactKind::none;
    Point2<Scalar> point = Point2<Scalar>::Zero();
};

namespace detail {

template <typename Scalar>
inline bool lex_less(const Point2<Scalar>& a, const Point2<Scalar>& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

template <typename Scalar>
inline bool in_box(const Point2<Scalar>& p, const Point2<Scalar>& a, const Point2<Scalar>& b) {
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

}  // namespace detail

/// Classifies how closed segments p1p2 and q1q2 meet. `share_endpoint` marks segments that
/// share a graph vertex; for those only a positive-length collinear overlap is reported.
template <typename Scalar>
SegmentContact<Scalar> classify_segments(const Point2<Scalar>& p1, const Point2<Scalar>& p2,
                                         const Point2<Scalar>& q1, const Point2<Scalar>& q2,
                                         bool share_endpoint = false) {
    using detail::in_box;
    using detail::lex_less;
    SegmentContact<Scalar> out;
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // Collinear (or degenerate point segments): intersect lexicographic intervals.
        Point2<Scalar> a0 = p1, a1 = p2, b0 = q1, b1 = q2;
        if (lex_less(a1, a0)) std::swap(a0, a1);
        if (lex_less(b1, b0)) std::swap(b0, b1);
        const Point2<Scalar> lo = lex_less(a0, b0) ? b0 : a0;
        const Point2<Scalar> hi = lex_less(a1, b1) ? a1 : b1;
        if (lex_less(hi, lo)) return out;
        if (a0 == a1 || b0 == b1) {
            // A point segment lies on the other only if it is within its extent.
            const Point2<Scalar>& pt = (a0 == a1) ? a0 : b0;
            if (!in_box(pt, b0, b1) || !in_box(pt, a0, a1)) return out;
            if (share_endpoint) return out;
            out.kind = ContactKind::endpoint_touch;
            out.point = pt;
            return out;
        }
        if (lo == hi) {
            if (share_endpoint) return out;
            out.kind = ContactKind::endpoint_touch;
        } else {
            out.kind = ContactKind::collinear_overlap;
        }
        out.point = lo;
        return out;
    }
    if (share_endpoint) return out;

    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        if (o1 == o2 || o3 == o4) return out;
        const Point2<Scalar> d = p2 - p1;
        const Point2<Scalar> e = q2 - q1;
        Scalar t = cross<Scalar>(q1 - p1, e) / cross<Scalar>(d, e);
        t = std::clamp(t, Scalar(0), Scalar(1));
        out.kind = ContactKind::proper;
        out.point = p1 + t * d;
        return out;
    }

    // One endpoint lies on the other segment's supporting line.
    if (o1 * o2 > 0 || o3 * o4 > 0) return out;
    out.kind = ContactKind::endpoint_touch;
    if (o1 == 0 && in_box(q1, p1, p2)) {
        out.point = q1;
    } else if (o2 == 0 && in_box(q2, p1, p2)) {
        out.point = q2;
    } else if (o3 == 0 && in_box(p1, q1, q2)) {
        out.point = p1;
    } else if (o4 == 0 && in_box(p2, q1, q2)) {
        out.point = p2;
    } else {
        out.kind = ContactKind::none;
    }
    return out;
}

/// Strict counter-clockwise angular order of points around `center`, starting at the +x axis.
/// Ties (same ray) fall back to distance so the order is total.
template <typename Scalar>
struct AngularLess {
    Point2<Scalar> center;

    int half(const Point2<Scalar>& p) const {
        // 0 for angles in [0, pi), 1 for [pi, 2 pi).
        if (p.y() > center.y()) return 0;
        if (p.y() < center.y()) return 1;
        return p.x() >= center.x() ? 0 : 1;
    }

    bool operator()(const Point2<Scalar>& a, const Point2<Scalar>& b) const {
        const int ha = half(a);
        const int hb = half(b);
        if (ha != hb) return ha < hb;
        const int o = orientation(center, a, b);
        if (o != 0) return o > 0;
        return distance(center, a) < distance(center, b);
    }
};

/// Boundary points common to two circles: 0, 1 (tangent) or 2 points. The 2-point case is
/// ordered so the first point lies to the left of the center line a -> b.
template <typename Scalar>
struct CircleIntersection {
    int count = 0;
    std::array<Point2<Scalar>, 2> points{};
    bool tangent() const { return count == 1; }
};

template <typename Scalar>
CircleIntersection<Scalar> intersect_circles(const Circle<Scalar>& a, const Circle<Scalar>& b) {
    CircleIntersection<Scalar> out;
    const Scalar d = distance(a.center, b.center);
    if (d == Scalar(0)) return out;
    const Scalar sum = a.radius + b.radius;
    const Scalar diff = std::abs(a.radius - b.radius);
    if (d > sum || d < diff) return out;
    const Point2<Scalar> u = (b.center - a.center) / d;
    if (d == sum) {
        out.count = 1;
        out.points[0] = a.center + a.radius * u;
        return out;
    }
    if (d == diff) {
        out.count = 1;
        out.points[0] = a.radius >= b.radius ? Point2<Scalar>(a.center + a.radius * u)
                                             : Point2<Scalar>(a.center - a.radius * u);
        return out;
    }
    const Scalar along = (d * d + a.radius * a.radius - b.radius * b.radius) / (Scalar(2) * d);
    const Scalar h2 = a.radius * a.radius - along * along;
    const Point2<Scalar> foot = a.center + along * u;
    if (h2 <= Scalar(0)) {
        out.count = 1;
        out.points[0] = foot;
        return out;
    }
    const Scalar h = std::sqrt(h2);
    const Point2<Scalar> perp(-u.y(), u.x());
    out.count = 2;
    out.points[0] = foot + h * perp;
    out.points[1] = foot - h * perp;
    return out;
}

}  // namespace roadgeom
