#ifndef ALIMIT_GEOMETRY_HPP
#define ALIMIT_GEOMETRY_HPP

#include <cmath>
#include <vector>

#include "alimit/rational.hpp"

namespace alimit {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// A planar point with exact rational coordinates. Landmark points (arc
// endpoints, chain junctions, the countable-counterexample point cloud) are
// all rational; equality on them is exact.
struct ExactPt {
    Rat x{0};
    Rat y{0};

    bool operator==(const ExactPt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ExactPt& o) const { return !(*this == o); }
    bool operator<(const ExactPt& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
    Vec2 approx() const { return {to_double(x), to_double(y)}; }
};

inline double dist(const ExactPt& a, const ExactPt& b) {
    return dist(a.approx(), b.approx());
}

// Distance from a point to a polyline (sequence of segments).
inline double dist_to_polyline(const Vec2& p, const std::vector<Vec2>& poly) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    double best = dist(p, poly.front());
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i], b = poly[i + 1];
        double vx = b.x - a.x, vy = b.y - a.y;
        double len2 = vx * vx + vy * vy;
        double t = 0.0;
        if (len2 > 0) t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
        Vec2 q{a.x + t * vx, a.y + t * vy};
        best = std::min(best, dist(p, q));
    }
    return best;
}

}  // namespace alimit

#endif
