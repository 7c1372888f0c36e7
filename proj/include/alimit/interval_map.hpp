#ifndef ALIMIT_INTERVAL_MAP_HPP
#define ALIMIT_INTERVAL_MAP_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "alimit/rational.hpp"

namespace alimit {

// Rational interval with independently open/closed endpoints. Cells own the
// half-open interval [lo, hi) (the last cell of a piece also owns hi), so the
// cells of a piece partition its parameter range point by point.
struct ParamInterval {
    Rat lo{0}, hi{0};
    bool lo_closed = true;
    bool hi_closed = true;

    bool empty() const {
        if (lo > hi) return true;
        if (lo == hi) return !(lo_closed && hi_closed);
        return false;
    }
    bool contains(const Rat& t) const {
        if (t < lo || t > hi) return false;
        if (t == lo && !lo_closed) return false;
        if (t == hi && !hi_closed) return false;
        return true;
    }
    bool intersects(const ParamInterval& o) const {
        Rat l = std::max(lo, o.lo);
        Rat h = std::min(hi, o.hi);
        if (l > h) return false;
        if (l < h) return true;
        // single shared point: both must close it
        bool l_ok = contains(l) && o.contains(l);
        return l_ok;
    }
    static ParamInterval closed(const Rat& a, const Rat& b) { return {a, b, true, true}; }
    static ParamInterval point(const Rat& a) { return {a, a, true, true}; }
};

// Continuous piecewise-linear self-map of an interval, given by breakpoints
// with strictly increasing x. Evaluation and interval images are exact on
// rationals.
class IntervalPL {
  public:
    IntervalPL() = default;
    IntervalPL(std::vector<std::pair<Rat, Rat>> breakpoints) : bp_(std::move(breakpoints)) {
        if (bp_.size() < 2) throw std::invalid_argument("IntervalPL needs >= 2 breakpoints");
        for (size_t i = 0; i + 1 < bp_.size(); ++i)
            if (!(bp_[i].first < bp_[i + 1].first))
                throw std::invalid_argument("IntervalPL breakpoints must increase");
    }

    const std::vector<std::pair<Rat, Rat>>& breakpoints() const { return bp_; }
    Rat domain_lo() const { return bp_.front().first; }
    Rat domain_hi() const { return bp_.back().first; }

    Rat operator()(const Rat& x) const {
        if (x < domain_lo() || x > domain_hi())
            throw std::domain_error("IntervalPL: argument outside domain");
        for (size_t i = 0; i + 1 < bp_.size(); ++i) {
            if (x <= bp_[i + 1].first) {
                const auto& [x0, y0] = bp_[i];
                const auto& [x1, y1] = bp_[i + 1];
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            }
        }
        return bp_.back().second;
    }

    // Largest |slope| over all segments.
    Rat slope_bound() const {
        Rat best{0};
        for (size_t i = 0; i + 1 < bp_.size(); ++i) {
            Rat s = (bp_[i + 1].second - bp_[i].second) / (bp_[i + 1].first - bp_[i].first);
            if (s < Rat(0)) s = -s;
            best = std::max(best, s);
        }
        return best;
    }

    // Exact image of an interval, with endpoint openness tracked: an image
    // endpoint is open iff its only preimages in the domain interval are at
    // excluded endpoints.
    ParamInterval image(const ParamInterval& dom) const {
        if (dom.empty()) return {Rat(1), Rat(0), true, true};
        // candidate extremes: endpoints of dom plus interior breakpoints
        struct Cand { Rat x; Rat y; bool excluded; };
        std::vector<Cand> cands;
        cands.push_back({dom.lo, (*this)(dom.lo), !dom.lo_closed});
        cands.push_back({dom.hi, (*this)(dom.hi), !dom.hi_closed});
        for (const auto& [x, y] : bp_)
            if (x > dom.lo && x < dom.hi) cands.push_back({x, y, false});
        Rat lo = cands[0].y, hi = cands[0].y;
        for (const auto& c : cands) { lo = std::min(lo, c.y); hi = std::max(hi, c.y); }
        bool lo_closed = false, hi_closed = false;
        for (const auto& c : cands) {
            if (c.y == lo && !c.excluded) lo_closed = true;
            if (c.y == hi && !c.excluded) hi_closed = true;
        }
        if (lo == hi) { lo_closed = hi_closed = (lo_closed || hi_closed); }
        return {lo, hi, lo_closed, hi_closed};
    }

    // Exact preimage of a value: all x with f(x) == y.
    std::vector<Rat> preimages(const Rat& y) const {
        std::vector<Rat> out;
        for (size_t i = 0; i + 1 < bp_.size(); ++i) {
            const auto& [x0, y0] = bp_[i];
            const auto& [x1, y1] = bp_[i + 1];
            if (y0 == y1) {
                if (y == y0) { out.push_back(x0); out.push_back(x1); }
                continue;
            }
            Rat lo = std::min(y0, y1), hi = std::max(y0, y1);
            if (y < lo || y > hi) continue;
            Rat x = x0 + (x1 - x0) * (y - y0) / (y1 - y0);
            out.push_back(x);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    std::vector<std::pair<Rat, Rat>> bp_;
};

// The 3-branch piecewise-linear map through (-1,-1), (-1/3,1), (1/3,-1), (1,1).
// Odd-symmetric, slope 3 everywhere, fixes -1, 0 and 1.
inline IntervalPL horseshoe3() {
    return IntervalPL({{Rat(-1), Rat(-1)},
                       {Rat(-1, 3), Rat(1)},
                       {Rat(1, 3), Rat(-1)},
                       {Rat(1), Rat(1)}});
}

}  // namespace alimit

#endif
