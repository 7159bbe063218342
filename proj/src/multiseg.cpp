#include "ainf/multiseg.hpp"

#include <algorithm>
#include <sstream>

#include "ainf/errors.hpp"

namespace ainf {

Segment::Segment(int a_, int b_) : a(a_), b(b_) {
    if (a > b) throw std::invalid_argument("segment requires a <= b");
}

Weight Segment::weight() const { return Weight::eps(b + 1) - Weight::eps(a); }

std::string Segment::str() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

RevSegment::RevSegment(int a_, int b_) : a(a_), b(b_) {
    if (a <= b) throw std::invalid_argument("reversed segment requires a > b");
}

Weight RevSegment::weight() const { return Weight::eps(a + 1) - Weight::eps(b); }

std::string RevSegment::str() const {
    return "r[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

Weight weight_of(const CuspLabel& c) {
    return std::visit([](const auto& s) { return s.weight(); }, c);
}

std::string str_of(const CuspLabel& c) {
    return std::visit([](const auto& s) { return s.str(); }, c);
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
    std::sort(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) { return x > y; });
}

Weight Multisegment::weight() const {
    Weight w;
    for (const auto& s : segs_) w = w + s.weight();
    return w;
}

std::string Multisegment::str() const {
    if (segs_.empty()) return "()";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < segs_.size(); ++i) {
        if (i) os << ",";
        os << segs_[i].str();
    }
    os << ")";
    return os.str();
}

Multisegment w_label(int ell, int m, int j) {
    if (ell < 1 || m < 1) throw std::invalid_argument("w_label requires ell, m >= 1");
    std::vector<Segment> segs;
    segs.reserve(static_cast<size_t>(m));
    for (int k = m; k >= 1; --k) segs.emplace_back(j - ell + k, j + k - 1);
    return Multisegment(std::move(segs));
}

Multisegment det_label(std::int64_t p) {
    const Coord c = coord(p);
    return w_label(c.ell, c.m, jp(p));
}

Weight wt_of(const Multisegment& ms) { return ms.weight(); }

CuspLabel cusp_label(std::int64_t p) {
    const Coord c = coord(p);
    const int j = jp(p);
    CuspLabel out;
    if (c.even_sum()) {
        out = Segment(j - c.ell + c.m + 1, j + c.m);
    } else {
        const int hi = j - c.ell + c.m - 1;
        const int lo = j - c.ell;
        // At m = 1 the reversed label collapses to the one-letter segment.
        if (hi == lo)
            out = Segment(lo, lo);
        else
            out = RevSegment(hi, lo);
    }
    // The paper leaves the odd-case boundary delicate; rather than trusting
    // the branch, every output is checked against the weight identity.
    const Weight expected = wt_of(det_label(p_plus(p))) - wt_of(det_label(p));
    if (weight_of(out) != expected)
        throw LabelRuleError("cusp_label(" + std::to_string(p) + "): weight identity violated for " +
                             str_of(out));
    return out;
}

Multisegment mutated_det_label(std::int64_t p) {
    const Coord c = coord(p);
    const int j = jp(p);
    return w_label(c.ell, c.m, c.even_sum() ? j + 1 : j - 1);
}

Multisegment shift_label(int ell, int m, int j, int r) { return w_label(ell, m, j + r); }

Multisegment merge_commuting(const Multisegment& x, const Multisegment& y) {
    std::vector<Segment> segs = x.segments();
    segs.insert(segs.end(), y.segments().begin(), y.segments().end());
    return Multisegment(std::move(segs));
}

}  // namespace ainf
