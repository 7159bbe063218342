#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ainf/weight.hpp"
#include "ainf/word.hpp"

namespace ainf {

/// Segment [a, b] with a <= b; length b - a + 1.
struct Segment {
    int a = 0;
    int b = 0;

    Segment() = default;
    Segment(int a_, int b_);

    int length() const { return b - a + 1; }

    /// wt(L[a,b]) = eps_{b+1} - eps_a.
    Weight weight() const;

    friend bool operator==(const Segment& x, const Segment& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Segment& x, const Segment& y) { return !(x == y); }

    /// Total order: [a1,b1] > [a2,b2] if a1 > a2, or a1 = a2 and b1 > b2.
    friend bool operator>(const Segment& x, const Segment& y) {
        return x.a > y.a || (x.a == y.a && x.b > y.b);
    }
    friend bool operator<(const Segment& x, const Segment& y) { return y > x; }

    std::string str() const;
};

/// Reversed one-dimensional label with a > b. Kept opaque: the paper never
/// states its Zelevinsky multisegment, so only the weight is exposed.
struct RevSegment {
    int a = 0;
    int b = 0;

    RevSegment() = default;
    RevSegment(int a_, int b_);

    /// wt = eps_{a+1} - eps_b (it is an R(eps_b - eps_{a+1})-module label).
    Weight weight() const;

    friend bool operator==(const RevSegment& x, const RevSegment& y) { return x.a == y.a && x.b == y.b; }

    std::string str() const;
};

using CuspLabel = std::variant<Segment, RevSegment>;

Weight weight_of(const CuspLabel& c);
std::string str_of(const CuspLabel& c);

/// Ordered multisegment: segments sorted weakly descending. The empty
/// multisegment is the unit class.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs);

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    size_t size() const { return segs_.size(); }

    Weight weight() const;

    friend bool operator==(const Multisegment& x, const Multisegment& y) { return x.segs_ == y.segs_; }
    friend bool operator!=(const Multisegment& x, const Multisegment& y) { return !(x == y); }

    std::string str() const;

private:
    std::vector<Segment> segs_;
};

/// The multisegment of the simple module with m nested segments of length
/// ell: [j-ell+k, j+k-1] for k = m..1, sorted descending.
Multisegment w_label(int ell, int m, int j);

/// Label of the determinantial module attached to the prefix position p.
Multisegment det_label(std::int64_t p);

/// Sum over segments of (eps_{b+1} - eps_a).
Weight wt_of(const Multisegment& ms);

/// Label of the cuspidal quotient sitting between p and p_+. Even ell+m gives
/// the segment [j-ell+m+1, j+m]; odd gives the reversed label
/// (j-ell+m-1, j-ell), which degenerates to the one-letter segment at m = 1.
/// Every output is validated against the weight identity
/// wt(det(p_+)) = wt(cusp(p)) + wt(det(p)); a mismatch throws LabelRuleError.
CuspLabel cusp_label(std::int64_t p);

/// Label of the once-mutated determinantial module: the column index shifts
/// by +1 for even ell+m and by -1 for odd.
Multisegment mutated_det_label(std::int64_t p);

/// w_label with the column index shifted by r.
Multisegment shift_label(int ell, int m, int j, int r);

/// Concatenation re-sorted into canonical order; the label of the convolution
/// of strongly commuting classes.
Multisegment merge_commuting(const Multisegment& x, const Multisegment& y);

}  // namespace ainf
