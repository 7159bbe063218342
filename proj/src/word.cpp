#include "ainf/word.hpp"

#include <cassert>

#include "ainf/errors.hpp"

namespace ainf {

std::int64_t a_val(std::int64_t doubled) {
    assert(doubled >= 0);
    return doubled * (doubled + 1) / 2;
}

namespace {

// Largest integer t >= 0 with a(t) < p, for p >= 1; then a(t) < p <= a(t+1).
std::int64_t ring_t(std::int64_t p) {
    assert(p >= 1);
    std::int64_t t = 0;
    while (a_val(2 * (t + 1)) < p) ++t;
    return t;
}

}  // namespace

int jp(std::int64_t p) {
    const std::int64_t t = ring_t(p);
    const std::int64_t ahalf = a_val(2 * t + 1);  // a(t + 1/2)
    if (p <= ahalf + 1) return static_cast<int>(p - a_val(2 * t) - t - 1);
    return static_cast<int>(t + 2 + ahalf - p);
}

Coord coord(std::int64_t p) {
    const std::int64_t t = ring_t(p);
    const std::int64_t at = a_val(2 * t);
    const std::int64_t ahalf = a_val(2 * t + 1);
    if (p <= ahalf) return Coord{static_cast<int>(p - at), static_cast<int>(ahalf - p + 1)};
    if (p == ahalf + 1) return Coord{static_cast<int>(2 * t + 2), 1};
    return Coord{static_cast<int>(a_val(2 * t + 2) + 1 - p), static_cast<int>(p - ahalf)};
}

std::int64_t coord_inv(const Coord& c) {
    assert(c.ell >= 1 && c.m >= 1);
    const std::int64_t base = a_val(c.ell + c.m - 2);
    return base + (c.even_sum() ? c.ell : c.m);
}

int jp_from_coord(std::int64_t p) {
    const Coord c = coord(p);
    // floor((ell - m + 1) / 2), exact for negative values as well
    const int num = c.ell - c.m + 1;
    return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

std::int64_t p_plus(std::int64_t p) {
    const Coord c = coord(p);
    return c.even_sum() ? coord_inv({c.ell, c.m + 1}) : coord_inv({c.ell + 1, c.m});
}

std::int64_t p_minus(std::int64_t p) {
    const Coord c = coord(p);
    if (c.even_sum()) return c.ell >= 2 ? coord_inv({c.ell - 1, c.m}) : 0;
    return c.m >= 2 ? coord_inv({c.ell, c.m - 1}) : 0;
}

std::int64_t p_plus_j(std::int64_t p, int j) {
    // Letter j occupies the lattice strip ell - m = 2j (even sum) and
    // ell - m = 2j - 1 (odd sum); at most one occurrence per ring.
    for (std::int64_t k = p + 1;; ++k)
        if (jp(k) == j) return k;
}

std::int64_t p_minus_j(std::int64_t p, int j) {
    for (std::int64_t k = p - 1; k >= 1; --k)
        if (jp(k) == j) return k;
    return 0;
}

int EpsPermutation::operator()(int x) const {
    auto it = fwd_.find(x);
    return it == fwd_.end() ? x : it->second;
}

int EpsPermutation::inverse(int y) const {
    for (const auto& [a, b] : fwd_)
        if (b == y) return a;
    return y;
}

void EpsPermutation::append_reflection(int i) {
    // (this o s_i)(x) = this(s_i(x)); only images of i and i+1 move.
    const int yi = (*this)(i);
    const int yi1 = (*this)(i + 1);
    if (yi1 == i)
        fwd_.erase(i);
    else
        fwd_[i] = yi1;
    if (yi == i + 1)
        fwd_.erase(i + 1);
    else
        fwd_[i + 1] = yi;
}

std::vector<int> EpsPermutation::support() const {
    std::vector<int> out;
    out.reserve(fwd_.size());
    for (const auto& [x, y] : fwd_) out.push_back(x);
    return out;
}

std::int64_t EpsPermutation::length() const {
    if (fwd_.empty()) return 0;
    const int lo = fwd_.begin()->first;
    const int hi = fwd_.rbegin()->first;
    std::int64_t inv = 0;
    for (int a = lo; a <= hi; ++a)
        for (int b = a + 1; b <= hi; ++b)
            if ((*this)(a) > (*this)(b)) ++inv;
    return inv;
}

EpsPermutation perm_of_prefix(std::int64_t p) {
    EpsPermutation perm;
    for (std::int64_t k = 1; k <= p; ++k) perm.append_reflection(jp(k));
    return perm;
}

bool is_reduced_prefix(std::int64_t p) {
    EpsPermutation perm;
    for (std::int64_t k = 1; k <= p; ++k) {
        const int j = jp(k);
        // w_{<=k-1}(alpha_j) = eps_{w(j)} - eps_{w(j+1)} must be positive.
        if (perm(j) >= perm(j + 1)) return false;
        perm.append_reflection(j);
    }
    return true;
}

std::vector<int> prefix_word(std::int64_t p) {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(p));
    for (std::int64_t k = 1; k <= p; ++k) w.push_back(jp(k));
    return w;
}

Weight beta_closed_form(std::int64_t p) {
    const std::int64_t t = ring_t(p);
    const std::int64_t at = a_val(2 * t);
    const std::int64_t ahalf = a_val(2 * t + 1);
    if (p <= ahalf) {
        const int ti = static_cast<int>(t);
        return Weight::eps(-ti) - Weight::eps(static_cast<int>(t + 2 - p + at));
    }
    const int ti = static_cast<int>(t);
    return Weight::eps(static_cast<int>(-t - 1 + p - ahalf)) - Weight::eps(ti + 2);
}

}  // namespace ainf
