#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ainf/weight.hpp"

namespace ainf {

/// Coordinate (ell, m) of a mutation index p >= 1 under the bijection c.
struct Coord {
    int ell = 1;
    int m = 1;

    int sum() const { return ell + m; }
    bool even_sum() const { return (ell + m) % 2 == 0; }

    friend bool operator==(const Coord& a, const Coord& b) { return a.ell == b.ell && a.m == b.m; }
    friend bool operator!=(const Coord& a, const Coord& b) { return !(a == b); }
    friend bool operator<(const Coord& a, const Coord& b) {
        if (a.ell != b.ell) return a.ell < b.ell;
        return a.m < b.m;
    }
};

/// a(t) = t(2t+1) for t = doubled/2; equals doubled(doubled+1)/2, always an integer.
std::int64_t a_val(std::int64_t doubled);

/// Reflection index of the p-th letter of the fixed infinite reduced word.
int jp(std::int64_t p);

/// Same letter, computed from the coordinate closed form floor((ell-m+1)/2).
int jp_from_coord(std::int64_t p);

Coord coord(std::int64_t p);
std::int64_t coord_inv(const Coord& c);
inline std::int64_t coord_inv(int ell, int m) { return coord_inv(Coord{ell, m}); }

/// Nearest occurrence indices of the same / a given letter. p_+ always exists
/// on the infinite word; p_- returns 0 when there is no earlier occurrence,
/// and p_minus_j / p_plus_j follow the same sentinel conventions.
std::int64_t p_plus(std::int64_t p);
std::int64_t p_minus(std::int64_t p);
std::int64_t p_plus_j(std::int64_t p, int j);
std::int64_t p_minus_j(std::int64_t p, int j);

/// Finitely supported permutation of Z, as the action of a word prefix on
/// eps indices; s_i acts as the transposition (i, i+1).
class EpsPermutation {
public:
    int operator()(int x) const;
    int inverse(int x) const;

    /// Right-multiplies by s_i: this := this o s_i (apply s_i first).
    void append_reflection(int i);

    /// Coxeter length = number of inversions of the permutation.
    std::int64_t length() const;

    bool is_identity() const { return fwd_.empty(); }

    /// The finitely many x with perm(x) != x, in increasing order.
    std::vector<int> support() const;

private:
    std::map<int, int> fwd_;
};

/// Permutation of the prefix of length p (identity for p = 0).
EpsPermutation perm_of_prefix(std::int64_t p);

/// True iff the prefix of length p is reduced: every partial image of the
/// next simple root stays positive.
bool is_reduced_prefix(std::int64_t p);

/// Letters j_1 .. j_p of the prefix.
std::vector<int> prefix_word(std::int64_t p);

/// Closed form of the root w_{<=p-1}(alpha_{j_p}).
Weight beta_closed_form(std::int64_t p);

}  // namespace ainf
