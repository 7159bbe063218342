#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ainf/multiseg.hpp"
#include "ainf/weight.hpp"

namespace ainf {

/// Class of a simple object in the N-truncated localization: zero, or a
/// multisegment all of whose segment lengths are < N, with a half-q shift
/// tracked modulo an overall power of q.
struct ClassTN {
    bool zero = false;
    Multisegment ms;
    std::int64_t shift_halfq = 0;  // defined modulo a global power of q

    static ClassTN make_zero() { return ClassTN{true, {}, 0}; }
    bool is_unit() const { return !zero && ms.empty(); }

    friend bool operator==(const ClassTN& x, const ClassTN& y) {
        if (x.zero != y.zero) return false;
        if (x.zero) return true;
        return x.ms == y.ms;
    }

    std::string str() const;
};

/// Image of a multisegment class under the truncation: zero when a segment
/// is longer than N, otherwise the class with length-N segments stripped.
ClassTN omega_n(const Multisegment& ms, int N);

/// B_N(x, y) = -sum_{k>0} (S^k x, y) with S the shift alpha_a -> alpha_{a+N};
/// finite because far shifts have disjoint support. Inputs must lie in the
/// root lattice.
std::int64_t b_form_n(const Weight& x, const Weight& y, int N);

/// c_a(beta) = (eps_a + eps_{a+N}, beta) for beta in the root lattice.
std::int64_t c_a(int a, const Weight& beta, int N);

/// Degree of the twisted tensor product: X * Y = q^{B_N(alpha,beta)} X o Y.
std::int64_t star_degree(const Weight& alpha, const Weight& beta, int N);

/// f_{a,j}(z) = (-1)^{[j = a+N]} z^{-[a <= j < a+N-1] - [j = a+N]},
/// returned as (sign, z-exponent).
struct SignedMonomial {
    int sign = 1;
    int z_exp = 0;
    std::string str() const;
};
SignedMonomial f_a_j(int a, int j, int N);

/// Image of a root-lattice element in the quotient by eps_a - eps_{a+N}:
/// residue-indexed eps coefficients, exact equality.
struct GradingClass {
    std::vector<std::int64_t> eps_bar;  // index = residue mod N

    friend bool operator==(const GradingClass& x, const GradingClass& y) {
        return x.eps_bar == y.eps_bar;
    }
    std::string str() const;
};

GradingClass grade_project(const Weight& beta, int N);

/// (eps-bar_a, eps-bar_b)_N = [a == b mod N].
std::int64_t pairing_n(int a, int b, int N);

/// Degree in (X * Y)^* = q^{(alpha,beta)_N} Y^* * X^*: the residue pairing
/// of the projected classes.
std::int64_t dual_star_degree(const Weight& alpha, const Weight& beta, int N);

}  // namespace ainf
