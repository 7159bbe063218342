#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ainf/halfint.hpp"

namespace ainf {

/// Element of the type A-infinity weight lattice, stored as a finite integer
/// combination of fundamental weights Lambda_i and basis vectors eps_a.
/// Canonical form never stores a zero coefficient; equality is coefficient-wise.
///
/// The bilinear form is defined on the Lambda basis only, by
/// (Lambda_i, Lambda_j) = -|i-j|/2; eps and alpha are always expanded through
/// eps_a = Lambda_a - Lambda_{a-1}, so (eps_a, eps_b) = delta_{a,b} is a theorem
/// of the implementation, not an axiom.
class Weight {
public:
    Weight() = default;

    static Weight lambda(int i);              // Lambda_i
    static Weight eps(int a);                 // eps_a
    static Weight alpha(int j);               // alpha_j = eps_j - eps_{j+1}

    const std::map<int, std::int64_t>& lam_part() const { return lam_; }
    const std::map<int, std::int64_t>& eps_part() const { return eps_; }

    bool is_zero() const { return lambda_expansion().empty(); }

    /// True when the vector lies in the span of the eps basis, i.e. the
    /// Lambda-expansion coefficients sum to zero.
    bool lam_free() const;

    /// True when additionally the eps coefficients sum to zero (root lattice).
    bool in_root_lattice() const;

    std::int64_t eps_coeff(int a) const;
    std::int64_t lam_coeff(int i) const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(std::int64_t c) const;

    /// Equality of lattice vectors: the stored (lam, eps) split is not
    /// unique (eps_a = Lambda_a - Lambda_{a-1}), so comparison goes through
    /// the Lambda expansion.
    bool operator==(const Weight& o) const { return lambda_expansion() == o.lambda_expansion(); }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const {  // container order on the expansion
        return lambda_expansion() < o.lambda_expansion();
    }

    /// Full expansion into the Lambda basis (eps_a -> Lambda_a - Lambda_{a-1}).
    std::map<int, std::int64_t> lambda_expansion() const;

    /// Canonical eps coefficients of a lam-free vector (suffix sums of the
    /// Lambda expansion); throws when the vector is not lam-free.
    std::map<int, std::int64_t> eps_canonical() const;

    std::string str() const;

private:
    std::map<int, std::int64_t> lam_;
    std::map<int, std::int64_t> eps_;

    void add_lam(int i, std::int64_t c);
    void add_eps(int a, std::int64_t c);

    friend Weight reflect(int j, const Weight& x);
};

/// W-invariant bilinear form, computed in the Lambda expansion.
HalfInt pair(const Weight& x, const Weight& y);

/// <h_k, x> = (alpha_k, x); throws NonIntegral when the pairing is an odd half.
std::int64_t coroot(int k, const Weight& x);

/// Simple reflection s_j: swaps eps indices j, j+1 and sends
/// Lambda_j -> Lambda_{j+1} - eps_j, fixing every other Lambda.
Weight reflect(int j, const Weight& x);

/// Left-to-right composition: the word s_{i_1} ... s_{i_r} acts as
/// s_{i_1}(s_{i_2}(...(x))).
Weight apply_word(std::span<const int> word, const Weight& x);

}  // namespace ainf
