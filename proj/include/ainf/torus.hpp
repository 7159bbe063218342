#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ainf/errors.hpp"

namespace ainf {

/// Laurent polynomial in q^{1/2} with integer coefficients; keys are
/// exponents in half units (q^{k/2} has key k).
class Laurent {
public:
    Laurent() = default;
    static Laurent one() { return monomial(0, 1); }
    static Laurent monomial(std::int64_t halfq, std::int64_t coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

    bool nonnegative() const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent shifted(std::int64_t halfq) const;  // multiply by q^{halfq/2}

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Exact division in Z[q^{1/2}] up to a monomial shift; throws NonLaurent
    /// when the quotient does not exist.
    Laurent divided_by(const Laurent& o) const;

    std::string str() const;

private:
    std::map<std::int64_t, std::int64_t> terms_;
    void add_term(std::int64_t halfq, std::int64_t coeff);
};

/// Finite exponent vector over vertices; no zero entries stored.
class ExponentVector {
public:
    ExponentVector() = default;
    static ExponentVector unit(std::int64_t vertex) { return delta(vertex, 1); }
    static ExponentVector delta(std::int64_t vertex, std::int64_t e);

    std::int64_t at(std::int64_t vertex) const;
    const std::map<std::int64_t, std::int64_t>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::int64_t total_degree() const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;

    bool operator==(const ExponentVector& o) const { return entries_ == o.entries_; }

    /// Degree-lexicographic order: total degree first, then entry-wise by
    /// vertex index. Compatible with addition, which greedy division needs.
    bool operator<(const ExponentVector& o) const;

    std::string str() const;

private:
    std::map<std::int64_t, std::int64_t> entries_;
};

/// Skew-symmetric integer matrix with sparse storage; set(i, j, v) also
/// records the (j, i) entry as -v.
class LambdaMatrix {
public:
    void set(std::int64_t i, std::int64_t j, std::int64_t v);
    std::int64_t at(std::int64_t i, std::int64_t j) const;
    const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& upper() const { return upper_; }

    /// Sum_{i,j} a_i b_j lambda_{ij}, the commutation pairing of exponent
    /// vectors.
    std::int64_t skew_pairing(const ExponentVector& a, const ExponentVector& b) const;

private:
    // Stores only i < j entries.
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> upper_;
};

/// Element of the based quantum torus: a finite sum of bar-normalized
/// monomials X^a with Laurent coefficients.
class TorusElement {
public:
    TorusElement() = default;
    static TorusElement zero() { return {}; }
    static TorusElement unit() { return monomial(ExponentVector(), Laurent::one()); }
    static TorusElement variable(std::int64_t vertex) {
        return monomial(ExponentVector::unit(vertex), Laurent::one());
    }
    static TorusElement monomial(const ExponentVector& e, const Laurent& c);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Laurent>& terms() const { return terms_; }

    bool coefficients_nonnegative() const;

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement shifted(std::int64_t halfq) const;

    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<ExponentVector, Laurent> terms_;
    void add_term(const ExponentVector& e, const Laurent& c);
    friend TorusElement torus_mul(const TorusElement&, const TorusElement&, const LambdaMatrix&);
    friend TorusElement exact_divide(const TorusElement&, const TorusElement&, const LambdaMatrix&);
};

/// X^a X^b = q^{(1/2) sum a_i b_j lambda_{ij}} X^{a+b}, extended bilinearly.
TorusElement torus_mul(const TorusElement& x, const TorusElement& y, const LambdaMatrix& L);

/// Right division: the q with torus_mul(q, den) == num, by greedy
/// leading-term elimination in degree-lex order. Throws NonLaurent when the
/// remainder is nonzero.
TorusElement exact_divide(const TorusElement& num, const TorusElement& den, const LambdaMatrix& L);

}  // namespace ainf
