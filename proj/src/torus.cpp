#include "ainf/torus.hpp"

#include <sstream>

namespace ainf {

void Laurent::add_term(std::int64_t halfq, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(halfq);
    if (it == terms_.end()) {
        terms_.emplace(halfq, coeff);
    } else if ((it->second += coeff) == 0) {
        terms_.erase(it);
    }
}

Laurent Laurent::monomial(std::int64_t halfq, std::int64_t coeff) {
    Laurent l;
    l.add_term(halfq, coeff);
    return l;
}

bool Laurent::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent l = *this;
    for (const auto& [e, c] : o.terms_) l.add_term(e, c);
    return l;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent l = *this;
    for (const auto& [e, c] : o.terms_) l.add_term(e, -c);
    return l;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent l;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) l.add_term(e1 + e2, c1 * c2);
    return l;
}

Laurent Laurent::shifted(std::int64_t halfq) const {
    Laurent l;
    for (const auto& [e, c] : terms_) l.terms_.emplace(e + halfq, c);
    return l;
}

Laurent Laurent::divided_by(const Laurent& o) const {
    if (o.is_zero()) throw NonLaurent("division by zero coefficient");
    if (is_zero()) return {};
    // Long division from the top degree; exactness is required throughout.
    Laurent rem = *this;
    Laurent quot;
    const auto lead_den = *o.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto lead_num = *rem.terms_.rbegin();
        if (lead_num.second % lead_den.second != 0)
            throw NonLaurent("coefficient " + rem.str() + " not divisible by " + o.str());
        const std::int64_t e = lead_num.first - lead_den.first;
        const std::int64_t c = lead_num.second / lead_den.second;
        quot.add_term(e, c);
        rem = rem - o.shifted(e) * Laurent::monomial(0, c) /* o * c q^{e/2} */;
    }
    return quot;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const std::int64_t ac = c < 0 ? -c : c;
        if (ac != 1 || e == 0) os << ac;
        if (e != 0) {
            if (ac != 1) os << "*";
            os << "q";
            if (e != 2) {
                os << "^";
                if (e % 2 == 0) os << (e / 2);
                else os << "(" << e << "/2)";
            }
        }
    }
    return os.str();
}

ExponentVector ExponentVector::delta(std::int64_t vertex, std::int64_t e) {
    ExponentVector v;
    if (e != 0) v.entries_.emplace(vertex, e);
    return v;
}

std::int64_t ExponentVector::at(std::int64_t vertex) const {
    auto it = entries_.find(vertex);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t ExponentVector::total_degree() const {
    std::int64_t d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector v = *this;
    for (const auto& [k, e] : o.entries_) {
        auto it = v.entries_.find(k);
        if (it == v.entries_.end()) {
            if (e != 0) v.entries_.emplace(k, e);
        } else if ((it->second += e) == 0) {
            v.entries_.erase(it);
        }
    }
    return v;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    ExponentVector neg;
    for (const auto& [k, e] : o.entries_) neg.entries_.emplace(k, -e);
    return *this + neg;
}

bool ExponentVector::operator<(const ExponentVector& o) const {
    const std::int64_t d1 = total_degree();
    const std::int64_t d2 = o.total_degree();
    if (d1 != d2) return d1 < d2;
    // Entry-wise comparison over the union of supports, lowest vertex first;
    // missing entries read as zero.
    auto it1 = entries_.begin();
    auto it2 = o.entries_.begin();
    while (it1 != entries_.end() || it2 != o.entries_.end()) {
        const std::int64_t v1 = it1 == entries_.end() ? INT64_MAX : it1->first;
        const std::int64_t v2 = it2 == o.entries_.end() ? INT64_MAX : it2->first;
        if (v1 < v2) return it1->second < 0;
        if (v2 < v1) return it2->second > 0;
        if (it1->second != it2->second) return it1->second < it2->second;
        ++it1;
        ++it2;
    }
    return false;
}

std::string ExponentVector::str() const {
    if (entries_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : entries_) {
        if (!first) os << "*";
        first = false;
        os << "X" << v;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

void LambdaMatrix::set(std::int64_t i, std::int64_t j, std::int64_t v) {
    if (i == j) {
        if (v != 0) throw std::invalid_argument("diagonal of a skew matrix must vanish");
        return;
    }
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    if (v == 0)
        upper_.erase({i, j});
    else
        upper_[{i, j}] = v;
}

std::int64_t LambdaMatrix::at(std::int64_t i, std::int64_t j) const {
    if (i == j) return 0;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = upper_.find({i, j});
    if (it == upper_.end()) return 0;
    return flip ? -it->second : it->second;
}

std::int64_t LambdaMatrix::skew_pairing(const ExponentVector& a, const ExponentVector& b) const {
    std::int64_t s = 0;
    for (const auto& [i, ai] : a.entries())
        for (const auto& [j, bj] : b.entries()) s += ai * bj * at(i, j);
    return s;
}

TorusElement TorusElement::monomial(const ExponentVector& e, const Laurent& c) {
    TorusElement t;
    t.add_term(e, c);
    return t;
}

void TorusElement::add_term(const ExponentVector& e, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool TorusElement::coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (!c.nonnegative()) return false;
    return true;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    TorusElement t = *this;
    for (const auto& [e, c] : o.terms_) t.add_term(e, c);
    return t;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
    TorusElement t = *this;
    for (const auto& [e, c] : o.terms_) t.add_term(e, Laurent() - c);
    return t;
}

TorusElement TorusElement::shifted(std::int64_t halfq) const {
    TorusElement t;
    for (const auto& [e, c] : terms_) t.terms_.emplace(e, c.shifted(halfq));
    return t;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")" << (e.is_zero() ? "" : "*" + e.str());
    }
    return os.str();
}

TorusElement torus_mul(const TorusElement& x, const TorusElement& y, const LambdaMatrix& L) {
    TorusElement out;
    for (const auto& [a, ca] : x.terms_) {
        for (const auto& [b, cb] : y.terms_) {
            const std::int64_t twist = L.skew_pairing(a, b);  // half-q units
            out.add_term(a + b, (ca * cb).shifted(twist));
        }
    }
    return out;
}

TorusElement exact_divide(const TorusElement& num, const TorusElement& den, const LambdaMatrix& L) {
    if (den.is_zero()) throw NonLaurent("division by zero");
    TorusElement rem = num;
    TorusElement quot;
    const auto& lead_den = *den.terms_.rbegin();
    while (!rem.is_zero()) {
        const ExponentVector lead_e = rem.terms_.rbegin()->first;
        const Laurent lead_c = rem.terms_.rbegin()->second;
        const ExponentVector e = lead_e - lead_den.first;
        // Solve t * lead_den = lead_num for the coefficient of t.
        const std::int64_t twist = L.skew_pairing(e, lead_den.first);
        const Laurent c = lead_c.shifted(-twist).divided_by(lead_den.second);
        const TorusElement t = TorusElement::monomial(e, c);
        rem = rem - torus_mul(t, den, L);
        quot = quot + t;
        // Leading exponents strictly decrease, so this terminates.
        if (!rem.is_zero() && !(rem.terms_.rbegin()->first < lead_e))
            throw NonLaurent("leading term did not cancel");
    }
    return quot;
}

}  // namespace ainf
