#include "ainf/weight.hpp"

#include <cstdlib>
#include <sstream>

namespace ainf {

void Weight::add_lam(int i, std::int64_t c) {
    if (c == 0) return;
    auto it = lam_.find(i);
    if (it == lam_.end()) {
        lam_.emplace(i, c);
    } else if ((it->second += c) == 0) {
        lam_.erase(it);
    }
}

void Weight::add_eps(int a, std::int64_t c) {
    if (c == 0) return;
    auto it = eps_.find(a);
    if (it == eps_.end()) {
        eps_.emplace(a, c);
    } else if ((it->second += c) == 0) {
        eps_.erase(it);
    }
}

Weight Weight::lambda(int i) {
    Weight w;
    w.add_lam(i, 1);
    return w;
}

Weight Weight::eps(int a) {
    Weight w;
    w.add_eps(a, 1);
    return w;
}

Weight Weight::alpha(int j) {
    Weight w;
    w.add_eps(j, 1);
    w.add_eps(j + 1, -1);
    return w;
}

bool Weight::lam_free() const {
    std::int64_t sum = 0;
    for (const auto& [i, c] : lambda_expansion()) sum += c;
    return sum == 0;
}

bool Weight::in_root_lattice() const {
    std::int64_t sum = 0, moment = 0;
    for (const auto& [i, c] : lambda_expansion()) {
        sum += c;
        moment += c * i;
    }
    return sum == 0 && moment == 0;
}

std::int64_t Weight::eps_coeff(int a) const {
    const auto eps = eps_canonical();
    auto it = eps.find(a);
    return it == eps.end() ? 0 : it->second;
}

std::int64_t Weight::lam_coeff(int i) const {
    auto it = lam_.find(i);
    return it == lam_.end() ? 0 : it->second;
}

Weight Weight::operator+(const Weight& o) const {
    Weight w = *this;
    for (const auto& [i, c] : o.lam_) w.add_lam(i, c);
    for (const auto& [a, c] : o.eps_) w.add_eps(a, c);
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    Weight w = *this;
    for (const auto& [i, c] : o.lam_) w.add_lam(i, -c);
    for (const auto& [a, c] : o.eps_) w.add_eps(a, -c);
    return w;
}

Weight Weight::operator-() const { return Weight().operator-(*this); }

Weight Weight::scaled(std::int64_t c) const {
    Weight w;
    for (const auto& [i, v] : lam_) w.add_lam(i, c * v);
    for (const auto& [a, v] : eps_) w.add_eps(a, c * v);
    return w;
}

std::map<int, std::int64_t> Weight::lambda_expansion() const {
    std::map<int, std::int64_t> out = lam_;
    auto add = [&out](int i, std::int64_t c) {
        if (c == 0) return;
        auto it = out.find(i);
        if (it == out.end()) {
            out.emplace(i, c);
        } else if ((it->second += c) == 0) {
            out.erase(it);
        }
    };
    for (const auto& [a, c] : eps_) {
        add(a, c);
        add(a - 1, -c);
    }
    return out;
}

std::map<int, std::int64_t> Weight::eps_canonical() const {
    const auto lam = lambda_expansion();
    std::map<int, std::int64_t> eps;
    // eps_a coefficient of sum c_i Lambda_i is the suffix sum over i >= a;
    // it vanishes below the support exactly when the total sum is zero.
    std::int64_t suffix = 0;
    for (auto it = lam.rbegin(); it != lam.rend(); ++it) {
        const int hi = it->first;
        const int lo = std::next(it) == lam.rend() ? hi : std::next(it)->first + 1;
        suffix += it->second;
        if (suffix != 0)
            for (int a = lo; a <= hi; ++a) eps[a] = suffix;
    }
    if (suffix != 0) throw std::invalid_argument("weight is not in the eps span: " + str());
    return eps;
}

std::string Weight::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto term = [&](std::int64_t c, const std::string& sym) {
        if (c == 0) return;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t ac = std::abs(c);
        if (ac != 1) os << ac << "*";
        os << sym;
    };
    for (const auto& [i, c] : lam_) term(c, "L" + std::to_string(i));
    for (const auto& [a, c] : eps_) term(c, "e" + std::to_string(a));
    return os.str();
}

HalfInt pair(const Weight& x, const Weight& y) {
    const auto cx = x.lambda_expansion();
    const auto cy = y.lambda_expansion();
    // (Lambda_i, Lambda_j) = -|i-j|/2
    std::int64_t doubled = 0;
    for (const auto& [i, ci] : cx)
        for (const auto& [j, cj] : cy) doubled -= ci * cj * std::abs(std::int64_t(i) - std::int64_t(j));
    return HalfInt(doubled);
}

std::int64_t coroot(int k, const Weight& x) { return pair(Weight::alpha(k), x).as_integer(); }

Weight reflect(int j, const Weight& x) {
    Weight out;
    for (const auto& [a, c] : x.eps_) {
        const int b = (a == j) ? j + 1 : (a == j + 1 ? j : a);
        out.add_eps(b, c);
    }
    for (const auto& [i, c] : x.lam_) {
        if (i == j) {
            out.add_lam(j + 1, c);
            out.add_eps(j, -c);
        } else {
            out.add_lam(i, c);
        }
    }
    return out;
}

Weight apply_word(std::span<const int> word, const Weight& x) {
    Weight w = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(*it, w);
    return w;
}

}  // namespace ainf
