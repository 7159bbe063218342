#include "ainf/tnring.hpp"

#include <sstream>

#include "ainf/errors.hpp"

namespace ainf {

std::string ClassTN::str() const {
    if (zero) return "ZERO";
    if (ms.empty()) return "UNIT";
    return ms.str();
}

ClassTN omega_n(const Multisegment& ms, int N) {
    if (N < 2) throw std::invalid_argument("omega_n requires N >= 2");
    std::vector<Segment> kept;
    for (const Segment& s : ms.segments()) {
        if (s.length() > N) return ClassTN::make_zero();
        if (s.length() < N) kept.push_back(s);
    }
    return ClassTN{false, Multisegment(std::move(kept)), 0};
}

namespace {

void require_root_lattice(const Weight& w, const char* who) {
    if (!w.in_root_lattice()) throw std::invalid_argument(std::string(who) + ": not in the root lattice");
}

}  // namespace

std::int64_t b_form_n(const Weight& x, const Weight& y, int N) {
    require_root_lattice(x, "b_form_n");
    require_root_lattice(y, "b_form_n");
    const auto ex = x.eps_canonical();
    const auto ey = y.eps_canonical();
    if (ex.empty() || ey.empty()) return 0;
    const int xmin = ex.begin()->first;
    const int ymax = ey.rbegin()->first;
    auto at = [&ey](std::int64_t a) {
        auto it = ey.find(static_cast<int>(a));
        return it == ey.end() ? 0 : it->second;
    };
    std::int64_t total = 0;
    // (S^k x, y) = sum_a x(a) y(a + kN); supports overlap only while
    // xmin + kN <= ymax.
    for (std::int64_t k = 1; xmin + k * N <= ymax; ++k)
        for (const auto& [a, c] : ex) total += c * at(a + k * N);
    return -total;
}

std::int64_t c_a(int a, const Weight& beta, int N) {
    require_root_lattice(beta, "c_a");
    const auto eb = beta.eps_canonical();
    auto at = [&eb](int k) {
        auto it = eb.find(k);
        return it == eb.end() ? 0 : it->second;
    };
    return at(a) + at(a + N);
}

std::int64_t star_degree(const Weight& alpha, const Weight& beta, int N) {
    return b_form_n(alpha, beta, N);
}

std::string SignedMonomial::str() const {
    std::string s = sign < 0 ? "-" : "";
    if (z_exp == 0) return s + "1";
    if (z_exp == 1) return s + "z";
    return s + "z^" + std::to_string(z_exp);
}

SignedMonomial f_a_j(int a, int j, int N) {
    const int delta = (j == a + N) ? 1 : 0;
    const int in_range = (a <= j && j < a + N - 1) ? 1 : 0;
    return SignedMonomial{delta ? -1 : 1, -in_range - delta};
}

GradingClass grade_project(const Weight& beta, int N) {
    require_root_lattice(beta, "grade_project");
    GradingClass g;
    g.eps_bar.assign(static_cast<size_t>(N), 0);
    for (const auto& [a, c] : beta.eps_canonical()) {
        int r = a % N;
        if (r < 0) r += N;
        g.eps_bar[static_cast<size_t>(r)] += c;
    }
    return g;
}

std::string GradingClass::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < eps_bar.size(); ++i) {
        if (i) os << ",";
        os << eps_bar[i];
    }
    os << "]";
    return os.str();
}

std::int64_t pairing_n(int a, int b, int N) {
    int r = (a - b) % N;
    return r == 0 ? 1 : 0;
}

std::int64_t dual_star_degree(const Weight& alpha, const Weight& beta, int N) {
    const GradingClass ga = grade_project(alpha, N);
    const GradingClass gb = grade_project(beta, N);
    std::int64_t s = 0;
    for (size_t r = 0; r < ga.eps_bar.size(); ++r) s += ga.eps_bar[r] * gb.eps_bar[r];
    return s;
}

}  // namespace ainf
