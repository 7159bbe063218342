#include "ainf/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "ainf/errors.hpp"
#include "json.hpp"

namespace ainf {

Window Window::shrunk(int margin) const {
    // The ell direction of a truncation is exact (no boundary corruption),
    // so only the m and sum caps shrink.
    Window w = *this;
    const int big = 1 << 19;
    if (w.m_cap < big) w.m_cap -= margin;
    if (w.sum_cap < big) w.sum_cap -= margin;
    return w;
}

std::vector<Coord> Window::coords() const {
    std::vector<Coord> out;
    const int big = 1 << 19;
    const int lmax = std::min(ell_cap, sum_cap < big ? sum_cap - 1 : big);
    for (int ell = 1; ell <= lmax; ++ell) {
        const int mmax = std::min(m_cap, sum_cap < big ? sum_cap - ell : m_cap);
        for (int m = 1; m <= mmax; ++m) out.push_back(Coord{ell, m});
    }
    return out;
}

void Quiver::add_vertex(std::int64_t p, bool is_frozen) {
    vertices_.insert(p);
    if (is_frozen) frozen_.insert(p);
}

void Quiver::add_arrow(std::int64_t src, std::int64_t dst, int mult) {
    if (mult == 0) return;
    if (src == dst) throw std::invalid_argument("quiver loops are not allowed");
    auto key = std::make_pair(src, dst);
    if ((arrows_[key] += mult) == 0) arrows_.erase(key);
}

int Quiver::arrow_mult(std::int64_t src, std::int64_t dst) const {
    auto it = arrows_.find({src, dst});
    return it == arrows_.end() ? 0 : it->second;
}

std::int64_t Quiver::b_entry(std::int64_t i, std::int64_t j) const {
    return arrow_mult(i, j) - arrow_mult(j, i);
}

void Quiver::mutate(std::int64_t k) {
    if (!has_vertex(k)) throw std::invalid_argument("mutation at missing vertex");
    if (is_frozen(k)) throw std::invalid_argument("mutation at frozen vertex");

    std::map<std::int64_t, int> ins, outs;
    for (const auto& [key, mult] : arrows_) {
        if (key.second == k) ins[key.first] += mult;
        if (key.first == k) outs[key.second] += mult;
    }
    // Reverse all arrows at k.
    for (const auto& [i, mult] : ins) {
        arrows_.erase({i, k});
        arrows_[{k, i}] += mult;
        if (arrows_[{k, i}] == 0) arrows_.erase({k, i});
    }
    for (const auto& [j, mult] : outs) {
        arrows_.erase({k, j});
        arrows_[{j, k}] += mult;
        if (arrows_[{j, k}] == 0) arrows_.erase({j, k});
    }
    // Composite arrows i -> j for each path i -> k -> j, with 2-cycle
    // cancellation against existing arrows j -> i.
    for (const auto& [i, ai] : ins) {
        for (const auto& [j, bj] : outs) {
            if (i == j) throw std::invalid_argument("2-cycle through mutation vertex");
            if (is_frozen(i) && is_frozen(j)) continue;
            std::int64_t net = arrow_mult(i, j) - arrow_mult(j, i) + std::int64_t(ai) * bj;
            arrows_.erase({i, j});
            arrows_.erase({j, i});
            if (net > 0) arrows_[{i, j}] = static_cast<int>(net);
            if (net < 0) arrows_[{j, i}] = static_cast<int>(-net);
        }
    }
}

Quiver Quiver::opposite() const {
    Quiver q;
    q.vertices_ = vertices_;
    q.frozen_ = frozen_;
    for (const auto& [key, mult] : arrows_) q.arrows_[{key.second, key.first}] = mult;
    return q;
}

Quiver Quiver::truncated(int N) const {
    Quiver q;
    for (std::int64_t p : vertices_) {
        const Coord c = coord(p);
        if (c.ell > N) continue;
        q.add_vertex(p, c.ell == N || is_frozen(p));
    }
    for (const auto& [key, mult] : arrows_) {
        if (!q.has_vertex(key.first) || !q.has_vertex(key.second)) continue;
        if (coord(key.first).ell == N && coord(key.second).ell == N) continue;
        q.add_arrow(key.first, key.second, mult);
    }
    return q;
}

Quiver Quiver::drop_frozen() const {
    Quiver q;
    for (std::int64_t p : vertices_)
        if (!is_frozen(p)) q.add_vertex(p);
    for (const auto& [key, mult] : arrows_)
        if (q.has_vertex(key.first) && q.has_vertex(key.second)) q.add_arrow(key.first, key.second, mult);
    return q;
}

bool Quiver::has_loop_or_two_cycle() const {
    for (const auto& [key, mult] : arrows_) {
        if (key.first == key.second) return true;
        if (arrow_mult(key.second, key.first) > 0) return true;
    }
    return false;
}

std::string Quiver::to_dot() const {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (std::int64_t p : vertices_) {
        const Coord c = coord(p);
        os << "  v" << p << " [label=\"" << p << " (" << c.ell << "," << c.m << ")\""
           << (is_frozen(p) ? ", shape=box" : "") << "];\n";
    }
    for (const auto& [key, mult] : arrows_)
        for (int r = 0; r < mult; ++r) os << "  v" << key.first << " -> v" << key.second << ";\n";
    os << "}\n";
    return os.str();
}

std::string Quiver::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (std::int64_t p : vertices_) {
        const Coord c = coord(p);
        j["vertices"].push_back({{"p", p}, {"ell", c.ell}, {"m", c.m}, {"frozen", is_frozen(p)}});
    }
    j["arrows"] = nlohmann::json::array();
    for (const auto& [key, mult] : arrows_)
        for (int r = 0; r < mult; ++r) j["arrows"].push_back({key.first, key.second});
    return j.dump();
}

Quiver gls_quiver(std::int64_t prefix_len) {
    Quiver q;
    for (std::int64_t p = 1; p <= prefix_len; ++p) q.add_vertex(p);
    for (std::int64_t s = 1; s <= prefix_len; ++s) {
        const std::int64_t sm = p_minus(s);
        if (sm >= 1) q.add_arrow(s, sm);
        const std::int64_t sp = p_plus(s);
        const int js = jp(s);
        for (int dj : {-1, +1}) {
            // Candidates t with letter js + dj and s < t < s_+ < t_+. The
            // Cartan entry |a_{js, js+dj}| = 1 in type A-infinity.
            for (std::int64_t t = p_plus_j(s, js + dj); t < sp && t <= prefix_len;
                 t = p_plus_j(t, js + dj)) {
                if (p_plus(t) > sp) q.add_arrow(s, t);
            }
        }
    }
    return q;
}

Quiver initial_quiver(const Window& win) {
    Quiver q;
    for (const Coord& c : win.coords()) q.add_vertex(coord_inv(c));
    for (const Coord& c : win.coords()) {
        const std::int64_t p = coord_inv(c);
        const Coord ord = c.even_sum() ? Coord{c.ell + 1, c.m} : Coord{c.ell, c.m + 1};
        const Coord hor = c.even_sum() ? Coord{c.ell - 1, c.m} : Coord{c.ell, c.m - 1};
        if (win.contains(ord)) q.add_arrow(p, coord_inv(ord));
        if (win.contains(hor)) q.add_arrow(p, coord_inv(hor));
    }
    return q;
}

namespace {

std::vector<Coord> ascending_parity(const Window& win, int parity) {
    std::vector<Coord> out;
    for (const Coord& c : win.coords())
        if (c.sum() % 2 == parity) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Coord& a, const Coord& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return a.ell < b.ell;
    });
    return out;
}

std::vector<Coord> concat(std::vector<Coord> a, const std::vector<Coord>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Window restrict_ell(Window win, int ell_cap) {
    win.ell_cap = std::min(win.ell_cap, ell_cap);
    return win;
}

}  // namespace

std::vector<Coord> sigma_even(const Window& win) { return ascending_parity(win, 0); }
std::vector<Coord> sigma_odd(const Window& win) { return ascending_parity(win, 1); }
std::vector<Coord> sigma_plus(const Window& win) { return concat(sigma_even(win), sigma_odd(win)); }
std::vector<Coord> sigma_minus(const Window& win) { return concat(sigma_odd(win), sigma_even(win)); }

std::vector<Coord> sigma_even_n(int N, const Window& win) { return sigma_even(restrict_ell(win, N - 1)); }
std::vector<Coord> sigma_odd_n(int N, const Window& win) { return sigma_odd(restrict_ell(win, N - 1)); }
std::vector<Coord> sigma_plus_n(int N, const Window& win) { return sigma_plus(restrict_ell(win, N - 1)); }
std::vector<Coord> sigma_minus_n(int N, const Window& win) { return sigma_minus(restrict_ell(win, N - 1)); }

std::vector<Coord> sigma_hl(int N, const Window& win) {
    const Window w = restrict_ell(win, N - 1);
    const int big = 1 << 19;
    const int mmax = std::min(w.m_cap, w.sum_cap < big ? w.sum_cap - 1 : w.m_cap);
    std::vector<Coord> out;
    for (int block = 1; block + 1 <= mmax; ++block) {
        for (int s = block + 1; s <= mmax; ++s) {
            const int parity = (s - block) % 2 == 1 ? 1 : 0;
            for (int ell = 1; ell <= N - 1; ++ell) {
                if (ell % 2 != parity) continue;
                const Coord c{ell, s};
                if (w.contains(c)) out.push_back(c);
            }
        }
    }
    return out;
}

Quiver apply_schedule(Quiver q, const std::vector<Coord>& schedule) {
    for (const Coord& c : schedule) q.mutate(coord_inv(c));
    return q;
}

bool equals_labeled(const Quiver& q1, const Quiver& q2, const Window& win, int margin) {
    const Window trusted = win.shrunk(margin);
    auto inside = [&trusted](std::int64_t p) { return trusted.contains(coord(p)); };
    for (std::int64_t p : q1.vertices())
        if (inside(p) && !q2.has_vertex(p)) return false;
    for (std::int64_t p : q2.vertices())
        if (inside(p) && !q1.has_vertex(p)) return false;
    for (const auto& [key, mult] : q1.arrows())
        if (inside(key.first) && inside(key.second) && q2.arrow_mult(key.first, key.second) != mult)
            return false;
    for (const auto& [key, mult] : q2.arrows())
        if (inside(key.first) && inside(key.second) && q1.arrow_mult(key.first, key.second) != mult)
            return false;
    return true;
}

Verdict verify_gls_matches_initial(int cap_sum, int margin) {
    const Window win = Window::by_sum(cap_sum);
    const Quiver a = gls_quiver(a_val(cap_sum - 1));
    const Quiver b = initial_quiver(win);
    if (!equals_labeled(a, b, win, margin))
        return {false, "word quiver differs from closed form on trusted interior"};
    return {true, ""};
}

Verdict verify_reversing(int cap_sum, int margin) {
    const Window win = Window::by_sum(cap_sum);
    const Quiver q = initial_quiver(win);
    const Quiver target = q.opposite();
    if (!equals_labeled(apply_schedule(q, sigma_even(win)), target, win, margin))
        return {false, "even schedule does not reverse the quiver"};
    if (!equals_labeled(apply_schedule(q, sigma_odd(win)), target, win, margin))
        return {false, "odd schedule does not reverse the quiver"};
    return {true, ""};
}

Verdict verify_periodicity(int cap_sum, int margin) {
    const Window win = Window::by_sum(cap_sum);
    const Quiver q = initial_quiver(win);
    if (!equals_labeled(apply_schedule(q, sigma_plus(win)), q, win, margin))
        return {false, "plus schedule is not the identity on the trusted interior"};
    if (!equals_labeled(apply_schedule(q, sigma_minus(win)), q, win, margin))
        return {false, "minus schedule is not the identity on the trusted interior"};
    return {true, ""};
}

Verdict verify_periodicity_n(int N, int m_cap, int margin) {
    const Window win = Window::truncated(N - 1, m_cap);
    const Quiver q = initial_quiver(win);
    if (!equals_labeled(apply_schedule(q, sigma_plus_n(N, win)), q, win, margin))
        return {false, "truncated plus schedule is not the identity"};
    if (!equals_labeled(apply_schedule(q, sigma_minus_n(N, win)), q, win, margin))
        return {false, "truncated minus schedule is not the identity"};
    return {true, ""};
}

Verdict verify_in_out(int N, int m_cap, int margin) {
    Window win;
    win.ell_cap = N + 3;
    win.m_cap = m_cap;
    Quiver q = initial_quiver(win);
    const Window inner = win.shrunk(margin);
    for (const Coord& c : sigma_plus_n(N, inner)) {
        q.mutate(coord_inv(c));
        for (const auto& [key, mult] : q.arrows()) {
            const int l1 = coord(key.first).ell;
            const int l2 = coord(key.second).ell;
            if ((l1 <= N - 1 && l2 >= N + 1) || (l2 <= N - 1 && l1 >= N + 1))
                return {false, "arrow crosses the frozen column after mutation at (" +
                                   std::to_string(c.ell) + "," + std::to_string(c.m) + ")"};
        }
    }
    return {true, ""};
}

namespace {

// The Hernandez-Leclerc quiver for the 4-truncation, drawn on the same
// labels: verticals (ell, m) -> (ell, m-1); the middle column points at its
// row neighbours; the outer columns point diagonally up into the middle.
Quiver hl_target_4(const Window& win) {
    Quiver q;
    for (const Coord& c : win.coords()) q.add_vertex(coord_inv(c));
    for (const Coord& c : win.coords()) {
        const std::int64_t p = coord_inv(c);
        auto arrow_to = [&](int ell, int m) {
            const Coord d{ell, m};
            if (win.contains(d)) q.add_arrow(p, coord_inv(d));
        };
        if (c.m >= 2) arrow_to(c.ell, c.m - 1);
        if (c.ell == 2) {
            arrow_to(1, c.m);
            arrow_to(3, c.m);
        } else {
            arrow_to(2, c.m + 1);
        }
    }
    return q;
}

}  // namespace

Verdict verify_hl(int N, int m_cap, int margin) {
    if (N != 4) return {false, "reference pattern available only for the 4-truncation"};
    const Window win = Window::truncated(N - 1, m_cap);
    Quiver q = initial_quiver(win);
    q = apply_schedule(q, sigma_even_n(N, win));
    q = apply_schedule(q, sigma_hl(N, win));
    if (!equals_labeled(q, hl_target_4(win), win, margin))
        return {false, "HL schedule image differs from the reference pattern"};
    return {true, ""};
}

}  // namespace ainf
