#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ainf/word.hpp"

namespace ainf {

/// Finite window of lattice coordinates: (ell, m) is kept when
/// ell <= ell_cap, m <= m_cap and ell + m <= sum_cap.
struct Window {
    int ell_cap = 1 << 20;
    int m_cap = 1 << 20;
    int sum_cap = 1 << 20;

    static Window by_sum(int cap) { return Window{1 << 20, 1 << 20, cap}; }
    static Window truncated(int N, int mcap) { return Window{N, mcap, 1 << 20}; }

    bool contains(const Coord& c) const {
        return c.ell >= 1 && c.m >= 1 && c.ell <= ell_cap && c.m <= m_cap && c.sum() <= sum_cap;
    }

    /// Window shrunk by a margin on the capped directions.
    Window shrunk(int margin) const;

    std::vector<Coord> coords() const;
};

/// Trusted-interior parameters: verdicts are read off vertices at least
/// `margin` away from every capped window boundary.
struct TrustRegion {
    int cap_sum = 0;
    int margin = 0;
};

/// Quiver on a finite set of mutation indices, each carrying its coordinate.
/// Arrows form a multiset; no loops, no 2-cycles, no arrows between frozen
/// vertices are ever created by construction or mutation.
class Quiver {
public:
    Quiver() = default;

    void add_vertex(std::int64_t p, bool is_frozen = false);
    void add_arrow(std::int64_t src, std::int64_t dst, int mult = 1);

    bool has_vertex(std::int64_t p) const { return vertices_.count(p) != 0; }
    bool is_frozen(std::int64_t p) const { return frozen_.count(p) != 0; }
    const std::set<std::int64_t>& vertices() const { return vertices_; }
    const std::set<std::int64_t>& frozen() const { return frozen_; }

    /// Arrow multiset as {(src, dst) -> multiplicity}, multiplicities > 0.
    const std::map<std::pair<std::int64_t, std::int64_t>, int>& arrows() const { return arrows_; }

    int arrow_mult(std::int64_t src, std::int64_t dst) const;

    /// b_{ij} = (#arrows i -> j) - (#arrows j -> i).
    std::int64_t b_entry(std::int64_t i, std::int64_t j) const;

    /// Quiver mutation at an exchangeable vertex: reverse arrows at k, add
    /// composite arrows through k, cancel opposite pairs. Arrows that would
    /// join two frozen vertices are dropped.
    void mutate(std::int64_t k);

    Quiver opposite() const;

    /// Restriction to vertices with ell <= N; arrows joining two vertices of
    /// the column ell = N are deleted and that column is frozen.
    Quiver truncated(int N) const;

    /// Full subquiver on the non-frozen vertices.
    Quiver drop_frozen() const;

    bool has_loop_or_two_cycle() const;

    std::string to_dot() const;
    std::string to_json() const;

private:
    std::set<std::int64_t> vertices_;
    std::set<std::int64_t> frozen_;
    std::map<std::pair<std::int64_t, std::int64_t>, int> arrows_;
};

/// Quiver of the reduced word prefix 1..p: ordinary arrows s -> t for
/// s < t < s_+ < t_+ with |j_s - j_t| = 1, horizontal arrows s -> s_-.
/// Occurrence indices are taken on the infinite word (no upper cap).
Quiver gls_quiver(std::int64_t prefix_len);

/// The same quiver from the closed form: a vertex (ell, m) with even sum has
/// an ordinary arrow to (ell+1, m) and a horizontal arrow to (ell-1, m); with
/// odd sum, to (ell, m+1) and (ell, m-1) respectively.
Quiver initial_quiver(const Window& win);

/// Mutation schedules as coordinate sequences, ascending in the order
/// (ell+m, ell).
std::vector<Coord> sigma_even(const Window& win);
std::vector<Coord> sigma_odd(const Window& win);
std::vector<Coord> sigma_plus(const Window& win);
std::vector<Coord> sigma_minus(const Window& win);
std::vector<Coord> sigma_plus_n(int N, const Window& win);
std::vector<Coord> sigma_minus_n(int N, const Window& win);
std::vector<Coord> sigma_even_n(int N, const Window& win);
std::vector<Coord> sigma_odd_n(int N, const Window& win);

/// Block schedule that carries the truncated initial quiver to the
/// Hernandez-Leclerc quiver: block k runs over rows m = k+1, k+2, ...
/// with column parity alternating odd, even, odd, ...
std::vector<Coord> sigma_hl(int N, const Window& win);

Quiver apply_schedule(Quiver q, const std::vector<Coord>& schedule);

/// Arrow-multiset equality restricted to arrows whose endpoints both lie in
/// the trusted interior of the window.
bool equals_labeled(const Quiver& q1, const Quiver& q2, const Window& win, int margin);

struct Verdict {
    bool pass = true;
    std::string detail;
};

Verdict verify_gls_matches_initial(int cap_sum, int margin);
Verdict verify_reversing(int cap_sum, int margin);
Verdict verify_periodicity(int cap_sum, int margin);
Verdict verify_periodicity_n(int N, int m_cap, int margin);
/// Runs the truncated schedule inside K^ex_N on a full-quiver window and
/// checks that no arrow ever joins ell <= N-1 to ell >= N+1.
Verdict verify_in_out(int N, int m_cap, int margin);
/// Compares the HL-schedule image of the truncated quiver against the
/// Hernandez-Leclerc quiver pattern (checked for N = 4 per the source figure).
Verdict verify_hl(int N, int m_cap, int margin);

}  // namespace ainf
