#include "ainf/seed.hpp"

#include <algorithm>
#include <cassert>

#include "ainf/errors.hpp"
#include "ainf/tnring.hpp"

namespace ainf {

void ExchangeMatrix::set(std::int64_t i, std::int64_t j, std::int64_t v) {
    if (i == j) {
        if (v != 0) throw std::invalid_argument("diagonal exchange entry must vanish");
        return;
    }
    if (v == 0) {
        entries_.erase({i, j});
        entries_.erase({j, i});
        return;
    }
    entries_[{i, j}] = v;
    entries_[{j, i}] = -v;
}

std::int64_t ExchangeMatrix::at(std::int64_t i, std::int64_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::map<std::int64_t, std::int64_t> ExchangeMatrix::column(std::int64_t j) const {
    std::map<std::int64_t, std::int64_t> col;
    for (const auto& [key, v] : entries_)
        if (key.second == j && v != 0) col.emplace(key.first, v);
    return col;
}

ExchangeMatrix ExchangeMatrix::from_quiver(const Quiver& q) {
    ExchangeMatrix B;
    for (const auto& [key, mult] : q.arrows()) {
        const std::int64_t b = q.b_entry(key.first, key.second);
        if (b > 0) B.set(key.first, key.second, b);
    }
    return B;
}

namespace {

Weight prefix_lambda(std::int64_t k) {
    const auto w = prefix_word(k);
    return apply_word(w, Weight::lambda(jp(k)));
}

std::int64_t pair_doubled(const std::map<int, std::int64_t>& cx,
                          const std::map<int, std::int64_t>& cy) {
    std::int64_t d = 0;
    for (const auto& [i, ci] : cx)
        for (const auto& [j, cj] : cy) d -= ci * cj * std::abs(std::int64_t(i) - std::int64_t(j));
    return d;
}

}  // namespace

std::int64_t lambda_init(std::int64_t s, std::int64_t t) {
    if (s == t) return 0;
    if (s > t) return -lambda_init(t, s);
    const Weight ls = prefix_lambda(s);
    const Weight lt = prefix_lambda(t);
    const HalfInt v = pair(lt + Weight::lambda(jp(t)), ls - Weight::lambda(jp(s)));
    return -v.as_integer();
}

std::int64_t lambda_init_truncated(std::int64_t s, std::int64_t t, int N) {
    const Weight beta_s = -wt_of(det_label(s));
    const Weight beta_t = -wt_of(det_label(t));
    return lambda_init(s, t) + b_form_n(beta_s, beta_t, N) - b_form_n(beta_t, beta_s, N);
}

void mutate_pair(LambdaMatrix& L, ExchangeMatrix& B, std::int64_t k,
                 const std::set<std::int64_t>& vertices) {
    // Rule (a): rows and columns at k pick up the negative-column correction.
    std::map<std::int64_t, std::int64_t> neg;  // t -> max(0, -b_tk)
    for (const auto& [t, v] : B.column(k))
        if (v < 0) neg.emplace(t, -v);
    LambdaMatrix L2 = L;
    for (std::int64_t j : vertices) {
        if (j == k) continue;
        std::int64_t v = -L.at(k, j);
        for (const auto& [t, c] : neg) v += c * L.at(t, j);
        L2.set(k, j, v);
    }
    L = std::move(L2);

    // Rule (b) on the exchange matrix.
    const auto old = B;
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> updates;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& [key, v] : old.entries()) {
        const auto [i, j] = key;
        if (seen.count({j, i})) continue;
        seen.insert(key);
        std::int64_t nv;
        if (i == k || j == k) {
            nv = -v;
        } else {
            const std::int64_t bik = old.at(i, k);
            const std::int64_t bkj = old.at(k, j);
            const std::int64_t add = std::max<std::int64_t>(bik * bkj, 0);
            nv = v + (bik < 0 ? -add : add);
        }
        updates.push_back({key, nv});
    }
    // Entries that were zero can become non-zero through paths i -> k -> j.
    const auto colk = old.column(k);
    for (const auto& [i, bik] : colk) {
        for (const auto& [j, bjk] : colk) {
            if (i == j) continue;
            const std::pair<std::int64_t, std::int64_t> key{i, j};
            if (old.at(i, j) != 0 || seen.count(key) || seen.count({j, i})) continue;
            seen.insert(key);
            const std::int64_t bkj = -bjk;
            const std::int64_t add = std::max<std::int64_t>(bik * bkj, 0);
            updates.push_back({key, bik < 0 ? -add : add});
        }
    }
    ExchangeMatrix B2;
    for (const auto& [key, v] : updates) B2.set(key.first, key.second, v);
    B = std::move(B2);
}

bool compatible(const LambdaMatrix& L, const ExchangeMatrix& B, std::int64_t d,
                const std::vector<std::int64_t>& columns, const std::set<std::int64_t>& vertices) {
    for (std::int64_t j : columns) {
        const auto col = B.column(j);
        for (const auto& [kk, v] : col)
            if (vertices.count(kk) == 0)
                throw WindowTooSmall("column " + std::to_string(j) + " reaches outside the window");
        for (std::int64_t i : vertices) {
            std::int64_t sum = 0;
            for (const auto& [kk, v] : col) sum += L.at(i, kk) * v;
            if (sum != (i == j ? d : 0)) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> QuantumSeed::exchangeable() const {
    std::vector<std::int64_t> out;
    for (std::int64_t p : vertices)
        if (frozen.count(p) == 0) out.push_back(p);
    return out;
}

namespace {

std::vector<Coord> lattice_neighbours(const Coord& c, int ell_limit) {
    std::vector<Coord> out;
    for (const Coord& d : {Coord{c.ell + 1, c.m}, Coord{c.ell - 1, c.m}, Coord{c.ell, c.m + 1},
                           Coord{c.ell, c.m - 1}}) {
        if (d.ell >= 1 && d.m >= 1 && d.ell <= ell_limit) out.push_back(d);
    }
    return out;
}

}  // namespace

QuantumSeed build_seed(const Window& win, const SeedOptions& opts) {
    QuantumSeed seed;
    Window w = win;
    int ell_limit = 1 << 19;
    const bool truncated = opts.kind != SeedKind::Infinite;
    if (truncated && opts.N < 2) throw std::invalid_argument("truncated seed requires N >= 2");
    if (opts.kind == SeedKind::TruncatedBar) ell_limit = opts.N - 1;
    if (opts.kind == SeedKind::Truncated) ell_limit = opts.N;
    w.ell_cap = std::min(w.ell_cap, ell_limit);

    Quiver q = initial_quiver(w);
    if (opts.kind == SeedKind::Truncated) q = q.truncated(opts.N);

    for (std::int64_t p : q.vertices()) {
        const Coord c = coord(p);
        bool frozen = q.is_frozen(p);
        // Freeze the window boundary: a vertex whose quiver neighbourhood is
        // clipped cannot carry an honest exchange column.
        for (const Coord& d : lattice_neighbours(c, ell_limit))
            if (!w.contains(d)) frozen = true;
        seed.vertices.insert(p);
        if (frozen) seed.frozen.insert(p);
    }

    seed.B = ExchangeMatrix::from_quiver(q);
    for (std::int64_t p : seed.vertices) {
        seed.labels.emplace(p, det_label(p));
        seed.weights.emplace(p, wt_of(det_label(p)));
        const bool unit_var = opts.kind == SeedKind::Truncated && coord(p).ell == opts.N;
        seed.vars.emplace(p, unit_var ? TorusElement::unit() : TorusElement::variable(p));
    }
    // The commutation form: left and right pairing arguments are cached per
    // vertex, so the quadratic pass only multiplies expansions.
    std::map<std::int64_t, std::map<int, std::int64_t>> left, right;
    std::map<std::int64_t, Weight> beta;
    for (std::int64_t p : seed.vertices) {
        const Weight lam = prefix_lambda(p);
        left.emplace(p, (lam + Weight::lambda(jp(p))).lambda_expansion());
        right.emplace(p, (lam - Weight::lambda(jp(p))).lambda_expansion());
        if (truncated) beta.emplace(p, -wt_of(det_label(p)));
    }
    for (auto it1 = seed.vertices.begin(); it1 != seed.vertices.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != seed.vertices.end(); ++it2) {
            const std::int64_t s = *it1, t = *it2;
            std::int64_t v;
            if (opts.kind == SeedKind::Truncated &&
                (coord(s).ell == opts.N || coord(t).ell == opts.N)) {
                v = 0;  // the frozen column is the unit class downstairs
            } else {
                v = -HalfInt(pair_doubled(left.at(t), right.at(s))).as_integer();
                if (truncated)
                    v += b_form_n(beta.at(s), beta.at(t), opts.N) -
                         b_form_n(beta.at(t), beta.at(s), opts.N);
            }
            seed.L.set(s, t, v);
        }
    }
    seed.L0 = seed.L;
    return seed;
}

TorusElement eval_cluster_monomial(const QuantumSeed& seed, const ExponentVector& u) {
    // Bar-normalization q^{(1/2) sum_{i>j} u_i u_j lambda_{ij}} against the
    // current commutation form, product taken in increasing vertex order.
    std::int64_t norm = 0;
    const auto& ent = u.entries();
    for (auto it1 = ent.begin(); it1 != ent.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != ent.end(); ++it2)
            norm += it2->second * it1->second * seed.L.at(it2->first, it1->first);
    TorusElement acc = TorusElement::unit();
    for (const auto& [vtx, e] : ent) {
        if (e < 0) throw std::invalid_argument("cluster monomial needs non-negative exponents");
        auto it = seed.vars.find(vtx);
        if (it == seed.vars.end()) throw WindowTooSmall("variable outside the seed window");
        for (std::int64_t r = 0; r < e; ++r) acc = torus_mul(acc, it->second, seed.L0);
    }
    return acc.shifted(norm);
}

void mutate_seed(QuantumSeed& seed, std::int64_t k, const LabelRule& rule) {
    if (!seed.is_exchangeable(k)) throw std::invalid_argument("mutation at non-exchangeable vertex");
    const auto col = seed.B.column(k);

    ExponentVector a_plus, a_minus;
    for (const auto& [i, b] : col) {
        if (b > 0) a_plus = a_plus + ExponentVector::delta(i, b);
        if (b < 0) a_minus = a_minus + ExponentVector::delta(i, -b);
    }
    // (x^{a'} + x^{a''}) x_k expanded in the initial torus; the residual
    // normalization against e_k enters as a half-q shift.
    std::int64_t tw_plus = 0, tw_minus = 0;
    for (const auto& [i, e] : a_plus.entries()) tw_plus += e * seed.L.at(i, k);
    for (const auto& [i, e] : a_minus.entries()) tw_minus += e * seed.L.at(i, k);
    const TorusElement num = eval_cluster_monomial(seed, a_plus).shifted(tw_plus) +
                             eval_cluster_monomial(seed, a_minus).shifted(tw_minus);
    const TorusElement fresh = exact_divide(num, seed.vars.at(k), seed.L0);

    // Weights mutate by the exchange rule; labels by the caller's rule.
    Weight zeta = -seed.weights.at(k);
    for (const auto& [i, b] : col)
        if (b > 0) zeta = zeta + seed.weights.at(i).scaled(b);
    std::optional<Multisegment> new_label;
    if (rule) new_label = rule(seed, k);

    mutate_pair(seed.L, seed.B, k, seed.vertices);
    seed.vars.at(k) = fresh;
    seed.weights.at(k) = zeta;
    if (new_label)
        seed.labels[k] = *new_label;
    else
        seed.labels.erase(k);
}

std::optional<Multisegment> det_label_rule(const QuantumSeed& seed, std::int64_t k) {
    auto lk = seed.labels.find(k);
    if (lk == seed.labels.end()) return std::nullopt;

    std::vector<std::pair<std::int64_t, std::int64_t>> ins;  // (vertex, multiplicity)
    for (const auto& [i, b] : seed.B.column(k))
        if (b > 0) ins.push_back({i, b});

    // The successor neighbour exceeds the current label by exactly one
    // segment; everything else merges in whole.
    auto difference_segment = [&](const Multisegment& big) -> std::optional<Segment> {
        const auto& small = lk->second.segments();
        const auto& large = big.segments();
        if (large.size() != small.size() + 1) return std::nullopt;
        std::vector<Segment> rest = large;
        for (const Segment& s : small) {
            auto it = std::find(rest.begin(), rest.end(), s);
            if (it == rest.end()) return std::nullopt;
            rest.erase(it);
        }
        return rest.front();
    };

    std::optional<Segment> extra;
    std::int64_t successor = 0;
    for (const auto& [i, mult] : ins) {
        auto li = seed.labels.find(i);
        if (li == seed.labels.end()) return std::nullopt;
        if (auto s = difference_segment(li->second); s && mult == 1) {
            if (extra) return std::nullopt;  // ambiguous
            extra = s;
            successor = i;
        }
    }
    if (!extra) return std::nullopt;

    Multisegment out({*extra});
    for (const auto& [i, mult] : ins) {
        if (i == successor) continue;
        auto li = seed.labels.find(i);
        for (std::int64_t r = 0; r < mult; ++r) out = merge_commuting(out, li->second);
    }
    // The label is only accepted when its weight matches the mutated weight.
    Weight zeta = -seed.weights.at(k);
    for (const auto& [i, b] : seed.B.column(k))
        if (b > 0) zeta = zeta + seed.weights.at(i).scaled(b);
    if (wt_of(out) != zeta)
        throw LabelRuleError("determinantial label rule produced a weight mismatch at vertex " +
                             std::to_string(k));
    return out;
}

std::pair<HalfInt, HalfInt> mutation_degrees(const QuantumSeed& seed, std::int64_t k) {
    Weight zeta = -seed.weights.at(k);
    for (const auto& [i, b] : seed.B.column(k))
        if (b > 0) zeta = zeta + seed.weights.at(i).scaled(b);
    const std::int64_t base = pair(seed.weights.at(k), zeta).as_integer();
    std::int64_t neg = 0, pos = 0;
    for (const auto& [i, b] : seed.B.column(k)) {
        if (b < 0) neg += seed.L.at(k, i) * b;
        if (b > 0) pos += seed.L.at(k, i) * b;
    }
    return {HalfInt(base + neg), HalfInt(base + pos)};
}

}  // namespace ainf
