#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ainf/halfint.hpp"
#include "ainf/multiseg.hpp"
#include "ainf/quiver.hpp"
#include "ainf/torus.hpp"
#include "ainf/weight.hpp"

namespace ainf {

/// Sparse integer exchange matrix b_{ij}, kept skew on the stored support;
/// columns exist only for exchangeable vertices.
class ExchangeMatrix {
public:
    void set(std::int64_t i, std::int64_t j, std::int64_t v);
    std::int64_t at(std::int64_t i, std::int64_t j) const;

    /// Non-zero entries of column j as {row -> value}.
    std::map<std::int64_t, std::int64_t> column(std::int64_t j) const;

    const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& entries() const {
        return entries_;
    }

    static ExchangeMatrix from_quiver(const Quiver& q);

private:
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> entries_;
};

/// Commutation exponent of the initial cluster variables at positions
/// s <= t of the word: x_s x_t = q^{lambda_{st}} x_t x_s with
/// lambda_{st} = -( lam_t + Lambda_{j_t}, lam_s - Lambda_{j_s} ),
/// lam_k the prefix image of Lambda_{j_k}. Skew-extended to all pairs.
/// Throws NonIntegral when the pairing fails to double to an even value.
std::int64_t lambda_init(std::int64_t s, std::int64_t t);

/// Adds the star-product correction that the N-truncated category imposes:
/// lambda^N_{st} = lambda_{st} + B_N(beta_s, beta_t) - B_N(beta_t, beta_s),
/// beta_v = -wt of the vertex label.
std::int64_t lambda_init_truncated(std::int64_t s, std::int64_t t, int N);

/// Mutation of a compatible pair in direction k, rules (a) and (b).
void mutate_pair(LambdaMatrix& L, ExchangeMatrix& B, std::int64_t k,
                 const std::set<std::int64_t>& vertices);

/// Verifies sum_k lambda_{ik} b_{kj} = d * delta_{ij} for the given columns,
/// over all rows i in `vertices`. Throws WindowTooSmall when a checked
/// column's support leaves the vertex set.
bool compatible(const LambdaMatrix& L, const ExchangeMatrix& B, std::int64_t d,
                const std::vector<std::int64_t>& columns, const std::set<std::int64_t>& vertices);

struct QuantumSeed {
    std::set<std::int64_t> vertices;
    std::set<std::int64_t> frozen;
    ExchangeMatrix B;
    LambdaMatrix L;
    std::map<std::int64_t, TorusElement> vars;   // expansions in the fixed initial torus
    std::map<std::int64_t, Multisegment> labels; // optional simple-module labels
    std::map<std::int64_t, Weight> weights;      // the family D, d_p = wt(label)
    LambdaMatrix L0;                             // the initial torus form, fixed

    bool is_exchangeable(std::int64_t p) const {
        return vertices.count(p) != 0 && frozen.count(p) == 0;
    }
    std::vector<std::int64_t> exchangeable() const;
};

enum class SeedKind {
    Infinite,      // window of the untruncated seed, boundary ring frozen
    TruncatedBar,  // vertices ell <= N-1 only, top m rows frozen
    Truncated,     // vertices ell <= N, column ell = N frozen with unit variables
};

struct SeedOptions {
    SeedKind kind = SeedKind::Infinite;
    int N = 0;  // required for the truncated kinds
};

/// Builds the initial quantum seed on a window. Boundary vertices whose
/// exchange data would leave the window are frozen, so the finite seed is an
/// honest compatible pair wherever columns exist.
QuantumSeed build_seed(const Window& win, const SeedOptions& opts = {});

/// Optional rule deciding the label of the new variable at k; receives the
/// seed before mutation. Returning nullopt clears the label.
using LabelRule =
    std::function<std::optional<Multisegment>(const QuantumSeed&, std::int64_t k)>;

/// Mutation in direction k: new variable by the exchange binomial and exact
/// division in the initial torus, pair by mutate_pair, weights by mu_k(D),
/// labels by the rule (cleared when absent).
void mutate_seed(QuantumSeed& seed, std::int64_t k, const LabelRule& rule = nullptr);

/// Label rule implementing the determinantial exchange: the new label is the
/// merge of the ordinary in-neighbour labels with the one extra segment by
/// which the unique "successor" in-neighbour exceeds the current label.
std::optional<Multisegment> det_label_rule(const QuantumSeed& seed, std::int64_t k);

/// The shift degrees (m_k, m'_k) of the two exchange products.
std::pair<HalfInt, HalfInt> mutation_degrees(const QuantumSeed& seed, std::int64_t k);

/// Normalized monomial of the current cluster variables with non-negative
/// exponents, evaluated in the initial torus.
TorusElement eval_cluster_monomial(const QuantumSeed& seed, const ExponentVector& u);

}  // namespace ainf
