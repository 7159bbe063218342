#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ainf/multiseg.hpp"

namespace ainf {

/// Spectral parameter zeta * q^{e/2} with zeta a 12th root of unity stored
/// by its exponent. Covers +-1, +-sqrt(-1), omega, omega^2 and all stated
/// constants; equality is exact.
struct SpectralParam {
    int zeta = 0;        // exponent of the fixed primitive 12th root of unity, mod 12
    std::int64_t e = 0;  // exponent of q in half units

    static SpectralParam one() { return {}; }
    /// (-q)^k = (-1)^k q^k.
    static SpectralParam neg_q_pow(std::int64_t k);
    /// q^{k/2}.
    static SpectralParam q_half_pow(std::int64_t k);
    /// (-1)^k.
    static SpectralParam sign_pow(std::int64_t k);
    /// sqrt(-1)^k.
    static SpectralParam imag_pow(std::int64_t k);
    /// omega^k for a primitive third root of unity.
    static SpectralParam omega_pow(std::int64_t k);

    SpectralParam operator*(const SpectralParam& o) const;
    SpectralParam operator/(const SpectralParam& o) const;
    SpectralParam pow(std::int64_t k) const;
    SpectralParam negated() const { return *this * sign_pow(1); }

    friend bool operator==(const SpectralParam& a, const SpectralParam& b) {
        return a.zeta == b.zeta && a.e == b.e;
    }
    friend bool operator!=(const SpectralParam& a, const SpectralParam& b) { return !(a == b); }
    friend bool operator<(const SpectralParam& a, const SpectralParam& b) {
        return a.zeta != b.zeta ? a.zeta < b.zeta : a.e < b.e;
    }

    std::string str() const;
};

enum class AffineTag { A1, A2, B1, C1, D1, D2, D3 };

AffineTag parse_affine_tag(const std::string& s);
std::string tag_name(AffineTag t);

/// One family of fundamental modules indexed by the integers: node map,
/// spectral map, and the square of the dual-shift constant relating X(a+N)
/// to X(a).
struct AffineTypeSpec {
    AffineTag tag;
    int n = 0;  // rank subscript of the affine symbol
    int N = 0;
    int node_count = 0;  // size of the classical index set
    SpectralParam p_star_sq;
    /// Node carrying a parameter sign identification V_x ~ V_{-x}; 0 if none.
    int sign_identified_node = 0;

    int i_map(std::int64_t a) const;
    SpectralParam x_map(std::int64_t a) const;

    bool twisted() const { return tag == AffineTag::A2 || tag == AffineTag::D2 || tag == AffineTag::D3; }

    std::map<int, int> i_fund;            // a in [0, N) -> node
    std::map<int, SpectralParam> x_fund;  // a in [0, N) -> parameter
};

AffineTypeSpec family_spec(AffineTag tag, int n);

/// Exact multiset of denominator zeros for the stated node pairs; throws
/// UnknownPair for pairs the source does not state.
std::vector<SpectralParam> denom(const AffineTypeSpec& spec, int k, int l);

/// Number of arrows a -> b in the family quiver: the multiplicity of
/// X(b)/X(a) among the zeros of denom(i_a, i_b).
int d_arrow(const AffineTypeSpec& spec, std::int64_t a, std::int64_t b);

struct FamilyVerdict {
    bool pass = true;
    std::string detail;
};

/// Checks that the off-diagonal Cartan entries -d_{ab} - d_{ba} of the
/// family quiver form the infinite A chain on the window |a| <= window.
FamilyVerdict check_a_infinity(const AffineTypeSpec& spec, int window);

/// Checks i_{a+N} = i_a and X(a+N) = X(a) p*^2 on the window.
FamilyVerdict check_dual_period(const AffineTypeSpec& spec, int window);

/// The family quiver on the window, vertices keyed by a - with arrows per
/// d_arrow. Vertex keys are offset to be positive.
std::vector<std::tuple<std::int64_t, std::int64_t, int>> gamma_quiver(const AffineTypeSpec& spec,
                                                                      int window);

struct ModuleLabel {
    enum class Kind { Unit, Zero, Fund, KR, HeadPair };
    Kind kind = Kind::Unit;
    int node = 0;
    int m = 0;  // KR tensor length
    SpectralParam x;
    // HeadPair stores the second factor here.
    int node2 = 0;
    SpectralParam x2;

    static ModuleLabel unit() { return {}; }
    static ModuleLabel zero_label();
    static ModuleLabel fund(int node, SpectralParam x);
    static ModuleLabel kr(int node, int m, SpectralParam x);
    static ModuleLabel head_pair(int node_a, SpectralParam xa, int node_b, SpectralParam xb);

    std::string str() const;
};

/// Equality of labels honouring the stated parameter identification at the
/// sign-identified node of the family.
bool label_equal(const AffineTypeSpec& spec, const ModuleLabel& a, const ModuleLabel& b);

/// Dictionary image of a segment class; Unit at length N, Zero above, and
/// the stated case analysis below, with the segment first normalized into
/// the fundamental domain by p*^2 shifts. Unmatched cases throw
/// OutOfStatedDomain.
ModuleLabel segment_image(const AffineTypeSpec& spec, const Segment& seg);

/// Kirillov-Reshetikhin image of the (ell, m, j) class; stated for the type
/// A families only (throws NotStated otherwise).
ModuleLabel kr_image(const AffineTypeSpec& spec, int ell, int m, int j);

/// One exchange triple of the T-system: (sub pair, middle pair, quotient
/// pair), at the parameter anchor k of the middle's first factor.
struct TSystemTriple {
    std::pair<ModuleLabel, ModuleLabel> sub, mid, quot;
};

TSystemTriple t_system_triple(const AffineTypeSpec& spec, int ell, int m, std::int64_t k);

}  // namespace ainf
