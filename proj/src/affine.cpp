#include "ainf/affine.hpp"

#include <algorithm>
#include <sstream>

#include "ainf/errors.hpp"

namespace ainf {

namespace {
int mod12(std::int64_t k) {
    int r = static_cast<int>(k % 12);
    return r < 0 ? r + 12 : r;
}
}  // namespace

SpectralParam SpectralParam::neg_q_pow(std::int64_t k) { return {mod12(6 * k), 2 * k}; }
SpectralParam SpectralParam::q_half_pow(std::int64_t k) { return {0, k}; }
SpectralParam SpectralParam::sign_pow(std::int64_t k) { return {mod12(6 * k), 0}; }
SpectralParam SpectralParam::imag_pow(std::int64_t k) { return {mod12(3 * k), 0}; }
SpectralParam SpectralParam::omega_pow(std::int64_t k) { return {mod12(4 * k), 0}; }

SpectralParam SpectralParam::operator*(const SpectralParam& o) const {
    return {mod12(zeta + o.zeta), e + o.e};
}

SpectralParam SpectralParam::operator/(const SpectralParam& o) const {
    return {mod12(zeta - o.zeta), e - o.e};
}

SpectralParam SpectralParam::pow(std::int64_t k) const { return {mod12(zeta * k), e * k}; }

std::string SpectralParam::str() const {
    std::ostringstream os;
    switch (zeta) {
        case 0: break;
        case 6: os << "-"; break;
        case 3: os << "i*"; break;
        case 9: os << "-i*"; break;
        case 4: os << "w*"; break;
        case 8: os << "w2*"; break;
        default: os << "z" << zeta << "*"; break;
    }
    if (e == 0) {
        os << "1";
    } else if (e % 2 == 0) {
        os << "q^" << (e / 2);
    } else {
        os << "q^(" << e << "/2)";
    }
    return os.str();
}

AffineTag parse_affine_tag(const std::string& s) {
    if (s == "A1") return AffineTag::A1;
    if (s == "A2") return AffineTag::A2;
    if (s == "B1") return AffineTag::B1;
    if (s == "C1") return AffineTag::C1;
    if (s == "D1") return AffineTag::D1;
    if (s == "D2") return AffineTag::D2;
    if (s == "D3") return AffineTag::D3;
    throw BadRank("unknown affine family tag: " + s);
}

std::string tag_name(AffineTag t) {
    switch (t) {
        case AffineTag::A1: return "A1";
        case AffineTag::A2: return "A2";
        case AffineTag::B1: return "B1";
        case AffineTag::C1: return "C1";
        case AffineTag::D1: return "D1";
        case AffineTag::D2: return "D2";
        case AffineTag::D3: return "D3";
    }
    return "?";
}

int AffineTypeSpec::i_map(std::int64_t a) const {
    std::int64_t r = a % N;
    if (r < 0) r += N;
    return i_fund.at(static_cast<int>(r));
}

SpectralParam AffineTypeSpec::x_map(std::int64_t a) const {
    std::int64_t r = a % N;
    if (r < 0) r += N;
    const std::int64_t k = (a - r) / N;
    return x_fund.at(static_cast<int>(r)) * p_star_sq.pow(k);
}

AffineTypeSpec family_spec(AffineTag tag, int n) {
    AffineTypeSpec s;
    s.tag = tag;
    s.n = n;
    switch (tag) {
        case AffineTag::A1: {
            if (n < 1) throw BadRank("A1 family needs rank >= 1");
            s.N = n + 1;
            s.node_count = n;
            for (int a = 0; a < s.N; ++a) {
                s.i_fund[a] = 1;
                s.x_fund[a] = SpectralParam::q_half_pow(4 * a);  // q^{2a}
            }
            s.p_star_sq = SpectralParam::q_half_pow(4 * s.N);
            break;
        }
        case AffineTag::A2: {
            if (n < 2) throw BadRank("A2 family needs rank >= 2");
            s.N = n + 1;
            s.node_count = s.N / 2;
            for (int a = 0; a < s.N; ++a) {
                s.i_fund[a] = 1;
                s.x_fund[a] = SpectralParam::q_half_pow(4 * a);
            }
            s.p_star_sq = SpectralParam::q_half_pow(4 * s.N);
            if (s.N % 2 == 0) s.sign_identified_node = s.N / 2;
            break;
        }
        case AffineTag::B1: {
            if (n < 2) throw BadRank("B1 family needs rank >= 2");
            s.N = 2 * n;
            s.node_count = n;
            const SpectralParam qk = SpectralParam::sign_pow(n + 1) * SpectralParam::q_half_pow(2 * n + 1);
            for (int a = 0; a < s.N; ++a)
                s.i_fund[a] = (a == 0 || a == s.N - 1) ? n : 1;
            s.x_fund[0] = SpectralParam::one();
            for (int j = 1; j <= s.N - 2; ++j)
                s.x_fund[j] = qk * SpectralParam::q_half_pow(4 * (j - 1));
            s.x_fund[s.N - 1] = SpectralParam::q_half_pow(2 * (3 * s.N - 5));
            s.p_star_sq = SpectralParam::q_half_pow(4 * s.N - 4);
            break;
        }
        case AffineTag::C1: {
            if (n < 3) throw BadRank("C1 family needs rank >= 3");
            s.N = n + 1;
            s.node_count = n;
            const SpectralParam qk =
                SpectralParam::sign_pow(n + 3) * SpectralParam::q_half_pow(n + 3);  // (-q_s)^{n+3}
            for (int a = 0; a < s.N; ++a) s.i_fund[a] = (a == 0) ? n : 1;
            s.x_fund[0] = SpectralParam::one();
            for (int j = 1; j <= s.N - 1; ++j)
                s.x_fund[j] = qk * SpectralParam::q_half_pow(2 * (j - 1));
            s.p_star_sq = SpectralParam::q_half_pow(4 * n + 4);
            break;
        }
        case AffineTag::D1:
        case AffineTag::D2:
        case AffineTag::D3: {
            const int t = tag == AffineTag::D1 ? 1 : (tag == AffineTag::D2 ? 2 : 3);
            if (t == 3 && n != 4) throw BadRank("D3 family is stated for rank 4 only");
            if (t != 3 && n < 4) throw BadRank("D family needs rank >= 4");
            s.N = n;
            s.node_count = t == 1 ? n : (t == 2 ? n - 1 : 2);
            SpectralParam qk;
            if (t == 1) qk = SpectralParam::neg_q_pow(n);
            if (t == 2) qk = SpectralParam::imag_pow(n - 1) * SpectralParam::q_half_pow(2 * n);
            if (t == 3) qk = SpectralParam::omega_pow(1) * SpectralParam::q_half_pow(8);
            for (int a = 0; a < s.N; ++a) {
                if (t != 3 && (a == 0 || a == 1))
                    s.i_fund[a] = n + 1 - t;
                else
                    s.i_fund[a] = 1;
            }
            s.x_fund[0] = SpectralParam::one();
            s.x_fund[1] = SpectralParam::q_half_pow(4);
            for (int j = 2; j <= s.N - 1; ++j)
                s.x_fund[j] = qk * SpectralParam::q_half_pow(4 * (j - 1));
            // Pinned by the seam arrows of the family quiver: the ratio
            // X(N)/X(N-1) must land on a stated denominator zero.
            if (t == 1) s.p_star_sq = SpectralParam::q_half_pow(8 * n - 8);
            if (t == 2)
                s.p_star_sq = SpectralParam::sign_pow(n - 1) * SpectralParam::q_half_pow(8 * n - 8);
            if (t == 3) s.p_star_sq = SpectralParam::q_half_pow(24);
            break;
        }
    }
    return s;
}

std::vector<SpectralParam> denom(const AffineTypeSpec& spec, int k, int l) {
    std::vector<SpectralParam> roots;
    const int n = spec.n;
    const int N = spec.N;
    auto bad = [&]() {
        throw UnknownPair("denominator not stated for nodes (" + std::to_string(k) + "," +
                          std::to_string(l) + ") in type " + tag_name(spec.tag));
    };
    switch (spec.tag) {
        case AffineTag::A1: {
            if (k < 1 || l < 1 || k > N - 1 || l > N - 1) bad();
            const int top = std::min(std::min(k, l), std::min(N - k, N - l));
            for (int s = 1; s <= top; ++s) roots.push_back(SpectralParam::neg_q_pow(std::abs(k - l) + 2 * s));
            break;
        }
        case AffineTag::A2: {
            if (k < 1 || l < 1 || k > N / 2 || l > N / 2) bad();
            for (int s = 1; s <= std::min(k, l); ++s) {
                roots.push_back(SpectralParam::neg_q_pow(std::abs(k - l) + 2 * s));
                // zero of z + q^N (-q)^{-k-l+2s}
                roots.push_back(SpectralParam::sign_pow(1) * SpectralParam::q_half_pow(2 * N) *
                                SpectralParam::neg_q_pow(-k - l + 2 * s));
            }
            break;
        }
        case AffineTag::B1: {
            if (k > l) std::swap(k, l);
            if (k < 1 || l > n) bad();
            if (l <= n - 1) {
                for (int s = 1; s <= std::min(k, l); ++s) {
                    roots.push_back(SpectralParam::neg_q_pow(std::abs(k - l) + 2 * s));
                    roots.push_back(SpectralParam::sign_pow(1) *
                                    SpectralParam::neg_q_pow(2 * n - k - l - 1 + 2 * s));
                }
            } else if (k <= n - 1) {
                for (int s = 1; s <= k; ++s)
                    roots.push_back(SpectralParam::sign_pow(n + k) *
                                    SpectralParam::q_half_pow(2 * n - 2 * k - 1 + 4 * s));
            } else {  // k = l = n
                for (int s = 1; s <= n; ++s) roots.push_back(SpectralParam::q_half_pow(4 * s - 2));
            }
            break;
        }
        case AffineTag::C1: {
            if (k < 1 || l < 1 || k > n || l > n) bad();
            const int top1 = std::min(std::min(k, l), std::min(n - k, n - l));
            for (int i = 1; i <= top1; ++i)
                roots.push_back(SpectralParam::sign_pow(std::abs(k - l) + 2 * i) *
                                SpectralParam::q_half_pow(std::abs(k - l) + 2 * i));
            for (int i = 1; i <= std::min(k, l); ++i) {
                const int m = 2 * n + 2 - k - l + 2 * i;
                roots.push_back(SpectralParam::sign_pow(m) * SpectralParam::q_half_pow(m));
            }
            break;
        }
        case AffineTag::D1: {
            if (k > l) std::swap(k, l);
            if (k == 1 && l == 1) {
                roots.push_back(SpectralParam::q_half_pow(4));
                roots.push_back(SpectralParam::neg_q_pow(2 * n - 2));
            } else if (k == 1 && l == n) {
                roots.push_back(SpectralParam::neg_q_pow(n));
            } else if (k == n && l == n) {
                for (int s = 1; s <= n / 2; ++s) roots.push_back(SpectralParam::neg_q_pow(4 * s - 2));
            } else {
                bad();
            }
            break;
        }
        case AffineTag::D2: {
            if (k > l) std::swap(k, l);
            if (k == 1 && l == 1) {
                // (z^2 - q^4)(z^2 - (-q^2)^{2n-2})
                roots.push_back(SpectralParam::q_half_pow(4));
                roots.push_back(SpectralParam::sign_pow(1) * SpectralParam::q_half_pow(4));
                roots.push_back(SpectralParam::q_half_pow(4 * n - 4));
                roots.push_back(SpectralParam::sign_pow(1) * SpectralParam::q_half_pow(4 * n - 4));
            } else if (k == 1 && l == n - 1) {
                // z^2 = (-1)^{n+1} q^{2n}
                const SpectralParam r = SpectralParam::imag_pow(n + 1) * SpectralParam::q_half_pow(2 * n);
                roots.push_back(r);
                roots.push_back(r.negated());
            } else if (k == n - 1 && l == n - 1) {
                for (int s = 1; s <= n - 1; ++s)
                    roots.push_back(SpectralParam::sign_pow(s + 1) * SpectralParam::q_half_pow(4 * s));
            } else {
                bad();
            }
            break;
        }
        case AffineTag::D3: {
            if (k == 1 && l == 1) {
                roots.push_back(SpectralParam::q_half_pow(4));
                roots.push_back(SpectralParam::q_half_pow(12));
                roots.push_back(SpectralParam::omega_pow(1) * SpectralParam::q_half_pow(8));
                roots.push_back(SpectralParam::omega_pow(2) * SpectralParam::q_half_pow(8));
            } else {
                bad();
            }
            break;
        }
    }
    return roots;
}

int d_arrow(const AffineTypeSpec& spec, std::int64_t a, std::int64_t b) {
    const SpectralParam ratio = spec.x_map(b) / spec.x_map(a);
    int count = 0;
    for (const SpectralParam& r : denom(spec, spec.i_map(a), spec.i_map(b)))
        if (r == ratio) ++count;
    return count;
}

FamilyVerdict check_a_infinity(const AffineTypeSpec& spec, int window) {
    for (std::int64_t a = -window; a <= window; ++a) {
        for (std::int64_t b = a + 1; b <= window; ++b) {
            const int total = d_arrow(spec, a, b) + d_arrow(spec, b, a);
            const int expect = (b - a == 1) ? 1 : 0;
            if (total != expect)
                return {false, "Cartan entry off the chain at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "): " + std::to_string(total) + " arrows"};
        }
    }
    return {true, ""};
}

FamilyVerdict check_dual_period(const AffineTypeSpec& spec, int window) {
    for (std::int64_t a = -window; a <= window; ++a) {
        if (spec.i_map(a + spec.N) != spec.i_map(a))
            return {false, "node map not periodic at " + std::to_string(a)};
        if (spec.x_map(a + spec.N) != spec.x_map(a) * spec.p_star_sq)
            return {false, "parameter map breaks the dual shift at " + std::to_string(a)};
    }
    // Distinct members: the family never repeats a fundamental label.
    for (std::int64_t a = -window; a <= window; ++a) {
        for (std::int64_t b = a + 1; b <= window; ++b) {
            if (spec.i_map(a) != spec.i_map(b)) continue;
            const bool same =
                spec.x_map(a) == spec.x_map(b) ||
                (spec.i_map(a) == spec.sign_identified_node && spec.x_map(a) == spec.x_map(b).negated());
            if (same)
                return {false, "family members " + std::to_string(a) + " and " + std::to_string(b) +
                                   " coincide"};
        }
    }
    return {true, ""};
}

std::vector<std::tuple<std::int64_t, std::int64_t, int>> gamma_quiver(const AffineTypeSpec& spec,
                                                                      int window) {
    std::vector<std::tuple<std::int64_t, std::int64_t, int>> arrows;
    for (std::int64_t a = -window; a <= window; ++a)
        for (std::int64_t b = -window; b <= window; ++b) {
            if (a == b) continue;
            if (const int d = d_arrow(spec, a, b); d > 0) arrows.push_back({a, b, d});
        }
    return arrows;
}

ModuleLabel ModuleLabel::zero_label() {
    ModuleLabel l;
    l.kind = Kind::Zero;
    return l;
}

ModuleLabel ModuleLabel::fund(int node, SpectralParam x) {
    ModuleLabel l;
    l.kind = Kind::Fund;
    l.node = node;
    l.x = x;
    return l;
}

ModuleLabel ModuleLabel::kr(int node, int m, SpectralParam x) {
    // A length-one tensor is the fundamental module itself.
    if (m == 1) return fund(node, x);
    ModuleLabel l;
    l.kind = Kind::KR;
    l.node = node;
    l.m = m;
    l.x = x;
    return l;
}

ModuleLabel ModuleLabel::head_pair(int node_a, SpectralParam xa, int node_b, SpectralParam xb) {
    ModuleLabel l;
    l.kind = Kind::HeadPair;
    l.node = node_a;
    l.x = xa;
    l.node2 = node_b;
    l.x2 = xb;
    return l;
}

std::string ModuleLabel::str() const {
    switch (kind) {
        case Kind::Unit: return "1";
        case Kind::Zero: return "0";
        case Kind::Fund: return "V(w" + std::to_string(node) + ")_" + x.str();
        case Kind::KR:
            return "W(" + std::to_string(node) + ")_{" + std::to_string(m) + "," + x.str() + "}";
        case Kind::HeadPair:
            return "hd(V(w" + std::to_string(node) + ")_" + x.str() + ", V(w" + std::to_string(node2) +
                   ")_" + x2.str() + ")";
    }
    return "?";
}

bool label_equal(const AffineTypeSpec& spec, const ModuleLabel& a, const ModuleLabel& b) {
    if (a.kind != b.kind) return false;
    auto param_eq = [&spec](int node, const SpectralParam& x, const SpectralParam& y) {
        if (x == y) return true;
        return node == spec.sign_identified_node && node != 0 && x == y.negated();
    };
    switch (a.kind) {
        case ModuleLabel::Kind::Unit:
        case ModuleLabel::Kind::Zero: return true;
        case ModuleLabel::Kind::Fund:
            return a.node == b.node && param_eq(a.node, a.x, b.x);
        case ModuleLabel::Kind::KR:
            return a.node == b.node && a.m == b.m && param_eq(a.node, a.x, b.x);
        case ModuleLabel::Kind::HeadPair:
            return a.node == b.node && a.node2 == b.node2 && param_eq(a.node, a.x, b.x) &&
                   param_eq(a.node2, a.x2, b.x2);
    }
    return false;
}

ModuleLabel segment_image(const AffineTypeSpec& spec, const Segment& seg) {
    const int N = spec.N;
    const int len = seg.length();
    if (len > N) return ModuleLabel::zero_label();
    if (len == N) return ModuleLabel::unit();
    // One-letter segments are the family members themselves.
    if (seg.a == seg.b) return ModuleLabel::fund(spec.i_map(seg.a), spec.x_map(seg.a));

    // Normalize the left end into [0, N-1]; each period shift multiplies the
    // parameter by p*^2.
    std::int64_t r = seg.a % N;
    if (r < 0) r += N;
    const std::int64_t shift = (seg.a - r) / N;
    const int a = static_cast<int>(r);
    const int b = static_cast<int>(seg.b - shift * std::int64_t(N));
    const SpectralParam mult = spec.p_star_sq.pow(shift);
    const int n = spec.n;

    switch (spec.tag) {
        case AffineTag::A1:
            return ModuleLabel::fund(len, SpectralParam::neg_q_pow(a + b) * mult);
        case AffineTag::A2: {
            if (len <= N / 2) return ModuleLabel::fund(len, SpectralParam::neg_q_pow(a + b) * mult);
            return ModuleLabel::fund(N - len, SpectralParam::sign_pow(N) *
                                                  SpectralParam::neg_q_pow(a + b) * mult);
        }
        case AffineTag::B1: {
            const SpectralParam qk =
                SpectralParam::sign_pow(n + 1) * SpectralParam::q_half_pow(2 * n + 1);
            if (a == 0 && b <= N - 2)
                return ModuleLabel::fund(n, SpectralParam::q_half_pow(4 * b) * mult);
            if (a >= 1 && b == N - 1)
                return ModuleLabel::fund(n, SpectralParam::q_half_pow(2 * (2 * a + N - 3)) * mult);
            if (1 <= a && b <= N - 2) {
                if (len < n)
                    return ModuleLabel::fund(len, SpectralParam::sign_pow(b - a) * qk *
                                                      SpectralParam::q_half_pow(2 * (a + b - 2)) * mult);
                return ModuleLabel::head_pair(n, SpectralParam::q_half_pow(4 * b) * mult, n,
                                              SpectralParam::q_half_pow(2 * (2 * a + N - 3)) * mult);
            }
            if (1 <= a && a <= N - 1 && b > N - 1) {
                if (len <= n)
                    return ModuleLabel::head_pair(n, SpectralParam::q_half_pow(2 * (2 * a + N - 3)) * mult,
                                                  n, SpectralParam::q_half_pow(2 * (2 * b - 2)) * mult);
                return ModuleLabel::fund(N - len, SpectralParam::sign_pow(b - a) * qk *
                                                      SpectralParam::q_half_pow(2 * (a + b - 3)) * mult);
            }
            break;
        }
        case AffineTag::C1: {
            const SpectralParam qk = SpectralParam::sign_pow(n + 3) * SpectralParam::q_half_pow(n + 3);
            if (a == 0)
                return ModuleLabel::fund(n - b, SpectralParam::sign_pow(b) *
                                                    SpectralParam::q_half_pow(b) * mult);
            if (1 <= a && b <= N - 1)
                return ModuleLabel::fund(len, qk * SpectralParam::sign_pow(a + b - 2) *
                                                  SpectralParam::q_half_pow(a + b - 2) * mult);
            break;
        }
        case AffineTag::D1:
        case AffineTag::D2:
        case AffineTag::D3: {
            const int t = spec.tag == AffineTag::D1 ? 1 : (spec.tag == AffineTag::D2 ? 2 : 3);
            if (a == 0 && b <= N - 2) {
                const int delta = (b != 0 && t == 1) ? 1 : 0;
                const int node = N + 1 - t - b - delta;
                if (node < 1 || node > spec.node_count) break;
                return ModuleLabel::fund(node, SpectralParam::q_half_pow(2 * b) * mult);
            }
            if (a == 1 && b <= N - 1) {
                const int eps = (b - 1) % 2;
                const SpectralParam base = SpectralParam::q_half_pow(4 * (b - 1)) * mult;
                if (t == 1) return ModuleLabel::fund(n - eps, base);
                if (t == 2) return ModuleLabel::fund(n - 1, SpectralParam::sign_pow(eps) * base);
                return ModuleLabel::fund(1, SpectralParam::omega_pow(eps) * base);
            }
            if (2 <= a && b <= N - 1) {
                SpectralParam qk;
                if (t == 1) qk = SpectralParam::neg_q_pow(n);
                if (t == 2) qk = SpectralParam::imag_pow(n - 1) * SpectralParam::q_half_pow(2 * n);
                if (t == 3) qk = SpectralParam::omega_pow(1) * SpectralParam::q_half_pow(8);
                return ModuleLabel::fund(len, qk * SpectralParam::neg_q_pow(a + b - 2) * mult);
            }
            break;
        }
    }
    throw OutOfStatedDomain("no stated image for segment " + seg.str() + " in type " +
                            tag_name(spec.tag));
}

namespace {

// Folded Kirillov-Reshetikhin label for W^{(ell)}_{m, (-q)^e}, per the
// image corollary of the type A dictionary.
ModuleLabel kr_folded(const AffineTypeSpec& spec, int ell, int m, std::int64_t e) {
    const int N = spec.N;
    if (ell < 0 || ell > N) throw OutOfStatedDomain("KR column out of range");
    if (m == 0 || ell == 0 || ell == N) return ModuleLabel::unit();
    if (spec.tag == AffineTag::A1) return ModuleLabel::kr(ell, m, SpectralParam::neg_q_pow(e));
    if (ell <= N / 2) return ModuleLabel::kr(ell, m, SpectralParam::neg_q_pow(e));
    return ModuleLabel::kr(N - ell, m, SpectralParam::sign_pow(N) * SpectralParam::neg_q_pow(e));
}

}  // namespace

ModuleLabel kr_image(const AffineTypeSpec& spec, int ell, int m, int j) {
    if (spec.tag != AffineTag::A1 && spec.tag != AffineTag::A2)
        throw NotStated("KR dictionary is stated for the type A families only");
    return kr_folded(spec, ell, m, 2 * j - ell + 1);
}

TSystemTriple t_system_triple(const AffineTypeSpec& spec, int ell, int m, std::int64_t k) {
    if (spec.tag != AffineTag::A1 && spec.tag != AffineTag::A2)
        throw NotStated("T-system translation is stated for the type A families only");
    if (ell < 1 || ell > spec.N - 1) throw OutOfStatedDomain("T-system column out of range");
    TSystemTriple t;
    t.sub = {kr_folded(spec, ell, m - 1, k + 2), kr_folded(spec, ell, m + 1, k)};
    t.mid = {kr_folded(spec, ell, m, k), kr_folded(spec, ell, m, k + 2)};
    t.quot = {kr_folded(spec, ell - 1, m, k + 1), kr_folded(spec, ell + 1, m, k + 1)};
    return t;
}

}  // namespace ainf
