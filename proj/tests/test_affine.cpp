#include "ainf/affine.hpp"

#include "ainf/errors.hpp"
#include "doctest.h"

using namespace ainf;

TEST_CASE("spectral parameters") {
    CHECK(SpectralParam::neg_q_pow(2) == SpectralParam::q_half_pow(4));
    CHECK(SpectralParam::neg_q_pow(1) == SpectralParam::sign_pow(1) * SpectralParam::q_half_pow(2));
    CHECK(SpectralParam::omega_pow(3) == SpectralParam::one());
    CHECK(SpectralParam::imag_pow(2) == SpectralParam::sign_pow(1));
    const SpectralParam x = SpectralParam::omega_pow(1) * SpectralParam::q_half_pow(5);
    CHECK(x.pow(3) == SpectralParam::q_half_pow(15));
    CHECK(x / x == SpectralParam::one());
}

TEST_CASE("denominator zero multisets") {
    const auto a1 = family_spec(AffineTag::A1, 5);  // N = 6
    const auto ra = denom(a1, 1, 1);
    REQUIRE(ra.size() == 1);
    CHECK(ra[0] == SpectralParam::neg_q_pow(2));

    const auto b1 = family_spec(AffineTag::B1, 3);  // N = 6
    const auto rb = denom(b1, 3, 3);
    REQUIRE(rb.size() == 3);
    for (int s = 1; s <= 3; ++s) CHECK(rb[static_cast<size_t>(s - 1)] == SpectralParam::q_half_pow(4 * s - 2));

    const auto c1 = family_spec(AffineTag::C1, 4);  // N = 5
    const auto rc = denom(c1, 1, 1);
    REQUIRE(rc.size() == 2);
    CHECK(rc[0] == SpectralParam::sign_pow(2) * SpectralParam::q_half_pow(2));
    CHECK(rc[1] == SpectralParam::sign_pow(10) * SpectralParam::q_half_pow(10));

    CHECK_THROWS_AS(denom(family_spec(AffineTag::D1, 5), 2, 3), UnknownPair);
}

TEST_CASE("family specifications") {
    const auto a1 = family_spec(AffineTag::A1, 4);
    CHECK(a1.N == 5);
    for (int a = -4; a <= 4; ++a) CHECK(a1.i_map(a) == 1);
    CHECK(a1.x_map(3) == SpectralParam::q_half_pow(12));
    CHECK(a1.p_star_sq == SpectralParam::q_half_pow(20));

    const auto b1 = family_spec(AffineTag::B1, 3);
    CHECK(b1.N == 6);
    CHECK(b1.i_map(-1) == 3);
    CHECK(b1.i_map(0) == 3);
    CHECK(b1.i_map(2) == 1);
    CHECK(b1.x_map(-1) == SpectralParam::q_half_pow(2 * (b1.N - 3)));

    const auto c1 = family_spec(AffineTag::C1, 4);
    CHECK(c1.N == 5);
    CHECK(c1.i_map(0) == 4);
    CHECK(c1.i_map(1) == 1);
    CHECK(c1.p_star_sq == SpectralParam::q_half_pow(20));

    CHECK_THROWS_AS(family_spec(AffineTag::D3, 5), BadRank);
}

TEST_CASE("arrow multiplicities") {
    const auto a1 = family_spec(AffineTag::A1, 4);
    CHECK(d_arrow(a1, 2, 3) + d_arrow(a1, 3, 2) == 1);
    CHECK(d_arrow(a1, 2, 4) + d_arrow(a1, 4, 2) == 0);
    const auto b1 = family_spec(AffineTag::B1, 3);
    CHECK(d_arrow(b1, -1, 0) + d_arrow(b1, 0, -1) == 1);
}

TEST_CASE("family quivers are infinite A chains") {
    for (auto [tag, rank] : {std::pair{AffineTag::A1, 6}, {AffineTag::A2, 5}, {AffineTag::B1, 3},
                             {AffineTag::C1, 4}, {AffineTag::D1, 5}, {AffineTag::D2, 5},
                             {AffineTag::D3, 4}}) {
        const auto spec = family_spec(tag, rank);
        const auto verdict = check_a_infinity(spec, 8);
        INFO(tag_name(tag), ": ", verdict.detail);
        CHECK(verdict.pass);
        CHECK(check_dual_period(spec, 8).pass);
    }
}

TEST_CASE("corrupted parameter map fails the family checks") {
    auto spec = family_spec(AffineTag::B1, 3);
    spec.x_fund[2] = spec.x_fund[1];
    const bool a_inf = check_a_infinity(spec, 8).pass;
    const bool period = check_dual_period(spec, 8).pass;
    CHECK(!(a_inf && period));
}

TEST_CASE("segment dictionary") {
    const auto a1 = family_spec(AffineTag::A1, 4);
    CHECK(label_equal(a1, segment_image(a1, Segment(0, 1)),
                      ModuleLabel::fund(2, SpectralParam::neg_q_pow(1))));
    const auto b1 = family_spec(AffineTag::B1, 3);
    CHECK(label_equal(b1, segment_image(b1, Segment(0, b1.N - 2)),
                      ModuleLabel::fund(3, SpectralParam::q_half_pow(4 * (b1.N - 2)))));
    const auto c1 = family_spec(AffineTag::C1, 4);
    const SpectralParam qk = SpectralParam::sign_pow(7) * SpectralParam::q_half_pow(7);
    for (int b = 1; b <= 3; ++b) {
        const SpectralParam expect = qk * SpectralParam::sign_pow(b - 1) * SpectralParam::q_half_pow(b - 1);
        CHECK(label_equal(c1, segment_image(c1, Segment(1, b)), ModuleLabel::fund(b, expect)));
    }
    // length N collapses, length > N vanishes
    for (auto [tag, rank] : {std::pair{AffineTag::A1, 6}, {AffineTag::A2, 5}, {AffineTag::B1, 3},
                             {AffineTag::C1, 4}, {AffineTag::D1, 5}, {AffineTag::D2, 5},
                             {AffineTag::D3, 4}}) {
        const auto spec = family_spec(tag, rank);
        for (int a = -8; a <= 8; ++a) {
            CHECK(segment_image(spec, Segment(a, a + spec.N - 1)).kind == ModuleLabel::Kind::Unit);
            CHECK(segment_image(spec, Segment(a, a + spec.N)).kind == ModuleLabel::Kind::Zero);
        }
    }
    // a crossing segment has no stated type C image
    CHECK_THROWS_AS(segment_image(family_spec(AffineTag::C1, 4), Segment(2, 5)), OutOfStatedDomain);
}

TEST_CASE("single letters map to family members") {
    for (auto [tag, rank] : {std::pair{AffineTag::A1, 6}, {AffineTag::B1, 3}, {AffineTag::C1, 4},
                             {AffineTag::D1, 5}, {AffineTag::D2, 5}, {AffineTag::D3, 4}}) {
        const auto spec = family_spec(tag, rank);
        for (int a = -8; a <= 8; ++a) {
            const ModuleLabel img = segment_image(spec, Segment(a, a));
            CHECK(img.kind == ModuleLabel::Kind::Fund);
            CHECK(img.node == spec.i_map(a));
            CHECK(img.x == spec.x_map(a));
        }
    }
}

TEST_CASE("KR dictionary") {
    const auto a1 = family_spec(AffineTag::A1, 4);
    CHECK(label_equal(a1, kr_image(a1, 2, 3, 1), ModuleLabel::kr(2, 3, SpectralParam::neg_q_pow(1))));
    CHECK(kr_image(a1, a1.N, 2, 0).kind == ModuleLabel::Kind::Unit);
    const auto a2 = family_spec(AffineTag::A2, 5);  // N = 6
    const ModuleLabel folded = kr_image(a2, 4, 2, 0);
    CHECK(folded.kind == ModuleLabel::Kind::KR);
    CHECK(folded.node == 2);
    CHECK(folded.x == SpectralParam::sign_pow(a2.N) * SpectralParam::neg_q_pow(-3));
    CHECK_THROWS_AS(kr_image(family_spec(AffineTag::B1, 3), 1, 1, 0), NotStated);
    // functoriality against the segment dictionary at tensor length one
    for (int ell = 1; ell <= 4; ++ell)
        for (int j = -3; j <= 3; ++j)
            CHECK(label_equal(a1, kr_image(a1, ell, 1, j),
                              segment_image(a1, Segment(j - ell + 1, j))));
}

TEST_CASE("T-system triples") {
    const auto a1 = family_spec(AffineTag::A1, 4);  // N = 5
    const TSystemTriple t = t_system_triple(a1, 2, 2, 0);
    CHECK(label_equal(a1, t.sub.first, ModuleLabel::kr(2, 1, SpectralParam::neg_q_pow(2))));
    CHECK(label_equal(a1, t.sub.second, ModuleLabel::kr(2, 3, SpectralParam::neg_q_pow(0))));
    CHECK(label_equal(a1, t.mid.first, ModuleLabel::kr(2, 2, SpectralParam::neg_q_pow(0))));
    CHECK(label_equal(a1, t.mid.second, ModuleLabel::kr(2, 2, SpectralParam::neg_q_pow(2))));
    CHECK(label_equal(a1, t.quot.first, ModuleLabel::kr(1, 2, SpectralParam::neg_q_pow(1))));
    CHECK(label_equal(a1, t.quot.second, ModuleLabel::kr(3, 2, SpectralParam::neg_q_pow(1))));
    // the boundary column has a trivial quotient factor
    CHECK(t_system_triple(a1, 1, 2, 0).quot.first.kind == ModuleLabel::Kind::Unit);
    CHECK(t_system_triple(a1, 4, 2, 0).quot.second.kind == ModuleLabel::Kind::Unit);
}

TEST_CASE("exchange relations translate to the T-system") {
    // the label-level exchange at (ell, m) with letters k, k+1 maps, factor
    // by factor, onto the T-system triple anchored at 2k - ell + 1
    for (auto [tag, rank] : {std::pair{AffineTag::A1, 4}, {AffineTag::A2, 4}}) {
        const auto spec = family_spec(tag, rank);  // N = 5
        for (int ell = 1; ell <= spec.N - 1; ++ell)
            for (int m = 1; ell + m <= 8; ++m)
                for (int k = -2; k <= 2; ++k) {
                    const std::int64_t anchor = 2 * k - ell + 1;
                    const TSystemTriple t = t_system_triple(spec, ell, m, anchor);
                    CHECK(label_equal(spec, t.sub.first, kr_image(spec, ell, m - 1, k + 1)));
                    CHECK(label_equal(spec, t.sub.second, kr_image(spec, ell, m + 1, k)));
                    CHECK(label_equal(spec, t.mid.first, kr_image(spec, ell, m, k)));
                    CHECK(label_equal(spec, t.mid.second, kr_image(spec, ell, m, k + 1)));
                    CHECK(label_equal(spec, t.quot.first, kr_image(spec, ell - 1, m, k)));
                    CHECK(label_equal(spec, t.quot.second, kr_image(spec, ell + 1, m, k + 1)));
                }
    }
}
