#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ainf/affine.hpp"
#include "ainf/multiseg.hpp"
#include "ainf/quiver.hpp"
#include "ainf/seed.hpp"
#include "ainf/tnring.hpp"
#include "ainf/weight.hpp"
#include "ainf/word.hpp"

namespace py = pybind11;
using namespace ainf;

namespace {

std::vector<std::pair<int, int>> ms_to_pairs(const Multisegment& ms) {
    std::vector<std::pair<int, int>> out;
    for (const Segment& s : ms.segments()) out.push_back({s.a, s.b});
    return out;
}

Multisegment pairs_to_ms(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Segment> segs;
    for (const auto& [a, b] : pairs) segs.emplace_back(a, b);
    return Multisegment(segs);
}

Weight alpha_combination(const std::map<int, std::int64_t>& coeffs) {
    Weight w;
    for (const auto& [j, c] : coeffs) w = w + Weight::alpha(j).scaled(c);
    return w;
}

}  // namespace

PYBIND11_MODULE(_ainf, m) {
    m.doc() = "quantum cluster combinatorics of the type A-infinity lattice";

    py::class_<Weight>(m, "Weight")
        .def(py::init<>())
        .def_static("lam", &Weight::lambda)
        .def_static("eps", &Weight::eps)
        .def_static("alpha", &Weight::alpha)
        .def("__add__", &Weight::operator+)
        .def("__sub__",
             static_cast<Weight (Weight::*)(const Weight&) const>(&Weight::operator-))
        .def("__eq__", &Weight::operator==)
        .def("scaled", &Weight::scaled)
        .def("__repr__", &Weight::str);

    m.def("pair", [](const Weight& x, const Weight& y) {
        const HalfInt h = pair(x, y);
        return py::make_tuple(h.doubled, 2);
    }, "bilinear form as a (numerator, 2) pair");
    m.def("coroot", &coroot);
    m.def("reflect", &reflect);
    m.def("apply_word", [](const std::vector<int>& w, const Weight& x) {
        return apply_word(w, x);
    });

    m.def("a_val", &a_val);
    m.def("jp", &jp);
    m.def("coord", [](std::int64_t p) {
        const Coord c = coord(p);
        return py::make_tuple(c.ell, c.m);
    });
    m.def("coord_inv", [](int ell, int mm) { return coord_inv(ell, mm); });
    m.def("p_plus", &p_plus);
    m.def("p_minus", &p_minus);
    m.def("p_plus_j", &p_plus_j);
    m.def("p_minus_j", &p_minus_j);
    m.def("is_reduced_prefix", &is_reduced_prefix);
    m.def("prefix_word", &prefix_word);
    m.def("prefix_length", [](std::int64_t p) { return perm_of_prefix(p).length(); });

    m.def("w_label", [](int ell, int mm, int j) { return ms_to_pairs(w_label(ell, mm, j)); });
    m.def("det_label", [](std::int64_t p) { return ms_to_pairs(det_label(p)); });
    m.def("mutated_det_label", [](std::int64_t p) { return ms_to_pairs(mutated_det_label(p)); });
    m.def("cusp_label", [](std::int64_t p) {
        const CuspLabel c = cusp_label(p);
        if (std::holds_alternative<Segment>(c)) {
            const Segment s = std::get<Segment>(c);
            return py::make_tuple("segment", s.a, s.b);
        }
        const RevSegment s = std::get<RevSegment>(c);
        return py::make_tuple("reversed", s.a, s.b);
    });
    m.def("wt_of", [](const std::vector<std::pair<int, int>>& pairs) {
        return wt_of(pairs_to_ms(pairs));
    });
    m.def("merge_commuting", [](const std::vector<std::pair<int, int>>& x,
                                const std::vector<std::pair<int, int>>& y) {
        return ms_to_pairs(merge_commuting(pairs_to_ms(x), pairs_to_ms(y)));
    });

    m.def("omega_n", [](const std::vector<std::pair<int, int>>& pairs, int N) -> py::object {
        const ClassTN c = omega_n(pairs_to_ms(pairs), N);
        if (c.zero) return py::none();
        return py::cast(ms_to_pairs(c.ms));
    }, "None when the class vanishes, the stripped multisegment otherwise");
    m.def("b_form_n", [](const std::map<int, std::int64_t>& x, const std::map<int, std::int64_t>& y,
                         int N) { return b_form_n(alpha_combination(x), alpha_combination(y), N); },
          "bilinear form on alpha-coefficient maps");
    m.def("c_a", [](int a, const std::map<int, std::int64_t>& beta, int N) {
        return c_a(a, alpha_combination(beta), N);
    });
    m.def("f_a_j", [](int a, int j, int N) {
        const SignedMonomial f = f_a_j(a, j, N);
        return py::make_tuple(f.sign, f.z_exp);
    });
    m.def("pairing_n", &pairing_n);

    m.def("lambda_init", &lambda_init);
    m.def("seed_compatible", [](int cap) {
        const QuantumSeed seed = build_seed(Window::by_sum(cap));
        return compatible(seed.L, seed.B, 2, seed.exchangeable(), seed.vertices);
    }, "build the window seed and verify d=2 compatibility");

    m.def("verify_reversing", [](int cap, int margin) { return verify_reversing(cap, margin).pass; });
    m.def("verify_periodicity",
          [](int cap, int margin) { return verify_periodicity(cap, margin).pass; });
    m.def("verify_periodicity_n",
          [](int N, int mcap, int margin) { return verify_periodicity_n(N, mcap, margin).pass; });
    m.def("quiver_dot", [](int cap) { return initial_quiver(Window::by_sum(cap)).to_dot(); });
    m.def("quiver_json", [](int cap) { return initial_quiver(Window::by_sum(cap)).to_json(); });

    py::class_<AffineTypeSpec>(m, "AffineTypeSpec")
        .def_readonly("N", &AffineTypeSpec::N)
        .def_readonly("n", &AffineTypeSpec::n)
        .def_readonly("node_count", &AffineTypeSpec::node_count)
        .def("i_map", &AffineTypeSpec::i_map)
        .def("x_map", [](const AffineTypeSpec& s, std::int64_t a) {
            const SpectralParam x = s.x_map(a);
            return py::make_tuple(x.zeta, x.e);
        });
    m.def("family_spec", [](const std::string& tag, int rank) {
        return family_spec(parse_affine_tag(tag), rank);
    });
    m.def("check_a_infinity", [](const AffineTypeSpec& spec, int window) {
        return check_a_infinity(spec, window).pass;
    });
    m.def("check_dual_period", [](const AffineTypeSpec& spec, int window) {
        return check_dual_period(spec, window).pass;
    });
    m.def("segment_image", [](const AffineTypeSpec& spec, int a, int b) {
        return segment_image(spec, Segment(a, b)).str();
    });
    m.def("kr_image", [](const AffineTypeSpec& spec, int ell, int mm, int j) {
        return kr_image(spec, ell, mm, j).str();
    });
    m.def("t_system_triple", [](const AffineTypeSpec& spec, int ell, int mm, std::int64_t k) {
        const TSystemTriple t = t_system_triple(spec, ell, mm, k);
        return py::make_tuple(py::make_tuple(t.sub.first.str(), t.sub.second.str()),
                              py::make_tuple(t.mid.first.str(), t.mid.second.str()),
                              py::make_tuple(t.quot.first.str(), t.quot.second.str()));
    });
}
