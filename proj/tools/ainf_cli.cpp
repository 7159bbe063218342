#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ainf/affine.hpp"
#include "ainf/errors.hpp"
#include "ainf/multiseg.hpp"
#include "ainf/quiver.hpp"
#include "ainf/seed.hpp"
#include "ainf/tnring.hpp"
#include "ainf/word.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

int run_word_check(std::int64_t pmax, bool as_json) {
    std::int64_t ok = 0;
    for (std::int64_t p = 1; p <= pmax; ++p) {
        if (!ainf::is_reduced_prefix(p)) break;
        const auto w = ainf::prefix_word(p - 1);
        const ainf::Weight beta =
            ainf::apply_word(w, ainf::Weight::alpha(ainf::jp(p)));
        if (beta != ainf::beta_closed_form(p)) break;
        if (ainf::jp(p) != ainf::jp_from_coord(p)) break;
        ++ok;
    }
    if (as_json) {
        std::cout << json{{"checked", pmax}, {"passed", ok}}.dump() << "\n";
    } else {
        std::cout << (ok == pmax ? "OK " : "FAIL ") << ok << "/" << pmax << "\n";
    }
    return ok == pmax ? 0 : 1;
}

int run_coord(std::int64_t p, int ell, int m, bool as_json) {
    if (p > 0) {
        const ainf::Coord c = ainf::coord(p);
        if (as_json)
            std::cout << json{{"p", p}, {"ell", c.ell}, {"m", c.m}, {"j", ainf::jp(p)}}.dump() << "\n";
        else
            std::cout << "p=" << p << " -> (ell,m)=(" << c.ell << "," << c.m << "), j=" << ainf::jp(p)
                      << "\n";
        return 0;
    }
    const std::int64_t q = ainf::coord_inv(ell, m);
    if (as_json)
        std::cout << json{{"ell", ell}, {"m", m}, {"p", q}}.dump() << "\n";
    else
        std::cout << "(ell,m)=(" << ell << "," << m << ") -> p=" << q << "\n";
    return 0;
}

int run_seed_verify(int cap, int N, bool as_json) {
    ainf::SeedOptions opts;
    ainf::Window win = ainf::Window::by_sum(cap);
    if (N > 0) {
        opts.kind = ainf::SeedKind::TruncatedBar;
        opts.N = N;
        win = ainf::Window::truncated(N - 1, cap);
    }
    const ainf::QuantumSeed seed = ainf::build_seed(win, opts);
    bool skew_ok = true;
    for (std::int64_t v : seed.vertices)
        if (seed.L.at(v, v) != 0) skew_ok = false;
    const bool comp = ainf::compatible(seed.L, seed.B, 2, seed.exchangeable(), seed.vertices);
    if (as_json) {
        std::cout << json{{"vertices", seed.vertices.size()},
                          {"exchangeable", seed.exchangeable().size()},
                          {"skew", skew_ok},
                          {"compatible_d2", comp}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "vertices: " << seed.vertices.size() << " (exchangeable "
                  << seed.exchangeable().size() << ")\n";
        std::cout << "compatibility with d=2: " << (comp ? "PASS" : "FAIL") << "\n";
    }
    return comp && skew_ok ? 0 : 1;
}

int run_mutate(const std::string& schedule, int cap, int N, int reps, bool quantum, bool as_json) {
    using namespace ainf;
    const bool truncated = N > 0;
    const Window win = truncated ? Window::truncated(N - 1, cap) : Window::by_sum(cap);

    std::vector<Coord> sched;
    if (schedule == "even") sched = truncated ? sigma_even_n(N, win) : sigma_even(win);
    else if (schedule == "odd") sched = truncated ? sigma_odd_n(N, win) : sigma_odd(win);
    else if (schedule == "plus") sched = truncated ? sigma_plus_n(N, win) : sigma_plus(win);
    else if (schedule == "minus") sched = truncated ? sigma_minus_n(N, win) : sigma_minus(win);
    else if (schedule == "hl") {
        if (!truncated) {
            std::cerr << "the hl schedule needs --N\n";
            return 2;
        }
        sched = sigma_hl(N, win);
    } else {
        std::cerr << "unknown schedule: " << schedule << "\n";
        return 2;
    }

    Quiver q = initial_quiver(win);
    const Quiver initial = q;
    for (int r = 0; r < reps; ++r) q = apply_schedule(q, sched);

    json out;
    out["schedule"] = schedule;
    out["length"] = sched.size() * static_cast<size_t>(reps);
    bool pass = true;
    const int margin = 2 * reps;
    if (schedule == "even" || schedule == "odd") {
        if (reps == 1) pass = equals_labeled(q, initial.opposite(), win, margin);
        out["quiver_reversed"] = pass;
    } else if (schedule == "plus" || schedule == "minus") {
        pass = equals_labeled(q, initial, win, margin);
        out["quiver_periodic"] = pass;
    }
    out["no_two_cycles"] = !q.has_loop_or_two_cycle();
    pass = pass && !q.has_loop_or_two_cycle();

    if (quantum) {
        SeedOptions opts;
        if (truncated) {
            opts.kind = SeedKind::TruncatedBar;
            opts.N = N;
        }
        QuantumSeed seed = build_seed(win, opts);
        const Window inner = win.shrunk(margin + 1);
        bool positive = true;
        size_t mutations = 0;
        try {
            for (int r = 0; r < reps; ++r)
                for (const Coord& c : sched) {
                    if (!inner.contains(c)) continue;
                    const std::int64_t p = coord_inv(c);
                    if (!seed.is_exchangeable(p)) continue;
                    mutate_seed(seed, p, det_label_rule);
                    ++mutations;
                    if (!seed.vars.at(p).coefficients_nonnegative()) positive = false;
                }
        } catch (const NonLaurent& e) {
            out["laurent"] = false;
            pass = false;
        }
        if (!out.contains("laurent")) out["laurent"] = true;
        out["mutations"] = mutations;
        out["positive"] = positive;
        json labels = json::array();
        for (const auto& [p, label] : seed.labels) {
            if (!inner.contains(coord(p))) continue;
            const Coord c = coord(p);
            labels.push_back({{"p", p}, {"ell", c.ell}, {"m", c.m}, {"label", label.str()}});
        }
        out["labels"] = labels;
        pass = pass && positive;
    }

    if (as_json) {
        out["pass"] = pass;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "schedule " << schedule << " x" << reps << " (" << sched.size()
                  << " vertices): " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_quiver_export(int cap, int N, const std::string& format) {
    using namespace ainf;
    Quiver q;
    if (N > 0) {
        Window win;
        win.ell_cap = N;
        win.m_cap = cap;
        q = initial_quiver(win).truncated(N);
    } else {
        q = initial_quiver(Window::by_sum(cap));
    }
    std::cout << (format == "dot" ? q.to_dot() : q.to_json()) << "\n";
    return 0;
}

int run_tn_omega(int N, const std::string& ms_json, bool as_json) {
    const json parsed = json::parse(ms_json);
    std::vector<ainf::Segment> segs;
    for (const auto& pair : parsed) segs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    const ainf::ClassTN cls = ainf::omega_n(ainf::Multisegment(segs), N);
    if (as_json) {
        json out;
        out["zero"] = cls.zero;
        if (!cls.zero) {
            json arr = json::array();
            for (const auto& s : cls.ms.segments()) arr.push_back({s.a, s.b});
            out["segments"] = arr;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << cls.str() << "\n";
    }
    return 0;
}

ainf::Weight parse_root_combination(const std::string& text) {
    // Accepts a JSON map {"j": coeff} of alpha coefficients.
    const json parsed = json::parse(text);
    ainf::Weight w;
    for (auto it = parsed.begin(); it != parsed.end(); ++it)
        w = w + ainf::Weight::alpha(std::stoi(it.key())).scaled(it.value().get<std::int64_t>());
    return w;
}

int run_tn_bform(int N, const std::string& x, const std::string& y, bool as_json) {
    const std::int64_t v = ainf::b_form_n(parse_root_combination(x), parse_root_combination(y), N);
    if (as_json)
        std::cout << json{{"value", v}}.dump() << "\n";
    else
        std::cout << v << "\n";
    return 0;
}

int run_affine_gamma(const std::string& type, int rank, int window, bool as_json) {
    const ainf::AffineTypeSpec spec = ainf::family_spec(ainf::parse_affine_tag(type), rank);
    const auto a_inf = ainf::check_a_infinity(spec, window);
    const auto period = ainf::check_dual_period(spec, window);
    if (as_json) {
        json arrows = json::array();
        for (const auto& [a, b, d] : ainf::gamma_quiver(spec, window)) arrows.push_back({a, b, d});
        std::cout << json{{"type", type},
                          {"N", spec.N},
                          {"a_infinity", a_inf.pass},
                          {"dual_period", period.pass},
                          {"arrows", arrows}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "A-infinity: " << (a_inf.pass ? "PASS" : "FAIL " + a_inf.detail) << "\n";
        std::cout << "dual period: " << (period.pass ? "PASS" : "FAIL " + period.detail) << "\n";
    }
    return a_inf.pass && period.pass ? 0 : 1;
}

int run_affine_seg(const std::string& type, int rank, int a, int b, bool as_json) {
    const ainf::AffineTypeSpec spec = ainf::family_spec(ainf::parse_affine_tag(type), rank);
    const ainf::ModuleLabel label = ainf::segment_image(spec, ainf::Segment(a, b));
    if (as_json) {
        json out;
        switch (label.kind) {
            case ainf::ModuleLabel::Kind::Unit: out["kind"] = "unit"; break;
            case ainf::ModuleLabel::Kind::Zero: out["kind"] = "zero"; break;
            case ainf::ModuleLabel::Kind::Fund:
                out = {{"kind", "fund"}, {"node", label.node}, {"zeta", label.x.zeta}, {"e", label.x.e}};
                break;
            case ainf::ModuleLabel::Kind::KR:
                out = {{"kind", "kr"},
                       {"node", label.node},
                       {"m", label.m},
                       {"zeta", label.x.zeta},
                       {"e", label.x.e}};
                break;
            case ainf::ModuleLabel::Kind::HeadPair:
                out = {{"kind", "head_pair"},
                       {"node", label.node},
                       {"zeta", label.x.zeta},
                       {"e", label.x.e},
                       {"node2", label.node2},
                       {"zeta2", label.x2.zeta},
                       {"e2", label.x2.e}};
                break;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << label.str() << "\n";
    }
    return 0;
}

int run_affine_tsys(int t, int rank, int ell, int m, int k, bool as_json) {
    const ainf::AffineTypeSpec spec =
        ainf::family_spec(t == 1 ? ainf::AffineTag::A1 : ainf::AffineTag::A2, rank);
    const ainf::TSystemTriple triple = ainf::t_system_triple(spec, ell, m, k);
    if (as_json) {
        auto enc = [](const std::pair<ainf::ModuleLabel, ainf::ModuleLabel>& pr) {
            return json{pr.first.str(), pr.second.str()};
        };
        std::cout << json{{"sub", enc(triple.sub)}, {"mid", enc(triple.mid)}, {"quot", enc(triple.quot)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "sub:  " << triple.sub.first.str() << " (x) " << triple.sub.second.str() << "\n";
        std::cout << "mid:  " << triple.mid.first.str() << " (x) " << triple.mid.second.str() << "\n";
        std::cout << "quot: " << triple.quot.first.str() << " (x) " << triple.quot.second.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum cluster combinatorics of the type A-infinity lattice"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // word check
    auto* word = app.add_subcommand("word", "reduced word checks");
    auto* word_check = word->add_subcommand("check", "verify prefixes and the closed-form roots");
    std::int64_t pmax = 210;
    word_check->add_option("--pmax", pmax, "largest prefix length");

    // coord
    auto* coord_cmd = app.add_subcommand("coord", "coordinate bijection queries");
    std::int64_t coord_p = 0;
    int coord_ell = 0, coord_m = 0;
    coord_cmd->add_option("--p", coord_p, "mutation index");
    coord_cmd->add_option("--ell", coord_ell, "column");
    coord_cmd->add_option("--m", coord_m, "row");

    // seed verify
    auto* seed = app.add_subcommand("seed", "initial quantum seed");
    auto* seed_verify = seed->add_subcommand("verify", "build the seed and check d=2 compatibility");
    int seed_cap = 10, seed_n = 0;
    seed_verify->add_option("--cap", seed_cap, "window cap (sum, or m rows when --N is set)");
    seed_verify->add_option("--N", seed_n, "truncation level");

    // mutate
    auto* mutate = app.add_subcommand("mutate", "run a mutation schedule");
    std::string mut_sched = "plus";
    int mut_cap = 10, mut_n = 0, mut_reps = 1;
    bool mut_quantum = false;
    mutate->add_option("--schedule", mut_sched, "even|odd|plus|minus|hl")->required();
    mutate->add_option("--cap", mut_cap, "window cap");
    mutate->add_option("--N", mut_n, "truncation level");
    mutate->add_option("--reps", mut_reps, "schedule repetitions");
    mutate->add_flag("--quantum", mut_quantum, "track quantum cluster variables and labels");

    // quiver export
    auto* quiver_cmd = app.add_subcommand("quiver", "quiver export");
    auto* quiver_export = quiver_cmd->add_subcommand("export", "emit the initial quiver");
    int q_cap = 8, q_n = 0;
    std::string q_format = "dot";
    quiver_export->add_option("--cap", q_cap, "window cap");
    quiver_export->add_option("--N", q_n, "truncation level");
    quiver_export->add_option("--format", q_format, "dot|json");

    // tn
    auto* tn = app.add_subcommand("tn", "truncated category combinatorics");
    auto* tn_omega = tn->add_subcommand("omega", "classify a multisegment class");
    int tn_n = 2;
    std::string tn_ms = "[]";
    tn_omega->add_option("--N", tn_n, "truncation level")->required();
    tn_omega->add_option("--ms", tn_ms, "multisegment as a JSON list of [a,b] pairs")->required();
    auto* tn_bform = tn->add_subcommand("bform", "evaluate the truncation bilinear form");
    int tnb_n = 2;
    std::string tnb_x = "{}", tnb_y = "{}";
    tn_bform->add_option("--N", tnb_n, "truncation level")->required();
    tn_bform->add_option("--x", tnb_x, "alpha coefficients of x as a JSON map")->required();
    tn_bform->add_option("--y", tnb_y, "alpha coefficients of y as a JSON map")->required();

    // affine
    auto* affine = app.add_subcommand("affine", "affine family dictionaries");
    auto* aff_gamma = affine->add_subcommand("gamma", "family quiver checks");
    std::string aff_type = "A1";
    int aff_rank = 4, aff_window = 8;
    aff_gamma->add_option("--type", aff_type, "A1|A2|B1|C1|D1|D2|D3")->required();
    aff_gamma->add_option("--rank", aff_rank, "rank subscript");
    aff_gamma->add_option("--window", aff_window, "index window");
    auto* aff_seg = affine->add_subcommand("seg", "segment dictionary image");
    std::string seg_type = "A1";
    int seg_rank = 4, seg_a = 0, seg_b = 0;
    aff_seg->add_option("--type", seg_type)->required();
    aff_seg->add_option("--rank", seg_rank);
    aff_seg->add_option("--a", seg_a)->required();
    aff_seg->add_option("--b", seg_b)->required();
    auto* aff_tsys = affine->add_subcommand("tsys", "T-system exchange triple");
    int ts_t = 1, ts_rank = 4, ts_ell = 1, ts_m = 1, ts_k = 0;
    aff_tsys->add_option("--t", ts_t, "1 or 2")->required();
    aff_tsys->add_option("--rank", ts_rank);
    aff_tsys->add_option("--ell", ts_ell)->required();
    aff_tsys->add_option("--m", ts_m)->required();
    aff_tsys->add_option("--k", ts_k)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (word_check->parsed()) return run_word_check(pmax, as_json);
        if (coord_cmd->parsed()) {
            if (coord_p <= 0 && (coord_ell <= 0 || coord_m <= 0)) {
                std::cerr << "need --p, or --ell and --m\n";
                return 2;
            }
            return run_coord(coord_p, coord_ell, coord_m, as_json);
        }
        if (seed_verify->parsed()) return run_seed_verify(seed_cap, seed_n, as_json);
        if (mutate->parsed())
            return run_mutate(mut_sched, mut_cap, mut_n, mut_reps, mut_quantum, as_json);
        if (quiver_export->parsed()) return run_quiver_export(q_cap, q_n, q_format);
        if (tn_omega->parsed()) return run_tn_omega(tn_n, tn_ms, as_json);
        if (tn_bform->parsed()) return run_tn_bform(tnb_n, tnb_x, tnb_y, as_json);
        if (aff_gamma->parsed()) return run_affine_gamma(aff_type, aff_rank, aff_window, as_json);
        if (aff_seg->parsed()) return run_affine_seg(seg_type, seg_rank, seg_a, seg_b, as_json);
        if (aff_tsys->parsed()) return run_affine_tsys(ts_t, ts_rank, ts_ell, ts_m, ts_k, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
