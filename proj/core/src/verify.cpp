#include "gauss/verify.hpp"

#include <algorithm>
#include <sstream>

#include "gauss/invariants.hpp"
#include "gauss/realizability.hpp"

namespace gauss {

namespace {

void flag(VerificationReport& rep, const std::string& what, const GaussDiagram& d) {
    if (rep.violations.size() < 20)
        rep.violations.push_back(what + " on \"" + serialize(d) + "\"");
    else if (rep.violations.size() == 20)
        rep.violations.push_back("...");
}

VerificationReport run_roundtrip(const VerifyOptions& opts) {
    VerificationReport rep{"roundtrip", opts.trials, {}, {}};
    Rng rng(opts.seed);
    for (int t = 0; t < opts.trials; ++t) {
        GaussDiagram d = random_diagram(rng, std::min(opts.max_arrows, 10));
        std::string code = serialize(d);
        GaussDiagram back = parse_gauss_code(code);
        if (canonical_form(back) != canonical_form(d)) flag(rep, "parse/serialize mismatch", d);
        if (serialize(back) != code) flag(rep, "serialize not idempotent", d);
        if (canonical_form(reverse_orientation(reverse_orientation(d))) != canonical_form(d))
            flag(rep, "double reversal changed diagram", d);
        if (canonical_form(mirror(mirror(d))) != canonical_form(d))
            flag(rep, "mirror not involutive", d);
    }
    return rep;
}

VerificationReport run_prop3(const VerifyOptions& opts) {
    VerificationReport rep{"prop3", opts.trials, {}, {}};
    Rng rng(opts.seed);
    for (int t = 0; t < opts.trials; ++t) {
        GaussDiagram d = random_diagram(rng, opts.max_arrows);
        GaussDiagram m = mirror(d), r = reverse_orientation(d);
        if (evaluate('A', 4, m) != evaluate('A', 4, d)) flag(rep, "A4(mirror) != A4", d);
        if (evaluate('D', 4, m) != evaluate('D', 4, d)) flag(rep, "D4(mirror) != D4", d);
        if (evaluate('W', 3, m) != -evaluate('W', 3, d)) flag(rep, "W3(mirror) != -W3", d);
        if (evaluate('A', 4, r) != evaluate('D', 4, d)) flag(rep, "A4(reverse) != D4", d);
        if (evaluate('D', 4, r) != evaluate('A', 4, d)) flag(rep, "D4(reverse) != A4", d);
        if (evaluate('W', 3, r) != evaluate('W', 3, d)) flag(rep, "W3(reverse) != W3", d);

        GaussDiagram e = random_diagram(rng, opts.max_arrows);
        GaussDiagram s = connected_sum(d, rng.below(gap_count(d)), e, rng.below(gap_count(e)));
        for (char name : {'A', 'D'})
            if (evaluate(name, 4, s) != evaluate(name, 4, d) + evaluate(name, 4, e))
                flag(rep, std::string(1, name) + "4 not additive", s);
        if (evaluate('W', 3, s) != evaluate('W', 3, d) + evaluate('W', 3, e))
            flag(rep, "W3 not additive", s);
        if (writhe(s) != writhe(d) + writhe(e)) flag(rep, "writhe not additive", s);
    }
    return rep;
}

VerificationReport run_prop4(const VerifyOptions& opts) {
    VerificationReport rep{"prop4", opts.trials, {}, {}};
    Rng rng(opts.seed);
    long long moves_checked = 0, r3_checked = 0;
    for (int t = 0; t < opts.trials; ++t) {
        GaussDiagram d = opts.classical ? random_classical_diagram(rng, opts.max_arrows)
                                        : random_diagram(rng, opts.max_arrows);
        DiagramState st = make_state(d);
        long long a4 = evaluate('A', 4, d), d4 = evaluate('D', 4, d);
        long long w3 = evaluate('W', 3, d), w5 = evaluate('W', 5, d);

        std::vector<std::pair<MoveSite, DirectedMoveClass>> moves = enumerate_removal_sites(d);
        for (int extra = 0; extra < 4; ++extra) {
            MoveSite ins = random_insertion(rng, d);
            moves.push_back({ins, classify(ins, d)});
        }
        for (const auto& [site, cls] : moves) {
            DiagramState after = apply_move(st, site);
            ++moves_checked;
            const GaussDiagram& nd = after.diagram;
            if (cls.cls.kind != MoveKind::R3) {
                if (evaluate('A', 4, nd) != a4) flag(rep, "A4 jumped under R1/R2", d);
                if (evaluate('D', 4, nd) != d4) flag(rep, "D4 jumped under R1/R2", d);
                if (evaluate('W', 3, nd) != w3) flag(rep, "W3 jumped under R1/R2", d);
                if (evaluate('W', 5, nd) != w5) flag(rep, "W5 jumped under R1/R2", d);
            } else {
                ++r3_checked;
                if (cls.cls.idx[3] == +1 && evaluate('A', 4, nd) != a4)
                    flag(rep, "A4 jumped under descending R3", d);
                if (cls.cls.idx[3] == -1 && evaluate('D', 4, nd) != d4)
                    flag(rep, "D4 jumped under ascending R3", d);
            }
        }
    }
    rep.stats["moves_checked"] = moves_checked;
    rep.stats["r3_moves_checked"] = r3_checked;
    return rep;
}

VerificationReport run_prop5(const VerifyOptions& opts) {
    VerificationReport rep{"prop5", opts.trials, {}, {}};
    Rng rng(opts.seed);
    long long sites = 0, llk_nonzero = 0;
    for (int t = 0; t < opts.trials; ++t) {
        GaussDiagram d = opts.classical ? random_classical_diagram(rng, opts.max_arrows)
                                        : random_diagram(rng, opts.max_arrows);
        DiagramState st = make_state(d);
        for (const R3Site& site : enumerate_r3_sites(d)) {
            ++sites;
            Omega3Context ctx = omega3_context(site, d);
            if (llk(d, ctx) != 0) ++llk_nonzero;
            W3Jump jump = w3_jump_check(st, site);
            if (jump.predicted != jump.actual) flag(rep, "W3 jump != direction*llk", d);
        }
    }
    rep.stats["r3_sites"] = sites;
    rep.stats["llk_nonzero"] = llk_nonzero;
    if (llk_nonzero == 0)
        rep.violations.push_back("corpus exercised no site with llk != 0");
    return rep;
}

VerificationReport run_thm2(const VerifyOptions& opts) {
    VerificationReport rep{"thm2", opts.trials, {}, {}};
    Rng rng(opts.seed);

    // closure of the index transformations over all 8 triples
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            IndexTriple from{a & 4 ? +1 : -1, a & 2 ? +1 : -1, a & 1 ? +1 : -1};
            IndexTriple to{b & 4 ? +1 : -1, b & 2 ? +1 : -1, b & 1 ? +1 : -1};
            try {
                conjugate_r3(from, to);
            } catch (const diagram_error&) {
                rep.violations.push_back("conjugate_r3 closure gap");
            }
        }

    struct ClassSpec {
        MoveKind kind;
        std::array<int, 4> idx;
    };
    std::vector<ClassSpec> classes;
    for (int i : {+1, -1})
        for (int j : {+1, -1}) {
            classes.push_back({MoveKind::R1, {i, j, 0, 0}});
            classes.push_back({MoveKind::R2, {i, j, 0, 0}});
            for (int k : {+1, -1})
                for (int m : {+1, -1}) classes.push_back({MoveKind::R3, {i, j, k, m}});
        }

    int hosts = std::max(1, opts.trials / static_cast<int>(classes.size()));
    long long rewrites = 0;
    for (const ClassSpec& cs : classes) {
        for (int h = 0; h < hosts; ++h) {
            int direction = h % 2 == 0 ? +1 : -1;
            DiagramState state = make_state(GaussDiagram{});
            MoveSite site;
            try {
                if (cs.kind == MoveKind::R3) {
                    auto [st, s] =
                        make_r3_instance(rng, {cs.idx[0], cs.idx[1], cs.idx[2]}, cs.idx[3],
                                         direction, rng.below(3));
                    state = st;
                    site = s;
                } else {
                    GaussDiagram host = random_diagram(rng, opts.max_arrows);
                    state = make_state(host, rng.below(5) - 2);
                    if (cs.kind == MoveKind::R1) {
                        R1Insert ins{rng.below(gap_count(host)), cs.idx[1], cs.idx[0],
                                     rng.below(2) == 1};
                        if (direction > 0) {
                            site = ins;
                        } else {
                            int id = state.diagram.max_arrow_id() + 1;
                            state = apply_move(state, ins);
                            site = R1Remove{id, cs.idx[0]};
                        }
                    } else {
                        R2Insert ins{rng.below(gap_count(host)), rng.below(gap_count(host)),
                                     cs.idx[0] > 0, -cs.idx[1]};
                        if (direction > 0) {
                            site = ins;
                        } else {
                            int id = state.diagram.max_arrow_id() + 1;
                            state = apply_move(state, ins);
                            site = R2Remove{id, id + 1};
                        }
                    }
                }
                DirectedMoveClass got = classify(site, state.diagram);
                if (got.cls.kind != cs.kind || got.cls.idx != cs.idx ||
                    got.direction != direction) {
                    flag(rep, "instance classified off target " + to_string(got), state.diagram);
                    continue;
                }
                DiagramState direct = apply_move(state, site);
                MoveSequence seq = rewrite_to_generating_set(state, site);
                ++rewrites;
                for (const RewriteStep& step : seq.steps)
                    if (!class_in_set(step.cls.cls, GeneratingSet::Primary))
                        flag(rep, "step outside generating set: " + to_string(step.cls.cls),
                             state.diagram);
                if (canonical_form(seq.end.diagram) != canonical_form(direct.diagram) ||
                    seq.end.winding != direct.winding)
                    flag(rep, "rewrite end state mismatch", state.diagram);
            } catch (const diagram_error& e) {
                flag(rep, std::string("rewrite failed: ") + e.what(), state.diagram);
            }
        }
    }
    rep.stats["rewrites"] = rewrites;
    return rep;
}

}  // namespace

std::pair<DiagramState, R3Site> make_r3_instance(Rng& rng, IndexTriple signs, int m,
                                                 int direction, int fillers) {
    const bool desc = m > 0;
    for (int tau_bit = 0; tau_bit < 2; ++tau_bit) {
        bool tau = tau_bit == 1;
        bool beta = tau ^ (signs.i * signs.k < 0);
        bool mu = tau ^ (signs.j * signs.k < 0);
        int n_agree;
        if (desc)
            n_agree = (tau ? 0 : 1) + (mu ? 1 : 0) + (beta ? 0 : 1);
        else
            n_agree = (tau ? 1 : 0) + (beta ? 1 : 0) + (mu ? 0 : 1);
        int q = n_agree % 2 == 0 ? +1 : -1;
        if ((direction > 0) != (q == -1)) continue;

        const int TM = 1, TB = 2, MB = 3;
        std::vector<Endpoint> segT = tau ? std::vector<Endpoint>{{TM, Role::Tail}, {TB, Role::Tail}}
                                         : std::vector<Endpoint>{{TB, Role::Tail}, {TM, Role::Tail}};
        std::vector<Endpoint> segM = mu ? std::vector<Endpoint>{{TM, Role::Head}, {MB, Role::Tail}}
                                        : std::vector<Endpoint>{{MB, Role::Tail}, {TM, Role::Head}};
        std::vector<Endpoint> segB = beta
                                         ? std::vector<Endpoint>{{TB, Role::Head}, {MB, Role::Head}}
                                         : std::vector<Endpoint>{{MB, Role::Head}, {TB, Role::Head}};
        std::vector<std::vector<Endpoint>> arcs(3);
        for (int f = 0; f < fillers; ++f) {
            int id = 4 + f;
            for (Role role : {Role::Tail, Role::Head}) {
                auto& arc = arcs[static_cast<std::size_t>(rng.below(3))];
                arc.insert(arc.begin() + rng.below(static_cast<int>(arc.size()) + 1),
                           Endpoint{id, role});
            }
        }
        std::vector<Endpoint> word;
        std::array<int, 3> starts{};
        auto emit_seg = [&](const std::vector<Endpoint>& seg, int which) {
            starts[static_cast<std::size_t>(which)] = static_cast<int>(word.size());
            word.insert(word.end(), seg.begin(), seg.end());
        };
        emit_seg(segT, 0);
        word.insert(word.end(), arcs[0].begin(), arcs[0].end());
        if (desc) {
            emit_seg(segM, 1);
            word.insert(word.end(), arcs[1].begin(), arcs[1].end());
            emit_seg(segB, 2);
        } else {
            emit_seg(segB, 2);
            word.insert(word.end(), arcs[1].begin(), arcs[1].end());
            emit_seg(segM, 1);
        }
        word.insert(word.end(), arcs[2].begin(), arcs[2].end());

        std::map<int, int> sgn{{TM, signs.i}, {TB, signs.j}, {MB, signs.k}};
        for (int f = 0; f < fillers; ++f) sgn[4 + f] = rng.pm();
        GaussDiagram d(std::move(word), std::move(sgn));
        R3Site site{{starts[0], starts[1], starts[2]}};
        auto info = resolve_r3(d, site);
        if (!info || info->descending != desc || info->q != (direction > 0 ? -1 : +1))
            throw diagram_error("internal: constructed R3 instance invalid");
        return {make_state(std::move(d), rng.below(5) - 2), site};
    }
    throw diagram_error("internal: no order bits matched the requested direction");
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << trials
        << " trials";
    for (const auto& [k, v] : stats) out << ", " << k << "=" << v;
    out << ")";
    for (const std::string& v : violations) out << "\n  violation: " << v;
    return out.str();
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "roundtrip") return run_roundtrip(opts);
    if (name == "prop3") return run_prop3(opts);
    if (name == "prop4") return run_prop4(opts);
    if (name == "prop5") return run_prop5(opts);
    if (name == "thm2") return run_thm2(opts);
    throw diagram_error("unknown suite '" + name + "'");
}

}  // namespace gauss
