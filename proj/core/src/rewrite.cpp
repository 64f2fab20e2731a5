#include "gauss/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gauss {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

const std::vector<MoveClass>& set_classes(GeneratingSet set) {
    static const std::vector<MoveClass> primary{
        {MoveKind::R1, {+1, +1, 0, 0}}, {MoveKind::R1, {+1, -1, 0, 0}},
        {MoveKind::R2, {-1, +1, 0, 0}}, {MoveKind::R2, {-1, -1, 0, 0}},
        {MoveKind::R3, {-1, +1, +1, +1}}, {MoveKind::R3, {-1, -1, +1, -1}}};
    static const std::vector<MoveClass> alternate{
        {MoveKind::R1, {-1, +1, 0, 0}}, {MoveKind::R1, {-1, -1, 0, 0}},
        {MoveKind::R2, {-1, +1, 0, 0}}, {MoveKind::R2, {+1, -1, 0, 0}},
        {MoveKind::R3, {+1, -1, -1, +1}}, {MoveKind::R3, {+1, +1, -1, -1}}};
    return set == GeneratingSet::Primary ? primary : alternate;
}

class SequenceBuilder {
public:
    explicit SequenceBuilder(DiagramState start) : cur_(std::move(start)) {}

    const DiagramState& state() const { return cur_; }

    void push(const MoveSite& site) {
        DirectedMoveClass cls = classify(site, cur_.diagram);
        std::string spec = render_site(site, cur_.diagram);
        DiagramState next = apply_move(cur_, site);
        steps_.push_back(RewriteStep{site, cls, std::move(spec)});
        cur_ = std::move(next);
    }

    void append(MoveSequence seq) {
        for (RewriteStep& s : seq.steps) steps_.push_back(std::move(s));
        cur_ = std::move(seq.end);
    }

    MoveSequence finish() && { return MoveSequence{std::move(steps_), std::move(cur_)}; }

private:
    DiagramState cur_;
    std::vector<RewriteStep> steps_;
};

int fresh_id(const GaussDiagram& d) { return d.max_arrow_id() + 1; }

// Gap in `cur` sitting immediately before the endpoint that occupied position
// `orig_pos` in `orig`; re-anchors original gaps after insertions shifted the word.
int gap_before(const GaussDiagram& cur, const GaussDiagram& orig, int orig_pos) {
    if (orig.empty()) return 0;
    Endpoint anchor = orig.at(orig_pos);
    return cur.position(anchor.arrow, anchor.role);
}

}  // namespace

bool class_in_set(const MoveClass& cls, GeneratingSet set) {
    const auto& classes = set_classes(set);
    return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

std::vector<int> conjugate_r3(IndexTriple current, IndexTriple target) {
    auto step = [](IndexTriple t, int g) -> IndexTriple {
        switch (g) {
            case 1: return {t.j, t.i, -t.k};
            case 2: return {t.j, -t.i, t.k};
            default: return {-t.j, t.i, t.k};
        }
    };
    if (current == target) return {};
    auto key = [](IndexTriple t) {
        return (t.i > 0 ? 4 : 0) | (t.j > 0 ? 2 : 0) | (t.k > 0 ? 1 : 0);
    };
    std::map<int, std::pair<int, int>> parent;  // key -> (prev key, generator)
    std::deque<IndexTriple> queue{current};
    parent[key(current)] = {-1, 0};
    while (!queue.empty()) {
        IndexTriple t = queue.front();
        queue.pop_front();
        for (int g = 1; g <= 3; ++g) {
            IndexTriple u = step(t, g);
            if (parent.count(key(u))) continue;
            parent[key(u)] = {key(t), g};
            if (u == target) {
                std::vector<int> word;
                int k = key(u);
                while (parent[k].first != -1) {
                    word.push_back(parent[k].second);
                    k = parent[k].first;
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(u);
        }
    }
    throw diagram_error("index triple unreachable");
}

// -- R1 expansion ---------------------------------------------------------------

namespace {

void emit_r1_insert_expansion(SequenceBuilder& b, const R1Insert& s, GeneratingSet set) {
    const GaussDiagram& d = b.state().diagram;
    int x = fresh_id(d), y = x + 1;
    if (set == GeneratingSet::Alternate) {
        // The inverse-pair step only lands in the alternate set for one kink
        // sign per orientation.
        bool ok = s.head_first ? s.sign == +1 : s.sign == -1;
        if (!ok)
            throw diagram_error("alternate generating set: no kink expansion for this class");
    }
    if (!s.head_first) {
        // (t_x t_y h_y h_x): keeper x outside, drop the inner kink y.
        b.push(R2Insert{s.gap, s.gap, false, s.sign});
        b.push(R1Remove{y, -s.kink});
    } else {
        // (h_y h_x t_x t_y): keeper y, drop the inner kink x.
        b.push(R2Insert{s.gap, s.gap, false, -s.sign, true});
        b.push(R1Remove{x, -s.kink});
    }
}

void emit_r1_remove_expansion(SequenceBuilder& b, const R1Remove& s, GeneratingSet set) {
    const GaussDiagram& d = b.state().diagram;
    const int len = d.length();
    int t = d.position(s.arrow, Role::Tail), h = d.position(s.arrow, Role::Head);
    int sgn = d.sign(s.arrow);
    bool th_order = mod(t + 1, len) == h;
    if (set == GeneratingSet::Alternate) {
        bool ok = th_order ? sgn == -1 : sgn == +1;
        if (!ok)
            throw diagram_error("alternate generating set: no kink expansion for this class");
    }
    int inner = fresh_id(d);
    if (th_order)
        b.push(R1Insert{h, -sgn, -s.kink, false});
    else
        b.push(R1Insert{t, -sgn, -s.kink, true});
    b.push(R2Remove{s.arrow, inner});
}

}  // namespace

MoveSequence expand_r1(const DiagramState& state, const MoveSite& site, GeneratingSet set) {
    DirectedMoveClass cls = classify(site, state.diagram);
    SequenceBuilder b(state);
    if (class_in_set(cls.cls, set)) {
        b.push(site);
        return std::move(b).finish();
    }
    if (const auto* s = std::get_if<R1Insert>(&site))
        emit_r1_insert_expansion(b, *s, set);
    else if (const auto* s = std::get_if<R1Remove>(&site))
        emit_r1_remove_expansion(b, *s, set);
    else
        throw diagram_error("expand_r1 requires an R1 site");
    return std::move(b).finish();
}

// -- R2 expansion ---------------------------------------------------------------

namespace {

void push_r1_expanded(SequenceBuilder& b, const MoveSite& site, GeneratingSet set) {
    DirectedMoveClass cls = classify(site, b.state().diagram);
    if (class_in_set(cls.cls, set)) {
        b.push(site);
        return;
    }
    b.append(expand_r1(b.state(), site, set));
}

// Inserts a kink (expanding the move when its class lies outside the set) and
// returns the id of the kink arrow actually present afterwards.
int push_kink_insert(SequenceBuilder& b, const R1Insert& ins, GeneratingSet set) {
    DirectedMoveClass cls = classify(ins, b.state().diagram);
    int fresh = fresh_id(b.state().diagram);
    if (class_in_set(cls.cls, set)) {
        b.push(ins);
        return fresh;
    }
    b.append(expand_r1(b.state(), ins, set));
    return ins.head_first ? fresh + 1 : fresh;
}

// The two Lemma-style direct-pair movies.  The primary set realizes class
// index j = +1 with a kink on the heads side and j = -1 with a head-leading
// kink on the tails side; the alternate set uses the sign-mirrored movies.
void emit_r2_insert_expansion(SequenceBuilder& b, const R2Insert& s, GeneratingSet set) {
    const GaussDiagram orig = b.state().diagram;
    const int j = -s.sign_first;  // class index of the direct pair
    const int eps = set == GeneratingSet::Primary ? +1 : -1;
    const bool heads_style = set == GeneratingSet::Primary ? j > 0 : j < 0;
    if (heads_style) {
        // kink at the heads gap; pair tails at the original tails gap; pair
        // heads nested inside the kink; triangle; drop the kink.
        int k = push_kink_insert(b, R1Insert{s.gap_under, eps, -1, false}, set);
        const GaussDiagram& d1 = b.state().diagram;
        int x = fresh_id(d1);
        int tails_gap = s.gap_over == s.gap_under ? d1.position(k, Role::Tail)
                                                  : gap_before(d1, orig, s.gap_over);
        int heads_gap = d1.position(k, Role::Tail) + 1;
        b.push(R2Insert{tails_gap, heads_gap, false, eps});
        const GaussDiagram& d2 = b.state().diagram;
        b.push(R3Site{{d2.position(x, Role::Tail), d2.position(k, Role::Tail),
                       d2.position(x, Role::Head)}});
        push_r1_expanded(b, R1Remove{k, -1}, set);
    } else {
        // head-leading kink at the tails gap; pair tails inside the kink;
        // pair heads nested at the original heads gap.
        int k = push_kink_insert(b, R1Insert{s.gap_over, -eps, -1, true}, set);
        const GaussDiagram& d1 = b.state().diagram;
        int x = fresh_id(d1), y = x + 1;
        int tails_gap = d1.position(k, Role::Tail);
        int heads_gap = s.gap_over == s.gap_under ? d1.position(k, Role::Tail) + 1
                                                  : gap_before(d1, orig, s.gap_under);
        b.push(R2Insert{tails_gap, heads_gap, false, eps});
        const GaussDiagram& d2 = b.state().diagram;
        b.push(R3Site{{d2.position(y, Role::Tail), d2.position(k, Role::Head),
                       d2.position(y, Role::Head)}});
        push_r1_expanded(b, R1Remove{k, -1}, set);
    }
}

void emit_r2_remove_expansion(SequenceBuilder& b, const R2Remove& s, GeneratingSet set) {
    const GaussDiagram& d0 = b.state().diagram;
    const int len = d0.length();
    int u = s.arrow_a, v = s.arrow_b;  // u = first tail along the over strand
    if (mod(d0.position(v, Role::Tail) + 1, len) == d0.position(u, Role::Tail)) std::swap(u, v);
    const int j = d0.sign(v);
    const int eps = set == GeneratingSet::Primary ? +1 : -1;
    const bool heads_style = set == GeneratingSet::Primary ? j > 0 : j < 0;
    const int gap = heads_style ? d0.position(v, Role::Head) : d0.position(v, Role::Tail);
    int k = push_kink_insert(b, R1Insert{gap, heads_style ? eps : -eps, -1, !heads_style}, set);
    const GaussDiagram& d1 = b.state().diagram;
    if (heads_style)
        b.push(R3Site{{d1.position(u, Role::Tail), d1.position(u, Role::Head),
                       d1.position(k, Role::Head)}});
    else
        b.push(R3Site{{d1.position(k, Role::Tail), d1.position(u, Role::Tail),
                       d1.position(u, Role::Head)}});
    b.push(R2Remove{u, v});
    push_r1_expanded(b, R1Remove{k, -1}, set);
}

}  // namespace

MoveSequence expand_r2(const DiagramState& state, const MoveSite& site, GeneratingSet set) {
    DirectedMoveClass cls = classify(site, state.diagram);
    SequenceBuilder b(state);
    if (class_in_set(cls.cls, set)) {
        b.push(site);
        return std::move(b).finish();
    }
    if (cls.cls.idx[0] < 0)
        throw diagram_error("no expansion movie for inverse pair moves outside the set");
    if (const auto* s = std::get_if<R2Insert>(&site))
        emit_r2_insert_expansion(b, *s, set);
    else if (const auto* s = std::get_if<R2Remove>(&site))
        emit_r2_remove_expansion(b, *s, set);
    else
        throw diagram_error("expand_r2 requires an R2 site");
    return std::move(b).finish();
}

// -- R3 conjugation -------------------------------------------------------------

namespace {

void push_r2_expanded(SequenceBuilder& b, const MoveSite& site, GeneratingSet set) {
    DirectedMoveClass cls = classify(site, b.state().diagram);
    if (class_in_set(cls.cls, set)) {
        b.push(site);
        return;
    }
    b.append(expand_r2(b.state(), site, set));
}

IndexTriple core_triple(GeneratingSet set, bool descending) {
    if (set == GeneratingSet::Primary) return descending ? IndexTriple{-1, +1, +1} : IndexTriple{-1, -1, +1};
    return descending ? IndexTriple{+1, -1, -1} : IndexTriple{+1, +1, -1};
}

// Cyclic word-shape equality: some rotation of b matches a in endpoint roles,
// signs and chord pairing, and arrows present in both diagrams sit at
// corresponding positions.  Conjugation layers compose only when each stage
// reproduces the direct move this strongly.
bool same_shape(const GaussDiagram& a, const GaussDiagram& b) {
    const int len = a.length();
    if (len != b.length()) return false;
    if (len == 0) return true;
    auto partner_offset = [len](const GaussDiagram& d, int p) {
        Endpoint e = d.at(p);
        int q = d.position(e.arrow, e.role == Role::Tail ? Role::Head : Role::Tail);
        return mod(q - p, len);
    };
    for (int r = 0; r < len; ++r) {
        bool ok = true;
        for (int p = 0; p < len && ok; ++p) {
            Endpoint ea = a.at(p), eb = b.at(mod(p + r, len));
            if (ea.role != eb.role || a.sign(ea.arrow) != b.sign(eb.arrow) ||
                partner_offset(a, p) != partner_offset(b, mod(p + r, len)))
                ok = false;
            else if (ea.arrow != eb.arrow && a.has_arrow(eb.arrow) && b.has_arrow(ea.arrow))
                ok = false;  // shared ids must not trade places
        }
        if (ok) return true;
    }
    return false;
}

struct Wedge {
    R2Insert insert;
    R3Site new_site;
    int replaced_arrow = 0;
};

// Start position of the adjacent pair holding `first` and `second`, if they
// are cyclically adjacent in d.
std::optional<int> pair_start(const GaussDiagram& d, Endpoint first, Endpoint second) {
    const int len = d.length();
    int p = d.position(first.arrow, first.role);
    int q = d.position(second.arrow, second.role);
    if (mod(p + 1, len) == q) return p;
    if (mod(q + 1, len) == p) return q;
    return std::nullopt;
}

// Replace the crossing playing `role` ('i' top-middle, 'j' top-bottom,
// 'k' middle-bottom) by a fresh opposite-sign crossing via a pair inserted
// in the wedge between the two strands it joins.
std::optional<Wedge> find_wedge(const DiagramState& state, const R3Site& site, char role,
                                GeneratingSet set) {
    const GaussDiagram& d = state.diagram;
    auto info0 = resolve_r3(d, site);
    if (!info0) return std::nullopt;
    const int len = d.length();

    int old_arrow, tail_seg, head_seg;  // strand segments carrying the new pair ends
    switch (role) {
        case 'i': old_arrow = info0->arrow_tm; tail_seg = info0->seg_top; head_seg = info0->seg_mid; break;
        case 'j': old_arrow = info0->arrow_tb; tail_seg = info0->seg_top; head_seg = info0->seg_bot; break;
        default:  old_arrow = info0->arrow_mb; tail_seg = info0->seg_mid; head_seg = info0->seg_bot; break;
    }
    IndexTriple want{d.sign(info0->arrow_tm), d.sign(info0->arrow_tb), d.sign(info0->arrow_mb)};
    if (role == 'i') want.i = -want.i;
    else if (role == 'j') want.j = -want.j;
    else want.k = -want.k;

    DiagramState direct = apply_move(state, site);

    for (int dt = 0; dt < 3; ++dt)
        for (int dh = 0; dh < 3; ++dh)
            for (int nest = 0; nest < 2; ++nest)
                for (int sf = -1; sf <= 1; sf += 2)
                for (int hf = 0; hf < 2; ++hf) {
                    R2Insert ins{mod(tail_seg + dt, len), mod(head_seg + dh, len), nest == 0,
                                 sf, hf == 1};
                    if (hf == 1 && ins.gap_over != ins.gap_under) continue;
                    MoveClass ins_cls{MoveKind::R2, {ins.interleaved ? +1 : -1, -sf, 0, 0}};
                    if (!class_in_set(ins_cls, set) && ins_cls.idx[0] < 0)
                        continue;  // inverse pair with no realization in the set
                    DiagramState st1 = apply_move(state, ins);
                    const GaussDiagram& d1 = st1.diagram;
                    int x = fresh_id(d) , y = x + 1;
                    for (int z : {x, y}) {
                        // candidate triangle {tm', tb', mb'} with z replacing old_arrow
                        int tm = role == 'i' ? z : info0->arrow_tm;
                        int tb = role == 'j' ? z : info0->arrow_tb;
                        int mb = role == 'k' ? z : info0->arrow_mb;
                        auto top = pair_start(d1, {tm, Role::Tail}, {tb, Role::Tail});
                        auto mid = pair_start(d1, {tm, Role::Head}, {mb, Role::Tail});
                        auto bot = pair_start(d1, {tb, Role::Head}, {mb, Role::Head});
                        if (!top || !mid || !bot) continue;
                        R3Site cand{{*top, *mid, *bot}};
                        auto info1 = resolve_r3(d1, cand);
                        if (!info1) continue;
                        if (info1->arrow_tm != tm || info1->arrow_tb != tb || info1->arrow_mb != mb)
                            continue;
                        if (info1->descending != info0->descending) continue;
                        IndexTriple got{d1.sign(tm), d1.sign(tb), d1.sign(mb)};
                        if (!(got == want)) continue;
                        // replay check: insert, triangle move, drop the old
                        // crossing together with one of the pair arrows
                        DiagramState st2 = apply_move(st1, cand);
                        for (int drop : {z, z == x ? y : x}) {
                            R2Remove rem{old_arrow, drop};
                            try {
                                DiagramState st3 = apply_move(st2, rem);
                                if (same_shape(st3.diagram, direct.diagram) &&
                                    st3.winding == direct.winding)
                                    return Wedge{ins, cand, old_arrow};
                            } catch (const diagram_error&) {
                            }
                        }
                    }
                }
    return std::nullopt;
}

void rewrite_r3_rec(SequenceBuilder& b, const R3Site& site, GeneratingSet set) {
    auto info = resolve_r3(b.state().diagram, site);
    if (!info) throw diagram_error("inapplicable R3 site");
    const GaussDiagram& d = b.state().diagram;
    IndexTriple cur{d.sign(info->arrow_tm), d.sign(info->arrow_tb), d.sign(info->arrow_mb)};
    IndexTriple target = core_triple(set, info->descending);
    if (cur == target) {
        b.push(site);
        return;
    }
    char role = cur.i != target.i ? 'i' : cur.j != target.j ? 'j' : 'k';

    DiagramState direct = apply_move(b.state(), site);
    const std::map<int, int> preexisting = b.state().diagram.signs();

    auto wedge = find_wedge(b.state(), site, role, set);
    if (!wedge) throw diagram_error("no wedge arrangement found for R3 conjugation");
    push_r2_expanded(b, wedge->insert, set);
    rewrite_r3_rec(b, wedge->new_site, set);

    // unwind: the replaced crossing leaves together with a pair arrow
    // introduced inside this layer
    const GaussDiagram& cd = b.state().diagram;
    for (const auto& [z, sgn] : cd.signs()) {
        (void)sgn;
        if (z == wedge->replaced_arrow || preexisting.count(z)) continue;
        R2Remove rem{wedge->replaced_arrow, z};
        try {
            DiagramState after = apply_move(b.state(), rem);
            if (same_shape(after.diagram, direct.diagram) && after.winding == direct.winding) {
                push_r2_expanded(b, rem, set);
                return;
            }
        } catch (const diagram_error&) {
        }
    }
    throw diagram_error("internal: conjugation unwind failed");
}

}  // namespace

MoveSequence rewrite_to_generating_set(const DiagramState& state, const MoveSite& site,
                                       GeneratingSet set) {
    DirectedMoveClass cls = classify(site, state.diagram);
    DiagramState direct = apply_move(state, site);

    SequenceBuilder b(state);
    if (class_in_set(cls.cls, set)) {
        b.push(site);
        return std::move(b).finish();
    }
    MoveSequence seq = [&] {
        switch (cls.cls.kind) {
            case MoveKind::R1: return expand_r1(state, site, set);
            case MoveKind::R2: return expand_r2(state, site, set);
            default: {
                rewrite_r3_rec(b, std::get<R3Site>(site), set);
                return std::move(b).finish();
            }
        }
    }();
    if (canonical_form(seq.end.diagram) != canonical_form(direct.diagram) ||
        seq.end.winding != direct.winding)
        throw diagram_error("internal: rewrite does not replay the direct move");
    return seq;
}

std::string render_sequence(const MoveSequence& seq) {
    std::string out;
    for (const RewriteStep& s : seq.steps) {
        out += to_string(s.cls.cls);
        out += " @ ";
        out += s.spec;
        out += '\n';
    }
    out += serialize(seq.end.diagram);
    out += '\n';
    return out;
}

}  // namespace gauss
