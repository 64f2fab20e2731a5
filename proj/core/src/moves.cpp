#include "gauss/moves.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gauss {

namespace {

int pm(bool bit) { return bit ? -1 : +1; }  // (-1)^bit

int mod(int a, int m) { return ((a % m) + m) % m; }

struct SegmentView {
    int start = 0;  // first slot; second slot is (start+1) mod len
    Endpoint first, second;
};

SegmentView segment_at(const GaussDiagram& d, int p) {
    const int len = d.length();
    return SegmentView{p, d.at(p), d.at(mod(p + 1, len))};
}

}  // namespace

std::string to_string(const MoveClass& c) {
    auto sgn = [](int v) { return v > 0 ? '+' : '-'; };
    std::string out;
    switch (c.kind) {
        case MoveKind::R1: out = "R1("; out += sgn(c.idx[0]); out += ','; out += sgn(c.idx[1]); out += ')'; break;
        case MoveKind::R2: out = "R2("; out += sgn(c.idx[0]); out += ','; out += sgn(c.idx[1]); out += ')'; break;
        case MoveKind::R3:
            out = "R3(";
            out += sgn(c.idx[0]); out += ','; out += sgn(c.idx[1]); out += ',';
            out += sgn(c.idx[2]); out += ','; out += sgn(c.idx[3]); out += ')';
            break;
    }
    return out;
}

std::string to_string(const DirectedMoveClass& c) {
    return to_string(c.cls) + (c.direction > 0 ? " dir=+" : " dir=-");
}

DiagramState make_state(GaussDiagram d, int winding_seed) {
    int w = writhe(d);
    return DiagramState{std::move(d), winding_seed, w};
}

// -- R3 resolution ------------------------------------------------------------------

std::optional<R3Info> resolve_r3(const GaussDiagram& d, const R3Site& site) {
    const int len = d.length();
    if (len < 6) return std::nullopt;

    // Disjointness of the six slots.
    std::array<int, 6> slots{};
    for (int s = 0; s < 3; ++s) {
        int p = site.seg_pos[static_cast<std::size_t>(s)];
        if (p < 0 || p >= len) return std::nullopt;
        slots[static_cast<std::size_t>(2 * s)] = p;
        slots[static_cast<std::size_t>(2 * s + 1)] = mod(p + 1, len);
    }
    std::array<int, 6> sorted = slots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

    std::array<SegmentView, 3> segs{segment_at(d, site.seg_pos[0]), segment_at(d, site.seg_pos[1]),
                                    segment_at(d, site.seg_pos[2])};

    // Each segment joins two distinct arrows; the three segments span exactly
    // three arrows, pairwise sharing one segment (triangle).
    std::set<int> arrows;
    for (const auto& s : segs) {
        if (s.first.arrow == s.second.arrow) return std::nullopt;
        arrows.insert(s.first.arrow);
        arrows.insert(s.second.arrow);
    }
    if (arrows.size() != 3) return std::nullopt;

    // Role census per segment: top = two tails, bottom = two heads, middle = mixed.
    int top = -1, midl = -1, bot = -1;
    for (int s = 0; s < 3; ++s) {
        int tails = (segs[static_cast<std::size_t>(s)].first.role == Role::Tail) +
                    (segs[static_cast<std::size_t>(s)].second.role == Role::Tail);
        if (tails == 2) {
            if (top >= 0) return std::nullopt;
            top = s;
        } else if (tails == 0) {
            if (bot >= 0) return std::nullopt;
            bot = s;
        } else {
            if (midl >= 0) return std::nullopt;
            midl = s;
        }
    }
    if (top < 0 || midl < 0 || bot < 0) return std::nullopt;

    const SegmentView& T = segs[static_cast<std::size_t>(top)];
    const SegmentView& M = segs[static_cast<std::size_t>(midl)];
    const SegmentView& B = segs[static_cast<std::size_t>(bot)];

    // Arrow roles are forced: TM has tail on top and head on middle, etc.
    Endpoint m_head = M.first.role == Role::Head ? M.first : M.second;
    Endpoint m_tail = M.first.role == Role::Tail ? M.first : M.second;
    int tm = m_head.arrow;
    int mb = m_tail.arrow;
    if (tm == mb) return std::nullopt;
    if (T.first.arrow != tm && T.second.arrow != tm) return std::nullopt;
    int tb = T.first.arrow == tm ? T.second.arrow : T.first.arrow;
    if ((B.first.arrow == tb) == (B.second.arrow == tb)) return std::nullopt;
    if (B.first.arrow != mb && B.second.arrow != mb) return std::nullopt;

    R3Info info;
    info.seg_pos = site.seg_pos;
    info.seg_top = T.start;
    info.seg_mid = M.start;
    info.seg_bot = B.start;
    info.arrow_tm = tm;
    info.arrow_tb = tb;
    info.arrow_mb = mb;
    info.tau = T.first.arrow == tm;
    info.mu = M.first.arrow == tm;
    info.beta = B.first.arrow == tb;

    // Planar consistency of signs with the within-segment orders.
    int si = d.sign(tm), sj = d.sign(tb), sk = d.sign(mb);
    if (si * sk != pm(info.tau ^ info.beta)) return std::nullopt;
    if (sj * sk != pm(info.tau ^ info.mu)) return std::nullopt;

    // Wiring: scan forward from the top segment; middle first means descending.
    for (int step = 1; step < len; ++step) {
        int p = mod(info.seg_top + 1 + step, len);
        if (p == info.seg_mid) {
            info.descending = true;
            break;
        }
        if (p == info.seg_bot) {
            info.descending = false;
            break;
        }
    }

    // Arnold's q: segments in cyclic passage order s1 s2 s3; count segments
    // where the endpoint shared with the previous segment comes first.
    std::array<int, 3> order{info.seg_top, info.seg_mid, info.seg_bot};
    std::sort(order.begin(), order.end());
    auto shares = [&](int seg_start, int other_start) -> int {
        // arrow joining the two segments
        SegmentView a = segment_at(d, seg_start), b = segment_at(d, other_start);
        for (Endpoint ea : {a.first, a.second})
            for (Endpoint eb : {b.first, b.second})
                if (ea.arrow == eb.arrow) return ea.arrow;
        return 0;
    };
    int n_agree = 0;
    for (int s = 0; s < 3; ++s) {
        int cur = order[static_cast<std::size_t>(s)];
        int prev = order[static_cast<std::size_t>(mod(s - 1, 3))];
        int next = order[static_cast<std::size_t>(mod(s + 1, 3))];
        int with_prev = shares(cur, prev);
        int with_next = shares(cur, next);
        SegmentView sv = segment_at(d, cur);
        if (sv.first.arrow == with_prev && sv.second.arrow == with_next) ++n_agree;
    }
    info.q = n_agree % 2 == 0 ? +1 : -1;
    return info;
}

int arnold_q(const R3Site& site, const GaussDiagram& d) {
    auto info = resolve_r3(d, site);
    if (!info) throw diagram_error("inapplicable R3 site");
    return info->q;
}

Omega3Context omega3_context(const R3Site& site, const GaussDiagram& d) {
    auto info = resolve_r3(d, site);
    if (!info) throw diagram_error("inapplicable R3 site");
    Omega3Context ctx;
    ctx.info = *info;
    ctx.ascending = !info->descending;
    ctx.q = info->q;

    const int len = d.length();
    std::array<int, 3> order{info->seg_top, info->seg_mid, info->seg_bot};
    std::sort(order.begin(), order.end());
    auto arc_after = [&](int seg_start) -> Omega3Context::Arc {
        int from = mod(seg_start + 2, len);
        int next_start = 0;
        for (int step = 0; step < len; ++step) {
            int p = mod(from + step, len);
            if (p == order[0] || p == order[1] || p == order[2]) {
                next_start = p;
                break;
            }
        }
        return Omega3Context::Arc{from, mod(next_start - from, len)};
    };
    auto role_of = [&](int seg_start) {
        if (seg_start == info->seg_top) return 'T';
        if (seg_start == info->seg_mid) return 'M';
        return 'B';
    };
    for (int s = 0; s < 3; ++s) {
        int cur = order[static_cast<std::size_t>(s)];
        int next = order[static_cast<std::size_t>(mod(s + 1, 3))];
        Omega3Context::Arc arc = arc_after(cur);
        std::pair<char, char> join{role_of(cur), role_of(next)};
        if (join.first > join.second) std::swap(join.first, join.second);
        if (join == std::pair{'M', 'T'})
            ctx.arc_a = arc;
        else if (join == std::pair{'B', 'M'})
            ctx.arc_b = arc;
        else
            ctx.arc_c = arc;
    }
    return ctx;
}

// -- enumeration -----------------------------------------------------------------

std::vector<R3Site> enumerate_r3_sites(const GaussDiagram& d) {
    std::vector<R3Site> out;
    const int len = d.length();
    if (len < 6) return out;
    std::vector<int> starts;
    for (int p = 0; p < len; ++p)
        if (d.at(p).arrow != d.at(mod(p + 1, len)).arrow) starts.push_back(p);
    for (std::size_t a = 0; a < starts.size(); ++a)
        for (std::size_t b = a + 1; b < starts.size(); ++b)
            for (std::size_t c = b + 1; c < starts.size(); ++c) {
                R3Site site{{starts[a], starts[b], starts[c]}};
                if (resolve_r3(d, site)) out.push_back(site);
            }
    return out;
}

std::vector<std::pair<MoveSite, DirectedMoveClass>> enumerate_removal_sites(const GaussDiagram& d) {
    std::vector<std::pair<int, std::pair<MoveSite, DirectedMoveClass>>> keyed;
    const int len = d.length();

    for (const auto& [id, s] : d.signs()) {
        (void)s;
        int t = d.position(id, Role::Tail), h = d.position(id, Role::Head);
        if (mod(t + 1, len) == h || mod(h + 1, len) == t) {
            R1Remove site{id, +1};
            keyed.push_back({std::min(t, h), {site, classify(site, d)}});
        }
    }
    // R2 pairs: adjacent tails, adjacent heads, opposite signs.
    for (int p = 0; p < len; ++p) {
        Endpoint e1 = d.at(p), e2 = d.at(mod(p + 1, len));
        if (e1.role != Role::Tail || e2.role != Role::Tail) continue;
        if (e1.arrow == e2.arrow) continue;
        int h1 = d.position(e1.arrow, Role::Head), h2 = d.position(e2.arrow, Role::Head);
        if (mod(h1 + 1, len) != h2 && mod(h2 + 1, len) != h1) continue;
        if (d.sign(e1.arrow) + d.sign(e2.arrow) != 0) continue;
        R2Remove site{e1.arrow, e2.arrow};
        keyed.push_back({std::min({p, h1, h2}), {site, classify(site, d)}});
    }
    for (const R3Site& site : enumerate_r3_sites(d)) {
        int low = *std::min_element(site.seg_pos.begin(), site.seg_pos.end());
        keyed.push_back({low, {site, classify(site, d)}});
    }

    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<MoveSite, DirectedMoveClass>> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

// -- classification ----------------------------------------------------------------

namespace {

struct R2PairInfo {
    int first_tail_arrow = 0;   // tail occurring first along the adjacent pair
    int second_tail_arrow = 0;
    bool interleaved = false;
};

std::optional<R2PairInfo> resolve_r2_pair(const GaussDiagram& d, int a, int b) {
    if (a == b || !d.has_arrow(a) || !d.has_arrow(b)) return std::nullopt;
    const int len = d.length();
    int ta = d.position(a, Role::Tail), tb = d.position(b, Role::Tail);
    int ha = d.position(a, Role::Head), hb = d.position(b, Role::Head);
    R2PairInfo info;
    if (mod(ta + 1, len) == tb)
        info = {a, b, false};
    else if (mod(tb + 1, len) == ta)
        info = {b, a, false};
    else
        return std::nullopt;
    if (mod(ha + 1, len) != hb && mod(hb + 1, len) != ha) return std::nullopt;
    if (d.sign(a) + d.sign(b) != 0) return std::nullopt;
    info.interleaved = interlaced(d, a, b);
    return info;
}

}  // namespace

DirectedMoveClass classify(const MoveSite& site, const GaussDiagram& d) {
    if (const auto* s = std::get_if<R1Insert>(&site)) {
        if (s->gap < 0 || s->gap >= gap_count(d)) throw diagram_error("gap out of range");
        if (s->sign != 1 && s->sign != -1) throw diagram_error("bad sign");
        return {MoveClass{MoveKind::R1, {s->kink, s->sign, 0, 0}}, +1};
    }
    if (const auto* s = std::get_if<R1Remove>(&site)) {
        if (!d.has_arrow(s->arrow)) throw diagram_error("unknown arrow id");
        const int len = d.length();
        int t = d.position(s->arrow, Role::Tail), h = d.position(s->arrow, Role::Head);
        if (mod(t + 1, len) != h && mod(h + 1, len) != t)
            throw diagram_error("arrow is not isolated");
        return {MoveClass{MoveKind::R1, {s->kink, d.sign(s->arrow), 0, 0}}, -1};
    }
    if (const auto* s = std::get_if<R2Insert>(&site)) {
        if (s->gap_over < 0 || s->gap_over >= gap_count(d) || s->gap_under < 0 ||
            s->gap_under >= gap_count(d))
            throw diagram_error("gap out of range");
        return {MoveClass{MoveKind::R2, {s->interleaved ? +1 : -1, -s->sign_first, 0, 0}}, +1};
    }
    if (const auto* s = std::get_if<R2Remove>(&site)) {
        auto info = resolve_r2_pair(d, s->arrow_a, s->arrow_b);
        if (!info) throw diagram_error("not a removable pair");
        return {MoveClass{MoveKind::R2,
                          {info->interleaved ? +1 : -1, d.sign(info->second_tail_arrow), 0, 0}},
                -1};
    }
    const auto& s = std::get<R3Site>(site);
    auto info = resolve_r3(d, s);
    if (!info) throw diagram_error("inapplicable R3 site");
    return {MoveClass{MoveKind::R3,
                      {d.sign(info->arrow_tm), d.sign(info->arrow_tb), d.sign(info->arrow_mb),
                       info->descending ? +1 : -1}},
            info->q == -1 ? +1 : -1};
}

// -- application --------------------------------------------------------------------

namespace {

GaussDiagram insert_blocks(const GaussDiagram& d,
                           const std::vector<std::pair<int, std::vector<Endpoint>>>& blocks,
                           std::map<int, int> extra_signs) {
    std::map<int, int> signs = d.signs();
    signs.merge(extra_signs);
    std::vector<Endpoint> word;
    word.reserve(d.word().size() + 4);
    const int limit = std::max(1, d.length());
    for (int p = 0; p < limit; ++p) {
        for (const auto& [gap, block] : blocks)
            if (gap == p) word.insert(word.end(), block.begin(), block.end());
        if (p < d.length()) word.push_back(d.at(p));
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram erase_arrows(const GaussDiagram& d, std::initializer_list<int> ids) {
    std::vector<Endpoint> word;
    std::map<int, int> signs = d.signs();
    for (const Endpoint& e : d.word())
        if (std::find(ids.begin(), ids.end(), e.arrow) == ids.end()) word.push_back(e);
    for (int id : ids) signs.erase(id);
    return GaussDiagram(std::move(word), std::move(signs));
}

}  // namespace

DiagramState apply_move(const DiagramState& state, const MoveSite& site) {
    const GaussDiagram& d = state.diagram;
    DirectedMoveClass cls = classify(site, d);  // validates
    (void)cls;

    if (const auto* s = std::get_if<R1Insert>(&site)) {
        int id = d.max_arrow_id() + 1;
        std::vector<Endpoint> block{{id, Role::Tail}, {id, Role::Head}};
        if (s->head_first) std::swap(block[0], block[1]);
        GaussDiagram nd = insert_blocks(d, {{s->gap, block}}, {{id, s->sign}});
        return DiagramState{std::move(nd), state.winding + s->kink, state.writhe_cache + s->sign};
    }
    if (const auto* s = std::get_if<R1Remove>(&site)) {
        int sgn = d.sign(s->arrow);
        GaussDiagram nd = erase_arrows(d, {s->arrow});
        return DiagramState{std::move(nd), state.winding - s->kink, state.writhe_cache - sgn};
    }
    if (const auto* s = std::get_if<R2Insert>(&site)) {
        int x = d.max_arrow_id() + 1, y = x + 1;
        std::vector<Endpoint> tails{{x, Role::Tail}, {y, Role::Tail}};
        std::vector<Endpoint> heads;
        if (s->interleaved)
            heads = {{x, Role::Head}, {y, Role::Head}};
        else
            heads = {{y, Role::Head}, {x, Role::Head}};
        std::vector<std::pair<int, std::vector<Endpoint>>> blocks;
        if (s->gap_over == s->gap_under) {
            std::vector<Endpoint> both = s->heads_block_first ? heads : tails;
            const std::vector<Endpoint>& rest = s->heads_block_first ? tails : heads;
            both.insert(both.end(), rest.begin(), rest.end());
            blocks.push_back({s->gap_over, both});
        } else {
            blocks.push_back({s->gap_over, tails});
            blocks.push_back({s->gap_under, heads});
        }
        GaussDiagram nd =
            insert_blocks(d, blocks, {{x, s->sign_first}, {y, -s->sign_first}});
        return DiagramState{std::move(nd), state.winding, state.writhe_cache};
    }
    if (const auto* s = std::get_if<R2Remove>(&site)) {
        GaussDiagram nd = erase_arrows(d, {s->arrow_a, s->arrow_b});
        return DiagramState{std::move(nd), state.winding, state.writhe_cache};
    }
    const auto& s = std::get<R3Site>(site);
    std::vector<Endpoint> word = d.word();
    const int len = d.length();
    for (int sp : s.seg_pos)
        std::swap(word[static_cast<std::size_t>(sp)], word[static_cast<std::size_t>(mod(sp + 1, len))]);
    GaussDiagram nd(std::move(word), d.signs());
    return DiagramState{std::move(nd), state.winding, state.writhe_cache};
}

DiagramState sum_states(const DiagramState& s1, int cut_style, const DiagramState& s2, int gap1,
                        int gap2) {
    if (cut_style != 1 && cut_style != -1) throw diagram_error("cut style must be +1 or -1");
    GaussDiagram d = connected_sum(s1.diagram, gap1, s2.diagram, gap2);
    return DiagramState{std::move(d), s1.winding + s2.winding - cut_style,
                        s1.writhe_cache + s2.writhe_cache};
}

// -- site addressing ------------------------------------------------------------------

namespace {

std::string pm_str(int v) { return v > 0 ? "+1" : "-1"; }

int parse_pm(std::string_view s) {
    if (s == "+1" || s == "1" || s == "+") return +1;
    if (s == "-1" || s == "-") return -1;
    throw diagram_error("expected +1 or -1, got '" + std::string(s) + "'");
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, p - start));
        start = p + 1;
    }
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw diagram_error("expected integer, got '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::string render_site(const MoveSite& site, const GaussDiagram& d) {
    std::ostringstream out;
    if (const auto* s = std::get_if<R1Insert>(&site)) {
        out << "r1+@" << s->gap << ":i=" << pm_str(s->kink) << ",j=" << pm_str(s->sign);
        if (s->head_first) out << ",ht=1";
    } else if (const auto* s = std::get_if<R1Remove>(&site)) {
        out << "r1-@" << s->arrow << ":i=" << pm_str(s->kink);
    } else if (const auto* s = std::get_if<R2Insert>(&site)) {
        out << "r2+@" << s->gap_over << "," << s->gap_under
            << ":interleaved=" << (s->interleaved ? 1 : 0) << ",sign=" << pm_str(s->sign_first);
        if (s->heads_block_first) out << ",hf=1";
    } else if (const auto* s = std::get_if<R2Remove>(&site)) {
        out << "r2-@" << s->arrow_a << "," << s->arrow_b;
    } else {
        auto info = resolve_r3(d, std::get<R3Site>(site));
        if (!info) throw diagram_error("inapplicable R3 site");
        out << "r3@" << info->arrow_tm << "," << info->arrow_tb << "," << info->arrow_mb;
    }
    return out.str();
}

MoveSite parse_site(std::string_view spec, const GaussDiagram& d) {
    auto at = spec.find('@');
    if (at == std::string_view::npos) throw diagram_error("site spec missing '@'");
    std::string_view head = spec.substr(0, at);
    std::string_view rest = spec.substr(at + 1);
    std::string_view addr = rest;
    std::string_view params;
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
        addr = rest.substr(0, colon);
        params = rest.substr(colon + 1);
    }
    std::map<std::string, std::string> kv;
    if (!params.empty()) {
        for (const std::string& item : split(params, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw diagram_error("bad site parameter '" + item + "'");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }

    if (head == "r1+") {
        R1Insert s;
        s.gap = parse_int(addr);
        if (kv.count("i")) s.kink = parse_pm(kv["i"]);
        if (kv.count("j")) s.sign = parse_pm(kv["j"]);
        if (kv.count("ht")) s.head_first = parse_int(kv["ht"]) != 0;
        return s;
    }
    if (head == "r1-") {
        R1Remove s;
        s.arrow = parse_int(addr);
        if (kv.count("i")) s.kink = parse_pm(kv["i"]);
        return s;
    }
    if (head == "r2+") {
        auto gaps = split(addr, ',');
        if (gaps.size() != 2) throw diagram_error("r2+ needs two gaps");
        R2Insert s;
        s.gap_over = parse_int(gaps[0]);
        s.gap_under = parse_int(gaps[1]);
        if (kv.count("interleaved")) s.interleaved = parse_int(kv["interleaved"]) != 0;
        if (kv.count("sign")) s.sign_first = parse_pm(kv["sign"]);
        if (kv.count("hf")) s.heads_block_first = parse_int(kv["hf"]) != 0;
        return s;
    }
    if (head == "r2-") {
        auto ids = split(addr, ',');
        if (ids.size() != 2) throw diagram_error("r2- needs two arrow ids");
        return R2Remove{parse_int(ids[0]), parse_int(ids[1])};
    }
    if (head == "r3") {
        auto ids = split(addr, ',');
        if (ids.size() != 3) throw diagram_error("r3 needs three arrow ids");
        std::set<int> want{parse_int(ids[0]), parse_int(ids[1]), parse_int(ids[2])};
        for (const R3Site& site : enumerate_r3_sites(d)) {
            auto info = resolve_r3(d, site);
            std::set<int> have{info->arrow_tm, info->arrow_tb, info->arrow_mb};
            if (have == want) return site;
        }
        throw diagram_error("no applicable R3 site on those arrows");
    }
    throw diagram_error("unknown site kind '" + std::string(head) + "'");
}

}  // namespace gauss
