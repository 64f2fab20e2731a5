#include "gauss/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace gauss {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Rotation-minimal packed encoding of an unsigned cyclic word, ids relabeled
// by first appearance.  4 bits per endpoint; supports up to 8 arrows.
std::uint64_t unsigned_key(const std::vector<Endpoint>& word) {
    const int len = static_cast<int>(word.size());
    if (len == 0) return 0;
    if (len > 16) throw diagram_error("pattern too large for packed key");
    std::uint64_t best = ~0ULL;
    std::array<int, 64> relabel{};
    std::array<int, 64> ids{};
    for (int p = 0; p < len; ++p) ids[static_cast<std::size_t>(p)] = word[static_cast<std::size_t>(p)].arrow;
    // map arbitrary ids into a dense range first
    {
        std::vector<int> sorted(ids.begin(), ids.begin() + len);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int p = 0; p < len; ++p)
            ids[static_cast<std::size_t>(p)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), ids[static_cast<std::size_t>(p)]) -
                sorted.begin());
    }
    for (int r = 0; r < len; ++r) {
        relabel.fill(0);
        int next = 1;
        std::uint64_t key = 0;
        for (int k = 0; k < len; ++k) {
            const int p = mod(r + k, len);
            int& lbl = relabel[static_cast<std::size_t>(ids[static_cast<std::size_t>(p)])];
            if (lbl == 0) lbl = next++;
            std::uint64_t sym = static_cast<std::uint64_t>((lbl - 1) << 1) |
                                (word[static_cast<std::size_t>(p)].role == Role::Head ? 1u : 0u);
            key = (key << 4) | sym;
        }
        best = std::min(best, key);
    }
    return best;
}

}  // namespace

ArrowPattern builtin_pattern(char name, int n) {
    if (name == 'w') {
        if (n < 3 || n % 2 == 0) throw diagram_error("w_n requires odd n >= 3");
        if (n > 7) throw diagram_error("w_n supported for n <= 7");
        std::vector<Endpoint> word(static_cast<std::size_t>(2 * n));
        for (int p = 0; p < n; ++p) {
            Role r = p % 2 == 0 ? Role::Tail : Role::Head;
            word[static_cast<std::size_t>(p)] = Endpoint{p + 1, r};
            word[static_cast<std::size_t>(p + n)] =
                Endpoint{p + 1, r == Role::Tail ? Role::Head : Role::Tail};
        }
        return ArrowPattern{std::move(word)};
    }
    if ((name == 'a' || name == 'd') && n == 4) {
        // a_4: every arrow points five steps forward in the eight-letter word.
        // This is the chirality pinned by the figure-eight certificate; d_4 is
        // its reverse.
        std::vector<Endpoint> a4{{1, Role::Tail}, {2, Role::Head}, {3, Role::Tail},
                                 {4, Role::Head}, {2, Role::Tail}, {1, Role::Head},
                                 {4, Role::Tail}, {3, Role::Head}};
        if (name == 'a') return ArrowPattern{std::move(a4)};
        std::vector<Endpoint> d4(a4.rbegin(), a4.rend());
        return ArrowPattern{std::move(d4)};
    }
    throw diagram_error(std::string("unsupported pattern ") + name + "_" + std::to_string(n));
}

long long count_pattern(const GaussDiagram& d, const ArrowPattern& p) {
    const int m = p.arrow_count();
    const int n = d.arrow_count();
    if (m == 0 || m > n) return m == 0 && !d.empty() ? 0 : 0;
    const std::uint64_t target = unsigned_key(p.word);

    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (const auto& [id, s] : d.signs()) {
        (void)s;
        ids.push_back(id);
    }

    long long total = 0;
    std::vector<int> pick(static_cast<std::size_t>(m));
    std::vector<Endpoint> sub;
    sub.reserve(static_cast<std::size_t>(2 * m));
    // enumerate m-combinations of ids
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        sub.clear();
        bool member[64] = {};
        for (int i = 0; i < m; ++i) member[ids[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] & 63] = true;
        int prod = 1;
        for (int i = 0; i < m; ++i) prod *= d.sign(ids[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        for (const Endpoint& e : d.word()) {
            if (!member[e.arrow & 63]) continue;
            bool in = false;
            for (int i = 0; i < m; ++i)
                if (ids[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] == e.arrow) in = true;
            if (in) sub.push_back(e);
        }
        if (unsigned_key(sub) == target) total += prod;

        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < m; ++k)
            idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
    return total;
}

long long evaluate(char name, int n, const GaussDiagram& d) {
    char pat = name == 'A' ? 'a' : name == 'D' ? 'd' : name == 'W' ? 'w' : '?';
    if (pat == '?') throw diagram_error("invariant name must be A, D or W");
    return count_pattern(d, builtin_pattern(pat, n));
}

int llk(const GaussDiagram& d, const Omega3Context& ctx) {
    const int len = d.length();
    auto in_arc = [&](int pos, const Omega3Context::Arc& arc) {
        return mod(pos - arc.begin, len) < arc.length;
    };
    std::set<int> site{ctx.info.arrow_tm, ctx.info.arrow_tb, ctx.info.arrow_mb};
    int sum = 0;
    for (const auto& [id, s] : d.signs()) {
        if (site.count(id)) continue;
        if (in_arc(d.position(id, Role::Tail), ctx.arc_b) &&
            in_arc(d.position(id, Role::Head), ctx.arc_a))
            sum += s;
    }
    return sum;
}

W3Jump w3_jump_check(const DiagramState& state, const R3Site& site) {
    Omega3Context ctx = omega3_context(site, state.diagram);
    int direction = ctx.q == -1 ? +1 : -1;
    long long before = evaluate('W', 3, state.diagram);
    DiagramState after = apply_move(state, site);
    long long actual = evaluate('W', 3, after.diagram) - before;
    return W3Jump{direction * static_cast<long long>(llk(state.diagram, ctx)), actual};
}

InvariantProfile profile(const DiagramState& state, int n_max) {
    InvariantProfile p = profile(state.diagram, n_max);
    p.winding = state.winding;
    return p;
}

InvariantProfile profile(const GaussDiagram& d, int n_max) {
    if (n_max < 4) throw diagram_error("n_max must be at least 4");
    InvariantProfile p;
    p.writhe = writhe(d);
    p.A[4] = evaluate('A', 4, d);
    p.D[4] = evaluate('D', 4, d);
    for (int n = 3; n <= std::min(n_max, 7); n += 2) p.W[n] = evaluate('W', n, d);
    return p;
}

MoveBoundsReport move_lower_bounds(const InvariantProfile& from, const InvariantProfile& to) {
    MoveBoundsReport r;
    for (const auto& [n, v] : from.A)
        if (to.A.count(n) && to.A.at(n) != v) r.need_ascending = true;
    for (const auto& [n, v] : from.D)
        if (to.D.count(n) && to.D.at(n) != v) r.need_descending = true;
    int dw = to.writhe - from.writhe;
    r.min_omega1 = std::abs(dw);
    if (from.winding && to.winding) {
        int dwind = *to.winding - *from.winding;
        // A class pair {O1(i,j), O1(-i,-j)} changes (writhe, winding) by
        // multiples of (j, i); reachable iff |dw| == |dwind|.
        r.need_two_omega1_classes = std::abs(dw) != std::abs(dwind);
    }

    std::ostringstream out;
    if (r.need_ascending && r.need_descending)
        out << ">=1 ascending and >=1 descending O3 move; hence >=2 O3 moves\n";
    else if (r.need_ascending)
        out << ">=1 ascending O3 move\n";
    else if (r.need_descending)
        out << ">=1 descending O3 move\n";
    if (r.min_omega1 > 0) out << ">=" << r.min_omega1 << " O1 moves (writhe gap)\n";
    if (r.need_two_omega1_classes)
        out << "O1 moves of two classes (i,j) != +-(k,l) required (writhe/winding gap)\n";
    if (out.str().empty()) out << "no move requirements detected\n";
    r.text = out.str();
    return r;
}

}  // namespace gauss
