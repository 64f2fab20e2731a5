#ifndef GAUSS_TESTS_ORACLES_HPP
#define GAUSS_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// These deliberately avoid the library's packed-key matcher and template
// resolver: pattern matching walks explicit relabeling maps, and triangle
// detection re-derives applicability from first principles.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "gauss/diagram.hpp"
#include "gauss/moves.hpp"

namespace gauss::oracles {

inline int omod(int a, int m) { return ((a % m) + m) % m; }

// Does the cyclic unsigned word of `sub` match `pattern` under some rotation
// and arrow relabeling?  Plain nested-loop matcher.
inline bool words_match(const std::vector<Endpoint>& sub, const std::vector<Endpoint>& pattern) {
    const int len = static_cast<int>(sub.size());
    if (static_cast<int>(pattern.size()) != len) return false;
    if (len == 0) return true;
    for (int r = 0; r < len; ++r) {
        std::vector<std::pair<int, int>> map;  // sub arrow -> pattern arrow
        bool ok = true;
        for (int p = 0; p < len && ok; ++p) {
            const Endpoint& a = sub[static_cast<std::size_t>(omod(p + r, len))];
            const Endpoint& b = pattern[static_cast<std::size_t>(p)];
            if (a.role != b.role) {
                ok = false;
                break;
            }
            bool found = false;
            for (auto& [sa, pa] : map) {
                if (sa == a.arrow || pa == b.arrow) {
                    found = true;
                    if (sa != a.arrow || pa != b.arrow) ok = false;
                    break;
                }
            }
            if (!found) map.push_back({a.arrow, b.arrow});
        }
        if (ok) return true;
    }
    return false;
}

// Signed subdiagram count by explicit subset enumeration.
inline long long count_pattern(const GaussDiagram& d, const std::vector<Endpoint>& pattern) {
    const int m = static_cast<int>(pattern.size()) / 2;
    std::vector<int> ids;
    for (const auto& [id, s] : d.signs()) {
        (void)s;
        ids.push_back(id);
    }
    const int n = static_cast<int>(ids.size());
    if (m > n) return 0;
    long long total = 0;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::set<int> subset;
        int prod = 1;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) {
                subset.insert(ids[static_cast<std::size_t>(i)]);
                prod *= d.sign(ids[static_cast<std::size_t>(i)]);
            }
        std::vector<Endpoint> sub;
        for (const Endpoint& e : d.word())
            if (subset.count(e.arrow)) sub.push_back(e);
        if (words_match(sub, pattern)) total += prod;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

// Exhaustive triangle-site scan: every grouping of three disjoint adjacent
// endpoint pairs over three arrows, validated from scratch.
inline std::vector<std::set<int>> triangle_sites(const GaussDiagram& d) {
    std::vector<std::set<int>> out;
    const int len = d.length();
    if (len < 6) return out;
    for (int p1 = 0; p1 < len; ++p1)
        for (int p2 = p1 + 1; p2 < len; ++p2)
            for (int p3 = p2 + 1; p3 < len; ++p3) {
                std::set<int> slots{p1, omod(p1 + 1, len), p2, omod(p2 + 1, len),
                                    p3, omod(p3 + 1, len)};
                if (slots.size() != 6) continue;
                auto seg = [&](int p) {
                    return std::pair<Endpoint, Endpoint>{d.at(p), d.at(omod(p + 1, len))};
                };
                auto [a1, a2] = seg(p1);
                auto [b1, b2] = seg(p2);
                auto [c1, c2] = seg(p3);
                std::set<int> arrows{a1.arrow, a2.arrow, b1.arrow, b2.arrow, c1.arrow, c2.arrow};
                if (arrows.size() != 3) continue;
                if (a1.arrow == a2.arrow || b1.arrow == b2.arrow || c1.arrow == c2.arrow) continue;

                // roles: need one double-tail, one double-head, one mixed segment
                auto tails = [](const std::pair<Endpoint, Endpoint>& s) {
                    return (s.first.role == Role::Tail) + (s.second.role == Role::Tail);
                };
                std::vector<std::pair<int, std::pair<Endpoint, Endpoint>>> segs{
                    {p1, {a1, a2}}, {p2, {b1, b2}}, {p3, {c1, c2}}};
                std::optional<std::pair<Endpoint, Endpoint>> top, mid, bot;
                bool bad = false;
                for (auto& [pos, s] : segs) {
                    (void)pos;
                    int t = tails(s);
                    if (t == 2) {
                        if (top) bad = true;
                        top = s;
                    } else if (t == 0) {
                        if (bot) bad = true;
                        bot = s;
                    } else {
                        if (mid) bad = true;
                        mid = s;
                    }
                }
                if (bad || !top || !mid || !bot) continue;
                int tm = (mid->first.role == Role::Head ? mid->first : mid->second).arrow;
                int mb = (mid->first.role == Role::Tail ? mid->first : mid->second).arrow;
                int tb = 0;
                for (int x : arrows)
                    if (x != tm && x != mb) tb = x;
                // arrow placement consistency
                auto holds = [](const std::pair<Endpoint, Endpoint>& s, int arrow, Role role) {
                    return (s.first.arrow == arrow && s.first.role == role) ||
                           (s.second.arrow == arrow && s.second.role == role);
                };
                if (!holds(*top, tm, Role::Tail) || !holds(*top, tb, Role::Tail)) continue;
                if (!holds(*bot, tb, Role::Head) || !holds(*bot, mb, Role::Head)) continue;

                // planar sign consistency
                bool tau = top->first.arrow == tm;
                bool mu = mid->first.arrow == tm;
                bool beta = bot->first.arrow == tb;
                auto pm = [](bool bit) { return bit ? -1 : +1; };
                if (d.sign(tm) * d.sign(mb) != pm(tau ^ beta)) continue;
                if (d.sign(tb) * d.sign(mb) != pm(tau ^ mu)) continue;
                out.push_back({p1, p2, p3});
            }
    return out;
}

}  // namespace gauss::oracles

#endif
