#ifndef GAUSS_INVARIANTS_HPP
#define GAUSS_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gauss/diagram.hpp"
#include "gauss/moves.hpp"

namespace gauss {

/// Unsigned counting pattern: cyclic double-occurrence word with arrow ids
/// 1..m.  Built-in patterns contain no isolated arrow.
struct ArrowPattern {
    std::vector<Endpoint> word;

    int arrow_count() const { return static_cast<int>(word.size() / 2); }
};

/// Built-in patterns: 'a' and 'd' require n = 4; 'w' requires odd n >= 3.
/// w_n has 2n endpoints alternating tail/head with antipodal arrow ends;
/// d_4 is a_4 with the circle orientation reversed.
ArrowPattern builtin_pattern(char name, int n);

/// Signed count of subdiagrams of d isomorphic to p (rotation + relabeling,
/// signs ignored for matching).  Each matching arrow subset contributes the
/// product of its signs once, regardless of pattern automorphisms.
long long count_pattern(const GaussDiagram& d, const ArrowPattern& p);

/// A_n, D_n ('A'/'D', n = 4) and W_n ('W', odd n >= 3).
long long evaluate(char name, int n, const GaussDiagram& d);

/// Local linking number of a triangle site: sum of signs of non-site arrows
/// with tail on arc b and head on arc a.
int llk(const GaussDiagram& d, const Omega3Context& ctx);

/// Prediction vs. measurement of the W_3 jump across one R3 application:
/// predicted = direction * llk, actual = W_3(after) - W_3(before).
struct W3Jump {
    long long predicted = 0;
    long long actual = 0;
};
W3Jump w3_jump_check(const DiagramState& state, const R3Site& site);

struct InvariantProfile {
    int writhe = 0;
    std::optional<int> winding;
    std::map<int, long long> A;  // n -> A_n
    std::map<int, long long> D;
    std::map<int, long long> W;  // odd n -> W_n
};

InvariantProfile profile(const DiagramState& state, int n_max = 6);
InvariantProfile profile(const GaussDiagram& d, int n_max = 6);

/// Lower bounds on the moves needed to transform a diagram with profile
/// `from` into one with profile `to`.
struct MoveBoundsReport {
    bool need_ascending = false;   // some A_n differs
    bool need_descending = false;  // some D_n differs
    int min_omega1 = 0;            // at least |delta writhe| kink moves
    bool need_two_omega1_classes = false;  // no single class pair (i,j), -(i,j) fits
    std::string text;
};
MoveBoundsReport move_lower_bounds(const InvariantProfile& from, const InvariantProfile& to);

}  // namespace gauss

#endif
