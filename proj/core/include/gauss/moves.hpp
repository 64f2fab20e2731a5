#ifndef GAUSS_MOVES_HPP
#define GAUSS_MOVES_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gauss/diagram.hpp"

namespace gauss {

enum class MoveKind : std::uint8_t { R1, R2, R3 };

/// One of the 24 move classes.  Indices:
///   R1(i, j): i = kink orientation (+1 counterclockwise), j = crossing sign.
///   R2(i, j): i = +1 direct (meeting strands parallel), j = sign of the
///             crossing whose tail comes second along the over-strand.
///   R3(i, j, k, m): i, j, k = signs of the top-middle, top-bottom and
///             middle-bottom crossings; m = +1 descending, -1 ascending.
struct MoveClass {
    MoveKind kind = MoveKind::R1;
    std::array<int, 4> idx{0, 0, 0, 0};

    friend bool operator==(const MoveClass&, const MoveClass&) = default;
};

/// direction = +1: crossing count increases (R1/R2) or q goes -1 -> +1 (R3).
struct DirectedMoveClass {
    MoveClass cls;
    int direction = +1;

    friend bool operator==(const DirectedMoveClass&, const DirectedMoveClass&) = default;
};

std::string to_string(const MoveClass& c);
std::string to_string(const DirectedMoveClass& c);

// -- move sites -----------------------------------------------------------------

/// Insert an isolated kink at `gap`: tail-then-head unless head_first.
/// `kink` is the planar curl orientation; it only drives the tracked winding.
struct R1Insert {
    int gap = 0;
    int sign = +1;
    int kink = +1;
    bool head_first = false;
};

struct R1Remove {
    int arrow = 0;
    int kink = +1;
};

/// Insert two opposite-sign arrows: tails adjacent at gap_over, heads adjacent
/// at gap_under.  interleaved chords give a direct pair, nested an inverse one.
/// sign_first is the sign of the arrow whose tail lands first.  When both gaps
/// coincide the tail block lands first unless heads_block_first is set.
struct R2Insert {
    int gap_over = 0;
    int gap_under = 0;
    bool interleaved = false;
    int sign_first = +1;
    bool heads_block_first = false;
};

struct R2Remove {
    int arrow_a = 0;
    int arrow_b = 0;
};

/// A triangle site: three disjoint pairs of cyclically adjacent endpoints.
/// seg_pos holds the first word position of each pair.
struct R3Site {
    std::array<int, 3> seg_pos{0, 0, 0};
};

using MoveSite = std::variant<R1Insert, R1Remove, R2Insert, R2Remove, R3Site>;

/// Diagram plus the tracked winding number and cached writhe.
struct DiagramState {
    GaussDiagram diagram;
    int winding = 0;
    int writhe_cache = 0;
};

DiagramState make_state(GaussDiagram d, int winding_seed = 0);

/// Resolved data of a valid R3 site.
struct R3Info {
    std::array<int, 3> seg_pos{};   // segment start positions as given
    int seg_top = 0, seg_mid = 0, seg_bot = 0;  // start positions by role
    int arrow_tm = 0, arrow_tb = 0, arrow_mb = 0;
    bool tau = false;   // tail of TM precedes tail of TB in the top segment
    bool mu = false;    // head of TM precedes tail of MB in the middle segment
    bool beta = false;  // head of TB precedes head of MB in the bottom segment
    bool descending = false;  // segments pass in cyclic order top, middle, bottom
    int q = 0;
};

/// Validity test for a candidate triangle.  A site is applicable iff the three
/// pairs are disjoint, each joins two of three distinct arrows pairwise, the
/// role pattern is tails/mixed/heads (top/middle/bottom), and the crossing
/// signs are consistent with a planar triangle:
///   sign(TM)*sign(MB) = (-1)^(tau+beta),  sign(TB)*sign(MB) = (-1)^(tau+mu).
std::optional<R3Info> resolve_r3(const GaussDiagram& d, const R3Site& site);

struct Omega3Context {
    R3Info info;
    bool ascending = false;
    int q = 0;
    // Arcs between consecutive site segments, as half-open position ranges
    // [first, last] of the arc interior (empty arcs have length 0).  Arc a
    // joins the top and middle segments, b middle-bottom, c top-bottom.
    struct Arc {
        int begin = 0;  // position after the preceding segment
        int length = 0;
    };
    Arc arc_a, arc_b, arc_c;
};

// -- operations -------------------------------------------------------------------

std::vector<R3Site> enumerate_r3_sites(const GaussDiagram& d);

/// All removal sites present in d, with their directed classes: R1Remove for
/// isolated arrows, R2Remove for adjacent-tails/adjacent-heads opposite-sign
/// pairs, and every R3 site.  Deterministic order by lowest word position.
std::vector<std::pair<MoveSite, DirectedMoveClass>> enumerate_removal_sites(const GaussDiagram& d);

DirectedMoveClass classify(const MoveSite& site, const GaussDiagram& d);

int arnold_q(const R3Site& site, const GaussDiagram& d);

Omega3Context omega3_context(const R3Site& site, const GaussDiagram& d);

DiagramState apply_move(const DiagramState& state, const MoveSite& site);

/// Connected sum of states; cut_style is +1 or -1.  Tracked winding obeys
/// winding(sum) = winding(s1) + winding(s2) - cut_style.
DiagramState sum_states(const DiagramState& s1, int cut_style, const DiagramState& s2, int gap1,
                        int gap2);

// -- CLI site addressing -----------------------------------------------------------
// r1-@<arrowid>:i=±1 | r1+@<gap>:i=±1,j=±1 | r2-@<id>,<id>
// r2+@<gap>,<gap>:interleaved=0|1,sign=±1 | r3@<id>,<id>,<id>

std::string render_site(const MoveSite& site, const GaussDiagram& d);
MoveSite parse_site(std::string_view spec, const GaussDiagram& d);

}  // namespace gauss

#endif
