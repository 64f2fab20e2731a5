#ifndef GAUSS_REWRITE_HPP
#define GAUSS_REWRITE_HPP

#include <string>
#include <vector>

#include "gauss/moves.hpp"

namespace gauss {

/// Target sets of six move classes sufficient for all 24.
/// Primary:   R1(+,+) R1(+,-) R2(-,+) R2(-,-) R3(-,+,+,+) R3(-,-,+,-)
/// Alternate: R1(-,+) R1(-,-) R2(-,+) R2(+,-) R3(+,-,-,+) R3(+,+,-,-)
enum class GeneratingSet { Primary, Alternate };

bool class_in_set(const MoveClass& cls, GeneratingSet set);

struct RewriteStep {
    MoveSite site;  // addressed against the diagram this step applies to
    DirectedMoveClass cls;
    std::string spec;  // rendered site address at application time
};

struct MoveSequence {
    std::vector<RewriteStep> steps;
    DiagramState end;
};

struct IndexTriple {
    int i = +1, j = +1, k = +1;
    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

/// Shortest word in the three wedge transformations
///   g1: (i,j,k) -> (j,i,-k)   g2: (i,j,k) -> (j,-i,k)   g3: (i,j,k) -> (-j,i,k)
/// taking `current` to `target` (generator indices 1..3, breadth-first).
std::vector<int> conjugate_r3(IndexTriple current, IndexTriple target);

/// Lemma-style expansion of a kink move whose class lies outside the set.
MoveSequence expand_r1(const DiagramState& state, const MoveSite& site,
                       GeneratingSet set = GeneratingSet::Primary);

/// Expansion of a direct pair move into kink moves, an inverse pair move and
/// one core triangle move.
MoveSequence expand_r2(const DiagramState& state, const MoveSite& site,
                       GeneratingSet set = GeneratingSet::Primary);

/// Expand any applicable move into a sequence whose every step classifies
/// into the generating set; the end state equals the direct application on
/// (canonical form, winding).
MoveSequence rewrite_to_generating_set(const DiagramState& state, const MoveSite& site,
                                       GeneratingSet set = GeneratingSet::Primary);

/// One line per step, "<class> @ <site-spec>", then the final canonical code.
std::string render_sequence(const MoveSequence& seq);

}  // namespace gauss

#endif
