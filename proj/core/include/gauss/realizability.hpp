#ifndef GAUSS_REALIZABILITY_HPP
#define GAUSS_REALIZABILITY_HPP

#include <vector>

#include "gauss/diagram.hpp"

namespace gauss {

/// Rotation system of the 4-valent graph underlying a Gauss diagram.
/// Darts are arc ends: arc p runs from word position p to position p+1;
/// dart 2p is its start end, dart 2p+1 its far end.  sigma is the
/// counterclockwise successor around the incident crossing, alpha the other
/// end of the same arc.
struct CombinatorialMap {
    int vertices = 0;  // crossings
    int edges = 0;     // circle arcs
    std::vector<int> sigma;
    std::vector<int> alpha;
};

/// Requires n >= 1.  The cyclic order of the four arc ends at each crossing is
/// the one forced by the two oriented strands crossing with the given sign.
CombinatorialMap build_map(const GaussDiagram& d);

/// Orientable genus of the sign-determined rotation system; 0 for the empty
/// diagram.
int genus(const GaussDiagram& d);

/// A diagram is realizable as a planar knot diagram iff its map has genus 0.
bool is_realizable(const GaussDiagram& d);

}  // namespace gauss

#endif
