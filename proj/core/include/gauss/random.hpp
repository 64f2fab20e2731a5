#ifndef GAUSS_RANDOM_HPP
#define GAUSS_RANDOM_HPP

#include <cstdint>

#include "gauss/diagram.hpp"
#include "gauss/moves.hpp"

namespace gauss {

/// splitmix64; deterministic across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    int pm() { return below(2) == 0 ? +1 : -1; }

private:
    std::uint64_t state_;
};

/// Uniform-ish random diagram with up to max_arrows arrows (possibly 0):
/// random chord pairing, orientations and signs.
GaussDiagram random_diagram(Rng& rng, int max_arrows);

/// Random realizable diagram built by stacking kink and pair insertions from
/// the empty diagram, rejecting steps that raise the genus.
GaussDiagram random_classical_diagram(Rng& rng, int max_arrows);

/// Random applicable insertion site for d.
MoveSite random_insertion(Rng& rng, const GaussDiagram& d);

}  // namespace gauss

#endif
