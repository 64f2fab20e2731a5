#include "gauss/random.hpp"

#include <algorithm>

#include "gauss/realizability.hpp"

namespace gauss {

GaussDiagram random_diagram(Rng& rng, int max_arrows) {
    int n = rng.below(max_arrows + 1);
    std::vector<int> pos(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) pos[static_cast<std::size_t>(i)] = i;
    for (int i = 2 * n - 1; i > 0; --i)
        std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(rng.below(i + 1))]);

    std::vector<Endpoint> word(static_cast<std::size_t>(2 * n));
    std::map<int, int> signs;
    for (int a = 0; a < n; ++a) {
        bool flip = rng.below(2) == 1;
        word[static_cast<std::size_t>(pos[static_cast<std::size_t>(2 * a)])] =
            Endpoint{a + 1, flip ? Role::Head : Role::Tail};
        word[static_cast<std::size_t>(pos[static_cast<std::size_t>(2 * a + 1)])] =
            Endpoint{a + 1, flip ? Role::Tail : Role::Head};
        signs[a + 1] = rng.pm();
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

MoveSite random_insertion(Rng& rng, const GaussDiagram& d) {
    int gaps = gap_count(d);
    if (rng.below(2) == 0)
        return R1Insert{rng.below(gaps), rng.pm(), rng.pm(), rng.below(2) == 1};
    return R2Insert{rng.below(gaps), rng.below(gaps), rng.below(2) == 1, rng.pm()};
}

GaussDiagram random_classical_diagram(Rng& rng, int max_arrows) {
    DiagramState state = make_state(GaussDiagram{});
    int want = rng.below(max_arrows + 1);
    int guard = 0;
    while (state.diagram.arrow_count() < want && ++guard < 200) {
        MoveSite site = random_insertion(rng, state.diagram);
        DiagramState next = apply_move(state, site);
        if (next.diagram.arrow_count() > want) continue;
        if (!is_realizable(next.diagram)) continue;
        state = std::move(next);
    }
    return state.diagram;
}

}  // namespace gauss
