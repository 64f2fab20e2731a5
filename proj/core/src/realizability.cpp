#include "gauss/realizability.hpp"

#include <array>

namespace gauss {

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}

CombinatorialMap build_map(const GaussDiagram& d) {
    const int n = d.arrow_count();
    if (n < 1) throw diagram_error("build_map requires at least one crossing");
    const int len = d.length();  // = number of arcs
    CombinatorialMap map;
    map.vertices = n;
    map.edges = len;
    map.sigma.assign(static_cast<std::size_t>(2 * len), -1);
    map.alpha.assign(static_cast<std::size_t>(2 * len), -1);
    for (int p = 0; p < len; ++p) {
        map.alpha[static_cast<std::size_t>(2 * p)] = 2 * p + 1;
        map.alpha[static_cast<std::size_t>(2 * p + 1)] = 2 * p;
    }
    auto in_dart = [&](int pos) { return 2 * mod(pos - 1, len) + 1; };
    auto out_dart = [&](int pos) { return 2 * pos; };

    for (const auto& [id, s] : d.signs()) {
        int pt = d.position(id, Role::Tail);  // over passage
        int ph = d.position(id, Role::Head);  // under passage
        std::array<int, 4> ccw;
        if (s > 0)
            ccw = {in_dart(pt), in_dart(ph), out_dart(pt), out_dart(ph)};
        else
            ccw = {in_dart(pt), out_dart(ph), out_dart(pt), in_dart(ph)};
        for (int k = 0; k < 4; ++k)
            map.sigma[static_cast<std::size_t>(ccw[static_cast<std::size_t>(k)])] =
                ccw[static_cast<std::size_t>((k + 1) % 4)];
    }
    return map;
}

int genus(const GaussDiagram& d) {
    if (d.empty()) return 0;
    CombinatorialMap map = build_map(d);
    const int darts = static_cast<int>(map.sigma.size());
    std::vector<bool> seen(static_cast<std::size_t>(darts), false);
    int faces = 0;
    for (int start = 0; start < darts; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++faces;
        int dart = start;
        do {
            seen[static_cast<std::size_t>(dart)] = true;
            dart = map.sigma[static_cast<std::size_t>(map.alpha[static_cast<std::size_t>(dart)])];
        } while (dart != start);
    }
    // V - E + F = 2 - 2g with E = 2V
    int twice_genus = 2 - map.vertices + map.edges - faces;
    return twice_genus / 2;
}

bool is_realizable(const GaussDiagram& d) { return genus(d) == 0; }

}  // namespace gauss
