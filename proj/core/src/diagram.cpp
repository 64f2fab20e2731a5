#include "gauss/diagram.hpp"

#include <algorithm>
#include <cctype>

namespace gauss {

GaussDiagram::GaussDiagram(std::vector<Endpoint> word, std::map<int, int> signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
    validate();
}

void GaussDiagram::validate() const {
    std::map<int, int> tails, heads;
    for (const Endpoint& e : word_) {
        if (e.arrow <= 0) throw diagram_error("arrow ids must be positive");
        (e.role == Role::Tail ? tails : heads)[e.arrow]++;
    }
    if (word_.size() != 2 * signs_.size())
        throw diagram_error("word length does not match sign table");
    for (const auto& [id, s] : signs_) {
        if (s != 1 && s != -1) throw diagram_error("sign must be +1 or -1");
        if (tails[id] != 1 || heads[id] != 1)
            throw diagram_error("arrow " + std::to_string(id) +
                                " must occur exactly once as tail and once as head");
    }
}

int GaussDiagram::sign(int arrow) const {
    auto it = signs_.find(arrow);
    if (it == signs_.end()) throw diagram_error("unknown arrow id " + std::to_string(arrow));
    return it->second;
}

int GaussDiagram::position(int arrow, Role role) const {
    for (int p = 0; p < length(); ++p)
        if (word_[static_cast<std::size_t>(p)].arrow == arrow &&
            word_[static_cast<std::size_t>(p)].role == role)
            return p;
    throw diagram_error("unknown arrow id " + std::to_string(arrow));
}

int GaussDiagram::max_arrow_id() const {
    return signs_.empty() ? 0 : signs_.rbegin()->first;
}

// -- parsing -------------------------------------------------------------------

GaussDiagram parse_gauss_code(std::string_view text) {
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Role role;
        if (c == 'O')
            role = Role::Tail;
        else if (c == 'U')
            role = Role::Head;
        else
            throw parse_error(std::string("expected 'O' or 'U' at offset ") + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] < '1' || text[i] > '9')
            throw parse_error("expected nonzero digit at offset " + std::to_string(i));
        long id = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            id = id * 10 + (text[i] - '0');
            if (id > 1'000'000'000) throw parse_error("arrow id too large");
            ++i;
        }
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw parse_error("expected sign at offset " + std::to_string(i));
        int sgn = text[i] == '+' ? 1 : -1;
        ++i;
        auto [it, inserted] = signs.emplace(static_cast<int>(id), sgn);
        if (!inserted && it->second != sgn)
            throw parse_error("conflicting signs for arrow " + std::to_string(id));
        word.push_back(Endpoint{static_cast<int>(id), role});
    }

    // double-occurrence checks with specific messages
    std::map<int, int> tails, heads;
    for (const Endpoint& e : word) (e.role == Role::Tail ? tails : heads)[e.arrow]++;
    for (const auto& [id, s] : signs) {
        (void)s;
        int t = tails[id], h = heads[id];
        if (t + h != 2)
            throw parse_error("arrow " + std::to_string(id) + " occurs " + std::to_string(t + h) +
                              " times, expected 2");
        if (t == 2) throw parse_error("arrow " + std::to_string(id) + " occurs twice as O");
        if (h == 2) throw parse_error("arrow " + std::to_string(id) + " occurs twice as U");
    }
    return GaussDiagram(std::move(word), std::move(signs));
}

// -- canonical form -------------------------------------------------------------

namespace {

// Serialization of the word starting at rotation r, ids relabeled 1..n by
// first appearance.
std::string rotation_string(const GaussDiagram& d, int r) {
    const int len = d.length();
    std::string out;
    out.reserve(static_cast<std::size_t>(len) * 4);
    std::map<int, int> relabel;
    int next = 1;
    for (int k = 0; k < len; ++k) {
        const Endpoint& e = d.at((r + k) % len);
        auto [it, inserted] = relabel.emplace(e.arrow, next);
        if (inserted) ++next;
        out += (e.role == Role::Tail ? 'O' : 'U');
        out += std::to_string(it->second);
        out += (d.sign(e.arrow) > 0 ? '+' : '-');
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const GaussDiagram& d) {
    if (d.empty()) return CanonicalForm{""};
    std::string best = rotation_string(d, 0);
    for (int r = 1; r < d.length(); ++r) {
        std::string s = rotation_string(d, r);
        if (s < best) best = std::move(s);
    }
    return CanonicalForm{std::move(best)};
}

std::string serialize(const GaussDiagram& d) { return canonical_form(d).token; }

// -- structural operations --------------------------------------------------------

GaussDiagram reverse_orientation(const GaussDiagram& d) {
    std::vector<Endpoint> word(d.word().rbegin(), d.word().rend());
    return GaussDiagram(std::move(word), d.signs());
}

GaussDiagram mirror(const GaussDiagram& d) {
    std::map<int, int> signs;
    for (const auto& [id, s] : d.signs()) signs[id] = -s;
    return GaussDiagram(d.word(), std::move(signs));
}

int gap_count(const GaussDiagram& d) { return d.empty() ? 1 : d.length(); }

GaussDiagram connected_sum(const GaussDiagram& d1, int cut1, const GaussDiagram& d2, int cut2) {
    if (cut1 < 0 || cut1 >= gap_count(d1)) throw diagram_error("cut gap out of range in first summand");
    if (cut2 < 0 || cut2 >= gap_count(d2)) throw diagram_error("cut gap out of range in second summand");

    const int shift = d1.max_arrow_id();
    std::vector<Endpoint> word;
    word.reserve(d1.word().size() + d2.word().size());
    for (int p = 0; p < d1.length(); ++p) {
        if (p == cut1)
            for (int k = 0; k < d2.length(); ++k) {
                Endpoint e = d2.at((cut2 + k) % d2.length());
                word.push_back(Endpoint{e.arrow + shift, e.role});
            }
        word.push_back(d1.at(p));
    }
    if (d1.empty())
        for (int k = 0; k < d2.length(); ++k) {
            Endpoint e = d2.at((cut2 + k) % d2.length());
            word.push_back(Endpoint{e.arrow + shift, e.role});
        }

    std::map<int, int> signs = d1.signs();
    for (const auto& [id, s] : d2.signs()) signs[id + shift] = s;
    return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram restrict_to_subset(const GaussDiagram& d, const std::set<int>& keep) {
    for (int id : keep)
        if (!d.has_arrow(id)) throw diagram_error("unknown arrow id " + std::to_string(id));
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    for (const Endpoint& e : d.word())
        if (keep.count(e.arrow)) word.push_back(e);
    for (int id : keep) signs[id] = d.sign(id);
    return GaussDiagram(std::move(word), std::move(signs));
}

bool interlaced(const GaussDiagram& d, int a, int b) {
    if (a == b) throw diagram_error("interlaced requires two distinct arrows");
    int a1 = d.position(a, Role::Tail), a2 = d.position(a, Role::Head);
    int b1 = d.position(b, Role::Tail), b2 = d.position(b, Role::Head);
    if (a1 > a2) std::swap(a1, a2);
    bool in1 = a1 < b1 && b1 < a2;
    bool in2 = a1 < b2 && b2 < a2;
    return in1 != in2;
}

int writhe(const GaussDiagram& d) {
    int w = 0;
    for (const auto& [id, s] : d.signs()) {
        (void)id;
        w += s;
    }
    return w;
}

}  // namespace gauss
