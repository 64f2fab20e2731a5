#ifndef GAUSS_DIAGRAM_HPP
#define GAUSS_DIAGRAM_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gauss {

/// Thrown when a Gauss code fails to parse or violates double-occurrence rules.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation receives structurally invalid arguments
/// (unknown arrow id, gap out of range, inapplicable move site).
class diagram_error : public std::runtime_error {
public:
    explicit diagram_error(const std::string& what) : std::runtime_error(what) {}
};

/// Tail marks the overpass occurrence of a crossing, Head the underpass.
/// An arrow points from its tail to its head (over to under).
enum class Role : std::uint8_t { Tail = 0, Head = 1 };

struct Endpoint {
    int arrow = 0;
    Role role = Role::Tail;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A signed Gauss diagram: a cyclic double-occurrence word of arrow
/// endpoints together with a sign for each arrow.  Arrow ids are arbitrary
/// positive integers; each id occurs exactly once as Tail and once as Head.
/// The empty diagram (n = 0) is legal.
class GaussDiagram {
public:
    GaussDiagram() = default;
    GaussDiagram(std::vector<Endpoint> word, std::map<int, int> signs);

    int arrow_count() const { return static_cast<int>(signs_.size()); }
    int length() const { return static_cast<int>(word_.size()); }  // 2n
    bool empty() const { return word_.empty(); }

    const std::vector<Endpoint>& word() const { return word_; }
    const std::map<int, int>& signs() const { return signs_; }

    int sign(int arrow) const;
    bool has_arrow(int arrow) const { return signs_.count(arrow) != 0; }

    /// Word position of the given occurrence of an arrow.
    int position(int arrow, Role role) const;

    const Endpoint& at(int pos) const { return word_[static_cast<std::size_t>(pos)]; }

    /// Largest arrow id in use (0 when empty).  Fresh ids are allocated above it.
    int max_arrow_id() const;

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<Endpoint> word_;
    std::map<int, int> signs_;  // arrow id -> +1 / -1

    void validate() const;
};

/// Token string identifying a diagram up to rotation of the cyclic word and
/// relabeling of arrow ids.  Two diagrams are the same knot-diagram object
/// exactly when their canonical forms compare equal.
struct CanonicalForm {
    std::string token;
    auto operator<=>(const CanonicalForm&) const = default;
};

// -- parsing / serialization -------------------------------------------------

/// Parse a Gauss code.  Grammar: token*, token := ('O'|'U') digits ('+'|'-'),
/// digits := [1-9][0-9]*.  Whitespace between tokens is permitted.  Both
/// occurrences of an id must carry the same sign character.
GaussDiagram parse_gauss_code(std::string_view text);

/// Canonical serialization: starts at the rotation chosen by canonical_form,
/// ids renumbered 1..n by first appearance, no whitespace.
std::string serialize(const GaussDiagram& d);

CanonicalForm canonical_form(const GaussDiagram& d);

// -- structural operations ----------------------------------------------------

/// Reverse the orientation of the circle.  Roles and signs are unchanged.
GaussDiagram reverse_orientation(const GaussDiagram& d);

/// Mirror image: negate every sign, word unchanged.
GaussDiagram mirror(const GaussDiagram& d);

/// Splice d2 into d1 at gap cut1, starting d2's word at gap cut2.  Gap g sits
/// immediately before word position g; the empty diagram has the single gap 0.
/// Arrow ids of d2 are shifted above d1's to avoid collisions.
GaussDiagram connected_sum(const GaussDiagram& d1, int cut1, const GaussDiagram& d2, int cut2);

/// Subdiagram spanned by the arrows in `keep` (must all be present).
GaussDiagram restrict_to_subset(const GaussDiagram& d, const std::set<int>& keep);

/// True iff the chords of arrows a and b interleave around the circle.
bool interlaced(const GaussDiagram& d, int a, int b);

/// Sum of all crossing signs.
int writhe(const GaussDiagram& d);

/// Number of gaps (insertion slots) in the word: 2n, or 1 for the empty diagram.
int gap_count(const GaussDiagram& d);

}  // namespace gauss

#endif
