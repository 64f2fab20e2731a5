#include <doctest.h>

#include "gauss/diagram.hpp"
#include "gauss/random.hpp"

using namespace gauss;

static const char* kFigureEight = "O1+U2+O3-U4-O2+U1+O4-U3-";
static const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";

TEST_CASE("parse: empty and trivial codes") {
    GaussDiagram empty = parse_gauss_code("");
    CHECK(empty.arrow_count() == 0);
    CHECK(serialize(empty) == "");

    GaussDiagram kink = parse_gauss_code("O1+U1+");
    CHECK(kink.arrow_count() == 1);
    CHECK(kink.sign(1) == 1);
    CHECK(kink.at(0).role == Role::Tail);

    GaussDiagram ws = parse_gauss_code("  O1+  U1+ ");
    CHECK(canonical_form(ws) == canonical_form(kink));
}

TEST_CASE("parse: the figure-eight code") {
    GaussDiagram f = parse_gauss_code(kFigureEight);
    CHECK(f.arrow_count() == 4);
    CHECK(writhe(f) == 0);
    CHECK(f.sign(1) == 1);
    CHECK(f.sign(3) == -1);
}

TEST_CASE("parse: error cases") {
    CHECK_THROWS_AS(parse_gauss_code("O1"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("X1+"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("O0+U0+"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("O1+U1-"), parse_error);       // conflicting signs
    CHECK_THROWS_AS(parse_gauss_code("O1+O1+"), parse_error);       // twice as O
    CHECK_THROWS_AS(parse_gauss_code("U1+U1+"), parse_error);       // twice as U
    CHECK_THROWS_AS(parse_gauss_code("O1+U1+O2+"), parse_error);    // odd occurrence
    CHECK_THROWS_AS(parse_gauss_code("O1+U1+O2-U2-O2-"), parse_error);
}

TEST_CASE("canonical form: rotation and relabeling") {
    CHECK(canonical_form(parse_gauss_code("O1+U1+")) == canonical_form(parse_gauss_code("U1+O1+")));
    CHECK(canonical_form(parse_gauss_code("O1+U2+U1+O2+")) ==
          canonical_form(parse_gauss_code("O2+U1+U2+O1+")));
    CHECK(canonical_form(parse_gauss_code("O1+U1+")) != canonical_form(parse_gauss_code("O1-U1-")));
    CHECK(canonical_form(parse_gauss_code("O7+U7+")) == canonical_form(parse_gauss_code("O1+U1+")));
}

TEST_CASE("serialize: idempotent and canonical") {
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        GaussDiagram d = random_diagram(rng, 10);
        std::string code = serialize(d);
        GaussDiagram back = parse_gauss_code(code);
        CHECK(canonical_form(back) == canonical_form(d));
        CHECK(serialize(back) == code);
    }
}

TEST_CASE("reverse orientation") {
    CHECK(serialize(reverse_orientation(GaussDiagram{})) == "");
    GaussDiagram kink = parse_gauss_code("O1+U1+");
    CHECK(canonical_form(reverse_orientation(kink)) == canonical_form(kink));
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        GaussDiagram d = random_diagram(rng, 8);
        CHECK(canonical_form(reverse_orientation(reverse_orientation(d))) == canonical_form(d));
        CHECK(writhe(reverse_orientation(d)) == writhe(d));
    }
}

TEST_CASE("mirror negates signs and writhe") {
    GaussDiagram f = parse_gauss_code(kFigureEight);
    GaussDiagram m = mirror(f);
    CHECK(m.sign(1) == -1);
    CHECK(m.word() == f.word());
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        GaussDiagram d = random_diagram(rng, 8);
        CHECK(writhe(mirror(d)) == -writhe(d));
        CHECK(canonical_form(mirror(mirror(d))) == canonical_form(d));
    }
}

TEST_CASE("connected sum") {
    GaussDiagram f = parse_gauss_code(kFigureEight);
    GaussDiagram t = parse_gauss_code(kTrefoil);

    CHECK(canonical_form(connected_sum(GaussDiagram{}, 0, f, 3)) == canonical_form(f));
    CHECK(canonical_form(connected_sum(f, 2, GaussDiagram{}, 0)) == canonical_form(f));

    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        GaussDiagram a = random_diagram(rng, 6), b = random_diagram(rng, 6);
        int ga = rng.below(gap_count(a)), gb = rng.below(gap_count(b));
        GaussDiagram s = connected_sum(a, ga, b, gb);
        CHECK(writhe(s) == writhe(a) + writhe(b));
        CHECK(s.arrow_count() == a.arrow_count() + b.arrow_count());
    }
    CHECK_THROWS_AS(connected_sum(f, 99, t, 0), diagram_error);

    // splicing at the spliced boundary gap re-associates
    GaussDiagram ab = connected_sum(f, 0, t, 0);
    GaussDiagram abc = connected_sum(ab, 0, f, 0);
    GaussDiagram bc = connected_sum(t, 0, f, 0);
    GaussDiagram abc2 = connected_sum(f, 0, bc, 0);
    CHECK(canonical_form(abc) == canonical_form(abc2));
}

TEST_CASE("restrict_to_subset") {
    GaussDiagram f = parse_gauss_code(kFigureEight);
    CHECK(canonical_form(restrict_to_subset(f, {1, 2, 3, 4})) == canonical_form(f));
    CHECK(restrict_to_subset(f, {}).empty());

    GaussDiagram sub = restrict_to_subset(f, {1, 2});
    // positions read from the code: O1 U2 O2 U1
    CHECK(sub.length() == 4);
    CHECK(sub.at(0) == Endpoint{1, Role::Tail});
    CHECK(sub.at(1) == Endpoint{2, Role::Head});
    CHECK(sub.at(2) == Endpoint{2, Role::Tail});
    CHECK(sub.at(3) == Endpoint{1, Role::Head});
    CHECK(sub.sign(1) == 1);
    CHECK(sub.sign(2) == 1);

    CHECK_THROWS_AS(restrict_to_subset(f, {9}), diagram_error);
}

TEST_CASE("interlaced") {
    GaussDiagram alt = parse_gauss_code("O1+O2+U1+U2+");
    CHECK(interlaced(alt, 1, 2));
    GaussDiagram nested = parse_gauss_code("O1+O2+U2+U1+");
    CHECK(!interlaced(nested, 1, 2));

    GaussDiagram f = parse_gauss_code(kFigureEight);
    CHECK(interlaced(f, 1, 3));
    CHECK(!interlaced(f, 1, 2));
    CHECK_THROWS_AS(interlaced(f, 1, 1), diagram_error);
    CHECK_THROWS_AS(interlaced(f, 1, 9), diagram_error);

    Rng rng(8);
    for (int t = 0; t < 60; ++t) {
        GaussDiagram d = random_diagram(rng, 8);
        if (d.arrow_count() < 2) continue;
        auto it = d.signs().begin();
        int a = it->first, b = std::next(it)->first;
        CHECK(interlaced(d, a, b) == interlaced(d, b, a));
    }
}

TEST_CASE("writhe examples") {
    CHECK(writhe(GaussDiagram{}) == 0);
    CHECK(writhe(parse_gauss_code(kFigureEight)) == 0);
    CHECK(writhe(parse_gauss_code(kTrefoil)) == 3);
}
