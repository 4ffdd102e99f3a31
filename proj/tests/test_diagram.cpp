#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "linkc/braid.hpp"
#include "linkc/diagram.hpp"
#include "linkc/errors.hpp"
#include "linkc/families.hpp"

#include "helpers.hpp"

using namespace linkc;

namespace {

const char* trefoil_pd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* figure8_pd = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* hopf_pd = "X[2,1,3,4] X[4,3,1,2]";

} // namespace

TEST_CASE("pd text parses and round-trips") {
    LinkDiagram tref = parse_pd(trefoil_pd);
    CHECK(tref.crossings.size() == 3);
    CHECK(tref.unknots == 0);
    CHECK(same_diagram(parse_pd(serialize_pd(tref)), tref));

    LinkDiagram with_unknots = parse_pd(std::string("unknots=2 ") + hopf_pd);
    CHECK(with_unknots.unknots == 2);
    CHECK(same_diagram(parse_pd(serialize_pd(with_unknots)), with_unknots));

    LinkDiagram empty = parse_pd("");
    CHECK(empty.empty());
    CHECK(parse_pd("unknots=3").unknots == 3);
}

TEST_CASE("pd parsing rejects malformed and non-planar input") {
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), parse_error);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4,5]"), parse_error);
    CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), parse_error);
    CHECK_THROWS_AS(parse_pd("X[0,1,2,3]"), parse_error);
    CHECK_THROWS_AS(parse_pd("unknots=-1"), parse_error);

    // every edge id must occur exactly twice
    CHECK_THROWS_AS(parse_pd("X[1,1,1,2] X[2,3,3,4]"), parse_error);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), parse_error);

    // a rotation system that only embeds in the torus: the second Hopf
    // record written backwards
    CHECK_THROWS_AS(parse_pd("X[2,1,3,4] X[4,3,2,1]"), parse_error);
    CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,3,6]"), parse_error);
}

TEST_CASE("same_diagram canonicalizes the under-strand rotation only") {
    LinkDiagram tref = parse_pd(trefoil_pd);
    // rotating a record by two slots renames which under end is incoming but
    // describes the same crossing
    LinkDiagram rotated = tref;
    std::rotate(rotated.crossings[0].edge.begin(),
                rotated.crossings[0].edge.begin() + 2,
                rotated.crossings[0].edge.end());
    CHECK(same_diagram(tref, rotated));
    // renaming edges is a different representation, deliberately not equal
    LinkDiagram renamed =
        parse_pd("X[11,14,12,15] X[13,16,14,11] X[15,12,16,13]");
    CHECK_FALSE(same_diagram(tref, renamed));
    CHECK_FALSE(same_diagram(tref, parse_pd(figure8_pd)));
    CHECK_FALSE(same_diagram(tref, mirror(tref)));
}

TEST_CASE("component counts match known links") {
    CHECK(component_count(parse_pd("")) == 0);
    CHECK(component_count(parse_pd("unknots=3")) == 3);
    CHECK(component_count(parse_pd(trefoil_pd)) == 1);
    CHECK(component_count(parse_pd(hopf_pd)) == 2);
    CHECK(component_count(braid_closure(turks_head(3))) == 3);
    CHECK(component_count(braid_closure(turks_head(4))) == 1);
}

TEST_CASE("braid closure components agree with the permutation oracle") {
    for (long long m = 2; m <= 6; ++m)
        for (long long q = 1; q <= 9; ++q) {
            BraidWord b = torus_braid(m, q);
            CHECK(component_count(braid_closure(b)) ==
                  testers::closure_components_oracle(b));
        }
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        BraidWord b = testers::random_braid(rng);
        CAPTURE(serialize_braid(b));
        CHECK(component_count(braid_closure(b)) ==
              testers::closure_components_oracle(b));
    }
}

TEST_CASE("face sizes always sum to four times the crossing count") {
    auto check_faces = [](const LinkDiagram& d) {
        std::size_t total = 0;
        std::set<std::pair<int, int>> corners_seen;
        for (const Face& f : faces(d)) {
            total += f.size();
            for (const FaceCorner& c : f.corners)
                CHECK(corners_seen.insert({c.crossing, c.corner}).second);
        }
        CHECK(total == 4 * d.crossings.size());
        CHECK(corners_seen.size() == 4 * d.crossings.size());
    };
    check_faces(parse_pd(trefoil_pd));
    check_faces(parse_pd(figure8_pd));
    check_faces(parse_pd(hopf_pd));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial)
        check_faces(braid_closure(testers::random_braid(rng)));
}

TEST_CASE("face counts satisfy the euler relation on connected diagrams") {
    // V - E + F = 2 with E = 2V forces F = V + 2
    for (const char* pd : {trefoil_pd, figure8_pd, hopf_pd}) {
        LinkDiagram d = parse_pd(pd);
        CHECK(faces(d).size() == d.crossings.size() + 2);
    }
    LinkDiagram t35 = braid_closure(torus_braid(3, 5));
    CHECK(t35.crossings.size() == 10); // (m-1) * q letters
    CHECK(faces(t35).size() == 12);
}

TEST_CASE("corner_faces inverts faces") {
    LinkDiagram d = braid_closure(torus_braid(3, 4));
    std::vector<Face> fs = faces(d);
    std::vector<std::array<int, 4>> idx = corner_faces(d, fs);
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (const FaceCorner& c : fs[f].corners)
            CHECK(idx[static_cast<std::size_t>(c.crossing)]
                     [static_cast<std::size_t>(c.corner)] ==
                  static_cast<int>(f));
}

TEST_CASE("alternation detection") {
    CHECK(is_alternating(parse_pd("")));
    CHECK(is_alternating(parse_pd(trefoil_pd)));
    CHECK(is_alternating(parse_pd(figure8_pd)));
    CHECK(is_alternating(braid_closure(turks_head(5))));
    CHECK(is_alternating(twist_knot(4)));
    CHECK_FALSE(is_alternating(twist_knot_usual(4)));
    CHECK_FALSE(is_alternating(braid_closure(parse_braid("strands=2 : 1 1 -1 1"))));
}

TEST_CASE("reducedness detection") {
    CHECK(is_reduced(parse_pd("")));
    CHECK(is_reduced(parse_pd(trefoil_pd)));
    CHECK(is_reduced(braid_closure(turks_head(4))));
    CHECK(is_reduced(twist_knot_usual(3)));
    // one kink: the lone crossing is nugatory
    CHECK_FALSE(is_reduced(parse_pd("X[2,1,1,2]")));
    // a kink appended to a trefoil is still non-reduced
    CHECK_FALSE(is_reduced(braid_closure(parse_braid("strands=3 : 1 1 1 2"))));
}

TEST_CASE("twist number groups crossings by shared bigons") {
    CHECK(twist_number(parse_pd("")) == 0);
    // all three trefoil crossings chain through bigons into one twist
    CHECK(twist_number(parse_pd(trefoil_pd)) == 1);
    // the figure eight splits into two twists of two
    CHECK(twist_number(parse_pd(figure8_pd)) == 2);
    // Turk's head weaves beyond n = 2 have no bigons at all
    for (long long n = 3; n <= 6; ++n) {
        LinkDiagram d = braid_closure(turks_head(n));
        int bigons = 0;
        for (const Face& f : faces(d))
            if (f.size() == 2) ++bigons;
        CHECK(bigons == 0);
        CHECK(twist_number(d) == static_cast<int>(d.crossings.size()));
        CHECK(twist_number(d) == 2 * n);
    }
    CHECK_THROWS_AS(twist_number(parse_pd("X[2,1,1,2]")), parse_error);
}

TEST_CASE("edge orientations respect the under-strand convention") {
    for (const char* pd : {trefoil_pd, figure8_pd, hopf_pd}) {
        LinkDiagram d = parse_pd(pd);
        std::vector<EdgeOrientation> eo = edge_orientations(d);
        CHECK(eo.size() == 2 * d.crossings.size());

        std::set<int> edges;
        std::map<std::pair<int, int>, int> arrivals, departures;
        for (const EdgeOrientation& o : eo) {
            CHECK(edges.insert(o.edge).second);
            ++departures[{o.tail.crossing, o.tail.slot}];
            ++arrivals[{o.head.crossing, o.head.slot}];
            // an under-strand end is slot 0 (incoming) or slot 2 (outgoing)
            if (o.head.slot == 2) FAIL("edge arrives at the outgoing under slot");
            if (o.tail.slot == 0) FAIL("edge departs from the incoming under slot");
        }
        // each crossing has exactly two arriving and two departing ends
        for (std::size_t c = 0; c < d.crossings.size(); ++c) {
            int in = 0, out = 0;
            for (int s = 0; s < 4; ++s) {
                in += arrivals.count({static_cast<int>(c), s});
                out += departures.count({static_cast<int>(c), s});
            }
            CHECK(in == 2);
            CHECK(out == 2);
        }
    }
}

TEST_CASE("crossing signs flip under mirroring") {
    LinkDiagram tref = parse_pd(trefoil_pd);
    std::vector<int> s = crossing_signs(tref);
    std::vector<int> ms = crossing_signs(mirror(tref));
    REQUIRE(s.size() == 3);
    int writhe = 0, mwrithe = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(std::abs(s[k]) == 1);
        CHECK(ms[k] == -s[k]);
        writhe += s[k];
        mwrithe += ms[k];
    }
    // the bundled trefoil is a (2,3) torus closure: all crossings share a sign
    CHECK(std::abs(writhe) == 3);
    CHECK(mwrithe == -writhe);
}

TEST_CASE("mirror is an involution preserving diagram structure") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        LinkDiagram d = braid_closure(testers::random_braid(rng));
        LinkDiagram m = mirror(d);
        CHECK(same_diagram(mirror(m), d));
        CHECK(m.crossings.size() == d.crossings.size());
        CHECK(component_count(m) == component_count(d));
        CHECK(is_alternating(m) == is_alternating(d));
        CHECK(is_reduced(m) == is_reduced(d));
        CHECK(faces(m).size() == faces(d).size());
    }
}

TEST_CASE("connected sum splices diagrams") {
    LinkDiagram tref = parse_pd(trefoil_pd);
    LinkDiagram hopf = parse_pd(hopf_pd);

    LinkDiagram granny = connected_sum_diagram(tref, 1, tref, 1);
    CHECK(granny.crossings.size() == 6);
    CHECK(component_count(granny) == 1);
    CHECK(is_alternating(granny));
    CHECK(is_reduced(granny));

    // summing with the mirror breaks alternation at the splice
    LinkDiagram square = connected_sum_diagram(tref, 1, mirror(tref), 1);
    CHECK(square.crossings.size() == 6);
    CHECK(component_count(square) == 1);
    CHECK_FALSE(is_alternating(square));
    CHECK(is_reduced(square));

    LinkDiagram th = connected_sum_diagram(tref, 2, hopf, 3);
    CHECK(th.crossings.size() == 5);
    CHECK(component_count(th) ==
          component_count(tref) + component_count(hopf) - 1);

    // arc id 0 designates a crossing-free unknot, the identity for sums
    LinkDiagram unk;
    unk.unknots = 1;
    CHECK(same_diagram(connected_sum_diagram(unk, 0, tref, 1), tref));
    CHECK(same_diagram(connected_sum_diagram(tref, 1, unk, 0), tref));
    CHECK_THROWS_AS(connected_sum_diagram(tref, 0, tref, 1), parse_error);
    CHECK_THROWS_AS(connected_sum_diagram(tref, 7, tref, 1), parse_error);
}

TEST_CASE("braid text parses and round-trips") {
    BraidWord b = parse_braid("strands=3 : 1 -2 1 -2");
    CHECK(b.strands == 3);
    CHECK(b.letters == std::vector<int>{1, -2, 1, -2});
    CHECK(parse_braid(serialize_braid(b)) == b);
    CHECK(parse_braid("strands=4 :").letters.empty());

    CHECK_THROWS_AS(parse_braid("strands=3 1 2"), parse_error);
    CHECK_THROWS_AS(parse_braid("strands=3 : 3"), parse_error);
    CHECK_THROWS_AS(parse_braid("strands=3 : 0"), parse_error);
    CHECK_THROWS_AS(parse_braid("strands=1 : 1"), parse_error);
}

TEST_CASE("braid closures validate and count strands never braided") {
    // untouched strands close into crossing-free unknots; sigma_1^2 closes
    // into a Hopf link, so four strands give 2 + 2 components
    LinkDiagram d = braid_closure(parse_braid("strands=4 : 1 1"));
    CHECK(d.unknots == 2);
    CHECK(component_count(d) == 4);

    LinkDiagram trivial = braid_closure(parse_braid("strands=3 :"));
    CHECK(trivial.unknots == 3);
    CHECK(trivial.crossings.empty());

    // the (2,3) torus closure is a reduced alternating 3-crossing knot
    LinkDiagram t23 = braid_closure(torus_braid(2, 3));
    CHECK(t23.crossings.size() == 3);
    CHECK(component_count(t23) == 1);
    CHECK(is_alternating(t23));
    CHECK(is_reduced(t23));
    CHECK(twist_number(t23) == 1);
}
