#include "linkc/corpus.hpp"

#include "linkc/diagram.hpp"
#include "linkc/invariants.hpp"

namespace linkc {

const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> entries = {
    {"unknot",
     "unknots=1",
     0, 1, 1},
    {"kink",
     "X[2,1,1,2]",
     1, 1, 1},
    {"hopf",
     "X[2,1,3,4] X[4,3,1,2]",
     2, 2, 2},
    {"torus-2-3",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,1,2]",
     3, 1, 3},
    {"torus-2-4",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,1,2]",
     4, 2, 4},
    {"torus-2-5",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,1,2]",
     5, 1, 5},
    {"torus-2-6",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,11,12] X[12,11,1,2]",
     6, 2, 6},
    {"torus-2-7",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,11,12] X[12,11,13,14] X[14,13,1,2]",
     7, 1, 7},
    {"torus-2-8",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,11,12] X[12,11,13,14] X[14,13,15,16] X[16,15,1,2]",
     8, 2, 8},
    {"torus-2-9",
     "X[2,1,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,11,12] X[12,11,13,14] X[14,13,15,16] X[16,15,17,18] X[18,17,1,2]",
     9, 1, 9},
    {"th-2",
     "X[2,1,4,5] X[5,6,7,3] X[6,4,1,9] X[9,2,3,7]",
     4, 1, 5},
    {"th-3",
     "X[2,1,4,5] X[5,6,7,3] X[6,4,8,9] X[9,10,11,7] X[10,8,1,13] X[13,2,3,11]",
     6, 3, 16},
    {"th-4",
     "X[2,1,4,5] X[5,6,7,3] X[6,4,8,9] X[9,10,11,7] X[10,8,12,13] X[13,14,15,11] X[14,12,1,17] X[17,2,3,15]",
     8, 1, 45},
    {"th-5",
     "X[2,1,4,5] X[5,6,7,3] X[6,4,8,9] X[9,10,11,7] X[10,8,12,13] X[13,14,15,11] X[14,12,16,17] X[17,18,19,15] X[18,16,1,21] X[21,2,3,19]",
     10, 1, 121},
    {"th-6",
     "X[2,1,4,5] X[5,6,7,3] X[6,4,8,9] X[9,10,11,7] X[10,8,12,13] X[13,14,15,11] X[14,12,16,17] X[17,18,19,15] X[18,16,20,21] X[21,22,23,19] X[22,20,1,25] X[25,2,3,23]",
     12, 3, 320},
    {"twist-1",
     "X[1,2,3,4] X[5,6,4,3] X[2,7,8,5] X[6,8,7,1]",
     4, 1, 5},
    {"twist-2",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[2,9,10,7] X[9,1,8,10]",
     5, 1, 7},
    {"twist-3",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[2,11,12,9] X[10,12,11,1]",
     6, 1, 9},
    {"twist-4",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[10,9,11,12] X[2,13,14,11] X[13,1,12,14]",
     7, 1, 11},
    {"twist-5",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[10,9,11,12] X[13,14,12,11] X[2,15,16,13] X[14,16,15,1]",
     8, 1, 13},
    {"twist-usual-1",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[7,2,9,10] X[10,9,1,8]",
     5, 1, 5},
    {"twist-usual-2",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[11,12,9,2] X[12,11,1,10]",
     6, 1, 7},
    {"twist-usual-3",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[10,9,11,12] X[11,2,13,14] X[14,13,1,12]",
     7, 1, 9},
    {"twist-usual-4",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[10,9,11,12] X[13,14,12,11] X[15,16,13,2] X[16,15,1,14]",
     8, 1, 11},
    {"twist-usual-5",
     "X[1,2,3,4] X[5,6,4,3] X[6,5,7,8] X[9,10,8,7] X[10,9,11,12] X[13,14,12,11] X[14,13,15,16] X[15,2,17,18] X[18,17,1,16]",
     9, 1, 13},
    {"sum-tref-tref",
     "X[2,7,3,4] X[4,3,5,6] X[6,5,1,2] X[8,1,9,10] X[10,9,11,12] X[12,11,7,8]",
     6, 1, 9},
    {"sum-tref-fig8",
     "X[2,7,3,4] X[4,3,5,6] X[6,5,1,2] X[1,8,9,10] X[11,12,10,9] X[8,13,14,11] X[12,14,13,7]",
     7, 1, 15},
    {"sum-fig8-fig8",
     "X[9,2,3,4] X[5,6,4,3] X[2,7,8,5] X[6,8,7,1] X[1,10,11,12] X[13,14,12,11] X[10,15,16,13] X[14,16,15,9]",
     8, 1, 25},
    {"sum-tref-hopf",
     "X[2,7,3,4] X[4,3,5,6] X[6,5,1,2] X[8,1,9,10] X[10,9,7,8]",
     5, 2, 6},
    {"sum-t25-tref",
     "X[2,11,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,1,2] X[12,1,13,14] X[14,13,15,16] X[16,15,11,12]",
     8, 1, 15},
    {"sum-th3-tref",
     "X[2,14,4,5] X[5,6,7,3] X[6,4,8,9] X[9,10,11,7] X[10,8,1,13] X[13,2,3,11] X[15,1,16,17] X[17,16,18,19] X[19,18,14,15]",
     9, 3, 48},
    {"sum-twist2-tref",
     "X[11,2,3,4] X[5,6,4,3] X[6,5,7,8] X[2,9,10,7] X[9,1,8,10] X[12,1,13,14] X[14,13,15,16] X[16,15,11,12]",
     8, 1, 21},
    {"sum-t27-fig8",
     "X[2,15,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,11,12] X[12,11,13,14] X[14,13,1,2] X[1,16,17,18] X[19,20,18,17] X[16,21,22,19] X[20,22,21,15]",
     11, 1, 35},
    {"sum-th4-tref",
     "X[2,18,4,5] X[5,6,7,3] X[6,4,8,9] X[9,10,11,7] X[10,8,12,13] X[13,14,15,11] X[14,12,1,17] X[17,2,3,15] X[19,1,20,21] X[21,20,22,23] X[23,22,18,19]",
     11, 1, 135},
    {"sum-t29-tref",
     "X[2,19,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[10,9,11,12] X[12,11,13,14] X[14,13,15,16] X[16,15,17,18] X[18,17,1,2] X[20,1,21,22] X[22,21,23,24] X[24,23,19,20]",
     12, 1, 27},
    };
    return entries;
}

SelftestResult run_selftest(const std::vector<CorpusEntry>& entries, bool quick) {
    SelftestResult r;
    for (const CorpusEntry& e : entries) {
        if (quick && e.crossings > 8) continue;
        ++r.entries_checked;
        auto fail = [&](const std::string& what) {
            r.ok = false;
            r.failures.push_back("corpus entry " + e.name + ": " + what);
        };
        LinkDiagram d;
        try {
            d = parse_pd(e.pd);
        } catch (const std::exception& ex) {
            fail(ex.what());
            continue;
        }
        if (static_cast<long long>(d.crossings.size()) != e.crossings)
            fail("expected " + std::to_string(e.crossings) + " crossings, parsed " +
                 std::to_string(d.crossings.size()));
        if (component_count(d) != e.components)
            fail("expected " + std::to_string(e.components) + " components, got " +
                 std::to_string(component_count(d)));

        Int goeritz = determinant(d);
        Int alexander = alexander_minus_one_oracle(d);
        if (goeritz != alexander)
            fail("determinant routes disagree: Goeritz " + goeritz.str() +
                 ", Alexander " + alexander.str());
        if (goeritz != e.det)
            fail("determinant " + goeritz.str() + ", frozen value " +
                 std::to_string(e.det));

        std::size_t corner_total = 0;
        for (const Face& f : faces(d)) corner_total += f.corners.size();
        if (corner_total != 4 * d.crossings.size())
            fail("face sizes sum to " + std::to_string(corner_total) + ", expected " +
                 std::to_string(4 * d.crossings.size()));

        try {
            if (!same_diagram(d, parse_pd(serialize_pd(d))))
                fail("serialize/parse round trip changed the diagram");
        } catch (const std::exception& ex) {
            fail(std::string("serialize/parse round trip: ") + ex.what());
        }
    }
    return r;
}

} // namespace linkc
