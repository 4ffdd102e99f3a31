#ifndef LINKC_DIAGRAM_HPP
#define LINKC_DIAGRAM_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "linkc/errors.hpp"

namespace linkc {

// One crossing of a planar link diagram in PD form. The four edge identifiers
// are listed counterclockwise starting from the incoming under-strand:
//
//          slot 2                    slot 0/2 carry the under-strand,
//     slot 3 --+-- slot 1            slot 1/3 the over-strand. The strand
//          slot 0                    enters at slot 0 and leaves at slot 2.
//
// Worked example: the standard trefoil is
//     X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
// with edges numbered 1..6 along the knot; edge 1 dives under at the first
// crossing and the over-strand there runs 4 -> 5.
struct Crossing {
    std::array<int, 4> edge{};
};

// A planar diagram of a link: PD crossings plus a count of crossing-free
// unknot components (PD codes cannot express a circle that meets nothing).
// The cyclic slot order at each crossing is the planar rotation system, so a
// LinkDiagram pins an embedding in S^2; validation rejects edge assignments
// whose rotation system would only embed in genus > 0.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    int unknots = 0;

    bool empty() const { return crossings.empty() && unknots == 0; }
};

// (crossing, slot) address of one edge end.
struct Slot {
    int crossing = -1;
    int slot = -1;
    bool operator==(const Slot&) const = default;
};

// Corner k of a crossing lies counterclockwise between slots k and k+1 mod 4.
struct FaceCorner {
    int crossing = 0;
    int corner = 0;
    bool operator==(const FaceCorner&) const = default;
};

// One complementary region of the diagram as a cyclic corner sequence.
// A face of size 2 is a bigon; sizes over all faces sum to 4 * #crossings.
struct Face {
    std::vector<FaceCorner> corners;
    std::size_t size() const { return corners.size(); }
};

// Direction of one edge: it leaves its source crossing at `tail` and arrives
// at `head`. Orientations are chosen per component so that every under-pass
// arrives at slot 0, matching the PD convention above.
struct EdgeOrientation {
    int edge = 0;
    Slot tail;
    Slot head;
};

// --- text format -----------------------------------------------------------
//
// Whitespace-separated X[a,b,c,d] tokens with positive integer edge ids, with
// an optional leading header "unknots=k". parse_pd validates multiplicity
// (every id appears exactly twice), orientation consistency, and planarity.
LinkDiagram parse_pd(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);

// Runs the parse-time checks (multiplicity, orientation, planarity) against
// an already-built diagram. Throws parse_error on the first failure.
void validate(const LinkDiagram& d);

// Diagram equality up to the one representational ambiguity of a crossing
// record: rotating a tuple by two slots swaps the in/out labels of the under
// strand but describes the same embedded crossing.
bool same_diagram(const LinkDiagram& a, const LinkDiagram& b);

// --- basic operations -------------------------------------------------------

// Number of link components, crossing-free unknots included.
int component_count(const LinkDiagram& d);

// Faces of the diagram in S^2 via the rotation system. For a diagram whose
// underlying 4-valent graph has c connected components the counts satisfy
// V - E + F = 2c, which parse_pd has already enforced.
std::vector<Face> faces(const LinkDiagram& d);

// Lookup table face_index = t[crossing][corner], built from faces(d).
std::vector<std::array<int, 4>> corner_faces(const LinkDiagram& d,
                                             const std::vector<Face>& fs);

// Number of connected components of the underlying 4-valent graph
// (crossing-free unknots count as one component each).
int graph_component_count(const LinkDiagram& d);

// True when every strand alternates over/under passes along each component
// (cyclically). Crossing-free diagrams are alternating.
bool is_alternating(const LinkDiagram& d);

// True when no face touches the same crossing twice, i.e. no crossing is
// nugatory. Crossing-free diagrams are reduced.
bool is_reduced(const LinkDiagram& d);

// Number of twists: equivalence classes of crossings under the relation
// generated by "the two crossings share a bigon face". Isolated crossings are
// singleton twists. Rejects non-reduced diagrams, where a bigon may be an
// untwistable nugatory artifact.
int twist_number(const LinkDiagram& d);

// Per-edge orientations chosen per component (arbitrary for a component that
// never passes under; fixed by the slot-0 convention otherwise).
std::vector<EdgeOrientation> edge_orientations(const LinkDiagram& d);

// Sign of each crossing with respect to the traversal orientation: +1 when
// the over-strand enters at slot 3, -1 when it enters at slot 1. Signs of
// crossings between distinct components depend on the orientation choice;
// nothing downstream consumes more than their parity structure.
std::vector<int> crossing_signs(const LinkDiagram& d);

// Connected sum spliced at one edge of each diagram. Arc ids are edge ids;
// arc id 0 designates a crossing-free unknot component (requires unknots>=1)
// and makes that side the identity. Crossing counts add, and component
// counts satisfy #L = #L1 + #L2 - 1.
LinkDiagram connected_sum_diagram(const LinkDiagram& d1, int arc1,
                                  const LinkDiagram& d2, int arc2);

// Mirror image: every crossing switches which strand is on top. Involutive.
LinkDiagram mirror(const LinkDiagram& d);

} // namespace linkc

#endif
