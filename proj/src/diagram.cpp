#include "linkc/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace linkc {

namespace {

// Ends of every edge, keyed by edge id. Built after multiplicity validation,
// so each entry holds exactly two slots.
using EdgeMap = std::map<int, std::array<Slot, 2>>;

int slot_index(const LinkDiagram& d, Slot s) {
    (void)d;
    return s.crossing * 4 + s.slot;
}

EdgeMap build_edge_map(const LinkDiagram& d) {
    std::map<int, std::vector<Slot>> occ;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int p = 0; p < 4; ++p) {
            int e = d.crossings[c].edge[p];
            if (e <= 0)
                throw parse_error("edge identifiers must be positive, got " +
                                  std::to_string(e));
            occ[e].push_back({c, p});
        }
    EdgeMap em;
    for (auto& [e, slots] : occ) {
        if (slots.size() != 2)
            throw parse_error("edge " + std::to_string(e) + " appears " +
                              std::to_string(slots.size()) + " times (expected 2)");
        em[e] = {slots[0], slots[1]};
    }
    return em;
}

Slot other_end(const EdgeMap& em, const LinkDiagram& d, Slot s) {
    const auto& ends = em.at(d.crossings[s.crossing].edge[s.slot]);
    return ends[0] == s ? ends[1] : ends[0];
}

// The strand arriving at slot s continues straight across the crossing and
// arrives at the far end of the opposite edge.
Slot next_arrival(const EdgeMap& em, const LinkDiagram& d, Slot s) {
    Slot depart{s.crossing, (s.slot + 2) % 4};
    return other_end(em, d, depart);
}

// Directed strand walks: each orbit traverses one link component in one
// direction, so components come in orbit pairs (forward and backward).
std::vector<std::vector<Slot>> strand_orbits(const EdgeMap& em, const LinkDiagram& d) {
    std::vector<std::vector<Slot>> orbits;
    std::vector<bool> seen(d.crossings.size() * 4, false);
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int p = 0; p < 4; ++p) {
            Slot start{c, p};
            if (seen[slot_index(d, start)]) continue;
            std::vector<Slot> orbit;
            Slot s = start;
            do {
                seen[slot_index(d, s)] = true;
                orbit.push_back(s);
                s = next_arrival(em, d, s);
            } while (!(s == start));
            orbits.push_back(std::move(orbit));
        }
    return orbits;
}

// One orbit per component, directed so that every under-pass arrives at
// slot 0. Throws if the crossing records are not orientable that way.
std::vector<std::vector<Slot>> oriented_strands(const EdgeMap& em, const LinkDiagram& d) {
    auto orbits = strand_orbits(em, d);
    std::vector<std::vector<Slot>> chosen;
    std::vector<bool> used(orbits.size(), false);

    // Pair each orbit with its reversal: the backward walk arrives at slot
    // p+2 wherever the forward walk arrives at p.
    std::map<int, std::size_t> owner;
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (Slot s : orbits[i]) owner[slot_index(d, s)] = i;

    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (used[i]) continue;
        Slot rev{orbits[i][0].crossing, (orbits[i][0].slot + 2) % 4};
        std::size_t j = owner.at(slot_index(d, rev));
        used[i] = used[j] = true;

        auto under_arrivals = [](const std::vector<Slot>& orbit, int slot) {
            return std::count_if(orbit.begin(), orbit.end(),
                                 [slot](Slot s) { return s.slot == slot; });
        };
        long in0 = under_arrivals(orbits[i], 0);
        long in2 = under_arrivals(orbits[i], 2);
        if (in0 > 0 && in2 > 0) {
            auto bad = std::find_if(orbits[i].begin(), orbits[i].end(),
                                    [](Slot s) { return s.slot == 2; });
            int edge = d.crossings[bad->crossing].edge[bad->slot];
            throw parse_error(
                "inconsistent under-strand orientation: edge " + std::to_string(edge) +
                " enters crossing " + std::to_string(bad->crossing + 1) +
                " at the outgoing under slot");
        }
        chosen.push_back(in2 == 0 ? orbits[i] : orbits[j]);
    }
    return chosen;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

int graph_components(const EdgeMap& em, const LinkDiagram& d) {
    if (d.crossings.empty()) return 0;
    UnionFind uf(d.crossings.size());
    for (const auto& [e, ends] : em) {
        (void)e;
        uf.unite(ends[0].crossing, ends[1].crossing);
    }
    return uf.classes();
}

std::vector<Face> trace_faces(const EdgeMap& em, const LinkDiagram& d) {
    // Face orbits of s -> rotate(other_end(s)); the dart at slot p sweeps the
    // corner between slots p-1 and p of its crossing.
    std::vector<Face> fs;
    std::vector<bool> seen(d.crossings.size() * 4, false);
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int p = 0; p < 4; ++p) {
            Slot start{c, p};
            if (seen[slot_index(d, start)]) continue;
            Face f;
            Slot s = start;
            do {
                seen[slot_index(d, s)] = true;
                f.corners.push_back({s.crossing, (s.slot + 3) % 4});
                Slot o = other_end(em, d, s);
                s = Slot{o.crossing, (o.slot + 1) % 4};
            } while (!(s == start));
            fs.push_back(std::move(f));
        }
    return fs;
}

void validate_diagram(const LinkDiagram& d) {
    if (d.unknots < 0) throw parse_error("unknot count must be nonnegative");
    if (d.crossings.empty()) return;
    EdgeMap em = build_edge_map(d);
    oriented_strands(em, d); // throws on orientation inconsistency
    auto fs = trace_faces(em, d);
    long V = static_cast<long>(d.crossings.size());
    long E = 2 * V;
    long F = static_cast<long>(fs.size());
    long C = graph_components(em, d);
    if (V - E + F != 2 * C) {
        std::ostringstream os;
        os << "rotation system is not planar: V-E+F = " << (V - E + F)
           << " but " << 2 * C << " expected for " << C << " diagram component"
           << (C == 1 ? "" : "s");
        throw parse_error(os.str());
    }
}

// Slot at which the over-strand arrives, per crossing: 1 or 3.
std::vector<int> over_in_slots(const EdgeMap& em, const LinkDiagram& d) {
    std::vector<int> over_in(d.crossings.size(), 0);
    for (const auto& orbit : oriented_strands(em, d))
        for (Slot s : orbit)
            if (s.slot == 1 || s.slot == 3) over_in[s.crossing] = s.slot;
    return over_in;
}

} // namespace

LinkDiagram parse_pd(const std::string& text) {
    LinkDiagram d;
    std::istringstream in(text);
    std::string tok;
    bool first = true;
    while (in >> tok) {
        if (tok.rfind("unknots=", 0) == 0) {
            if (!first)
                throw parse_error("unknots= header must be the first token");
            std::size_t pos = 0;
            int k = 0;
            try {
                k = std::stoi(tok.substr(8), &pos);
            } catch (const std::exception&) {
                throw parse_error("malformed unknots header: " + tok);
            }
            if (pos != tok.size() - 8 || k < 0)
                throw parse_error("malformed unknots header: " + tok);
            d.unknots = k;
            first = false;
            continue;
        }
        first = false;
        if (tok.size() < 9 || tok.substr(0, 2) != "X[" || tok.back() != ']')
            throw parse_error("malformed crossing token: " + tok);
        std::istringstream body(tok.substr(2, tok.size() - 3));
        Crossing x;
        char sep = ',';
        for (int i = 0; i < 4; ++i) {
            if (i > 0 && (!(body >> sep) || sep != ','))
                throw parse_error("malformed crossing token: " + tok);
            if (!(body >> x.edge[i]))
                throw parse_error("malformed crossing token: " + tok);
        }
        if (body >> sep) throw parse_error("malformed crossing token: " + tok);
        d.crossings.push_back(x);
    }
    validate_diagram(d);
    return d;
}

std::string serialize_pd(const LinkDiagram& d) {
    std::ostringstream os;
    bool sep = false;
    if (d.unknots > 0) {
        os << "unknots=" << d.unknots;
        sep = true;
    }
    for (const Crossing& x : d.crossings) {
        if (sep) os << ' ';
        os << "X[" << x.edge[0] << ',' << x.edge[1] << ',' << x.edge[2] << ','
           << x.edge[3] << ']';
        sep = true;
    }
    return os.str();
}

namespace {
std::array<int, 4> canonical_record(const Crossing& x) {
    std::array<int, 4> a = x.edge;
    std::array<int, 4> b = {a[2], a[3], a[0], a[1]};
    return std::min(a, b);
}
} // namespace

bool same_diagram(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.unknots != b.unknots || a.crossings.size() != b.crossings.size())
        return false;
    for (std::size_t i = 0; i < a.crossings.size(); ++i)
        if (canonical_record(a.crossings[i]) != canonical_record(b.crossings[i]))
            return false;
    return true;
}

int component_count(const LinkDiagram& d) {
    if (d.crossings.empty()) return d.unknots;
    EdgeMap em = build_edge_map(d);
    return static_cast<int>(strand_orbits(em, d).size()) / 2 + d.unknots;
}

std::vector<Face> faces(const LinkDiagram& d) {
    if (d.crossings.empty()) return {};
    EdgeMap em = build_edge_map(d);
    return trace_faces(em, d);
}

std::vector<std::array<int, 4>> corner_faces(const LinkDiagram& d,
                                             const std::vector<Face>& fs) {
    std::vector<std::array<int, 4>> table(d.crossings.size(), {-1, -1, -1, -1});
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
        for (const FaceCorner& fc : fs[fi].corners)
            table[fc.crossing][fc.corner] = fi;
    for (const auto& row : table)
        for (int v : row)
            if (v < 0) throw internal_error("corner_faces: corner not covered");
    return table;
}

int graph_component_count(const LinkDiagram& d) {
    if (d.crossings.empty()) return d.unknots;
    EdgeMap em = build_edge_map(d);
    return graph_components(em, d) + d.unknots;
}

bool is_alternating(const LinkDiagram& d) {
    if (d.crossings.empty()) return true;
    EdgeMap em = build_edge_map(d);
    for (const auto& orbit : strand_orbits(em, d)) {
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            bool under_here = orbit[i].slot % 2 == 0;
            bool under_next = orbit[(i + 1) % orbit.size()].slot % 2 == 0;
            if (under_here == under_next) return false;
        }
    }
    return true;
}

bool is_reduced(const LinkDiagram& d) {
    if (d.crossings.empty()) return true;
    for (const Face& f : faces(d)) {
        std::vector<int> seen;
        for (const FaceCorner& fc : f.corners) {
            if (std::find(seen.begin(), seen.end(), fc.crossing) != seen.end())
                return false;
            seen.push_back(fc.crossing);
        }
    }
    return true;
}

int twist_number(const LinkDiagram& d) {
    if (!is_reduced(d))
        throw parse_error("twist_number requires a reduced diagram");
    if (d.crossings.empty()) return 0;
    UnionFind uf(d.crossings.size());
    for (const Face& f : faces(d))
        if (f.size() == 2)
            uf.unite(f.corners[0].crossing, f.corners[1].crossing);
    return uf.classes();
}

std::vector<EdgeOrientation> edge_orientations(const LinkDiagram& d) {
    std::vector<EdgeOrientation> out;
    if (d.crossings.empty()) return out;
    EdgeMap em = build_edge_map(d);
    for (const auto& orbit : oriented_strands(em, d)) {
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            Slot head = orbit[(i + 1) % orbit.size()];
            Slot tail{orbit[i].crossing, (orbit[i].slot + 2) % 4};
            out.push_back({d.crossings[tail.crossing].edge[tail.slot], tail, head});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const EdgeOrientation& a, const EdgeOrientation& b) {
                  return a.edge < b.edge;
              });
    return out;
}

std::vector<int> crossing_signs(const LinkDiagram& d) {
    if (d.crossings.empty()) return {};
    EdgeMap em = build_edge_map(d);
    std::vector<int> signs;
    for (int slot : over_in_slots(em, d)) signs.push_back(slot == 3 ? 1 : -1);
    return signs;
}

LinkDiagram connected_sum_diagram(const LinkDiagram& d1, int arc1,
                                  const LinkDiagram& d2, int arc2) {
    auto check_arc = [](const LinkDiagram& d, int arc, const char* which) {
        if (arc == 0) {
            if (d.unknots < 1)
                throw parse_error(std::string("arc 0 of ") + which +
                                  " requires a crossing-free unknot component");
            return;
        }
        for (const Crossing& x : d.crossings)
            for (int e : x.edge)
                if (e == arc) return;
        throw parse_error(std::string("arc ") + std::to_string(arc) +
                          " is not an edge of " + which);
    };
    check_arc(d1, arc1, "the first diagram");
    check_arc(d2, arc2, "the second diagram");

    // A crossing-free unknot absorbs into the other diagram's component.
    if (arc1 == 0) {
        LinkDiagram out = d2;
        out.unknots += d1.unknots - 1;
        LinkDiagram rest = d1;
        rest.unknots = 0;
        for (const Crossing& x : rest.crossings) out.crossings.push_back(x);
        if (!rest.crossings.empty()) {
            // Re-offset d1's edges above d2's to keep ids disjoint.
            int offset = 0;
            for (const Crossing& x : d2.crossings)
                offset = std::max({offset, x.edge[0], x.edge[1], x.edge[2], x.edge[3]});
            for (std::size_t i = d2.crossings.size(); i < out.crossings.size(); ++i)
                for (int p = 0; p < 4; ++p) out.crossings[i].edge[p] += offset;
        }
        validate_diagram(out);
        return out;
    }
    if (arc2 == 0) return connected_sum_diagram(d2, 0, d1, arc1);

    int offset = 0;
    for (const Crossing& x : d1.crossings)
        offset = std::max({offset, x.edge[0], x.edge[1], x.edge[2], x.edge[3]});

    LinkDiagram out = d1;
    out.unknots += d2.unknots;
    for (const Crossing& x : d2.crossings) {
        Crossing y = x;
        for (int p = 0; p < 4; ++p) y.edge[p] += offset;
        out.crossings.push_back(y);
    }
    int arc2r = arc2 + offset;

    // Locate the directed ends of both arcs, then reconnect tails to the
    // opposite heads. Orientations stay coherent, so validation must pass.
    auto find_orientation = [](const LinkDiagram& d, int edge) {
        for (const EdgeOrientation& eo : edge_orientations(d))
            if (eo.edge == edge) return eo;
        throw internal_error("connected_sum_diagram: arc orientation not found");
    };
    EdgeOrientation o1 = find_orientation(d1, arc1);
    EdgeOrientation o2 = find_orientation(d2, arc2);
    Slot h1 = o1.head;
    Slot h2{o2.head.crossing + static_cast<int>(d1.crossings.size()), o2.head.slot};

    out.crossings[h2.crossing].edge[h2.slot] = arc1;  // tail of arc1 -> head of arc2
    out.crossings[h1.crossing].edge[h1.slot] = arc2r; // tail of arc2 -> head of arc1
    validate_diagram(out);
    return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
    if (d.crossings.empty()) return d;
    EdgeMap em = build_edge_map(d);
    std::vector<int> over_in = over_in_slots(em, d);
    LinkDiagram out;
    out.unknots = d.unknots;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const auto& e = d.crossings[c].edge;
        // The old over-strand becomes the under-strand; start the record at
        // its incoming end to keep the slot-0 convention.
        if (over_in[c] == 1)
            out.crossings.push_back({{e[1], e[2], e[3], e[0]}});
        else
            out.crossings.push_back({{e[3], e[0], e[1], e[2]}});
    }
    validate_diagram(out);
    return out;
}

void validate(const LinkDiagram& d) { validate_diagram(d); }

} // namespace linkc
