#include "linkc/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace linkc {

namespace {

// Faces on the two sides of each edge, via the dart-to-corner relation:
// the dart at slot p sweeps corner (p+3) mod 4 of its crossing.
std::vector<std::pair<int, int>> edge_side_faces(const LinkDiagram& d,
                                                 const std::vector<Face>& fs) {
    auto table = corner_faces(d, fs);
    std::map<int, std::vector<Slot>> occ;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int p = 0; p < 4; ++p)
            occ[d.crossings[c].edge[p]].push_back({c, p});
    std::vector<std::pair<int, int>> sides;
    for (const auto& [e, slots] : occ) {
        (void)e;
        if (slots.size() != 2) throw internal_error("edge map corrupted");
        int fa = table[slots[0].crossing][(slots[0].slot + 3) % 4];
        int fb = table[slots[1].crossing][(slots[1].slot + 3) % 4];
        sides.emplace_back(fa, fb);
    }
    return sides;
}

} // namespace

std::vector<Color> checkerboard_coloring(const LinkDiagram& d,
                                         const std::vector<Face>& fs) {
    if (fs.empty()) return {};
    std::vector<int> label(fs.size(), -1);
    std::vector<std::vector<int>> adj(fs.size());
    for (auto [a, b] : edge_side_faces(d, fs)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t start = 0; start < fs.size(); ++start) {
        if (label[start] != -1) continue;
        label[start] = 0;
        std::deque<int> queue{static_cast<int>(start)};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (int g : adj[f]) {
                if (label[g] == -1) {
                    label[g] = 1 - label[f];
                    queue.push_back(g);
                } else if (label[g] == label[f]) {
                    throw internal_error("checkerboard coloring failed: "
                                         "face adjacency has an odd cycle");
                }
            }
        }
    }
    long n0 = std::count(label.begin(), label.end(), 0);
    long n1 = static_cast<long>(label.size()) - n0;
    int white_label = n1 > n0 ? 1 : 0; // ties go to face 0's class, label 0
    std::vector<Color> colors(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        colors[i] = (label[i] == white_label) ? Color::white : Color::black;
    return colors;
}

IntegerMatrix goeritz_matrix_full(const LinkDiagram& d, Color color) {
    auto fs = faces(d);
    auto colors = checkerboard_coloring(d, fs);
    auto table = corner_faces(d, fs);

    std::vector<int> region_of(fs.size(), -1);
    int regions = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (colors[i] == color) region_of[i] = regions++;
    if (!d.crossings.empty() && regions == 0)
        throw internal_error("goeritz_matrix: chosen color class is empty");

    IntegerMatrix g(regions, regions);
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        std::array<int, 4> corner_face = table[c];
        bool even_diagonal = colors[corner_face[0]] == color;
        if (colors[corner_face[2]] != colors[corner_face[0]] ||
            colors[corner_face[3]] != colors[corner_face[1]])
            throw internal_error("goeritz_matrix: corner colors do not alternate");
        int eta = even_diagonal ? -1 : +1;
        int ra = region_of[corner_face[even_diagonal ? 0 : 1]];
        int rb = region_of[corner_face[even_diagonal ? 2 : 3]];
        if (ra != rb) {
            g.at(ra, rb) -= eta;
            g.at(rb, ra) -= eta;
        }
    }
    for (int i = 0; i < regions; ++i) {
        Int sum = 0;
        for (int j = 0; j < regions; ++j)
            if (j != i) sum += g.at(i, j);
        g.at(i, i) = -sum;
    }
    return g;
}

IntegerMatrix goeritz_matrix(const LinkDiagram& d, Color color) {
    IntegerMatrix g = goeritz_matrix_full(d, color);
    if (g.rows() == 0) return g;
    return g.minor_matrix(g.rows() - 1, g.cols() - 1);
}

Int determinant(const LinkDiagram& d) {
    if (d.crossings.empty()) return d.unknots >= 2 ? Int(0) : Int(1);
    if (d.unknots > 0) return 0;                  // split presentation
    if (graph_component_count(d) > 1) return 0;   // split presentation
    Int det = determinant_exact(goeritz_matrix(d, Color::white));
    return abs(det);
}

Int alexander_minus_one_oracle(const LinkDiagram& d) {
    if (d.crossings.empty()) {
        if (d.unknots <= 1) return 1;
        throw parse_error("alexander_minus_one_oracle requires a connected diagram");
    }
    if (d.unknots > 0 || graph_component_count(d) > 1)
        throw parse_error("alexander_minus_one_oracle requires a connected diagram");

    // Strand walks, cut at under-passes, give the Wirtinger arcs. Orientation
    // of each component is the canonical one (under-passes arrive at slot 0).
    auto orients = edge_orientations(d);
    // Rebuild the oriented pass sequences from the edge orientations: follow
    // heads. head slot 0 or 2 = under-pass, 1 or 3 = over-pass.
    std::map<int, EdgeOrientation> by_tail_slot;
    for (const auto& eo : orients)
        by_tail_slot[eo.tail.crossing * 4 + eo.tail.slot] = eo;

    int n = static_cast<int>(d.crossings.size());
    std::vector<int> over_arc(n, -1), under_in_arc(n, -1), under_out_arc(n, -1);
    int arcs = 0;
    std::vector<bool> visited(n * 4, false);
    bool has_over_only_component = false;

    for (const auto& start : orients) {
        if (visited[start.head.crossing * 4 + start.head.slot]) continue;
        // Collect the full cyclic pass sequence of this component.
        std::vector<Slot> passes;
        Slot cur = start.head;
        while (!visited[cur.crossing * 4 + cur.slot]) {
            visited[cur.crossing * 4 + cur.slot] = true;
            passes.push_back(cur);
            Slot depart{cur.crossing, (cur.slot + 2) % 4};
            cur = by_tail_slot.at(depart.crossing * 4 + depart.slot).head;
        }
        std::vector<int> under_idx;
        for (int i = 0; i < static_cast<int>(passes.size()); ++i)
            if (passes[i].slot % 2 == 0) under_idx.push_back(i);

        if (under_idx.empty()) {
            // The component never dives under: it floats above the rest and
            // the link splits, so the determinant is 0.
            has_over_only_component = true;
            continue;
        }
        // One arc begins at the exit of each under-pass.
        std::map<int, int> arc_from_under;
        for (int u : under_idx) arc_from_under[u] = arcs++;
        auto active_arc = [&](int idx) {
            // Arc live at pass idx: created at the last under-pass <= idx.
            auto it = std::upper_bound(under_idx.begin(), under_idx.end(), idx);
            int u = (it == under_idx.begin()) ? under_idx.back() : *std::prev(it);
            return arc_from_under[u];
        };
        for (int i = 0; i < static_cast<int>(passes.size()); ++i) {
            int c = passes[i].crossing;
            if (passes[i].slot % 2 == 0) {
                under_out_arc[c] = arc_from_under[i];
                auto it = std::lower_bound(under_idx.begin(), under_idx.end(), i);
                int prev = (it == under_idx.begin()) ? under_idx.back() : *std::prev(it);
                under_in_arc[c] = arc_from_under[prev];
            } else {
                over_arc[c] = active_arc(i);
            }
        }
    }
    if (has_over_only_component) return 0;
    if (arcs != n)
        throw internal_error("alexander_minus_one_oracle: arc count mismatch");

    IntegerMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
        m.at(c, over_arc[c]) += 2;
        m.at(c, under_in_arc[c]) -= 1;
        m.at(c, under_out_arc[c]) -= 1;
    }
    IntegerMatrix reduced = m.minor_matrix(n - 1, n - 1);
    Int det = determinant_exact(reduced);
    return abs(det);
}

long long torus_crossing_number(long long m, long long q) {
    if (m < 2 || q < 1)
        throw parse_error("torus_crossing_number requires m >= 2, q >= 1");
    return std::min(m * (q - 1), q * (m - 1));
}

Int torus_det_minus_one(long long m, long long q) {
    if (m < 2 || q < 2)
        throw parse_error("torus_det_minus_one requires m, q >= 2");
    if (std::gcd(m, q) != 1)
        throw parse_error("torus_det_minus_one requires coprime parameters");
    if (m % 2 == 1 && q % 2 == 1)
        throw parse_error("torus_det_minus_one: no closed form when both "
                          "parameters are odd");
    return Int(m % 2 == 0 ? q : m);
}

std::vector<long long> continued_fraction(long long num, long long den) {
    if (den < 1 || num <= den)
        throw parse_error("continued_fraction requires num > den >= 1");
    if (std::gcd(num, den) != 1)
        throw parse_error("continued_fraction requires coprime arguments");
    std::vector<long long> quotients;
    while (den != 0) {
        quotients.push_back(num / den);
        long long r = num % den;
        num = den;
        den = r;
    }
    return quotients;
}

Int fibonacci(int n) {
    if (n < 0) throw parse_error("fibonacci index must be nonnegative");
    Int a = 1, b = 1; // f_0 = f_1 = 1
    for (int i = 0; i < n; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

} // namespace linkc
