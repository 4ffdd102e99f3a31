#include "linkc/families.hpp"

#include <cctype>
#include <map>

#include "linkc/errors.hpp"
#include "linkc/invariants.hpp"

namespace linkc {

namespace {

// ---------------------------------------------------------------------------
// Rational-tangle builder for the twist-knot diagrams.
//
// A tangle in progress is a list of PD records plus the four boundary edge
// ids at its corners. Records are written with the under-strand on slots
// {0, 2} but in arbitrary rotation; finish() walks the closed strands and
// rotates each record so the under-strand enters at slot 0, which is the
// orientation the diagram validator demands.

struct Tangle {
    std::vector<std::array<int, 4>> rec;
    int nw = 0, ne = 0, sw = 0, se = 0;
    int next = 1;

    int fresh() { return next++; }
};

// Append one crossing to the right of the tangle, twisting the NE and SE
// strands. Corner names follow the crossing's own compass: W ends attach to
// the tangle, E ends become the new boundary. Records run CCW from an under
// end; `hand` picks which diagonal dives under (0: NW->SE, 1: SW->NE).
void twist_right(Tangle& t, int count, int hand) {
    for (int i = 0; i < count; ++i) {
        int wt = t.ne, wb = t.se, et = t.fresh(), eb = t.fresh();
        if (hand == 0)
            t.rec.push_back({wt, wb, eb, et});
        else
            t.rec.push_back({wb, eb, et, wt});
        t.ne = et;
        t.se = eb;
    }
}

// Append one crossing below the tangle, twisting the SW and SE strands.
// N ends attach to the tangle, S ends become the new boundary; `hand` 0 puts
// the NW->SE diagonal under, 1 the NE->SW diagonal.
void twist_bottom(Tangle& t, int count, int hand) {
    for (int i = 0; i < count; ++i) {
        int nl = t.sw, nr = t.se, sl = t.fresh(), sr = t.fresh();
        if (hand == 0)
            t.rec.push_back({nl, sl, sr, nr});
        else
            t.rec.push_back({nr, nl, sl, sr});
        t.sw = sl;
        t.se = sr;
    }
}

// Start from two horizontal strands and twist them `count` times.
Tangle seed_horizontal(int count, int hand) {
    Tangle t;
    t.nw = t.fresh();
    t.sw = t.fresh();
    t.ne = t.nw;
    t.se = t.sw;
    twist_right(t, count, hand);
    return t;
}

void substitute(Tangle& t, int from, int to) {
    for (auto& r : t.rec)
        for (auto& e : r)
            if (e == from) e = to;
}

// Close the tangle (numerator joins top pair and bottom pair, denominator
// joins the left pair and the right pair), fix record rotations, renumber
// edges 1..2n, and validate.
LinkDiagram finish(Tangle& t, bool numerator) {
    if (numerator) {
        substitute(t, t.ne, t.nw);
        substitute(t, t.se, t.sw);
    } else {
        substitute(t, t.sw, t.nw);
        substitute(t, t.se, t.ne);
    }

    int n = static_cast<int>(t.rec.size());
    std::map<int, std::vector<std::pair<int, int>>> occ; // edge -> darts
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) occ[t.rec[c][p]].push_back({c, p});
    for (auto& [e, darts] : occ)
        if (darts.size() != 2)
            throw internal_error("tangle closure left edge " + std::to_string(e) +
                                 " with " + std::to_string(darts.size()) + " ends");

    // Walk each strand once in a fixed direction, consuming both the entry
    // and the exit dart of every passage so the reverse direction is never
    // walked. An under-entry at slot 2 marks the record for rotation by two,
    // which swaps the under ends and keeps the CCW order.
    std::vector<bool> rotate(n, false), used(n * 4, false);
    for (int c0 = 0; c0 < n; ++c0)
        for (int p0 = 0; p0 < 4; ++p0) {
            if (used[c0 * 4 + p0]) continue;
            int c = c0, p = p0;
            do {
                used[c * 4 + p] = true;
                if (p == 2) rotate[c] = true;
                int exit_p = (p + 2) % 4;
                used[c * 4 + exit_p] = true;
                auto& darts = occ[t.rec[c][exit_p]];
                auto [oc, op] = darts[0] == std::pair<int, int>{c, exit_p}
                                    ? darts[1]
                                    : darts[0];
                c = oc;
                p = op;
            } while (!(c == c0 && p == p0));
        }

    LinkDiagram d;
    for (int c = 0; c < n; ++c) {
        Crossing x;
        for (int p = 0; p < 4; ++p)
            x.edge[p] = t.rec[c][(p + (rotate[c] ? 2 : 0)) % 4];
        d.crossings.push_back(x);
    }
    std::map<int, int> compact;
    for (auto& c : d.crossings)
        for (auto& e : c.edge) {
            if (!compact.count(e))
                compact[e] = static_cast<int>(compact.size()) + 1;
            e = compact[e];
        }
    validate(d);
    return d;
}

} // namespace

BraidWord torus_braid(long long m, long long q) {
    if (m < 2 || q < 1)
        throw parse_error("torus braid needs m >= 2 and q >= 1, got (" +
                          std::to_string(m) + ", " + std::to_string(q) + ")");
    if (m > 2000 || q > 2000)
        throw parse_error("torus braid parameters above 2000 are not supported");
    BraidWord b;
    b.strands = static_cast<int>(m);
    for (long long rep = 0; rep < q; ++rep)
        for (int i = 1; i < m; ++i) b.letters.push_back(i);
    return b;
}

FibTorus fib_torus(long long n) {
    if (n < 2)
        throw parse_error("fib torus needs n >= 2, got " + std::to_string(n));
    if (n > 45)
        throw parse_error("fib torus supports n <= 45; beyond that the "
                          "crossing formula leaves the 64-bit range");
    FibTorus f;
    f.n = n;
    f.m = fibonacci(n).convert_to<long long>();
    f.q = fibonacci(n - 1).convert_to<long long>();
    if (n < 4)
        f.skip_reason = "fib(" + std::to_string(n) + "): below the family threshold n >= 4";
    else if (n % 3 == 1)
        f.skip_reason = "fib(" + std::to_string(n) + "): n = 1 (mod 3), f_n and f_{n-1} "
                        "are both odd and the determinant route does not apply";
    f.valid = f.skip_reason.empty();
    return f;
}

BraidWord turks_head(long long n) {
    if (n < 2)
        throw parse_error("Turk's head needs n >= 2, got " + std::to_string(n));
    if (n > 2000)
        throw parse_error("Turk's head parameters above 2000 are not supported");
    BraidWord b;
    b.strands = 3;
    for (long long rep = 0; rep < n; ++rep) {
        b.letters.push_back(1);
        b.letters.push_back(-2);
    }
    return b;
}

LinkDiagram twist_knot(long long n) {
    if (n < 1)
        throw parse_error("twist knot needs n >= 1, got " + std::to_string(n));
    if (n > 2000)
        throw parse_error("twist knot parameters above 2000 are not supported");
    Tangle t = seed_horizontal(static_cast<int>(n) + 1, 0);
    twist_bottom(t, 2, 0);
    return finish(t, false);
}

LinkDiagram twist_knot_usual(long long n) {
    if (n < 1)
        throw parse_error("twist knot needs n >= 1, got " + std::to_string(n));
    if (n > 2000)
        throw parse_error("twist knot parameters above 2000 are not supported");
    Tangle t = seed_horizontal(static_cast<int>(n) + 2, 0);
    twist_bottom(t, 2, 1);
    return finish(t, false);
}

PairExpression xn_pair(long long n) {
    if (n < 1)
        throw parse_error("Xn needs n >= 1, got " + std::to_string(n));
    PairExpression e;
    e.atoms.push_back(Atom::xn_pair_atom(n));
    return e;
}

std::optional<FamilySpec> parse_family_spec(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    std::string name = text.substr(start, i - start);
    skip_ws();
    if (name.empty() || i >= text.size() || text[i] != '(') return std::nullopt;
    ++i;

    std::vector<long long> args;
    while (true) {
        skip_ws();
        std::size_t num_start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == num_start)
            throw parse_error("family spec '" + text + "': expected an integer argument");
        try {
            args.push_back(std::stoll(text.substr(num_start, i - num_start)));
        } catch (const std::out_of_range&) {
            throw parse_error("family spec '" + text + "': argument out of range");
        }
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ')')
        throw parse_error("family spec '" + text + "': expected ')'");
    ++i;
    skip_ws();
    if (i != text.size())
        throw parse_error("family spec '" + text + "': trailing characters");

    FamilySpec spec;
    std::size_t arity = 1;
    if (name == "torus") {
        spec.kind = FamilySpec::Kind::torus;
        arity = 2;
    } else if (name == "fib") {
        spec.kind = FamilySpec::Kind::fib;
    } else if (name == "th") {
        spec.kind = FamilySpec::Kind::th;
    } else if (name == "twist") {
        spec.kind = FamilySpec::Kind::twist;
    } else if (name == "xn") {
        spec.kind = FamilySpec::Kind::xn;
    } else {
        throw parse_error("unknown family '" + name +
                          "'; expected torus, fib, th, twist or xn");
    }
    if (args.size() != arity)
        throw parse_error("family '" + name + "' takes " + std::to_string(arity) +
                          (arity == 1 ? " argument" : " arguments") + ", got " +
                          std::to_string(args.size()));
    spec.args = args;
    spec.text = name + "(";
    for (std::size_t k = 0; k < args.size(); ++k)
        spec.text += (k ? "," : "") + std::to_string(args[k]);
    spec.text += ")";
    return spec;
}

FamilyFacts family_facts(const FamilySpec& spec) {
    FamilyFacts f;
    f.spec = spec;
    switch (spec.kind) {
    case FamilySpec::Kind::torus:
        torus_braid(spec.args[0], spec.args[1]); // range check only
        f.torus = torus_pair_facts(spec.args[0], spec.args[1]);
        f.asserted_prime_nonsplit = true;
        break;
    case FamilySpec::Kind::fib: {
        FibTorus fib = fib_torus(spec.args[0]);
        f.fib = fib;
        f.valid = fib.valid;
        f.skip_reason = fib.skip_reason;
        f.torus = torus_pair_facts(fib.m, fib.q);
        f.asserted_prime_nonsplit = true;
        break;
    }
    case FamilySpec::Kind::th:
        f.diagram = braid_closure(turks_head(spec.args[0]));
        f.asserted_prime_nonsplit = true;
        f.turks_head_param = spec.args[0];
        break;
    case FamilySpec::Kind::twist:
        f.diagram = twist_knot(spec.args[0]);
        f.asserted_prime_nonsplit = true;
        break;
    case FamilySpec::Kind::xn:
        f.pair = xn_pair(spec.args[0]);
        break;
    }
    return f;
}

} // namespace linkc
