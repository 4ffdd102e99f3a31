#include "doctest.h"

#include <random>
#include <set>

#include "linkc/errors.hpp"
#include "linkc/roots.hpp"

#include "helpers.hpp"

using namespace linkc;

namespace {

PairExpression single(Atom a) {
    PairExpression e;
    e.atoms.push_back(std::move(a));
    return e;
}

} // namespace

TEST_CASE("atom keys separate atoms that differ in any field") {
    std::set<std::string> keys;
    CHECK(keys.insert(atom_key(Atom::trivial_0())).second);
    CHECK(keys.insert(atom_key(Atom::trivial_2())).second);
    CHECK(keys.insert(atom_key(Atom::d())).second);
    CHECK(keys.insert(atom_key(Atom::handle_pair())).second);
    CHECK(keys.insert(atom_key(Atom::xn_pair_atom(3))).second);
    CHECK(keys.insert(atom_key(Atom::xn_pair_atom(4))).second);
    CHECK(keys.insert(atom_key(Atom::torus(2, 5))).second);
    CHECK(keys.insert(atom_key(Atom::torus(2, 7))).second);
    CHECK(keys.insert(atom_key(Atom::prime_exact("k", 2))).second);
    CHECK(keys.insert(atom_key(Atom::prime_exact("k", 3))).second);
    for (ExceptionalPair e :
         {ExceptionalPair::s3_empty, ExceptionalPair::s3_core,
          ExceptionalPair::p3_empty, ExceptionalPair::p3_core,
          ExceptionalPair::l31_empty, ExceptionalPair::l31_core})
        CHECK(keys.insert(atom_key(Atom::exceptional_pair(e))).second);

    CHECK(atom_key(Atom::d()) == atom_key(Atom::d()));
    CHECK(atom_key(Atom::torus(5, 2)) == atom_key(Atom::torus(2, 5)));
}

TEST_CASE("complexity of an expression sums the atom windows") {
    PairExpression empty;
    BoundInterval c = complexity(empty);
    CHECK(c.lower == 0);
    REQUIRE(c.upper);
    CHECK(*c.upper == 0);

    PairExpression e;
    e.atoms.push_back(Atom::prime_exact("a", 4));
    e.atoms.push_back(Atom::d());
    BoundInterval w = complexity(e);
    CHECK(w.lower == 4);
    REQUIRE(w.upper);
    CHECK(*w.upper == 4);

    e.atoms.push_back(Atom::prime_unknown("b"));
    BoundInterval open = complexity(e);
    CHECK(open.lower == 4);
    CHECK_FALSE(open.upper);
}

TEST_CASE("0-sums take multiset unions and add complexity exactly") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 400; ++trial) {
        PairExpression a = testers::random_expression(rng);
        PairExpression b = testers::random_expression(rng);
        PairExpression s = sum0(a, b);
        CHECK(s.atoms.size() == a.atoms.size() + b.atoms.size());
        CHECK(same_expression(s, sum0(b, a)));

        BoundInterval ca = complexity(a), cb = complexity(b), cs = complexity(s);
        CHECK(cs.lower == ca.lower + cb.lower);
        if (ca.upper && cb.upper) {
            REQUIRE(cs.upper);
            CHECK(*cs.upper == *ca.upper + *cb.upper);
        } else {
            CHECK_FALSE(cs.upper);
        }
    }
}

TEST_CASE("2-sum of two D pairs is exactly zero but structurally opaque") {
    PairExpression s = sum2(single(Atom::d()), 0, single(Atom::d()), 0);
    REQUIRE(s.atoms.size() == 1);
    CHECK(s.atoms[0].kind == AtomKind::opaque);
    BoundInterval c = complexity(s);
    CHECK(c.lower == 0);
    REQUIRE(c.upper);
    CHECK(*c.upper == 0);
}

TEST_CASE("a knot in the 3-sphere is absorbed by D under 2-sum") {
    std::vector<Atom> knots = {
        Atom::prime_exact("trefoil", 3),
        Atom::prime_unknown("some knot"),
        Atom::trivial_2(),
        Atom::exceptional_pair(ExceptionalPair::s3_core),
        Atom::torus(2, 5),
        Atom::torus(3, 4),
    };
    PairExpression d_only = single(Atom::d());
    for (const Atom& k : knots) {
        CAPTURE(atom_key(k));
        // from either side
        PairExpression left = sum2(single(k), 0, d_only, 0);
        PairExpression right = sum2(d_only, 0, single(k), 0);
        for (const PairExpression* s : {&left, &right}) {
            REQUIRE(s->atoms.size() == 1);
            CHECK(s->atoms[0].kind == AtomKind::d_pair);
            CHECK(same_expression(*s, d_only));
        }
    }
    // a knot in some other manifold is not absorbed
    PairExpression other =
        sum2(single(Atom::prime_exact("elsewhere", 2, 1, false)), 0, d_only, 0);
    REQUIRE(other.atoms.size() == 1);
    CHECK(other.atoms[0].kind == AtomKind::opaque);
}

TEST_CASE("2-sum of primes is additive exactly when no 1-spheres can occur") {
    PairExpression a = single(Atom::prime_exact("a", 2));
    PairExpression b = single(Atom::prime_exact("b", 3));
    PairExpression fused = sum2(a, 0, b, 0);
    REQUIRE(fused.atoms.size() == 1);
    CHECK(fused.atoms[0].kind == AtomKind::prime);
    CHECK(fused.atoms[0].label == "a#b");
    BoundInterval c = complexity(fused);
    CHECK(c.lower == 5);
    REQUIRE(c.upper);
    CHECK(*c.upper == 5);

    // an unrelated D riding along in one expression forfeits the lower bound
    PairExpression with_d = single(Atom::prime_exact("a", 2));
    with_d.atoms.push_back(Atom::d());
    PairExpression hedged = sum2(with_d, 0, b, 0);
    REQUIRE(hedged.atoms.size() == 2); // the ride-along D plus the opaque fuse
    BoundInterval w = complexity(hedged);
    CHECK(w.lower == 0);
    REQUIRE(w.upper);
    CHECK(*w.upper == 5);

    // opaque targets likewise only keep the superadditive upper
    PairExpression oq = single(Atom::opaque_pair("x", c, 1));
    PairExpression mixed = sum2(oq, 0, b, 0);
    REQUIRE(mixed.atoms.size() == 1);
    CHECK(mixed.atoms[0].kind == AtomKind::opaque);
    CHECK(complexity(mixed).lower == 0);
}

TEST_CASE("2-sum rejects bad targets") {
    PairExpression d_only = single(Atom::d());
    CHECK_THROWS_AS(sum2(d_only, 1, d_only, 0), parse_error);
    CHECK_THROWS_AS(sum2(single(Atom::trivial_0()), 0, d_only, 0), parse_error);
    CHECK_THROWS_AS(sum2(single(Atom::handle_pair()), 0, d_only, 0),
                    parse_error);
    PairExpression empty;
    CHECK_THROWS_AS(sum2(empty, 0, d_only, 0), parse_error);
}

TEST_CASE("normalize drops trivial pairs and rewrites roots") {
    PairExpression e;
    e.atoms.push_back(Atom::trivial_0());
    e.atoms.push_back(Atom::trivial_2());
    e.atoms.push_back(Atom::handle_pair());
    e.atoms.push_back(Atom::xn_pair_atom(5));
    e.atoms.push_back(Atom::torus(3, 2));
    PairExpression n = normalize(e);
    REQUIRE(n.atoms.size() == 2);
    for (const Atom& a : n.atoms) CHECK(a.kind == AtomKind::prime);

    std::set<std::string> labels;
    for (const Atom& a : n.atoms) labels.insert(a.label);
    CHECK(labels.count("T(2,5)"));
    CHECK(labels.count("T(3,2)"));

    // the rewrite narrative survives in the log
    bool mentions_xn = false;
    for (const std::string& line : n.log)
        if (line.find("Xn(5)") != std::string::npos) mentions_xn = true;
    CHECK(mentions_xn);
}

TEST_CASE("normalize is idempotent and preserves the complexity window") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 400; ++trial) {
        PairExpression e = testers::random_expression(rng);
        PairExpression n = normalize(e);
        CHECK(same_expression(normalize(n), n));
        CHECK(testers::same_window(complexity(e), complexity(n)));
        // atom order does not matter
        PairExpression f = testers::random_expression(rng);
        CHECK(same_expression(normalize(sum0(e, f)), normalize(sum0(f, e))));
    }
}

TEST_CASE("extract_d_factors splits off exactly the D atoms") {
    PairExpression e;
    e.atoms.push_back(Atom::d());
    e.atoms.push_back(Atom::prime_exact("k", 1));
    e.atoms.push_back(Atom::d());
    auto [rest, count] = extract_d_factors(e);
    CHECK(count == 2);
    REQUIRE(rest.atoms.size() == 1);
    CHECK(rest.atoms[0].label == "k");

    auto [none, zero] = extract_d_factors(single(Atom::trivial_0()));
    CHECK(zero == 0);
    CHECK(none.atoms.size() == 1);
}

TEST_CASE("1-sphere tracking: only D and opaque atoms can hide one") {
    CHECK(may_contain_1_spheres(single(Atom::d())));
    BoundInterval any;
    CHECK(may_contain_1_spheres(single(Atom::opaque_pair("x", any, 1))));
    CHECK_FALSE(may_contain_1_spheres(single(Atom::trivial_2())));
    CHECK_FALSE(may_contain_1_spheres(single(Atom::handle_pair())));
    CHECK_FALSE(may_contain_1_spheres(single(Atom::xn_pair_atom(6))));
    CHECK_FALSE(may_contain_1_spheres(single(Atom::torus(2, 3))));
    CHECK_FALSE(
        may_contain_1_spheres(single(Atom::prime_exact("k", 2))));
    PairExpression empty;
    CHECK_FALSE(may_contain_1_spheres(empty));
}

TEST_CASE("the Xn family facts") {
    XnFacts one = xn_facts(1);
    CHECK(one.degenerate);
    CHECK(one.root_components == 1);

    for (long long n = 2; n <= 12; ++n) {
        XnFacts f = xn_facts(n);
        CAPTURE(n);
        CHECK(f.n == n);
        CHECK(f.link_is_knot);
        CHECK(f.distinct_from_all_other_xm);
        CHECK(f.root.label ==
              "T(2," + std::to_string(n) + ")");
        if (n % 2 == 0) {
            CHECK(f.root_components == 2);
            CHECK(f.zero_one_irreducible);
            CHECK_FALSE(f.has_essential_separating_2sphere);
        } else {
            CHECK(f.root_components == 1);
            CHECK(f.has_essential_separating_2sphere);
        }
    }
    CHECK_THROWS_AS(xn_facts(0), parse_error);
}

TEST_CASE("normalizing Xn produces its torus root with the right window") {
    for (long long n : {2LL, 5LL, 9LL, 16LL}) {
        PairExpression e = normalize(single(Atom::xn_pair_atom(n)));
        REQUIRE(e.atoms.size() == 1);
        const Atom& root = e.atoms[0];
        CHECK(root.kind == AtomKind::prime);
        CHECK(root.label == "T(2," + std::to_string(n) + ")");
        CHECK(root.in_s3);
        CHECK(root.components == (n % 2 == 0 ? 2 : 1));
        CHECK(testers::same_window(root.complexity,
                                   torus_pair_facts(2, n).interval));
    }
}

TEST_CASE("expression text parses the documented grammar") {
    PairExpression a = parse_expression("Prime(trefoil, 3)");
    REQUIRE(a.atoms.size() == 1);
    CHECK(a.atoms[0].kind == AtomKind::prime);
    CHECK(a.atoms[0].label == "trefoil");
    CHECK(a.atoms[0].complexity.lower == 3);
    REQUIRE(a.atoms[0].complexity.upper);
    CHECK(*a.atoms[0].complexity.upper == 3);

    PairExpression q = parse_expression("Prime(\"a knot, quoted\", ?)");
    CHECK(q.atoms[0].label == "a knot, quoted");
    CHECK_FALSE(q.atoms[0].complexity.upper);

    PairExpression r = parse_expression("Prime(k, [1,4], 2)");
    CHECK(r.atoms[0].complexity.lower == 1);
    CHECK(r.atoms[0].components == 2);

    PairExpression two_d = parse_expression("2*D");
    CHECK(two_d.atoms.size() == 2);
    CHECK(two_d.atoms[0].kind == AtomKind::d_pair);

    PairExpression mix = parse_expression("Trivial0 + Handle + Xn(7) + T(2,5)");
    CHECK(mix.atoms.size() == 4);

    PairExpression exc = parse_expression("Exceptional(P3-core)");
    CHECK(exc.atoms[0].kind == AtomKind::exceptional);
    CHECK(exc.atoms[0].exceptional == ExceptionalPair::p3_core);

    PairExpression op = parse_expression("Opaque(x, c=[0,4], 2)");
    CHECK(op.atoms[0].kind == AtomKind::opaque);
    CHECK(op.atoms[0].components == 2);
    REQUIRE(op.atoms[0].complexity.upper);
    CHECK(*op.atoms[0].complexity.upper == 4);

    // 2-sums apply left to right, targets defaulting to link-bearing atoms
    PairExpression knot_d = parse_expression("Prime(trefoil, 3) #2 D");
    REQUIRE(knot_d.atoms.size() == 1);
    CHECK(knot_d.atoms[0].kind == AtomKind::d_pair);

    PairExpression picked =
        parse_expression("Trivial0 + D #2[1,0] Prime(k, 2)");
    REQUIRE(picked.atoms.size() == 2); // Trivial0 rides along, D absorbs k

    PairExpression empty = parse_expression("");
    CHECK(empty.atoms.empty());
}

TEST_CASE("expression parsing rejects malformed text") {
    CHECK_THROWS_AS(parse_expression("Prime("), parse_error);
    CHECK_THROWS_AS(parse_expression("Nonsense(3)"), parse_error);
    CHECK_THROWS_AS(parse_expression("Xn(0)"), parse_error);
    CHECK_THROWS_AS(parse_expression("T(2)"), parse_error);
    CHECK_THROWS_AS(parse_expression("D +"), parse_error);
    CHECK_THROWS_AS(parse_expression("D #2"), parse_error);
    CHECK_THROWS_AS(parse_expression("D #2[5,0] D"), parse_error);
    CHECK_THROWS_AS(parse_expression("Prime(k, [3,1])"), parse_error);
    CHECK_THROWS_AS(parse_expression("0*D D"), parse_error);
    CHECK_THROWS_AS(parse_expression("Trivial0 #2 D"), parse_error);
}

TEST_CASE("expression serialization round-trips") {
    for (const char* text :
         {"Prime(trefoil, 3)", "2*D + Trivial2", "Xn(7) + T(2,5)",
          "Exceptional(L31-core) + Opaque(w, c=[1,?], 2)", ""}) {
        PairExpression e = parse_expression(text);
        CHECK(same_expression(parse_expression(serialize_expression(e)), e));
    }
    std::mt19937 rng(909);
    for (int trial = 0; trial < 400; ++trial) {
        PairExpression e = testers::random_expression(rng);
        CAPTURE(serialize_expression(e));
        PairExpression back = parse_expression(serialize_expression(e));
        CHECK(same_expression(back, e));
        CHECK(testers::same_window(complexity(back), complexity(e)));
    }
}
