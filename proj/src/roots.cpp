#include "linkc/roots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace linkc {

const char* to_string(AtomKind k) {
    switch (k) {
        case AtomKind::prime: return "Prime";
        case AtomKind::trivial0: return "Trivial0";
        case AtomKind::trivial2: return "Trivial2";
        case AtomKind::d_pair: return "D";
        case AtomKind::handle: return "Handle";
        case AtomKind::exceptional: return "Exceptional";
        case AtomKind::xn: return "Xn";
        case AtomKind::torus_pair: return "T";
        case AtomKind::opaque: return "Opaque";
    }
    return "?";
}

const char* to_string(ExceptionalPair e) {
    switch (e) {
        case ExceptionalPair::s3_empty: return "S3";
        case ExceptionalPair::s3_core: return "S3-core";
        case ExceptionalPair::p3_empty: return "P3";
        case ExceptionalPair::p3_core: return "P3-core";
        case ExceptionalPair::l31_empty: return "L31";
        case ExceptionalPair::l31_core: return "L31-core";
    }
    return "?";
}

bool Atom::complexity_exact() const {
    return complexity.upper && complexity.lower == *complexity.upper;
}

namespace {

BoundInterval exact_zero(const char* why) {
    BoundInterval b;
    b.lower = 0;
    b.upper = Int(0);
    b.provenance.push_back(why);
    return b;
}

std::string interval_text(const BoundInterval& b) {
    std::ostringstream out;
    if (b.upper && b.lower == *b.upper) {
        out << b.lower;
    } else {
        out << "[" << b.lower << ", ";
        if (b.upper)
            out << *b.upper;
        else
            out << "?";
        out << "]";
    }
    return out.str();
}

// Short display name for log lines and opaque labels.
std::string short_name(const Atom& a) {
    std::ostringstream out;
    switch (a.kind) {
        case AtomKind::prime: out << a.label; break;
        case AtomKind::opaque: out << a.label; break;
        case AtomKind::exceptional: out << to_string(a.exceptional); break;
        case AtomKind::xn: out << "Xn(" << a.n << ")"; break;
        case AtomKind::torus_pair: out << "T(" << a.m << "," << a.q << ")"; break;
        default: out << to_string(a.kind); break;
    }
    return out.str();
}

} // namespace

Atom Atom::prime(std::string label, BoundInterval complexity,
                 long long components, bool in_s3) {
    if (components < 0) throw parse_error("negative component count");
    Atom a;
    a.kind = AtomKind::prime;
    a.label = std::move(label);
    a.complexity = std::move(complexity);
    a.components = components;
    a.in_s3 = in_s3;
    return a;
}

Atom Atom::prime_exact(std::string label, Int complexity, long long components,
                       bool in_s3) {
    if (complexity < 0) throw parse_error("negative complexity");
    BoundInterval b;
    b.lower = complexity;
    b.upper = complexity;
    return prime(std::move(label), std::move(b), components, in_s3);
}

Atom Atom::prime_unknown(std::string label, long long components, bool in_s3) {
    BoundInterval b;
    b.lower = 0;
    b.provenance.push_back("complexity not supplied");
    return prime(std::move(label), std::move(b), components, in_s3);
}

Atom Atom::trivial_0() {
    Atom a;
    a.kind = AtomKind::trivial0;
    a.components = 0;
    a.in_s3 = true;
    a.complexity = exact_zero("trivial 0-pair (S3, empty) has complexity 0");
    return a;
}

Atom Atom::trivial_2() {
    Atom a;
    a.kind = AtomKind::trivial2;
    a.components = 1;
    a.in_s3 = true;
    a.complexity = exact_zero("trivial 2-pair (S3, unknot) has complexity 0");
    return a;
}

Atom Atom::d() {
    Atom a;
    a.kind = AtomKind::d_pair;
    a.components = 1;
    a.in_s3 = false;
    a.complexity =
        exact_zero("D has the spine ({*'} x S^1) u (S^2 x {*}) with no vertices");
    return a;
}

Atom Atom::handle_pair() {
    Atom a;
    a.kind = AtomKind::handle;
    a.components = 0;
    a.in_s3 = false;
    a.complexity = exact_zero("(S^2 x S^1, empty) has complexity 0");
    return a;
}

Atom Atom::exceptional_pair(ExceptionalPair which) {
    Atom a;
    a.kind = AtomKind::exceptional;
    a.exceptional = which;
    a.components = (which == ExceptionalPair::s3_core ||
                    which == ExceptionalPair::p3_core ||
                    which == ExceptionalPair::l31_core)
                       ? 1
                       : 0;
    a.in_s3 = which == ExceptionalPair::s3_empty ||
              which == ExceptionalPair::s3_core;
    a.complexity = exact_zero("one of the six complexity-0 irreducible pairs");
    return a;
}

Atom Atom::xn_pair_atom(long long n) {
    if (n < 1) throw parse_error("Xn requires n >= 1");
    Atom a;
    a.kind = AtomKind::xn;
    a.n = n;
    a.components = 1; // the link of X_n is always a knot
    a.in_s3 = false;  // the manifold is S^2 x S^1
    a.complexity = torus_pair_facts(2, n).interval;
    a.complexity.provenance.push_back(
        "c(Xn) equals c(S3, T(2,n)) because complexity is preserved by "
        "passing to the root");
    return a;
}

Atom Atom::torus(long long m, long long q) {
    TorusFacts f = torus_pair_facts(m, q);
    Atom a;
    a.kind = AtomKind::torus_pair;
    a.m = f.m;
    a.q = f.q;
    a.components = f.components;
    a.in_s3 = true;
    a.complexity = f.interval;
    return a;
}

Atom Atom::opaque_pair(std::string label, BoundInterval complexity,
                       long long components) {
    if (components < 0) throw parse_error("negative component count");
    Atom a;
    a.kind = AtomKind::opaque;
    a.label = std::move(label);
    a.complexity = std::move(complexity);
    a.components = components;
    a.in_s3 = false;
    return a;
}

std::string atom_key(const Atom& a) {
    std::ostringstream out;
    out << to_string(a.kind) << "|" << a.label << "|" << to_string(a.exceptional)
        << "|n=" << a.n << "|m=" << a.m << "|q=" << a.q << "|comps="
        << a.components << "|s3=" << a.in_s3 << "|c=" << interval_text(a.complexity);
    return out.str();
}

bool same_expression(const PairExpression& a, const PairExpression& b) {
    if (a.atoms.size() != b.atoms.size()) return false;
    std::vector<std::string> ka, kb;
    for (const Atom& x : a.atoms) ka.push_back(atom_key(x));
    for (const Atom& x : b.atoms) kb.push_back(atom_key(x));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

bool may_contain_1_spheres(const PairExpression& e) {
    return std::any_of(e.atoms.begin(), e.atoms.end(), [](const Atom& a) {
        return a.kind == AtomKind::d_pair || a.kind == AtomKind::opaque;
    });
}

PairExpression sum0(const PairExpression& a, const PairExpression& b) {
    PairExpression out;
    out.atoms = a.atoms;
    out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
    out.log = a.log;
    out.log.insert(out.log.end(), b.log.begin(), b.log.end());
    out.log.push_back("0-sum: multiset union, complexity exactly additive");
    return out;
}

namespace {

bool is_s3_knot(const Atom& t) {
    switch (t.kind) {
        case AtomKind::prime: return t.in_s3 && t.components == 1;
        case AtomKind::trivial2: return true;
        case AtomKind::exceptional: return t.exceptional == ExceptionalPair::s3_core;
        case AtomKind::torus_pair: return t.components == 1;
        default: return false;
    }
}

} // namespace

PairExpression sum2(const PairExpression& a, std::size_t target_a,
                    const PairExpression& b, std::size_t target_b) {
    if (target_a >= a.atoms.size() || target_b >= b.atoms.size())
        throw parse_error("2-sum target index out of range");
    const Atom& x = a.atoms[target_a];
    const Atom& y = b.atoms[target_b];
    if (!x.has_link() || !y.has_link())
        throw parse_error("2-sum targets must have nonempty link parts");

    PairExpression out;
    out.log = a.log;
    out.log.insert(out.log.end(), b.log.begin(), b.log.end());
    for (std::size_t i = 0; i < a.atoms.size(); ++i)
        if (i != target_a) out.atoms.push_back(a.atoms[i]);
    for (std::size_t j = 0; j < b.atoms.size(); ++j)
        if (j != target_b) out.atoms.push_back(b.atoms[j]);

    std::ostringstream log;
    log << "2-sum " << short_name(x) << " #2 " << short_name(y) << ": ";

    if (x.kind == AtomKind::d_pair && y.kind == AtomKind::d_pair) {
        out.atoms.push_back(Atom::opaque_pair(
            "D#2D", exact_zero("c(D#2D) = 0 by superadditivity, c(D) = 0"), 1));
        log << "both targets are D; complexity exactly 0, pair structure "
               "unknown";
    } else if ((x.kind == AtomKind::d_pair && is_s3_knot(y)) ||
               (y.kind == AtomKind::d_pair && is_s3_knot(x))) {
        out.atoms.push_back(Atom::d());
        log << "a knot in the 3-sphere 2-summed with D gives D; the knot "
               "atom is discarded";
    } else if (x.kind == AtomKind::prime && y.kind == AtomKind::prime &&
               !may_contain_1_spheres(a) && !may_contain_1_spheres(b)) {
        Atom fused = Atom::prime(x.label + "#" + y.label,
                                 sum_bounds_0(x.complexity, y.complexity),
                                 x.components + y.components - 1,
                                 x.in_s3 && y.in_s3);
        out.atoms.push_back(fused);
        log << "no 1-spheres on either side; complexity exactly additive";
    } else {
        BoundInterval ci;
        ci.lower = 0;
        if (x.complexity.upper && y.complexity.upper)
            ci.upper = *x.complexity.upper + *y.complexity.upper;
        std::ostringstream why;
        why << "2-sum involving a possible 1-sphere: complexity in [0, ";
        if (ci.upper)
            why << *ci.upper;
        else
            why << "?";
        why << "]; no lower bound in terms of the summands can exist";
        ci.provenance.push_back(why.str());
        out.atoms.push_back(Atom::opaque_pair(
            "(" + short_name(x) + "#2" + short_name(y) + ")", ci,
            x.components + y.components - 1));
        log << "mixed case; only the superadditive upper bound survives";
    }
    out.log.push_back(log.str());
    return out;
}

namespace {

Atom xn_root_atom(long long n) {
    TorusFacts f = torus_pair_facts(2, n);
    // Keep the root's customary (2, n) parameter order even though the
    // closed forms normalize to m >= q.
    std::ostringstream label;
    label << "T(2," << n << ")";
    return Atom::prime(label.str(), f.interval, f.components, true);
}

} // namespace

PairExpression normalize(const PairExpression& e) {
    PairExpression out;
    out.log = e.log;
    for (const Atom& a : e.atoms) {
        switch (a.kind) {
            case AtomKind::trivial0:
            case AtomKind::trivial2:
                out.log.push_back("dropped a trivial pair (complexity 0)");
                break;
            case AtomKind::handle:
                out.log.push_back(
                    "dropped a handle: the root of (S^2 x S^1, empty) is "
                    "trivial");
                break;
            case AtomKind::xn: {
                Atom root = xn_root_atom(a.n);
                std::ostringstream log;
                log << "Xn(" << a.n << ") -> " << short_name(root)
                    << ": surgery along S^2 x {*} gives the root, complexity "
                       "preserved";
                if (a.n == 1) log << " (degenerate: T(2,1) is an unknot)";
                out.log.push_back(log.str());
                out.atoms.push_back(std::move(root));
                break;
            }
            case AtomKind::torus_pair: {
                std::ostringstream label;
                label << "T(" << a.m << "," << a.q << ")";
                out.atoms.push_back(
                    Atom::prime(label.str(), a.complexity, a.components, true));
                out.log.push_back("torus pair recorded as a prime atom");
                break;
            }
            default:
                out.atoms.push_back(a);
                break;
        }
    }
    return out;
}

std::pair<PairExpression, long long> extract_d_factors(const PairExpression& e) {
    PairExpression rest;
    rest.log = e.log;
    long long k = 0;
    for (const Atom& a : e.atoms) {
        if (a.kind == AtomKind::d_pair)
            ++k;
        else
            rest.atoms.push_back(a);
    }
    std::ostringstream log;
    log << "extracted " << k << " D factor(s)";
    rest.log.push_back(log.str());
    return {std::move(rest), k};
}

BoundInterval complexity(const PairExpression& e) {
    BoundInterval total;
    total.lower = 0;
    total.upper = Int(0);
    for (const Atom& a : e.atoms) {
        total.lower += a.complexity.lower;
        if (total.upper && a.complexity.upper)
            *total.upper += *a.complexity.upper;
        else
            total.upper.reset();
        std::ostringstream line;
        line << short_name(a) << " contributes " << interval_text(a.complexity);
        total.provenance.push_back(line.str());
    }
    return total;
}

XnFacts xn_facts(long long n) {
    if (n < 1) throw parse_error("xn_facts requires n >= 1");
    XnFacts f;
    f.n = n;
    f.root = xn_root_atom(n);
    f.root_components = n % 2 == 0 ? 2 : 1;
    f.distinct_from_all_other_xm = true;
    f.zero_one_irreducible = n % 2 == 0;
    f.has_essential_separating_2sphere = n % 2 == 1 && n >= 3;
    f.link_is_knot = true;
    f.degenerate = n == 1;
    return f;
}

// ---------------------------------------------------------------------------
// Expression text

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* where) {
        if (!consume(c)) {
            std::ostringstream msg;
            msg << "expression parse error: expected '" << c << "' " << where
                << " near position " << pos;
            throw parse_error(msg.str());
        }
    }
    long long integer(const char* what) {
        skip_ws();
        bool negative = consume('-');
        std::size_t start = pos;
        long long value = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) {
            std::ostringstream msg;
            msg << "expression parse error: expected " << what
                << " near position " << pos;
            throw parse_error(msg.str());
        }
        return negative ? -value : value;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
    // A label: double-quoted, or raw text up to ',' or ')'.
    std::string label() {
        skip_ws();
        if (consume('"')) {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != '"') ++pos;
            if (pos == text.size())
                throw parse_error("expression parse error: unterminated quote");
            std::string out = text.substr(start, pos - start);
            ++pos;
            return out;
        }
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if ((c == ',' || c == ')') && depth == 0) break;
            if (c == ')') --depth;
            ++pos;
        }
        std::string out = text.substr(start, pos - start);
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
            out.pop_back();
        if (out.empty())
            throw parse_error("expression parse error: empty label");
        return out;
    }
};

// c-spec: '?', an integer, or '[lo, hi]' with hi possibly '?'.
// An optional 'c=' prefix is accepted.
BoundInterval parse_cspec(Cursor& c) {
    c.skip_ws();
    if (c.text.compare(c.pos, 2, "c=") == 0) c.pos += 2;
    BoundInterval b;
    if (c.consume('?')) {
        b.lower = 0;
        return b;
    }
    if (c.consume('[')) {
        b.lower = Int(c.integer("interval lower bound"));
        if (b.lower < 0) throw parse_error("complexity lower bound must be >= 0");
        c.expect(',', "in complexity interval");
        if (c.consume('?')) {
            c.expect(']', "after complexity interval");
            return b;
        }
        Int hi(c.integer("interval upper bound"));
        c.expect(']', "after complexity interval");
        if (hi < b.lower)
            throw parse_error("complexity interval has upper < lower");
        b.upper = hi;
        return b;
    }
    Int v(c.integer("complexity value"));
    if (v < 0) throw parse_error("complexity must be >= 0");
    b.lower = v;
    b.upper = v;
    return b;
}

Atom parse_atom(Cursor& c) {
    std::string name = c.word();
    if (name == "Trivial0") return Atom::trivial_0();
    if (name == "Trivial2") return Atom::trivial_2();
    if (name == "D") return Atom::d();
    if (name == "Handle") return Atom::handle_pair();
    if (name == "Xn") {
        c.expect('(', "after Xn");
        long long n = c.integer("Xn parameter");
        c.expect(')', "after Xn parameter");
        return Atom::xn_pair_atom(n);
    }
    if (name == "T") {
        c.expect('(', "after T");
        long long m = c.integer("torus parameter");
        c.expect(',', "between torus parameters");
        long long q = c.integer("torus parameter");
        c.expect(')', "after torus parameters");
        return Atom::torus(m, q);
    }
    if (name == "Exceptional") {
        c.expect('(', "after Exceptional");
        std::string which = c.label();
        c.expect(')', "after exceptional name");
        for (ExceptionalPair e :
             {ExceptionalPair::s3_empty, ExceptionalPair::s3_core,
              ExceptionalPair::p3_empty, ExceptionalPair::p3_core,
              ExceptionalPair::l31_empty, ExceptionalPair::l31_core})
            if (which == to_string(e)) return Atom::exceptional_pair(e);
        throw parse_error("expression parse error: unknown exceptional pair '" +
                          which + "'");
    }
    if (name == "Prime" || name == "Opaque") {
        c.expect('(', "after atom name");
        std::string label = c.label();
        BoundInterval complexity;
        complexity.lower = 0; // unknown unless specified
        long long components = 1;
        if (c.consume(',')) {
            complexity = parse_cspec(c);
            if (c.consume(','))
                components = c.integer("component count");
        }
        c.expect(')', "after atom arguments");
        if (components < 0)
            throw parse_error("component count must be >= 0");
        if (name == "Prime")
            return Atom::prime(std::move(label), std::move(complexity),
                               components);
        return Atom::opaque_pair(std::move(label), std::move(complexity),
                                 components);
    }
    throw parse_error("expression parse error: unknown atom '" + name + "'");
}

PairExpression parse_term(Cursor& c) {
    c.skip_ws();
    long long multiplicity = 1;
    std::size_t mark = c.pos;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        multiplicity = c.integer("multiplier");
        if (!c.consume('*')) {
            c.pos = mark; // not a multiplier after all
            multiplicity = 1;
        } else if (multiplicity < 1) {
            throw parse_error("atom multiplier must be >= 1");
        }
    }
    Atom a = parse_atom(c);
    PairExpression e;
    for (long long i = 0; i < multiplicity; ++i) e.atoms.push_back(a);
    return e;
}

std::size_t first_link_atom(const PairExpression& e) {
    for (std::size_t i = 0; i < e.atoms.size(); ++i)
        if (e.atoms[i].has_link()) return i;
    throw parse_error("2-sum needs an atom with a nonempty link on each side");
}

} // namespace

PairExpression parse_expression(const std::string& text) {
    Cursor c{text};
    PairExpression acc;
    if (c.eof()) return acc;
    acc = parse_term(c);
    while (!c.eof()) {
        if (c.consume('+')) {
            PairExpression rhs = parse_term(c);
            acc.atoms.insert(acc.atoms.end(), rhs.atoms.begin(),
                             rhs.atoms.end());
            continue;
        }
        if (c.consume('#')) {
            c.expect('2', "after '#'");
            bool explicit_targets = false;
            long long ti = 0, tj = 0;
            if (c.consume('[')) {
                ti = c.integer("2-sum left target index");
                c.expect(',', "between 2-sum target indices");
                tj = c.integer("2-sum right target index");
                c.expect(']', "after 2-sum target indices");
                explicit_targets = true;
                if (ti < 0 || tj < 0)
                    throw parse_error("2-sum target indices must be >= 0");
            }
            PairExpression rhs = parse_term(c);
            std::size_t ia = explicit_targets ? static_cast<std::size_t>(ti)
                                              : first_link_atom(acc);
            std::size_t ib = explicit_targets ? static_cast<std::size_t>(tj)
                                              : first_link_atom(rhs);
            acc = sum2(acc, ia, rhs, ib);
            continue;
        }
        std::ostringstream msg;
        msg << "expression parse error: expected '+' or '#2' near position "
            << c.pos;
        throw parse_error(msg.str());
    }
    return acc;
}

namespace {

std::string serialize_atom(const Atom& a) {
    std::ostringstream out;
    switch (a.kind) {
        case AtomKind::trivial0:
        case AtomKind::trivial2:
        case AtomKind::d_pair:
        case AtomKind::handle:
            out << to_string(a.kind);
            break;
        case AtomKind::exceptional:
            out << "Exceptional(" << to_string(a.exceptional) << ")";
            break;
        case AtomKind::xn:
            out << "Xn(" << a.n << ")";
            break;
        case AtomKind::torus_pair:
            out << "T(" << a.m << "," << a.q << ")";
            break;
        case AtomKind::prime:
        case AtomKind::opaque: {
            out << (a.kind == AtomKind::prime ? "Prime" : "Opaque") << "(\""
                << a.label << "\", ";
            const BoundInterval& c = a.complexity;
            if (c.upper && c.lower == *c.upper)
                out << c.lower;
            else if (!c.upper && c.lower == 0)
                out << "?";
            else {
                out << "[" << c.lower << ", ";
                if (c.upper)
                    out << *c.upper;
                else
                    out << "?";
                out << "]";
            }
            if (a.components != 1) out << ", " << a.components;
            out << ")";
            break;
        }
    }
    return out.str();
}

} // namespace

std::string serialize_expression(const PairExpression& e) {
    // Group equal atoms so repeats print as k*Atom, keeping first-seen order.
    std::vector<std::pair<std::string, long long>> groups;
    std::map<std::string, std::size_t> index;
    for (const Atom& a : e.atoms) {
        std::string key = serialize_atom(a);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, groups.size());
            groups.emplace_back(key, 1);
        } else {
            ++groups[it->second].second;
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) out << " + ";
        if (groups[i].second > 1) out << groups[i].second << "*";
        out << groups[i].first;
    }
    return out.str();
}

} // namespace linkc
