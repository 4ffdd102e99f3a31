#include "linkc/bounds.hpp"

#include "linkc/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace linkc {

const char* to_string(BoundKind k) {
    return k == BoundKind::lower ? "lower" : "upper";
}

const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::certified: return "certified";
        case BoundStatus::conditional: return "conditional";
        case BoundStatus::asymptotic: return "asymptotic";
    }
    return "?";
}

const char* to_string(CrnStatus s) {
    switch (s) {
        case CrnStatus::exact_reduced_alternating: return "exact-reduced-alternating";
        case CrnStatus::exact_closed_form: return "exact-closed-form";
        case CrnStatus::upper_only: return "upper-only";
    }
    return "?";
}

CrossingCertificate crn_certificate(const LinkDiagram& d) {
    CrossingCertificate cert;
    cert.value = static_cast<long long>(d.crossings.size());
    cert.status = (is_reduced(d) && is_alternating(d))
                      ? CrnStatus::exact_reduced_alternating
                      : CrnStatus::upper_only;
    return cert;
}

StrictLog5 strict_log5_lower(const Int& x) {
    if (x < 0) throw parse_error("strict_log5_lower requires a nonnegative input");
    if (x == 0) return {0, true};
    long long k = 0;
    Int power = 5; // 5^(k+1)
    while (power <= x) {
        ++k;
        power *= 5;
    }
    return {k, false};
}

Bound diagram_upper_bound(const CrossingCertificate& crn, long long components) {
    if (components < 1)
        throw parse_error("diagram_upper_bound requires at least one component");
    Bound b;
    b.tag = "crossing-upper";
    b.value = Int(4) * crn.value + Int(2) * components - 1;
    b.kind = BoundKind::upper;
    b.status = BoundStatus::certified;
    std::ostringstream note;
    note << "c <= 4*crn + 2*components - 1 with crn ";
    if (crn.exact())
        note << "= " << crn.value << " (" << to_string(crn.status) << ")";
    else
        note << "<= " << crn.value << " (diagram crossing count, not known minimal)";
    b.note = note.str();
    return b;
}

Bound torus_upper_bound(long long m, long long q) {
    if (q < 2 || m <= q)
        throw parse_error("torus_upper_bound requires m > q >= 2");
    if (std::gcd(m, q) != 1)
        throw parse_error("torus_upper_bound requires coprime parameters");
    auto quotients = continued_fraction(m, q);
    long long sum = std::accumulate(quotients.begin(), quotients.end(), 0LL);
    Bound b;
    b.tag = "torus-cf-upper";
    b.value = Int(2) * sum - 3;
    b.kind = BoundKind::upper;
    b.status = BoundStatus::certified;
    std::ostringstream note;
    note << "c(T(" << m << "," << q << ")) <= 2*(partial quotient sum " << sum
         << ") - 3";
    b.note = note.str();
    return b;
}

Bound det_lower_bound(const LinkDiagram& d, bool prime_nonsplit) {
    Bound b;
    b.kind = BoundKind::lower;
    b.status = prime_nonsplit ? BoundStatus::certified : BoundStatus::conditional;

    Int order;
    bool knot = component_count(d) == 1;
    if (knot || d.crossings.empty()) {
        order = determinant(d);
        b.tag = "det-log5-lower";
    } else {
        // For a link the homology of the double branched cover may have free
        // rank; the bound uses only the torsion order.
        order = (d.unknots > 0 || graph_component_count(d) > 1)
                    ? Int(0)
                    : torsion_order(goeritz_matrix(d, Color::white));
        b.tag = "torsion-log5-lower";
    }

    StrictLog5 lg = strict_log5_lower(order);
    b.value = lg.value;
    std::ostringstream note;
    if (lg.vacuous) {
        note << "vacuous: split presentation, double branched cover has "
                "infinite first homology";
    } else {
        note << "c > log5(" << order << ") - 1";
        if (!prime_nonsplit) note << "; assumes prime non-split (unverified)";
    }
    b.note = note.str();
    return b;
}

Bound alternating_crn_lower_bound(const CrossingCertificate& crn, bool prime) {
    if (crn.status != CrnStatus::exact_reduced_alternating)
        throw parse_error("alternating_crn_lower_bound requires an exact "
                          "reduced-alternating crossing certificate");
    Bound b;
    b.tag = "alt-crn-log5-lower";
    b.kind = BoundKind::lower;
    b.status = prime ? BoundStatus::certified : BoundStatus::conditional;
    StrictLog5 lg = strict_log5_lower(Int(crn.value));
    b.value = lg.value;
    std::ostringstream note;
    note << "c > log5(crn " << crn.value << ") - 1 for prime alternating knots";
    if (!prime) note << "; assumes prime (unverified)";
    b.note = note.str();
    return b;
}

Rational parse_decimal(const std::string& text) {
    const char* err = "parse_decimal: malformed decimal";
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    Int mantissa = 0;
    long long scale = 0; // digits after the decimal point
    bool any_digit = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++scale;
            any_digit = true;
        }
    }
    if (!any_digit) throw parse_error(err);
    long long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i == text.size()) throw parse_error(err);
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i)
            exponent = exponent * 10 + (text[i] - '0');
        if (exp_negative) exponent = -exponent;
    }
    if (i != text.size()) throw parse_error(err);

    Int num = mantissa, den = 1;
    long long shift = exponent - scale;
    for (long long k = 0; k < shift; ++k) num *= 10;
    for (long long k = 0; k < -shift; ++k) den *= 10;
    Rational value(num, den);
    return negative ? -value : value;
}

const Rational& v3_volume() {
    static const Rational v3(101494, 100000);
    return v3;
}

namespace {

Int rational_floor(const Rational& q) {
    Int num = numerator(q), den = denominator(q); // den > 0
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

} // namespace

VolumeAnalysis volume_floor_analysis(const Rational& vol, const Rational& tolerance) {
    if (vol <= 0) throw parse_error("volume must be positive");
    if (tolerance < 0) throw parse_error("tolerance must be nonnegative");
    Rational ratio = vol / v3_volume();

    VolumeAnalysis out;
    if (denominator(ratio) == 1) {
        // The supplied volume sits exactly on an integer multiple of v3;
        // strictness of c > ratio settles the boundary upward.
        out.value = static_cast<long long>(numerator(ratio)) + 1;
        out.boundary = true;
        return out;
    }
    Rational worst = ratio - tolerance;
    Int floor_worst = rational_floor(worst);
    Int value = floor_worst + 1;
    if (value < 1) value = 1; // vol > 0 already forces c >= 1
    out.value = static_cast<long long>(value);
    Int below = rational_floor(ratio);
    out.ambiguous = (ratio - Rational(below) <= tolerance) ||
                    (Rational(below + 1) - ratio <= tolerance);
    return out;
}

Bound volume_lower_bound(const std::string& volume_text,
                         const std::string& tolerance_text,
                         const std::string& source) {
    Rational vol = parse_decimal(volume_text);
    Rational tol = parse_decimal(tolerance_text);
    VolumeAnalysis a = volume_floor_analysis(vol, tol);
    Bound b;
    b.tag = "volume-lower";
    b.value = a.value;
    b.kind = BoundKind::lower;
    b.status = BoundStatus::certified;
    std::ostringstream note;
    note << "c > vol/v3 with vol = " << volume_text << " (source: " << source
         << "), tolerance " << tolerance_text;
    if (a.boundary) note << "; vol/v3 is exactly an integer, strictness applied";
    if (a.ambiguous)
        note << "; vol/v3 within tolerance of an integer, conservative value";
    b.note = note.str();
    return b;
}

Bound turks_head_lower_bound(long long n) {
    if (n < 2) throw parse_error("turks_head_lower_bound requires n >= 2");
    Bound b;
    b.tag = "turks-head-half-crn-lower";
    b.value = n;
    b.kind = BoundKind::lower;
    b.status = BoundStatus::asymptotic;
    std::ostringstream note;
    note << "half the crossing number 2n with n = " << n
         << "; proved for sufficiently large n only";
    b.note = note.str();
    return b;
}

BoundInterval combine(const std::vector<Bound>& bounds,
                      bool include_asymptotic,
                      bool include_conditional) {
    BoundInterval out;
    for (const Bound& b : bounds) {
        bool usable = b.status == BoundStatus::certified ||
                      (b.status == BoundStatus::asymptotic && include_asymptotic) ||
                      (b.status == BoundStatus::conditional && include_conditional);
        std::ostringstream line;
        line << b.tag << " " << to_string(b.kind) << " " << b.value << " ("
             << to_string(b.status) << (usable ? "" : ", not merged") << "): "
             << b.note;
        out.provenance.push_back(line.str());
        if (!usable) continue;
        if (b.kind == BoundKind::lower) {
            if (b.value > out.lower) out.lower = b.value;
        } else {
            if (!out.upper || b.value < *out.upper) out.upper = b.value;
        }
    }
    if (out.lower < 0) out.lower = 0;
    if (out.upper && out.lower > *out.upper) {
        std::ostringstream msg;
        msg << "bound contradiction: certified lower " << out.lower
            << " exceeds certified upper " << *out.upper;
        throw internal_error(msg.str());
    }
    return out;
}

BoundInterval sum_bounds_0(const BoundInterval& a, const BoundInterval& b) {
    BoundInterval out;
    out.lower = a.lower + b.lower;
    if (a.upper && b.upper) out.upper = *a.upper + *b.upper;
    out.provenance = a.provenance;
    out.provenance.insert(out.provenance.end(), b.provenance.begin(),
                          b.provenance.end());
    out.provenance.push_back("0-sum: complexity is exactly additive");
    return out;
}

TorusFacts torus_pair_facts(long long m, long long q) {
    if (m < 1 || q < 1)
        throw parse_error("torus_pair_facts requires parameters >= 1");
    if (m < q) std::swap(m, q);
    TorusFacts f;
    f.m = m;
    f.q = q;
    f.components = std::gcd(m, q);
    if (q == 1) {
        f.unknot = true;
        f.crn = {0, CrnStatus::exact_closed_form};
        f.det = 1;
        Bound trivial;
        trivial.tag = "trivial-pair-upper";
        trivial.value = 0;
        trivial.kind = BoundKind::upper;
        trivial.status = BoundStatus::certified;
        trivial.note = "T(m,1) is the unknot and (S3, unknot) is the trivial "
                       "2-pair, which has complexity 0";
        f.bounds.push_back(trivial);
        f.interval = combine(f.bounds);
        return f;
    }
    f.torus_link = f.components > 1;
    f.crn = {torus_crossing_number(m, q), CrnStatus::exact_closed_form};
    f.bounds.push_back(diagram_upper_bound(f.crn, f.components));
    if (f.components == 1) {
        f.bounds.push_back(torus_upper_bound(m, q));
        if (m % 2 != q % 2) f.det = torus_det_minus_one(m, q);
    } else if (q == 2) {
        // T(2,n) for even n is a 2-component link with determinant n.
        f.det = Int(m);
    }
    if (f.det) {
        StrictLog5 lg = strict_log5_lower(*f.det);
        Bound b;
        b.tag = f.components == 1 ? "det-log5-lower" : "torsion-log5-lower";
        b.value = lg.value;
        b.kind = BoundKind::lower;
        b.status = BoundStatus::certified; // torus links are prime non-split
        std::ostringstream note;
        note << "c > log5(" << *f.det
             << ") - 1; determinant from the torus closed form, primality and "
                "non-splitness are classical facts for torus links";
        b.note = note.str();
        f.bounds.push_back(b);
    }
    f.interval = combine(f.bounds);
    return f;
}

BoundInterval sum_bounds_2(const BoundInterval& a, bool one_sphere_free_a,
                           const BoundInterval& b, bool one_sphere_free_b) {
    if (one_sphere_free_a && one_sphere_free_b) {
        BoundInterval out = sum_bounds_0(a, b);
        out.provenance.back() =
            "2-sum of pairs without 1-spheres: complexity is exactly additive";
        return out;
    }
    BoundInterval out;
    out.lower = 0;
    if (a.upper && b.upper) out.upper = *a.upper + *b.upper;
    out.provenance = a.provenance;
    out.provenance.insert(out.provenance.end(), b.provenance.begin(),
                          b.provenance.end());
    out.provenance.push_back(
        "2-sum with a possible 1-sphere: no lower bound survives (a knot "
        "2-summed with D collapses to D); only the superadditive upper "
        "remains");
    return out;
}

} // namespace linkc
