#ifndef LINKC_CORPUS_HPP
#define LINKC_CORPUS_HPP

#include <string>
#include <vector>

#include "linkc/integer_matrix.hpp"

namespace linkc {

// One bundled diagram with its frozen expected values. The PD text is the
// source of truth; the numbers were computed once, checked against the
// independent Alexander route, and committed.
struct CorpusEntry {
    std::string name;
    std::string pd;
    long long crossings = 0;
    long long components = 0;
    long long det = 0;
};

// Torus closures T(2,q) for q <= 9, Turk's head weaves up to n = 6, twist
// knots up to n = 5 in both drawings, and connected sums up to 12 crossings.
const std::vector<CorpusEntry>& bundled_corpus();

struct SelftestResult {
    bool ok = true;
    long long entries_checked = 0;
    std::vector<std::string> failures; // one line per failed check, naming the entry
};

// Re-derives every entry's numbers from its PD text: parse, validate, both
// determinant routes (which must agree with each other and with the frozen
// value), crossing and component counts, face-size accounting, and a
// serialize/parse round trip. quick restricts to entries of <= 8 crossings.
SelftestResult run_selftest(const std::vector<CorpusEntry>& entries, bool quick);

} // namespace linkc

#endif
