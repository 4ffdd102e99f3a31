#ifndef LINKC_BRAID_HPP
#define LINKC_BRAID_HPP

#include <string>
#include <vector>

#include "linkc/diagram.hpp"

namespace linkc {

// Braid word on a fixed number of strands. Letter +i is the positive half
// twist of strands i and i+1 (strand i passing over), letter -i its inverse.
// An empty word is the trivial braid.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

// Text form "strands=n : w1 w2 ... wk"; the colon is required even for the
// trivial braid. Letters are nonzero integers with |w| < n.
BraidWord parse_braid(const std::string& text);
std::string serialize_braid(const BraidWord& b);

// Diagram of the braid closure (plat the braid axis shut). Strand positions
// never touched by a letter close into crossing-free unknot components.
LinkDiagram braid_closure(const BraidWord& b);

} // namespace linkc

#endif
