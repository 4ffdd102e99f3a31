#include "linkc/braid.hpp"

#include <map>
#include <sstream>

namespace linkc {

BraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok.rfind("strands=", 0) != 0)
        throw parse_error("braid text must start with strands=n");
    BraidWord b;
    try {
        std::size_t pos = 0;
        b.strands = std::stoi(tok.substr(8), &pos);
        if (pos != tok.size() - 8) throw parse_error("");
    } catch (const std::exception&) {
        throw parse_error("malformed strand count: " + tok);
    }
    if (b.strands < 1) throw parse_error("strand count must be positive");
    if (!(in >> tok) || tok != ":")
        throw parse_error("expected ':' after the strand count");
    while (in >> tok) {
        int w = 0;
        try {
            std::size_t pos = 0;
            w = std::stoi(tok, &pos);
            if (pos != tok.size()) throw parse_error("");
        } catch (const std::exception&) {
            throw parse_error("malformed braid letter: " + tok);
        }
        if (w == 0 || std::abs(w) >= b.strands)
            throw parse_error("braid letter " + tok + " out of range for " +
                              std::to_string(b.strands) + " strands");
        b.letters.push_back(w);
    }
    return b;
}

std::string serialize_braid(const BraidWord& b) {
    std::ostringstream os;
    os << "strands=" << b.strands << " :";
    for (int w : b.letters) os << ' ' << w;
    return os.str();
}

LinkDiagram braid_closure(const BraidWord& b) {
    if (b.strands < 1) throw parse_error("strand count must be positive");

    LinkDiagram d;
    std::vector<int> cur(b.strands + 1); // current edge id at each position
    for (int j = 1; j <= b.strands; ++j) cur[j] = j;
    int next_id = b.strands + 1;

    for (int w : b.letters) {
        int i = std::abs(w);
        if (i < 1 || i >= b.strands)
            throw parse_error("braid letter out of range: " + std::to_string(w));
        int u = cur[i], v = cur[i + 1];
        int lo = next_id++, ro = next_id++; // outgoing edges, left and right
        if (w > 0)
            d.crossings.push_back({{v, u, lo, ro}});
        else
            d.crossings.push_back({{u, lo, ro, v}});
        cur[i] = lo;
        cur[i + 1] = ro;
    }

    // Close up: the bottom edge of each position is the top edge again.
    std::map<int, int> rename;
    for (int j = 1; j <= b.strands; ++j) {
        if (cur[j] == j)
            ++d.unknots; // position untouched by any letter
        else
            rename[cur[j]] = j;
    }
    for (Crossing& x : d.crossings)
        for (int p = 0; p < 4; ++p) {
            auto it = rename.find(x.edge[p]);
            if (it != rename.end()) x.edge[p] = it->second;
        }
    validate(d);
    return d;
}

} // namespace linkc
