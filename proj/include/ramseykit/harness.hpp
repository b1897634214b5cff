#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramseykit/graph.hpp"
#include "ramseykit/graph6.hpp"

namespace rk {

// ---- exhaustive catalogues of small graphs ----

constexpr int kEnumerateCap = 8;

// All graphs of the given order up to isomorphism (canonical forms,
// sorted by canonical key), by vertex augmentation from order 1.
std::vector<Graph> enumerate_graphs(int order, bool connected_only = false);

// ---- invariant scanning ----

struct CheckViolation {
    long index = 0; // 0-based record index
    std::string graph6;
    std::string check;
    std::string detail;
};

struct ScanReport {
    long scanned = 0;
    std::vector<std::string> checks;
    std::vector<CheckViolation> violations;
    std::vector<CorpusDiagnostic> diagnostics;
    bool ok() const { return violations.empty() && diagnostics.empty(); }
};

// chain:   deg(v) >= alpha(N(v)) >= c(N(v)) >= adh(v) at every vertex
// cut-adh: v is a cut vertex iff adh(v) >= 2
// dom-cut: every cut vertex lies in the connected dominating set
//          (connected hosts only; vacuous otherwise)
const std::vector<std::string>& scan_check_names();

void scan_graph(const Graph& g, long index,
                const std::vector<std::string>& checks,
                std::vector<CheckViolation>& out);

// jobs > 1 shards records by index and merges in index order, so the
// report is identical for every job count
ScanReport scan_corpus(std::istream& in, CorpusFormat format,
                       const std::vector<std::string>& checks, int jobs = 1);
ScanReport scan_graphs(const std::vector<Graph>& graphs,
                       const std::vector<std::string>& checks, int jobs = 1);

// ---- extremal counts over family-free hosts ----

struct ExtremalRow {
    int order = 0;
    long free_hosts = 0;  // family-free graphs of this order
    long best = -1;       // largest measured count among them, -1 if none
    std::string witness;  // canonical graph6 of the first maximiser
};

struct ExtremalReport {
    std::string theorem;
    int n = 0;
    bool connected = false;
    std::vector<ExtremalRow> rows;
};

// For each order 1..max_order, measures the statement's count (h-index
// for the h-statements) over all hosts free of its family at parameter n.
// Freeness must be decided exactly; a budget-exhausted search throws.
ExtremalReport extremal_search(const std::string& theorem, int n,
                               int max_order, bool connected_only);

// ---- two-colour triangle threshold ----

struct SmallRamseyReport {
    long colorings = 0;        // 2-colourings of K_6 examined
    bool all_forced = false;   // each has a monochromatic triangle
    bool pentagon_free = false; // the 5-cycle colouring of K_5 has none
    std::string pentagon_edges;
    bool ok() const { return all_forced && pentagon_free; }
};

// Certifies by exhaustion that 6 vertices force a monochromatic triangle
// in two colours and 5 do not.
SmallRamseyReport certify_small_ramsey();

} // namespace rk
