#pragma once

#include <string>
#include <vector>

#include "ramseykit/generators.hpp"
#include "ramseykit/graph.hpp"
#include "ramseykit/params.hpp"
#include "ramseykit/subgraph.hpp"

namespace rk {

// Statement ids understood by extract_witness / only_if_certify:
//   deg alpha c adh            connected statements, one bound c, n = c + 3
//   cor-deg cor-alpha cor-c cor-adh
//                              variants without connectivity, n = c + 1
//   h-deg h-alpha h-c h-adh    h-index statements, bounds (c1, c2),
//                              n = c1 + c2
const std::vector<std::string>& theorem_ids();
bool theorem_is_hindex(const std::string& id);
bool theorem_is_connected_variant(const std::string& id);

// the family catalogue a statement certifies against
std::string theorem_family(const std::string& id);

// the vertex parameter a statement measures
Param theorem_param(const std::string& id);

enum class WitnessMode {
    best_effort, // find some catalogue member; hypothesis checks skipped
    paper,       // check the statement's hypothesis first
};

enum class WitnessStatus { found, not_triggered, step_failed };

struct TraceEntry {
    std::string step;
    std::string detail;
};

struct WitnessReport {
    std::string theorem;
    int n = 0;
    WitnessStatus status = WitnessStatus::step_failed;
    GraphName member{};           // set iff found
    Embedding embedding;          // host vertices carrying the member
    std::vector<TraceEntry> trace;
    std::string failure;          // set unless found
};

struct WitnessOptions {
    WitnessMode mode = WitnessMode::best_effort;
    // paper mode: override for the hypothesis threshold. Mandatory for the
    // h-index statements, whose stated thresholds are Ramsey-type
    // quantities with no closed form.
    long threshold = -1;
    SearchLimits limits{};
};

// Runs the statement's constructive extraction pipeline on g with family
// parameter n, falling back to an exhaustive catalogue search. Every
// returned embedding is re-verified against the named member.
WitnessReport extract_witness(const Graph& g, const std::string& theorem,
                              int n, const WitnessOptions& opts = {});

// ---- the necessity direction: family members violate the bound ----

struct NecessityRow {
    GraphName name;
    int order = 0;
    long count = 0; // measured quantity on the member
    long bound = 0; // the statement's certified bound
    bool pass = false; // count > bound
};

struct NecessityReport {
    std::string theorem;
    long c1 = 0, c2 = 0;
    int n = 0;
    std::string note;
    std::vector<NecessityRow> rows;
    bool all_pass = false;
};

// Single-bound statements take c1 only (c2 ignored); h-index statements
// take both. Uses the same substitutions as extract_witness.
NecessityReport only_if_certify(const std::string& theorem, long c1,
                                long c2 = -1);

} // namespace rk
