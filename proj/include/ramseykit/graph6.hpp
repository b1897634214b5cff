#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramseykit/graph.hpp"

namespace rk {

// graph6: header encodes the order (one char for n <= 62, '~' + 3 chars up
// to n = 258047), payload packs the upper triangle column by column
// (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), 6 bits per printable char
// (value + 63), zero padding in the last char. Decode rejects malformed
// headers, wrong payload length and nonzero padding bits.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// "n m" on the first line, then m lines "u v"
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& block);

// deterministic Graphviz output; optional per-vertex labels
std::string to_dot(const Graph& g,
                   const std::vector<std::string>& labels = {});

enum class CorpusFormat { graph6, edge_list };

struct CorpusDiagnostic {
    long line;
    std::string message;
};

// Streams graphs out of a text corpus. graph6: one record per line, blank
// lines and a leading ">>graph6<<" marker are skipped. edge_list: blocks as
// above, separated by blank lines; '#' starts a comment line.
// strict: malformed record throws codec_error (with line number).
// lenient: malformed record is skipped and logged into diagnostics().
class CorpusStream {
public:
    CorpusStream(std::istream& in, CorpusFormat format, bool strict = true);

    std::optional<Graph> next();

    long records_read() const { return records_; }
    const std::vector<CorpusDiagnostic>& diagnostics() const { return diags_; }

private:
    std::optional<Graph> next_graph6();
    std::optional<Graph> next_edge_list();

    std::istream& in_;
    CorpusFormat format_;
    bool strict_;
    long line_ = 0;
    long records_ = 0;
    std::vector<CorpusDiagnostic> diags_;
};

} // namespace rk
