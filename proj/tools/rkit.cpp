// rkit: generators, parameter analysis, family freeness, witness
// extraction, invariant scans, and small certifications over one CLI.
//
// Exit codes: 0 success, 1 a check reported violations, 2 usage error,
// 3 I/O or codec error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseykit/engines.hpp"
#include "ramseykit/errors.hpp"
#include "ramseykit/generators.hpp"
#include "ramseykit/graph6.hpp"
#include "ramseykit/harness.hpp"
#include "ramseykit/params.hpp"
#include "ramseykit/subgraph.hpp"
#include "ramseykit/witness.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct io_options {
    std::vector<std::string> graph6;  // inline graphs
    std::string input;                // corpus path, "-" = stdin
    std::string format = "json";     // json | table
};

void add_input_flags(CLI::App* cmd, io_options& io) {
    cmd->add_option("--graph6", io.graph6,
                    "inline graph6 record (repeatable)");
    cmd->add_option("--input", io.input,
                    "graph6 corpus path, '-' for stdin");
}

void add_format_flag(CLI::App* cmd, io_options& io) {
    cmd->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
}

// inline records first, then the corpus; strict parsing
std::vector<rk::Graph> load_graphs(const io_options& io) {
    std::vector<rk::Graph> graphs;
    for (const std::string& s : io.graph6)
        graphs.push_back(rk::from_graph6(s));
    auto drain = [&](std::istream& in) {
        rk::CorpusStream stream(in, rk::CorpusFormat::graph6,
                                /*strict=*/true);
        while (auto g = stream.next()) graphs.push_back(std::move(*g));
    };
    if (io.input == "-") {
        drain(std::cin);
    } else if (!io.input.empty()) {
        std::ifstream f(io.input);
        if (!f) throw rk::codec_error("cannot open " + io.input, 0);
        drain(f);
    } else if (io.graph6.empty()) {
        drain(std::cin);
    }
    if (graphs.empty())
        throw rk::bad_parameter("no input graphs");
    return graphs;
}

rk::GraphName parse_name_or_throw(const std::string& text) {
    auto name = rk::parse_name(text);
    if (!name) throw rk::bad_parameter("unrecognised graph name: " + text);
    return *name;
}

// "<theorem>:<n>"
std::pair<std::string, int> parse_family_spec(const std::string& spec) {
    auto pos = spec.rfind(':');
    if (pos == std::string::npos)
        throw rk::bad_parameter("family spec must be <theorem>:<n>");
    std::string id = spec.substr(0, pos);
    const auto& ids = rk::theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw rk::bad_parameter("unknown statement id: " + id);
    int n = 0;
    try {
        n = std::stoi(spec.substr(pos + 1));
    } catch (const std::exception&) {
        throw rk::bad_parameter("family spec must be <theorem>:<n>");
    }
    if (n < 1) throw rk::bad_parameter("family parameter must be >= 1");
    return {id, n};
}

void emit(const ordered_json& j, const io_options& io,
          const std::function<void(std::ostream&)>& table) {
    if (io.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        table(std::cout);
}

ordered_json name_json(const rk::GraphName& name) {
    return rk::format_name(name);
}

// ---------- gen ----------

int cmd_gen(const std::vector<std::string>& names,
            const std::string& format) {
    for (const std::string& text : names) {
        rk::Graph g = rk::named_graph(parse_name_or_throw(text));
        if (format == "graph6") {
            std::cout << rk::to_graph6(g) << "\n";
        } else if (format == "edge-list") {
            std::cout << rk::to_edge_list(g);
        } else if (format == "dot") {
            std::cout << rk::to_dot(g);
        } else if (format == "json") {
            ordered_json j;
            j["name"] = text;
            j["order"] = g.order();
            j["size"] = g.size();
            j["graph6"] = rk::to_graph6(g);
            std::cout << j.dump(2) << "\n";
        } else { // table
            std::cout << text << "\t" << g.order() << "\t" << g.size()
                      << "\t" << rk::to_graph6(g) << "\n";
        }
    }
    return kExitOk;
}

// ---------- analyze ----------

int cmd_analyze(const io_options& io, const std::string& which) {
    std::vector<rk::Param> kinds;
    if (which == "all")
        kinds = {rk::Param::degree, rk::Param::alpha, rk::Param::c,
                 rk::Param::adh};
    else {
        auto p = rk::param_from_name(which);
        if (!p) throw rk::bad_parameter("unknown parameter: " + which);
        kinds = {*p};
    }
    ordered_json out = ordered_json::array();
    for (const rk::Graph& g : load_graphs(io)) {
        ordered_json j;
        j["graph6"] = rk::to_graph6(g);
        j["order"] = g.order();
        j["size"] = g.size();
        j["connected"] = rk::is_connected(g);
        for (rk::Param k : kinds) {
            ordered_json pj;
            pj["values"] = rk::vertex_params(g, k);
            pj["nontrivial"] = rk::nontrivial_count(g, k, 2);
            pj["h_index"] = rk::h_index(g, k);
            j[rk::param_name(k)] = pj;
        }
        out.push_back(j);
    }
    emit(out, io, [&](std::ostream& os) {
        for (const auto& j : out) {
            os << j["graph6"].get<std::string>() << "\tn="
               << j["order"] << "\tm=" << j["size"] << "\n";
            for (rk::Param k : kinds) {
                const auto& pj = j[rk::param_name(k)];
                os << "  " << rk::param_name(k) << ":";
                for (const auto& v : pj["values"]) os << " " << v;
                os << "  (nontrivial " << pj["nontrivial"] << ", h "
                   << pj["h_index"] << ")\n";
            }
        }
    });
    return kExitOk;
}

// ---------- free ----------

int cmd_free(const io_options& io, const std::string& spec) {
    auto [id, n] = parse_family_spec(spec);
    std::vector<rk::FamilyMember> family =
        rk::make_family(rk::theorem_family(id), n);
    std::vector<rk::Graph> members;
    for (auto& m : family) members.push_back(m.graph);
    ordered_json out = ordered_json::array();
    bool any_inconclusive = false;
    for (const rk::Graph& g : load_graphs(io)) {
        rk::FreenessReport fr = rk::is_family_free(g, members);
        ordered_json j;
        j["graph6"] = rk::to_graph6(g);
        switch (fr.verdict) {
        case rk::Freeness::free: j["verdict"] = "free"; break;
        case rk::Freeness::not_free: j["verdict"] = "not-free"; break;
        case rk::Freeness::inconclusive:
            j["verdict"] = "inconclusive";
            any_inconclusive = true;
            break;
        }
        if (fr.verdict == rk::Freeness::not_free) {
            j["member"] = name_json(family[fr.member].name);
            j["embedding"] = fr.embedding;
        }
        j["nodes"] = fr.nodes;
        out.push_back(j);
    }
    (void)any_inconclusive;
    emit(out, io, [&](std::ostream& os) {
        for (const auto& j : out) {
            os << j["graph6"].get<std::string>() << "\t"
               << j["verdict"].get<std::string>();
            if (j.contains("member"))
                os << "\t" << j["member"].get<std::string>();
            os << "\n";
        }
    });
    return kExitOk;
}

// ---------- le ----------

int cmd_le(const io_options& io, const std::vector<std::string>& left,
           const std::vector<std::string>& right) {
    std::vector<rk::Graph> L, R;
    for (const std::string& s : left)
        L.push_back(rk::named_graph(parse_name_or_throw(s)));
    for (const std::string& s : right)
        R.push_back(rk::named_graph(parse_name_or_throw(s)));
    rk::FamilyLe le = rk::family_le(L, R);
    ordered_json j;
    j["holds"] = le.holds;
    j["inconclusive"] = le.inconclusive;
    ordered_json certs = ordered_json::array();
    for (std::size_t r = 0; r < le.certificates.size(); ++r) {
        ordered_json c;
        c["right"] = right[r];
        if (le.certificates[r].left >= 0) {
            c["left"] = left[le.certificates[r].left];
            c["embedding"] = le.certificates[r].embedding;
        }
        certs.push_back(c);
    }
    j["certificates"] = certs;
    emit(j, io, [&](std::ostream& os) {
        os << (le.holds ? "holds" : le.inconclusive ? "inconclusive"
                                                    : "fails")
           << "\n";
        for (const auto& c : certs) {
            os << "  " << c["right"].get<std::string>();
            if (c.contains("left"))
                os << " contains " << c["left"].get<std::string>();
            else
                os << " contains no left member";
            os << "\n";
        }
    });
    return kExitOk;
}

// ---------- witness ----------

const char* status_name(rk::WitnessStatus s) {
    switch (s) {
    case rk::WitnessStatus::found: return "found";
    case rk::WitnessStatus::not_triggered: return "not-triggered";
    default: return "step-failed";
    }
}

int cmd_witness(const io_options& io, const std::string& theorem, int n,
                const std::string& mode, long threshold) {
    const auto& ids = rk::theorem_ids();
    if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
        throw rk::bad_parameter("unknown statement id: " + theorem);
    rk::WitnessOptions opts;
    opts.mode = mode == "paper" ? rk::WitnessMode::paper
                                : rk::WitnessMode::best_effort;
    opts.threshold = threshold;
    ordered_json out = ordered_json::array();
    for (const rk::Graph& g : load_graphs(io)) {
        rk::WitnessReport rep = rk::extract_witness(g, theorem, n, opts);
        ordered_json j;
        j["graph6"] = rk::to_graph6(g);
        j["theorem"] = rep.theorem;
        j["n"] = rep.n;
        j["status"] = status_name(rep.status);
        if (rep.status == rk::WitnessStatus::found) {
            j["member"] = name_json(rep.member);
            j["embedding"] = rep.embedding;
        } else {
            j["failure"] = rep.failure;
        }
        ordered_json trace = ordered_json::array();
        for (const rk::TraceEntry& t : rep.trace)
            trace.push_back(ordered_json{{"step", t.step},
                                         {"detail", t.detail}});
        j["trace"] = trace;
        out.push_back(j);
    }
    emit(out, io, [&](std::ostream& os) {
        for (const auto& j : out) {
            os << j["graph6"].get<std::string>() << "\t"
               << j["status"].get<std::string>();
            if (j.contains("member")) {
                os << "\t" << j["member"].get<std::string>() << "\t[";
                bool first = true;
                for (const auto& v : j["embedding"]) {
                    os << (first ? "" : " ") << v;
                    first = false;
                }
                os << "]";
            }
            os << "\n";
        }
    });
    return kExitOk;
}

// ---------- only-if ----------

int cmd_only_if(const io_options& io, const std::string& theorem, long c1,
                long c2) {
    rk::NecessityReport rep = rk::only_if_certify(theorem, c1, c2);
    ordered_json j;
    j["theorem"] = rep.theorem;
    j["c1"] = rep.c1;
    j["c2"] = rep.c2;
    j["n"] = rep.n;
    if (!rep.note.empty()) j["note"] = rep.note;
    ordered_json rows = ordered_json::array();
    for (const rk::NecessityRow& r : rep.rows) {
        ordered_json rj;
        rj["member"] = name_json(r.name);
        rj["order"] = r.order;
        rj["count"] = r.count;
        rj["bound"] = r.bound;
        rj["pass"] = r.pass;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    j["all_pass"] = rep.all_pass;
    emit(j, io, [&](std::ostream& os) {
        os << rep.theorem << " n=" << rep.n << "\n";
        for (const auto& r : rows)
            os << "  " << r["member"].get<std::string>() << "\tcount "
               << r["count"] << " > " << r["bound"] << "\t"
               << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    });
    return rep.all_pass ? kExitOk : kExitViolation;
}

// ---------- scan ----------

int cmd_scan(const io_options& io, const std::vector<std::string>& checks,
             int enumerate_order, bool connected, int jobs) {
    std::vector<std::string> use =
        checks.empty() ? rk::scan_check_names() : checks;
    rk::ScanReport rep;
    if (enumerate_order > 0) {
        rep = rk::scan_graphs(
            rk::enumerate_graphs(enumerate_order, connected), use, jobs);
    } else {
        if (io.input.empty() || io.input == "-") {
            rep = rk::scan_corpus(std::cin, rk::CorpusFormat::graph6, use,
                                  jobs);
        } else {
            std::ifstream f(io.input);
            if (!f) throw rk::codec_error("cannot open " + io.input, 0);
            rep = rk::scan_corpus(f, rk::CorpusFormat::graph6, use, jobs);
        }
    }
    ordered_json j;
    j["scanned"] = rep.scanned;
    j["checks"] = rep.checks;
    ordered_json vio = ordered_json::array();
    for (const rk::CheckViolation& v : rep.violations)
        vio.push_back(ordered_json{{"index", v.index},
                                   {"graph6", v.graph6},
                                   {"check", v.check},
                                   {"detail", v.detail}});
    j["violations"] = vio;
    ordered_json diags = ordered_json::array();
    for (const rk::CorpusDiagnostic& d : rep.diagnostics)
        diags.push_back(ordered_json{{"line", d.line},
                                     {"message", d.message}});
    j["diagnostics"] = diags;
    j["ok"] = rep.ok();
    emit(j, io, [&](std::ostream& os) {
        os << "scanned " << rep.scanned << ", violations "
           << rep.violations.size() << ", diagnostics "
           << rep.diagnostics.size() << "\n";
        for (const rk::CheckViolation& v : rep.violations)
            os << "  #" << v.index << " " << v.graph6 << " " << v.check
               << ": " << v.detail << "\n";
        for (const rk::CorpusDiagnostic& d : rep.diagnostics)
            os << "  line " << d.line << ": " << d.message << "\n";
    });
    return rep.ok() ? kExitOk : kExitViolation;
}

// ---------- extremal ----------

int cmd_extremal(const io_options& io, const std::string& spec,
                 const std::string& param, int max_order, bool connected) {
    auto [id, n] = parse_family_spec(spec);
    if (!param.empty() &&
        param != rk::param_name(rk::theorem_param(id)))
        throw rk::bad_parameter("statement " + id + " measures " +
                                rk::param_name(rk::theorem_param(id)));
    rk::ExtremalReport rep = rk::extremal_search(id, n, max_order, connected);
    ordered_json j;
    j["theorem"] = rep.theorem;
    j["n"] = rep.n;
    j["connected"] = rep.connected;
    ordered_json rows = ordered_json::array();
    for (const rk::ExtremalRow& r : rep.rows) {
        ordered_json rj;
        rj["order"] = r.order;
        rj["free_hosts"] = r.free_hosts;
        rj["best"] = r.best;
        rj["witness"] = r.witness;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    emit(j, io, [&](std::ostream& os) {
        os << rep.theorem << ":" << rep.n
           << (rep.connected ? " connected" : "") << "\n";
        for (const rk::ExtremalRow& r : rep.rows)
            os << "  order " << r.order << "\tfree " << r.free_hosts
               << "\tbest " << r.best << "\t" << r.witness << "\n";
    });
    return kExitOk;
}

// ---------- ramsey ----------

int cmd_ramsey_certify(const io_options& io) {
    rk::SmallRamseyReport rep = rk::certify_small_ramsey();
    ordered_json j;
    j["colorings"] = rep.colorings;
    j["all_forced"] = rep.all_forced;
    j["pentagon_free"] = rep.pentagon_free;
    j["pentagon_edges"] = rep.pentagon_edges;
    j["ok"] = rep.ok();
    emit(j, io, [&](std::ostream& os) {
        os << "colourings " << rep.colorings << ", all forced "
           << (rep.all_forced ? "yes" : "NO") << ", pentagon free "
           << (rep.pentagon_free ? "yes" : "NO") << "\n";
    });
    return rep.ok() ? kExitOk : kExitViolation;
}

// ---------- domination / prune ----------

int cmd_domination(const io_options& io, const std::string& mode_text) {
    rk::DomMode mode = rk::DomMode::plain;
    if (mode_text == "connected") mode = rk::DomMode::connected;
    else if (mode_text == "total") mode = rk::DomMode::total;
    else if (mode_text != "plain")
        throw rk::bad_parameter("unknown domination mode: " + mode_text);
    ordered_json out = ordered_json::array();
    for (const rk::Graph& g : load_graphs(io)) {
        rk::VertexSet d = rk::dominating_set(g, mode);
        ordered_json j;
        j["graph6"] = rk::to_graph6(g);
        j["mode"] = mode_text;
        j["set"] = d.to_vector();
        j["size"] = d.count();
        out.push_back(j);
    }
    emit(out, io, [&](std::ostream& os) {
        for (const auto& j : out) {
            os << j["graph6"].get<std::string>() << "\t{";
            bool first = true;
            for (const auto& v : j["set"]) {
                os << (first ? "" : " ") << v;
                first = false;
            }
            os << "}\n";
        }
    });
    return kExitOk;
}

int cmd_prune(const io_options& io, const std::string& rule_text) {
    rk::PruneRule rule;
    if (rule_text == "degree1") rule = rk::PruneRule::degree1;
    else if (rule_text == "alpha1") rule = rk::PruneRule::alpha1;
    else throw rk::bad_parameter("unknown prune rule: " + rule_text);
    ordered_json out = ordered_json::array();
    for (const rk::Graph& g : load_graphs(io)) {
        rk::PruneLog log = rk::prune(g, rule);
        ordered_json j;
        j["graph6"] = rk::to_graph6(g);
        j["pruned"] = rk::to_graph6(log.graph);
        j["kept"] = log.kept;
        j["removed"] = log.removed;
        out.push_back(j);
    }
    emit(out, io, [&](std::ostream& os) {
        for (const auto& j : out)
            os << j["graph6"].get<std::string>() << "\t-> "
               << j["pruned"].get<std::string>() << "\t(removed "
               << j["removed"].size() << ")\n";
    });
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for vertex parameters, forbidden families, "
                 "and their finite certificates"};
    app.require_subcommand(1);
    // let --timings appear after the subcommand as well
    app.fallthrough();
    bool timings = false;
    app.add_flag("--timings", timings, "elapsed time to stderr");

    io_options io;

    // gen
    std::vector<std::string> gen_names;
    std::string gen_format = "graph6";
    CLI::App* gen = app.add_subcommand("gen", "emit named graphs");
    gen->add_option("names", gen_names, "graph names, e.g. K5 CK3 K2,4")
        ->required();
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"graph6", "edge-list", "dot", "json",
                               "table"}));

    // analyze
    std::string analyze_param = "all";
    CLI::App* analyze =
        app.add_subcommand("analyze", "vertex parameter tables");
    add_input_flags(analyze, io);
    add_format_flag(analyze, io);
    analyze->add_option("--param", analyze_param,
                        "all, deg, alpha, c, or adh");

    // free
    std::string free_spec;
    CLI::App* fre = app.add_subcommand("free", "family freeness verdicts");
    add_input_flags(fre, io);
    add_format_flag(fre, io);
    fre->add_option("--family", free_spec, "<theorem>:<n>")->required();

    // le
    std::vector<std::string> le_left, le_right;
    CLI::App* le = app.add_subcommand("le", "family containment order");
    add_format_flag(le, io);
    le->add_option("--left", le_left, "left family member (repeatable)")
        ->required();
    le->add_option("--right", le_right, "right family member (repeatable)")
        ->required();

    // witness
    std::string wit_theorem, wit_mode = "best-effort";
    int wit_n = 0;
    long wit_threshold = -1;
    CLI::App* wit = app.add_subcommand("witness", "member extraction");
    add_input_flags(wit, io);
    add_format_flag(wit, io);
    wit->add_option("--theorem", wit_theorem, "statement id")->required();
    wit->add_option("--n", wit_n, "family parameter")->required();
    wit->add_option("--mode", wit_mode, "best-effort or paper")
        ->check(CLI::IsMember({"best-effort", "paper"}));
    wit->add_option("--threshold", wit_threshold,
                    "paper mode: explicit hypothesis threshold");

    // only-if
    std::string oi_theorem;
    long oi_c1 = 0, oi_c2 = -1;
    CLI::App* oi =
        app.add_subcommand("only-if", "necessity counts for a statement");
    add_format_flag(oi, io);
    oi->add_option("--theorem", oi_theorem, "statement id")->required();
    oi->add_option("--c1", oi_c1, "first bound")->required();
    oi->add_option("--c2", oi_c2, "second bound (h statements)");

    // scan
    std::vector<std::string> scan_checks;
    int scan_enum = 0, scan_jobs = 1;
    bool scan_connected = false;
    CLI::App* scan = app.add_subcommand("scan", "invariant checks");
    add_input_flags(scan, io);
    scan->add_option("--corpus", io.input, "alias for --input")
        ->excludes(scan->get_option("--input"));
    add_format_flag(scan, io);
    scan->add_option("--checks", scan_checks,
                     "chain, cut-adh, dom-cut (default: all)")
        ->delimiter(',');
    scan->add_option("--enumerate", scan_enum,
                     "scan all graphs of this order instead of a corpus");
    scan->add_flag("--connected", scan_connected,
                   "restrict the enumeration to connected graphs");
    scan->add_option("--jobs", scan_jobs, "worker threads")
        ->check(CLI::Range(1, 16));

    // extremal
    std::string ext_spec, ext_param;
    int ext_max = rk::kEnumerateCap, ext_jobs = 1;
    bool ext_connected = false;
    CLI::App* ext =
        app.add_subcommand("extremal", "largest counts on free hosts");
    add_format_flag(ext, io);
    ext->add_option("--family", ext_spec, "<theorem>:<n>")->required();
    ext->add_option("--param", ext_param, "measured parameter (optional)");
    ext->add_option("--max-n", ext_max, "largest order");
    ext->add_flag("--connected", ext_connected, "connected hosts only");
    ext->add_option("--jobs", ext_jobs, "accepted for symmetry; the result "
                                        "never depends on it")
        ->check(CLI::Range(1, 16));

    // ramsey
    CLI::App* ram = app.add_subcommand("ramsey", "small certifications");
    CLI::App* ram_cert = ram->add_subcommand(
        "certify-small", "exhaustive two-colour triangle threshold");
    add_format_flag(ram_cert, io);
    ram->require_subcommand(1);

    // domination
    std::string dom_mode = "plain";
    CLI::App* dom =
        app.add_subcommand("domination", "minimum dominating sets");
    add_input_flags(dom, io);
    add_format_flag(dom, io);
    dom->add_option("--mode", dom_mode, "plain, connected, or total");

    // prune
    std::string prune_rule = "degree1";
    CLI::App* pru = app.add_subcommand("prune", "iterated vertex deletion");
    add_input_flags(pru, io);
    add_format_flag(pru, io);
    pru->add_option("--rule", prune_rule, "degree1 or alpha1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help text
        app.exit(e);
        return kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (gen->parsed()) code = cmd_gen(gen_names, gen_format);
        else if (analyze->parsed()) code = cmd_analyze(io, analyze_param);
        else if (fre->parsed()) code = cmd_free(io, free_spec);
        else if (le->parsed()) code = cmd_le(io, le_left, le_right);
        else if (wit->parsed())
            code = cmd_witness(io, wit_theorem, wit_n, wit_mode,
                               wit_threshold);
        else if (oi->parsed()) code = cmd_only_if(io, oi_theorem, oi_c1,
                                                  oi_c2);
        else if (scan->parsed())
            code = cmd_scan(io, scan_checks, scan_enum, scan_connected,
                            scan_jobs);
        else if (ext->parsed())
            code = cmd_extremal(io, ext_spec, ext_param, ext_max,
                                ext_connected);
        else if (ram->parsed()) code = cmd_ramsey_certify(io);
        else if (dom->parsed()) code = cmd_domination(io, dom_mode);
        else if (pru->parsed()) code = cmd_prune(io, prune_rule);
    } catch (const rk::codec_error& e) {
        std::cerr << "rkit: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << "\n";
        code = kExitIo;
    } catch (const rk::bad_parameter& e) {
        std::cerr << "rkit: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const rk::unknown_family& e) {
        std::cerr << "rkit: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const rk::error& e) {
        std::cerr << "rkit: " << e.what() << "\n";
        code = kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "rkit: " << e.what() << "\n";
        code = kExitIo;
    }
    if (timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "elapsed " << ms << " ms\n";
    }
    return code;
}
