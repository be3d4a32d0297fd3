#include "citnet/cli.hpp"

#include "citnet/acyclic.hpp"
#include "citnet/errors.hpp"
#include "citnet/extract.hpp"
#include "citnet/pajek.hpp"
#include "citnet/rank.hpp"
#include "citnet/stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

namespace citnet::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string_view to_string(Repair r) { return r == Repair::Shrink ? "shrink" : "preprint"; }

std::uint32_t crc32_of(const std::string& bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::string hex32(std::uint32_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(8) << std::setfill('0') << v;
    return s.str();
}

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Collects output files so the manifest can list them with checksums.
class Outputs {
public:
    explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

    void write(const std::string& name, const std::string& contents) {
        fs::create_directories(dir_);
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw Error("cannot write " + (dir_ / name).string());
        f << contents;
        if (!f) throw Error("cannot write " + (dir_ / name).string());
        files_.push_back({{"file", name}, {"bytes", contents.size()}, {"crc32", hex32(crc32_of(contents))}});
    }

    const fs::path& dir() const { return dir_; }
    const json& files() const { return files_; }

private:
    fs::path dir_;
    json files_ = json::array();
};

json parameters(const RunConfig& c) {
    json p;
    p["method"] = std::string(to_string(c.method));
    p["mode"] = c.mode ? json(std::string(to_string(*c.mode))) : json("auto");
    p["alpha"] = c.alpha;
    p["threshold"] = c.threshold ? json(*c.threshold) : json(nullptr);
    p["k"] = c.k;
    p["K"] = c.K ? json(*c.K) : json(nullptr);
    p["repair"] = c.repair ? json(std::string(to_string(*c.repair))) : json(nullptr);
    json deleted = json::array();
    for (auto [u, v] : c.delete_arcs) deleted.push_back({u, v});
    p["delete_arcs"] = deleted;
    p["normalize"] = c.normalize;
    p["log"] = c.log;
    p["single"] = c.single;
    p["top"] = c.top;
    p["tolerance"] = c.tolerance;
    p["max_iterations"] = c.max_iterations;
    return p;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Network load_input(const RunConfig& c) {
    if (!fs::exists(c.input)) throw Error("input file not found: " + c.input.string());
    Network net = read_pajek_file(c.input);
    if (c.delete_arcs.empty()) return net;
    std::vector<ArcId> drop;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        const Arc& e = net.arc(a);
        for (auto [u, v] : c.delete_arcs) {
            if (e.tail + 1 == u && e.head + 1 == v) drop.push_back(a);
        }
    }
    return without_arcs(net, drop);
}

Network repaired(const Network& net, Repair how) {
    const Network loop_free = remove_loops(net);
    if (how == Repair::Preprint) return preprint_transform(loop_free);
    return shrink_components(loop_free, strong_components(loop_free));
}

// Network ready for weighting: optional repair, then parallel arcs merged.
Network prepare(const RunConfig& c, const Network& input) {
    Network net = c.repair ? repaired(input, *c.repair) : input;
    if (!c.repair) {
        try {
            topological_order(net);
        } catch (const CycleError& e) {
            throw CycleError(e.vertex(), std::string(e.what()) + "; rerun with --repair shrink or --repair preprint");
        }
    }
    return simplify(net);
}

WeightVector log_vector(const WeightVector& w) {
    WeightResult tmp;
    tmp.method = Method::NPPC;
    tmp.arc = w;
    return log_transform(tmp).arc;
}

struct Weighted {
    Network net;
    StandardizedNetwork std_net;
    WeightResult result;
    WeightVector std_arcs;   // aligned with std_net.base
    WeightVector orig_arcs;  // aligned with net
    WeightVector orig_vertices;
    NumericMode mode = NumericMode::Float;
};

Weighted compute(const RunConfig& c, const Network& input) {
    Weighted w;
    w.net = prepare(c, input);
    w.std_net = standardize(w.net);
    w.mode = c.mode.value_or(w.net.arc_count() > kLogModeArcThreshold ? NumericMode::LogSpace : NumericMode::Float);
    const std::size_t m = w.net.arc_count();
    const std::size_t n = w.net.vertex_count();

    switch (c.method) {
        case Method::SPC: w.result = spc(w.std_net, w.mode); break;
        case Method::SPLC: w.result = splc(w.std_net, w.mode); break;
        case Method::SPNP:
            w.result = c.alpha == 1.0 ? spnp(w.std_net, w.mode) : aged_path_counts(w.std_net, c.alpha, w.mode);
            break;
        case Method::NPPC: w.result = nppc(w.net, w.mode); break;
        case Method::SUM: w.result = sum_weights(w.net, w.mode); break;
    }

    if (is_path_count(c.method)) {
        if (c.normalize) w.result = normalize(w.result);
        if (c.log) w.result = log_transform(w.result);
        w.std_arcs = w.result.arc;
        w.orig_arcs = w.result.arc.prefix(m);
        w.orig_vertices = w.result.vertex.prefix(n);
    } else {
        const bool scaled = c.normalize && c.method == Method::SUM;
        w.std_arcs = lift_closure_weights(w.std_net, w.result, scaled);
        w.orig_arcs = scaled ? w.result.arc_scaled : w.result.arc;
        w.orig_vertices = w.result.vertex;
        if (c.log) {
            w.result = log_transform(w.result);
            w.std_arcs = log_vector(w.std_arcs);
            w.orig_arcs = log_vector(w.orig_arcs);
            w.orig_vertices = w.result.vertex;
        }
    }
    return w;
}

void write_summary(std::ostream& out, const RunConfig& c, const Weighted& w, json* record) {
    const WeightVector& arcs = w.orig_arcs;
    std::vector<std::size_t> order(arcs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return arcs.compare(a, b) < 0; });

    const bool log_storage = arcs.mode() == NumericMode::LogSpace;
    bool overflow = false;
    for (std::size_t i = 0; i < arcs.size(); ++i) overflow |= std::isinf(arcs.to_double(i));

    out << "method      " << to_string(c.method);
    if (c.method == Method::SPNP && c.alpha != 1.0) out << " (aged, alpha " << format_real(c.alpha) << ")";
    out << '\n';
    out << "mode        " << to_string(w.mode) << (log_storage ? " (values are natural logarithms)" : "") << '\n';
    out << "vertices    " << w.net.vertex_count() << '\n';
    out << "arcs        " << w.net.arc_count() << '\n';
    if (w.result.total_flow) out << "totalFlow   " << w.result.total_flow->str() << '\n';
    if (!order.empty()) {
        out << "min         " << arcs.str(order.front()) << '\n';
        out << "median      " << arcs.str(order[(order.size() - 1) / 2]) << '\n';
        out << "max         " << arcs.str(order.back()) << '\n';
    }
    out << "normalized  " << (w.result.normalized || (c.normalize && c.method == Method::SUM) ? "yes" : "no") << '\n';
    out << "log         " << (c.log ? "yes" : "no") << '\n';
    if (c.log) out << "floored     " << w.result.floored_arcs.size() << '\n';
    out << "overflow    " << (overflow ? "values exceed double range (kept in " + std::string(to_string(w.mode)) + " mode)" : "none")
        << '\n';

    if (record) {
        json& r = *record;
        r["method"] = std::string(to_string(c.method));
        r["mode"] = std::string(to_string(w.mode));
        r["vertices"] = w.net.vertex_count();
        r["arcs"] = w.net.arc_count();
        r["totalFlow"] = w.result.total_flow ? json(w.result.total_flow->str()) : json(nullptr);
        if (!order.empty()) {
            r["min"] = arcs.str(order.front());
            r["median"] = arcs.str(order[(order.size() - 1) / 2]);
            r["max"] = arcs.str(order.back());
        }
        r["overflow"] = overflow;
        r["floored"] = w.result.floored_arcs.size();
    }
}

std::string subnetwork_file(const Network& parent, const Subnetwork& sub, const WeightVector& weights) {
    const Network net = materialize(parent, sub);
    const WeightVector w = weights.select(sub.arcs);
    return write_pajek(net, &w);
}

void run_stats(const RunConfig&, const Network& net, std::ostream& out, Outputs& files) {
    const NetworkStats st = network_stats(net);
    std::ostringstream s;
    s << "n      " << st.n << '\n'
      << "m      " << st.m << '\n'
      << "m0     " << st.loops << '\n'
      << "n0     " << st.isolated << '\n'
      << "nC     " << st.largest_weak << '\n'
      << "kC     " << st.nontrivial_weak << '\n'
      << "h      " << st.depth << '\n'
      << "din    " << st.max_in_degree << '\n'
      << "dout   " << st.max_out_degree << '\n'
      << "scc   ";
    if (st.scc_size_counts.empty()) s << " none";
    for (auto [size, count] : st.scc_size_counts) s << ' ' << size << ':' << count;
    s << '\n';
    out << s.str();
    files.write("stats.txt", s.str());
}

void run_repair(const RunConfig& c, const Network& input, std::ostream& out, Outputs& files) {
    const Repair how = c.repair.value_or(Repair::Shrink);
    const Partition strong = strong_components(input);
    std::vector<std::size_t> clu(strong.class_of);
    for (auto& x : clu) ++x;
    std::ostringstream clu_text;
    write_clu(clu_text, clu);
    files.write("components.clu", clu_text.str());

    const Network fixed = repaired(input, how);
    files.write("repaired.net", write_pajek(fixed));
    const StandardizedNetwork std_net = standardize(fixed);

    std::size_t nontrivial = 0;
    for (auto size : strong.class_sizes()) nontrivial += size > 1;
    out << "repair          " << to_string(how) << '\n'
        << "components      " << nontrivial << " nontrivial strong components\n"
        << "vertices        " << input.vertex_count() << " -> " << fixed.vertex_count() << '\n'
        << "arcs            " << input.arc_count() << " -> " << fixed.arc_count() << '\n'
        << "source s        " << (std_net.source + 1) << '\n'
        << "sink t          " << (std_net.sink + 1) << '\n'
        << "source arcs     " << std_net.source_arcs.size() << '\n'
        << "sink arcs       " << std_net.sink_arcs.size() << '\n'
        << "feedback arc    1\n";
}

void run_weights(const RunConfig& c, const Network& input, std::ostream& out, Outputs& files) {
    const Weighted w = compute(c, input);
    files.write("weights.net", write_pajek(w.net, &w.orig_arcs));
    std::ostringstream vec;
    write_vec(vec, w.orig_vertices);
    files.write("vertex_weights.vec", vec.str());

    json summary = {{"type", "summary"}};
    write_summary(out, c, w, &summary);
    if (c.jsonl) {
        std::ostringstream lines;
        lines << summary.dump() << '\n';
        for (ArcId a = 0; a < w.net.arc_count(); ++a) {
            const Arc& e = w.net.arc(a);
            json rec = {{"type", "arc"}, {"tail", e.tail + 1}, {"head", e.head + 1}, {"weight", w.orig_arcs.str(a)}};
            lines << rec.dump() << '\n';
        }
        for (VertexId v = 0; v < w.net.vertex_count(); ++v) {
            json rec = {{"type", "vertex"}, {"id", v + 1}, {"label", w.net.label(v)}, {"weight", w.orig_vertices.str(v)}};
            lines << rec.dump() << '\n';
        }
        files.write("weights.jsonl", lines.str());
    }
}

void run_path(const RunConfig& c, const Network& input, std::ostream& out, Outputs& files) {
    const Weighted w = compute(c, input);
    const bool cpm = c.command == "cpm";
    const Subnetwork sub = cpm ? cpm_path(w.std_net, w.std_arcs) : main_path(w.std_net, w.std_arcs, c.single);
    files.write(cpm ? "cpm.net" : "mainpath.net", subnetwork_file(w.net, sub, w.std_arcs));
    write_summary(out, c, w, nullptr);
    out << (cpm ? "cpm path    " : "main path   ") << sub.vertices.size() << " vertices, " << sub.arcs.size()
        << " arcs, weight " << format_real(path_weight(w.std_arcs, sub.arcs)) << '\n';
}

void run_cut(const RunConfig& c, const Network& input, std::ostream& out, Outputs& files) {
    const Weighted w = compute(c, input);
    const ArcCut cut = arc_cut(w.net, w.orig_arcs, *c.threshold);
    files.write("cut.net", subnetwork_file(w.net, cut.sub, w.orig_arcs));
    std::ostringstream table;
    table << "component,size,first_vertex\n";
    for (std::size_t i = 0; i < cut.components.size(); ++i) {
        table << (i + 1) << ',' << cut.components[i].vertices.size() << ',' << (cut.components[i].vertices.front() + 1)
              << '\n';
    }
    files.write("cut_components.csv", table.str());
    write_summary(out, c, w, nullptr);
    out << "threshold   " << format_real(*c.threshold) << '\n'
        << "cut         " << cut.sub.vertices.size() << " vertices, " << cut.sub.arcs.size() << " arcs, "
        << cut.components.size() << " components\n";
    for (std::size_t i = 0; i < cut.components.size(); ++i) {
        out << "  component " << (i + 1) << ": " << cut.components[i].vertices.size() << " vertices\n";
    }
}

void run_islands(const RunConfig& c, const Network& input, std::ostream& out, Outputs& files) {
    const Weighted w = compute(c, input);
    const std::size_t K = c.K.value_or(w.net.vertex_count());
    const IslandSet set = islands(w.net, w.orig_arcs, c.k, std::max<std::size_t>(K, c.k));

    std::ostringstream clu;
    write_clu(clu, island_partition(set, w.net.vertex_count()));
    files.write("islands.clu", clu.str());

    std::ostringstream table;
    table << "island  size  threshold  external_max  first_vertex\n";
    for (std::size_t i = 0; i < set.islands.size(); ++i) {
        const Island& is = set.islands[i];
        table << std::setw(6) << (i + 1) << "  " << std::setw(4) << is.vertices.size() << "  " << std::setw(9)
              << format_real(is.internal_min) << "  " << std::setw(12) << format_real(is.external_max) << "  "
              << w.net.label(is.vertices.front()) << '\n';
    }
    files.write("islands.txt", table.str());

    std::ostringstream freq;
    freq << "size,frequency\n";
    const auto f = island_size_frequencies(set);
    for (std::size_t s = 1; s < f.size(); ++s) freq << s << ',' << f[s] << '\n';
    files.write("island_sizes.csv", freq.str());

    write_summary(out, c, w, nullptr);
    out << "islands     " << set.islands.size() << " (k=" << set.k << ", K=" << set.K << ")\n" << table.str();
}

void run_hits(const RunConfig& c, const Network& input, std::ostream& out, Outputs& files) {
    const HitsScores scores = hits(input, c.tolerance, c.max_iterations);
    const auto rows = top_ranks(scores, c.top);
    std::ostringstream table, csv, hub, auth;
    write_rank_table(table, input, rows);
    write_rank_csv(csv, input, rows);
    write_vec(hub, scores.hub);
    write_vec(auth, scores.authority);
    files.write("hubs_authorities.txt", table.str());
    files.write("hubs_authorities.csv", csv.str());
    files.write("hub.vec", hub.str());
    files.write("authority.vec", auth.str());
    out << table.str();
    out << "iterations  " << scores.iterations << ", residual " << format_real(scores.residual)
        << (scores.converged ? "" : "  WARNING: not converged") << '\n';
}

}  // namespace

void validate(const RunConfig& c) {
    static const std::vector<std::string> commands{"stats", "repair", "weights", "mainpath", "cpm", "cut", "islands", "hits"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
        throw ArgumentError("unknown command '" + c.command + "'");
    }
    if (!(c.alpha > 0.0 && c.alpha <= 1.0)) throw ArgumentError("--alpha must lie in (0, 1]");
    if (c.alpha != 1.0 && c.method != Method::SPNP) throw ArgumentError("--alpha applies to --method spnp only");
    if (c.alpha != 1.0 && c.mode == NumericMode::ExactInteger) throw ArgumentError("--alpha < 1 needs float or log mode");
    if (c.normalize && c.method == Method::NPPC) throw ArgumentError("--normalize is not defined for nppc");
    if (c.command == "cut" && !c.threshold) throw ArgumentError("cut needs --threshold");
    if (c.threshold && !std::isfinite(*c.threshold)) throw ArgumentError("--threshold must be finite");
    if (c.command == "islands") {
        if (c.k < 1) throw ArgumentError("--k must be at least 1");
        if (c.K && *c.K < c.k) throw ArgumentError("--K must be at least --k");
    }
    if (c.command == "hits") {
        if (!(c.tolerance > 0.0)) throw ArgumentError("--tolerance must be positive");
        if (c.max_iterations == 0) throw ArgumentError("--max-iter must be positive");
    }
    for (auto [u, v] : c.delete_arcs) {
        if (u == 0 || v == 0) throw ArgumentError("--delete-arc ids are 1-based");
    }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    Outputs files(c.out_dir);
    int status = kOk;
    std::string message;
    try {
        validate(c);
        const Network input = load_input(c);
        if (c.command == "stats") {
            run_stats(c, input, out, files);
        } else if (c.command == "repair") {
            run_repair(c, input, out, files);
        } else if (c.command == "weights") {
            run_weights(c, input, out, files);
        } else if (c.command == "mainpath" || c.command == "cpm") {
            run_path(c, input, out, files);
        } else if (c.command == "cut") {
            run_cut(c, input, out, files);
        } else if (c.command == "islands") {
            run_islands(c, input, out, files);
        } else {
            run_hits(c, input, out, files);
        }
    } catch (const ParseError& e) {
        status = kParseFailure;
        message = std::string("parse error: ") + e.what();
    } catch (const CycleError& e) {
        status = kCyclic;
        message = std::string("cyclic network: ") + e.what();
    } catch (const OverflowError& e) {
        status = kOverflow;
        message = std::string("overflow: ") + e.what();
    } catch (const ArgumentError& e) {
        status = kBadArguments;
        message = std::string("bad arguments: ") + e.what();
    } catch (const Error& e) {
        status = kIoFailure;
        message = std::string("error: ") + e.what();
    } catch (const fs::filesystem_error& e) {
        status = kIoFailure;
        message = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
        status = kInternal;
        message = std::string("internal error: ") + e.what();
    }
    if (status != kOk) err << "citnet: " << message << '\n';

    try {
        json manifest;
        manifest["tool"] = "citnet";
        manifest["version"] = kVersion;
        manifest["command"] = c.command;
        manifest["parameters"] = parameters(c);
        json input = {{"path", c.input.string()}};
        if (fs::is_regular_file(c.input)) {
            const std::string bytes = read_bytes(c.input);
            input["bytes"] = bytes.size();
            input["crc32"] = hex32(crc32_of(bytes));
        }
        manifest["input"] = input;
        manifest["outputs"] = files.files();
        manifest["status"] = status;
        if (status != kOk) manifest["error"] = message;
        manifest["created"] = utc_now();
        fs::create_directories(c.out_dir);
        std::ofstream(c.out_dir / "manifest.json") << manifest.dump(2) << '\n';
    } catch (const std::exception& e) {
        err << "citnet: cannot write manifest: " << e.what() << '\n';
        if (status == kOk) status = kIoFailure;
    }
    return status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Citation network analysis: path-count weights, main paths, islands, hubs and authorities"};
    app.require_subcommand(1);
    RunConfig c;
    std::string method = "spc";
    std::string mode;
    std::string repair;
    std::vector<std::string> deletes;
    std::optional<std::size_t> K;

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"stats", "Network characteristics (works on cyclic networks)"},
        {"repair", "Remove loops and cycles; writes repaired.net and components.clu"},
        {"weights", "Arc and vertex weights"},
        {"mainpath", "Greedy main path subnetwork"},
        {"cpm", "Critical path (maximum total weight) subnetwork"},
        {"cut", "Arc-cut at a weight threshold"},
        {"islands", "Maximal (k,K)-islands"},
        {"hits", "Hubs and authorities ranking"},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("input", c.input, "Pajek .net file")->required();
        sub->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--method", method, "spc|splc|spnp|nppc|sum")
            ->check(CLI::IsMember({"spc", "splc", "spnp", "nppc", "sum"}))
            ->capture_default_str();
        sub->add_option("--mode", mode, "float|exact|log (default: log above 10^6 arcs, else float)")
            ->check(CLI::IsMember({"float", "exact", "log"}));
        sub->add_option("--alpha", c.alpha, "Aging factor in (0,1] for spnp")->capture_default_str();
        sub->add_option("--threshold", c.threshold, "Arc-cut threshold");
        sub->add_option("--k", c.k, "Smallest island size")->capture_default_str();
        sub->add_option("--K", K, "Largest island size (default: n)");
        sub->add_option("--repair", repair, "shrink|preprint")->check(CLI::IsMember({"shrink", "preprint"}));
        sub->add_option("--delete-arc", deletes, "Delete arcs tail,head (1-based) before anything else");
        sub->add_flag("--normalize", c.normalize, "Divide by the total flow (sum: divide by n)");
        sub->add_flag("--log", c.log, "Natural logarithm of the weights");
        sub->add_flag("--single", c.single, "Main path: break ties by smallest head id");
        sub->add_flag("--jsonl", c.jsonl, "weights: also write weights.jsonl");
        sub->add_option("--top", c.top, "hits: rows in the ranking table")->capture_default_str();
        sub->add_option("--tolerance", c.tolerance, "hits: convergence tolerance")->capture_default_str();
        sub->add_option("--max-iter", c.max_iterations, "hits: iteration limit")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "citnet: bad arguments: " << e.what() << '\n';
        return kBadArguments;
    }

    c.command = app.get_subcommands().front()->get_name();
    c.method = *parse_method(method);
    if (!mode.empty()) c.mode = parse_numeric_mode(mode);
    if (!repair.empty()) c.repair = repair == "shrink" ? Repair::Shrink : Repair::Preprint;
    c.K = K;
    for (const auto& d : deletes) {
        const auto comma = d.find_first_of(",:");
        try {
            if (comma == std::string::npos) throw std::invalid_argument(d);
            c.delete_arcs.emplace_back(std::stoull(d.substr(0, comma)), std::stoull(d.substr(comma + 1)));
        } catch (const std::exception&) {
            err << "citnet: bad arguments: --delete-arc expects tail,head but got '" << d << "'\n";
            return kBadArguments;
        }
    }
    return run(c, out, err);
}

}  // namespace citnet::cli
