#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rdalpha/closed_form.hpp"
#include "rdalpha/errors.hpp"
#include "rdalpha/graph.hpp"
#include "rdalpha/groups.hpp"
#include "rdalpha/io.hpp"
#include "rdalpha/joined_union.hpp"
#include "rdalpha/spectral.hpp"

namespace {

using namespace rdalpha;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisconnected = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> parse_alphas(const std::string& csv) {
    std::vector<double> alphas;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double a;
        try {
            a = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad alpha value '" + item + "'");
        }
        if (pos != item.size()) throw ParseError("bad alpha value '" + item + "'");
        if (!(a >= 0.0 && a <= 1.0)) {
            throw ParseError("alpha " + item + " outside [0, 1]");
        }
        alphas.push_back(a);
    }
    if (alphas.empty()) throw ParseError("alpha list is empty");
    return alphas;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw ParseError("cannot open output file: " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

std::string spectrum_human(const Spectrum& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : s.entries()) {
        if (!first) os << ", ";
        first = false;
        os << fmt(e.value);
        if (e.multiplicity > 1) os << " x" << e.multiplicity;
    }
    return os.str();
}

ordered_json deviations_to_json(const std::vector<PrintedDeviation>& devs) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : devs) {
        arr.push_back({{"label", d.label},
                       {"candidate", d.candidate},
                       {"derived", d.derived},
                       {"deviation", d.abs_dev}});
    }
    return arr;
}

void print_deviations_human(std::ostream& out,
                            const std::vector<PrintedDeviation>& devs) {
    if (devs.empty()) return;
    out << "formula cross-checks (candidate vs derived):\n";
    for (const auto& d : devs) {
        out << "  " << d.label << ": ";
        if (std::isnan(d.candidate)) {
            if (std::isnan(d.abs_dev)) {
                out << "derived " << fmt(d.derived) << "\n";
            } else {
                out << "deviation " << fmt(d.abs_dev)
                    << (d.abs_dev > 1e-9 ? "  << DEVIATES" : "") << "\n";
            }
        } else {
            out << fmt(d.candidate) << " vs " << fmt(d.derived) << " (dev "
                << fmt(d.abs_dev) << ")" << (d.abs_dev > 1e-9 ? "  << DEVIATES" : "")
                << "\n";
        }
    }
}

/// Candidate quotient-entry and eliminated-root formulas for a joined-union
/// plan, checked against the operational quotient. The candidate diagonal
/// uses (n_i - r_i - 1)/2 + m_i and the candidate eliminated root carries a
/// "+ (1-alpha) n_i'" term; both differ from the equitable-partition values.
std::vector<PrintedDeviation> theorem_quotient_deviations(
    const JoinedUnionPlan& plan, double alpha) {
    std::vector<PrintedDeviation> out;
    std::vector<BlockData> bd = block_data(plan);
    QuotientMatrix op = theorem21_quotient(plan, alpha);
    for (int i = 0; i < plan.block_count(); ++i) {
        double ni_prime = bd[i].r + 0.5 * (bd[i].n - 1 - bd[i].r);
        double cand_diag = alpha * (0.5 * (bd[i].n - bd[i].r - 1) + bd[i].m) +
                           (1.0 - alpha) * ni_prime;
        out.push_back({"joined-union quotient diagonal, block " + std::to_string(i),
                       cand_diag, op(i, i), std::abs(cand_diag - op(i, i))});
        double derived_root = alpha * bd[i].rtr + (1.0 - alpha) * ni_prime;
        double cand_root = alpha * bd[i].rtr - (1.0 - alpha) * ni_prime;
        out.push_back({"joined-union eliminated root, block " + std::to_string(i),
                       cand_root, derived_root,
                       std::abs(cand_root - derived_root)});
    }
    return out;
}

struct SpectrumArgs {
    std::string graph_path;
    std::string group;
    std::string alphas = "0,0.25,0.5,0.75,1";
    std::string format = "human";
    std::string out_path;
    double tol = kMatchTol;
};

void write_csv_header(std::ostream& out) {
    out << "alpha,value,multiplicity,source\n";
}

void write_spectrum_csv(std::ostream& out, double alpha, const Spectrum& s,
                        const std::string& source) {
    for (const auto& e : s.entries()) {
        out << fmt(alpha) << "," << fmt(e.value) << "," << e.multiplicity << ","
            << source << "\n";
    }
}

int cmd_spectrum(const SpectrumArgs& args) {
    if (args.graph_path.empty() == args.group.empty()) {
        throw ParseError("spectrum: give exactly one of --graph or --group");
    }
    std::vector<double> alphas = parse_alphas(args.alphas);
    Graph g;
    std::string input;
    if (!args.graph_path.empty()) {
        g = load_edge_list(args.graph_path);
        input = args.graph_path;
    } else {
        GroupSpec spec = GroupSpec::parse(args.group);
        g = cayley_power_graph(spec).first;
        input = spec.to_string();
    }
    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();

    std::vector<std::pair<double, Spectrum>> results;
    results.reserve(alphas.size());
    for (double a : alphas) {
        results.emplace_back(a, sym_eigenvalues(rd_alpha_matrix(g, a)));
    }
    if (args.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [a, s] : results) {
            arr.push_back({{"alpha", a}, {"spectrum", spectrum_to_json(s)}});
        }
        out << ordered_json{{"input", input}, {"results", std::move(arr)}}.dump(2)
            << "\n";
    } else if (args.format == "csv") {
        write_csv_header(out);
        for (const auto& [a, s] : results) write_spectrum_csv(out, a, s, "oracle");
    } else {
        out << "RD_alpha spectra of " << input << " (" << g.vertex_count()
            << " vertices)\n";
        for (const auto& [a, s] : results) {
            out << "alpha=" << fmt(a) << ": " << spectrum_human(s) << "\n";
        }
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string group;
    std::string plan_path;
    std::string alphas = "0,0.25,0.5,0.75,1";
    std::string format = "human";
    std::string out_path;
    double tol = kMatchTol;
    bool compare_printed = false;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.group.empty() == args.plan_path.empty()) {
        throw ParseError("verify: give exactly one of --group or --plan");
    }
    std::vector<double> alphas = parse_alphas(args.alphas);
    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();

    bool all_match = true;
    ordered_json json_reports = ordered_json::array();
    std::ostringstream human;
    std::ostringstream csv;
    write_csv_header(csv);

    if (!args.group.empty()) {
        GroupSpec spec = GroupSpec::parse(args.group);
        Graph g = cayley_power_graph(spec).first;
        human << "verify " << spec.to_string() << " (order " << g.vertex_count()
              << ")\n";
        for (double a : alphas) {
            ClosedFormSpectrum cf = closed_form_spectrum(spec, a);
            Spectrum closed = cf.assemble();
            Spectrum oracle = sym_eigenvalues(rd_alpha_matrix(g, a));
            MatchReport rep = spectra_equal(closed, oracle, args.tol);
            all_match = all_match && rep.equal;

            std::vector<PrintedDeviation> devs = cf.printed_deviations;
            if (args.compare_printed) {
                try {
                    JoinedUnionPlan plan = structural_power_graph(spec);
                    auto extra = theorem_quotient_deviations(plan, a);
                    devs.insert(devs.end(), extra.begin(), extra.end());
                } catch (const DegenerateDecompositionError&) {
                    // complete-graph case: no joined-union quotient to compare
                }
            }

            json_reports.push_back(
                {{"spec", spec.to_string()},
                 {"alpha", a},
                 {"closed_form", spectrum_to_json(closed)},
                 {"oracle", spectrum_to_json(oracle)},
                 {"match", rep.equal},
                 {"max_dev", rep.max_deviation},
                 {"printed_formula_deviations", deviations_to_json(devs)}});

            human << "alpha=" << fmt(a) << ": "
                  << (rep.equal ? "MATCH" : "MISMATCH") << " (max dev "
                  << fmt(rep.max_deviation) << ")\n";
            if (!rep.equal) {
                human << "  closed form: " << spectrum_human(closed) << "\n";
                human << "  oracle:      " << spectrum_human(oracle) << "\n";
            }
            print_deviations_human(human, devs);

            for (const auto& f : cf.explicit_part) {
                csv << fmt(a) << "," << fmt(f.value) << "," << f.multiplicity
                    << ",explicit:" << f.provenance << "\n";
            }
            if (cf.quotient.k > 0) {
                write_spectrum_csv(csv, a, general_eigenvalues(cf.quotient),
                                   "quotient");
            }
            write_spectrum_csv(csv, a, oracle, "oracle");
        }
    } else {
        JoinedUnionPlan plan = load_plan(args.plan_path);
        Graph composed = compose(plan);
        human << "verify plan " << args.plan_path << " (" << plan.block_count()
              << " blocks, order " << composed.vertex_count() << ")\n";
        for (double a : alphas) {
            Spectrum closed = theorem21_spectrum(plan, a);
            Spectrum oracle = sym_eigenvalues(rd_alpha_matrix(composed, a));
            MatchReport rep = spectra_equal(closed, oracle, args.tol);
            all_match = all_match && rep.equal;

            std::vector<PrintedDeviation> devs;
            if (args.compare_printed) devs = theorem_quotient_deviations(plan, a);

            json_reports.push_back(
                {{"plan", args.plan_path},
                 {"alpha", a},
                 {"closed_form", spectrum_to_json(closed)},
                 {"oracle", spectrum_to_json(oracle)},
                 {"match", rep.equal},
                 {"max_dev", rep.max_deviation},
                 {"printed_formula_deviations", deviations_to_json(devs)}});

            human << "alpha=" << fmt(a) << ": "
                  << (rep.equal ? "MATCH" : "MISMATCH") << " (max dev "
                  << fmt(rep.max_deviation) << ")\n";
            if (!rep.equal) {
                human << "  block/quotient form: " << spectrum_human(closed) << "\n";
                human << "  oracle:              " << spectrum_human(oracle) << "\n";
            }
            print_deviations_human(human, devs);

            write_spectrum_csv(csv, a, closed, "quotient");
            write_spectrum_csv(csv, a, oracle, "oracle");
        }
    }

    if (args.format == "json") {
        out << json_reports.dump(2) << "\n";
    } else if (args.format == "csv") {
        out << csv.str();
    } else {
        out << human.str();
        out << (all_match ? "result: all alphas match\n"
                          : "result: MISMATCH detected\n");
    }
    return all_match ? kExitOk : kExitMismatch;
}

struct SweepArgs {
    std::string family;
    std::string range;
    std::string params;
    std::string alphas = "0,0.25,0.5,0.75,1";
    std::string format = "human";
    std::string out_path;
    double tol = kMatchTol;
    int jobs = 0;
};

std::pair<int, int> parse_range_token(const std::string& s) {
    auto dots = s.find("..");
    auto parse_int = [&](const std::string& x) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(x, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad range token '" + s + "'");
        }
        if (pos != x.size()) throw ParseError("bad range token '" + s + "'");
        return v;
    };
    if (dots == std::string::npos) {
        int v = parse_int(s);
        return {v, v};
    }
    int lo = parse_int(s.substr(0, dots));
    int hi = parse_int(s.substr(dots + 2));
    return {lo, hi};
}

std::vector<GroupSpec> build_sweep_grid(const SweepArgs& args) {
    std::vector<GroupSpec> grid;
    if (args.family == "cyclic" || args.family == "dihedral" ||
        args.family == "quaternion") {
        if (args.range.empty()) {
            throw ParseError("sweep: --range required for family " + args.family);
        }
        auto [lo, hi] = parse_range_token(args.range);
        for (int n = lo; n <= hi; ++n) {
            GroupSpec spec = args.family == "cyclic"      ? GroupSpec::cyclic(n)
                             : args.family == "dihedral" ? GroupSpec::dihedral(n)
                                                         : GroupSpec::quaternion(n);
            spec.validate();
            grid.push_back(spec);
        }
    } else if (args.family == "elemab" || args.family == "pq") {
        if (args.params.empty()) {
            throw ParseError("sweep: --params required for family " + args.family);
        }
        std::stringstream ss(args.params);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            auto comma = item.find(',');
            if (comma == std::string::npos) {
                throw ParseError("sweep: bad params item '" + item + "'");
            }
            auto [first, first_hi] = parse_range_token(item.substr(0, comma));
            if (first != first_hi) {
                throw ParseError("sweep: first parameter must be a single value in '" +
                                 item + "'");
            }
            auto [lo, hi] = parse_range_token(item.substr(comma + 1));
            for (int second = lo; second <= hi; ++second) {
                GroupSpec spec = args.family == "elemab"
                                     ? GroupSpec::elementary_abelian(first, second)
                                     : GroupSpec::nonabelian_pq(first, second);
                spec.validate();
                grid.push_back(spec);
            }
        }
    } else {
        throw ParseError("sweep: unknown family '" + args.family + "'");
    }
    if (grid.empty()) throw ParseError("sweep: empty grid");
    return grid;
}

struct SweepRow {
    std::string spec;
    int order = 0;
    bool decomposition_ok = false;
    bool spectra_ok = false;
    double worst_dev = 0.0;
    std::string error;
};

int cmd_sweep(const SweepArgs& args) {
    std::vector<double> alphas = parse_alphas(args.alphas);
    std::vector<GroupSpec> grid = build_sweep_grid(args);
    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            SweepRow& row = rows[i];
            const GroupSpec& spec = grid[i];
            row.spec = spec.to_string();
            try {
                row.order = spec.group_order();
                IsomorphismReport iso = verify_decomposition(spec);
                row.decomposition_ok = iso.isomorphic;
                if (!iso.isomorphic) row.error = iso.detail;
                Graph g = cayley_power_graph(spec).first;
                row.spectra_ok = true;
                for (double a : alphas) {
                    Spectrum closed = closed_form_spectrum(spec, a).assemble();
                    Spectrum oracle = sym_eigenvalues(rd_alpha_matrix(g, a));
                    MatchReport rep = spectra_equal(closed, oracle, args.tol);
                    row.worst_dev = std::max(row.worst_dev, rep.max_deviation);
                    row.spectra_ok = row.spectra_ok && rep.equal;
                }
            } catch (const std::exception& e) {
                row.spectra_ok = false;
                row.error = e.what();
            }
        }
    };
    unsigned jobs = args.jobs > 0 ? static_cast<unsigned>(args.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(grid.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_pass = true;
    for (const auto& row : rows) {
        all_pass = all_pass && row.decomposition_ok && row.spectra_ok;
    }

    if (args.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            arr.push_back({{"spec", row.spec},
                           {"order", row.order},
                           {"decomposition", row.decomposition_ok},
                           {"spectra", row.spectra_ok},
                           {"worst_dev", row.worst_dev},
                           {"error", row.error}});
        }
        out << ordered_json{{"alphas", alphas}, {"results", std::move(arr)},
                            {"pass", all_pass}}
                   .dump(2)
            << "\n";
    } else if (args.format == "csv") {
        out << "spec,order,decomposition,spectra,worst_dev\n";
        for (const auto& row : rows) {
            out << row.spec << "," << row.order << ","
                << (row.decomposition_ok ? "ok" : "FAIL") << ","
                << (row.spectra_ok ? "ok" : "FAIL") << "," << fmt(row.worst_dev)
                << "\n";
        }
    } else {
        out << "sweep over " << grid.size() << " groups x " << alphas.size()
            << " alphas (tol " << fmt(args.tol) << ")\n";
        for (const auto& row : rows) {
            out << "  " << row.spec << " (order " << row.order << "): "
                << (row.decomposition_ok ? "decomposition ok" : "DECOMPOSITION FAIL")
                << ", " << (row.spectra_ok ? "spectra ok" : "SPECTRA FAIL")
                << " (worst dev " << fmt(row.worst_dev) << ")";
            if (!row.error.empty()) out << "  [" << row.error << "]";
            out << "\n";
        }
        out << (all_pass ? "result: all pass\n" : "result: FAILURES\n");
    }
    return all_pass ? kExitOk : kExitMismatch;
}

struct QuotientArgs {
    std::string group;
    std::string plan_path;
    std::string alphas = "0";
    std::string format = "human";
    std::string out_path;
};

int cmd_quotient(const QuotientArgs& args) {
    if (args.group.empty() == args.plan_path.empty()) {
        throw ParseError("quotient: give exactly one of --group or --plan");
    }
    double alpha = parse_alphas(args.alphas).front();
    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();

    QuotientMatrix q;
    std::string input;
    if (!args.group.empty()) {
        GroupSpec spec = GroupSpec::parse(args.group);
        input = spec.to_string();
        try {
            q = theorem21_quotient(structural_power_graph(spec), alpha);
        } catch (const DegenerateDecompositionError& e) {
            // complete graph: the single-block quotient
            Graph g = Graph::complete(e.order());
            VertexPartition p;
            p.blocks.emplace_back(e.order());
            for (int v = 0; v < e.order(); ++v) p.blocks[0][v] = v;
            q = quotient_matrix(rd_alpha_matrix(g, alpha), p);
        }
    } else {
        input = args.plan_path;
        q = theorem21_quotient(load_plan(args.plan_path), alpha);
    }
    if (args.format == "json") {
        ordered_json j = quotient_to_json(q);
        j["input"] = input;
        j["alpha"] = alpha;
        out << j.dump(2) << "\n";
    } else {
        out << "quotient of " << input << " at alpha=" << fmt(alpha) << " ("
            << q.k << "x" << q.k << ", "
            << (q.equitable ? "equitable" : "NOT equitable") << ")\n";
        for (int i = 0; i < q.k; ++i) {
            out << " ";
            for (int j = 0; j < q.k; ++j) out << " " << fmt(q(i, j));
            out << "\n";
        }
    }
    return kExitOk;
}

struct DecomposeArgs {
    std::string group;
    std::string out_path;
};

int cmd_decompose(const DecomposeArgs& args) {
    GroupSpec spec = GroupSpec::parse(args.group);
    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    try {
        JoinedUnionPlan plan = structural_power_graph(spec);
        out << plan_to_json(plan).dump(2) << "\n";
    } catch (const DegenerateDecompositionError& e) {
        out << ordered_json{{"degenerate_complete", true}, {"n", e.order()}}.dump(2)
            << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized reciprocal distance (RD_alpha) spectra of graphs, "
                 "joined unions, and power graphs of finite groups"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    auto* sp = app.add_subcommand("spectrum",
                                  "RD_alpha spectrum of a graph or power graph");
    sp->add_option("--graph", spectrum_args.graph_path, "edge-list file");
    sp->add_option("--group", spectrum_args.group,
                   "group spec (cyclic:12, dihedral:6, quaternion:3, elemab:3,2, pq:3,7)");
    sp->add_option("--alpha", spectrum_args.alphas, "comma-separated alphas");
    sp->add_option("--tol", spectrum_args.tol, "match tolerance");
    sp->add_option("--format", spectrum_args.format, "json|csv|human");
    sp->add_option("--out", spectrum_args.out_path, "output file");

    VerifyArgs verify_args;
    auto* vf = app.add_subcommand(
        "verify", "closed form (or block/quotient form) vs brute-force spectrum");
    vf->add_option("--group", verify_args.group, "group spec");
    vf->add_option("--plan", verify_args.plan_path, "joined-union plan JSON file");
    vf->add_option("--alpha", verify_args.alphas, "comma-separated alphas");
    vf->add_option("--tol", verify_args.tol, "match tolerance");
    vf->add_option("--format", verify_args.format, "json|csv|human");
    vf->add_option("--out", verify_args.out_path, "output file");
    vf->add_flag("--compare-printed", verify_args.compare_printed,
                 "also evaluate candidate quotient-entry formulas");

    SweepArgs sweep_args;
    auto* sw = app.add_subcommand("sweep", "verify a whole parameter grid");
    sw->add_option("--family", sweep_args.family,
                   "cyclic|dihedral|quaternion|elemab|pq")
        ->required();
    sw->add_option("--range", sweep_args.range, "n range, e.g. 3..40");
    sw->add_option("--params", sweep_args.params,
                   "two-parameter grid, e.g. \"2,1..4;3,1..3\"");
    sw->add_option("--alpha", sweep_args.alphas, "comma-separated alphas");
    sw->add_option("--tol", sweep_args.tol, "match tolerance");
    sw->add_option("--format", sweep_args.format, "json|csv|human");
    sw->add_option("--out", sweep_args.out_path, "output file");
    sw->add_option("--jobs", sweep_args.jobs, "worker threads (default: hardware)");

    QuotientArgs quotient_args;
    auto* qt = app.add_subcommand("quotient", "block quotient matrix of RD_alpha");
    qt->add_option("--group", quotient_args.group, "group spec");
    qt->add_option("--plan", quotient_args.plan_path, "plan JSON file");
    qt->add_option("--alpha", quotient_args.alphas, "alpha (first value used)");
    qt->add_option("--format", quotient_args.format, "json|human");
    qt->add_option("--out", quotient_args.out_path, "output file");

    DecomposeArgs decompose_args;
    auto* dc = app.add_subcommand("decompose",
                                  "joined-union plan of a power graph, as JSON");
    dc->add_option("--group", decompose_args.group, "group spec")->required();
    dc->add_option("--out", decompose_args.out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sp->parsed()) return cmd_spectrum(spectrum_args);
        if (vf->parsed()) return cmd_verify(verify_args);
        if (sw->parsed()) return cmd_sweep(sweep_args);
        if (qt->parsed()) return cmd_quotient(quotient_args);
        if (dc->parsed()) return cmd_decompose(decompose_args);
    } catch (const DisconnectedGraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisconnected;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AlphaOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
