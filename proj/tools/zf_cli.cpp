#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zf/claims.hpp"
#include "zf/error.hpp"
#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/graph_io.hpp"
#include "zf/products.hpp"
#include "zf/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::size_t exact_cap_default() {
    if (const char* env = std::getenv("ZF_BUDGET_VERTICES")) {
        try {
            std::size_t pos = 0;
            const auto v = std::stoul(env, &pos);
            if (pos == std::string(env).size() && v > 0)
                return v;
        } catch (const std::exception&) {
        }
        throw zf::InputError(std::string("ZF_BUDGET_VERTICES must be a positive integer, got '") + env + "'");
    }
    return zf::kDefaultExactCap;
}

std::string read_source(const std::string& path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw zf::InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw zf::InputError("cannot write " + path);
    out << text;
}

// "auto" picks edgelist when the first meaningful line holds two integers.
zf::Graph parse_graph_text(const std::string& text, const std::string& format) {
    std::string fmt = format;
    if (fmt == "auto") {
        fmt = "graph6";
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            line = line.substr(0, line.find('#'));
            std::istringstream words(line);
            long long a = 0, b = 0;
            std::string rest;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            if (words >> a >> b && !(words >> rest))
                fmt = "edgelist";
            break;
        }
    }
    if (fmt == "edgelist")
        return zf::parse_edge_list(text);
    return zf::parse_graph6(text);
}

std::string emit_graph(const zf::Graph& g, const std::string& format) {
    return format == "edgelist" ? zf::emit_edge_list(g) : zf::emit_graph6(g) + "\n";
}

struct SolveArgs {
    std::string family;
    std::string input;
    std::string format = "auto";
    std::string output_format = "text";
    bool trace = false;
    std::size_t cap = 0;
    int threads = 0;
};

int run_solve(const SolveArgs& a) {
    if (a.family.empty() == a.input.empty())
        throw zf::InputError("give exactly one of --family or --input");
    const zf::Graph g = a.family.empty() ? parse_graph_text(read_source(a.input), a.format) : zf::make_graph(a.family);
    zf::SolveOptions opts;
    opts.cap = a.cap ? a.cap : exact_cap_default();
    opts.threads = a.threads;
    const auto r = zf::zero_forcing_number(g, opts);
    if (a.output_format == "json") {
        nlohmann::ordered_json j;
        j["order"] = g.order();
        j["Z"] = r.value;
        j["witness"] = r.witness;
        j["explored"] = r.explored;
        if (a.trace)
            j["trace"] = nlohmann::ordered_json::parse(zf::trace_to_json(r.trace));
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "Z=" << r.value << " witness=" << zf::format_ids(r.witness) << '\n';
    if (a.trace)
        for (const auto& f : r.trace.forces)
            std::cout << "  " << f.forcer << " -> " << f.forced << '\n';
    return 0;
}

struct ProductArgs {
    std::string kind;
    std::string g, h;
    int k = 1;
    std::string format = "graph6";
    std::string labels;
    std::string output;
    std::size_t cap = zf::kDefaultConstructionCap;
};

int run_product(const ProductArgs& a) {
    const zf::Graph g = zf::make_graph(a.g), h = zf::make_graph(a.h);
    zf::Graph out;
    if (a.kind == "corona")
        out = zf::iterated_corona(g, h, a.k, a.cap).graph();
    else if (a.kind == "lex")
        out = zf::lexicographic(g, h, a.cap).graph();
    else
        out = zf::join(g, h);
    write_output(a.output, emit_graph(out, a.format));
    if (!a.labels.empty())
        write_output(a.labels, zf::emit_label_table(out));
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> claims;
    std::string grid;
    std::size_t budget = 0;
    std::size_t construct_cap = zf::kDefaultConstructionCap;
    double time_limit = 30.0;
    std::string out;
    std::string format = "json";
    int jobs = 1;
    int threads = 0;
    bool timing = false;
    std::vector<std::string> perturb;
};

int run_verify(const VerifyArgs& a) {
    auto reg = zf::Registry::standard();
    std::vector<std::string> ids = a.claims.empty() ? reg.ids() : a.claims;
    for (const auto& id : ids)
        if (!reg.find(id))
            throw zf::InputError("unknown claim " + id);
    for (const auto& p : a.perturb) {
        const auto eq = p.find('=');
        if (eq == std::string::npos)
            throw zf::InputError("--perturb-rhs expects ID=DELTA, got '" + p + "'");
        long long delta = 0;
        try {
            delta = std::stoll(p.substr(eq + 1));
        } catch (const std::exception&) {
            throw zf::InputError("bad delta in --perturb-rhs '" + p + "'");
        }
        reg.at(p.substr(0, eq)).rhs_offset = delta;
    }
    zf::Budget budget;
    budget.exact_cap = a.budget ? a.budget : exact_cap_default();
    budget.construct_cap = a.construct_cap;
    budget.time_limit_s = a.time_limit;
    budget.solver_threads = a.threads;
    budget.record_timing = a.timing;
    const auto run = a.grid.empty() ? zf::run_default_grid(reg, ids, budget, a.jobs)
                                    : zf::run_grid(reg, ids, zf::parse_grid(a.grid), budget, a.jobs);

    std::string text;
    if (a.format == "csv")
        text = zf::report_csv(run.records);
    else if (a.format == "text")
        text = zf::report_text(run);
    else
        text = zf::report_json(run.records);
    write_output(a.out, text);

    std::cerr << "records=" << run.records.size();
    for (const auto& [s, n] : run.summary.by_status)
        std::cerr << ' ' << zf::to_string(s) << '=' << n;
    std::cerr << " out_of_domain=" << run.summary.out_of_domain << '\n';
    return zf::exit_code_for(run);
}

int run_family(const std::string& spec, const std::string& format, const std::string& output) {
    write_output(output, emit_graph(zf::make_graph(spec), format));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact zero forcing numbers, graph products and claim verification"};
    app.require_subcommand(0, 1);

    SolveArgs solve;
    app.add_option("--family", solve.family, "Family spec, e.g. path:5, wheel:4, pruefer:0,0, g6:Bw");
    app.add_option("--input", solve.input, "Graph file, '-' for stdin");
    app.add_option("--format", solve.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    app.add_flag("--trace", solve.trace, "Print the forcing chain of the witness");
    app.add_option("--output-format", solve.output_format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", solve.cap, "Exact-solve vertex cap (default 20 or $ZF_BUDGET_VERTICES)");
    app.add_option("--threads", solve.threads, "Solver threads, 0 = all, 1 = serial");

    ProductArgs prod;
    auto* product = app.add_subcommand("product", "Build a corona, lexicographic or join product");
    product->set_help_flag("--help", "Print this help message and exit"); // frees -h for --h
    product->add_option("kind", prod.kind)->required()->check(CLI::IsMember({"corona", "lex", "join"}));
    product->add_option("--g", prod.g)->required();
    product->add_option("--h", prod.h)->required();
    product->add_option("-k", prod.k, "Corona depth")->check(CLI::NonNegativeNumber);
    product->add_option("--format", prod.format)->check(CLI::IsMember({"graph6", "edgelist"}));
    product->add_option("--labels", prod.labels, "Write the id/label table here ('-' for stdout)");
    product->add_option("--output", prod.output);
    product->add_option("--cap", prod.cap, "Construction vertex cap");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Evaluate registered claims over a parameter grid");
    verify->add_option("--claims", ver.claims, "Claim ids (default: all)")->delimiter(',');
    verify->add_option("--grid", ver.grid, "e.g. \"G=path:2..3;H=path:2;k=1..1\"");
    verify->add_option("--budget", ver.budget, "Exact-solve vertex cap");
    verify->add_option("--construct-cap", ver.construct_cap);
    verify->add_option("--time-limit", ver.time_limit, "Seconds per instance, 0 = none");
    verify->add_option("--out", ver.out);
    verify->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--jobs", ver.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--threads", ver.threads, "Solver threads per instance");
    verify->add_flag("--timing", ver.timing, "Record elapsed_ms");
    verify->add_option("--perturb-rhs", ver.perturb, "ID=DELTA, shifts a claim's rhs (harness self-test)");

    std::string fam_spec, fam_format = "graph6", fam_out;
    auto* family = app.add_subcommand("family", "Emit a family member");
    family->add_option("spec", fam_spec)->required();
    family->add_option("--format", fam_format)->check(CLI::IsMember({"graph6", "edgelist"}));
    family->add_option("--output", fam_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*product)
            return run_product(prod);
        if (*verify)
            return run_verify(ver);
        if (*family)
            return run_family(fam_spec, fam_format, fam_out);
        return run_solve(solve);
    } catch (const zf::BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitBudget;
    } catch (const zf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
