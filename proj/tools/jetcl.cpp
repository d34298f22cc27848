// jetcl: exact jet closures, jet support closures, and jet invariants of
// ideals in Q[[x_1,...,x_n]] given by polynomial generators.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetcl/catalog.hpp"
#include "jetcl/closures.hpp"
#include "jetcl/errors.hpp"
#include "jetcl/filtration.hpp"
#include "jetcl/parse.hpp"

using nlohmann::json;
using namespace jetcl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitResource = 4;

struct Request {
    std::string command;
    std::string ring_text = "x,y";
    std::string ideal_text;
    std::string poly_text;
    std::string query_text;
    std::string g_text;
    std::string kind = "jc";
    std::string mode = "milnor";
    std::string method;
    std::string left, right;
    std::string file;
    std::string scan_kind;
    std::uint32_t m = 0;
    std::optional<std::uint64_t> cap;
    bool use_oracle = false;
    bool homogeneous_filtration = false;
    bool json_output = false;
    unsigned max_milnor = 8;
    std::uint32_t max_m = 9;
    std::uint64_t max_pairs = 200000;
    std::uint64_t max_matrix = 4000000;
    bool at_origin = false;
};

std::vector<std::string> generator_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(g.str());
    return out;
}

json closure_json(const Request& req, const ClosureResult& r, double ms) {
    json j;
    j["command"] = req.command;
    j["input"] = generator_strings(r.input);
    j["m"] = r.m;
    j["generators"] = generator_strings(r.closure);
    j["dim"] = r.dim;
    j["good"] = r.good;
    j["method"] = r.method;
    j["timing_ms"] = ms;
    return j;
}

void emit(const Request& req, const json& j) {
    if (req.json_output) {
        std::cout << j.dump() << "\n";
        return;
    }
    if (j.contains("generators")) {
        for (const auto& g : j["generators"]) std::cout << g.get<std::string>() << "\n";
        if (j.contains("dim")) std::cout << "dim = " << j["dim"] << "\n";
        if (j.contains("good")) std::cout << "good = " << (j["good"].get<bool>() ? "true" : "false") << "\n";
        if (j.contains("member")) std::cout << "member = " << (j["member"].get<bool>() ? "true" : "false") << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "command" || it.key() == "timing_ms" || it.key() == "input") continue;
        std::cout << it.key() << " = " << it.value().dump() << "\n";
    }
}

Ideal parse_ideal_arg(const Request& req, const RingPtr& ring) {
    if (req.ideal_text.empty())
        throw ParseError("--ideal is required for this command");
    return Ideal(ring, parse_generators(req.ideal_text, ring));
}

Polynomial parse_poly_arg(const Request& req, const RingPtr& ring) {
    if (req.poly_text.empty())
        throw ParseError("--poly is required for this command");
    return parse_polynomial(req.poly_text, ring);
}

json run_request(const Request& req) {
    const auto started = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    };
    if (req.cap && *req.cap == 0)
        throw ParseError("--cap must be at least 1");
    ClosureOptions opts;
    opts.max_pairs = req.max_pairs;
    opts.max_matrix_entries = req.max_matrix;
    const RingPtr ring = parse_ring(req.ring_text);

    if (req.command == "jet-ideal") {
        const Ideal I = parse_ideal_arg(req, ring);
        const JetIdeal ji = jet_ideal(I, req.m, req.at_origin);
        json j;
        j["command"] = req.command;
        j["input"] = generator_strings(I);
        j["m"] = req.m;
        j["ring"] = ji.jets.ring()->names();
        j["generators"] = generator_strings(ji.ideal);
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    if (req.command == "jc" || req.command == "jsc") {
        const Ideal I = parse_ideal_arg(req, ring);
        if (!req.method.empty() && req.method != "kernel" && req.method != "elim")
            throw ParseError("unknown method '" + req.method + "' (kernel or elim)");
        ClosureResult r;
        if (req.command == "jc")
            r = (req.method == "elim") ? jet_closure_elim(I, req.m, opts) : jet_closure(I, req.m, opts);
        else
            r = req.use_oracle ? jsc_monomial_oracle(I, req.m, opts) : jet_support_closure(I, req.m, opts);
        json j = closure_json(req, r, elapsed_ms());
        if (!req.query_text.empty())
            j["member"] = r.closure.contains(parse_polynomial(req.query_text, ring));
        return j;
    }
    if (req.command == "dim" || req.command == "good") {
        const Ideal I = parse_ideal_arg(req, ring);
        if (req.kind != "jc" && req.kind != "jsc")
            throw ParseError("unknown kind '" + req.kind + "' (jc or jsc)");
        const ClosureKind kind = req.kind == "jsc" ? ClosureKind::jsc : ClosureKind::jc;
        const ClosureResult r = kind == ClosureKind::jc ? jet_closure(I, req.m, opts)
                                                        : jet_support_closure(I, req.m, opts);
        json j = closure_json(req, r, elapsed_ms());
        j["command"] = req.command;
        return j;
    }
    if (req.command == "jet-index") {
        JetIndexReport rep;
        json j;
        if (!req.poly_text.empty()) {
            if (req.mode != "milnor" && req.mode != "tjurina")
                throw ParseError("unknown mode '" + req.mode + "' (milnor or tjurina)");
            const Polynomial f = parse_poly_arg(req, ring);
            rep = req.mode == "tjurina" ? jet_tjurina_index(f, req.cap, opts)
                                        : jet_milnor_index(f, req.cap, opts);
            j["input"] = f.str();
            j["mode"] = req.mode;
        } else {
            const Ideal I = parse_ideal_arg(req, ring);
            rep = jet_index(I, req.cap, opts);
            j["input"] = generator_strings(I);
        }
        j["command"] = req.command;
        j["index"] = rep.index;
        j["cap"] = rep.cap;
        json trace = json::array();
        for (const auto& [m, dim] : rep.trace) trace.push_back({{"m", m}, {"dim", dim}});
        j["trace"] = trace;
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    if (req.command == "milnor") {
        const Polynomial f = parse_poly_arg(req, ring);
        json j;
        j["command"] = req.command;
        j["input"] = f.str();
        j["milnor"] = milnor_number(f);
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    if (req.command == "filtration") {
        const Ideal I = parse_ideal_arg(req, ring);
        if (req.g_text.empty()) throw ParseError("--g is required for filtration");
        const Polynomial g = parse_polynomial(req.g_text, ring);
        const FiltrationValue v = req.homogeneous_filtration
                                      ? homogeneous_filtration_value(I, g)
                                      : filtration_value(I, g, req.cap, opts);
        json j;
        j["command"] = req.command;
        j["input"] = generator_strings(I);
        j["g"] = g.str();
        j["value"] = v.str();
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    if (req.command == "classify") {
        auto resolve = [&](const std::string& name) -> Ideal {
            if (auto t = ade_by_name(name))
                return Ideal(catalog_ring(), {t->poly});
            return Ideal(catalog_ring(), parse_generators(name, catalog_ring()));
        };
        if (req.left.empty() || req.right.empty())
            throw ParseError("classify needs --left and --right");
        const ClassifyVerdict v = classify(resolve(req.left), resolve(req.right), req.max_milnor, opts);
        json j;
        j["command"] = req.command;
        j["left"] = req.left;
        j["right"] = req.right;
        j["verdict"] = v == ClassifyVerdict::Isomorphic ? "isomorphic"
                       : v == ClassifyVerdict::Distinct ? "distinct"
                                                        : "inconclusive";
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    if (req.command == "catalog") {
        json rows = json::array();
        for (const auto& t : simple_curve_catalog(req.max_milnor)) {
            for (std::uint32_t m = 1; m <= req.max_m; ++m) {
                json row;
                row["type"] = t.name();
                row["poly"] = t.poly.str();
                row["m"] = m;
                if (auto jc = expected_jc(t, m)) row["jc"] = generator_strings(normalized(*jc));
                if (auto ji = expected_jsc_ideal(t, m)) row["jsc"] = generator_strings(normalized(*ji));
                if (auto d = expected_jsc_dim(t, m)) row["jsc_dim"] = *d;
                rows.push_back(std::move(row));
            }
        }
        json j;
        j["command"] = req.command;
        j["rows"] = rows;
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    if (req.command == "scan") {
        if (req.file.empty()) throw ParseError("scan needs --file");
        std::ifstream in(req.file);
        if (!in) throw ParseError("cannot read corpus file '" + req.file + "'");
        std::vector<Polynomial> corpus;
        std::string line;
        while (std::getline(in, line)) {
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
            if (!blank) corpus.push_back(parse_polynomial(line, ring));
        }
        ConjectureKind kind;
        if (req.scan_kind == "tjurina-nilpotency")
            kind = ConjectureKind::TjurinaNilpotency;
        else if (req.scan_kind == "weighted-jc")
            kind = ConjectureKind::WeightedJc;
        else
            throw ParseError("unknown scan kind '" + req.scan_kind +
                             "' (weighted-jc or tjurina-nilpotency)");
        const auto records = conjecture_scan(kind, corpus, req.cap.value_or(6), opts);
        json j;
        j["command"] = req.command;
        j["kind"] = req.scan_kind;
        json recs = json::array();
        for (const auto& r : records) {
            json rec;
            rec["f"] = r.poly;
            rec["verdict"] = r.verdict;
            if (r.witness) rec["witness"] = *r.witness;
            if (r.error) rec["error"] = *r.error;
            recs.push_back(std::move(rec));
        }
        j["records"] = recs;
        j["report"] = render_scan_records(records);
        j["timing_ms"] = elapsed_ms();
        return j;
    }
    throw ParseError("unknown command '" + req.command + "'");
}

int dispatch(const Request& req) {
    try {
        emit(req, run_request(req));
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnsupportedClassError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

void add_common(CLI::App* cmd, Request& req) {
    cmd->add_option("--ring", req.ring_text, "comma-separated variable names")->capture_default_str();
    cmd->add_flag("--json", req.json_output, "machine-readable JSON on stdout");
    cmd->add_option("--max-pairs", req.max_pairs,
                    "S-pair budget for Groebner computations (env JETCL_MAX_PAIRS)");
    cmd->add_option("--max-matrix", req.max_matrix,
                    "kernel matrix budget, rows x columns (env JETCL_MAX_MATRIX)");
}

// Splits a batch line into argv-style tokens (double quotes group words).
std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, have = false;
    for (char c : line) {
        if (c == '"') { quoted = !quoted; have = true; continue; }
        if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
            if (have || !cur.empty()) out.push_back(cur);
            cur.clear();
            have = false;
            continue;
        }
        cur += c;
    }
    if (have || !cur.empty()) out.push_back(cur);
    return out;
}

int run_cli(std::vector<std::string> args, bool allow_batch);

int run_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "parse error: cannot read batch file '" << path << "'\n";
        return kExitParse;
    }
    std::string line;
    std::size_t lineno = 0;
    int worst = kExitOk;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) continue;
        tokens.push_back("--json"); // batch records are JSON lines
        std::ostringstream captured;
        auto* oldbuf = std::cout.rdbuf(captured.rdbuf());
        const int rc = run_cli(tokens, /*allow_batch=*/false);
        std::cout.rdbuf(oldbuf);
        if (rc == kExitOk) {
            std::cout << captured.str();
        } else {
            json err;
            err["line"] = lineno;
            err["request"] = line;
            err["error_exit"] = rc;
            std::cout << err.dump() << "\n";
            worst = kExitOk; // per-line failures are isolated
        }
    }
    return worst;
}

int run_cli(std::vector<std::string> args, bool allow_batch) {
    CLI::App app{"exact jet closures and jet invariants over Q"};
    app.require_subcommand(1);
    Request req;
    if (const char* env = std::getenv("JETCL_MAX_PAIRS")) req.max_pairs = std::strtoull(env, nullptr, 10);
    if (const char* env = std::getenv("JETCL_MAX_MATRIX")) req.max_matrix = std::strtoull(env, nullptr, 10);

    auto* jet_ideal_cmd = app.add_subcommand("jet-ideal", "generators of the m-th jet ideal");
    jet_ideal_cmd->add_option("--ideal", req.ideal_text, "generators, comma separated")->required();
    jet_ideal_cmd->add_option("--m", req.m, "jet order")->required();
    jet_ideal_cmd->add_flag("--at-origin", req.at_origin, "set order-0 variables to zero");
    add_common(jet_ideal_cmd, req);

    auto* jc_cmd = app.add_subcommand("jc", "m-th jet closure");
    jc_cmd->add_option("--ideal", req.ideal_text)->required();
    jc_cmd->add_option("--m", req.m)->required();
    jc_cmd->add_option("--method", req.method, "kernel (default) or elim");
    jc_cmd->add_option("--query", req.query_text, "test membership of a polynomial");
    add_common(jc_cmd, req);

    auto* jsc_cmd = app.add_subcommand("jsc", "m-th jet support closure");
    jsc_cmd->add_option("--ideal", req.ideal_text)->required();
    jsc_cmd->add_option("--m", req.m)->required();
    jsc_cmd->add_flag("--oracle", req.use_oracle, "radical-kernel oracle (monomial ideals)");
    jsc_cmd->add_option("--query", req.query_text, "test membership of a polynomial");
    add_common(jsc_cmd, req);

    auto* dim_cmd = app.add_subcommand("dim", "dim_k R/closure");
    dim_cmd->add_option("--ideal", req.ideal_text)->required();
    dim_cmd->add_option("--m", req.m)->required();
    dim_cmd->add_option("--kind", req.kind, "jc or jsc")->capture_default_str();
    add_common(dim_cmd, req);

    auto* good_cmd = app.add_subcommand("good", "is the closure I + m^(m+1)?");
    good_cmd->add_option("--ideal", req.ideal_text)->required();
    good_cmd->add_option("--m", req.m)->required();
    good_cmd->add_option("--kind", req.kind, "jc or jsc")->capture_default_str();
    add_common(good_cmd, req);

    auto* index_cmd = app.add_subcommand("jet-index", "least m with I^{m-jc} = I");
    index_cmd->add_option("--ideal", req.ideal_text, "plain ideal jet index");
    index_cmd->add_option("--poly", req.poly_text, "use J(f) (milnor) or (f)+J(f) (tjurina)");
    index_cmd->add_option("--mode", req.mode, "milnor or tjurina")->capture_default_str();
    index_cmd->add_option("--cap", req.cap, "search bound (default 2 dim + 2)");
    add_common(index_cmd, req);

    auto* milnor_cmd = app.add_subcommand("milnor", "dim_k R/J(f)");
    milnor_cmd->add_option("--poly", req.poly_text)->required();
    add_common(milnor_cmd, req);

    auto* filt_cmd = app.add_subcommand("filtration", "jet-closure filtration value f_I(g)");
    filt_cmd->add_option("--ideal", req.ideal_text)->required();
    filt_cmd->add_option("--g", req.g_text)->required();
    filt_cmd->add_flag("--homogeneous", req.homogeneous_filtration,
                       "homogenized filtration via sqrt(I) + m^r");
    filt_cmd->add_option("--cap", req.cap);
    add_common(filt_cmd, req);

    auto* classify_cmd = app.add_subcommand("classify", "compare catalog singularities by jsc dimension sequences");
    classify_cmd->add_option("--left", req.left, "catalog name (A3) or generators")->required();
    classify_cmd->add_option("--right", req.right)->required();
    classify_cmd->add_option("--max-milnor", req.max_milnor)->capture_default_str();
    add_common(classify_cmd, req);

    auto* catalog_cmd = app.add_subcommand("catalog", "ADE table of expected closures");
    catalog_cmd->add_option("--max-milnor", req.max_milnor)->capture_default_str();
    catalog_cmd->add_option("--max-m", req.max_m)->capture_default_str();
    add_common(catalog_cmd, req);

    auto* scan_cmd = app.add_subcommand("scan", "conjecture evidence over a corpus");
    scan_cmd->add_option("--kind", req.scan_kind, "weighted-jc or tjurina-nilpotency")->required();
    scan_cmd->add_option("--file", req.file, "one polynomial per line")->required();
    scan_cmd->add_option("--cap", req.cap);
    add_common(scan_cmd, req);

    CLI::App* batch_cmd = nullptr;
    if (allow_batch) {
        batch_cmd = app.add_subcommand("batch", "run one request per line of a file");
        batch_cmd->add_option("--file", req.file)->required();
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    if (batch_cmd && batch_cmd->parsed()) return run_batch(req.file);
    for (auto* sub : app.get_subcommands()) {
        req.command = sub->get_name();
        return dispatch(req);
    }
    return kExitParse;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(std::move(args), /*allow_batch=*/true);
}
