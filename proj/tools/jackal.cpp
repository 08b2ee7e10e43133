#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "jackal/json_io.hpp"
#include "jackal/verify.hpp"

namespace {

struct GlobalOpts {
    std::string cache_dir = "./.jackal-cache";
    int jobs = 1;
    std::string format = "text";
    std::string out;
    std::string findings = "jackal-findings.json";
};

void emit(const GlobalOpts& g, const std::string& text, const nlohmann::json& j) {
    std::string payload = g.format == "json" ? j.dump(2) + "\n" : text;
    if (!g.out.empty()) {
        std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + g.out);
        f << payload;
    } else {
        std::cout << payload;
    }
}

nlohmann::json int_json(const jackal::Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace jackal;
    CLI::App app{"exact Jack symmetric functions: compute, verify, sweep"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir, "expansion cache directory")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write the result to a file instead of stdout");

    auto* compute = app.add_subcommand("compute", "evaluate a single object");
    compute->require_subcommand(1);
    std::string lam_s, mu_s = "-", nu_s = "-";
    std::string jack_method = "ks", skew_method = "def";
    auto* c_jack = compute->add_subcommand("jack", "monomial expansion of a straight shape");
    c_jack->add_option("--lambda", lam_s, "outer partition, e.g. 3,1")->required();
    c_jack->add_option("--method", jack_method, "ks|gs")->check(CLI::IsMember({"ks", "gs"}));
    auto* c_skew = compute->add_subcommand("skew", "monomial expansion of a skew shape");
    c_skew->add_option("--lambda", lam_s, "outer partition")->required();
    c_skew->add_option("--mu", mu_s, "inner partition, - for empty");
    c_skew->add_option("--method", skew_method, "def|stanley")
        ->check(CLI::IsMember({"def", "stanley"}));
    auto* c_g = compute->add_subcommand("g", "structure polynomial of a triple");
    c_g->add_option("--lambda", lam_s, "outer partition")->required();
    c_g->add_option("--mu", mu_s, "first factor");
    c_g->add_option("--nu", nu_s, "second factor");
    auto* c_norm = compute->add_subcommand("norm", "squared norm of a straight shape");
    c_norm->add_option("--lambda", lam_s, "partition")->required();
    auto* c_lr = compute->add_subcommand("lr", "Littlewood-Richardson coefficient");
    c_lr->add_option("--lambda", lam_s, "outer partition")->required();
    c_lr->add_option("--mu", mu_s, "first factor");
    c_lr->add_option("--nu", nu_s, "second factor");

    auto* verify = app.add_subcommand("verify", "run proven-statement suites");
    std::string suite;
    int v_max = 4, xvars = 2, yvars = 2;
    verify->add_option("suite", suite, "suite name or all")
        ->required()
        ->check(CLI::IsMember(
            {"translation", "rotation", "duality", "prefix", "split", "consistency", "all"}));
    verify->add_option("--max-size", v_max, "size bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--xvars", xvars, "first variable set for split")
        ->check(CLI::PositiveNumber);
    verify->add_option("--yvars", yvars, "second variable set for split")
        ->check(CLI::PositiveNumber);

    auto* conj = app.add_subcommand("conjecture", "sweep an open conjecture");
    std::string cname;
    int c_max = 5;
    std::string c_mu = "-";
    conj->add_option("name", cname, "conjecture name")
        ->required()
        ->check(CLI::IsMember({"main", "stanley", "linear-factors", "ratio", "lowest"}));
    conj->add_option("--max-size", c_max, "size bound")->check(CLI::NonNegativeNumber);
    conj->add_option("--mu", c_mu, "inner partition for the lowest-coefficient solver");
    conj->add_option("--findings", g.findings, "findings file")->capture_default_str();

    auto* cache = app.add_subcommand("cache", "inspect or clear the expansion cache");
    cache->require_subcommand(1);
    auto* cache_stats_cmd = cache->add_subcommand("stats", "count cached files and bytes");
    auto* cache_clear_cmd = cache->add_subcommand("clear", "delete cached expansions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Engine engine{std::filesystem::path(g.cache_dir)};
        RunOptions ro{g.jobs};

        if (c_jack->parsed()) {
            Partition lam = Partition::parse(lam_s);
            const SymFuncM& f = jack_method == "gs" ? engine.jack_gs(lam) : engine.jack(lam);
            emit(g, f.str() + "\n", symfunc_to_json(f));
        } else if (c_skew->parsed()) {
            SkewShape shape(Partition::parse(lam_s), Partition::parse(mu_s));
            JackExpansion ex =
                skew_method == "stanley" ? engine.skew_stanley(shape) : engine.skew_def(shape);
            emit(g, ex.f.str() + "\n", symfunc_to_json(ex.f));
        } else if (c_g->parsed()) {
            AlphaPoly p = engine.g_poly(Partition::parse(lam_s), Partition::parse(mu_s),
                                        Partition::parse(nu_s));
            emit(g, p.str() + "\n", alpha_poly_to_json(p));
        } else if (c_norm->parsed()) {
            AlphaPoly p = hook_products(Partition::parse(lam_s)).j;
            emit(g, p.str() + "\n", alpha_poly_to_json(p));
        } else if (c_lr->parsed()) {
            Int v = engine.lr_coeff(Partition::parse(lam_s), Partition::parse(mu_s),
                                    Partition::parse(nu_s));
            emit(g, v.get_str() + "\n", int_json(v));
        } else if (verify->parsed()) {
            std::vector<Report> reports;
            if (suite == "all")
                reports = verify_all(engine, v_max, ro);
            else if (suite == "translation")
                reports.push_back(suite_translation(engine, v_max, ro));
            else if (suite == "rotation")
                reports.push_back(suite_rotation(engine, v_max, ro));
            else if (suite == "duality")
                reports.push_back(suite_duality(engine, v_max, ro));
            else if (suite == "prefix")
                reports.push_back(suite_prefix(engine, v_max, ro));
            else if (suite == "split")
                reports.push_back(suite_split(engine, v_max, xvars, yvars, ro));
            else
                reports.push_back(suite_consistency(engine, v_max, ro));
            std::string text;
            for (const Report& r : reports) text += r.text();
            nlohmann::json jr;
            if (reports.size() == 1)
                jr = reports[0].to_json();
            else {
                jr = nlohmann::json::array();
                for (const Report& r : reports) jr.push_back(r.to_json());
            }
            emit(g, text, jr);
            for (const Report& r : reports)
                if (!r.ok()) return 1;
        } else if (conj->parsed()) {
            Report rep;
            std::optional<PiTable> table;
            if (cname == "main")
                rep = conjecture_main(engine, c_max, ro);
            else if (cname == "stanley")
                rep = conjecture_stanley(engine, c_max, ro);
            else if (cname == "linear-factors")
                rep = conjecture_linear_factors(engine, c_max, ro);
            else if (cname == "ratio")
                rep = conjecture_ratio(engine, c_max, ro);
            else {
                PiTable t;
                rep = conjecture_lowest(engine, Partition::parse(c_mu), c_max, ro, &t);
                table = std::move(t);
            }
            nlohmann::json findings = nlohmann::json::array();
            for (const Failure& f : rep.failures)
                if (!f.regression)
                    findings.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
            atomic_write(std::filesystem::path(g.findings),
                         nlohmann::json{{"suite", rep.suite},
                                        {"bound", rep.bound},
                                        {"findings", findings}}
                                 .dump(2) +
                             "\n");
            std::string text = rep.text();
            nlohmann::json jr = rep.to_json();
            if (table) {
                text += table->text();
                jr["table"] = table->to_json();
            }
            emit(g, text, jr);
            if (rep.regressions()) return 1;
        } else if (cache_stats_cmd->parsed()) {
            CacheStats st = engine.cache_stats();
            emit(g,
                 "files: " + std::to_string(st.files) + "\nbytes: " + std::to_string(st.bytes) +
                     "\n",
                 {{"files", st.files}, {"bytes", st.bytes}});
        } else if (cache_clear_cmd->parsed()) {
            engine.cache_clear();
            emit(g, "cache cleared\n", {{"cleared", true}});
        }
        return 0;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
}
