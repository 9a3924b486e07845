#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "hurwitz/hurwitz.hpp"
#include "hurwitz/json_io.hpp"

namespace {

using namespace hurwitz;

Budgets budgets_from(long long dfs_budget, int max_mn) {
    Budgets b;
    if (const char* env = std::getenv("HURWITZ_BUDGET")) b.dfs_ops = std::atoll(env);
    if (dfs_budget > 0) b.dfs_ops = dfs_budget;
    if (max_mn > 0) b.max_mn = max_mn;
    return b;
}

std::string csv_row(const HurwitzPair& pair, Method method, const Rat& value) {
    return "\"" + pair.mu.str() + "\",\"" + pair.nu.str() + "\"," + std::to_string(pair.d) + "," +
           std::to_string(pair.r) + "," + method_name(method) + "," + rat_str(value);
}

constexpr const char* kCsvHeader = "mu,nu,d,r,method,value";

int run_compute(const std::string& mu_s, const std::string& nu_s, const std::string& method_s,
                const std::string& output, const Budgets& budgets) {
    auto method = parse_method(method_s);
    if (!method) {
        std::cerr << "unknown method: " << method_s << "\n";
        return 2;
    }
    HurwitzPair pair{Partition::parse(mu_s), Partition::parse(nu_s)};
    ChamberEngine engine(budgets);
    Rat value = engine.compute(pair, *method);
    if (output == "json") {
        std::cout << result_to_json(pair, value, *method).dump() << "\n";
    } else if (output == "csv") {
        std::cout << kCsvHeader << "\n" << csv_row(pair, *method, value) << "\n";
    } else {
        std::cout << rat_str(value) << "\n";
    }
    return 0;
}

int run_poly(const std::string& mu_s, const std::string& nu_s, const std::string& output,
             const Budgets& budgets) {
    HurwitzPair pair{Partition::parse(mu_s), Partition::parse(nu_s)};
    ChamberEngine engine(budgets);
    ConePoint point = ConePoint::from_pair(pair.mu, pair.nu);
    ConePoint sel = nudge_off_walls(point);
    ChamberSignature sig = signature_of(sel);
    MultiPoly p = engine.chamber_polynomial(sig, sel);
    Rat value = p.eval(point.as_vector());
    if (output == "json") {
        std::cout << result_to_json(pair, value, Method::Chambers, sig.signs, &p).dump() << "\n";
    } else {
        std::cout << "signature: " << (sig.signs.empty() ? "(no walls)" : sig.signs) << "\n";
        std::cout << "P = " << p.str() << "\n";
        std::cout << "P(mu,nu) = " << rat_str(value) << "\n";
    }
    return 0;
}

int run_chambers(int m, int n, const std::string& output, const Budgets& budgets) {
    auto chambers = enumerate_chambers(m, n, budgets);
    if (output == "json") {
        Json arr = Json::array();
        for (const auto& [sig, witness] : chambers) arr.push_back(chamber_to_json(sig, witness));
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << chambers.size() << " chambers\n";
        for (const auto& [sig, witness] : chambers) {
            std::cout << (sig.signs.empty() ? "(no walls)" : sig.signs) << "  x=(";
            for (size_t i = 0; i < witness.x.size(); ++i)
                std::cout << (i ? "," : "") << rat_str(witness.x[i]);
            std::cout << ") y=(";
            for (size_t j = 0; j < witness.y.size(); ++j)
                std::cout << (j ? "," : "") << rat_str(witness.y[j]);
            std::cout << ")\n";
        }
    }
    return 0;
}

int run_trees(const std::string& mu_s, const std::string& nu_s, bool essential,
              const std::string& output, const Budgets& budgets) {
    Partition mu = Partition::parse(mu_s);
    Partition nu = Partition::parse(nu_s);
    if (mu.degree() != nu.degree()) throw std::invalid_argument("degree mismatch");
    if (essential) {
        auto stars = essential_stars(mu, nu);
        if (output == "json") {
            Json arr = Json::array();
            for (const auto& s : stars) arr.push_back(star_to_json(s));
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << stars.size() << " essential stars\n";
            for (const auto& s : stars) std::cout << star_to_json(s).dump() << "\n";
        }
    } else {
        auto trees = geometric_trees(mu, nu, budgets);
        if (output == "json") {
            Json arr = Json::array();
            for (const auto& t : trees) arr.push_back(tree_to_json(t));
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << trees.size() << " geometric trees\n";
            for (const auto& t : trees) std::cout << tree_to_json(t).dump() << "\n";
        }
    }
    return 0;
}

int run_verify(int d_max, const std::string& methods_s, int workers, const std::string& output,
               const Budgets& budgets) {
    std::vector<Method> methods;
    if (!methods_s.empty()) {
        std::stringstream ss(methods_s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto m = parse_method(tok);
            if (!m || *m == Method::Auto) {
                std::cerr << "unknown method: " << tok << "\n";
                return 2;
            }
            methods.push_back(*m);
        }
    }
    VerifyReport report = verify_sweep(d_max, methods, workers, budgets);
    if (output == "json") {
        Json j;
        j["d_max"] = report.d_max;
        j["instances"] = report.entries.size();
        j["disagreements"] = Json::array();
        for (size_t i : report.disagreements) {
            const auto& e = report.entries[i];
            Json ej;
            ej["mu"] = e.mu.parts();
            ej["nu"] = e.nu.parts();
            for (const auto& [mth, v] : e.values) ej["values"][method_name(mth)] = rat_str(v);
            j["disagreements"].push_back(std::move(ej));
        }
        j["ok"] = report.ok();
        std::cout << j.dump() << "\n";
    } else if (output == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const auto& e : report.entries) {
            HurwitzPair pair{e.mu, e.nu};
            for (const auto& [mth, v] : e.values) std::cout << csv_row(pair, mth, v) << "\n";
        }
    } else {
        std::cout << report.entries.size() << " instances up to degree " << d_max << "\n";
        for (size_t i : report.disagreements) {
            const auto& e = report.entries[i];
            std::cout << "disagreement at (" << e.mu.str() << ");(" << e.nu.str() << "):";
            for (const auto& [mth, v] : e.values)
                std::cout << " " << method_name(mth) << "=" << rat_str(v);
            std::cout << "\n";
        }
        std::cout << (report.ok() ? "all methods agree" : "DISAGREEMENTS FOUND") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int run_identity(int m, const std::string& output) {
    auto [lhs, rhs] = rooted_tree_identity(m);
    bool equal = lhs == rhs;
    if (output == "json") {
        Json j;
        j["m"] = m;
        j["lhs"] = poly_to_json(lhs);
        j["rhs"] = poly_to_json(rhs);
        j["equal"] = equal;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lhs = " << lhs.str() << "\n";
        std::cout << "rhs = " << rhs.str() << "\n";
        std::cout << (equal ? "identity holds" : "IDENTITY FAILS") << "\n";
    }
    return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact genus-0 double Hurwitz numbers: chamber polynomials, wall "
                 "crossings, tree recursion, and a symmetric-group counting oracle"};
    app.require_subcommand(1);

    std::string mu_s, nu_s, method_s = "auto", output = "text", methods_s;
    int m = 0, n = 0, d_max = 4, workers = 1, max_mn = 0;
    long long dfs_budget = 0;
    bool essential = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--dfs-budget", dfs_budget, "Cap on brute-force enumeration size");
        cmd->add_option("--max-mn", max_mn, "Cap on m+n for chamber and tree enumeration");
    };

    CLI::App* compute = app.add_subcommand("compute", "Compute one double Hurwitz number");
    compute->add_option("--mu", mu_s, "Profile over infinity, e.g. 3,1")->required();
    compute->add_option("--nu", nu_s, "Profile over zero")->required();
    compute->add_option("--method", method_s,
                        "auto|oracle|dfs|closed_form|closed_form_literal|trees|chambers");
    add_common(compute);

    CLI::App* poly = app.add_subcommand("poly", "Chamber polynomial of the containing chamber");
    poly->add_option("--mu", mu_s)->required();
    poly->add_option("--nu", nu_s)->required();
    add_common(poly);

    CLI::App* chambers = app.add_subcommand("chambers", "List chambers with witnesses");
    chambers->add_option("--m", m)->required();
    chambers->add_option("--n", n)->required();
    add_common(chambers);

    CLI::App* trees = app.add_subcommand("trees", "List geometric trees of a pair");
    trees->add_option("--mu", mu_s)->required();
    trees->add_option("--nu", nu_s)->required();
    trees->add_flag("--essential", essential, "List essential stars instead");
    add_common(trees);

    CLI::App* verify = app.add_subcommand("verify", "Cross-check all methods on all pairs");
    verify->add_option("--d-max", d_max, "Largest degree to sweep");
    verify->add_option("--methods", methods_s, "Comma-separated method subset");
    verify->add_option("--workers", workers, "Worker threads");
    add_common(verify);

    CLI::App* identity = app.add_subcommand("identity37", "Check the rooted-forest expansion");
    identity->add_option("--m", m)->required();
    add_common(identity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        Budgets budgets = budgets_from(dfs_budget, max_mn);
        if (compute->parsed()) return run_compute(mu_s, nu_s, method_s, output, budgets);
        if (poly->parsed()) return run_poly(mu_s, nu_s, output, budgets);
        if (chambers->parsed()) return run_chambers(m, n, output, budgets);
        if (trees->parsed()) return run_trees(mu_s, nu_s, essential, output, budgets);
        if (verify->parsed()) return run_verify(d_max, methods_s, workers, output, budgets);
        if (identity->parsed()) return run_identity(m, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
