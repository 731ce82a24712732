// Command-line front end: compute constants, run the verification suite,
// and generate CSV tables.  Exit codes: 0 success, 2 usage error,
// 3 convergence failure (a diagnostic record is still printed).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stieltjes/all.hpp"

namespace {

using nlohmann::json;

std::string dec(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string iso_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct OutputRecord {
    std::string name;
    json params = json::object();
    double value = 0.0;
    double error_estimate = 0.0;
    std::string method;
    long terms_used = 0;
    long elapsed_ms = 0;
};

void emit(const OutputRecord& r) {
    json j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["value"] = dec(r.value);
    j["error_estimate"] = dec(r.error_estimate);
    j["method"] = r.method;
    j["terms_used"] = r.terms_used;
    j["elapsed_ms"] = r.elapsed_ms;
    std::cout << j.dump() << "\n";
}

int emit_convergence_failure(const std::string& name, const json& params,
                             const sc::convergence_error& e) {
    json j;
    j["name"] = name;
    j["params"] = params;
    j["error"] = "convergence";
    j["detail"] = e.what();
    j["best_value"] = dec(e.partial_value);
    j["error_estimate"] = dec(e.achieved_bound);
    std::cout << j.dump() << "\n";
    return 3;
}

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- compute subcommands --------------------------------------------------

int run_compute_stieltjes(int k, double a, const std::string& method, double tol) {
    json params{{"k", k}, {"a", a}, {"tol", tol}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        OutputRecord rec;
        rec.name = "gamma_k";
        rec.params = params;
        if (method == "integral" && k >= 1) {
            auto v = sc::stieltjes::gamma_k_via_integral(k, a, tol);
            rec.value = v.value;
            rec.error_estimate = v.err;
            rec.method = "integral";
        } else if (method == "dilcher") {
            auto v = sc::stieltjes::dilcher_psi(k, a, tol);
            rec.value = -v.value;  // psi_k(a) = -gamma_k(a)
            rec.error_estimate = v.err;
            rec.method = "dilcher";
        } else {
            // "oracle", and the k = 0 fallback for "integral" (the integral
            // representation starts at k = 1).
            auto v = sc::stieltjes::gamma_oracle(k, a, tol);
            rec.value = v.value;
            rec.error_estimate = v.err;
            rec.method = "oracle";
        }
        rec.elapsed_ms = ms_since(t0);
        emit(rec);
        return 0;
    } catch (const sc::convergence_error& e) {
        return emit_convergence_failure("gamma_k", params, e);
    }
}

int run_compute_constant(const std::string& name, int terms, int n) {
    json params{{"terms", terms}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        OutputRecord rec;
        rec.name = name;
        rec.method = "hasse";
        rec.terms_used = terms;
        const double l2 = std::log(2.0);
        if (name == "gamma") {
            auto A = sc::zeta::hasse_log_sum(1, 1.0, terms, 1e-16);
            rec.value = 0.5 * l2 - A.value / l2;
            rec.error_estimate = A.err / l2;
        } else if (name == "gamma1") {
            auto A = sc::zeta::hasse_log_sum(1, 1.0, terms, 1e-16);
            auto B = sc::zeta::hasse_log_sum(2, 1.0, terms, 1e-16);
            rec.value = l2 * l2 / 12.0 - 0.5 * A.value + B.value / (2.0 * l2);
            rec.value = -rec.value;
            rec.error_estimate = 0.5 * A.err + B.err / (2.0 * l2);
        } else if (name == "eta1") {
            auto A = sc::zeta::hasse_log_sum(1, 1.0, terms, 1e-16);
            auto B = sc::zeta::hasse_log_sum(2, 1.0, terms, 1e-16);
            rec.value = l2 * l2 / 12.0 + A.value * A.value / (l2 * l2) - B.value / l2;
            rec.error_estimate =
                2.0 * std::fabs(A.value) * A.err / (l2 * l2) + B.err / l2;
        } else if (name == "lnpi") {
            auto A = sc::zeta::hasse_log_sum(1, 0.0, terms, 1e-15);
            rec.value = l2 - 2.0 * A.value;
            rec.error_estimate = 2.0 * A.err;
        } else if (name == "bernoulli-even") {
            params["n"] = n;
            auto z = sc::zeta::hasse1_zeta(2.0 * n, terms, 1e-12);
            rec.value = z.value;
            rec.error_estimate = z.err;
        } else {
            std::cerr << "unknown constant name: " << name << "\n";
            return 2;
        }
        rec.params = params;
        rec.elapsed_ms = ms_since(t0);
        emit(rec);
        return 0;
    } catch (const sc::convergence_error& e) {
        return emit_convergence_failure(name, params, e);
    }
}

int run_compute_zeta(double s, const std::string& method, double tol) {
    json params{{"s", s}, {"tol", tol}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        OutputRecord rec;
        rec.name = "zeta";
        rec.params = params;
        rec.method = method;
        if (method == "hasse1") {
            auto z = sc::zeta::hasse1_zeta(s, 220, tol);
            rec.value = z.value;
            rec.error_estimate = z.err;
            rec.terms_used = 220;
        } else if (method == "hasse2") {
            auto z = sc::zeta::hasse2_zeta(s, 200000, tol);
            rec.value = z.value;
            rec.error_estimate = z.err;
            rec.terms_used = 200000;
        } else {
            auto z = sc::zeta::riemann_zeta_real(s, tol);
            rec.value = z.value;
            rec.error_estimate = z.err;
        }
        rec.elapsed_ms = ms_since(t0);
        emit(rec);
        return 0;
    } catch (const sc::convergence_error& e) {
        return emit_convergence_failure("zeta", params, e);
    }
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& id_arg, const std::string& profile,
               const std::string& json_path, int jobs) {
    std::vector<std::string> ids;
    if (id_arg == "all") {
        ids = sc::verify::catalog_ids();
    } else {
        std::string cur;
        for (char c : id_arg + ",") {
            if (c == ',') {
                if (!cur.empty()) ids.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        const auto& known = sc::verify::catalog_ids();
        for (const auto& id : ids) {
            const bool ok = id == "P8f" ||
                            std::find(known.begin(), known.end(), id) != known.end();
            if (!ok) {
                std::cerr << "unknown identity id: " << id << "\n";
                return 2;
            }
        }
    }

    auto reports = sc::verify::run_suite(ids, profile, jobs);

    int passed = 0;
    std::printf("%-4s %-28s %12s %12s %9s %6s %8s\n", "id", "params", "abs_resid",
                "rel_resid", "tol", "pass", "ms");
    for (const auto& r : reports) {
        std::string ps;
        for (const auto& [k, v] : r.params) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%s=%g ", k.c_str(), v);
            ps += buf;
        }
        std::printf("%-4s %-28s %12.3e %12.3e %9.1e %6s %8.0f%s%s\n",
                    r.identity_id.c_str(), ps.c_str(), r.abs_residual, r.rel_residual,
                    r.tolerance, r.pass ? "pass" : "FAIL", r.elapsed_ms,
                    r.note.empty() ? "" : "  ", r.note.c_str());
        if (r.pass) ++passed;
    }
    std::printf("%d/%zu pass\n", passed, reports.size());

    if (!json_path.empty()) {
        json out;
        out["schema_version"] = 1;
        out["generated_at"] = iso_now();
        out["checks"] = json::array();
        for (const auto& r : reports) {
            json c;
            c["identity_id"] = r.identity_id;
            c["params"] = r.params;
            c["lhs"] = dec(r.lhs);
            c["rhs"] = dec(r.rhs);
            c["abs_residual"] = dec(r.abs_residual);
            c["rel_residual"] = dec(r.rel_residual);
            c["tolerance"] = dec(r.tolerance);
            c["pass"] = r.pass;
            c["terms_or_panels"] = r.terms_or_panels;
            c["elapsed_ms"] = static_cast<long>(std::llround(r.elapsed_ms));
            if (!r.note.empty()) c["note"] = r.note;
            out["checks"].push_back(c);
        }
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        f << out.dump(2) << "\n";
    }
    return passed == static_cast<int>(reports.size()) ? 0 : 1;
}

// ---- table ----------------------------------------------------------------

int run_table(int kmax, const std::string& grid, const std::string& method,
              const std::string& out_path) {
    double start = 0.0, stop = 0.0, step = 0.0;
    if (std::sscanf(grid.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0.0 || start <= 0.0) {
        std::cerr << "bad --a-grid (want start:stop:step with step > 0, start > 0)\n";
        return 2;
    }
    std::vector<double> as;
    for (double a = start; a <= stop + 1e-12; a += step) as.push_back(a);

    std::string csv = "k,a,value,err,method\n";
    try {
        for (int k = 0; k < kmax; ++k) {
            for (double a : as) {
                double v, e;
                std::string m;
                if (method == "integral" && k >= 1) {
                    auto r = sc::stieltjes::gamma_k_via_integral(k, a, 1e-10);
                    v = r.value;
                    e = r.err;
                    m = "integral";
                } else {
                    // oracle, including the k = 0 fallback for "integral"
                    auto r = sc::stieltjes::gamma_oracle(k, a, 1e-10);
                    v = r.value;
                    e = r.err;
                    m = "oracle";
                }
                char buf[128];
                std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%s\n", k, a, v,
                              e, m.c_str());
                csv += buf;
            }
        }
    } catch (const sc::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 3;  // no partial output on failure
    }
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stieltjes-constant calculator and identity verifier"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute a constant or function value");
    compute->require_subcommand(1);

    int k = 0;
    double a = 1.0, tol = 1e-10;
    std::string method = "oracle";
    auto* cst = compute->add_subcommand("stieltjes", "generalized Euler constant gamma_k(a)");
    cst->add_option("--k", k, "index k >= 0")->required();
    cst->add_option("--a", a, "parameter a > 0")->required();
    cst->add_option("--method", method)
        ->check(CLI::IsMember({"oracle", "integral", "dilcher"}));
    cst->add_option("--tol", tol, "absolute tolerance");

    std::string cname;
    int terms = 52, nval = 1;
    auto* ccn = compute->add_subcommand("constant", "named constants via the binomial series");
    ccn->add_option("--name", cname)
        ->required()
        ->check(CLI::IsMember({"gamma", "gamma1", "eta1", "lnpi", "bernoulli-even"}));
    ccn->add_option("--method", method)->check(CLI::IsMember({"hasse"}));
    ccn->add_option("--terms", terms, "outer summation terms");
    ccn->add_option("--n", nval, "n for bernoulli-even (value of zeta(2n))");

    double sval = 2.0;
    bool use_h1 = false, use_h2 = false, use_em = false;
    auto* czt = compute->add_subcommand("zeta", "Riemann zeta value");
    czt->add_option("--s", sval)->required();
    czt->add_flag("--hasse1", use_h1, "fast binomial-transform series");
    czt->add_flag("--hasse2", use_h2, "slow unweighted binomial series");
    czt->add_flag("--em", use_em, "Euler-Maclaurin (default)");
    czt->add_option("--tol", tol, "absolute tolerance");

    // verify
    std::string vid = "all", profile = "fast", json_path;
    int jobs = 0;
    auto* ver = app.add_subcommand("verify", "run identity checks");
    ver->add_option("--id", vid, "identity id, comma list, or 'all'");
    ver->add_option("--profile", profile)->check(CLI::IsMember({"fast", "deep"}));
    ver->add_option("--json", json_path, "write JSON report here");
    ver->add_option("--jobs", jobs, "worker threads (default: STIELTJES_JOBS or hw)");

    // table
    int kmax = 0;
    std::string grid, out_path, tmethod = "integral";
    auto* tab = app.add_subcommand("table", "CSV table of gamma_k(a)");
    tab->add_option("--k-max", kmax, "number of k values (rows cover k = 0..K-1)")->required();
    tab->add_option("--a-grid", grid, "start:stop:step")->required();
    tab->add_option("--method", tmethod)->check(CLI::IsMember({"integral", "oracle"}));
    tab->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cst->parsed()) return run_compute_stieltjes(k, a, method, tol);
        if (ccn->parsed()) return run_compute_constant(cname, terms, nval);
        if (czt->parsed())
            return run_compute_zeta(sval, use_h1 ? "hasse1" : (use_h2 ? "hasse2" : "em"),
                                    tol);
        if (ver->parsed()) return run_verify(vid, profile, json_path, jobs);
        if (tab->parsed()) return run_table(kmax, grid, tmethod, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const sc::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
