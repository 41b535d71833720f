// Command-line front end: feasibility checks, certificate construction, the
// computer-assisted verification suites, root isolation, table reproduction,
// and matrix sampling.  Machine-readable output carries no timestamps so runs
// are byte-reproducible.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "sniep5/appendix_ab.hpp"
#include "sniep5/appendix_c.hpp"
#include "sniep5/appendix_d.hpp"
#include "sniep5/jacobi.hpp"
#include "sniep5/pattern_c.hpp"
#include "sniep5/pattern_h.hpp"
#include "sniep5/sampling.hpp"
#include "sniep5/solver.hpp"
#include "sniep5/spectral.hpp"
#include "sniep5/text_io.hpp"

using nlohmann::json;
using namespace sniep5;

namespace {

constexpr int kExitRealizable = 0;
constexpr int kExitNotRealizable = 1;
constexpr int kExitOutOfRegion = 2;
constexpr int kExitInputError = 3;

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

json matrix_to_json(const FloatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

json verdict_to_json(const SpectrumList& s, const Verdict& v) {
    json out;
    out["kind"] = to_string(v.kind);
    json spectrum = json::array();
    for (const auto& x : s.values()) spectrum.push_back(x.str());
    out["spectrum"] = spectrum;
    out["input_was_sorted"] = s.input_was_sorted();
    if (v.failed) out["failed_condition"] = to_string(*v.failed);
    if (v.certificate) {
        out["certificate"] = {{"matrix", matrix_to_json(v.certificate->matrix)},
                              {"residual", v.certificate->residual},
                              {"construction", v.certificate->construction_trace}};
    }
    return out;
}

json report_to_json(const VerifyReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        json j = {{"step", s.step}, {"claim", s.claim}, {"status", s.pass ? "pass" : "fail"}};
        if (!s.detail.empty()) j["detail"] = s.detail;
        steps.push_back(j);
    }
    return {{"report", r.title}, {"pass", r.all_pass()}, {"steps", steps}};
}

void print_report_text(const VerifyReport& r, std::ostream& os) {
    os << "== " << r.title << " ==\n";
    for (const auto& s : r.steps) {
        os << (s.pass ? "  pass  " : "  FAIL  ") << s.step << "  (" << s.claim << ")";
        if (!s.detail.empty()) os << "  [" << s.detail << "]";
        os << "\n";
    }
    os << (r.all_pass() ? "all steps passed" : "FAILURES PRESENT") << " ("
       << r.steps.size() - static_cast<size_t>(r.fail_count()) << "/" << r.steps.size() << ")\n";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

/// Deterministic fan-out: tasks run on up to `jobs` workers, results land in
/// input order.
template <typename Fn>
std::vector<VerifyReport> run_parallel(const std::vector<std::function<VerifyReport()>>& tasks,
                                       int jobs, Fn&& /*tag*/) {
    std::vector<VerifyReport> results(tasks.size());
    if (jobs <= 1) {
        for (size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            results[k] = tasks[k]();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs && t < static_cast<int>(tasks.size()); ++t)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-nonnegative 5x5 spectrum toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string emit_format = "text";
    std::string out_path;
    int digits = 10;
    int count = 1;
    int jobs = 1;
    uint64_t seed = 42;
    app.add_option("--emit", emit_format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--digits", digits, "decimal digit accuracy (1..12)")->check(CLI::Range(1, 12));
    app.add_option("--count", count, "sample count")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "random seed");
    app.add_option("--jobs", jobs, "parallel verification workers")->check(CLI::PositiveNumber);

    std::string spectrum_text;
    auto* check_cmd = app.add_subcommand("check", "decide realizability of a 5-value spectrum");
    check_cmd->add_option("spectrum", spectrum_text, "five values, e.g. \"1,0.35,0.34,-0.72,-0.72\"")
        ->required();
    auto* realize_cmd =
        app.add_subcommand("realize", "construct a certificate matrix for a feasible spectrum");
    realize_cmd->add_option("spectrum", spectrum_text, "five values")->required();

    std::string verify_what;
    auto* verify_cmd = app.add_subcommand("verify", "replay the computer-assisted proof suites");
    verify_cmd
        ->add_option("suite", verify_what,
                     "appendix-a | appendix-b | appendix-c | appendix-d | identities | "
                     "identities-h | identities-c | all")
        ->required()
        ->check(CLI::IsMember({"appendix-a", "appendix-b", "appendix-c", "appendix-d",
                               "identities", "identities-h", "identities-c", "all"}));

    std::string poly_text;
    auto* roots_cmd = app.add_subcommand("roots", "isolate the real roots of a polynomial");
    roots_cmd
        ->add_option("coefficients", poly_text,
                     "ascending coefficients, e.g. \"-3,78,12,-24\" for -24s^3+12s^2+78s-3")
        ->required();

    auto* tables_cmd = app.add_subcommand("tables", "reproduce the 19 sub-range tables");

    std::string trace_text = "1/2";
    auto* sample_cmd = app.add_subcommand("sample", "sample random nonnegative symmetric matrices");
    sample_cmd->add_option("--trace", trace_text, "target trace (default 1/2)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check_cmd || *realize_cmd) {
            SpectrumList s = parse_spectrum(spectrum_text);
            Verdict v = decide(s, static_cast<bool>(*realize_cmd));
            if (emit_format == "json") {
                emit(verdict_to_json(s, v).dump(2) + "\n", out_path);
            } else {
                std::ostringstream os;
                os << to_string(v.kind);
                if (v.failed) os << " (failed condition: " << to_string(*v.failed) << ")";
                os << "\n";
                if (!s.input_was_sorted()) os << "note: input re-sorted descending\n";
                if (v.certificate) {
                    os << "residual " << fmt_double(v.certificate->residual) << "\n";
                    for (int i = 0; i < 5; ++i) {
                        for (int j = 0; j < 5; ++j)
                            os << (j ? " " : "") << fmt_double(v.certificate->matrix.at(i, j));
                        os << "\n";
                    }
                }
                emit(os.str(), out_path);
            }
            switch (v.kind) {
                case VerdictKind::realizable: return kExitRealizable;
                case VerdictKind::not_realizable: return kExitNotRealizable;
                case VerdictKind::out_of_region: return kExitOutOfRegion;
            }
        }

        if (*verify_cmd) {
            std::vector<std::pair<std::string, std::function<VerifyReport()>>> all = {
                {"appendix-a", [] { return verify_appendix_a(); }},
                {"appendix-b", [] { return verify_appendix_b(); }},
                {"appendix-c", [] { return verify_appendix_c(); }},
                {"appendix-d", [&] { return verify_appendix_d(2); }},
                {"identities-h", [] { return verify_h_identities(); }},
                {"identities-c", [] { return verify_c_identities(); }},
            };
            std::vector<std::function<VerifyReport()>> tasks;
            for (auto& [name, fn] : all) {
                bool wanted = verify_what == "all" || verify_what == name ||
                              (verify_what == "identities" &&
                               (name == "identities-h" || name == "identities-c"));
                if (wanted) tasks.push_back(fn);
            }
            auto reports = run_parallel(tasks, jobs, 0);
            bool pass = true;
            json out = json::array();
            std::ostringstream os;
            for (const auto& r : reports) {
                pass = pass && r.all_pass();
                if (emit_format == "json")
                    out.push_back(report_to_json(r));
                else
                    print_report_text(r, os);
            }
            emit(emit_format == "json" ? out.dump(2) + "\n" : os.str(), out_path);
            return pass ? 0 : 1;
        }

        if (*roots_cmd) {
            UniPoly p = parse_unipoly(poly_text);
            if (p.is_zero()) throw std::invalid_argument("zero polynomial");
            auto roots = isolate_real_roots(p, digits);
            if (emit_format == "json") {
                json arr = json::array();
                for (const auto& iv : roots)
                    arr.push_back({{"lo", iv.lo.str()},
                                   {"hi", iv.hi.str()},
                                   {"decimal", iv.midpoint().decimal_str(digits)}});
                emit(json{{"polynomial", p.str()}, {"digits", digits}, {"roots", arr}}.dump(2) +
                         "\n",
                     out_path);
            } else {
                std::ostringstream os;
                os << p.str() << ": " << roots.size() << " real root(s)\n";
                for (const auto& iv : roots)
                    os << "  " << iv.midpoint().decimal_str(digits) << "  in [" << iv.lo.str()
                       << ", " << iv.hi.str() << "]\n";
                emit(os.str(), out_path);
            }
            return 0;
        }

        if (*tables_cmd) {
            if (emit_format == "json") {
                json arr = json::array();
                for (const auto& spec : appendix_d_subranges()) {
                    PipelineResult r = run_subrange(spec, 2);
                    json row;
                    row["case"] = spec.case_id;
                    row["subrange"] = spec.index;
                    for (int i = 0; i < 5; ++i) {
                        row["m"][i] = r.bounds.m[i].str();
                        row["M"][i] = r.bounds.M[i].str();
                    }
                    row["r12"] = r.r12.str();
                    row["r12_tilde"] = r.r12_tilde.str();
                    row["M12_tilde"] = sqrt_surd_string(r.M12t_sq);
                    row["r24"] = r.r24.str();
                    row["r24_tilde"] = r.r24_tilde.str();
                    row["M24_tilde"] = sqrt_surd_string(r.M24t_sq);
                    row["m12"] = r.imp12.str();
                    if (r.pre12) row["m12_pre"] = r.pre12->str();
                    row["m13"] = r.d13.str();
                    row["m24"] = r.imp24.str();
                    if (r.pre24) row["m24_pre"] = r.pre24->str();
                    row["m35_13"] = r.d35_13.str();
                    row["m35_13_star"] = r.star13;
                    row["m35_45"] = r.d35_45.str();
                    row["m35_45_star"] = r.star45;
                    row["m45"] = r.imp45.str();
                    if (r.pre45) row["m45_pre"] = r.pre45->str();
                    row["P_Bmin_1"] = r.p_at_1.str();
                    arr.push_back(row);
                }
                emit(arr.dump(2) + "\n", out_path);
            } else {
                emit(appendix_d_tables_csv(2), out_path);
            }
            return 0;
        }

        if (*sample_cmd) {
            Rational trace = Rational::parse(trace_text);
            json arr = json::array();
            std::ostringstream os;
            int rho_ok = 0, lambda3_ok = 0;
            for (int k = 0; k < count; ++k) {
                FloatMatrix m = sample_random_matrix(trace, seed, static_cast<uint64_t>(k));
                Spectrum sp = eigen_jacobi(m, 1e-12);
                double rho = std::max(std::abs(sp.values[0]), std::abs(sp.values[4]));
                bool in_rho = rho <= 1.0;
                if (in_rho) {
                    ++rho_ok;
                    if (sp.values[2] <= trace.to_double() + 1e-12) ++lambda3_ok;
                }
                if (emit_format == "json") {
                    arr.push_back({{"index", k},
                                   {"matrix", matrix_to_json(m)},
                                   {"spectrum", sp.values},
                                   {"spectral_radius", rho}});
                } else if (count <= 10) {
                    os << "sample " << k << ": rho=" << fmt_double(rho) << " lambda3="
                       << fmt_double(sp.values[2]) << "\n";
                }
            }
            if (emit_format == "json") {
                json out = {{"samples", arr},
                            {"summary",
                             {{"count", count},
                              {"rho_at_most_1", rho_ok},
                              {"lambda3_within_trace", lambda3_ok}}}};
                emit(out.dump(2) + "\n", out_path);
            } else {
                os << "count " << count << ", rho<=1: " << rho_ok
                   << ", of those lambda3 <= trace: " << lambda3_ok << "\n";
                emit(os.str(), out_path);
            }
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
