// Command-line front end. Talks to the library exclusively through the C
// API in galoislab.h.

#include <cstdint>
#include <future>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galoislab.h"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_verification_failed = 1;
constexpr int k_exit_usage = 2;

struct StringDeleter {
    void operator()(char* s) const { gl_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
    void operator()(gl_poly* p) const { gl_poly_free(p); }
};
using Poly = std::unique_ptr<gl_poly, PolyDeleter>;

int fail(gl_status status) {
    std::cerr << "error: " << gl_last_error() << " (" << gl_status_name(status) << ")\n";
    return status == GL_ERROR_INVALID_ARGUMENT || status == GL_ERROR_NULL_POINTER
               ? k_exit_usage
               : k_exit_verification_failed;
}

int run_galois(std::uint32_t N, std::uint32_t r, const std::string& eval_at,
               const std::string& format, bool macmahon) {
    gl_poly* raw = nullptr;
    const gl_status status = macmahon ? gl_galois_via_macmahon(N, r, &raw)
                                      : gl_galois_number(N, r, &raw);
    if (status != GL_OK) return fail(status);
    Poly poly(raw);
    char* text = nullptr;
    gl_status render_status;
    if (!eval_at.empty())
        render_status = gl_poly_eval(poly.get(), eval_at.c_str(), &text);
    else if (format == "json")
        render_status = gl_poly_to_json(poly.get(), &text);
    else
        render_status = gl_poly_to_text(poly.get(), &text);
    if (render_status != GL_OK) return fail(render_status);
    CString owned(text);
    std::cout << owned.get() << "\n";
    return k_exit_ok;
}

int run_verify(const std::string& suite, std::uint32_t N_max, std::uint32_t r_max,
               std::uint32_t q, std::uint32_t j_max, std::uint32_t order, std::uint32_t n_max,
               const std::string& format) {
    char* report = nullptr;
    int passed = 0;
    const gl_status status = gl_verify_suite(suite.c_str(), N_max, r_max, q, j_max, order,
                                             n_max, format == "json" ? 1 : 0, &report, &passed);
    if (status != GL_OK) return fail(status);
    CString owned(report);
    std::cout << owned.get();
    if (format != "json") std::cout.flush();
    if (format == "json") std::cout << "\n";
    return passed ? k_exit_ok : k_exit_verification_failed;
}

int run_normality(std::uint32_t r, const std::vector<std::uint32_t>& Ns,
                  std::uint32_t precision, const std::string& format, unsigned jobs) {
    if (Ns.empty()) {
        std::cerr << "error: empty N list\n";
        return k_exit_usage;
    }
    const bool csv = format == "csv";
    const bool json = format == "json";
    auto compute = [&](std::uint32_t N) -> std::pair<gl_status, std::string> {
        char* out = nullptr;
        const gl_status status = csv || format == "text"
                                     ? gl_normality_report_csv_row(N, r, precision, &out)
                                     : gl_normality_report_json(N, r, precision, &out);
        if (status != GL_OK) return {status, ""};
        CString owned(out);
        return {GL_OK, std::string(owned.get())};
    };
    std::vector<std::pair<gl_status, std::string>> rows(Ns.size());
    if (jobs > 1) {
        // Fan out, then merge in input order.
        std::vector<std::future<std::pair<gl_status, std::string>>> futures;
        futures.reserve(Ns.size());
        for (auto N : Ns)
            futures.push_back(std::async(std::launch::async, compute, N));
        for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < Ns.size(); ++i) rows[i] = compute(Ns[i]);
    }
    for (const auto& [status, _] : rows)
        if (status != GL_OK) return fail(status);
    if (json) {
        std::cout << "[";
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::cout << (i ? "," : "") << rows[i].second;
        std::cout << "]\n";
    } else {
        std::cout << gl_normality_csv_header() << "\n";
        for (const auto& [_, row] : rows) std::cout << row << "\n";
    }
    return k_exit_ok;
}

int print_string_report(gl_status status, char* out) {
    if (status != GL_OK) return fail(status);
    CString owned(out);
    if (owned) std::cout << owned.get() << "\n";
    return k_exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized Galois numbers, Rogers-Szego expansions and "
                 "q-multinomial statistics"};
    app.require_subcommand(1);

    std::uint32_t N = 0, r = 2, precision = 12, order = 0;
    std::uint32_t N_max = 0, r_max = 0, j_max = 0, n_max = 0, q_opt = 0;
    std::uint64_t q_code = 2;
    std::uint64_t cap = 0;
    unsigned jobs = 1;
    std::string eval_at, format = "text", suite;
    std::vector<std::uint32_t> N_list;
    bool use_macmahon = false;

    auto* galois = app.add_subcommand("galois", "Print G_N^(r) or its value at a point");
    galois->add_option("N", N, "Ambient dimension")->required();
    galois->add_option("r", r, "Flag length")->required();
    galois->add_option("--eval", eval_at, "Evaluate at a rational, e.g. 2 or 1/2");
    galois->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    galois->add_flag("--macmahon", use_macmahon,
                     "Use the descent-weighted inversion statistic route");

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", suite,
                       "identity | oracle | moments | cumulants | stanley | demazure | codes")
        ->required();
    verify->add_option("--N-max", N_max, "Largest N (0 = suite default)");
    verify->add_option("--r-max", r_max, "Largest r (0 = suite default)");
    verify->add_option("--q", q_opt, "Field size for the oracle suite");
    verify->add_option("--j-max", j_max, "Largest cumulant order");
    verify->add_option("--order", order, "Series truncation order");
    verify->add_option("--n-max", n_max, "Largest code length");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* normality = app.add_subcommand("normality",
                                         "Moment and Kolmogorov diagnostics for G_N^(r)");
    normality->add_option("--r", r, "Flag length")->required();
    normality->add_option("--N", N_list, "Comma-separated N list")
        ->required()
        ->delimiter(',');
    normality->add_option("--precision", precision, "CDF precision digits (default 12)");
    normality->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    normality->add_option("--jobs", jobs, "Parallel instances (merged in input order)");

    auto* rs = app.add_subcommand("rogers-szego", "JSON expansion of H_N^(r)");
    rs->add_option("N", N, "Degree")->required();
    rs->add_option("r", r, "Number of z variables")->required();

    auto* descents = app.add_subcommand("descents",
                                        "CSV descent/inversion table of S_N");
    descents->add_option("N", N, "Symmetric group size")->required();

    auto* demazure = app.add_subcommand("demazure", "Degree-shift report (JSON)");
    demazure->add_option("N", N, "Weight multiple")->required();
    demazure->add_option("r", r, "Rank parameter")->required();

    auto* codes = app.add_subcommand("codes", "Asymptotic linear q-ary code counts (JSON)");
    codes->add_option("n", N, "Code length")->required();
    codes->add_option("q", q_code, "Field size (prime power)")->required();

    auto* mahonian = app.add_subcommand("mahonian",
                                        "Sup-norm gap between N!/r^N G_N^(r) and [N]_q!");
    mahonian->add_option("N", N, "Symmetric group size")->required();
    mahonian->add_option("r", r, "Flag length")->required();

    auto* deformed = app.add_subcommand("deformed", "t-deformed G_N^(r)(q,t) as text");
    deformed->add_option("N", N, "Symmetric group size")->required();
    deformed->add_option("r", r, "Flag length")->required();

    app.add_option("--max-cells", cap, "Override the expansion cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return k_exit_usage;
    }

    if (cap != 0) gl_set_max_cells(cap);

    if (galois->parsed()) return run_galois(N, r, eval_at, format, use_macmahon);
    if (verify->parsed())
        return run_verify(suite, N_max, r_max, q_opt, j_max, order, n_max, format);
    if (normality->parsed()) return run_normality(r, N_list, precision, format, jobs);
    if (rs->parsed()) {
        char* out = nullptr;
        const gl_status status = gl_rogers_szego_json(N, r, &out);
        return print_string_report(status, out);
    }
    if (descents->parsed()) {
        char* out = nullptr;
        const gl_status status = gl_descent_inv_table_csv(N, &out);
        if (status != GL_OK) return fail(status);
        CString owned(out);
        std::cout << owned.get();
        return k_exit_ok;
    }
    if (demazure->parsed()) {
        char* out = nullptr;
        const gl_status status = gl_demazure_report_json(N, r, &out);
        return print_string_report(status, out);
    }
    if (codes->parsed()) {
        char* out = nullptr;
        const gl_status status = gl_code_asymptotics_json(N, q_code, &out);
        return print_string_report(status, out);
    }
    if (mahonian->parsed()) {
        char* out = nullptr;
        const gl_status status = gl_mahonian_gap(N, r, &out);
        return print_string_report(status, out);
    }
    if (deformed->parsed()) {
        char* out = nullptr;
        const gl_status status = gl_deformed_galois_text(N, r, &out);
        return print_string_report(status, out);
    }
    return k_exit_usage;
}
