// coposit CLI: check | minimize | enumerate | inequalities
//
// Exit codes: 0 copositive (strictly with --strict) / run passed,
// 1 not copositive / disagreement, 2 unknown or inconclusive, 3 input error.
// Reports on stdout are byte-deterministic for fixed flags and seed;
// timing goes to stderr.

#include <coposit/coposit.h>

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

int fail_input(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 3;
}

struct ReportGuard {
    coposit_report* r = nullptr;
    ~ReportGuard() { coposit_report_free(r); }
};

struct TensorGuard {
    coposit_tensor* t = nullptr;
    ~TensorGuard() { coposit_tensor_free(t); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"copositivity tests for low-order symmetric tensors"};
    app.require_subcommand(1);

    std::string path, out_path, family;
    bool strict = false, with_oracle = false, refine = false;
    double tol = 1e-7;
    long long denominator = 0, samples = 100000;
    unsigned long long seed = 20240613ull;

    CLI::App* check = app.add_subcommand("check", "classify a tensor file");
    check->add_option("path", path, "tensor document")->required();
    check->add_flag("--strict", strict, "require strict copositivity for exit 0");
    check->add_flag("--oracle", with_oracle, "also run the simplex-grid oracle");
    check->add_option("--tol", tol, "oracle tolerance band (default 1e-7)");

    CLI::App* minimize = app.add_subcommand("minimize", "grid-minimize the form on the simplex");
    minimize->add_option("path", path, "tensor document (order 4)")->required();
    minimize->add_option("--denominator", denominator, "barycentric grid denominator");
    minimize->add_flag("--refine", refine, "shrinking-neighborhood refinement");

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate a +-1 family truth table");
    enumerate->add_option("--family", family, "strict | cop")->required();
    enumerate->add_option("--out", out_path, "write the table to this file");

    CLI::App* inequalities =
        app.add_subcommand("inequalities", "verify the ternary quartic inequalities");
    inequalities->add_option("--samples", samples, "random samples per inequality");
    inequalities->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    char errbuf[512] = {0};

    if (check->parsed() || minimize->parsed()) {
        TensorGuard tensor;
        if (coposit_tensor_load(path.c_str(), &tensor.t, errbuf, sizeof errbuf) != COPOSIT_OK)
            return fail_input(errbuf);

        ReportGuard rep;
        coposit_status st;
        if (check->parsed())
            st = coposit_check(tensor.t, strict ? 1 : 0, with_oracle ? 1 : 0, tol, &rep.r);
        else
            st = coposit_minimize(tensor.t, denominator, refine ? 1 : 0, &rep.r);
        if (st != COPOSIT_OK) return fail_input("analysis rejected the input");

        std::fputs(coposit_report_text(rep.r), stdout);
        std::fprintf(stderr, "elapsed: %.3fs\n", coposit_report_elapsed_seconds(rep.r));
        return coposit_report_exit_code(rep.r, strict ? 1 : 0);
    }

    if (enumerate->parsed()) {
        if (family != "strict" && family != "cop")
            return fail_input("--family must be 'strict' or 'cop'");
        int agree = 0;
        ReportGuard rep;
        coposit_status st = coposit_enumerate(family.c_str(), out_path.empty() ? nullptr : out_path.c_str(),
                                              &agree, &rep.r);
        if (st == COPOSIT_ERR_IO) return fail_input("cannot write '" + out_path + "'");
        if (st != COPOSIT_OK) return fail_input("enumeration failed");
        if (out_path.empty()) std::fputs(coposit_report_text(rep.r), stdout);
        std::fprintf(stderr, "rows: %s, agreement: %s, elapsed: %.3fs\n",
                     family == "strict" ? "64" : "512", agree ? "full" : "BROKEN",
                     coposit_report_elapsed_seconds(rep.r));
        return agree ? 0 : 1;
    }

    // inequalities
    int all_pass = 0;
    ReportGuard rep;
    if (coposit_verify_inequalities(samples, seed, &all_pass, &rep.r) != COPOSIT_OK)
        return fail_input("inequality run failed");
    std::fputs(coposit_report_text(rep.r), stdout);
    std::fprintf(stderr, "elapsed: %.3fs\n", coposit_report_elapsed_seconds(rep.r));
    return all_pass ? 0 : 1;
}
