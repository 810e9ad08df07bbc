#ifndef COPOSIT_CHECK_HPP
#define COPOSIT_CHECK_HPP

#include "oracle.hpp"
#include "quartic3d.hpp"
#include "tensor_file.hpp"
#include "verdict.hpp"

#include <optional>
#include <string>

namespace coposit {

struct CheckOptions {
    bool strict = false;
    bool with_oracle = false;
    double tol = 1e-7;
};

// Outcome of one analysis run. `text()` is byte-deterministic for fixed
// inputs and flags; elapsed time is reported separately.
struct RunReport {
    Verdict verdict = Verdict::Unknown;
    std::string method;       // theorem/branch tag, e.g. "Thm3.8(2)/perm(132)", or "oracle"
    std::string certificate;  // failed condition / violating triple, when any
    std::optional<OracleReport> oracle;
    double elapsed_seconds = 0.0;

    std::string text() const;
    int exit_code_for(bool strict_requested) const {
        return exit_code(verdict, strict_requested);
    }
};

RunReport run_check(const TensorFile& file, const CheckOptions& opts);
RunReport run_minimize(const TensorFile& file, long long denominator, bool refine);

struct EnumerateResult {
    bool all_agree = false;
    int rows = 0;
    std::string table_text;  // fixture format: "<bits> <analytic 0/1> <verdict>" per line
    double elapsed_seconds = 0.0;
};
EnumerateResult run_enumerate(Family family);

struct InequalityRunReport {
    bool all_pass = false;
    std::string text;  // byte-deterministic given samples and seed
    double elapsed_seconds = 0.0;
};
InequalityRunReport run_inequalities(long long samples, unsigned long long seed);

std::string format_double(double v);  // deterministic %.17g

}  // namespace coposit

#endif
