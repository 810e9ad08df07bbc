#include "check.hpp"

#include "identities.hpp"
#include "matrix_cop.hpp"
#include "quartic2d.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

namespace coposit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string case_tag(const char* thm, const ClassifierDetail& d) {
    std::string s = std::string(thm) + "(" + std::to_string(d.kase) + ")";
    if (d.perm != std::array<int, 3>{1, 2, 3}) s += "/" + permutation_name(d.perm);
    return s;
}

RunReport check_matrix(const SymMatrix& m, const CheckOptions& opts) {
    RunReport rep;
    if (m.dim() == 2) {
        MatrixVerdict v = copositive_2x2(m, opts.strict);
        rep.verdict = v.verdict;
        rep.method = "Thm1.2(2x2)";
        rep.certificate = v.certificate;
    } else if (m.dim() == 3) {
        MatrixVerdict v = copositive_3x3(m, opts.strict);
        rep.verdict = v.verdict;
        rep.method = "Thm1.2(3x3)";
        rep.certificate = v.certificate;
    } else if (m.is_pm1_unit_diagonal()) {
        MatrixVerdict v = baston_pm1(m);
        rep.verdict = v.verdict;
        rep.method = "Thm1.1";
        rep.certificate = v.certificate;
    } else {
        rep.verdict = Verdict::Unknown;
        rep.method = "none";
    }
    if (opts.with_oracle) {
        // quadratic grid, reported for cross-checking
        QuadraticGridReport g = min_quadratic_on_simplex(m, 400);
        if (rep.verdict == Verdict::Unknown) {
            rep.verdict = g.min_value < -opts.tol
                              ? Verdict::NotCopositive
                              : (g.min_value > opts.tol ? Verdict::StrictlyCopositive
                                                        : Verdict::Copositive);
            rep.method = "oracle";
        }
        OracleReport orep;
        orep.min_value = g.min_value;
        orep.exact_min = g.exact_min;
        orep.argmin = g.argmin;
        orep.refined_argmin = g.argmin;
        orep.grid_denominator = 400;
        rep.oracle = orep;
    }
    return rep;
}

RunReport check_quartic2(const SymTensor4& t) {
    RunReport rep;
    if (!t.diagonal_positive()) {
        // the closed-form route needs a positive diagonal; a negative
        // diagonal entry is an immediate vertex witness
        for (int i = 1; i <= 2; ++i)
            if (t.entry(i, i, i, i) < 0) {
                rep.verdict = Verdict::NotCopositive;
                rep.method = "vertex";
                rep.certificate = "t_" + std::string(4, static_cast<char>('0' + i)) + " < 0";
                return rep;
            }
        rep.verdict = Verdict::Unknown;
        rep.method = "none";
        return rep;
    }

    Quartic2 q = Quartic2::from_normalized_tensor(t.normalize_diagonal());
    Quartic2Result r = copositive_quartic_2d_normalized_detail(q);
    rep.verdict = r.verdict;
    rep.method = r.branch > 0 ? "Lem2.1(" + std::to_string(r.branch) + ")"
                              : (r.verdict == Verdict::NotCopositive ? "Lem2.1(necessity)"
                                                                     : "Lem2.1");
    if (rep.verdict == Verdict::Copositive && sufficient_2d(t, true)) {
        rep.verdict = Verdict::StrictlyCopositive;
        rep.method = "Cor2.2(1)";
    }
    return rep;
}

RunReport check_quartic3(const SymTensor4& t, const CheckOptions&) {
    RunReport rep;
    if (auto p = match_strict_family(t)) {
        ClassifierDetail d = strict_copositive_pm1_detail(*p);
        if (d.result) {
            rep.verdict = Verdict::StrictlyCopositive;
            rep.method = case_tag("Thm3.4", d);
        } else {
            // certified by the enumerated truth table: every strict-family
            // pattern failing the classifier has a negative point
            rep.verdict = Verdict::NotCopositive;
            rep.method = "Thm3.4(necessity)";
        }
        return rep;
    }
    if (auto p = match_cop_family(t)) {
        ClassifierDetail d = copositive_pm1_detail(*p);
        if (d.result) {
            rep.verdict = Verdict::Copositive;
            rep.method = case_tag("Thm3.8", d);
        } else {
            rep.verdict = Verdict::NotCopositive;
            rep.method = "Thm3.8(necessity)";
        }
        return rep;
    }
    if (t.diagonal_positive()) {
        SufficiencyResult s = sufficient_strict_general_detail(t);
        if (s.fired) {
            rep.verdict = Verdict::StrictlyCopositive;
            rep.method = s.rule;
            return rep;
        }
        s = sufficient_cop_general_detail(t);
        if (s.fired) {
            rep.verdict = Verdict::Copositive;
            rep.method = s.rule;
            return rep;
        }
    } else {
        for (int i = 1; i <= 3; ++i)
            if (t.entry(i, i, i, i) < 0) {
                rep.verdict = Verdict::NotCopositive;
                rep.method = "vertex";
                rep.certificate = "t_" + std::string(4, static_cast<char>('0' + i)) + " < 0";
                return rep;
            }
    }
    rep.verdict = Verdict::Unknown;
    rep.method = "none";
    return rep;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunReport run_check(const TensorFile& file, const CheckOptions& opts) {
    auto t0 = Clock::now();
    RunReport rep;
    if (file.order == 2) {
        rep = check_matrix(file.to_matrix(), opts);
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }
    if (file.order == 3) {
        Verdict v = copositive_cubic_2d(file.to_cubic(), opts.strict);
        rep.verdict = v;
        rep.method = "Thm1.3(cubic)";
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }

    SymTensor4 t = file.to_tensor4();
    rep = t.dim() == 2 ? check_quartic2(t) : check_quartic3(t, opts);

    if (opts.with_oracle) {
        OracleParams params = OracleParams::defaults_for_dim(t.dim());
        params.tol = opts.tol;
        OracleReport orep = min_on_simplex(t, params);
        Verdict ov = oracle_verdict(t, params);
        orep.verdict = ov;
        rep.oracle = orep;
        if (rep.verdict == Verdict::Unknown && ov != Verdict::Unknown) {
            rep.verdict = ov;
            rep.method = "oracle";
        } else if (opts.strict && rep.verdict == Verdict::Copositive &&
                   ov == Verdict::StrictlyCopositive) {
            rep.verdict = ov;
            rep.method = "oracle";
        }
    }
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

std::string RunReport::text() const {
    std::ostringstream out;
    out << "verdict: " << to_string(verdict) << "\n";
    out << "method: " << method << "\n";
    if (!certificate.empty()) out << "certificate: " << certificate << "\n";
    if (oracle) {
        if (oracle->exact_min)
            out << "oracle_min: " << rational_to_string(*oracle->exact_min) << " ("
                << format_double(to_double(*oracle->exact_min)) << ")\n";
        else
            out << "oracle_min: " << format_double(oracle->min_value) << "\n";
        out << "oracle_argmin: " << oracle->argmin.to_string() << "\n";
        if (oracle->refined)
            out << "oracle_refined_min: " << format_double(oracle->min_value) << "\n";
        if (oracle->refined)
            out << "oracle_refined_argmin: " << oracle->refined_argmin.to_string() << "\n";
        if (oracle->grid_denominator > 0)
            out << "oracle_grid_denominator: " << oracle->grid_denominator << "\n";
        if (oracle->witness)
            out << "oracle_witness: k=" << oracle->witness->first
                << " value=" << format_double(oracle->witness->second) << "\n";
        else
            out << "oracle_witness: none\n";
    }
    return out.str();
}

RunReport run_minimize(const TensorFile& file, long long denominator, bool refine) {
    auto t0 = Clock::now();
    if (file.order != 4) throw ParseError("minimize expects an order-4 tensor file");
    SymTensor4 t = file.to_tensor4();
    OracleParams params = OracleParams::defaults_for_dim(t.dim());
    params.denominator = denominator > 0 ? denominator : params.denominator;
    params.refine = refine;
    OracleReport orep = min_on_simplex(t, params);
    orep.verdict = oracle_verdict(t, params);

    RunReport rep;
    rep.verdict = orep.verdict;
    rep.method = "oracle";
    rep.oracle = orep;
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

EnumerateResult run_enumerate(Family family) {
    auto t0 = Clock::now();
    OracleParams params = OracleParams::defaults_for_dim(3);
    auto rows = enumerate_family(family, params);

    EnumerateResult res;
    res.rows = static_cast<int>(rows.size());
    res.all_agree = true;
    std::ostringstream out;
    for (const auto& row : rows) {
        out << row.bits << " " << (row.analytic ? 1 : 0) << " " << to_string(row.oracle) << "\n";
        bool oracle_says = family == Family::Strict ? row.oracle == Verdict::StrictlyCopositive
                                                    : is_copositive(row.oracle);
        if (row.analytic != oracle_says || row.oracle == Verdict::Unknown) res.all_agree = false;
    }
    res.table_text = out.str();
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

InequalityRunReport run_inequalities(long long samples, unsigned long long seed) {
    auto t0 = Clock::now();
    std::ostringstream out;
    bool all = true;
    int passed = 0;
    auto uniform01 = [](std::mt19937_64& g) {
        return static_cast<double>(g() >> 11) * 0x1.0p-53;
    };

    for (InequalityId id : all_inequality_ids()) {
        std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ull * (static_cast<int>(id) + 1)));
        bool pass = true;
        if (is_strict_inequality(id)) {
            for (long long s = 0; s < samples && pass; ++s) {
                double x[3];
                do {
                    for (double& v : x) v = 2.0 * uniform01(gen);
                } while (x[0] == 0 && x[1] == 0 && x[2] == 0);
                pass = residual(id, x) > 0.0;
            }
            // exact-rational spot checks
            long long spot = std::min<long long>(1000, samples);
            for (long long s = 0; s < spot && pass; ++s) {
                std::array<Rational, 3> x = {Rational(gen() % 2000, 1000),
                                             Rational(gen() % 2000, 1000),
                                             Rational(gen() % 2000, 1000)};
                if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
                pass = residual_exact(id, x) > 0;
            }
            out << tag_name(id) << " strict_positivity samples=" << samples
                << (pass ? " PASS" : " FAIL") << "\n";
        } else {
            for (long long s = 0; s < samples && pass; ++s) {
                double x[3];
                for (double& v : x) v = 2.0 * uniform01(gen);
                pass = residual(id, x) >= 0.0;
            }
            long long spot = std::min<long long>(1000, samples);
            for (long long s = 0; s < spot && pass; ++s) {
                std::array<Rational, 3> x = {Rational(gen() % 2000, 1000),
                                             Rational(gen() % 2000, 1000),
                                             Rational(gen() % 2000, 1000)};
                pass = residual_exact(id, x) >= 0;
            }
            bool locus = equality_locus_check(
                id, static_cast<int>(std::min<long long>(10000, samples)), seed);
            out << tag_name(id) << " nonnegativity samples=" << samples
                << (pass ? " PASS" : " FAIL") << "\n";
            out << tag_name(id) << " equality_locus" << (locus ? " PASS" : " FAIL") << "\n";
            pass = pass && locus;
        }
        all = all && pass;
        passed += pass ? 1 : 0;
    }
    int total = static_cast<int>(all_inequality_ids().size());
    out << "summary: " << passed << "/" << total << " PASS\n";

    InequalityRunReport rep;
    rep.all_pass = all;
    rep.text = out.str();
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

}  // namespace coposit
