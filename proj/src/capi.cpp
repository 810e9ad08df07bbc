#include "coposit/coposit.h"

#include "check.hpp"
#include "tensor_file.hpp"

#include <cstring>
#include <fstream>
#include <string>

using namespace coposit;

struct coposit_tensor {
    TensorFile file;
    mutable std::string text_cache;
};

struct coposit_report {
    Verdict verdict = Verdict::Unknown;
    std::string method;
    std::string text;
    double elapsed = 0.0;
    // enumerate/inequalities runs fold their outcome into verdict:
    // all-agree/all-pass -> Copositive-slot is not meaningful there, so the
    // exit code is carried explicitly.
    int fixed_exit = -1;
};

namespace {

void put_error(char* errbuf, size_t errlen, const std::string& msg) {
    if (!errbuf || errlen == 0) return;
    std::strncpy(errbuf, msg.c_str(), errlen - 1);
    errbuf[errlen - 1] = '\0';
}

coposit_verdict to_c(Verdict v) {
    switch (v) {
        case Verdict::StrictlyCopositive: return COPOSIT_STRICTLY_COPOSITIVE;
        case Verdict::Copositive: return COPOSIT_COPOSITIVE;
        case Verdict::NotCopositive: return COPOSIT_NOT_COPOSITIVE;
        case Verdict::Unknown: return COPOSIT_UNKNOWN;
    }
    return COPOSIT_UNKNOWN;
}

coposit_report* report_from(const RunReport& rep) {
    auto* r = new coposit_report;
    r->verdict = rep.verdict;
    r->method = rep.method;
    r->text = rep.text();
    r->elapsed = rep.elapsed_seconds;
    return r;
}

}  // namespace

extern "C" {

const char* coposit_verdict_string(coposit_verdict v) {
    switch (v) {
        case COPOSIT_STRICTLY_COPOSITIVE: return "STRICTLY_COPOSITIVE";
        case COPOSIT_COPOSITIVE: return "COPOSITIVE";
        case COPOSIT_NOT_COPOSITIVE: return "NOT_COPOSITIVE";
        case COPOSIT_UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

coposit_status coposit_tensor_parse(const char* text, coposit_tensor** out, char* errbuf,
                                    size_t errlen) {
    if (!text || !out) return COPOSIT_ERR_INVALID;
    try {
        auto* t = new coposit_tensor{TensorFile::parse(text), {}};
        *out = t;
        return COPOSIT_OK;
    } catch (const ParseError& e) {
        put_error(errbuf, errlen, e.what());
        return COPOSIT_ERR_PARSE;
    } catch (const std::exception& e) {
        put_error(errbuf, errlen, e.what());
        return COPOSIT_ERR_INTERNAL;
    }
}

coposit_status coposit_tensor_load(const char* path, coposit_tensor** out, char* errbuf,
                                   size_t errlen) {
    if (!path || !out) return COPOSIT_ERR_INVALID;
    std::ifstream in(path);
    if (!in) {
        put_error(errbuf, errlen, std::string("cannot open '") + path + "'");
        return COPOSIT_ERR_IO;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return coposit_tensor_parse(text.c_str(), out, errbuf, errlen);
}

coposit_status coposit_tensor_write(const coposit_tensor* t, const char* path) {
    if (!t || !path) return COPOSIT_ERR_INVALID;
    try {
        t->file.save(path);
        return COPOSIT_OK;
    } catch (const std::exception&) {
        return COPOSIT_ERR_IO;
    }
}

const char* coposit_tensor_text(const coposit_tensor* t) {
    if (!t) return "";
    t->text_cache = t->file.write();
    return t->text_cache.c_str();
}

int coposit_tensor_order(const coposit_tensor* t) { return t ? t->file.order : 0; }
int coposit_tensor_dim(const coposit_tensor* t) { return t ? t->file.dim : 0; }
void coposit_tensor_free(coposit_tensor* t) { delete t; }

coposit_status coposit_check(const coposit_tensor* t, int strict, int with_oracle, double tol,
                             coposit_report** out) {
    if (!t || !out) return COPOSIT_ERR_INVALID;
    try {
        CheckOptions opts;
        opts.strict = strict != 0;
        opts.with_oracle = with_oracle != 0;
        if (tol > 0) opts.tol = tol;
        *out = report_from(run_check(t->file, opts));
        return COPOSIT_OK;
    } catch (const ParseError&) {
        return COPOSIT_ERR_PARSE;
    } catch (const std::invalid_argument&) {
        return COPOSIT_ERR_INVALID;
    } catch (const std::domain_error&) {
        return COPOSIT_ERR_INVALID;
    } catch (const std::exception&) {
        return COPOSIT_ERR_INTERNAL;
    }
}

coposit_status coposit_minimize(const coposit_tensor* t, long long denominator, int refine,
                                coposit_report** out) {
    if (!t || !out) return COPOSIT_ERR_INVALID;
    try {
        *out = report_from(run_minimize(t->file, denominator, refine != 0));
        return COPOSIT_OK;
    } catch (const ParseError&) {
        return COPOSIT_ERR_PARSE;
    } catch (const std::invalid_argument&) {
        return COPOSIT_ERR_INVALID;
    } catch (const std::exception&) {
        return COPOSIT_ERR_INTERNAL;
    }
}

coposit_status coposit_enumerate(const char* family, const char* out_path, int* all_agree,
                                 coposit_report** out) {
    if (!family) return COPOSIT_ERR_INVALID;
    Family f;
    if (std::strcmp(family, "strict") == 0)
        f = Family::Strict;
    else if (std::strcmp(family, "cop") == 0)
        f = Family::Cop;
    else
        return COPOSIT_ERR_INVALID;
    try {
        EnumerateResult res = run_enumerate(f);
        if (out_path) {
            std::ofstream o(out_path);
            if (!o) return COPOSIT_ERR_IO;
            o << res.table_text;
        }
        if (all_agree) *all_agree = res.all_agree ? 1 : 0;
        if (out) {
            auto* r = new coposit_report;
            r->verdict = Verdict::Unknown;
            r->method = "enumerate";
            r->text = res.table_text;
            r->elapsed = res.elapsed_seconds;
            r->fixed_exit = res.all_agree ? 0 : 1;
            *out = r;
        }
        return COPOSIT_OK;
    } catch (const std::exception&) {
        return COPOSIT_ERR_INTERNAL;
    }
}

coposit_status coposit_verify_inequalities(long long samples, unsigned long long seed,
                                           int* all_pass, coposit_report** out) {
    try {
        InequalityRunReport res = run_inequalities(samples > 0 ? samples : 100000, seed);
        if (all_pass) *all_pass = res.all_pass ? 1 : 0;
        if (out) {
            auto* r = new coposit_report;
            r->verdict = Verdict::Unknown;
            r->method = "inequalities";
            r->text = res.text;
            r->elapsed = res.elapsed_seconds;
            r->fixed_exit = res.all_pass ? 0 : 1;
            *out = r;
        }
        return COPOSIT_OK;
    } catch (const std::exception&) {
        return COPOSIT_ERR_INTERNAL;
    }
}

coposit_verdict coposit_report_verdict(const coposit_report* r) {
    return r ? to_c(r->verdict) : COPOSIT_UNKNOWN;
}

const char* coposit_report_method(const coposit_report* r) { return r ? r->method.c_str() : ""; }

const char* coposit_report_text(const coposit_report* r) { return r ? r->text.c_str() : ""; }

int coposit_report_exit_code(const coposit_report* r, int strict) {
    if (!r) return 3;
    if (r->fixed_exit >= 0) return r->fixed_exit;
    return exit_code(r->verdict, strict != 0);
}

double coposit_report_elapsed_seconds(const coposit_report* r) { return r ? r->elapsed : 0.0; }

void coposit_report_free(coposit_report* r) { delete r; }

}  // extern "C"
