#include "galoislab.h"

#include <cstring>
#include <new>
#include <string>

#include "galoislab/applications.hpp"
#include "galoislab/config.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/normality.hpp"
#include "galoislab/permutation_stats.hpp"
#include "galoislab/q_combinatorics.hpp"
#include "galoislab/verify.hpp"

using galoislab::cap_exceeded;
using galoislab::invalid_input;
using galoislab::exact::BigInteger;
using galoislab::exact::Rational;
using galoislab::qpoly::QPolynomial;

struct gl_poly {
    QPolynomial value;
};

namespace {

thread_local std::string t_last_error;

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, mapping exceptions onto status codes and recording the message.
template <typename Fn>
gl_status guarded(Fn&& fn) {
    try {
        fn();
        return GL_OK;
    } catch (const cap_exceeded& e) {
        t_last_error = e.what();
        return GL_ERROR_CAP_EXCEEDED;
    } catch (const invalid_input& e) {
        t_last_error = e.what();
        return GL_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return GL_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GL_ERROR_INTERNAL;
    }
}

gl_status require(const void* p) {
    if (p != nullptr) return GL_OK;
    t_last_error = "null pointer argument";
    return GL_ERROR_NULL_POINTER;
}

Rational parse_rational(const char* text) {
    if (text == nullptr) throw invalid_input("null rational literal");
    const std::string s(text);
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInteger(s));
    return Rational(BigInteger(s.substr(0, slash)), BigInteger(s.substr(slash + 1)));
}

} // namespace

extern "C" {

const char* gl_version(void) { return "1.0.0"; }

const char* gl_status_name(gl_status status) {
    switch (status) {
        case GL_OK: return "ok";
        case GL_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case GL_ERROR_CAP_EXCEEDED: return "cap exceeded";
        case GL_ERROR_NULL_POINTER: return "null pointer";
        case GL_ERROR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* gl_last_error(void) { return t_last_error.c_str(); }

void gl_string_free(char* s) { delete[] s; }

void gl_poly_free(gl_poly* poly) { delete poly; }

uint64_t gl_get_max_cells(void) { return galoislab::max_cells(); }

gl_status gl_set_max_cells(uint64_t cap) {
    galoislab::set_max_cells(cap);
    return GL_OK;
}

gl_status gl_galois_number(uint32_t N, uint32_t r, gl_poly** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = new gl_poly{galoislab::qcombi::galois_number(N, r)}; });
}

gl_status gl_galois_via_macmahon(uint32_t N, uint32_t r, gl_poly** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = new gl_poly{galoislab::permstat::galois_via_macmahon(N, r)}; });
}

gl_status gl_q_factorial(uint32_t k, gl_poly** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = new gl_poly{galoislab::qcombi::q_factorial(k)}; });
}

gl_status gl_q_binomial(uint32_t n, int64_t k, gl_poly** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = new gl_poly{galoislab::qcombi::q_binomial(n, k)}; });
}

gl_status gl_q_multinomial(uint32_t N, const uint32_t* parts, size_t n_parts, gl_poly** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    if (gl_status s = require(parts); s != GL_OK) return s;
    return guarded([&] {
        std::vector<uint32_t> k(parts, parts + n_parts);
        *out = new gl_poly{
            galoislab::qcombi::q_multinomial(N, galoislab::qcombi::Composition(std::move(k)))};
    });
}

gl_status gl_poly_degree(const gl_poly* poly, int64_t* out) {
    if (gl_status s = require(poly); s != GL_OK) return s;
    if (gl_status s = require(out); s != GL_OK) return s;
    *out = poly->value.degree();
    return GL_OK;
}

gl_status gl_poly_coefficient(const gl_poly* poly, uint64_t exponent, char** out) {
    if (gl_status s = require(poly); s != GL_OK) return s;
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = copy_string(poly->value.coeff(exponent).to_string()); });
}

gl_status gl_poly_to_text(const gl_poly* poly, char** out) {
    if (gl_status s = require(poly); s != GL_OK) return s;
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = copy_string(poly->value.to_string()); });
}

gl_status gl_poly_to_json(const gl_poly* poly, char** out) {
    if (gl_status s = require(poly); s != GL_OK) return s;
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = copy_string(poly->value.to_json()); });
}

gl_status gl_poly_eval(const gl_poly* poly, const char* rational, char** out) {
    if (gl_status s = require(poly); s != GL_OK) return s;
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded(
        [&] { *out = copy_string(poly->value.eval(parse_rational(rational)).to_string()); });
}

gl_status gl_rogers_szego_json(uint32_t N, uint32_t r, char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] { *out = copy_string(galoislab::qcombi::rogers_szego(N, r).to_json()); });
}

gl_status gl_descent_inv_table_csv(uint32_t N, char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded(
        [&] { *out = copy_string(galoislab::permstat::descent_inv_table(N).to_csv()); });
}

gl_status gl_normality_report_json(uint32_t N, uint32_t r, uint32_t precision_digits,
                                   char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] {
        *out = copy_string(
            galoislab::stats::normality_report(N, r, precision_digits ? precision_digits : 12)
                .to_json());
    });
}

gl_status gl_normality_report_csv_row(uint32_t N, uint32_t r, uint32_t precision_digits,
                                      char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] {
        *out = copy_string(
            galoislab::stats::normality_report(N, r, precision_digits ? precision_digits : 12)
                .to_csv_row());
    });
}

const char* gl_normality_csv_header(void) { return "N,r,mean,variance,skew_sq,ex_kurtosis,kolmogorov"; }

gl_status gl_demazure_report_json(uint32_t N, uint32_t r, char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] {
        *out = copy_string(galoislab::apps::demazure_basic_specialization(N, r).to_json());
    });
}

gl_status gl_code_asymptotics_json(uint32_t n, uint64_t q, char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded(
        [&] { *out = copy_string(galoislab::apps::code_count_asymptotics(n, q).to_json()); });
}

gl_status gl_mahonian_gap(uint32_t N, uint32_t r, char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] {
        *out = copy_string(galoislab::permstat::mahonian_limit_gap(N, r).to_string());
    });
}

gl_status gl_deformed_galois_text(uint32_t N, uint32_t r, char** out) {
    if (gl_status s = require(out); s != GL_OK) return s;
    return guarded([&] {
        *out = copy_string(galoislab::permstat::deformed_galois(N, r).to_string());
    });
}

gl_status gl_verify_suite(const char* suite, uint32_t N_max, uint32_t r_max, uint32_t q,
                          uint32_t j_max, uint32_t order, uint32_t n_max, int as_json,
                          char** report, int* passed) {
    if (gl_status s = require(suite); s != GL_OK) return s;
    if (gl_status s = require(report); s != GL_OK) return s;
    if (gl_status s = require(passed); s != GL_OK) return s;
    return guarded([&] {
        galoislab::verify::VerifyOptions options;
        options.N_max = N_max;
        options.r_max = r_max;
        options.q = q;
        options.j_max = j_max;
        options.order = order;
        options.n_max = n_max;
        const auto result = galoislab::verify::run_suite(suite, options);
        *report = copy_string(as_json ? result.to_json() : result.to_text());
        *passed = result.all_passed() ? 1 : 0;
    });
}

} // extern "C"
