// Exercises the extern-C surface exactly as an external client would:
// through galoislab.h and the shared library only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "galoislab.h"

namespace {

std::string take(char* s) {
    std::string out(s);
    gl_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(gl_version()) == "1.0.0");
    CHECK(std::string(gl_status_name(GL_OK)) == "ok");
    CHECK(std::string(gl_status_name(GL_ERROR_CAP_EXCEEDED)) == "cap exceeded");
}

TEST_CASE("galois polynomial handle round trip") {
    gl_poly* poly = nullptr;
    REQUIRE(gl_galois_number(2, 2, &poly) == GL_OK);
    char* text = nullptr;
    REQUIRE(gl_poly_to_text(poly, &text) == GL_OK);
    CHECK(take(text) == "3 + q");
    char* json = nullptr;
    REQUIRE(gl_poly_to_json(poly, &json) == GL_OK);
    CHECK(take(json) == "[\"3\",\"1\"]");
    int64_t degree = 0;
    REQUIRE(gl_poly_degree(poly, &degree) == GL_OK);
    CHECK(degree == 1);
    char* coeff = nullptr;
    REQUIRE(gl_poly_coefficient(poly, 0, &coeff) == GL_OK);
    CHECK(take(coeff) == "3");
    char* value = nullptr;
    REQUIRE(gl_poly_eval(poly, "2", &value) == GL_OK);
    CHECK(take(value) == "5");
    REQUIRE(gl_poly_eval(poly, "1/2", &value) == GL_OK);
    CHECK(take(value) == "7/2");
    gl_poly_free(poly);
}

TEST_CASE("macmahon route matches the recurrence route") {
    gl_poly *a = nullptr, *b = nullptr;
    REQUIRE(gl_galois_number(6, 3, &a) == GL_OK);
    REQUIRE(gl_galois_via_macmahon(6, 3, &b) == GL_OK);
    char *ta = nullptr, *tb = nullptr;
    REQUIRE(gl_poly_to_text(a, &ta) == GL_OK);
    REQUIRE(gl_poly_to_text(b, &tb) == GL_OK);
    CHECK(take(ta) == take(tb));
    gl_poly_free(a);
    gl_poly_free(b);
}

TEST_CASE("q combinatorics constructors") {
    gl_poly* fact = nullptr;
    REQUIRE(gl_q_factorial(3, &fact) == GL_OK);
    char* text = nullptr;
    REQUIRE(gl_poly_to_text(fact, &text) == GL_OK);
    CHECK(take(text) == "1 + 2*q + 2*q^2 + q^3");
    gl_poly_free(fact);

    gl_poly* binom = nullptr;
    REQUIRE(gl_q_binomial(4, 2, &binom) == GL_OK);
    REQUIRE(gl_poly_to_text(binom, &text) == GL_OK);
    CHECK(take(text) == "1 + q + 2*q^2 + q^3 + q^4");
    gl_poly_free(binom);

    const uint32_t parts[3] = {1, 1, 1};
    gl_poly* multi = nullptr;
    REQUIRE(gl_q_multinomial(3, parts, 3, &multi) == GL_OK);
    REQUIRE(gl_poly_to_text(multi, &text) == GL_OK);
    CHECK(take(text) == "1 + 2*q + 2*q^2 + q^3");
    gl_poly_free(multi);
}

TEST_CASE("null pointers are rejected without crashing") {
    CHECK(gl_galois_number(2, 2, nullptr) == GL_ERROR_NULL_POINTER);
    CHECK(gl_poly_to_text(nullptr, nullptr) == GL_ERROR_NULL_POINTER);
    gl_poly* poly = nullptr;
    REQUIRE(gl_galois_number(2, 2, &poly) == GL_OK);
    CHECK(gl_poly_to_text(poly, nullptr) == GL_ERROR_NULL_POINTER);
    gl_poly_free(poly);
    CHECK(gl_verify_suite(nullptr, 0, 0, 0, 0, 0, 0, 1, nullptr, nullptr) ==
          GL_ERROR_NULL_POINTER);
}

TEST_CASE("invalid arguments set the error message") {
    gl_poly* poly = nullptr;
    CHECK(gl_galois_number(3, 0, &poly) == GL_ERROR_INVALID_ARGUMENT);
    CHECK(std::strlen(gl_last_error()) > 0);
    gl_poly* ok = nullptr;
    REQUIRE(gl_galois_number(1, 1, &ok) == GL_OK);
    char* out = nullptr;
    CHECK(gl_poly_eval(ok, "not-a-number", &out) == GL_ERROR_INVALID_ARGUMENT);
    gl_poly_free(ok);
}

TEST_CASE("cap management and cap errors") {
    const uint64_t original = gl_get_max_cells();
    CHECK(gl_set_max_cells(16) == GL_OK);
    CHECK(gl_get_max_cells() == 16);
    char* out = nullptr;
    CHECK(gl_rogers_szego_json(20, 8, &out) == GL_ERROR_CAP_EXCEEDED);
    CHECK(gl_set_max_cells(original) == GL_OK);
}

TEST_CASE("report surfaces") {
    char* out = nullptr;
    REQUIRE(gl_rogers_szego_json(2, 2, &out) == GL_OK);
    CHECK(take(out) ==
          "[{\"composition\":[0,2],\"coefficients\":[\"1\"]},"
          "{\"composition\":[1,1],\"coefficients\":[\"1\",\"1\"]},"
          "{\"composition\":[2,0],\"coefficients\":[\"1\"]}]");

    REQUIRE(gl_descent_inv_table_csv(3, &out) == GL_OK);
    CHECK(take(out) == "N,t,exponent,coefficient\n3,0,0,1\n3,1,1,2\n3,1,2,2\n3,2,3,1\n");

    REQUIRE(gl_normality_report_json(4, 2, 12, &out) == GL_OK);
    {
        const std::string json = take(out);
        CHECK(json.find("\"N\":4") != std::string::npos);
        CHECK(json.find("\"mean\":\"3/2\"") != std::string::npos);
        CHECK(json.find("\"variance\":\"13/8\"") != std::string::npos);
    }
    CHECK(std::string(gl_normality_csv_header()) ==
          "N,r,mean,variance,skew_sq,ex_kurtosis,kolmogorov");

    REQUIRE(gl_demazure_report_json(4, 2, &out) == GL_OK);
    CHECK(take(out).find("\"degree_shift\":\"4\"") != std::string::npos);

    REQUIRE(gl_code_asymptotics_json(2, 2, &out) == GL_OK);
    CHECK(take(out).find("\"permutation\":\"5/2\"") != std::string::npos);

    REQUIRE(gl_mahonian_gap(2, 10, &out) == GL_OK);
    CHECK(take(out) == "1/10");

    REQUIRE(gl_deformed_galois_text(2, 2, &out) == GL_OK);
    CHECK(take(out) == "3 + q*t");
}

TEST_CASE("verification suites through the C API") {
    char* report = nullptr;
    int passed = 0;
    REQUIRE(gl_verify_suite("identity", 5, 3, 0, 0, 0, 0, 1, &report, &passed) == GL_OK);
    CHECK(passed == 1);
    {
        const std::string json = take(report);
        CHECK(json.find("\"suite\":\"identity\"") != std::string::npos);
        CHECK(json.find("\"passed\":true") != std::string::npos);
    }
    CHECK(gl_verify_suite("bogus", 0, 0, 0, 0, 0, 0, 1, &report, &passed) ==
          GL_ERROR_INVALID_ARGUMENT);
}
