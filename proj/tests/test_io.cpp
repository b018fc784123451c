#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperell/catalog.hpp"
#include "hyperell/invariants.hpp"
#include "hyperell/io.hpp"

using namespace hyperell;

namespace {

ErrorKind kind_of(const std::string& text) {
    try {
        HyperellipticDatum d = to_datum(parse_document_text(text));
        validate(d);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Internal;
}

const char* builder_doc = R"({
  "mode": "builder",
  "factors": [{"kind": "generic", "label": "E"}, {"kind": "eisenstein", "label": "F"}],
  "generators": [{"name": "g", "linear": ["0", "1/3"], "translation": ["1/3", "0", "0", "0"]}]
})";

}  // namespace

TEST_CASE("rationals") {
    CHECK(parse_rational(Json("6/4")) == Rational(3, 2));
    CHECK(parse_rational(Json("-2")) == -2);
    CHECK(parse_rational(Json(5)) == 5);
    CHECK_THROWS_AS(parse_rational(Json(0.5)), Error);
    CHECK_THROWS_AS(parse_rational(Json("1/0")), Error);
    CHECK_THROWS_AS(parse_rational(Json("1.5")), Error);
    CHECK(to_json(Rational(-4, 6)) == Json("-2/3"));
    CHECK(to_json(Rational(3)) == Json("3"));
}

TEST_CASE("builder documents") {
    InputDocument doc = parse_document_text(builder_doc);
    HyperellipticDatum d = to_datum(doc);
    CHECK(validate(d).passed());
    CHECK(d.group.order() == 3);
    const BuilderSpec& spec = std::get<BuilderSpec>(doc.content);
    CHECK(std::get<BuilderSpec>(parse_document(to_json(spec)).content) == spec);
}

TEST_CASE("raw block entries") {
    std::string text = R"({"mode": "builder", "factors": [{"kind": "gauss", "label": "E_i"}, {"kind": "generic", "label": "E"}],
      "generators": [{"name": "g", "linear": [[["0", "-1"], ["1", "0"]], "0"],
                      "translation": ["0", "0", "1/4", "0"]}]})";
    HyperellipticDatum d = to_datum(parse_document_text(text));
    CHECK(validate(d).passed());
    CHECK(d.group.order() == 4);
}

TEST_CASE("error classes") {
    CHECK(kind_of("{not json") == ErrorKind::Parse);
    CHECK(kind_of(R"({"mode": "other"})") == ErrorKind::Parse);
    CHECK(kind_of(R"({"mode": "raw", "rank": 2, "generators": [{"name": "g", "matrix": [["1", "0"], ["0", "1"]],
      "translation": [0.5, "0"], "eigenvalues": ["0"]}]})") == ErrorKind::Parse);
    CHECK(kind_of(R"({"mode": "raw", "rank": 2, "form": [["0", "1"], ["-1", "0"]], "generators": [{"name": "g",
      "matrix": [["2", "0"], ["0", "1"]], "translation": ["0", "0"], "eigenvalues": ["0"]}]})") ==
          ErrorKind::Validation);
    CHECK(kind_of(R"({"mode": "builder", "factors": [{"kind": "generic", "label": "E"}],
      "generators": [{"name": "g", "linear": ["1/4"], "translation": ["0", "0"]}]})") ==
          ErrorKind::Validation);
}

TEST_CASE("datum round trip") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.name);
        HyperellipticDatum d = build_datum(e.spec);
        validate(d);
        Json j = to_json(d);
        HyperellipticDatum back = datum_from_json(j);
        CHECK(back == d);
        CHECK(dump(to_json(back)) == dump(j));
    }
}

TEST_CASE("Albanese report round trip and determinism") {
    for (const auto& e : catalog_entries()) {
        if (e.negative())
            continue;
        CAPTURE(e.name);
        HyperellipticDatum d = build_datum(e.spec);
        REQUIRE(validate(d).passed());
        AlbaneseReport r = run_pipeline(d, true);
        Json j = to_json(r);
        AlbaneseReport back = albanese_report_from_json(Json::parse(dump(j)));
        CHECK(back == r);
        CHECK(dump(to_json(back)) == dump(j));
        CHECK(dump(to_json(run_pipeline(d, true))) == dump(j));
    }
}

TEST_CASE("keys are sorted") {
    HyperellipticDatum d = build_datum(find_entry("bielliptic-1").spec);
    Json j = to_json(compute_invariants(d));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}
