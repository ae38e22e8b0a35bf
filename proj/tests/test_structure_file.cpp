#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gcoring/error.hpp"
#include "gcoring/structure_file.hpp"
#include "gcoring/suites.hpp"

using namespace gcoring;

namespace {

ErrorKind kind_of(const std::string& text, std::string* msg = nullptr) {
    try {
        parse_structure(text);
    } catch (const Error& e) {
        if (msg) *msg = e.what();
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Trivial coring over F_3 with G = C_2, written by hand with comments and a fraction.
const char* kTrivF3 = R"({
  // prime field with three elements
  "field": {"Fp": 3},
  "group": {"order": 2, "table": [[0, 1], [1, 0]]},
  "algebras": {"k": {"dim": 1, "table": [[1]], "unit": ["1/4"]}},
  /* one-dimensional components */
  "bimodules": {
    "M": {"dim": 1, "left": "k", "left_action": [[[1]]], "right": "k", "right_action": [[[1]]]}
  },
  "corings": {
    "C": {"base": "k", "components": ["M", "M"],
          "delta": [[[1]], [[1]], [[1]], [[1]]], "counit": [[1]]}
  },
  "grouplikes": {"x": {"coring": "C", "elements": [[1], [1]]}},
  "check": {"coring": "C", "grouplike": "x"}
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("bundled fixture files parse and round-trip") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        const std::string text = emit_structure(fx);
        StructureFile sf = parse_structure(text);
        CHECK(sf.target.name == name);
        CHECK(emit_structure(sf.target) == text);
        CHECK(same_coring(*sf.target.coring, *fx.coring));
        CHECK(same_grouplike(sf.target.grouplike, fx.grouplike));
        CHECK(sf.target.witness.has_value() == fx.witness.has_value());
        CHECK(sf.target.comodule_algebra.has_value() == fx.comodule_algebra.has_value());
        // the checked-in copies match the bundled structures
        CHECK(read_file(std::string(GCORING_FIXTURE_DIR) + "/" + name + ".json") == text);
        CHECK(load_target(std::string(GCORING_FIXTURE_DIR) + "/" + name + ".json").name == name);
    }
}

TEST_CASE("a hand-written file over F_3") {
    StructureFile sf = parse_structure(kTrivF3);
    CHECK(sf.field == Field::prime(3));
    CHECK(sf.target.name == "structure");
    CHECK(sf.algebras.at("k")->unit(0, 0) == Scalar(Field::prime(3), 1));
    // the base map defaults to the inclusion of the coinvariants
    CHECK(sf.target.base_map.src->dim == 1);
    CHECK(run_suite(sf, "validate").ok());
    CHECK(run_suite(sf, "galois").ok());
}

TEST_CASE("empty input is missing the field declaration") {
    for (const char* text : {"", "  \n\t", "{}", "// only a comment\n{}"}) {
        CAPTURE(text);
        std::string msg;
        CHECK(kind_of(text, &msg) == ErrorKind::ParseError);
        CHECK(msg.find("missing field declaration") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_structure("{\n  \"field\": \"Q\",\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 3);
    }
    CHECK(kind_of("{\"field\": \"Q\"") == ErrorKind::ParseError);
    CHECK(kind_of("[1, 2") == ErrorKind::ParseError);
}

TEST_CASE("semantic errors name the offending entry") {
    std::string msg;
    CHECK(kind_of(with(kTrivF3, "\"components\": [\"M\", \"M\"]", "\"components\": [\"M\", \"Nowhere\"]"), &msg) ==
          ErrorKind::SemanticError);
    CHECK(msg.find("Nowhere") != std::string::npos);
    CHECK(msg.find("bimodule") != std::string::npos);

    CHECK(kind_of(with(kTrivF3, "\"grouplike\": \"x\"", "\"grouplike\": \"y\""), &msg) == ErrorKind::SemanticError);
    CHECK(msg.find("\"y\"") != std::string::npos);

    CHECK(kind_of(with(kTrivF3, "{\"Fp\": 3}", "{\"Fp\": 4}"), &msg) == ErrorKind::SemanticError);
    CHECK(msg.find("not prime") != std::string::npos);
    CHECK(kind_of(with(kTrivF3, "{\"Fp\": 3}", "{\"Fp\": 4611686018427388039}"), &msg) == ErrorKind::SemanticError);
    CHECK(msg.find("2^62") != std::string::npos);
    CHECK(kind_of(with(kTrivF3, "{\"Fp\": 3}", "\"R\"")) == ErrorKind::SemanticError);

    // floats, bad fractions, wrong shapes, non-groups, oversized declarations
    CHECK(kind_of(with(kTrivF3, "\"1/4\"", "0.5"), &msg) == ErrorKind::SemanticError);
    CHECK(msg.find("algebra k") != std::string::npos);
    CHECK(kind_of(with(kTrivF3, "\"1/4\"", "\"1/0\"")) == ErrorKind::SemanticError);
    CHECK(kind_of(with(kTrivF3, "\"counit\": [[1]]", "\"counit\": [[1, 0]]"), &msg) == ErrorKind::SemanticError);
    CHECK(msg.find("coring C.counit") != std::string::npos);
    CHECK(kind_of(with(kTrivF3, "[[0, 1], [1, 0]]", "[[0, 1], [1, 1]]")) == ErrorKind::SemanticError);
    CHECK(kind_of(with(kTrivF3, "\"dim\": 1, \"table\"", "\"dim\": 100000, \"table\""), &msg) ==
          ErrorKind::SemanticError);
    CHECK(kind_of(with(kTrivF3, "\"order\": 2", "\"order\": 1000")) == ErrorKind::SemanticError);
    CHECK(kind_of(with(kTrivF3, "\"check\"", "\"unchecked\"")) == ErrorKind::SemanticError);
}

TEST_CASE("parsing is total on arbitrary bytes") {
    std::mt19937_64 rng(7);
    std::vector<std::string> seeds{kTrivF3};
    for (const auto& name : fixture_names()) seeds.push_back(emit_structure(fixture_by_name(name)));
    const std::string alphabet = "{}[]\":,0123456789-/ \nFpQ";
    std::size_t parsed = 0, rejected = 0;
    for (int round = 0; round < 600; ++round) {
        std::string text;
        if (round % 5 == 0) {
            // raw random bytes
            const std::size_t len = rng() % 200;
            for (std::size_t i = 0; i < len; ++i) text.push_back(static_cast<char>(rng() & 0xff));
        } else {
            text = seeds[rng() % seeds.size()];
            const int edits = 1 + static_cast<int>(rng() % 4);
            for (int e = 0; e < edits && !text.empty(); ++e) {
                const std::size_t pos = rng() % text.size();
                switch (rng() % 4) {
                    case 0: text[pos] = alphabet[rng() % alphabet.size()]; break;
                    case 1: text.erase(pos, 1 + rng() % 8); break;
                    case 2: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
                    default: text.resize(pos); break;
                }
            }
        }
        try {
            parse_structure(text);
            ++parsed;
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError));
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 600);
    CHECK(rejected > 0);
}

TEST_CASE("unknown targets") {
    CHECK_THROWS_AS(load_target("/nonexistent/structure.json"), Error);
}
