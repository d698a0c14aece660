#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include <ybx/algebra_io.hpp>

using namespace ybx;

static std::string corpus_path(const std::string& name) {
    return std::string(YBX_REPO_ROOT) + "/corpus/" + name;
}

TEST_CASE("field descriptors round-trip through json") {
    CHECK(field_to_json(FieldDescriptor::rationals()) == Json("Q"));
    CHECK(field_from_json(Json("Q")) == FieldDescriptor::rationals());

    Json gf7 = field_to_json(FieldDescriptor::prime_field(7));
    CHECK(gf7["gf"] == 7);
    CHECK(field_from_json(gf7) == FieldDescriptor::prime_field(7));

    CHECK_THROWS_WITH(field_from_json(Json("R")),
                      Catch::Matchers::ContainsSubstring("expected \"Q\" or {\"gf\": p}"));
    CHECK_THROWS_AS(field_from_json(Json(7)), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json(Json{{"gf", "7"}}), std::invalid_argument);
    // a composite modulus is caught by the field itself
    CHECK_THROWS_AS(field_from_json(Json{{"gf", 4}}), std::invalid_argument);
}

TEST_CASE("scalar cells accept integers and exact strings only") {
    FieldDescriptor q = FieldDescriptor::rationals();
    CHECK(scalar_from_json(q, Json("-1/2"), "cell") == parse_scalar(q, "-1/2"));
    CHECK(scalar_from_json(q, Json(3), "cell") == Scalar::from_int(q, 3));

    FieldDescriptor f5 = FieldDescriptor::prime_field(5);
    CHECK(scalar_from_json(f5, Json(-3), "cell") == Scalar::from_int(f5, 2));
    CHECK(scalar_from_json(f5, Json("1/2"), "cell") == Scalar::from_int(f5, 3));

    CHECK_THROWS_WITH(scalar_from_json(q, Json(1.5), "table[0][1][0]"),
                      Catch::Matchers::ContainsSubstring(
                          "table[0][1][0]: floats are not accepted; use exact strings"));
    CHECK_THROWS_WITH(scalar_from_json(q, Json(true), "cell"),
                      Catch::Matchers::ContainsSubstring(
                          "cell: expected an integer or a scalar string"));
}

TEST_CASE("every corpus algebra survives a json round-trip") {
    const std::vector<std::string> files = {
        "abelian3.json", "cross3.json",  "heis3.json",   "k1.json",
        "k1_gf5.json",   "kx2.json",     "kx2m1.json",   "m2_gf5.json",
        "m2q.json",      "skew2.json",   "sl2.json",     "sqswap_00.json",
        "sqswap_m1m1.json", "super11.json", "sym2jordan.json",
    };
    for (const std::string& f : files) {
        INFO("file: " << f);
        FiniteAlgebra a = load_algebra_file(corpus_path(f));
        FiniteAlgebra b = algebra_from_json(algebra_to_json(a));
        CHECK(b.dim() == a.dim());
        CHECK(b.field() == a.field());
        CHECK(b.labels() == a.labels());
        CHECK(b.table() == a.table());
        CHECK(b.unit() == a.unit());
        CHECK(b.grading() == a.grading());
    }
}

TEST_CASE("matrix files round-trip and match their constructions") {
    FieldDescriptor q = FieldDescriptor::rationals();

    Matrix tw = load_matrix_file(corpus_path("twist2.mat"));
    CHECK(tw == twist(2, q));
    CHECK(matrix_from_json(matrix_to_json(tw)) == tw);

    Matrix broken = load_matrix_file(corpus_path("broken4.mat"));
    Matrix want = Matrix::identity(4, q);
    want.set(0, 1, Scalar::one(q));
    CHECK(broken == want);
    CHECK(matrix_from_json(matrix_to_json(broken)) == broken);

    Matrix seeded = load_matrix_file(corpus_path("random_seed7.mat"));
    CHECK(seeded.rows() == 4);
    CHECK(seeded.field() == FieldDescriptor::prime_field(7));
    CHECK(matrix_from_json(matrix_to_json(seeded)) == seeded);
}

TEST_CASE("seeded matrix file matches its documented construction") {
    // the file records the first invertible 4x4 draw over GF(7) from
    // minstd_rand seeded with 7, entries taken row-major as rng() % 7
    FieldDescriptor f7 = FieldDescriptor::prime_field(7);
    std::minstd_rand rng(7);
    Matrix drawn(4, 4, f7);
    while (true) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                drawn.set(i, j, Scalar::from_int(f7, static_cast<long long>(rng() % 7)));
        if (drawn.inverse().has_value()) break;
    }
    CHECK(drawn == load_matrix_file(corpus_path("random_seed7.mat")));
}

// minimal well-formed two-dimensional document to mutate
static Json base_doc() {
    return Json{
        {"dimension", 2},
        {"field", "Q"},
        {"basis", {"1", "x"}},
        {"table",
         {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}},
        {"unit", {1, 0}},
    };
}

TEST_CASE("algebra document diagnostics name the offence") {
    CHECK_NOTHROW(algebra_from_json(base_doc()));

    Json j = base_doc();
    j.erase("table");
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("lacks \"table\""));

    j = base_doc();
    j["dimension"] = 0;
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("dimension must be a positive integer"));

    j = base_doc();
    j["basis"] = {"1"};
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("basis must list exactly 2 labels"));

    j = base_doc();
    j["table"][0][1] = {0};
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("table cell (0,1) must have 2"));

    j = base_doc();
    j["table"][0][1][0] = 0.25;
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring(
                          "table[0][1][0]: floats are not accepted; use exact strings"));

    j = base_doc();
    j["unit"] = {1};
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("unit must list 2 coordinates"));

    j = base_doc();
    j["unit"] = {0, 1};  // x is not a unit here
    CHECK_THROWS_AS(algebra_from_json(j), std::invalid_argument);

    j = base_doc();
    j["grading"] = {0, "odd"};
    CHECK_THROWS_WITH(algebra_from_json(j),
                      Catch::Matchers::ContainsSubstring("grading entries must be integers"));

    j = base_doc();
    j["grading"] = {1, 0};  // an odd unit breaks parity: 1*1 = 1 needs odd+odd = odd
    CHECK_THROWS_AS(algebra_from_json(j), std::invalid_argument);

    CHECK_THROWS_WITH(algebra_from_json(Json::array()),
                      Catch::Matchers::ContainsSubstring("must be an object"));
}

TEST_CASE("matrix document diagnostics") {
    CHECK_THROWS_WITH(matrix_from_json(Json{{"rows", Json::array()}}),
                      Catch::Matchers::ContainsSubstring("needs \"field\" and \"rows\""));

    Json j{{"field", "Q"}, {"rows", Json::array()}};
    CHECK_THROWS_WITH(matrix_from_json(j),
                      Catch::Matchers::ContainsSubstring("nonempty"));

    j["rows"] = {{1, 0}, {1}};
    CHECK_THROWS_WITH(matrix_from_json(j),
                      Catch::Matchers::ContainsSubstring("inconsistent lengths"));

    j["rows"] = {{1, 0}, {0, 0.5}};
    CHECK_THROWS_WITH(matrix_from_json(j),
                      Catch::Matchers::ContainsSubstring(
                          "rows[1][1]: floats are not accepted"));
}

TEST_CASE("file and parse failures are loud") {
    CHECK_THROWS_WITH(read_file("/nonexistent/nowhere.json"),
                      Catch::Matchers::ContainsSubstring("cannot open file"));
    CHECK_THROWS_WITH(parse_json_text("{oops", "doc"),
                      Catch::Matchers::ContainsSubstring("doc: not valid JSON"));
    // a matrix document is not an algebra document
    CHECK_THROWS_WITH(load_algebra_file(corpus_path("twist2.mat")),
                      Catch::Matchers::ContainsSubstring("lacks \"dimension\""));
}

TEST_CASE("content digest is the reference 64-bit fnv1a") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("hello") == "a430d84680aabd0b");
    // digest of a real corpus file is stable across loads
    std::string bytes = read_file(corpus_path("kx2.json"));
    CHECK(fnv1a_hex(bytes) == fnv1a_hex(read_file(corpus_path("kx2.json"))));
}
