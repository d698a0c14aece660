#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <ybx/algebra_io.hpp>
#include <ybx/tensor_product.hpp>
#include <ybx/yang_baxter.hpp>

using namespace ybx;

static const FieldDescriptor Q = FieldDescriptor::rationals();

static FiniteAlgebra corpus(const std::string& name) {
    return load_algebra_file(std::string(YBX_REPO_ROOT) + "/corpus/" + name);
}

static FreeElement word_elem(const FieldDescriptor& fd, const Word& w) {
    FreeElement e = FreeElement::unit(fd);
    for (int id : w) e = e.times(FreeElement::generator(fd, id));
    return e;
}

// one signed tensor term: sign * w1 (x) w2 (x) w3
static TensorElement term3(const FieldDescriptor& fd, int sign, const Word& w1, const Word& w2,
                           const Word& w3) {
    TensorElement t = tensor_product(
        tensor_product(TensorElement::from_free(word_elem(fd, w1)),
                       TensorElement::from_free(word_elem(fd, w2))),
        TensorElement::from_free(word_elem(fd, w3)));
    return t.scaled(Scalar::from_int(fd, sign));
}

TEST_CASE("free elements: words, products, canonical text") {
    FreeElement a = FreeElement::generator(Q, 0);
    FreeElement b = FreeElement::generator(Q, 1);
    std::vector<std::string> names = {"a", "b"};

    CHECK(a.times(b).str(names) == "ab");
    CHECK((a + b).str(names) == "a + b");
    CHECK((a - b).str(names) == "a - b");
    CHECK((b - b).str(names) == "0");
    CHECK((b - b).is_zero());
    CHECK(FreeElement::unit(Q).str(names) == "1");
    CHECK(a.scaled(parse_scalar(Q, "3/2")).str(names) == "3/2*a");
    CHECK(a.scaled(parse_scalar(Q, "-1")).str(names) == "-a");
    CHECK((a.times(b) - b.times(a)).str(names) == "ab - ba");
    // product is concatenation, unit is the empty word
    CHECK(a.times(FreeElement::unit(Q)) == a);
    CHECK(FreeElement::unit(Q).times(a) == a);

    CHECK(word_str(Word{}, names) == "1");
    CHECK_THROWS_AS(word_str(Word{7}, names), std::out_of_range);
    CHECK_THROWS_AS(FreeElement::generator(Q, -1), std::invalid_argument);
}

TEST_CASE("prime-field coefficients render without minus signs") {
    FieldDescriptor f5 = FieldDescriptor::prime_field(5);
    FreeElement a = FreeElement::generator(f5, 0);
    FreeElement b = FreeElement::generator(f5, 1);
    std::vector<std::string> names = {"a", "b"};
    CHECK((a - b).str(names) == "a + 4*b");  // -1 = 4 in GF(5)
}

TEST_CASE("degree budget is an error, not a silent trim") {
    FreeElement a = FreeElement::generator(Q, 0);
    FreeElement long_word = a;
    for (int i = 0; i < 9; ++i) long_word = long_word.times(a);  // length 10
    CHECK_THROWS_AS(long_word.times(long_word), std::length_error);  // 20 > 16
    CHECK_NOTHROW(long_word.times(a));

    // the tensor operator hits the same guard
    FreeElement b = FreeElement::generator(Q, 1), c = FreeElement::generator(Q, 2);
    TensorElement t = tensor_product(TensorElement::from_free(a), TensorElement::from_free(b));
    CHECK_THROWS_AS(mu_21(t, c, 2), std::length_error);  // aa'b needs length 3
}

TEST_CASE("two-site product: three terms, unit absorption, linearity") {
    FreeElement a = FreeElement::generator(Q, 0);
    FreeElement b = FreeElement::generator(Q, 1);
    std::vector<std::string> names = {"a", "b"};

    CHECK(mu_11(a, b).str(names) == "1\xE2\x8A\x97""ab - a\xE2\x8A\x97""b + ab\xE2\x8A\x97""1");
    CHECK(mu_11(FreeElement::unit(Q), b).str(names) == "b\xE2\x8A\x97""1");
    CHECK(mu_11(FreeElement::zero(Q), b).is_zero());

    // linearity in the left slot
    Scalar lam = parse_scalar(Q, "5/3");
    CHECK(mu_11(a.scaled(lam) + b, b) == mu_11(a, b).scaled(lam) + mu_11(b, b));
}

TEST_CASE("left-nested product reproduces the seven-term expansion") {
    FreeElement a = FreeElement::generator(Q, 0);
    FreeElement ap = FreeElement::generator(Q, 1);
    FreeElement b = FreeElement::generator(Q, 2);
    std::vector<std::string> names = {"a", "a'", "b"};

    TensorElement got = mu_21(
        tensor_product(TensorElement::from_free(a), TensorElement::from_free(ap)), b);

    // the expansion, built term by term in its displayed order:
    // aa'b(x)1(x)1 + 1(x)aa'b(x)1 - a(x)a'b(x)1 + 1(x)a(x)a'b
    //   - aa'(x)1(x)b - 1(x)aa'(x)b + a(x)a'(x)b
    TensorElement want = term3(Q, +1, {0, 1, 2}, {}, {});
    want = want + term3(Q, +1, {}, {0, 1, 2}, {});
    want = want + term3(Q, -1, {0}, {1, 2}, {});
    want = want + term3(Q, +1, {}, {0}, {1, 2});
    want = want + term3(Q, -1, {0, 1}, {}, {2});
    want = want + term3(Q, -1, {}, {0, 1}, {2});
    want = want + term3(Q, +1, {0}, {1}, {2});
    CHECK(got == want);
    REQUIRE(got.terms().size() == 7);

    // canonical ordering makes the printed form stable
    CHECK(got.str(names) ==
          "1\xE2\x8A\x97""a\xE2\x8A\x97""a'b - 1\xE2\x8A\x97""aa'\xE2\x8A\x97""b + "
          "1\xE2\x8A\x97""aa'b\xE2\x8A\x97""1 + a\xE2\x8A\x97""a'\xE2\x8A\x97""b - "
          "a\xE2\x8A\x97""a'b\xE2\x8A\x97""1 - aa'\xE2\x8A\x97""1\xE2\x8A\x97""b + "
          "aa'b\xE2\x8A\x97""1\xE2\x8A\x97""1");
}

TEST_CASE("right-nested product: nine raw terms collapse to seven") {
    FreeElement a = FreeElement::generator(Q, 0);
    FreeElement b = FreeElement::generator(Q, 1);
    FreeElement bp = FreeElement::generator(Q, 2);
    std::vector<std::string> names = {"a", "b", "b'"};

    TensorElement got = mu_12(
        a, tensor_product(TensorElement::from_free(b), TensorElement::from_free(bp)));

    // derivation: the first site produces ab(x)1(x)b' + 1(x)ab(x)b' - a(x)b(x)b';
    // the second site turns ab(x)1(x)b' into ab(x)b'(x)1 (unit absorption) and
    // expands the other two, leaving seven distinct terms
    TensorElement want = term3(Q, +1, {0, 1}, {2}, {});
    want = want + term3(Q, +1, {}, {0, 1, 2}, {});
    want = want + term3(Q, +1, {}, {}, {0, 1, 2});
    want = want + term3(Q, -1, {}, {0, 1}, {2});
    want = want + term3(Q, -1, {0}, {1, 2}, {});
    want = want + term3(Q, -1, {0}, {}, {1, 2});
    want = want + term3(Q, +1, {0}, {1}, {2});
    CHECK(got == want);
    REQUIRE(got.terms().size() == 7);

    CHECK(got.str(names) ==
          "1\xE2\x8A\x97""1\xE2\x8A\x97""abb' - 1\xE2\x8A\x97""ab\xE2\x8A\x97""b' + "
          "1\xE2\x8A\x97""abb'\xE2\x8A\x97""1 - a\xE2\x8A\x97""1\xE2\x8A\x97""bb' + "
          "a\xE2\x8A\x97""b\xE2\x8A\x97""b' - a\xE2\x8A\x97""bb'\xE2\x8A\x97""1 + "
          "ab\xE2\x8A\x97""b'\xE2\x8A\x97""1");
}

TEST_CASE("nested-product arity guards") {
    FreeElement a = FreeElement::generator(Q, 0);
    TensorElement t1 = TensorElement::from_free(a);
    CHECK_THROWS_AS(mu_21(t1, a), std::invalid_argument);
    CHECK_THROWS_AS(mu_12(a, t1), std::invalid_argument);
}

// flattens assignment indices, applies a matrix to the Kronecker basis
// vector, and compares with the symbolic evaluation
static void coherence_sweep(const FiniteAlgebra& alg) {
    const std::size_t n = alg.dim();
    const FieldDescriptor& fd = alg.field();
    FreeElement g0 = FreeElement::generator(fd, 0), g1 = FreeElement::generator(fd, 1),
                g2 = FreeElement::generator(fd, 2);
    Scalar one = Scalar::one(fd);
    Matrix r = build_assoc_operator(alg, one, one, one);
    Matrix op21 = lift12(r, n) * lift23(r, n);
    Matrix op12 = lift23(r, n) * lift12(r, n);

    TensorElement e11 = mu_11(g0, g1);
    TensorElement e21 = mu_21(tensor_product(TensorElement::from_free(g0),
                                             TensorElement::from_free(g1)),
                              g2);
    TensorElement e12 = mu_12(g0, tensor_product(TensorElement::from_free(g1),
                                                 TensorElement::from_free(g2)));

    auto column = [&](const Matrix& m, std::size_t col) {
        std::vector<Scalar> out;
        out.reserve(m.rows());
        for (std::size_t row = 0; row < m.rows(); ++row) out.push_back(m.at(row, col));
        return out;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Element> two = {alg.basis_element(i), alg.basis_element(j)};
            CHECK(evaluate_in_algebra(e11, alg, two) == column(r, i * n + j));
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Element> three = {alg.basis_element(i), alg.basis_element(j),
                                              alg.basis_element(k)};
                std::size_t col = (i * n + j) * n + k;
                CHECK(evaluate_in_algebra(e21, alg, three) == column(op21, col));
                CHECK(evaluate_in_algebra(e12, alg, three) == column(op12, col));
            }
        }
}

TEST_CASE("symbolic and matrix routes agree on every basis assignment") {
    coherence_sweep(corpus("kx2.json"));
    coherence_sweep(corpus("m2q.json"));
}

TEST_CASE("evaluation in the nilpotent quotient kills square terms") {
    FiniteAlgebra kx2 = corpus("kx2.json");
    FreeElement a = FreeElement::generator(Q, 0), ap = FreeElement::generator(Q, 1),
                b = FreeElement::generator(Q, 2);
    TensorElement e21 = mu_21(tensor_product(TensorElement::from_free(a),
                                             TensorElement::from_free(ap)),
                              b);
    Element x = kx2.basis_element(1);
    std::vector<Scalar> v = evaluate_in_algebra(e21, kx2, {x, x, x});
    // with every generator sent to x, all words of length >= 2 die (x^2 = 0)
    // and only a(x)a'(x)b = x(x)x(x)x survives, at the last Kronecker index
    REQUIRE(v.size() == 8);
    for (std::size_t idx = 0; idx < 7; ++idx) CHECK(v[idx].is_zero());
    CHECK(v[7].is_one());
}

TEST_CASE("evaluation errors are loud") {
    FiniteAlgebra kx2 = corpus("kx2.json");
    FreeElement a = FreeElement::generator(Q, 0), b = FreeElement::generator(Q, 1);
    TensorElement t = mu_11(a, b);
    // missing generator 1
    CHECK_THROWS_AS(evaluate_in_algebra(t, kx2, {kx2.basis_element(0)}),
                    std::invalid_argument);
    // no unit in the algebra
    FiniteAlgebra ab3 = corpus("abelian3.json");
    CHECK_THROWS_AS(
        evaluate_in_algebra(t, ab3, {ab3.basis_element(0), ab3.basis_element(1)}),
        std::invalid_argument);
    // field mismatch
    FiniteAlgebra gf = corpus("k1_gf5.json");
    CHECK_THROWS_AS(evaluate_in_algebra(t, gf, {gf.basis_element(0), gf.basis_element(0)}),
                    std::invalid_argument);
}

TEST_CASE("tensor element algebra behaves") {
    FreeElement a = FreeElement::generator(Q, 0), b = FreeElement::generator(Q, 1);
    TensorElement ta = TensorElement::from_free(a), tb = TensorElement::from_free(b);
    TensorElement ab = tensor_product(ta, tb);
    CHECK(ab.arity() == 2);
    CHECK((ab - ab).is_zero());
    CHECK(ab + ab == ab.scaled(Scalar::from_int(Q, 2)));
    CHECK_THROWS_AS(ab + ta, std::invalid_argument);
    CHECK(TensorElement::zero(Q, 3).str({"a", "b"}) == "0");
    CHECK_THROWS_AS(TensorElement::zero(Q, 0), std::invalid_argument);
    CHECK_THROWS_AS(ab.apply_adjacent_r(1), std::invalid_argument);
}
