#include "loopalg/jsonio.hpp"
#include "loopalg/randomgen.hpp"
#include "loopalg/textio.hpp"

#include <doctest.h>

#include <random>

using namespace loopalg;

TEST_CASE("word parsing") {
    Signature sig = make_surface(1, 1);
    Word w = parse_path(sig, "a1 b1 a1^-1");
    CHECK(w.size() == 3);
    CHECK(show(sig, w) == "a1 b1 a1^-1");

    CHECK(parse_path(sig, "d1 g1") == *compose(sig.gen_word(3), sig.gen_word(2)));
    CHECK_THROWS_AS(parse_path(sig, "g1 d1"), ParseError); // target(g1)=0 != source(d1)=1

    CHECK(parse_path(sig, "a1 a1^-1") == Word::identity(0));
    CHECK(parse_path(sig, "1_0") == Word::identity(0));
    CHECK(parse_path(sig, "1_1") == Word::identity(1));
    CHECK(parse_path(sig, "1_0 a1 * b1") == parse_path(sig, "a1 b1"));
    CHECK(parse_path(sig, "a1^-2") ==
          *compose(sig.gen_word(0, -1), sig.gen_word(0, -1)));
    CHECK(parse_path(sig, "a1^3").size() == 3);
    CHECK(parse_path(sig, "b1^0") == Word::identity(0));
}

TEST_CASE("parse errors carry byte offsets") {
    Signature sig = make_surface(1, 1);
    try {
        parse_path(sig, "a1 q7");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
    try {
        parse_path(sig, "a2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 0);
        CHECK(std::string(e.what()).find("not part of this signature") != std::string::npos);
    }
    try {
        parse_path(sig, "g1 d1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
        const std::string msg = e.what();
        CHECK(msg.find("non-composable") != std::string::npos);
        CHECK(msg.find("object 0") != std::string::npos);
        CHECK(msg.find("object 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_path(sig, ""), ParseError);
    CHECK_THROWS_AS(parse_path(sig, "1_5"), ParseError);
    CHECK_THROWS_AS(parse_path(sig, "d1^2"), ParseError); // d1 d1 is not composable
    CHECK_THROWS_AS(parse_path(sig, "a1^"), ParseError);
}

TEST_CASE("parse of print is the identity") {
    for (auto [g, n] : {std::pair{1, 1}, std::pair{2, 3}}) {
        Signature sig = make_surface(g, n);
        Sampler rnd(sig, 5);
        for (int i = 0; i < 100; ++i) {
            Word w = rnd.word(8);
            CHECK(parse_path(sig, show(sig, w)) == w);
        }
    }
    Signature tens = Signature::tensor_algebra(5);
    Sampler rnd(tens, 7);
    for (int i = 0; i < 50; ++i) {
        Word w = rnd.word(6);
        CHECK(parse_path(tens, show(tens, w)) == w);
    }
}

TEST_CASE("print of parse canonicalizes") {
    Signature sig = make_surface(1, 1);
    CHECK(show(sig, parse_path(sig, "a1   b1 b1^-1 a1^-1 g1")) == "g1");
    CHECK(show(sig, parse_path(sig, "d1*d1^-1")) == "1_1");
}

TEST_CASE("element rendering") {
    Signature sig = make_surface(1, 1);
    Word a = sig.gen_word(0), b = sig.gen_word(1);

    AlgElem x = alg_word(a, Rational(2)) - alg_word(b, frac(1, 3));
    CHECK(show(sig, x) == "2*a1 - 1/3*b1");
    CHECK(show(sig, AlgElem{}) == "0");
    CHECK(show(sig, alg_word(a, Rational(-1))) == "-a1");

    Tensor2 t = tensor2(b, a);
    CHECK(show(sig, t) == "b1 ⊗ a1");

    TraceElem tr = trace_project(a);
    CHECK(show(sig, tr) == "|a1|");
    CHECK(show(sig, trace_project(Word::identity(1))) == "|1_0|");

    TripleTrace trip = triple_left(CyclicWord::unit(), sig.gen_word(3), Rational(3)) -
                       triple_right(sig.gen_word(3), CyclicWord::unit(), Rational(2));
    CHECK(show(sig, trip) == "3*|1_0| ⊗ d1 - 2*d1 ⊗ |1_0|");

    OneForm omega;
    omega.add(0, Word::identity(0), a, Rational(1));
    CHECK(show(sig, omega) == "1_0 * D[a1] * a1");
}

TEST_CASE("parser rejects garbage without crashing") {
    Signature sig = make_surface(1, 1);
    std::mt19937_64 rng(99);
    const std::string alphabet = "abgdw119^-*_ |/";
    for (int i = 0; i < 500; ++i) {
        std::string src;
        const int len = int(rng() % 12);
        for (int k = 0; k < len; ++k)
            src += alphabet[rng() % alphabet.size()];
        try {
            Word w = parse_path(sig, src);
            CHECK(parse_path(sig, show(sig, w)) == w);
        } catch (const ParseError&) {
            // rejected inputs are fine; crashes are not
        }
    }
}

TEST_CASE("rational round trip") {
    CHECK(rat_str(frac(-7, 2)) == "-7/2");
    CHECK(rat_str(frac(4, 2)) == "2");
    CHECK(rat_parse("3/9") == frac(1, 3));
    CHECK(rat_parse("-5") == Rational(-5));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
}

TEST_CASE("json round trips") {
    Signature sig = make_surface(1, 1);
    Sampler rnd(sig, 51);

    // theta tables
    DoubleDerivation theta = rnd.dd_table(2);
    DoubleDerivation back = theta_table_from_json(sig, theta_table_to_json(sig, theta));
    for (int c = 0; c < sig.num_generators(); ++c)
        CHECK(back.eval(sig.gen_word(c)) == theta.eval(sig.gen_word(c)));

    // generator tables of random brackets (test fixtures)
    DoubleBracket pi = rnd.bracket_with_ad_defect(2);
    DoubleBracket pi_back = bracket_table_from_json(sig, bracket_table_to_json(sig, pi));
    for (int i = 0; i < 20; ++i) {
        Word a = rnd.word(4), b = rnd.word(4);
        CHECK(pi_back.eval(a, b) == pi.eval(a, b));
    }

    // pairing matrices
    Signature tens = Signature::tensor_algebra(3);
    Sampler trnd(tens, 53);
    PairingMatrix p = PairingMatrix::zero(3);
    p.entries = trnd.skew_entries(3);
    PairingMatrix p_back = pairing_from_json(pairing_to_json(p));
    CHECK(p_back.dim == p.dim);
    CHECK(p_back.entries == p.entries);

    // element serialisations stay canonical
    Tensor2 t = tensor2(sig.gen_word(0), sig.gen_word(1), frac(2, 3));
    Json jt = to_json(sig, t);
    CHECK(jt[0][2] == "2/3");
}
