#include <doctest.h>

#include <random>

#include "skewclifford/errors.hpp"
#include "skewclifford/fixtures.hpp"
#include "skewclifford/rewrite.hpp"
#include "test_support.hpp"

using namespace skcl;
using skcl::testing::pres;
using skcl::testing::random_presentation;

namespace {

Presentation one_generator(const Rat& b11) {
    Mat mu = Mat::identity(1);
    Mat b(1, 1);
    b.at(0, 0) = b11;
    return validate(mu, b);
}

}  // namespace

TEST_CASE("initial system encodes the defining relations") {
    // n=1, B11 = 1: single rule x1.x1 -> 1
    RewriteSystem one = initial_system(one_generator(Rat(1)));
    REQUIRE(one.rules().size() == 1);
    CHECK(one.rules().at(Word({0, 0})) == Element::unit());

    // fdex1 (a=2, b=1): rule x3.x1 -> 2 - x1.x3
    RewriteSystem sys = initial_system(make_fixture("fdex1", {{"a", Rat(2)}, {"b", Rat(1)}}));
    Element body = Element::monomial(Word::unit(), Rat(2));
    body.add_term(Word({0, 2}), Rat(-1));  // mu_31 = 1
    CHECK(sys.rules().at(Word({2, 0})) == body);

    // B = 0: x_j x_i -> -mu_ji x_i x_j and x_i^2 -> 0
    Presentation qe = make_fixture("fdex2", {{"n", Rat(2)}, {"q", Rat(3)}});
    RewriteSystem qsys = initial_system(qe);
    CHECK(qsys.rules().at(Word({0, 0})) == Element::zero());
    CHECK(qsys.rules().at(Word({1, 0})) ==
          Element::monomial(Word({0, 1}), -Rat(1, 3)));  // mu_21 = 1/3
}

TEST_CASE("generator cap") {
    Mat mu = Mat::identity(25);
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 25; ++j) mu.at(i, j) = Rat(1);
    CHECK_THROWS_AS(initial_system(validate(mu, Mat::zero(25, 25))), PreconditionError);
}

TEST_CASE("normal forms") {
    // classical n=2, B = I
    Presentation cl = pres({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                           {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    RewriteSystem sys = complete(initial_system(cl));
    CHECK(normal_form(sys, Element::from_word(Word({1, 0}))) ==
          Element::monomial(Word({0, 1}), Rat(-1)));
    CHECK(normal_form(sys, Element::from_word(Word({0, 0}))) == Element::unit());
    CHECK(normal_form(sys, Element::unit()) == Element::unit());

    // fdex1 (a=2, b=1): x3.x1.x3 reduces to 2 x3 either way
    Presentation p = make_fixture("fdex1", {{"a", Rat(2)}, {"b", Rat(1)}});
    RewriteSystem fsys = complete(initial_system(p));
    CHECK(normal_form(fsys, Element::from_word(Word({2, 0, 2}))) ==
          Element::monomial(Word::single(2), Rat(2)));
}

TEST_CASE("completion of the worked examples") {
    // zerodim goes trivial
    RewriteSystem z = complete(initial_system(make_fixture("zerodim")));
    CHECK(z.status() == SystemStatus::Trivial);

    // betweenex2: confluent with the linear rule x1 -> 0
    RewriteSystem b = complete(initial_system(make_fixture("betweenex2")));
    REQUIRE(b.status() == SystemStatus::Confluent);
    auto lin = b.linear_rules();
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].head == Word::single(0));
    CHECK(lin[0].body == Element::zero());
    CHECK(b.surviving_generators() == std::vector<int>{1});
    CHECK(b.verify_confluence());

    // star condition holding -> no linear rules
    RewriteSystem f = complete(initial_system(make_fixture("fdex1")));
    CHECK(f.status() == SystemStatus::Confluent);
    CHECK(f.linear_rules().empty());
}

TEST_CASE("normal form rejects unfit systems") {
    RewriteSystem z = complete(initial_system(make_fixture("zerodim")));
    CHECK_THROWS_AS(normal_form(z, Element::unit()), PreconditionError);
    RewriteSystem raw = initial_system(make_fixture("fdex1"));
    CHECK_THROWS_AS(normal_form(raw, Element::unit()), PreconditionError);
}

TEST_CASE("dimension of the bundled fixtures") {
    CHECK(dimension(make_fixture("fdex1", {{"a", Rat(2)}, {"b", Rat(1)}})) == 8);
    CHECK(dimension(make_fixture("inbetweenex1", {{"mu13", Rat(2)}})) == 4);
    CHECK(dimension(make_fixture("zerodim")) == 0);
    CHECK(dimension(make_fixture("betweenex2")) == 2);
    CHECK(dimension(make_fixture("inbetweenex1")) == 8);
}

TEST_CASE("basis enumeration") {
    // classical n=2 full dimension
    Presentation cl = pres({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                           {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    std::vector<Word> ws = basis(cl);
    REQUIRE(ws.size() == 4);
    CHECK(ws[0] == Word::unit());
    CHECK(ws[1] == Word::single(0));
    CHECK(ws[2] == Word::single(1));
    CHECK(ws[3] == Word({0, 1}));

    // betweenex2: {1, x2}
    std::vector<Word> bs = basis(make_fixture("betweenex2"));
    REQUIRE(bs.size() == 2);
    CHECK(bs[1] == Word::single(1));

    // notsimple (a=1): all 8 square-free increasing words
    CHECK(basis(make_fixture("notsimple", {{"a", Rat(1)}})).size() == 8);

    CHECK_THROWS_AS(basis(make_fixture("zerodim")), PreconditionError);
}

TEST_CASE("multiplication") {
    // n=1: x1 * x1 = b
    Presentation g = one_generator(Rat(5));
    CHECK(multiply(g, Element::from_word(Word::single(0)), Element::from_word(Word::single(0))) ==
          Element::monomial(Word::unit(), Rat(5)));

    // notsimple (a=1): (x3 + 1)(x3 - 1) = 0, a zero divisor
    Presentation ns = make_fixture("notsimple", {{"a", Rat(1)}});
    Element xp1 = Element::from_word(Word::single(2));
    xp1.add_term(Word::unit(), Rat(1));
    Element xm1 = Element::from_word(Word::single(2));
    xm1.add_term(Word::unit(), Rat(-1));
    CHECK(multiply(ns, xp1, xm1) == Element::zero());

    // unit law on random elements
    std::mt19937 rng(5);
    Presentation p = make_fixture("fdex1");
    RewriteSystem sys = complete(initial_system(p));
    std::uniform_int_distribution<int> letter(0, 2), len(0, 4), coeff(-3, 3);
    for (int t = 0; t < 50; ++t) {
        Element a;
        for (int k = 0; k < 3; ++k) {
            Word w;
            int l = len(rng);
            for (int m = 0; m < l; ++m) w.letters.push_back(letter(rng));
            a.add_term(w, Rat(coeff(rng)));
        }
        Element na = normal_form(sys, a);
        CHECK(multiply(sys, Element::unit(), a) == na);
        CHECK(multiply(sys, a, Element::unit()) == na);
    }

    CHECK_THROWS_AS(multiply(make_fixture("zerodim"), Element::unit(), Element::unit()),
                    PreconditionError);
}

TEST_CASE("multiplication is associative on random basis elements") {
    std::mt19937 rng(9);
    for (const char* id : {"fdex1", "notsimple", "betweenex2"}) {
        Presentation p = make_fixture(id);
        RewriteSystem sys = complete(initial_system(p));
        std::vector<Word> ws = basis(p);
        std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
        for (int t = 0; t < 60; ++t) {
            Element a = Element::from_word(ws[pick(rng)]);
            Element b = Element::from_word(ws[pick(rng)]);
            Element c = Element::from_word(ws[pick(rng)]);
            CHECK(multiply(sys, multiply(sys, a, b), c) == multiply(sys, a, multiply(sys, b, c)));
        }
    }
}

TEST_CASE("filtered dimension profile") {
    Presentation p = make_fixture("fdex1", {{"a", Rat(2)}, {"b", Rat(1)}});
    CHECK(filtered_dimension_profile(p, 3) == std::vector<std::uint64_t>{1, 4, 7, 8});
    CHECK(filtered_dimension_profile(make_fixture("betweenex2"), 2) ==
          std::vector<std::uint64_t>{1, 2, 2});
    CHECK(filtered_dimension_profile(make_fixture("fdex2", {{"n", Rat(2)}}), 2) ==
          std::vector<std::uint64_t>{1, 3, 4});
    CHECK_THROWS_AS(filtered_dimension_profile(make_fixture("zerodim"), 2), PreconditionError);
}

TEST_CASE("dimension properties over random presentations") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> n_pick(1, 4);
    for (int t = 0; t < 250; ++t) {
        int n = n_pick(rng);
        Presentation p = random_presentation(rng, n);
        std::uint64_t dim = dimension(p);
        // dimension in {0} union {2^j}, and at most 2^n
        CHECK(dim <= (std::uint64_t{1} << n));
        if (dim != 0) {
            CHECK((dim & (dim - 1)) == 0);
            CHECK(dim >= 2);
        }
        CHECK(dimension(opposite(p)) == dim);
        RewriteSystem sys = complete(initial_system(p));
        if (sys.status() == SystemStatus::Confluent) CHECK(sys.verify_confluence());
    }
}

TEST_CASE("classical and quantum exterior cases reach full dimension") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> entry(-3, 3), n_pick(1, 4);
    for (int t = 0; t < 60; ++t) {
        int n = n_pick(rng);
        // mu identically 1, arbitrary symmetric B
        Mat mu(n, n), b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mu.at(i, j) = Rat(1);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                b.at(i, j) = Rat(entry(rng));
                b.at(j, i) = b.at(i, j);
            }
        CHECK(dimension(validate(mu, b)) == (std::uint64_t{1} << n));
        // B = 0 for random mu
        Presentation qe = random_presentation(rng, n);
        CHECK(dimension(validate(qe.mu(), Mat::zero(n, n))) == (std::uint64_t{1} << n));
    }
}
