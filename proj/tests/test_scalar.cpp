#include <doctest.h>

#include <random>

#include "skewclifford/errors.hpp"
#include "skewclifford/matrix.hpp"
#include "skewclifford/rational.hpp"
#include "test_support.hpp"

using namespace skcl;
using skcl::testing::mat;

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2).inv() == Rat(1, 2));
    CHECK(Rat(-1) * Rat(-1) == Rat(1));
    CHECK(Rat(4, 6) == Rat(2, 3));  // lowest terms
    CHECK(Rat(1, -2) == Rat(-1, 2));  // positive denominator
    CHECK(Rat(0).is_zero());
    CHECK_THROWS_AS(Rat(0).inv(), PreconditionError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), PreconditionError);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rat::parse("5/6") == Rat(5, 6));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat::parse("4/6").str() == "2/3");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rat::parse("a/b"), ValidationError);
    CHECK_THROWS_AS(Rat::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(Rat::parse("1.5"), ValidationError);
    CHECK_THROWS_AS(Rat::parse(""), ValidationError);
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int t = 0; t < 300; ++t) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Rat(1));
    }
}

TEST_CASE("rref base cases") {
    RrefResult id = rref(Mat::identity(2));
    CHECK(id.reduced == Mat::identity(2));
    CHECK(id.rank == 2);
    CHECK(id.pivots == std::vector<int>{0, 1});

    RrefResult zero = rref(Mat::zero(3, 3));
    CHECK(zero.reduced == Mat::zero(3, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.pivots.empty());

    RrefResult dep = rref(mat({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
    CHECK(dep.rank == 1);
    CHECK(dep.pivots == std::vector<int>{0});
    CHECK(dep.reduced == mat({{Rat(1), Rat(2)}, {Rat(0), Rat(0)}}));
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
    for (int t = 0; t < 120; ++t) {
        int r = dim(rng), c = dim(rng);
        Mat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Rat(entry(rng), 1 + (entry(rng) + 4) % 3);
        RrefResult first = rref(m);
        CHECK(rref(first.reduced).reduced == first.reduced);  // idempotence
        CHECK(rank(m) == rank(m.transpose()));
    }
}
