#include "cy3check/surd.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cy3;

TEST_SUITE("surd") {

TEST_CASE("square factors move into the coefficient") {
    Surd s = Surd::sqrt_of(QQ(48));
    CHECK(s.rational_part() == 0);
    CHECK(s.coefficient() == 4);
    CHECK(s.radicand() == 3);
    CHECK(!s.is_rational());

    CHECK(Surd::sqrt_of(QQ(49)).as_rational() == 7);
    CHECK(Surd::sqrt_of(QQ(0)).as_rational() == 0);
    CHECK(Surd::sqrt_of(QQ(9, 4)).as_rational() == QQ(3, 2));
    CHECK_THROWS_AS(Surd::sqrt_of(QQ(-1)), std::domain_error);
    CHECK_THROWS_AS(Surd::make(QQ(0), QQ(1), ZZ(-2)), std::domain_error);

    // sqrt(n/d) handled through sqrt(n*d)/d
    Surd half = Surd::sqrt_of(QQ(1, 2));
    CHECK(half.coefficient() == QQ(1, 2));
    CHECK(half.radicand() == 2);
}

TEST_CASE("display: exact and fixed-point") {
    CHECK(Surd::sqrt_of(QQ(48)).exact_string() == "sqrt(48)");
    CHECK((-Surd::sqrt_of(QQ(48))).exact_string() == "-sqrt(48)");
    CHECK(Surd(QQ(3, 2)).exact_string() == "3/2");
    CHECK(Surd::make(QQ(1, 2), QQ(3), ZZ(5)).exact_string() == "1/2 + 3*sqrt(5)");
    CHECK(Surd::make(QQ(1, 2), QQ(-3), ZZ(5)).exact_string() == "1/2 - 3*sqrt(5)");
    CHECK(Surd::make(QQ(1), QQ(1), ZZ(3)).exact_string() == "1 + sqrt(3)");

    CHECK(Surd::sqrt_of(QQ(48)).decimal_string(12) == "6.928203230276");
    CHECK((-Surd::sqrt_of(QQ(48))).decimal_string(12) == "-6.928203230276");
    CHECK(Surd::sqrt_of(QQ(2)).decimal_string(12) == "1.414213562373");
    CHECK(Surd(QQ(3)).decimal_string(2) == "3.00");
    CHECK(Surd(QQ(0)).decimal_string(2) == "0.00");
    // ties round away from zero, decided exactly
    CHECK(Surd(QQ(1, 8)).decimal_string(2) == "0.13");
    CHECK(Surd(QQ(-1, 8)).decimal_string(2) == "-0.13");
    CHECK(Surd(QQ(1, 4)).decimal_string(1) == "0.3");
    CHECK(Surd(QQ(249, 1000)).decimal_string(2) == "0.25");
}

TEST_CASE("exact comparisons") {
    // rational vs quadratic: squared comparison
    CHECK(Surd::sqrt_of(QQ(2)).compare(QQ(3, 2)) < 0);
    CHECK(Surd::sqrt_of(QQ(2)).compare(QQ(7, 5)) > 0);
    CHECK(Surd::sqrt_of(QQ(48)).compare(QQ(7)) < 0);
    CHECK(Surd::sqrt_of(QQ(48)).compare(QQ(6)) > 0);

    // same radicand: algebra in one extension
    Surd a = Surd::make(QQ(1), QQ(2), ZZ(3));   // 1 + 2*sqrt(3)
    Surd b = Surd::make(QQ(2), QQ(1), ZZ(3));   // 2 + sqrt(3)
    CHECK(a.compare(b) > 0);
    CHECK(b < a);

    // radicands in the same square class fold together
    CHECK(Surd::sqrt_of(QQ(12)).compare(Surd::sqrt_of(QQ(3))) > 0);
    CHECK(Surd::make(QQ(0), QQ(1), ZZ(8)) == Surd::make(QQ(0), QQ(2), ZZ(2)));

    // independent radicands: resolved by bracketing
    Surd c = Surd::make(QQ(1), QQ(1), ZZ(2));   // 1 + sqrt(2) ~ 2.4142
    Surd d = Surd::sqrt_of(QQ(6));              // ~ 2.4495
    CHECK(c.compare(d) < 0);
    CHECK(d.compare(c) > 0);

    CHECK(Surd::sqrt_of(QQ(2)).sign() == 1);
    CHECK((-Surd::sqrt_of(QQ(2))).sign() == -1);
    CHECK(Surd(QQ(0)).sign() == 0);
}

TEST_CASE("arithmetic and floor") {
    Surd s = Surd::sqrt_of(QQ(3));
    CHECK(s.scaled(QQ(2)).exact_string() == "sqrt(12)");
    CHECK((s + QQ(1)).exact_string() == "1 + sqrt(3)");
    CHECK((s - QQ(1)).exact_string() == "-1 + sqrt(3)");

    CHECK(Surd::sqrt_of(QQ(48)).floor() == 6);
    CHECK((-Surd::sqrt_of(QQ(48))).floor() == -7);
    CHECK(Surd(QQ(5, 2)).floor() == 2);
    CHECK((Surd::sqrt_of(QQ(2)) - QQ(3)).floor() == -2);
    CHECK(Surd::sqrt_of(QQ(4)).floor() == 2);
}

TEST_CASE("as_rational guards") {
    CHECK_THROWS_AS(Surd::sqrt_of(QQ(2)).as_rational(), std::domain_error);
    CHECK(Surd::sqrt_of(QQ(4)).as_rational() == 2);
}

TEST_CASE("sums of independent roots") {
    SurdSum a = SurdSum::sqrt_of(QQ(2)) + SurdSum::sqrt_of(QQ(3));
    CHECK(!a.is_rational());
    CHECK(!a.is_simple_surd());
    CHECK(a.sign() == 1);
    CHECK(a.exact_string() == "sqrt(2) + sqrt(3)");

    // same square class merges: sqrt(2) + sqrt(8) = 3*sqrt(2)
    SurdSum b = SurdSum::sqrt_of(QQ(2)) + SurdSum::sqrt_of(QQ(8));
    CHECK(b.is_simple_surd());
    CHECK(b.as_surd() == Surd::make(QQ(0), QQ(3), ZZ(2)));

    // cancellation to zero
    SurdSum c = SurdSum::sqrt_of(QQ(2)) + SurdSum(Surd::make(QQ(0), QQ(-1), ZZ(2)));
    CHECK(c.is_rational());
    CHECK(c.as_rational() == 0);
    CHECK(c.sign() == 0);

    // the triangle-bound combination: (2 + 2*sqrt(3)) + (-2 + 2*sqrt(3)) = sqrt(48)
    SurdSum omega = SurdSum(Surd::make(QQ(2), QQ(1, 2), ZZ(48))) +
                    SurdSum(Surd::make(QQ(-2), QQ(1, 2), ZZ(48)));
    CHECK(omega.is_simple_surd());
    CHECK(omega.as_surd() == Surd::sqrt_of(QQ(48)));

    // a tight sign: sqrt(2) + sqrt(3) - sqrt(99/10) < 0 since (sqrt2+sqrt3)^2 = 5+2*sqrt(6)
    // and 2*sqrt(6) < 49/10 exactly (2400 < 2401)
    SurdSum tight = SurdSum::sqrt_of(QQ(2)) + SurdSum::sqrt_of(QQ(3)) +
                    SurdSum::sqrt_of(QQ(99, 10)).scaled(QQ(-1));
    CHECK(tight.sign() == -1);
    SurdSum tight2 = SurdSum::sqrt_of(QQ(2)) + SurdSum::sqrt_of(QQ(3)) +
                     SurdSum::sqrt_of(QQ(49, 5)).scaled(QQ(-1));
    CHECK(tight2.sign() == 1);

    CHECK(a.compare(SurdSum(QQ(3))) > 0);                  // 3.146... > 3
    CHECK(a.compare(SurdSum(QQ(4))) < 0);
    CHECK_THROWS_AS(a.as_rational(), std::domain_error);
    CHECK_THROWS_AS(a.as_surd(), std::domain_error);
}

}  // TEST_SUITE
