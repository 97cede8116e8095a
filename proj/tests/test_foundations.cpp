#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hv/group.hpp"
#include "hv/rng.hpp"
#include "hv/sampling.hpp"

using namespace hv;

namespace {

GroupInstance z_group() { return GroupInstance(GroupKind::Z, {Scalar(1)}, 0); }

GroupInstance z2_sqrt2() {
    return GroupInstance(GroupKind::Z2, {Scalar(1), Scalar::sqrt_of(2)}, 2);
}

GroupInstance q_group() { return GroupInstance(GroupKind::Q, {Scalar(1)}, 0); }

}  // namespace

TEST_CASE("bigint basics") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(-5).to_string() == "-5");
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    BigInt q, r;
    BigInt::divmod(BigInt::from_string("1000000000000000000000"), BigInt(7), q, r);
    CHECK(q.to_string() == "142857142857142857142");
    CHECK(r.to_string() == "6");
    BigInt::divmod(BigInt(-7), BigInt(2), q, r);
    CHECK(q.to_int64() == -3);
    CHECK(r.to_int64() == -1);
    CHECK(BigInt::gcd(BigInt(60), BigInt(-84)).to_int64() == 12);
    CHECK(BigInt::pow(BigInt(3), 40).to_string() == "12157665459056928801");
    CHECK(BigInt(std::numeric_limits<long long>::min()).to_int64() ==
          std::numeric_limits<long long>::min());
}

TEST_CASE("rational arithmetic is canonical") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(-2), BigInt(-6));  // normalizes to 1/3
    CHECK(third.to_string() == "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((half / third).to_string() == "3/2");
    CHECK(Rational::from_string("6/-4") == Rational(BigInt(-3), BigInt(2)));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), error);
    CHECK(Rational(BigInt(7), BigInt(7)).is_one());
    CHECK((Rational(1) < Rational(BigInt(3), BigInt(2))));
}

TEST_CASE("quadratic scalar field") {
    Scalar s2 = Scalar::sqrt_of(2);
    CHECK((s2 * s2) == Scalar(2));
    Scalar v = Scalar(1) + s2;  // 1 + sqrt(2)
    CHECK(v.to_string() == "1+1*sqrt(2)");
    CHECK((v * v).to_string() == "3+2*sqrt(2)");
    CHECK((v * v.inverse()).is_one());
    CHECK(v.inverse().to_string() == "-1+1*sqrt(2)");  // 1/(1+sqrt 2) = sqrt(2)-1
    CHECK(Scalar::from_string("1/2-1/3*sqrt(2)").to_string() == "1/2-1/3*sqrt(2)");
    CHECK(Scalar::from_string("sqrt(3)") == Scalar::sqrt_of(3));
    CHECK(Scalar::from_string("-sqrt(3)") == -Scalar::sqrt_of(3));
    CHECK(Scalar::from_string("2*sqrt(5)") == Scalar(2) * Scalar::sqrt_of(5));
    CHECK_THROWS_AS(Scalar::sqrt_of(4), error);   // perfect square
    CHECK_THROWS_AS(Scalar::sqrt_of(12), error);  // not squarefree
    CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), error);
    // zero sqrt part collapses to rational mode: structural equality
    CHECK((v - s2) == Scalar(1));
    CHECK((v - s2).sqrt_d() == 0);
}

TEST_CASE("scalar field axioms on random values") {
    Rng rng(20240001);
    GroupInstance g = z2_sqrt2();
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_nonzero_scalar(g, rng);
        Scalar b = random_nonzero_scalar(g, rng);
        Scalar c = random_nonzero_scalar(g, rng);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + Scalar(0)) == a);
        CHECK((a * Scalar(1)) == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("pairing_eval") {
    GroupInstance z = z_group();
    CHECK(z.pairing_eval(z.element({Rational(5)})) == Scalar(5));
    CHECK(z.pairing_eval(z.zero()).is_zero());

    GroupInstance z2 = z2_sqrt2();
    Scalar v = z2.pairing_eval(z2.element({Rational(1), Rational(1)}));
    CHECK(v == Scalar(1) + Scalar::sqrt_of(2));

    CHECK_THROWS_AS(z.pairing_eval(z2.element({Rational(1), Rational(1)})), error);
}

TEST_CASE("pairing additivity on random pairs") {
    GroupInstance z2 = z2_sqrt2();
    Rng rng(20240002);
    for (int i = 0; i < 1000; ++i) {
        GroupElement x = random_group_element(z2, rng);
        GroupElement y = random_group_element(z2, rng);
        CHECK((z2.pairing_eval(x + y) - z2.pairing_eval(x) - z2.pairing_eval(y)).is_zero());
    }
}

TEST_CASE("nondegeneracy check") {
    CHECK(GroupInstance::nondegenerate(GroupKind::Z, {Scalar(1)}));
    CHECK_FALSE(GroupInstance::nondegenerate(GroupKind::Z, {Scalar(0)}));
    // rational pairing on Z^2 is always degenerate: d(1,-1) = 0 here
    CHECK_FALSE(GroupInstance::nondegenerate(GroupKind::Z2, {Scalar(1), Scalar(1)}));
    // m + n*sqrt(2) = 0 forces m = n = 0
    CHECK(GroupInstance::nondegenerate(GroupKind::Z2, {Scalar(1), Scalar::sqrt_of(2)}));
    CHECK_THROWS_AS(GroupInstance(GroupKind::Z2, {Scalar(1), Scalar(1)}, 0), error);
    // rank >= 3 cannot be nondegenerate over a quadratic extension
    CHECK_FALSE(GroupInstance::nondegenerate(
        GroupKind::Z3, {Scalar(1), Scalar::sqrt_of(2), Scalar(1) + Scalar::sqrt_of(2)}));
}

TEST_CASE("epsilon membership in E") {
    GroupInstance z = z_group();
    CHECK(z.epsilon_in_E(Scalar(-1)));
    CHECK(z.epsilon_in_E(Scalar(1)));
    CHECK_FALSE(z.epsilon_in_E(Scalar(2)));
    GroupInstance q = q_group();
    CHECK(q.epsilon_in_E(Scalar(Rational(BigInt(2), BigInt(3)))));
    CHECK_THROWS_AS(z.epsilon_in_E(Scalar(0)), error);
    GroupInstance z2 = z2_sqrt2();
    CHECK_THROWS_AS(z2.epsilon_in_E(Scalar::sqrt_of(2)), error);

    // E is closed under products
    Rng rng(20240003);
    for (int i = 0; i < 100; ++i) {
        Scalar e1 = rng.coin() ? Scalar(1) : Scalar(-1);
        Scalar e2 = rng.coin() ? Scalar(1) : Scalar(-1);
        CHECK(z.epsilon_in_E(e1 * e2));
        Scalar q1(Rational(rng.range(1, 9)) / Rational(rng.range(1, 9)));
        Scalar q2(Rational(-rng.range(1, 9)) / Rational(rng.range(1, 9)));
        CHECK(q.epsilon_in_E(q1 * q2));
    }
}

TEST_CASE("characters and additive maps") {
    GroupInstance z = z_group();
    Character chi(z, {Scalar(2)});
    CHECK(chi.eval(z, z.element({Rational(3)})) == Scalar(8));
    CHECK(chi.eval(z, z.zero()).is_one());
    CHECK(chi.eval(z, z.element({Rational(-2)})) == Scalar(Rational(BigInt(1), BigInt(4))));

    GroupInstance z2 = z2_sqrt2();
    AdditiveMap mu(z2, {Scalar(1), Scalar(-1)});
    CHECK(mu.eval(z2, z2.element({Rational(2), Rational(3)})) == Scalar(-1));
    CHECK(mu.eval(z2, z2.zero()).is_zero());

    GroupInstance q = q_group();
    CHECK(Character::trivial(q).eval(q, q.element({Rational(BigInt(7), BigInt(3))})).is_one());
    CHECK_THROWS_AS(Character(q, {Scalar(2)}), error);

    // homomorphism property on random pairs
    Rng rng(20240004);
    Character chi2(z2, {Scalar(2), Scalar(Rational(BigInt(-1), BigInt(3)))});
    for (int i = 0; i < 1000; ++i) {
        GroupElement x = random_group_element(z2, rng);
        GroupElement y = random_group_element(z2, rng);
        CHECK(chi2.eval(z2, x + y) == chi2.eval(z2, x) * chi2.eval(z2, y));
        CHECK((mu.eval(z2, x + y) - mu.eval(z2, x) - mu.eval(z2, y)).is_zero());
    }
}
