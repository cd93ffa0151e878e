#include "doctest.h"

#include "cqrel/algebra.hpp"
#include "cqrel/random.hpp"
#include "oracles.hpp"

using namespace cqrel;

namespace {

double err(const CQNumber& a, const CQNumber& b) { return distance(a, b); }

}  // namespace

TEST_CASE("all 64 basis products match the hand-entered table") {
    for (std::size_t a = 0; a < kBasisSize; ++a)
        for (std::size_t b = 0; b < kBasisSize; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const CQNumber got = CQNumber::unit(static_cast<Basis>(a)) * CQNumber::unit(static_cast<Basis>(b));
            CHECK(got.c == oracle::basis_product(a, b).c);
        }
}

TEST_CASE("structure constants expose sign and index") {
    const BasisProduct ij = kStructureConstants(kI, kJ);
    CHECK(ij.sign == 1);
    CHECK(ij.index == kK);
    const BasisProduct ji = kStructureConstants(kJ, kI);
    CHECK(ji.sign == -1);
    CHECK(ji.index == kK);
    const BasisProduct atat = kStructureConstants(kAt, kAt);
    CHECK(atat.sign == -1);
    CHECK(atat.index == kOne);
}

TEST_CASE("worked examples") {
    using namespace units;
    CHECK((at + i).c == CQNumber{0, 1, 1, 0, 0, 0, 0, 0}.c);
    CHECK((i * j).c == k.c);
    CHECK((at * at).c == (-one).c);
    CHECK(((at * i) * (at * i)).c == one.c);
    CHECK(((one + at) + (one - at)).c == CQNumber::scalar(2.0).c);

    const CQNumber a{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK((a + CQNumber{}).c == a.c);
    CHECK((a * one).c == a.c);
    CHECK((one * a).c == a.c);
}

TEST_CASE("@ is central and i, j, k anticommute") {
    using namespace units;
    for (const CQNumber& u : {i, j, k}) CHECK((at * u).c == (u * at).c);
    CHECK((i * j).c == (-(j * i)).c);
    CHECK((j * k).c == (-(k * j)).c);
    CHECK((k * i).c == (-(i * k)).c);
}

TEST_CASE("associativity and distributivity on random triples") {
    Rng rng(7);
    double worst_assoc = 0.0;
    double worst_dist = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const CQNumber a = rng.cq(), b = rng.cq(), c = rng.cq();
        worst_assoc = std::max(worst_assoc, err((a * b) * c, a * (b * c)));
        worst_dist = std::max(worst_dist, err(a * (b + c), a * b + a * c));
    }
    CHECK(worst_assoc <= 1e-12);
    CHECK(worst_dist <= 1e-12);
}

TEST_CASE("complex conjugation") {
    using namespace units;
    CHECK(conj_complex(at).c == (-at).c);
    CHECK(conj_complex(i).c == i.c);
    CHECK(conj_complex(at * j).c == (-(at * j)).c);

    Rng rng(11);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const CQNumber a = rng.cq(), b = rng.cq();
        worst = std::max(worst, err(conj_complex(a * b), conj_complex(a) * conj_complex(b)));
        CHECK(conj_complex(conj_complex(a)).c == a.c);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("quaternion conjugation reverses products") {
    using namespace units;
    CHECK(conj_quaternion(i).c == (-i).c);
    CHECK(conj_quaternion(at).c == at.c);
    CHECK(conj_quaternion(at * k).c == (-(at * k)).c);

    Rng rng(13);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const CQNumber a = rng.cq(), b = rng.cq();
        worst = std::max(worst, err(conj_quaternion(a * b), conj_quaternion(b) * conj_quaternion(a)));
        CHECK(conj_quaternion(conj_quaternion(a)).c == a.c);
        CHECK(conj_complex(conj_quaternion(a)).c == conj_quaternion(conj_complex(a)).c);
        CHECK(conj_both(a).c == conj_complex(conj_quaternion(a)).c);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("a times its quaternion conjugate lies in span{1, @}") {
    Rng rng(17);
    for (int n = 0; n < 100; ++n) {
        const CQNumber a = rng.cq();
        const CQNumber p = a * conj_quaternion(a);
        for (std::size_t idx = 2; idx < kBasisSize; ++idx) CHECK(std::abs(p[idx]) <= 1e-14);
    }
}

TEST_CASE("Minkowski membership") {
    using namespace units;
    CHECK(is_minkowski(CQNumber{0, 1, 2, 3, 4, 0, 0, 0}));
    CHECK_FALSE(is_minkowski(one));
    CHECK_FALSE(is_minkowski(at * i));
    CHECK(is_minkowski(CQNumber{1e-14, 1, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(is_minkowski(CQNumber{1e-6, 1, 0, 0, 0, 0, 0, 0}));

    // a is in the subspace exactly when a* = -ā.
    Rng rng(19);
    for (int n = 0; n < 200; ++n) {
        CQNumber a = rng.cq();
        if (n % 2 == 0) a = CQNumber{0, a[1], a[2], a[3], a[4], 0, 0, 0};
        const bool criterion = max_abs(conj_complex(a) + conj_quaternion(a)) <= 1e-12;
        CHECK(is_minkowski(a) == criterion);
    }
}

TEST_CASE("a corrupted table changes multiplication") {
    StructureConstants bad = kStructureConstants;
    bad.table[kI][kJ].sign = -1;
    const CQNumber got = mul(units::i, units::j, bad);
    CHECK(got.c == (-units::k).c);
    CHECK(mul(units::j, units::k, bad).c == units::i.c);
}
