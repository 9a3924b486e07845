#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/chamber.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

namespace {

// Off walls the guards are evaluated at nu itself; on walls the closed forms
// take their term selection from a nudged point (the chamber whose closure
// holds the input) while magnitudes stay at nu.
Rat three_part_at(int mu1, int mu2, int mu3, const Partition& nu, bool literal = false) {
    ConePoint sel = nudge_off_walls(ConePoint::from_pair(Partition({mu1, mu2, mu3}), nu));
    return three_part_value(mu1, mu2, mu3, nu, literal, &sel.y);
}

bool on_wall(const Partition& mu, const Partition& nu) {
    try {
        signature_of(ConePoint::from_pair(mu, nu));
        return false;
    } catch (const OnWallError&) {
        return true;
    }
}

}  // namespace

TEST_CASE("one-part values") {
    CHECK(one_part_value(1, Partition({1})) == 1);
    CHECK(one_part_value(2, Partition({2})) == Rat(1, 2));
    CHECK(one_part_value(3, Partition({1, 1, 1})) == 6);
}

TEST_CASE("two-part golden values") {
    CHECK(two_part_value(3, 1, Partition({3, 1})) == 6);
    CHECK(two_part_value(2, 1, Partition({2, 1})) == 4);
    CHECK(two_part_value(2, 2, Partition({3, 1})) == 6);
}

TEST_CASE("two-part empty-set term dominates when mu2 = 1") {
    // Only J = {} qualifies, leaving n! mu1^(n-1).
    CHECK(two_part_value(5, 1, Partition({3, 2, 1})) == Rat(factorial(3)) * 25);
    CHECK(two_part_value(3, 1, Partition({2, 1, 1})) == Rat(factorial(3)) * 9);
}

TEST_CASE("two-part matches the factorization oracle") {
    FactorizationOracle oracle;
    for (int d = 2; d <= 7; ++d)
        for (int mu2 = 1; 2 * mu2 <= d; ++mu2)
            for (const auto& nu : partitions_of(d)) {
                Partition pnu(nu);
                INFO("mu=(" << d - mu2 << "," << mu2 << ") nu=" << pnu.str());
                CHECK(two_part_value(d - mu2, mu2, pnu) ==
                      oracle.double_hurwitz(HurwitzPair(Partition({d - mu2, mu2}), pnu)));
            }
}

TEST_CASE("partition-sum route equals the subset route") {
    CHECK(two_part_partition_sum(3, 1, Partition({2, 1, 1})) == 54);
    CHECK(two_part_partition_sum(3, 1, Partition({3, 1})) == 6);
    CHECK(two_part_partition_sum(2, 1, Partition({2, 1})) == 4);
    for (int d = 2; d <= 8; ++d)
        for (int mu2 = 1; 2 * mu2 <= d; ++mu2)
            for (const auto& nu : partitions_of(d)) {
                Partition pnu(nu);
                INFO("mu=(" << d - mu2 << "," << mu2 << ") nu=" << pnu.str());
                CHECK(two_part_partition_sum(d - mu2, mu2, pnu) == two_part_value(d - mu2, mu2, pnu));
            }
}

TEST_CASE("three-part corrected form matches the oracle") {
    CHECK(three_part_at(2, 1, 1, Partition({3, 1})) == 54);
    FactorizationOracle oracle;
    int raw_checked = 0;
    for (int d = 3; d <= 7; ++d)
        for (int mu1 = 1; mu1 <= d - 2; ++mu1)
            for (int mu2 = 1; mu2 <= mu1; ++mu2) {
                int mu3 = d - mu1 - mu2;
                if (mu3 < 1 || mu3 > mu2) continue;
                for (const auto& nu : partitions_of(d)) {
                    Partition pnu(nu);
                    Partition pmu({mu1, mu2, mu3});
                    INFO("mu=" << pmu.str() << " nu=" << pnu.str());
                    Rat want = oracle.double_hurwitz(HurwitzPair{pmu, pnu});
                    CHECK(three_part_at(mu1, mu2, mu3, pnu) == want);
                    if (!on_wall(pmu, pnu)) {
                        // off walls the plain guards are already correct
                        CHECK(three_part_value(mu1, mu2, mu3, pnu) == want);
                        ++raw_checked;
                    }
                }
            }
    CHECK(raw_checked > 10);
}

TEST_CASE("three-part literal first-sum prefactor reproduces the known mismatch") {
    CHECK(three_part_at(2, 1, 1, Partition({3, 1}), /*literal=*/true) == 48);
}

TEST_CASE("three-part degenerates to the totally negative value") {
    // With mu2 = mu3 = 1 no nonempty subset passes any summation guard.
    Partition nu({3, 3, 3});
    CHECK(three_part_value(7, 1, 1, nu) == Rat(factorial(4)) * 49 * 9);
}

TEST_CASE("three-cycle family values") {
    CHECK(three_cycle_pair_value(4) == 6);
    CHECK(three_cycle_pair_value(5) == 306);
    CHECK(three_cycle_pair_value(6) == 29700);
    CHECK_THROWS_AS(three_cycle_pair_value(3), std::domain_error);
}

TEST_CASE("totally negative polynomial shapes") {
    VarSpec v12{1, 2};
    CHECK(totally_negative_polynomial(1, 2) == MultiPoly::constant(v12, 1));
    VarSpec v13{1, 3};
    CHECK(totally_negative_polynomial(1, 3) == Rat(2) * MultiPoly::variable(v13, 0));
    VarSpec v22{2, 2};
    CHECK(totally_negative_polynomial(2, 2) == Rat(2) * MultiPoly::variable(v22, 0));
    VarSpec v31{3, 1};
    MultiPoly want = Rat(2) * (MultiPoly::variable(v31, 0) + MultiPoly::variable(v31, 1) +
                               MultiPoly::variable(v31, 2));
    CHECK(totally_negative_polynomial(3, 1) == want);
    CHECK_THROWS_AS(totally_negative_polynomial(1, 1), std::domain_error);
}

TEST_CASE("rooted tree identity") {
    auto [lhs2, rhs2] = rooted_tree_identity(2);
    VarSpec v2{2, 0};
    CHECK(lhs2 == MultiPoly::variable(v2, 0));
    CHECK(lhs2 == rhs2);

    auto [lhs3, rhs3] = rooted_tree_identity(3);
    VarSpec v3{3, 0};
    MultiPoly x1 = MultiPoly::variable(v3, 0);
    MultiPoly want = x1 * x1 + x1 * MultiPoly::variable(v3, 1) + x1 * MultiPoly::variable(v3, 2);
    CHECK(lhs3 == want);
    CHECK(lhs3 == rhs3);

    for (int m = 4; m <= 7; ++m) {
        auto [lhs, rhs] = rooted_tree_identity(m);
        CHECK(lhs == rhs);
    }
}
