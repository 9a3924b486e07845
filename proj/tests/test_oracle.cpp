#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

TEST_CASE("transposition step on tiny classes") {
    ClassVector v;
    v.d = 2;
    v.counts[{1, 1}] = 1;
    ClassVector w = transposition_step(v);
    CHECK(w.counts.size() == 1);
    CHECK(w.counts.at({2}) == 1);
    ClassVector back = transposition_step(w);
    CHECK(back.counts.at({1, 1}) == 1);

    ClassVector id3;
    id3.d = 3;
    id3.counts[{1, 1, 1}] = 1;
    ClassVector step = transposition_step(id3);
    CHECK(step.counts.size() == 1);
    CHECK(step.counts.at({2, 1}) == 3);
}

TEST_CASE("transposition step conserves totals times d(d-1)/2") {
    for (int d = 2; d <= 8; ++d) {
        ClassVector v;
        v.d = d;
        // a lumpy start: every class once
        for (const auto& p : partitions_of(d)) v.counts[p] = 1;
        Int before = v.total();
        ClassVector w = transposition_step(v);
        CHECK(w.total() == before * d * (d - 1) / 2);
    }
}

TEST_CASE("disconnected counts") {
    FactorizationOracle oracle;
    CHECK(oracle.disconnected_count(Partition({1}), Partition({1}), 0) == 1);
    CHECK(oracle.disconnected_count(Partition({2}), Partition({2}), 0) == Rat(1, 2));
    CHECK(oracle.disconnected_count(Partition({3, 1}), Partition({2, 1, 1}), 3) == 36);
}

TEST_CASE("connected counts") {
    FactorizationOracle oracle;
    CHECK(oracle.connected_count(Partition({3, 1}), Partition({2, 1, 1}), 3) == 27);
    CHECK(oracle.connected_count(Partition({2, 1}), Partition({2, 1}), 2) == 4);
    CHECK(oracle.connected_count(Partition({1, 1}), Partition({1, 1}), 0) == 0);
}

TEST_CASE("labelled double hurwitz values") {
    FactorizationOracle oracle;
    CHECK(oracle.double_hurwitz(HurwitzPair(Partition({3, 1}), Partition({3, 1}))) == 6);
    CHECK(oracle.double_hurwitz(HurwitzPair(Partition({3, 1}), Partition({2, 1, 1}))) == 54);
    CHECK(oracle.double_hurwitz(HurwitzPair(Partition({2}), Partition({2}))) == Rat(1, 2));
}

TEST_CASE("brute force agrees with the class-algebra route") {
    FactorizationOracle oracle;
    CHECK(oracle.dfs_count(Partition({2, 1}), Partition({2, 1}), 2) == 4);
    CHECK(oracle.dfs_count(Partition({2}), Partition({1, 1}), 1) == Rat(1, 2));
    CHECK(oracle.dfs_count(Partition({1}), Partition({1}), 0) == 1);
    for (int d = 2; d <= 4; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Partition pm(mu), pn(nu);
                int r = pm.length() + pn.length() - 2;
                INFO("mu=" << pm.str() << " nu=" << pn.str() << " r=" << r);
                CHECK(oracle.connected_count(pm, pn, r) == oracle.dfs_count(pm, pn, r));
            }
    }
}

TEST_CASE("dfs budget is enforced") {
    FactorizationOracle oracle(Budgets{.dfs_ops = 100});
    CHECK_THROWS_AS(oracle.dfs_count(Partition({2, 2, 1}), Partition({3, 2}), 5), BudgetExceeded);
}

TEST_CASE("parity vanishing") {
    FactorizationOracle oracle;
    for (int d = 2; d <= 5; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts)
                for (int r = 0; r <= 4; ++r) {
                    Partition pm(mu), pn(nu);
                    int sign_mismatch =
                        permutation_sign(pn) * (r % 2 == 0 ? 1 : -1) != permutation_sign(pm);
                    if (sign_mismatch) {
                        INFO("mu=" << pm.str() << " nu=" << pn.str() << " r=" << r);
                        CHECK(oracle.disconnected_count(pm, pn, r) == 0);
                    }
                }
    }
}

TEST_CASE("swap symmetry of the pair") {
    FactorizationOracle oracle;
    for (int d = 1; d <= 5; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                HurwitzPair a{Partition(mu), Partition(nu)};
                HurwitzPair b{Partition(nu), Partition(mu)};
                CHECK(oracle.double_hurwitz(a) == oracle.double_hurwitz(b));
            }
    }
}

TEST_CASE("connected never exceeds disconnected") {
    FactorizationOracle oracle;
    for (int d = 1; d <= 5; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Partition pm(mu), pn(nu);
                int r = pm.length() + pn.length() - 2;
                Rat conn = oracle.connected_count(pm, pn, r);
                Rat disc = oracle.disconnected_count(pm, pn, r);
                CHECK(conn <= disc);
                if (d == 1) CHECK(conn == disc);
            }
    }
}
