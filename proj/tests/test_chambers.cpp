#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/chamber.hpp"

using namespace hurwitz;

TEST_CASE("resonance listing") {
    auto r22 = list_resonances(2, 2);
    REQUIRE(r22.size() == 2);
    CHECK(r22[0].I == std::vector<int>{2});
    CHECK(r22[0].J == std::vector<int>{1});
    CHECK(r22[1].J == std::vector<int>{2});
    CHECK(list_resonances(2, 3).size() == 6);
    CHECK(list_resonances(1, 5).empty());
    CHECK(list_resonances(5, 1).empty());
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 5; ++n)
            CHECK(static_cast<long>(list_resonances(m, n).size()) ==
                  2 * ((1L << (m - 1)) - 1) * ((1L << (n - 1)) - 1));
}

TEST_CASE("signatures of lattice points") {
    auto sig = signature_of(ConePoint::from_pair(Partition({3, 1}), Partition({2, 2})));
    CHECK(sig.signs == "--");
    auto sig2 = signature_of(ConePoint::from_pair(Partition({2, 2}), Partition({3, 1})));
    CHECK(sig2.signs == "-+");
    CHECK_THROWS_AS(signature_of(ConePoint::from_pair(Partition({2, 1, 1}), Partition({3, 1}))),
                    OnWallError);
}

TEST_CASE("feasibility of (2,2) sign vectors") {
    auto ok_minus = feasible_point(ChamberSignature{2, 2, "--"});
    REQUIRE(ok_minus);
    CHECK(signature_of(*ok_minus).signs == "--");
    auto ok_up = feasible_point(ChamberSignature{2, 2, "-+"});
    REQUIRE(ok_up);
    CHECK(signature_of(*ok_up).signs == "-+");
    CHECK_FALSE(feasible_point(ChamberSignature{2, 2, "++"}));
    CHECK_FALSE(feasible_point(ChamberSignature{2, 2, "+-"}));
}

TEST_CASE("totally negative witness construction") {
    CHECK(totally_negative_signature(2, 2).signs == "--");
    CHECK(totally_negative_signature(1, 4).signs.empty());
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            ConePoint w = totally_negative_witness(m, n);
            CHECK(signature_of(w).signs == totally_negative_signature(m, n).signs);
        }
    // the scaled witness quoted for (3,2)
    ConePoint p{{Rat(17, 20), Rat(2, 20), Rat(1, 20)}, {Rat(1, 2), Rat(1, 2)}};
    CHECK(signature_of(p).signs == totally_negative_signature(3, 2).signs);
}

TEST_CASE("chamber enumeration") {
    CHECK(enumerate_chambers(2, 2).size() == 2);
    CHECK(enumerate_chambers(1, 5).size() == 1);
    CHECK(enumerate_chambers(2, 3).size() == 5);
    CHECK_THROWS_AS(enumerate_chambers(5, 5), BudgetExceeded);
}

TEST_CASE("random cone samples land in enumerated chambers") {
    auto chambers = enumerate_chambers(2, 3);
    std::set<std::string> known;
    for (const auto& [sig, w] : chambers) known.insert(sig.signs);
    // deterministic LCG sampling of integer cone points
    unsigned long state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % 50) + 1;
    };
    int hits = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<int> xs = {next(), next()};
        std::vector<int> ys = {next(), next(), next()};
        std::sort(xs.rbegin(), xs.rend());
        std::sort(ys.rbegin(), ys.rend());
        long sx = xs[0] + xs[1], sy = ys[0] + ys[1] + ys[2];
        ConePoint p;
        for (int v : xs) p.x.emplace_back(Rat(v) * sy);
        for (int v : ys) p.y.emplace_back(Rat(v) * sx);
        std::string signs;
        try {
            signs = signature_of(p).signs;
        } catch (const OnWallError&) {
            continue;
        }
        CHECK(known.contains(signs));
        ++hits;
    }
    CHECK(hits > 5000);
}

TEST_CASE("distinct witnesses of one signature agree") {
    auto w1 = feasible_point(ChamberSignature{2, 2, "-+"});
    ConePoint w2 = ConePoint::from_pair(Partition({2, 2}), Partition({3, 1}));
    ConePoint w3 = ConePoint::from_pair(Partition({5, 5}), Partition({9, 1}));
    REQUIRE(w1);
    CHECK(signature_of(*w1).signs == "-+");
    CHECK(signature_of(w2).signs == "-+");
    CHECK(signature_of(w3).signs == "-+");
}

TEST_CASE("wall path crossings") {
    ConePoint a = ConePoint::from_pair(Partition({3, 1}), Partition({2, 2}));
    ConePoint b = ConePoint::from_pair(Partition({2, 2}), Partition({3, 1}));
    auto path = wall_path(a, b);
    REQUIRE(path.size() == 1);
    CHECK(path[0].resonance == Resonance{{2}, {2}});
    CHECK(path[0].from_sign == '-');
    CHECK(path[0].to_sign == '+');
    CHECK(signature_of(path[0].point_before).signs == "--");
    CHECK(signature_of(path[0].point_after).signs == "-+");

    CHECK(wall_path(a, a).empty());
    ConePoint a2 = ConePoint::from_pair(Partition({6, 2}), Partition({4, 4}));
    CHECK(signature_of(a2).signs == "--");
    CHECK(wall_path(a, a2).empty());
}

TEST_CASE("wall path crossing count equals signature distance") {
    auto chambers = enumerate_chambers(2, 3);
    for (const auto& [sa, wa] : chambers)
        for (const auto& [sb, wb] : chambers) {
            auto path = wall_path(wa, wb);
            int dist = 0;
            for (size_t k = 0; k < sa.signs.size(); ++k)
                if (sa.signs[k] != sb.signs[k]) ++dist;
            CHECK(static_cast<int>(path.size()) == dist);
        }
}

TEST_CASE("nudging off walls preserves strict signs") {
    ConePoint p = ConePoint::from_pair(Partition({2, 1, 1}), Partition({3, 1}));
    ConePoint q = nudge_off_walls(p);
    auto resonances = list_resonances(3, 2);
    for (const auto& r : resonances) {
        Rat before = p.wall_value(r);
        Rat after = q.wall_value(r);
        CHECK(after != 0);
        if (before != 0) CHECK((before > 0) == (after > 0));
    }
    ConePoint off = ConePoint::from_pair(Partition({3, 1}), Partition({2, 2}));
    CHECK(nudge_off_walls(off).x == off.x);
    CHECK(nudge_off_walls(off).y == off.y);
}
