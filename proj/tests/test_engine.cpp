#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/engine.hpp"
#include "hurwitz/json_io.hpp"

using namespace hurwitz;

namespace {

MultiPoly var(VarSpec v, int i) { return MultiPoly::variable(v, i); }

}  // namespace

TEST_CASE("crossing delta for the smallest arrangement") {
    ChamberEngine engine;
    ConePoint pos = ConePoint::from_pair(Partition({2, 2}), Partition({3, 1}));
    MultiPoly delta = engine.wall_crossing_delta(Resonance{{2}, {2}}, pos);
    VarSpec v{2, 2};
    MultiPoly want = (Rat(2) * (var(v, 1) - var(v, 3))).canonicalized();
    CHECK(delta == want);
    CHECK_THROWS_AS(
        engine.wall_crossing_delta(Resonance{{2}, {2}},
                                   ConePoint::from_pair(Partition({3, 1}), Partition({2, 2}))),
        std::invalid_argument);
}

TEST_CASE("crossing delta evaluates to the difference of adjacent values") {
    ChamberEngine engine;
    // positive side of x2 = y3 for (2,3); the probe point sits on other walls
    // but inside this chamber pair's common closure
    ConePoint pos = ConePoint::from_pair(Partition({7, 3}), Partition({4, 4, 2}));
    MultiPoly delta = engine.wall_crossing_delta(Resonance{{2}, {3}}, pos);
    MultiPoly tn = engine.chamber_polynomial(totally_negative_signature(2, 3),
                                             totally_negative_witness(2, 3));
    HurwitzPair probe{Partition({3, 2}), Partition({2, 2, 1})};
    std::vector<Rat> pt = ConePoint::from_pair(probe.mu, probe.nu).as_vector();
    Rat oracle_value = engine.oracle().double_hurwitz(probe);
    CHECK(delta.eval(pt) == oracle_value - tn.eval(pt));
}

TEST_CASE("chamber polynomials of the (2,2) arrangement") {
    ChamberEngine engine;
    MultiPoly tn = engine.chamber_polynomial(totally_negative_signature(2, 2),
                                             totally_negative_witness(2, 2));
    VarSpec v{2, 2};
    CHECK(tn == Rat(2) * var(v, 0));
    auto w = feasible_point(ChamberSignature{2, 2, "-+"});
    REQUIRE(w);
    MultiPoly up = engine.chamber_polynomial(ChamberSignature{2, 2, "-+"}, *w);
    MultiPoly expected = (Rat(2) * var(v, 0) + Rat(2) * (var(v, 1) - var(v, 3))).canonicalized();
    CHECK(up == expected);
    CHECK(up.eval({2, 2, 3, 1}) == 6);
    CHECK(up.is_homogeneous());
    CHECK(up.degree() == 1);
}

TEST_CASE("one-row shapes give constant-chamber polynomials") {
    ChamberEngine engine;
    MultiPoly p = engine.chamber_polynomial(totally_negative_signature(1, 3),
                                            totally_negative_witness(1, 3));
    VarSpec v{1, 3};
    CHECK(p == Rat(2) * var(v, 0));
    CHECK_THROWS_AS(engine.chamber_polynomial(totally_negative_signature(1, 1),
                                              totally_negative_witness(1, 1)),
                    std::domain_error);
}

TEST_CASE("path independence of the synthesis") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        auto chambers = enumerate_chambers(m, n);
        for (const auto& [sig, witness] : chambers) {
            ChamberEngine a;
            MultiPoly pa = a.chamber_polynomial(sig, witness);
            // second witness: dithered copy, third: midpoint toward another chamber's edge
            ChamberEngine b;
            auto alt = chamber_detail::dither(witness, 1);
            MultiPoly pb = b.chamber_polynomial(sig, alt ? *alt : witness);
            CHECK(pa == pb);
            CHECK(pa.is_homogeneous());
            CHECK(pa.degree() == m + n - 3);
        }
    }
}

TEST_CASE("every method agrees on golden pairs") {
    ChamberEngine engine;
    HurwitzPair p1{Partition({3, 1}), Partition({3, 1})};
    for (Method m : {Method::Auto, Method::Oracle, Method::Dfs, Method::ClosedForm, Method::Trees,
                     Method::Chambers})
        CHECK(engine.compute(p1, m) == 6);

    HurwitzPair wall{Partition({2, 1, 1}), Partition({3, 1})};
    for (Method m : {Method::Auto, Method::Oracle, Method::ClosedForm, Method::Trees, Method::Chambers})
        CHECK(engine.compute(wall, m) == 54);
    CHECK(engine.compute(wall, Method::ClosedFormLiteral) == 48);

    HurwitzPair v{Partition({4, 2, 1}), Partition({5, 2})};
    Rat golden = engine.compute(v, Method::Oracle);
    CHECK(golden == 180);
    for (Method m : {Method::Auto, Method::Trees, Method::Chambers, Method::ClosedForm})
        CHECK(engine.compute(v, m) == golden);
}

TEST_CASE("sub-chamber signatures do not depend on the witness") {
    ChamberEngine engine;
    Resonance res{{2}, {3}};
    std::vector<ConePoint> witnesses = {
        ConePoint::from_pair(Partition({7, 3}), Partition({4, 4, 2})),
        ConePoint::from_pair(Partition({14, 6}), Partition({8, 8, 4})),
        ConePoint::from_pair(Partition({9, 4}), Partition({5, 5, 3})),
    };
    auto first = engine.delta_sub_signatures(res, witnesses[0]);
    for (const auto& w : witnesses) {
        auto [s1, s2] = engine.delta_sub_signatures(res, w);
        CHECK(s1 == first.first);
        CHECK(s2 == first.second);
    }
}

TEST_CASE("verification sweep agrees across methods and workers") {
    VerifyReport r = verify_sweep(3);
    CHECK(r.ok());
    CHECK(r.entries.size() == 1 + 4 + 9);
    VerifyReport r3 = verify_sweep(3, {}, 3);
    REQUIRE(r.entries.size() == r3.entries.size());
    for (size_t i = 0; i < r.entries.size(); ++i) {
        CHECK(r.entries[i].values == r3.entries[i].values);
    }
}

TEST_CASE("literal three-part variant shows up in the sweep") {
    VerifyReport r = verify_sweep(4, {Method::ClosedFormLiteral, Method::Oracle});
    CHECK_FALSE(r.ok());
    bool found = false;
    for (size_t i : r.disagreements) {
        const auto& e = r.entries[i];
        if (e.mu.str() == "2,1,1" && e.nu.str() == "3,1") found = true;
    }
    CHECK(found);
}

TEST_CASE("degree-one sweep is a single trivial pair") {
    VerifyReport r = verify_sweep(1);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.ok());
    REQUIRE_FALSE(r.entries[0].values.empty());
    CHECK(r.entries[0].values[0].second == 1);
}

TEST_CASE("json round trips are byte identical") {
    ChamberEngine engine;
    auto w = feasible_point(ChamberSignature{2, 2, "-+"});
    MultiPoly p = engine.chamber_polynomial(ChamberSignature{2, 2, "-+"}, *w);
    Json j = poly_to_json(p);
    std::string emitted = j.dump();
    CHECK(Json::parse(emitted).dump() == emitted);
    CHECK(poly_from_json(Json::parse(emitted)) == p);

    Json cj = chamber_to_json(ChamberSignature{2, 2, "-+"}, *w);
    CHECK(Json::parse(cj.dump()).dump() == cj.dump());

    HurwitzPair pair{Partition({3, 1}), Partition({3, 1})};
    Json rj = result_to_json(pair, Rat(6), Method::Auto, "--", &p);
    CHECK(Json::parse(rj.dump()).dump() == rj.dump());
}
