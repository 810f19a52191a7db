#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace pw;

TEST(Families, Examples) {
    EXPECT_EQ(wiener(build_family(FamilyId::T3, 9)), 54);
    EXPECT_EQ(wiener(build_family(FamilyId::T4, 12)), 110);
    EXPECT_EQ(wiener(build_family(FamilyId::T5_WIENER, 27)), 867);
    EXPECT_EQ(wiener(build_family(FamilyId::Q3, 14)), 201);
    try {
        build_family(FamilyId::T3, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OrderOutOfDomain);
    }
}

TEST(Families, Domains) {
    EXPECT_FALSE(family_accepts(FamilyId::T5_REMOTE_5K3, 24));
    EXPECT_TRUE(family_accepts(FamilyId::T5_REMOTE_5K3, 28));
    EXPECT_FALSE(family_accepts(FamilyId::T5_WIENER, 21));
    EXPECT_FALSE(family_accepts(FamilyId::Q3, 13));
    EXPECT_FALSE(family_accepts(FamilyId::T_NONSIMPLE, 17));
    EXPECT_FALSE(family_accepts(FamilyId::Q_NONSIMPLE, 12));
    EXPECT_FALSE(family_accepts(FamilyId::T_MIN, 4));
    EXPECT_THROW(build_minimizer(PlaneClass::triangulation, 4), Error);
    EXPECT_EQ(parse_family("T5_REMOTE_5K3"), FamilyId::T5_REMOTE_5K3);
    EXPECT_FALSE(parse_family("T6").has_value());
}

TEST(Families, ClassAndConnectivity) {
    for (auto id : all_families)
        for (int n = 4; n <= 70; ++n) {
            if (!family_accepts(id, n)) continue;
            auto g = build_family(id, n);
            ASSERT_EQ(g.order(), n);
            auto c = classify(g);
            if (family_is_triangulation(id)) EXPECT_TRUE(c.is_triangulation) << family_name(id) << " n=" << n;
            else EXPECT_TRUE(c.is_quadrangulation) << family_name(id) << " n=" << n;
            bool nonsimple = id == FamilyId::T_NONSIMPLE || id == FamilyId::Q_NONSIMPLE;
            EXPECT_EQ(c.is_simple, !nonsimple);
            EXPECT_GE(vertex_connectivity(g).kappa, family_kappa(id)) << family_name(id) << " n=" << n;
        }
}

TEST(Families, NonSimpleCaptions) {
    for (int n = 16; n <= 80; n += 2) {
        Rational t = Rational(n * n * n, 12) + Rational(2 * n, 3) - Rational(1);
        EXPECT_EQ(wiener(build_family(FamilyId::T_NONSIMPLE, n)), t.num()) << n;
    }
    for (int n = 14; n <= 80; n += 2) {
        Rational q = Rational(n * n * n, 12) + Rational(n * n, 4) - Rational(n, 3);
        EXPECT_EQ(wiener(build_family(FamilyId::Q_NONSIMPLE, n)), q.num()) << n;
    }
}

TEST(Families, Minimizers) {
    for (int n = 5; n <= 30; ++n) {
        auto g = build_minimizer(PlaneClass::triangulation, n);
        std::int64_t m = 3 * n - 6;
        EXPECT_EQ(wiener(g), m + 2 * (n * (n - 1) / 2 - m));
        EXPECT_TRUE(classify(g).is_triangulation);
    }
    for (int n = 4; n <= 30; ++n) {
        auto g = build_minimizer(PlaneClass::quadrangulation, n);
        std::int64_t m = 2 * n - 4;
        EXPECT_EQ(wiener(g), m + 2 * (n * (n - 1) / 2 - m));
        EXPECT_TRUE(classify(g).is_quadrangulation);
    }
    EXPECT_EQ(wiener(build_minimizer(PlaneClass::triangulation, 8)), 38);
    EXPECT_EQ(wiener(build_minimizer(PlaneClass::quadrangulation, 8)), 44);
}

TEST(Families, MinimizersAreMinimalOnCorpus) {
    for (int n = 5; n <= 10; ++n) {
        std::int64_t lo = INT64_MAX;
        for (const auto& code : generate_codes(PlaneClass::triangulation, n, 3)) lo = std::min(lo, wiener(graph_from_code(code)));
        EXPECT_EQ(lo, wiener(build_minimizer(PlaneClass::triangulation, n)));
    }
    for (int n = 4; n <= 11; ++n) {
        std::int64_t lo = INT64_MAX;
        for (const auto& code : generate_codes(PlaneClass::quadrangulation, n, 2)) lo = std::min(lo, wiener(graph_from_code(code)));
        EXPECT_EQ(lo, wiener(build_minimizer(PlaneClass::quadrangulation, n)));
    }
}

TEST(Families, GadgetF) {
    for (int p = 3; p <= 8; ++p) {
        auto g = build_gadget(GadgetKind::F_P, p);
        EXPECT_EQ(g.order(), 5 * p + 1);
        EXPECT_EQ(vertex_connectivity(g).kappa, 5);
        auto mirror = build_gadget(GadgetKind::F_P_OUTER, p);
        EXPECT_EQ(canonical_code(g), canonical_code(mirror));
    }
    EXPECT_EQ(oracle::brute_kappa(oracle::matrix(build_gadget(GadgetKind::F_P, 3))), 5);
    EXPECT_THROW(build_gadget(GadgetKind::F_P, 2), Error);
}

TEST(Families, GadgetQ) {
    for (int p : {4, 6, 8}) {
        auto g = build_gadget(GadgetKind::Q_P, p);
        EXPECT_EQ(g.order(), 2 * p + 1);
        std::set<int> z(g.neighbors(2 * p + 1).begin(), g.neighbors(2 * p + 1).end());
        std::set<int> even;
        for (int i = 0; i < p; i += 2) even.insert(p + 1 + i);
        EXPECT_EQ(z, even);
        int non4 = 0;
        for (int len : classify(g).face_lengths)
            if (len != 4) { ++non4; EXPECT_EQ(len, p); }
        EXPECT_EQ(non4, p == 4 ? 0 : 1);
    }
    auto code = encode_planar_code(build_gadget(GadgetKind::Q_P, 6));
    EXPECT_EQ(decode_planar_code(code).size(), 1u);
    try {
        build_gadget(GadgetKind::Q_P, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadGadgetParameter);
    }
}
