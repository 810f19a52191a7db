#include <gtest/gtest.h>

#include "shapes.hpp"

using namespace pw;

namespace {

bool disconnects(const PlaneGraph& g, const std::vector<int>& cut) {
    std::uint32_t mask = 0;
    for (int v : cut) mask |= 1u << (v - 1);
    return !oracle::connected_without(oracle::matrix(g), mask);
}

} // namespace

TEST(Connectivity, Examples) {
    auto k4 = vertex_connectivity(shapes::k4());
    EXPECT_EQ(k4.kappa, 3);
    EXPECT_TRUE(k4.witness_cut.empty());
    EXPECT_EQ(vertex_connectivity(shapes::octahedron()).kappa, 4);
    EXPECT_EQ(oracle::brute_kappa(oracle::matrix(shapes::octahedron())), 4);
    EXPECT_EQ(vertex_connectivity(build_gadget(GadgetKind::F_P, 4)).kappa, 5);
    EXPECT_EQ(vertex_connectivity(shapes::path(5)).kappa, 1);
}

TEST(Connectivity, MatchesBruteForce) {
    for (int n = 4; n <= 10; ++n)
        for (auto cls : {PlaneClass::triangulation, PlaneClass::quadrangulation})
            for (const auto& code : generate_codes(cls, n, 2)) {
                auto g = graph_from_code(code);
                auto r = vertex_connectivity(g);
                ASSERT_EQ(r.kappa, oracle::brute_kappa(oracle::matrix(g))) << "n=" << n;
                if (r.kappa == n - 1) {
                    EXPECT_TRUE(r.witness_cut.empty());
                    continue;
                }
                ASSERT_EQ(static_cast<int>(r.witness_cut.size()), r.kappa);
                EXPECT_TRUE(disconnects(g, r.witness_cut));
            }
}

TEST(Connectivity, ClassRanges) {
    for (int n = 4; n <= 11; ++n) {
        for (const auto& code : generate_codes(PlaneClass::triangulation, n, 3)) {
            int k = vertex_connectivity(graph_from_code(code)).kappa;
            EXPECT_TRUE(k >= 3 && k <= 5);
        }
        for (const auto& code : generate_codes(PlaneClass::quadrangulation, n, 2)) {
            int k = vertex_connectivity(graph_from_code(code)).kappa;
            EXPECT_TRUE(k >= 2 && k <= 3);
        }
    }
}

TEST(Connectivity, MultiEdgesCollapsed) {
    EXPECT_EQ(vertex_connectivity(build_family(FamilyId::T_NONSIMPLE, 16)).kappa, 2);
    EXPECT_EQ(vertex_connectivity(build_family(FamilyId::Q_NONSIMPLE, 14)).kappa, 2);
}
