#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pwlvo/cone.hpp"

#include <random>

#include "support/helpers.hpp"

using namespace pwlvo;
using namespace pwlvo::testing;

namespace {

OrderingCone orthant2() { return build_cone(2, {vec({1, 0}), vec({0, 1})}); }

}  // namespace

TEST_CASE("build: orthant cone is pointed with identity projection") {
    const OrderingCone K = orthant2();
    CHECK(K.lineality_space.dim() == 0);
    CHECK(K.quotient_dim() == 2);
    CHECK(K.projection == mat({{1, 0}, {0, 1}}));
    CHECK(K.pointed_rows == mat({{1, 0}, {0, 1}}));
    CHECK_FALSE(K.is_lineal());
}

TEST_CASE("build: single row splits into kernel and complement") {
    const OrderingCone K = build_cone(2, {vec({1, 0})});
    REQUIRE(K.lineality_space.dim() == 1);
    CHECK(K.lineality_space.contains(vec({0, 1})));
    REQUIRE(K.complement_space.dim() == 1);
    CHECK(K.complement_space.basis[0] == vec({1, 0}));
    CHECK(K.pointed_rows == RatMat{{Rat(1)}});
    CHECK_FALSE(K.is_lineal());
}

TEST_CASE("build: opposite rows give a degenerate cone equal to its lineality") {
    const OrderingCone K = build_cone(2, {vec({1, 0}), vec({-1, 0})});
    REQUIRE(K.lineality_space.dim() == 1);
    CHECK(K.lineality_space.contains(vec({0, 1})));
    CHECK(K.is_lineal());
    CHECK(k_minus_l_pieces(K).pieces.empty());
    CHECK_FALSE(interior_nonempty(K));
}

TEST_CASE("build rejects bad rows") {
    CHECK_THROWS_AS(build_cone(2, {}), cone_error);
    CHECK_THROWS_AS(build_cone(2, {vec({0, 0})}), cone_error);
    try {
        build_cone(2, {});
    } catch (const cone_error& e) {
        CHECK(e.kind == cone_error::Kind::WholeSpaceCone);
    }
    try {
        build_cone(2, {vec({1, 0}), vec({0, 0})});
    } catch (const cone_error& e) {
        CHECK(e.kind == cone_error::Kind::ZeroRow);
    }
}

TEST_CASE("in_int examples") {
    const OrderingCone K = orthant2();
    CHECK(in_int(K, vec({-1, -1})));
    CHECK_FALSE(in_int(K, vec({0, -1})));
    CHECK(in_int(K, vecq({"-1/2", "-1/2"})));
}

TEST_CASE("in_k_minus_l examples") {
    const OrderingCone K = orthant2();
    CHECK(in_k_minus_l(K, vec({0, -1})));
    CHECK_FALSE(in_k_minus_l(K, vec({0, 0})));
    CHECK_FALSE(in_k_minus_l(K, vec({1, -5})));
}

TEST_CASE("k_minus_l_pieces match the pointwise membership") {
    const OrderingCone K = orthant2();
    const Region pieces = k_minus_l_pieces(K);
    CHECK(pieces.pieces.size() == 2);
    for (const RatVec& y : grid_points(2, -2, 2, 4))
        CHECK(region_contains(pieces, y) == in_k_minus_l(K, y));

    const OrderingCone single = build_cone(2, {vec({1, 0})});
    const Region sp = k_minus_l_pieces(single);
    CHECK(sp.pieces.size() == 1);
    for (const RatVec& y : grid_points(2, -2, 2, 4))
        CHECK(region_contains(sp, y) == (y[0] < 0));
}

TEST_CASE("quotient_check equals in_k_minus_l") {
    const OrderingCone K = orthant2();
    CHECK(quotient_check(K, vec({0, -1})));
    CHECK_FALSE(quotient_check(K, vec({0, 0})));

    const OrderingCone single = build_cone(2, {vec({1, 0})});
    CHECK(quotient_check(single, vec({-1, 7})));
    CHECK(in_k_minus_l(single, vec({-1, 7})));
    CHECK_FALSE(quotient_check(single, vec({0, 3})));  // the lineality space

    std::mt19937_64 rng(61);
    for (const auto& K2 : {orthant2(), single, build_cone(3, {vec({1, 1, 0}), vec({0, 1, 0})})}) {
        for (int it = 0; it < 120; ++it) {
            RatVec y;
            for (std::size_t i = 0; i < K2.dim; ++i) y.push_back(small_rat(rng));
            CHECK(quotient_check(K2, y) == in_k_minus_l(K2, y));
        }
    }
}

TEST_CASE("translation invariance of the frontier sets") {
    const OrderingCone K = orthant2();
    CHECK(in_k_minus_l(K, add(vec({0, -1}), vec({-1, 0}))));
    CHECK(in_int(K, add(vec({-1, -1}), vec({0, 0}))));

    std::mt19937_64 rng(67);
    std::vector<RatVec> ws, ks;
    for (int it = 0; it < 100; ++it) {
        ws.push_back({small_rat(rng), small_rat(rng)});
        ks.push_back({small_rat(rng, -3, 0), small_rat(rng, -3, 0)});
    }
    CHECK(translation_invariance_check(K, ws, ks));

    const OrderingCone wide = build_cone(3, {vec({1, 0, 0}), vec({1, 1, 0})});
    std::vector<RatVec> ws3, ks3;
    for (int it = 0; it < 100; ++it) {
        ws3.push_back({small_rat(rng), small_rat(rng), small_rat(rng)});
        RatVec k{small_rat(rng), small_rat(rng), small_rat(rng)};
        if (in_cone(wide, k)) ks3.push_back(std::move(k));
    }
    CHECK(translation_invariance_check(wide, ws3, ks3));
}

TEST_CASE("interior membership implies frontier membership") {
    std::mt19937_64 rng(71);
    const OrderingCone K = build_cone(3, {vec({1, 0, 0}), vec({0, 2, 0}), vec({1, 1, 1})});
    for (int it = 0; it < 150; ++it) {
        const RatVec y{small_rat(rng), small_rat(rng), small_rat(rng)};
        if (in_int(K, y)) CHECK(in_k_minus_l(K, y));
    }
}

TEST_CASE("cone minus its strict pieces is the lineality space") {
    for (const auto& K : {orthant2(), build_cone(2, {vec({1, 0})}),
                          build_cone(2, {vec({1, 0}), vec({-1, 0})})}) {
        const Region rest = region_difference(
            Region::single(SemiClosedPolyhedron::from_closed(cone_halfspaces(K))),
            k_minus_l_pieces(K));
        for (const RatVec& y : grid_points(2, -2, 2, 4))
            CHECK(region_contains(rest, y) == K.lineality_space.contains(y));
    }
}

TEST_CASE("interior_system matches in_int and detects empty interiors") {
    const OrderingCone K = orthant2();
    const SemiClosedPolyhedron inner = interior_system(K);
    for (const RatVec& y : grid_points(2, -2, 2, 4))
        CHECK(sc_contains(inner, y) == in_int(K, y));
    CHECK(interior_nonempty(K));
    CHECK_FALSE(interior_nonempty(build_cone(2, {vec({1, 0}), vec({-1, 0})})));
}
