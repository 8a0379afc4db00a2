#include <doctest.h>

#include <cmath>
#include <random>

#include "meshrdh/error.hpp"
#include "meshrdh/metrics.hpp"
#include "test_support.hpp"

using namespace meshrdh;

namespace {
std::vector<Vec3> random_points(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    std::vector<Vec3> pts(n);
    for (auto& p : pts) p = {d(rng), d(rng), d(rng)};
    return pts;
}
}  // namespace

TEST_CASE("directed Hausdorff basics") {
    const std::vector<Vec3> origin{{0, 0, 0}};
    const std::vector<Vec3> far{{3, 4, 0}};
    CHECK(directed_hausdorff(origin, far) == 5.0);
    CHECK(directed_hausdorff(far, far) == 0.0);
    CHECK_THROWS_AS(directed_hausdorff(std::vector<Vec3>{}, far), EmptySet);
    CHECK_THROWS_AS(directed_hausdorff(far, std::vector<Vec3>{}), EmptySet);

    // Not symmetric in general.
    const std::vector<Vec3> two{{0, 0, 0}, {10, 0, 0}};
    CHECK(directed_hausdorff(origin, two) == 0.0);
    CHECK(directed_hausdorff(two, origin) == 10.0);
    CHECK(hausdorff(origin, two) == 10.0);
}

TEST_CASE("directed Hausdorff equals the double-loop oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_points(rng, 1 + rng() % 20);
        const auto b = random_points(rng, 1 + rng() % 20);
        CHECK(std::abs(directed_hausdorff(a, b) - testing::oracle_directed_hausdorff(a, b)) <= 1e-12);
    }
}

TEST_CASE("property: symmetric Hausdorff is a pseudometric") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_points(rng, 1 + rng() % 15);
        const auto b = random_points(rng, 1 + rng() % 15);
        const auto c = random_points(rng, 1 + rng() % 15);
        const double ab = hausdorff(a, b), ba = hausdorff(b, a);
        CHECK(ab >= 0.0);
        CHECK(ab == ba);
        CHECK(hausdorff(a, a) == 0.0);
        CHECK(hausdorff(a, c) <= ab + hausdorff(b, c) + 1e-12);
    }
}

TEST_CASE("SNR on a hand-built two-vertex case") {
    FloatMesh a, b;
    a.vertices = {{0, 0, 0}, {2, 0, 0}};
    b.vertices = {{0.1, 0, 0}, {2, 0.2, 0}};
    // mean (1,0,0): signal = 1 + 1 = 2; noise = 0.01 + 0.04 = 0.05.
    CHECK(snr(a, b) == doctest::Approx(10.0 * std::log10(2.0 / 0.05)).epsilon(1e-12));
    CHECK(snr(a, a) == kInfiniteSnr);

    FloatMesh c;
    c.vertices = {{0, 0, 0}};
    CHECK_THROWS_AS(snr(a, c), VertexCountMismatch);
}

TEST_CASE("SNR is invariant under a shared translation") {
    std::mt19937_64 rng(29);
    FloatMesh a, b;
    a.vertices = random_points(rng, 50);
    b.vertices = a.vertices;
    std::normal_distribution<double> noise(0.0, 0.01);
    for (auto& v : b.vertices)
        for (auto& c : v) c += noise(rng);
    FloatMesh at = a, bt = b;
    for (auto* m : {&at, &bt})
        for (auto& v : m->vertices) {
            v[0] += 123.0;
            v[1] -= 45.5;
            v[2] += 0.25;
        }
    CHECK(snr(at, bt) == doctest::Approx(snr(a, b)).epsilon(1e-6));
}

TEST_CASE("embedding rate accounting") {
    // 10744 vertices is what 25.31 bpv implies for this capacity and label cost.
    const auto cow = embedding_rate(278784, 6851, 10744);
    CHECK(cow.gross == doctest::Approx(278784.0 / 10744));
    CHECK(cow.net == doctest::Approx((278784.0 - 6851.0) / 10744));
    CHECK(cow.net == doctest::Approx(25.31).epsilon(1e-3));

    const auto no_labels = embedding_rate(1000, 0, 10);
    CHECK(no_labels.net == no_labels.gross);
    const auto nothing = embedding_rate(0, 0, 10);
    CHECK(nothing.gross == 0.0);
    CHECK(nothing.net == 0.0);
    CHECK(embedding_rate(10, 50, 10).net == 0.0);
    CHECK_THROWS_AS(embedding_rate(1, 0, 0), EmptySet);
}

TEST_CASE("quality report CSV row") {
    FloatMesh a, b;
    a.vertices = {{0, 0, 0}, {2, 0, 0}};
    b = a;
    const auto r = quality_report(a, b, 40, 10);
    CHECK(r.hausdorff_sym == 0.0);
    CHECK(r.er_net <= r.er_gross);
    CHECK(QualityReport::csv_header() == "directed_hausdorff_ab,directed_hausdorff_ba,hausdorff_sym,snr_db,er_gross,er_net");
    CHECK(r.to_csv_row() == "0,0,0,inf,20,15");
}
