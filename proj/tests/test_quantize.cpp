#include <doctest.h>

#include <cmath>
#include <random>

#include "meshrdh/error.hpp"
#include "meshrdh/quantize.hpp"
#include "test_support.hpp"

using namespace meshrdh;

TEST_CASE("bit_length table") {
    CHECK(bit_length(1) == 8);
    CHECK(bit_length(2) == 8);
    CHECK(bit_length(3) == 16);
    CHECK(bit_length(4) == 16);
    CHECK(bit_length(5) == 32);
    CHECK(bit_length(9) == 32);
    CHECK(bit_length(10) == 64);
    CHECK(bit_length(33) == 64);
    CHECK_THROWS_AS(bit_length(0), OutOfRange);
    CHECK_THROWS_AS(bit_length(34), OutOfRange);
}

namespace {
// Unit box so normalized and world coordinates coincide.
FloatMesh unit_box_with(const Vec3& v) {
    FloatMesh m;
    m.vertices = {{0, 0, 0}, {1, 1, 1}, v};
    return m;
}
}  // namespace

TEST_CASE("quantize evaluates the truncation directly") {
    const auto q = quantize(unit_box_with({0.123456, 0.0, 0.5}), 5);
    CHECK(q.params.bits == 32);
    CHECK(q.coords[2][0] == 12345);
    CHECK(q.coords[2][1] == 0);
    CHECK(q.coords[2][2] == 50000);
    CHECK(q.coords[0] == IntVec3{0, 0, 0});
    CHECK(q.coords[1] == IntVec3{100000, 100000, 100000});
}

TEST_CASE("quantize rejects unsupported u and degenerate meshes") {
    const auto m = unit_box_with({0.5, 0.5, 0.5});
    CHECK_THROWS_AS(quantize(m, 0), OutOfRange);
    CHECK_THROWS_AS(quantize(m, 10), OutOfRange);
    FloatMesh point;
    point.vertices = {{1, 2, 3}, {1, 2, 3}};
    CHECK_THROWS_AS(quantize(point, 5), DegenerateMesh);
}

TEST_CASE("shared extent keeps aspect ratio") {
    FloatMesh m;
    m.vertices = {{10, 20, 30}, {14, 21, 30.5}};
    const auto q = quantize(m, 2);
    CHECK(q.params.bbox.extent == doctest::Approx(4.0));
    CHECK(q.params.bbox.min == Vec3{10, 20, 30});
    CHECK(q.coords[1] == IntVec3{100, 25, 12});
}

TEST_CASE("dequantize maps zero to the box corner and 12345 to 0.12345") {
    IntMesh q;
    q.params = {5, 32, {{0, 0, 0}, 1.0}};
    q.coords = {{12345, 0, 0}};
    CHECK(dequantize(q).vertices[0][0] == doctest::Approx(0.12345).epsilon(1e-15));

    q.params.bbox = {{-3, 4, 5}, 2.5};
    q.coords = {{0, 0, 0}};
    CHECK(dequantize(q).vertices[0] == Vec3{-3, 4, 5});
}

TEST_CASE("property: values fit L bits and the floor error is bounded") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int u = kMinTruncation; u <= kMaxTruncation; ++u) {
        for (int trial = 0; trial < 20; ++trial) {
            FloatMesh m;
            for (int i = 0; i < 40; ++i) m.vertices.push_back({coord(rng), coord(rng), coord(rng)});
            const auto q = quantize(m, u);
            const auto back = dequantize(q);
            const double bound = q.params.bbox.extent * std::pow(10.0, -u);
            const std::uint64_t limit = q.params.bits == 64 ? ~0ull : (1ull << q.params.bits);
            for (std::size_t i = 0; i < m.vertices.size(); ++i) {
                for (int a = 0; a < 3; ++a) {
                    CHECK(q.coords[i][a] < limit);
                    // Tiny slack for the double arithmetic of the inverse map.
                    CHECK(std::abs(back.vertices[i][a] - m.vertices[i][a]) <= bound * (1 + 1e-9));
                }
            }
        }
    }
}

TEST_CASE("raw integer form survives the OFF text encoding") {
    IntMesh q;
    q.params = {9, 32, {{0, 0, 0}, 1.0}};
    q.coords = {{4294967295u, 0, 1}, {1000000000, 999999999, 123456789}};
    const auto back = raw_int_mesh(parse_off(write_off(raw_float_mesh(q), 9)), q.params);
    CHECK(back.coords == q.coords);

    IntMesh too_big = q;
    too_big.params = {2, 8, {{0, 0, 0}, 1.0}};
    too_big.coords = {{256, 0, 0}};
    CHECK_THROWS_AS(raw_int_mesh(raw_float_mesh(too_big), too_big.params), Overflow);
}

TEST_CASE("to_bits / from_bits") {
    const BitVector five{false, false, false, false, false, true, false, true};
    CHECK(to_bits(5, 8) == five);
    CHECK(from_bits(five) == 5);
    CHECK(from_bits(BitVector(8, false)) == 0);
    CHECK(from_bits(BitVector(8, true)) == 255);
    CHECK(to_bits(255, 8) == BitVector(8, true));
    CHECK(to_bits((1ull << 32) - 1, 32) == BitVector(32, true));
    CHECK_THROWS_AS(to_bits(256, 8), Overflow);

    std::mt19937_64 rng(3);
    for (int bits : {8, 16, 32, 64}) {
        for (int i = 0; i < 1000; ++i) {
            std::uint64_t v = rng();
            if (bits < 64) v &= (1ull << bits) - 1;
            const auto b = to_bits(v, bits);
            REQUIRE(b.size() == static_cast<std::size_t>(bits));
            // Bit k (LSB = 0) is floor(v / 2^k) mod 2.
            const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(bits));
            CHECK(b[static_cast<std::size_t>(bits - 1 - k)] == (((v >> k) & 1u) != 0));
            CHECK(from_bits(b) == v);
        }
    }
}
