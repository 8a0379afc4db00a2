#include <doctest.h>

#include <random>

#include "meshrdh/error.hpp"
#include "meshrdh/predictor.hpp"
#include "test_support.hpp"

using namespace meshrdh;

namespace {
std::vector<std::uint8_t> votes(std::initializer_list<int> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("majority_bit with ties going to 1") {
    CHECK(majority_bit(votes({1, 0, 1})) == true);
    CHECK(majority_bit(votes({0, 0, 1})) == false);
    CHECK(majority_bit(votes({1, 1, 0, 0})) == true);
    CHECK(majority_bit(votes({0})) == false);
    CHECK_THROWS_AS(majority_bit(std::vector<std::uint8_t>{}), EmptyPredictors);
    CHECK_THROWS_AS(majority_prediction(std::vector<std::uint64_t>{}, 8), EmptyPredictors);
}

TEST_CASE("first mismatch at the 23rd bit, u = 5, L = 32") {
    const int bits = 32;
    // Four predictors (ordinals 2, 4, 8, 16) that agree on the top 24 bits
    // and disagree below.
    const std::vector<std::uint64_t> preds{0x00012A00u | 0x11, 0x00012A00u | 0x7F, 0x00012A00u | 0x02,
                                           0x00012A00u | 0xC3};
    const auto predicted = majority_prediction(preds, bits);
    const std::uint64_t coord = predicted ^ (1ull << (bits - 23)) ^ 0x5;

    std::vector<BitVector> pred_bits;
    for (auto p : preds) pred_bits.push_back(to_bits(p, bits));
    CHECK(detect_coord_label(to_bits(coord, bits), pred_bits) == 23);
    CHECK(first_mismatch_position(coord, predicted, bits) == 23);
}

TEST_CASE("detect_coord_label edge cases") {
    const std::vector<BitVector> single{to_bits(77, 8)};
    CHECK(detect_coord_label(to_bits(77, 8), single) == 9);
    const std::vector<BitVector> unanimous{to_bits(0x10, 8), to_bits(0x20, 8), to_bits(0x30, 8)};
    CHECK(detect_coord_label(to_bits(0x80, 8), unanimous) == 1);
    CHECK_THROWS_AS(detect_coord_label(to_bits(0, 8), std::vector<BitVector>{}), EmptyPredictors);
}

TEST_CASE("vertex_label and capacity") {
    CHECK(vertex_label(23, 17, 20) == 17);
    CHECK(vertex_label(33, 33, 33) == 33);
    CHECK(vertex_label(70, 65, 66) == 63);
    CHECK(capacity(LabelStream{{0, 0, 0}}) == 0);
    CHECK(capacity(LabelStream{{17}}) == 48);
    CHECK(capacity(LabelStream{{1, 0, 2, 33}}) == 3 + 96);
}

TEST_CASE("replace_msbs evaluates the bit substitution") {
    // L = 8, n = 4: the three MSBs of 00000101 become 101.
    CHECK(replace_msbs(0b00000101, 0b10100000, 8, 3) == 0b10100101);
    CHECK(replace_msbs(0xFFu, 0, 8, 0) == 0xFFu);
    CHECK(replace_msbs(0x0Fu, 0xFFu, 8, 8) == 0xFFu);
    CHECK(replace_msbs(0, ~0ull, 64, 1) == (1ull << 63));
}

TEST_CASE("vertices equal to their predictors get label L+1") {
    IntMesh m;
    m.params = {5, 32, {}};
    m.coords.assign(6, IntVec3{1234, 56789, 99999});
    m.faces = {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}};
    const auto part = partition(6, build_adjacency(6, m.faces), Parity::Odd);
    const auto labels = detect_all(m, part);
    CHECK(labels.labels == std::vector<std::uint8_t>{33, 33, 33});
}

TEST_CASE("detect_all agrees with the exhaustive oracle on random meshes") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + rng() % 47;
        const auto fm = trial % 2 ? testing::random_mesh(rng, n, n) : testing::strip_mesh(rng, n);
        const int u = 2 + static_cast<int>(rng() % 8);
        const auto q = quantize(fm, u);
        for (auto parity : {Parity::Odd, Parity::Even}) {
            const auto part = partition(n, build_adjacency(n, q.faces), parity);
            const auto labels = detect_all(q, part);
            const auto oracle = testing::oracle_labels(q.coords, q.faces, q.params.bits, parity == Parity::Odd);
            REQUIRE(labels.labels.size() == oracle.labels.size());
            for (std::size_t i = 0; i < oracle.labels.size(); ++i) CHECK(labels.labels[i] == oracle.labels[i]);
            CHECK(capacity(labels) == oracle.capacity);
        }
    }
}

TEST_CASE("property: scrambled MSBs are restored by the majority vote") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 10 + rng() % 200;
        const auto q = quantize(testing::strip_mesh(rng, n), 2 + static_cast<int>(rng() % 8));
        const auto part = partition(n, build_adjacency(n, q.faces), Parity::Odd);
        const auto labels = detect_all(q, part);
        const int bits = q.params.bits;

        auto scrambled = q.coords;
        for (std::size_t i = 0; i < part.embedded.size(); ++i) {
            const int nl = labels.labels[i];
            if (nl < 2) continue;
            for (auto& c : scrambled[part.embedded[i]]) c = replace_msbs(c, rng(), bits, nl - 1);
        }
        for (std::size_t i = 0; i < part.embedded.size(); ++i) {
            const int nl = labels.labels[i];
            if (nl < 2) continue;
            auto& coord = scrambled[part.embedded[i]];
            for (int a = 0; a < 3; ++a) {
                std::vector<std::uint64_t> column;
                for (auto p : part.predictors[i]) column.push_back(scrambled[p][a]);
                coord[a] = replace_msbs(coord[a], majority_prediction(column, bits), bits, nl - 1);
            }
        }
        CHECK(scrambled == q.coords);
    }
}
