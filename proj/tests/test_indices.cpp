#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zb/indices.hpp"

using namespace zb;

TEST_CASE("weights, parities, admissibility") {
    Index k{3, 4, 5};
    CHECK(k.weight() == 12);
    CHECK(k.odd_parity());  // (3-1)+(4-1)+(5-1) = 9
    CHECK(k.block_admissible());
    CHECK(k.mzv_admissible());
    CHECK(Index{1, 2}.mzv_admissible());
    CHECK_FALSE(Index{1, 2}.block_admissible());
    CHECK(Index{}.block_admissible());
    CHECK_FALSE(Index{2, 1}.mzv_admissible());
}

TEST_CASE("mzv integration words") {
    auto [w2, s2] = mzv_word(Index{2});
    CHECK(w2 == Word01{1, 0});
    CHECK(s2 == -1);
    auto [w12, s12] = mzv_word(Index{1, 2});
    CHECK(w12 == Word01{1, 1, 0});
    CHECK(s12 == 1);
    auto [w3, s3] = mzv_word(Index{3});
    CHECK(w3 == Word01{1, 0, 0});
    CHECK(s3 == -1);
    CHECK_THROWS(mzv_word(Index{}));
    CHECK(word_to_mzv_index(w12) == Index{1, 2});
}

TEST_CASE("duality") {
    CHECK(dual_index(Index{3}) == Index{1, 2});
    CHECK(dual_index(Index{2}) == Index{2});
    CHECK(dual_index(Index{1, 1, 2}) == Index{4});
    CHECK_THROWS(dual_index(Index{2, 1}));
    // involution on all admissible indices of weight <= 9
    for (int w = 2; w <= 9; ++w)
        for (const auto& k : compositions(w))
            if (k.mzv_admissible() && !k.empty()) CHECK(dual_index(dual_index(k)) == k);
}

TEST_CASE("block decomposition") {
    CHECK(block_decompose(Word01{0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1}) == Index{3, 4, 5});
    CHECK(block_decompose(Word01{0, 1}) == Index{2});
    CHECK(block_decompose(Word01{0, 0, 1}) == Index{1, 2});
    CHECK_THROWS(block_decompose(Word01{1, 0}));
    CHECK_THROWS(block_decompose(Word01{0}));
}

TEST_CASE("Z notation") {
    auto [i1, s1] = z_to_block({0, 0, 0});
    CHECK(i1 == Index{2, 2, 2});
    CHECK(s1 == 1);
    auto [i2, s2] = z_to_block({1});
    CHECK(i2 == Index{4});
    CHECK(s2 == -1);
    auto [i3, s3] = z_to_block({1, 0, 2});
    CHECK(i3 == Index{4, 2, 6});
    CHECK(s3 == -1);
    CHECK_THROWS(z_to_block({1, 0}));
}

TEST_CASE("index text grammar") {
    CHECK(parse_index("[1,3]") == Index{1, 3});
    CHECK(parse_index("[]") == Index{});
    CHECK(parse_index(" [2, 10] ") == Index{2, 10});
    CHECK_FALSE(parse_index("[0]").has_value());
    CHECK_FALSE(parse_index("2,3").has_value());
    CHECK(to_string(Index{1, 3}) == "[1,3]");
    CHECK(parse_word01("0110") == Word01{0, 1, 1, 0});
    CHECK_FALSE(parse_word01("012").has_value());
}

TEST_CASE("enumerations") {
    CHECK(compositions(4).size() == 8);
    CHECK(hoffman_indices(6).size() == 2);   // (2,2,2), (3,3)
    CHECK(hoffman_indices(7).size() == 3);
    CHECK(quasi_hoffman_indices(6).size() == 1);  // (6)
    auto q8 = quasi_hoffman_indices(8);
    CHECK(q8.size() == 4);  // (8),(2,3,3),(3,2,3),(3,3,2)
}
