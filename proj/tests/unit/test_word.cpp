#include <algorithm>
#include <set>

#include <genmat/word.hpp>

#include "doctest.h"

using namespace genmat;

namespace {

Word rotated(const Word& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(w[(i + k) % w.size()]);
    return out;
}

Word brute_min_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k)
        best = std::min(best, rotated(w, k));
    return best;
}

}  // namespace

TEST_CASE("graded lex orders by length then letters") {
    CHECK(graded_lex_less({}, {1}));
    CHECK(graded_lex_less({2}, {1, 1}));
    CHECK(graded_lex_less({1, 2}, {2, 1}));
    CHECK_FALSE(graded_lex_less({1, 2}, {1, 2}));
    CHECK_FALSE(graded_lex_less({1, 1}, {2}));
}

TEST_CASE("words_up_to enumerates in graded lex order with the empty word") {
    const auto words = words_up_to(2, 2);
    const std::vector<Word> expected = {{}, {1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(words == expected);
    CHECK(words_up_to(3, 3).size() == 1 + 3 + 9 + 27);
    CHECK(words_up_to(1, 4).size() == 5);
}

TEST_CASE("min_rotation agrees with brute force") {
    for (int len = 1; len <= 6; ++len) {
        // All words over {1,2,3} of this length.
        Word w(static_cast<std::size_t>(len), 1);
        for (;;) {
            CHECK(min_rotation(w) == brute_min_rotation(w));
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == 3) {
                w[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
}

TEST_CASE("necklace counts match the cyclic-class census") {
    CHECK(necklaces_up_to(2, 2).size() == 5);   // 1,2,11,12,22
    CHECK(necklaces_up_to(2, 3).size() == 9);   // + 111,112,122,222
    CHECK(necklaces_up_to(1, 5).size() == 5);
    // Burnside count for binary necklaces of length exactly 4 is 6.
    CHECK(necklaces_up_to(2, 4).size() == 9 + 6);
}

TEST_CASE("necklaces are canonical, sorted, and complete") {
    const int m = 3, max_len = 4;
    const auto necklaces = necklaces_up_to(m, max_len);
    for (std::size_t i = 0; i < necklaces.size(); ++i) {
        CHECK(necklaces[i] == min_rotation(necklaces[i]));
        if (i > 0) CHECK(graded_lex_less(necklaces[i - 1], necklaces[i]));
    }
    std::set<Word> canonical(necklaces.begin(), necklaces.end());
    CHECK(canonical.size() == necklaces.size());
    for (const auto& w : words_up_to(m, max_len)) {
        if (w.empty()) continue;
        CHECK(canonical.count(min_rotation(w)) == 1);
    }
}

TEST_CASE("word_key is compact for small alphabets and unambiguous beyond") {
    CHECK(word_key({}) == "e");
    CHECK(word_key({1, 2, 1}) == "121");
    CHECK(word_key({1, 12}) == "1.12");
}
