#pragma once

#include <string>
#include <vector>

namespace genmat {

// Letters are 1-based generator indices; the empty word denotes the unit.
using Word = std::vector<int>;

// Length first, then lexicographic on letters.
bool graded_lex_less(const Word& a, const Word& b);

// All words over {1..m} of length <= max_len, empty word first, graded lex order.
std::vector<Word> words_up_to(int m, int max_len);

// Lexicographically least rotation (Booth's algorithm).
Word min_rotation(const Word& w);

// Cyclic classes of nonempty words of length <= max_len over {1..m}, each as
// its least rotation, ordered by length then lexicographically.
std::vector<Word> necklaces_up_to(int m, int max_len);

// Compact display form: letters concatenated when all are single digits,
// dot-separated otherwise; "e" for the empty word.
std::string word_key(const Word& w);

}  // namespace genmat
