#include "genmat/word.hpp"

#include <algorithm>
#include <functional>

#include "genmat/errors.hpp"

namespace genmat {

bool graded_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Word> words_up_to(int m, int max_len) {
    if (m <= 0) throw PreconditionError("alphabet size must be positive");
    if (max_len < 0) throw PreconditionError("length bound must be nonnegative");
    std::vector<Word> out;
    out.emplace_back();
    for (int len = 1; len <= max_len; ++len) {
        Word w(static_cast<std::size_t>(len), 1);
        while (true) {
            out.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == m) {
                w[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

Word min_rotation(const Word& w) {
    const int len = static_cast<int>(w.size());
    if (len <= 1) return w;
    // Booth's least-rotation index via the failure function on the doubled word.
    std::vector<int> f(static_cast<std::size_t>(2 * len), -1);
    int k = 0;
    auto at = [&](int idx) { return w[static_cast<std::size_t>(idx % len)]; };
    for (int j = 1; j < 2 * len; ++j) {
        int i = f[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && at(j) != at(k + i + 1)) {
            if (at(j) < at(k + i + 1)) k = j - i - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (at(j) != at(k + i + 1)) {
            if (at(j) < at(k)) k = j;
            f[static_cast<std::size_t>(j - k)] = -1;
        } else {
            f[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    Word out;
    out.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) out.push_back(at(k + t));
    return out;
}

std::vector<Word> necklaces_up_to(int m, int max_len) {
    if (m <= 0) throw PreconditionError("alphabet size must be positive");
    if (max_len < 1) throw PreconditionError("length bound must be at least 1");
    std::vector<Word> out;
    // Fredricksen-Kierstead-Maiorana generation: emits, in lexicographic
    // order, exactly the least rotations of the length-len cyclic classes.
    for (int len = 1; len <= max_len; ++len) {
        Word a(static_cast<std::size_t>(len) + 1, 1);
        std::function<void(int, int)> gen = [&](int t, int p) {
            if (t > len) {
                if (len % p == 0)
                    out.emplace_back(a.begin() + 1, a.end());
                return;
            }
            a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
            gen(t + 1, p);
            for (int c = a[static_cast<std::size_t>(t - p)] + 1; c <= m; ++c) {
                a[static_cast<std::size_t>(t)] = c;
                gen(t + 1, t);
            }
        };
        gen(1, 1);
    }
    return out;
}

std::string word_key(const Word& w) {
    if (w.empty()) return "e";
    bool digits = std::all_of(w.begin(), w.end(), [](int c) { return c <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !digits) out += '.';
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace genmat
