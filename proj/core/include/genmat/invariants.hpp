#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genmat/matrix.hpp"
#include "genmat/rational.hpp"
#include "genmat/word.hpp"

namespace genmat {

// Cyclic word classes over {1..m} of length 1..max_len, each as its least
// rotation, ordered by length then lexicographically.
std::vector<Word> enumerate_necklaces(int m, int max_len);

// The conjugation-invariant coordinates tr(w(a)) over every necklace up to
// max_len; equal tuples up to simultaneous conjugation have equal fingerprints.
struct Fingerprint {
    int n = 0;
    int m = 0;
    int max_len = 0;
    std::vector<std::pair<Word, Rational>> values;

    // Stable record: one header line, then one "necklace=value" line per entry.
    std::string to_text() const;
    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const MatrixTuple& a, int max_len);

enum class Separation { Distinct, Indistinguishable };

// Distinct proves the tuples are not conjugate. Indistinguishable is only a
// screen: it does not certify conjugacy at any finite max_len.
Separation separated_by_fingerprint(const MatrixTuple& a, const MatrixTuple& b,
                                    int max_len);

// Friedland's invariant for a pair of 2x2 matrices; nonzero exactly when the
// pair generates the full matrix algebra.
Rational friedland(const MatrixTuple& a);

}  // namespace genmat
