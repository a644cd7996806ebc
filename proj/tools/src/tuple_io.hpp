#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <genmat/matrix.hpp>

#include "json.hpp"

namespace genmat::cli {

using Json = nlohmann::ordered_json;

// Unreadable or structurally malformed input files. Reported to the user the
// same way as a malformed expression.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scalars travel as integers or "p/q" strings in files, and always as strings
// on the way out, so values survive any JSON round trip exactly.
Rational scalar_from_json(const Json& v);

// Tuple file: {"n": .., "m": .., "matrices": m arrays of n rows of n scalars}.
MatrixTuple tuple_from_json(const Json& j);
Json tuple_to_json(const MatrixTuple& a);

Json matrix_to_json(const Matrix& a);

// Tuple-list file: {"n": .., "m": .., "tuples": [matrices, ...]}; a plain
// tuple file is accepted as a list of one. The ambient n, m stay meaningful
// when the list is empty.
struct TupleList {
    int n = 0;
    int m = 0;
    std::vector<MatrixTuple> tuples;
};
TupleList tuple_list_from_json(const Json& j);

Json read_json_file(const std::string& path);
MatrixTuple read_tuple_file(const std::string& path);
TupleList read_tuple_list_file(const std::string& path);

}  // namespace genmat::cli
