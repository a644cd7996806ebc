#include "tuple_io.hpp"

#include <fstream>

#include <genmat/rational.hpp>

namespace genmat::cli {

namespace {

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw FileError(std::string("tuple file needs an integer field \"") + key +
                        "\"");
    return j[key].get<int>();
}

Matrix matrix_from_json(const Json& rows, int n) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw FileError("matrix must have exactly n rows");
    std::vector<std::vector<Rational>> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw FileError("matrix row must have exactly n entries");
        std::vector<Rational> out;
        for (const auto& v : row) out.push_back(scalar_from_json(v));
        entries.push_back(std::move(out));
    }
    return Matrix::from_rows(entries);
}

MatrixTuple tuple_from_matrices_json(const Json& ms, int n, int m) {
    if (!ms.is_array() || static_cast<int>(ms.size()) != m)
        throw FileError("\"matrices\" must hold exactly m matrices");
    std::vector<Matrix> matrices;
    for (const auto& rows : ms) matrices.push_back(matrix_from_json(rows, n));
    if (matrices.empty()) throw FileError("a tuple needs at least one matrix");
    return MatrixTuple(std::move(matrices));
}

}  // namespace

Rational scalar_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw FileError("scalar entries must be integers or \"p/q\" strings");
}

MatrixTuple tuple_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const int m = int_field(j, "m");
    if (n < 1 || m < 1) throw FileError("n and m must be positive");
    if (!j.contains("matrices"))
        throw FileError("tuple file needs a \"matrices\" field");
    return tuple_from_matrices_json(j["matrices"], n, m);
}

Json matrix_to_json(const Matrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.side(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.side(); ++j) row.push_back(to_string(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json tuple_to_json(const MatrixTuple& a) {
    Json j;
    j["n"] = a.side();
    j["m"] = a.arity();
    Json ms = Json::array();
    for (const auto& mat : a.matrices) ms.push_back(matrix_to_json(mat));
    j["matrices"] = std::move(ms);
    return j;
}

TupleList tuple_list_from_json(const Json& j) {
    TupleList out;
    out.n = int_field(j, "n");
    out.m = int_field(j, "m");
    if (out.n < 1 || out.m < 1) throw FileError("n and m must be positive");
    if (j.contains("matrices")) {
        out.tuples.push_back(tuple_from_json(j));
        return out;
    }
    if (!j.contains("tuples") || !j["tuples"].is_array())
        throw FileError("tuple list file needs a \"tuples\" array");
    for (const auto& ms : j["tuples"])
        out.tuples.push_back(tuple_from_matrices_json(ms, out.n, out.m));
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FileError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

MatrixTuple read_tuple_file(const std::string& path) {
    return tuple_from_json(read_json_file(path));
}

TupleList read_tuple_list_file(const std::string& path) {
    return tuple_list_from_json(read_json_file(path));
}

}  // namespace genmat::cli
