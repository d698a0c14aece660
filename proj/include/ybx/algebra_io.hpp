#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "matrix.hpp"

namespace ybx {

using Json = nlohmann::json;

// File formats are exact from the first byte: scalars are strings ("3",
// "-1/2") or JSON integers, and anything float-like is rejected so no
// rounding can sneak in at the boundary.

inline FieldDescriptor field_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldDescriptor::rationals();
        throw std::invalid_argument("field: expected \"Q\" or {\"gf\": p}, got \"" +
                                    j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.contains("gf") && j["gf"].is_number_integer())
        return FieldDescriptor::prime_field(j["gf"].get<std::int64_t>());
    throw std::invalid_argument("field: expected \"Q\" or {\"gf\": p}");
}

inline Json field_to_json(const FieldDescriptor& fd) {
    if (fd.is_rational()) return Json("Q");
    return Json{{"gf", fd.modulus()}};
}

inline Scalar scalar_from_json(const FieldDescriptor& fd, const Json& j, const std::string& where) {
    if (j.is_string()) return parse_scalar(fd, j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return Scalar::from_int(fd, j.get<long long>());
    if (j.is_number_float())
        throw std::invalid_argument(where + ": floats are not accepted; use exact strings");
    throw std::invalid_argument(where + ": expected an integer or a scalar string");
}

inline FiniteAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("algebra document must be an object");
    for (const char* key : {"dimension", "field", "basis", "table"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("algebra document lacks \"") + key + "\"");

    if (!j["dimension"].is_number_integer() || j["dimension"].get<std::int64_t>() < 1)
        throw std::invalid_argument("dimension must be a positive integer");
    std::size_t n = j["dimension"].get<std::size_t>();
    FieldDescriptor fd = field_from_json(j["field"]);

    if (!j["basis"].is_array() || j["basis"].size() != n)
        throw std::invalid_argument("basis must list exactly " + std::to_string(n) + " labels");
    std::vector<std::string> labels;
    for (const Json& b : j["basis"]) {
        if (!b.is_string()) throw std::invalid_argument("basis labels must be strings");
        labels.push_back(b.get<std::string>());
    }

    const Json& tbl = j["table"];
    if (!tbl.is_array() || tbl.size() != n)
        throw std::invalid_argument("table must be a " + std::to_string(n) + "^3 array");
    std::vector<Scalar> c;
    c.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!tbl[i].is_array() || tbl[i].size() != n)
            throw std::invalid_argument("table row " + std::to_string(i) + " must have " +
                                        std::to_string(n) + " entries");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const Json& cell = tbl[i][jj];
            if (!cell.is_array() || cell.size() != n)
                throw std::invalid_argument("table cell (" + std::to_string(i) + "," +
                                            std::to_string(jj) + ") must have " +
                                            std::to_string(n) + " coordinates");
            for (std::size_t k = 0; k < n; ++k)
                c.push_back(scalar_from_json(fd, cell[k],
                                             "table[" + std::to_string(i) + "][" +
                                                 std::to_string(jj) + "][" + std::to_string(k) +
                                                 "]"));
        }
    }

    std::optional<Element> unit;
    if (j.contains("unit")) {
        if (!j["unit"].is_array() || j["unit"].size() != n)
            throw std::invalid_argument("unit must list " + std::to_string(n) + " coordinates");
        Element u;
        for (std::size_t i = 0; i < n; ++i)
            u.push_back(scalar_from_json(fd, j["unit"][i], "unit[" + std::to_string(i) + "]"));
        unit = std::move(u);
    }

    std::optional<std::vector<int>> grading;
    if (j.contains("grading")) {
        if (!j["grading"].is_array() || j["grading"].size() != n)
            throw std::invalid_argument("grading must list " + std::to_string(n) + " parities");
        std::vector<int> g;
        for (const Json& e : j["grading"]) {
            if (!e.is_number_integer())
                throw std::invalid_argument("grading entries must be integers 0 or 1");
            g.push_back(e.get<int>());
        }
        grading = std::move(g);
    }

    // constructor re-validates unit and grading homogeneity
    return FiniteAlgebra(n, fd, std::move(c), std::move(labels), std::move(unit),
                         std::move(grading));
}

inline Json algebra_to_json(const FiniteAlgebra& a) {
    Json j;
    j["dimension"] = a.dim();
    j["field"] = field_to_json(a.field());
    j["basis"] = a.labels();
    Json tbl = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < a.dim(); ++jj) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k)
                cell.push_back(a.structure_constant(i, jj, k).str());
            row.push_back(std::move(cell));
        }
        tbl.push_back(std::move(row));
    }
    j["table"] = std::move(tbl);
    if (a.unit()) {
        Json u = Json::array();
        for (const Scalar& s : *a.unit()) u.push_back(s.str());
        j["unit"] = std::move(u);
    }
    if (a.grading()) j["grading"] = *a.grading();
    return j;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        throw std::invalid_argument("matrix document needs \"field\" and \"rows\"");
    FieldDescriptor fd = field_from_json(j["field"]);
    const Json& rows = j["rows"];
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix rows must be a nonempty array");
    std::size_t nc = 0;
    for (const Json& r : rows) {
        if (!r.is_array() || r.empty())
            throw std::invalid_argument("matrix rows must be nonempty arrays");
        if (nc == 0)
            nc = r.size();
        else if (r.size() != nc)
            throw std::invalid_argument("matrix rows have inconsistent lengths");
    }
    Matrix m(rows.size(), nc, fd);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t jj = 0; jj < nc; ++jj)
            m.set(i, jj, scalar_from_json(fd, rows[i][jj],
                                          "rows[" + std::to_string(i) + "][" +
                                              std::to_string(jj) + "]"));
    return m;
}

inline Json matrix_to_json(const Matrix& m) {
    Json j;
    j["field"] = field_to_json(m.field());
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(origin + ": not valid JSON");
    return j;
}

inline FiniteAlgebra load_algebra_file(const std::string& path) {
    return algebra_from_json(parse_json_text(read_file(path), path));
}

inline Matrix load_matrix_file(const std::string& path) {
    return matrix_from_json(parse_json_text(read_file(path), path));
}

// FNV-1a 64-bit content digest, used to tie a report to its input bytes.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    static const char* hexd = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hexd[h & 0xF];
        h >>= 4;
    }
    return out;
}

}  // namespace ybx
