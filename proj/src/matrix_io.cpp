#include "projdist/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "projdist/errors.hpp"

namespace projdist {

namespace {

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(path + ": " + err.what());
    }

    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix"))
        throw ParseError(path + ": expected an object with \"dim\" and \"matrix\"");
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
        throw ParseError(path + ": \"dim\" must be a positive integer");
    const std::size_t n = doc["dim"].get<std::size_t>();

    const auto& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != n)
        throw ParseError(path + ": \"matrix\" must be an array of " + std::to_string(n) + " rows");

    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(path + ": row " + std::to_string(i) + " must hold " +
                             std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& entry = row[j];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw ParseError(path + ": entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") must be [re, im]");
            const double re = entry[0].get<double>();
            const double im = entry[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw ParseError(path + ": entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") is not finite");
            m(i, j) = Complex{re, im};
        }
    }
    return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    std::ostringstream out;
    out << "{\"dim\": " << m.rows() << ", \"matrix\": [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "" : ", ") << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex v = m(i, j);
            out << (j == 0 ? "" : ", ") << "[" << full_precision(v.real()) << ", "
                << full_precision(v.imag()) << "]";
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionMismatch("matrix files hold square matrices of positive dimension");
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << matrix_to_json(m) << "\n";
}

} // namespace projdist
