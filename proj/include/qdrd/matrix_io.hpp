#pragma once

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "qdrd/errors.hpp"
#include "qdrd/matrix.hpp"

namespace qdrd {

// Shortest round-trip decimal for a double; all file and CSV output goes
// through this so repeated runs are byte-identical.
inline std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

inline double parse_double(const std::string& s) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw IoError("bad numeric token '" + s + "'");
    return v;
}

// Matrix text format: first line "m n", then m lines of n "re:im" tokens.
// Vectors are m x 1 matrices.

inline std::string format_complex(Complex z) {
    return format_double(z.real()) + ":" + format_double(z.imag());
}

inline Complex parse_complex(const std::string& token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= token.size())
        throw IoError("bad complex token '" + token + "' (expected re:im)");
    return {parse_double(token.substr(0, colon)), parse_double(token.substr(colon + 1))};
}

inline void write_matrix(std::ostream& os, const Matrix& a) {
    os << a.rows() << " " << a.cols() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << " ";
            os << format_complex(a(i, j));
        }
        os << "\n";
    }
}

inline Matrix read_matrix(std::istream& is) {
    long long m = 0, n = 0;
    if (!(is >> m >> n)) throw IoError("matrix header: expected 'm n'");
    if (m <= 0 || n <= 0) throw IoError("matrix header: dimensions must be positive");
    Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok))
                throw IoError("matrix body: expected " + std::to_string(m * n) + " entries");
            a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_complex(tok);
        }
    return a;
}

inline void write_matrix_file(const std::string& path, const Matrix& a) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_matrix(f, a);
    if (!f) throw IoError("write failed for '" + path + "'");
}

inline Matrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open '" + path + "'");
    try {
        return read_matrix(f);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

inline Vector as_vector(const Matrix& a) {
    if (a.cols() != 1)
        throw IoError("expected a column vector (m x 1), got " + dim_str(a.rows(), a.cols()));
    Vector v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, 0);
    return v;
}

inline Matrix as_column(const Vector& v) {
    Matrix a(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) a(i, 0) = v[i];
    return a;
}

inline Vector read_vector_file(const std::string& path) { return as_vector(read_matrix_file(path)); }

} // namespace qdrd
