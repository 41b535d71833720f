#ifndef SNIEP5_TEXT_IO_HPP
#define SNIEP5_TEXT_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "sniep5/rational.hpp"
#include "sniep5/solver.hpp"
#include "sniep5/sym_matrix.hpp"
#include "sniep5/unipoly.hpp"

namespace sniep5 {

/// Comma- or whitespace-separated exact values ("1, 0.35, -0.72" or "7/20").
inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    auto flush = [&] {
        if (!item.empty()) {
            out.push_back(Rational::parse(item));
            item.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
            flush();
        } else {
            item += c;
        }
    }
    flush();
    return out;
}

inline SpectrumList parse_spectrum(const std::string& text) {
    return SpectrumList(parse_rational_list(text));
}

/// Row-major symmetric matrix, 25 entries.
inline ExactMatrix parse_matrix(const std::string& text) {
    std::vector<Rational> v = parse_rational_list(text);
    if (v.size() != 25) throw std::invalid_argument("matrix text must hold 25 entries");
    std::vector<std::vector<Rational>> rows(5, std::vector<Rational>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) rows[i][j] = v[static_cast<size_t>(5 * i + j)];
    return ExactMatrix::from_rows(rows);
}

/// Ascending coefficients "c0,c1,...,cn".
inline UniPoly parse_unipoly(const std::string& text) {
    return UniPoly(parse_rational_list(text));
}

inline std::string matrix_text(const ExactMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) os << (j ? " " : "") << m.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

}  // namespace sniep5

#endif
