#pragma once

#include "nnr3/matrix.hpp"
#include "nnr3/quadext.hpp"
#include "nnr3/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace nnr3 {

namespace detail {
inline Rational parse_scalar(const std::string& s, const Rational*) { return Rational::parse(s); }
template <int D>
QuadExt<D> parse_scalar(const std::string& s, const QuadExt<D>*) { return QuadExt<D>::parse(s); }
}  // namespace detail

// JSON matrix format: {"rows": r, "cols": c, "entries": [[...], ...]} with
// entries as exact scalar strings ("p/q" or "p/q+p/q*sqrt(d)").
template <class K>
nlohmann::json matrix_to_json(const Matrix<K>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class K>
Matrix<K> matrix_from_json(const nlohmann::json& j) {
    std::size_t r = j.at("rows").get<std::size_t>();
    std::size_t c = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != r) throw std::invalid_argument("matrix_from_json: row count mismatch");
    Matrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (entries[i].size() != c) throw std::invalid_argument("matrix_from_json: col count mismatch");
        for (std::size_t jj = 0; jj < c; ++jj)
            m(i, jj) = detail::parse_scalar(entries[i][jj].get<std::string>(), static_cast<const K*>(nullptr));
    }
    return m;
}

// Whether any entry of a JSON matrix uses a quadratic irrationality.
inline bool matrix_json_has_sqrt(const nlohmann::json& j) {
    for (const auto& row : j.at("entries"))
        for (const auto& e : row)
            if (e.get<std::string>().find("sqrt") != std::string::npos) return true;
    return false;
}

// CSV of rational strings "p/q", one matrix row per line.
inline Matrix<Rational> matrix_from_csv(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(Rational::parse(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix_from_csv: empty input");
    Matrix<Rational> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("matrix_from_csv: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline void matrix_to_csv(const Matrix<Rational>& m, std::ostream& out) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j).str();
        }
        out << '\n';
    }
}

}  // namespace nnr3
