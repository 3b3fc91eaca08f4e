#include "ucinv/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ucinv {

std::string format_double(double value) {
    char buf[40];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == value) return buf;
    }
    return buf;
}

void write_matrix_csv(std::ostream& out, const Matrix& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j > 0) out << ',';
            out << format_double(a(i, j));
        }
        out << '\n';
    }
}

void write_matrix_csv_file(const std::string& path, const Matrix& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix_csv(out, a);
}

namespace {

double parse_cell(const std::string& cell) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) {
        throw std::invalid_argument("matrix csv: cannot parse value '" + cell + "'");
    }
    return value;
}

}  // namespace

Matrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(parse_cell(cell));
        if (line.back() == ',') throw std::invalid_argument("matrix csv: trailing comma");
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::invalid_argument("matrix csv: ragged rows");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix csv: empty input");
    Matrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return a;
}

Matrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_matrix_csv(in);
}

}  // namespace ucinv
