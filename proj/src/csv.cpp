#include "aelab/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace aelab {

int CsvTable::col(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    CsvTable t;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            t.header = split_row(line);
            continue;
        }
        if (line.empty()) continue;
        auto cells = split_row(line);
        if (cells.size() != t.header.size())
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(t.header.size()) + " cells, got " +
                             std::to_string(cells.size()));
        t.rows.push_back(std::move(cells));
        t.lines.push_back(lineno);
    }
    if (t.header.empty()) throw ParseError(path + ": empty file");
    return t;
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_num(const std::string& s, const std::string& context, long line) {
    if (s.empty()) throw ParseError(context + ":" + std::to_string(line) + ": empty numeric cell");
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size())
        throw ParseError(context + ":" + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), path_(path) {
    if (!out_) throw std::runtime_error("cannot write '" + path + "'");
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::cell(const std::string& s) {
    if (row_open_) out_ << ',';
    out_ << s;
    row_open_ = true;
}

void CsvWriter::end_row() {
    out_ << '\n';
    row_open_ = false;
}

CsvWriter::~CsvWriter() {
    out_.flush();
}

}  // namespace aelab
