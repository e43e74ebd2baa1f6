#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "aelab/dates.hpp"

namespace aelab {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based file line of each data row, for error reporting.
    std::vector<long> lines;

    int col(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);

/// Numbers are serialized with 12 significant digits everywhere.
std::string fmt_num(double v);

double parse_num(const std::string& s, const std::string& context, long line);

/// Row-oriented CSV writer; all numeric cells go through fmt_num.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void cell(const std::string& s);
    void cell(double v) { cell(fmt_num(v)); }
    void cell(long v) { cell(std::to_string(v)); }
    void cell(int v) { cell(std::to_string(v)); }
    void end_row();
    ~CsvWriter();

private:
    std::ofstream out_;
    std::string path_;
    bool row_open_ = false;
};

}  // namespace aelab
