#include "eislat/textio.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eislat {

EVec parse_row(const std::string& line) {
    std::istringstream ss(line);
    EVec v;
    std::string tok;
    while (ss >> tok) v.push_back(parse_eint(tok));
    return v;
}

std::vector<EVec> read_rows(std::istream& in) {
    std::vector<EVec> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        rows.push_back(parse_row(line));
        if (rows.back().size() != rows.front().size())
            throw std::invalid_argument("ragged matrix: row " + std::to_string(rows.size()));
    }
    return rows;
}

std::vector<EVec> read_rows_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_rows(f);
}

std::string format_row(const EVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

void write_rows(std::ostream& out, const std::vector<EVec>& rows) {
    for (const auto& r : rows) out << format_row(r) << '\n';
}

std::string data_dir() {
    if (const char* e = std::getenv("EISLAT_DATA"); e && *e) return e;
#ifdef EISLAT_DATA_DIR
    return EISLAT_DATA_DIR;
#else
    return "data";
#endif
}

std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

}  // namespace eislat
