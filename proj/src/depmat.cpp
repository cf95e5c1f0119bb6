#include "olines/depmat.hpp"

#include "olines/io.hpp"

#include <numeric>
#include <sstream>

namespace olines {

namespace {

std::string compact(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

}  // namespace

std::string dump_dependency_matrix(const DependencyMatrix<Cyclotomic>& a) {
    unsigned order = 1;
    for (const auto& row : a.rows) {
        for (const auto& x : row.coeffs) order = std::lcm(order, x.order());
    }
    std::ostringstream out;
    out << a.m() << ' ' << a.n << '\n';
    if (4 % order != 0) out << "field " << order << '\n';
    for (const auto& row : a.rows) {
        out << row.support[0] << ' ' << row.support[1] << ' ' << row.support[2];
        for (const auto& x : row.coeffs) out << "  " << compact(format_literal(x, order));
        out << '\n';
    }
    return out.str();
}

DependencyMatrix<Cyclotomic> parse_dependency_dump(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next()) throw ParseError(1, 1, "empty dependency dump");
    std::size_t m = 0;
    DependencyMatrix<Cyclotomic> a;
    {
        std::istringstream hdr(line);
        if (!(hdr >> m >> a.n)) throw ParseError(line_no, 1, "expected header 'm n'");
    }
    unsigned field = 0;
    bool pending = next();
    if (pending && line.rfind("field", 0) == 0) {
        std::istringstream f(line.substr(5));
        if (!(f >> field) || field == 0) throw ParseError(line_no, 7, "bad field order");
        pending = next();
    }
    while (pending) {
        std::istringstream row_in(line);
        DependencyRow<Cyclotomic> row;
        for (auto& c : row.support) {
            if (!(row_in >> c) || c >= a.n) throw ParseError(line_no, 1, "bad column index");
        }
        for (auto& x : row.coeffs) {
            std::string tok;
            if (!(row_in >> tok)) throw ParseError(line_no, line.size() + 1, "missing coefficient");
            x = parse_literal(tok, field, line_no, line.find(tok));
        }
        a.rows.push_back(std::move(row));
        pending = next();
    }
    if (a.rows.size() != m) throw ParseError(line_no, 1, "row count does not match header");
    return a;
}

}  // namespace olines
