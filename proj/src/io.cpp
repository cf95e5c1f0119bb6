#include "olines/io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace olines {

namespace {

class LiteralParser {
public:
    LiteralParser(std::string_view text, unsigned field_order, std::size_t line, std::size_t column_offset)
        : text_(text), field_(field_order), line_(line), offset_(column_offset) {}

    Cyclotomic parse() {
        skip_ws();
        if (at_end()) fail("empty number");
        Cyclotomic value;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Cyclotomic term = parse_term();
            value += sign < 0 ? -term : term;
            skip_ws();
            if (at_end()) break;
        }
        return value;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const { throw ParseError(line_, offset_ + pos_ + 1, why); }

    mpz_class digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail(at_end() ? "expected digits, found end of input"
                                         : std::string("expected digits, found '") + peek() + "'");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Cyclotomic parse_term() {
        if (at_end()) fail("expected a number");
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = digits();
            mpz_class den(1);
            if (!at_end() && peek() == '/') {
                ++pos_;
                den = digits();
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            have_coeff = true;
            skip_ws();
        }
        if (!at_end() && peek() == 'i') {
            ++pos_;
            return Cyclotomic(GaussianRational(Rational(0), coeff));
        }
        if (!at_end() && peek() == 'z') {
            if (field_ == 0) fail("'z' used without a 'field' declaration");
            ++pos_;
            long exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                mpz_class e = digits();
                if (!e.fits_slong_p()) fail("exponent too large");
                exponent = e.get_si();
            }
            return Cyclotomic::zeta(field_, exponent) * Cyclotomic(coeff);
        }
        if (!have_coeff) {
            fail(at_end() ? "expected a number" : std::string("unexpected character '") + peek() + "'");
        }
        return Cyclotomic(coeff);
    }

    std::string_view text_;
    unsigned field_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Cyclotomic parse_literal(std::string_view text, unsigned field_order, std::size_t line, std::size_t column_offset) {
    return LiteralParser(text, field_order, line, column_offset).parse();
}

unsigned field_order_of(const PointConfig& config) {
    unsigned l = 1;
    for (const auto& p : config.points()) {
        for (const auto& c : p) l = std::lcm(l, c.order());
    }
    return l;
}

std::string format_literal(const Cyclotomic& value, unsigned order) {
    if (4 % order == 0) {
        if (auto g = value.as_gaussian()) return to_string(*g);
    }
    return to_string(value, order);
}

PointConfig parse_config(std::string_view text) {
    std::size_t dim = 0;
    unsigned field = 0;
    std::vector<Point<Cyclotomic>> points;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        const std::size_t base = static_cast<std::size_t>(raw.data() - text.data());
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::size_t col0 = static_cast<std::size_t>(line.data() - text.data()) - base;
        auto keyword_value = [&](std::string_view kw) -> std::optional<unsigned long> {
            if (line.substr(0, kw.size()) != kw) return std::nullopt;
            if (line.size() > kw.size() && !std::isspace(static_cast<unsigned char>(line[kw.size()]))) {
                return std::nullopt;
            }
            std::string_view rest = trim(line.substr(kw.size()));
            if (rest.empty()) throw ParseError(line_no, col0 + kw.size() + 1, std::string("missing value for '") + std::string(kw) + "'");
            unsigned long v = 0;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(rest[k]))) {
                    throw ParseError(line_no, col0 + (rest.data() - line.data()) + k + 1,
                                     std::string("expected a positive integer after '") + std::string(kw) + "'");
                }
                v = v * 10 + static_cast<unsigned long>(rest[k] - '0');
                if (v > 1000000) throw ParseError(line_no, col0 + 1, "value too large");
            }
            if (v == 0) throw ParseError(line_no, col0 + 1, std::string("'") + std::string(kw) + "' must be positive");
            return v;
        };
        if (auto d = keyword_value("dim")) {
            if (dim != 0) throw ParseError(line_no, col0 + 1, "duplicate 'dim' header");
            if (!points.empty()) throw ParseError(line_no, col0 + 1, "'dim' must precede the points");
            dim = *d;
            continue;
        }
        if (auto f = keyword_value("field")) {
            if (field != 0) throw ParseError(line_no, col0 + 1, "duplicate 'field' header");
            if (!points.empty()) throw ParseError(line_no, col0 + 1, "'field' must precede the points");
            field = static_cast<unsigned>(*f);
            continue;
        }
        if (dim == 0) throw ParseError(line_no, col0 + 1, "expected 'dim d' header before points");
        std::string_view body = line;
        std::size_t body_col = col0;
        if (body.front() == '(') {
            if (body.back() != ')') throw ParseError(line_no, col0 + line.size(), "missing ')'");
            body = body.substr(1, body.size() - 2);
            body_col += 1;
        }
        Point<Cyclotomic> p;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = body.find(',', pos);
            std::string_view field_text = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            p.push_back(parse_literal(field_text, field, line_no, body_col + pos));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (p.size() != dim) {
            throw ParseError(line_no, col0 + 1,
                             "dimension mismatch: expected " + std::to_string(dim) + " coordinates, found " +
                                 std::to_string(p.size()));
        }
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (points[j] == p) {
                throw ParseError(line_no, col0 + 1, "duplicate point (same as point " + std::to_string(j) + ")");
            }
        }
        points.push_back(std::move(p));
    }
    if (dim == 0) throw ParseError(line_no, 1, "missing 'dim' header");
    if (points.empty()) throw ParseError(line_no, 1, "no points");
    return PointConfig(dim, std::move(points));
}

std::string serialize_config(const PointConfig& config) {
    const unsigned order = field_order_of(config);
    std::ostringstream out;
    out << "dim " << config.dim() << "\n";
    if (4 % order != 0) out << "field " << order << "\n";
    for (const auto& p : config.points()) {
        out << "(";
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out << ", ";
            out << format_literal(p[c], order);
        }
        out << ")\n";
    }
    return out.str();
}

PointConfig read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void write_config_file(const std::filesystem::path& path, const PointConfig& config) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_config(config);
}

bool same_structure(const PointConfig& a, const PointConfig& b) {
    return a.dim() == b.dim() && a.points() == b.points();
}

}  // namespace olines
