#pragma once

// Text formats: exact number literals and the point-configuration file.
//
//   # comment
//   dim 2
//   field 6            (optional; z then denotes exp(2*pi*i/6))
//   (1/2, -3+2 i)
//   (1, 1/3 z - z^2)
//
// A literal is a signed sum of terms; a term is a rational "a" or "a/b"
// optionally followed by a unit "i" or "z^e". Whitespace between terms and
// units is optional.

#include "olines/cyclotomic.hpp"
#include "olines/exactgeom.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace olines {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses one literal. `field_order` is the N that "z" refers to (0: z not allowed).
/// `line`/`column_offset` only position error messages.
Cyclotomic parse_literal(std::string_view text, unsigned field_order = 0, std::size_t line = 1,
                         std::size_t column_offset = 0);

/// Least common multiple of the orders of all coordinates (1 for rational data).
unsigned field_order_of(const PointConfig& config);

PointConfig parse_config(std::string_view text);
std::string serialize_config(const PointConfig& config);

PointConfig read_config_file(const std::filesystem::path& path);
void write_config_file(const std::filesystem::path& path, const PointConfig& config);

/// Same dimension and same points in the same order (labels ignored).
bool same_structure(const PointConfig& a, const PointConfig& b);

/// Writes a literal for the file format: Gaussian syntax if order divides 4,
/// otherwise power-basis terms over Q(zeta_order).
std::string format_literal(const Cyclotomic& value, unsigned order);

}  // namespace olines
