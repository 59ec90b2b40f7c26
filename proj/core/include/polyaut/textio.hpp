#pragma once

// Text formats for polynomials and maps.
//
// Expression grammar (whitespace-insensitive):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := atom ('^' UINT)?
//   atom    := UINT | UINT '/' UINT | variable | '(' expr ')'
//   variable:= 'x' UINT (1..n) | 'X' | 'Y' | 'Z' (aliases for x1..x3, n <= 3)
//
// There is no implicit multiplication and no division outside rational
// literals. A map is n expressions separated by commas, optionally wrapped in
// one pair of parentheses.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyaut/endo.hpp"
#include "polyaut/poly.hpp"

namespace polyaut {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);

  /// Byte offset into the parsed text where the problem was detected.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Poly parse_poly(std::string_view text, std::size_t n);
std::string render_poly(const Poly& p);

Endo parse_map(std::string_view text, std::size_t n);
/// Coordinates joined by ", ".
std::string render_map(const Endo& g);

/// Integer or p/q literal, optionally signed.
Rational parse_rational(std::string_view text);
std::string render_rational(const Rational& q);

/// On-disk / wire form of a map: {"n":3,"coords":["...", ...],"name":"..."}.
struct MapDocument {
  std::size_t n = 0;
  std::vector<std::string> coords;
  std::optional<std::string> name;
  std::optional<std::string> notes;

  bool operator==(const MapDocument&) const = default;
};

MapDocument to_document(const Endo& g, std::optional<std::string> name = std::nullopt);
/// Parses every coordinate; throws ParseError / DimensionError on bad input.
Endo from_document(const MapDocument& doc);

MapDocument parse_map_document(std::string_view json);
std::string render_map_document(const MapDocument& doc);

}  // namespace polyaut
