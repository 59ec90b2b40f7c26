#include "polyaut/textio.hpp"

#include <cctype>

#include "polyaut/serialize.hpp"

namespace polyaut {

namespace {

constexpr Monomial::Exponent kMaxExponent = 1U << 20;

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Poly p = expr();
    skip_space();
    if (!at_end()) {
      if (starts_atom()) throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_atom() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '_';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    skip_space();
    if (starts_atom()) throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("exponent must be a non-negative integer literal", at);
    }
    std::string digits = read_digits();
    skip_space();
    if (peek() == '/') throw ParseError("exponent must be a non-negative integer literal", at);
    if (digits.size() > 7 || std::stoul(digits) > kMaxExponent) {
      throw ParseError("exponent too large", at);
    }
    if (accept('^')) throw ParseError("chained exponents are ambiguous; use parentheses", pos_ - 1);
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Poly atom() {
    skip_space();
    const std::size_t at = pos_;
    if (at_end()) throw ParseError("unexpected end of input", at);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(n_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return Poly::variable(n_, variable());
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    const std::size_t at = pos_;
    Integer num(read_digits());
    std::size_t save = pos_;
    skip_space();
    if (peek() != '/') {
      pos_ = save;
      return Rational(num);
    }
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("division is only allowed inside p/q rational literals", pos_);
    }
    Integer den(read_digits());
    if (den == 0) throw ParseError("zero denominator in rational literal", at);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::size_t variable() {
    const std::size_t at = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string_view name = text_.substr(at, pos_ - at);
    if (name.size() == 1 && (name[0] == 'X' || name[0] == 'Y' || name[0] == 'Z')) {
      const std::size_t idx = static_cast<std::size_t>(name[0] - 'X');
      if (n_ > 3) throw ParseError("aliases X, Y, Z are only available when n <= 3", at);
      if (idx >= n_) throw ParseError("unknown variable '" + std::string(name) + "' in dimension " + std::to_string(n_), at);
      return idx;
    }
    if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
      bool digits = true;
      for (char d : name.substr(1)) digits = digits && std::isdigit(static_cast<unsigned char>(d));
      if (digits && name.size() <= 8) {
        const auto idx = std::stoul(std::string(name.substr(1)));
        if (idx >= 1 && idx <= n_) return idx - 1;
      }
    }
    throw ParseError("unknown variable '" + std::string(name) + "' in dimension " + std::to_string(n_), at);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') ++depth;
    if (text[k] == ')') --depth;
    if (text[k] == ',' && depth == 0) {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

Poly parse_poly(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("dimension must be at least 1");
  return Parser(text, n).parse();
}

std::string render_rational(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  auto all_digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash);
  Rational q(Integer{std::string(num)}, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = sgn(it->coefficient) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(it->coefficient);
    if (it->monomial.is_one()) {
      out += render_rational(magnitude);
    } else if (magnitude == 1) {
      out += render_monomial(it->monomial);
    } else {
      out += render_rational(magnitude) + '*' + render_monomial(it->monomial);
    }
  }
  return out;
}

Endo parse_map(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("dimension must be at least 1");
  auto parts = split_top_level(text);
  const std::string_view whole = trim(text);
  if (parts.size() == 1 && n > 1 && whole.size() >= 2 && whole.front() == '(' && whole.back() == ')') {
    parts = split_top_level(whole.substr(1, whole.size() - 2));
  }
  if (parts.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(parts.size()));
  }
  std::vector<Poly> coords;
  coords.reserve(n);
  std::size_t offset = 0;
  for (auto part : parts) {
    try {
      coords.push_back(parse_poly(part, n));
    } catch (const ParseError& e) {
      throw ParseError("coordinate " + std::to_string(coords.size() + 1) + ": " + e.what(),
                       offset + e.position());
    }
    offset += part.size() + 1;
  }
  return Endo(std::move(coords));
}

std::string render_map(const Endo& g) {
  std::string out;
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (i > 0) out += ", ";
    out += render_poly(g[i]);
  }
  return out;
}

MapDocument to_document(const Endo& g, std::optional<std::string> name) {
  MapDocument doc;
  doc.n = g.dimension();
  for (const auto& c : g.coords()) doc.coords.push_back(render_poly(c));
  doc.name = std::move(name);
  return doc;
}

Endo from_document(const MapDocument& doc) {
  if (doc.n == 0) throw DimensionError("map document: n must be at least 1");
  if (doc.coords.size() != doc.n) {
    throw DimensionError("map document: n = " + std::to_string(doc.n) + " but " +
                         std::to_string(doc.coords.size()) + " coordinates given");
  }
  std::vector<Poly> coords;
  coords.reserve(doc.n);
  for (const auto& c : doc.coords) coords.push_back(parse_poly(c, doc.n));
  return Endo(std::move(coords));
}

MapDocument parse_map_document(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return map_document_from_json(j);
}

std::string render_map_document(const MapDocument& doc) { return map_document_to_json(doc).dump(); }

}  // namespace polyaut
