#include "srq/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace srq {

std::string format_double(double x) {
  if (x == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ec == std::errc() ? end : buf.data());
}

std::string format_quaternion(const Quaternion& q) {
  const std::array<double, 4> parts{q.w, q.x, q.y, q.z};
  const std::array<const char*, 4> units{"", "i", "j", "k"};
  std::string out;
  for (std::size_t n = 0; n < 4; ++n) {
    const double v = parts[n];
    if (v == 0.0) continue;
    std::string term;
    if (n > 0 && std::abs(v) == 1.0) {
      term = std::string(v < 0 ? "-" : "") + units[n];
    } else {
      term = format_double(v) + units[n];
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

int nonzero_parts(const Quaternion& q) {
  return (q.w != 0.0) + (q.x != 0.0) + (q.y != 0.0) + (q.z != 0.0);
}

std::string power_of_q(std::size_t n) { return n == 1 ? "q" : "q^" + std::to_string(n); }

}  // namespace

std::string format_polynomial(const RegularPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t n = f.size(); n-- > 0;) {
    Quaternion c = f[n];
    if (c == Quaternion{}) continue;
    // A single negative component moves its sign into the separator.
    bool negative = false;
    if (nonzero_parts(c) == 1 && c.w + c.x + c.y + c.z < 0.0) {
      negative = true;
      c = -c;
    }
    std::string term;
    if (n == 0) {
      term = format_quaternion(c);
    } else if (c == Quaternion{1.0}) {
      term = power_of_q(n);
    } else if (nonzero_parts(c) == 1) {
      term = power_of_q(n) + "*" + format_quaternion(c);
    } else {
      term = power_of_q(n) + "*(" + format_quaternion(c) + ")";
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::Parse,
              what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegularPolynomial parse() {
    skip();
    if (pos_ >= text_.size()) parse_error(text_, pos_, "empty expression");
    RegularPolynomial out = expr();
    skip();
    if (pos_ < text_.size()) parse_error(text_, pos_, "unexpected character");
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'q' || c == 'i' || c == 'j' ||
           c == 'k' || c == '(';
  }

  RegularPolynomial expr() {
    RegularPolynomial out = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        out += term();
      } else if (c == '-') {
        ++pos_;
        out -= term();
      } else {
        return out;
      }
    }
  }

  RegularPolynomial term() {
    RegularPolynomial out = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        out = out * factor();
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        const RegularPolynomial d = factor();
        if (d.degree() != 0) parse_error(text_, at, "division by a non-constant");
        out = right_scale(out, invert(d[0]));
      } else if (starts_primary(c)) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  RegularPolynomial factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  RegularPolynomial power() {
    RegularPolynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    unsigned exponent = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), exponent);
    if (ec != std::errc() || exponent > 4096) parse_error(text_, pos_, "expected a small non-negative integer exponent");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return star_power(base, exponent);
  }

  RegularPolynomial primary() {
    const char c = peek();
    switch (c) {
      case 'q':
        ++pos_;
        return RegularPolynomial::identity();
      case 'i':
        ++pos_;
        return RegularPolynomial::constant(Quaternion::i());
      case 'j':
        ++pos_;
        return RegularPolynomial::constant(Quaternion::j());
      case 'k':
        ++pos_;
        return RegularPolynomial::constant(Quaternion::k());
      case '(': {
        ++pos_;
        RegularPolynomial inner = expr();
        if (peek() != ')') parse_error(text_, pos_, "expected ')'");
        ++pos_;
        return inner;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc() || !std::isfinite(value)) parse_error(text_, pos_, "malformed number");
      pos_ = static_cast<std::size_t>(end - text_.data());
      return RegularPolynomial::constant(value);
    }
    if (c == '\0') parse_error(text_, pos_, "unexpected end of expression");
    parse_error(text_, pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RegularPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

Quaternion parse_quaternion(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::Parse, "malformed JSON quaternion '" + std::string(text) + "'");
    return quaternion_from_json(j);
  }
  const RegularPolynomial p = parse_polynomial(text);
  if (p.degree() > 0) throw Error(ErrorCode::Parse, "expected a quaternion, got a polynomial in q");
  return p[0];
}

nlohmann::json quaternion_to_json(const Quaternion& q) { return nlohmann::json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_quaternion(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::Parse, "quaternion must be [w,x,y,z]");
  std::array<double, 4> v{};
  for (std::size_t n = 0; n < 4; ++n) {
    if (!j[n].is_number()) throw Error(ErrorCode::Parse, "quaternion components must be numbers");
    v[n] = j[n].get<double>();
  }
  return {v[0], v[1], v[2], v[3]};
}

nlohmann::json polynomial_to_json(const RegularPolynomial& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& a : f.coefficients()) coeffs.push_back(quaternion_to_json(a));
  return {{"coeffs", coeffs}};
}

RegularPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorCode::Parse, "polynomial must be {\"coeffs\": [...]}");
  }
  std::vector<Quaternion> coeffs;
  for (const auto& a : j["coeffs"]) coeffs.push_back(quaternion_from_json(a));
  return RegularPolynomial(std::move(coeffs));
}

nlohmann::json quotient_to_json(const RegularQuotient& f) {
  return {{"den", polynomial_to_json(f.den())},
          {"num", polynomial_to_json(f.num())},
          {"side", f.side() == QuotientSide::left ? "left" : "right"}};
}

RegularQuotient quotient_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("den") || !j.contains("num")) {
    throw Error(ErrorCode::Parse, "quotient must have \"den\" and \"num\"");
  }
  QuotientSide side = QuotientSide::left;
  if (j.contains("side")) {
    const auto& s = j["side"];
    if (s == "right") {
      side = QuotientSide::right;
    } else if (s != "left") {
      throw Error(ErrorCode::Parse, "side must be \"left\" or \"right\"");
    }
  }
  return RegularQuotient(polynomial_from_json(j["den"]), polynomial_from_json(j["num"]), side);
}

nlohmann::json matrix_to_json(const QuaternionMatrix2& m) {
  return {{"a", quaternion_to_json(m.a)},
          {"c", quaternion_to_json(m.c)},
          {"b", quaternion_to_json(m.b)},
          {"d", quaternion_to_json(m.d)}};
}

QuaternionMatrix2 matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "matrix must be an object with a, c, b, d");
  QuaternionMatrix2 m;
  for (const char* key : {"a", "c", "b", "d"}) {
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("matrix entry '") + key + "' missing");
  }
  m.a = quaternion_from_json(j["a"]);
  m.c = quaternion_from_json(j["c"]);
  m.b = quaternion_from_json(j["b"]);
  m.d = quaternion_from_json(j["d"]);
  return m;
}

}  // namespace srq
