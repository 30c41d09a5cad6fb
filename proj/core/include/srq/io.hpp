#ifndef SRQ_IO_HPP
#define SRQ_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "srq/fractional.hpp"

namespace srq {

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

/// `1+2i-0.5k`, `i`, `0`.
std::string format_quaternion(const Quaternion& q);

/// `q^2 + q*(-i-j) + k`, highest power first.
std::string format_polynomial(const RegularPolynomial& f);

/// Parses a polynomial expression in q. Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/' | <juxtaposition>) factor)*
///   factor  := ('+' | '-') factor | power
///   power   := primary ('^' integer)?
///   primary := number | 'q' | 'i' | 'j' | 'k' | '(' expr ')'
/// '*' is the star product; '/' only accepts a nonzero constant on the right.
/// Throws Error(Parse).
RegularPolynomial parse_polynomial(std::string_view text);

/// Accepts `w+xi+yj+zk` (any subset of terms) or the JSON form `[w,x,y,z]`.
Quaternion parse_quaternion(std::string_view text);

nlohmann::json quaternion_to_json(const Quaternion& q);
/// An array [w,x,y,z] or a quaternion string.
Quaternion quaternion_from_json(const nlohmann::json& j);

/// {"coeffs": [[w,x,y,z], ...]}
nlohmann::json polynomial_to_json(const RegularPolynomial& f);
/// The object form, or an expression string.
RegularPolynomial polynomial_from_json(const nlohmann::json& j);

/// {"den": <poly>, "num": <poly>, "side": "left"|"right"}
nlohmann::json quotient_to_json(const RegularQuotient& f);
RegularQuotient quotient_from_json(const nlohmann::json& j);

/// {"a": [..], "c": [..], "b": [..], "d": [..]}
nlohmann::json matrix_to_json(const QuaternionMatrix2& m);
QuaternionMatrix2 matrix_from_json(const nlohmann::json& j);

}  // namespace srq

#endif  // SRQ_IO_HPP
