#include "liemod/numeric.hpp"

#include "liemod/error.hpp"

#include <cctype>
#include <sstream>

namespace liemod {

const char* error_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
  case ErrorCode::MissingParameter: return "MissingParameter";
  case ErrorCode::ParametricEntry: return "ParametricEntry";
  case ErrorCode::NoValidSample: return "NoValidSample";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::SingularMatrix: return "SingularMatrix";
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::JacobiFails: return "JacobiFails";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::UnknownId: return "UnknownId";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::DuplicateTerm: return "DuplicateTerm";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::RangeViolation: return "RangeViolation";
  case ErrorCode::ConditionFailed: return "ConditionFailed";
  case ErrorCode::UndefinedAtPoint: return "UndefinedAtPoint";
  case ErrorCode::OrderTooSmall: return "OrderTooSmall";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const Integer& x) { return x.str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return SyntaxError("not a rational number: '" + s + "'", 0, 1); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  const std::size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) throw bad();
  if (i < s.size()) {
    if (s[i] != '/') throw bad();
    const std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) throw bad();
    if (s.substr(den_start).find_first_not_of('0') == std::string::npos)
      throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Rational(s);
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw SyntaxError("expected name=value, got '" + item + "'", 0, 1);
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::string to_string(const Assignment& a) {
  std::string out;
  for (const auto& [k, v] : a) {
    if (!out.empty()) out += ',';
    out += k + "=" + to_string(v);
  }
  return out;
}

} // namespace liemod
