#include "augsimp/numeric.hpp"

#include "augsimp/errors.hpp"

namespace augsimp {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Scalar& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("not an exact scalar: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start >= part.size()) throw bad();
    for (std::size_t k = start; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') throw bad();
  };
  Scalar out;
  if (slash == std::string::npos) {
    check_int(s, true);
    out = Scalar(BigInt(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    BigInt d(den);
    if (d == 0) throw bad();
    out = Scalar(BigInt(num[0] == '+' ? num.substr(1) : num), d);
    out.canonicalize();
  }
  return out;
}

bool is_integer(const Scalar& v) { return v.get_den() == 1; }

}  // namespace augsimp
