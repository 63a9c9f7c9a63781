#include "kmsph/rational.hpp"

#include <cctype>

#include "kmsph/errors.hpp"

namespace kmsph {

std::string rat_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& text) {
  if (text.empty()) fail(Errc::parse_error, "empty number");
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!digits(text)) fail(Errc::parse_error, "malformed number '" + text + "'");
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-')
    fail(Errc::parse_error, "malformed number '" + text + "'");
  Int d(den);
  if (d == 0) fail(Errc::parse_error, "zero denominator in '" + text + "'");
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

QVec to_qvec(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ZVec to_zvec_exact(const QVec& v, const std::string& what) {
  ZVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integer(q))
      fail(Errc::invariant_violation, what + " must be integral, got " + rat_string(q));
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace kmsph
