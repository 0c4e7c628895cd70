#include "lag2d/cli_util.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lag2d {

namespace {

double parse_strict_double(const std::string& t, const std::string& what) {
  if (t.empty())
    throw std::invalid_argument("empty " + what + " literal");
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed " + what + " literal: '" + t + "'");
  }
  if (pos != t.size())
    throw std::invalid_argument("trailing characters in " + what +
                                " literal: '" + t + "'");
  return v;
}

std::string strip_space(const std::string& in) {
  std::string s;
  s.reserve(in.size());
  for (char ch : in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return s;
}

// Signed coefficient in front of 'i': bare signs mean +/- 1.
double imag_coefficient(const std::string& t) {
  if (t.empty() || t == "+") return 1.0;
  if (t == "-") return -1.0;
  return parse_strict_double(t, "imaginary");
}

}  // namespace

cplx parse_complex(const std::string& input) {
  const std::string s = strip_space(input);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_strict_double(s, "real"), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // The split sign separating real and imaginary parts is the last +/- that
  // is neither leading nor an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' &&
        body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, imag_coefficient(body)};
  return {parse_strict_double(body.substr(0, split), "real"),
          imag_coefficient(body.substr(split))};
}

quaternion parse_quaternion(const std::string& s) {
  std::vector<double> v = parse_double_list(s);
  if (v.size() != 4)
    throw std::invalid_argument("quaternion literal needs 4 components, got " +
                                std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3]};
}

std::vector<double> parse_double_list(const std::string& input) {
  const std::string s = strip_space(input);
  if (s.empty()) throw std::invalid_argument("empty number list");
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    const std::string item = s.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_strict_double(item, "list entry"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  s += (z.imag() < 0.0) ? "-" : "+";
  s += format_double(std::fabs(z.imag()));
  s += "i";
  return s;
}

std::string format_quaternion(const quaternion& q) {
  return format_double(q.x0) + "," + format_double(q.x1) + "," +
         format_double(q.x2) + "," + format_double(q.x3);
}

}  // namespace lag2d
