#include <cctype>
#include <string>

#include "gfp/errors.hpp"
#include "gfp/poly.hpp"

namespace gfp {

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto cs = p.coeffs();
  bool first = true;
  for (std::size_t i = cs.size(); i-- > 0;) {
    const Integer& c = cs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const Integer mag = abs(c);
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    std::vector<Integer> acc;
    bool first = true;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    while (!at_end()) {
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_ws();

      std::string digits = take_digits();
      bool has_coeff = !digits.empty();
      skip_ws();
      if (has_coeff && peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
      std::size_t exponent = 0;
      if (peek() == 'x') {
        ++pos_;
        exponent = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          std::string e = take_digits();
          if (e.empty()) fail("expected exponent after '^'");
          if (e.size() > 9) fail("exponent too large");
          exponent = std::stoul(e);
        }
      } else if (!has_coeff) {
        fail("expected a coefficient or 'x'");
      }

      Integer c = has_coeff ? Integer(digits) : Integer(1);
      if (sign < 0) c = -c;
      if (acc.size() <= exponent) acc.resize(exponent + 1);
      acc[exponent] += c;
      skip_ws();
    }
    return Poly(std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace gfp
