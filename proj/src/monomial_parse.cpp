#include "a4/error.hpp"
#include "a4/report.hpp"

#include <cctype>

namespace a4 {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  DivisorMonomial parse(std::size_t ray_count, unsigned degree) {
    std::vector<unsigned> exps(ray_count, 0);
    if (s_.empty()) fail("empty monomial");
    while (true) {
      std::size_t ray = 0;
      if (peek() == 'E') {
        ++pos_;
      } else if (peek() == 'D') {
        ++pos_;
        ray = number("ray index after 'D'");
        if (ray == 0 || ray >= ray_count)
          fail("ray index D" + std::to_string(ray) + " out of range 1.." + std::to_string(ray_count - 1));
      } else {
        fail("expected 'E' or 'D<k>'");
      }
      unsigned exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = static_cast<unsigned>(number("exponent"));
        if (exp == 0) fail("zero exponent");
      }
      exps[ray] += exp;
      if (exps[ray] > 255) fail("exponent too large");
      if (pos_ == s_.size()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
    }
    unsigned total = 0;
    for (auto e : exps) total += e;
    if (total != degree)
      throw UsageError("monomial has degree " + std::to_string(total) + ", expected " + std::to_string(degree));
    return DivisorMonomial::from_exponents(exps);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::size_t number(const char* what) {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1000) fail(std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("malformed monomial '" + s_ + "' at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

DivisorMonomial parse_monomial(const std::string& text, std::size_t ray_count, unsigned degree) {
  return Parser(text).parse(ray_count, degree);
}

}  // namespace a4
