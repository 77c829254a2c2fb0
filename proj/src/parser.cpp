#include <shapelemma/parser.hpp>

#include <shapelemma/errors.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace shapelemma {

namespace {

std::string_view strip_comment(std::string_view line)
{
  if (auto p = line.find('#'); p != std::string_view::npos)
    line = line.substr(0, p);
  return line;
}

bool blank(std::string_view s)
{
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

class ExprParser {
public:
  ExprParser(std::string_view text, std::size_t line, std::size_t col0, std::size_t nvars)
      : text_(text), line_(line), col0_(col0), nvars_(nvars)
  {
  }

  MPoly parse_all()
  {
    skip_ws();
    if (at_end())
      fail("expected an expression");
    MPoly p = expr();
    skip_ws();
    if (!at_end())
      fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const
  {
    throw ParseError(line_, col0_ + pos_ + 1, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr()
  {
    skip_ws();
    MPoly sum(nvars_);
    if (accept('-'))
      sum -= term();
    else
      sum += term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        sum += term();
      else if (accept('-'))
        sum -= term();
      else
        return sum;
    }
  }

  MPoly term()
  {
    MPoly p = factor();
    while (accept('*'))
      p = p * factor();
    return p;
  }

  MPoly factor()
  {
    MPoly b = base();
    if (accept('^')) {
      skip_ws();
      const auto e = uint_literal();
      if (e > 1000)
        fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Integer uint_literal()
  {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly base()
  {
    skip_ws();
    if (at_end())
      fail("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!accept(')'))
        fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = uint_literal();
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = uint_literal();
        if (den == 0)
          fail("zero denominator");
      }
      return MPoly::constant(nvars_, make_rational(num, den));
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (dstart == pos_) {
        pos_ = start;
        fail("expected a variable index after 'x'");
      }
      const auto idx = std::stoul(std::string(text_.substr(dstart, pos_ - dstart)));
      if (idx >= nvars_ || (idx == 0 && reserve_x0_)) {
        pos_ = start;
        fail("unknown variable x" + std::to_string(idx));
      }
      return MPoly::variable(nvars_, idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

public:
  bool reserve_x0_ = false;

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

PolySystem parse_system(std::string_view text)
{
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  while (!text.empty() || lineno == 0) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    line = strip_comment(line);
    if (!blank(line))
      lines.emplace_back(lineno, line);
    if (text.empty())
      break;
  }
  if (lines.empty())
    throw ParseError(1, 1, "empty input: expected 'vars:' header");

  auto [hline, header] = lines.front();
  const auto colon = header.find(':');
  {
    std::size_t p = 0;
    while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p])))
      ++p;
    if (header.substr(p, 5) != "vars:")
      throw ParseError(hline, p + 1, "expected 'vars:' header");
  }
  std::vector<std::string> vars;
  {
    std::size_t p = colon + 1;
    while (p < header.size()) {
      while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p])))
        ++p;
      if (p >= header.size())
        break;
      const std::size_t start = p;
      while (p < header.size() && !std::isspace(static_cast<unsigned char>(header[p])))
        ++p;
      std::string v(header.substr(start, p - start));
      const std::string want = "x" + std::to_string(vars.size() + 1);
      if (v != want)
        throw ParseError(hline, start + 1, "expected variable " + want + ", got " + v);
      vars.push_back(v);
    }
  }
  const std::size_t n = vars.size();
  if (n < 2)
    throw Error(ErrorKind::ArityMismatch, "need at least two variables, got " + std::to_string(n));

  std::vector<MPoly> polys;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto [ln, line] = lines[k];
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      std::size_t p = 0;
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p])))
        ++p;
      throw ParseError(ln, p + 1, "expected 'f" + std::to_string(polys.size() + 1) + " = ...'");
    }
    std::size_t a = 0;
    while (a < eq && std::isspace(static_cast<unsigned char>(line[a])))
      ++a;
    std::size_t b = eq;
    while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1])))
      --b;
    const std::string want = "f" + std::to_string(polys.size() + 1);
    if (line.substr(a, b - a) != want)
      throw ParseError(ln, a + 1, "expected polynomial name " + want);
    ExprParser parser(line.substr(eq + 1), ln, eq + 1, n + 1);
    parser.reserve_x0_ = true;
    polys.push_back(parser.parse_all());
  }
  if (polys.size() != n)
    throw Error(ErrorKind::ArityMismatch, std::to_string(polys.size()) + " polynomials for " +
                                              std::to_string(n) + " variables");
  return PolySystem::from_polys(std::move(polys));
}

MPoly parse_polynomial(std::string_view text, std::size_t nvars)
{
  return ExprParser(text, 1, 0, nvars).parse_all();
}

Rational parse_rational(std::string_view text)
{
  MPoly p = ExprParser(text, 1, 0, 1).parse_all();
  if (!p.is_constant())
    throw ParseError(1, 1, "expected a rational number");
  return p.constant_term();
}

}  // namespace shapelemma
