#include "hsurf/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace hsurf {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }
  const std::string& text() const { return s_; }

  std::optional<std::string> digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

int to_small_int(const std::string& s, const Lexer& lx) {
  if (s.size() > 6) lx.fail("number too large");
  return std::stoi(s);
}

// Returns the parsed rational; nullopt when no number is present.
std::optional<mpq_class> parse_number(Lexer& lx) {
  auto num = lx.digits();
  if (!num) return std::nullopt;
  mpq_class q{mpz_class(*num)};
  if (lx.accept('/')) {
    auto den = lx.digits();
    if (!den) lx.fail("expected denominator");
    mpz_class dz(*den);
    if (dz == 0) lx.fail("zero denominator");
    q = mpq_class(mpz_class(*num), dz);
    q.canonicalize();
  }
  return q;
}

struct RawTerm {
  mpq_class coeff;
  std::vector<std::pair<int, int>> powers;  // (variable, exponent)
};

RawTerm parse_term(Lexer& lx) {
  RawTerm t{mpq_class(1), {}};
  bool have_factor = false;
  if (auto c = parse_number(lx)) {
    t.coeff = *c;
    have_factor = true;
    if (!lx.accept('*')) {
      if (lx.peek() != 'x') return t;
    }
  }
  while (true) {
    if (!lx.accept('x')) {
      if (!have_factor || lx.text()[lx.pos() - 1] == '*') lx.fail("expected variable");
      return t;
    }
    auto idx = lx.digits();
    if (!idx) lx.fail("expected variable index");
    int var = to_small_int(*idx, lx);
    int exp = 1;
    if (lx.accept('^')) {
      auto e = lx.digits();
      if (!e) lx.fail("expected exponent");
      exp = to_small_int(*e, lx);
    }
    t.powers.emplace_back(var, exp);
    have_factor = true;
    if (!lx.accept('*')) return t;
  }
}

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text, int n) {
  if (n < 0 || n + 1 > kMaxVariables) throw Error(ErrorKind::InvalidArgument, "ambient dimension out of range");
  Lexer lx(text);
  if (lx.done()) lx.fail("empty polynomial");
  std::vector<RationalPolynomial::Term> terms;
  std::optional<int> degree;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (lx.accept('+')) {
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    RawTerm raw = parse_term(lx);
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    int deg = 0;
    for (auto [v, p] : raw.powers) {
      if (v > n) throw Error(ErrorKind::UnknownVariable, "x" + std::to_string(v) + " exceeds x" + std::to_string(n));
      e[static_cast<std::size_t>(v)] += p;
      deg += p;
    }
    if (degree && *degree != deg) {
      throw Error(ErrorKind::MixedDegree,
                  "terms of degree " + std::to_string(*degree) + " and " + std::to_string(deg) + " in '" + lx.text() + "'");
    }
    degree = deg;
    terms.push_back({Monomial(std::span<const int>(e)), raw.coeff * sign});
  }
  return RationalPolynomial::from_terms(RationalField{}, n, *degree, std::move(terms));
}

int infer_ambient_dimension(std::string_view text) {
  int n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    int v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      if (v > 1000) throw Error(ErrorKind::UnknownVariable, "variable index too large");
      any = true;
      ++j;
    }
    if (any) n = std::max(n, v);
  }
  return n;
}

std::vector<mpq_class> parse_point(std::string_view text, int n) {
  Lexer lx(text);
  if (!lx.accept('[')) lx.fail("expected '['");
  std::vector<mpq_class> coords;
  while (true) {
    int sign = lx.accept('-') ? -1 : 1;
    if (sign == 1) lx.accept('+');
    auto q = parse_number(lx);
    if (!q) lx.fail("expected coordinate");
    coords.push_back(*q * sign);
    if (lx.accept(':')) continue;
    if (lx.accept(']')) break;
    lx.fail("expected ':' or ']'");
  }
  if (!lx.done()) lx.fail("trailing characters");
  if (coords.size() != static_cast<std::size_t>(n + 1)) {
    throw Error(ErrorKind::ParseError, "point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                           std::to_string(n + 1));
  }
  bool nonzero = false;
  for (const auto& c : coords) nonzero = nonzero || sgn(c) != 0;
  if (!nonzero) throw Error(ErrorKind::DegeneratePoint, "all coordinates are zero");
  return coords;
}

namespace {

template <typename Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    fn(line);
  }
}

}  // namespace

std::vector<std::vector<mpq_class>> parse_points(std::string_view text, int n) {
  std::vector<std::vector<mpq_class>> out;
  for_each_content_line(text, [&](const std::string& line) { out.push_back(parse_point(line, n)); });
  return out;
}

std::vector<RationalPolynomial> parse_polynomial_lines(std::string_view text, int n) {
  std::vector<RationalPolynomial> out;
  for_each_content_line(text, [&](const std::string& line) { out.push_back(parse_polynomial(line, n)); });
  return out;
}

}  // namespace hsurf
