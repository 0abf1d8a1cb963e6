// Textual operator syntax used by the CLI and test fixtures, e.g.
//   3/2*y1^2*d1 + E[1,2]*d2^3
// Coordinates are y1..yn, derivatives d1..dn; z and d are accepted as
// aliases for y1 and d1, w for y1 in chart-local input.  Printing is
// canonical, so parse(print(op)) == op holds bit-exactly.
#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "hochlef/weyl.hpp"

namespace hochlef {

namespace detail {

struct WeylLexer {
  std::string src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw std::invalid_argument("operator syntax: expected '" +
                                  std::string(1, c) + "' near position " +
                                  std::to_string(pos) + " in \"" + src + "\"");
  }
  long integer() {
    skip_ws();
    bool neg = consume('-');
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw std::invalid_argument("operator syntax: expected integer in \"" +
                                  src + "\"");
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      v = v * 10 + (src[pos++] - '0');
    return neg ? -v : v;
  }
};

class WeylParser {
 public:
  WeylParser(const std::string& text, unsigned n, unsigned r, bool laurent)
      : lex_{text}, n_(n), r_(r), laurent_(laurent) {}

  WeylOp parse() {
    WeylOp result = parse_expr();
    if (!lex_.eof())
      throw std::invalid_argument("operator syntax: trailing input in \"" +
                                  lex_.src + "\"");
    return result;
  }

 private:
  WeylOp parse_expr() {
    WeylOp acc = WeylOp::zero(n_, r_, laurent_);
    bool neg = lex_.consume('-');
    for (;;) {
      WeylOp t = parse_term();
      if (neg) t.scale_inplace(-1);
      acc += t;
      if (lex_.consume('+')) {
        neg = false;
      } else if (lex_.consume('-')) {
        neg = true;
      } else {
        break;
      }
    }
    return acc;
  }

  WeylOp parse_term() {
    WeylOp acc = parse_factor();
    while (lex_.consume('*')) acc = acc * parse_factor();
    return acc;
  }

  WeylOp parse_factor() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.expect('(');
      WeylOp inner = parse_expr();
      lex_.expect(')');
      return maybe_power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (c == 'E') {
      lex_.expect('E');
      lex_.expect('[');
      long i = lex_.integer();
      lex_.expect(',');
      long j = lex_.integer();
      lex_.expect(']');
      if (i < 1 || j < 1 || i > static_cast<long>(r_) ||
          j > static_cast<long>(r_))
        throw std::invalid_argument("operator syntax: matrix index out of range");
      return maybe_power(WeylOp::matrix_unit(static_cast<unsigned>(i - 1),
                                             static_cast<unsigned>(j - 1), n_,
                                             r_, laurent_));
    }
    if (c == 'y' || c == 'd' || c == 'z' || c == 'w') {
      ++lex_.pos;
      unsigned idx = 0;
      if (c == 'y' || c == 'd') {
        if (lex_.pos < lex_.src.size() &&
            std::isdigit(static_cast<unsigned char>(lex_.src[lex_.pos]))) {
          long v = lex_.integer();
          if (v < 1 || v > static_cast<long>(n_))
            throw std::invalid_argument(
                "operator syntax: variable index out of range");
          idx = static_cast<unsigned>(v - 1);
        }  // bare y / d mean y1 / d1
      }
      WeylOp base = (c == 'd') ? WeylOp::derivative(idx, n_, r_, laurent_)
                               : WeylOp::coordinate(idx, n_, r_, laurent_);
      return maybe_power(base);
    }
    throw std::invalid_argument("operator syntax: unexpected character '" +
                                std::string(1, c) + "' in \"" + lex_.src +
                                "\"");
  }

  WeylOp parse_rational() {
    long num = lex_.integer();
    Rational q(num);
    if (lex_.consume('/')) {
      long den = lex_.integer();
      q = rat(num, den);
    }
    return maybe_power(WeylOp::constant(q, n_, r_, laurent_));
  }

  WeylOp maybe_power(WeylOp base) {
    if (!lex_.consume('^')) return base;
    long e = lex_.integer();
    if (e < 0) {
      // Negative powers only for a single coordinate monomial in Laurent mode.
      if (!laurent_)
        throw std::invalid_argument(
            "operator syntax: negative power outside Laurent mode");
      if (base.term_count() != static_cast<size_t>(base.rank()))
        throw std::invalid_argument(
            "operator syntax: negative power of a non-coordinate");
      WeylOp acc = WeylOp::identity(base.vars(), base.rank(), true);
      for (const auto& [m, coeff] : base.terms()) {
        if (m.row != m.col || m.order() != 0 || m.coeff_degree() != 1 ||
            coeff != 1)
          throw std::invalid_argument(
              "operator syntax: negative power of a non-coordinate");
      }
      const MonKey& m0 = base.terms().begin()->first;
      WeylOp inv(base.vars(), base.rank(), true);
      for (unsigned i = 0; i < base.rank(); ++i) {
        MonKey m{m0.alpha, m0.beta, i, i};
        for (auto& a : m.alpha) a = -a;
        inv.add_term(m, 1);
      }
      for (long t = 0; t < -e; ++t) acc = acc * inv;
      return acc;
    }
    WeylOp acc = WeylOp::identity(base.vars(), base.rank(), base.laurent());
    for (long t = 0; t < e; ++t) acc = acc * base;
    return acc;
  }

  WeylLexer lex_;
  unsigned n_, r_;
  bool laurent_;
};

}  // namespace detail

inline WeylOp parse_weyl(const std::string& text, unsigned n, unsigned r = 1,
                         bool laurent = false) {
  return detail::WeylParser(text, n, r, laurent).parse();
}

inline std::string monomial_to_string(const MonKey& m, unsigned r) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (r > 1) {
    sep();
    os << "E[" << m.row + 1 << ',' << m.col + 1 << ']';
  }
  for (size_t v = 0; v < m.alpha.size(); ++v) {
    if (m.alpha[v] == 0) continue;
    sep();
    os << 'y' << v + 1;
    if (m.alpha[v] != 1) os << '^' << m.alpha[v];
  }
  for (size_t v = 0; v < m.beta.size(); ++v) {
    if (m.beta[v] == 0) continue;
    sep();
    os << 'd' << v + 1;
    if (m.beta[v] != 1) os << '^' << m.beta[v];
  }
  if (first) os << '1';
  return os.str();
}

inline std::string to_string(const WeylOp& op) {
  if (op.is_zero()) return "0";
  // Scalar terms (same coefficient on every diagonal matrix unit) print
  // without the E factor, so rank-1-style input round-trips readably.
  const unsigned r = op.rank();
  std::vector<std::pair<std::string, Rational>> pieces;
  std::map<MonKey, Rational> rest(op.terms().begin(), op.terms().end());
  for (auto it = rest.begin(); it != rest.end();) {
    const MonKey& m = it->first;
    if (r > 1 && m.row == m.col) {
      bool scalar = true;
      for (unsigned i = 0; i < r && scalar; ++i) {
        MonKey mi = m;
        mi.row = mi.col = i;
        auto jt = rest.find(mi);
        scalar = (jt != rest.end() && jt->second == it->second);
      }
      if (scalar) {
        MonKey plain = m;
        plain.row = plain.col = 0;
        pieces.emplace_back(monomial_to_string(plain, 1), it->second);
        for (unsigned i = 0; i < r; ++i) {
          MonKey mi = m;
          mi.row = mi.col = i;
          rest.erase(mi);
        }
        it = rest.lower_bound(m);
        continue;
      }
    }
    pieces.emplace_back(monomial_to_string(m, r), it->second);
    ++it;
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [body, c] : pieces) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (a == 1 && body != "1") {
      os << body;
    } else if (body == "1") {
      os << to_string(a);
    } else {
      os << to_string(a) << '*' << body;
    }
  }
  return os.str();
}

}  // namespace hochlef
