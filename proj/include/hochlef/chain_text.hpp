// Chain literal syntax for fixtures: `1(x)d1(x)y1 - 1(x)y1(x)d1`, where the
// tensor separator is either the UTF-8 circled times or the ASCII "(x)".
// Slots hold operator expressions in the weyl_text syntax; multilinear
// expansion and normalization happen on parse.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hochlef/chain.hpp"
#include "hochlef/weyl_text.hpp"

namespace hochlef {

namespace detail {

inline std::vector<std::string> split_tensor(const std::string& term) {
  // Recognize both "\xE2\x8A\x97" (UTF-8 tensor sign) and "(x)".
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = 0; i < term.size();) {
    if (term.compare(i, 3, "\xE2\x8A\x97") == 0 && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      i += 3;
      continue;
    }
    if (term.compare(i, 3, "(x)") == 0 && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      i += 3;
      continue;
    }
    if (term[i] == '(') ++depth;
    if (term[i] == ')') --depth;
    cur += term[i++];
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace detail

inline Chain parse_chain(const std::string& text, unsigned n, unsigned r = 1,
                         bool laurent = false) {
  // Split into signed terms at top-level +/-.
  std::vector<std::pair<int, std::string>> sterms;
  {
    int depth = 0, sign = 1;
    std::string cur;
    char last_sig = '\0';  // last non-space char; +/- after ^*/( binds locally
    for (char ch : text) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      bool splitter = depth == 0 && (ch == '+' || ch == '-') &&
                      last_sig != '^' && last_sig != '*' && last_sig != '/' &&
                      last_sig != '(' && last_sig != ',';
      if (splitter && cur.find_first_not_of(" \t") != std::string::npos) {
        sterms.emplace_back(sign, cur);
        sign = (ch == '-') ? -1 : 1;
        cur.clear();
        last_sig = '\0';
        continue;
      }
      if (splitter) {  // leading sign of the first term
        if (ch == '-') sign = -sign;
        continue;
      }
      cur += ch;
      if (!std::isspace(static_cast<unsigned char>(ch))) last_sig = ch;
    }
    if (cur.find_first_not_of(" \t") != std::string::npos)
      sterms.emplace_back(sign, cur);
  }
  if (sterms.empty()) throw std::invalid_argument("chain syntax: empty");

  int degree = -1;
  Chain out;
  for (const auto& [sign, term] : sterms) {
    auto slots_text = detail::split_tensor(term);
    if (degree == -1) {
      degree = static_cast<int>(slots_text.size()) - 1;
      out = Chain(n, r, laurent, degree);
    } else if (static_cast<int>(slots_text.size()) != degree + 1) {
      throw std::invalid_argument("chain syntax: mixed tensor degrees");
    }
    std::vector<WeylOp> slots;
    for (const auto& s : slots_text) slots.push_back(parse_weyl(s, n, r, laurent));
    // multilinear expansion
    std::vector<std::map<MonKey, Rational>::const_iterator> it(slots.size());
    bool empty = false;
    for (size_t j = 0; j < slots.size(); ++j) {
      if (slots[j].terms().empty()) empty = true;
    }
    if (empty) continue;
    for (size_t j = 0; j < slots.size(); ++j) it[j] = slots[j].terms().begin();
    for (;;) {
      Word w(slots.size());
      Rational c = sign;
      for (size_t j = 0; j < slots.size(); ++j) {
        w[j] = it[j]->first;
        c *= it[j]->second;
      }
      out.add_word(w, c);
      size_t j = 0;
      while (j < slots.size()) {
        ++it[j];
        if (it[j] != slots[j].terms().end()) break;
        it[j] = slots[j].terms().begin();
        ++j;
      }
      if (j == slots.size()) break;
    }
  }
  return out;
}

inline std::string to_string(const Chain& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, coeff] : c.terms()) {
    Rational a = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) os << '-';
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << to_string(a) << '*';
    for (size_t j = 0; j < w.size(); ++j) {
      if (j) os << "\xE2\x8A\x97";
      os << monomial_to_string(w[j], c.rank());
    }
  }
  return os.str();
}

}  // namespace hochlef
