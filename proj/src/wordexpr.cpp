#include "garside/wordexpr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected an integer", start);
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
    }
    return static_cast<int>(neg ? -v : v);
  }
};

int parse_exponent(Cursor& c) {
  if (c.peek() == '^') {
    c.expect('^');
    return c.integer();
  }
  return 1;
}

}  // namespace

bool WordExpr::is_positive() const {
  for (const auto& t : terms)
    if (t.exp < 0) return false;
  return true;
}

std::vector<SimpleId> WordExpr::to_simples(const BklInstance& inst) const {
  std::vector<SimpleId> out;
  for (const auto& t : terms) {
    if (t.exp < 0)
      throw std::invalid_argument("word must be positive here");
    SimpleId id = t.is_atom()
                      ? inst.atom(std::get<0>(t.value).first,
                                  std::get<0>(t.value).second)
                      : inst.id_of(std::get<1>(t.value));
    for (int i = 0; i < t.exp; ++i) out.push_back(id);
  }
  return out;
}

std::vector<std::pair<SimpleId, int>> WordExpr::to_signed(
    const BklInstance& inst) const {
  std::vector<std::pair<SimpleId, int>> out;
  for (const auto& t : terms) {
    SimpleId id = t.is_atom()
                      ? inst.atom(std::get<0>(t.value).first,
                                  std::get<0>(t.value).second)
                      : inst.id_of(std::get<1>(t.value));
    out.emplace_back(id, t.exp);
  }
  return out;
}

std::vector<SignedBandAtom> WordExpr::to_band_atoms() const {
  std::vector<SignedBandAtom> out;
  for (const auto& t : terms) {
    if (!t.is_atom())
      throw std::invalid_argument("expected a word over atoms a(i,j)");
    auto [i, j] = std::get<0>(t.value);
    out.push_back({i, j, t.exp});
  }
  return out;
}

std::string WordExpr::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k) os << " * ";
    const auto& t = terms[k];
    if (t.is_atom()) {
      auto [i, j] = std::get<0>(t.value);
      os << "a(" << i << "," << j << ")";
    } else {
      os << std::get<1>(t.value).str();
    }
    if (t.exp != 1) os << "^" << t.exp;
  }
  return os.str();
}

WordExpr parse_word(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  WordExpr expr;
  expr.n = n;
  Cursor c{text};
  if (c.done()) throw ParseError("empty word", 0);
  for (;;) {
    char ch = c.peek();
    size_t term_at = c.pos;
    if (ch == 'a') {
      ++c.pos;
      c.expect('(');
      size_t at_i = c.pos;
      int i = c.integer();
      c.expect(',');
      size_t at_j = c.pos;
      int j = c.integer();
      c.expect(')');
      if (i < 0 || i >= n) throw ParseError("atom index out of range", at_i);
      if (j < 0 || j >= n) throw ParseError("atom index out of range", at_j);
      if (i >= j) throw ParseError("atom requires i < j", term_at);
      WordTerm t;
      t.value = std::make_pair(i, j);
      t.exp = parse_exponent(c);
      expr.terms.push_back(std::move(t));
    } else if (ch == '{') {
      std::vector<std::vector<int>> parts;
      while (c.peek() == '{') {
        c.expect('{');
        std::vector<int> part;
        while (c.peek() != '}') {
          size_t at = c.pos;
          int v = c.integer();
          if (v < 0 || v >= n)
            throw ParseError("partition index out of range", at);
          part.push_back(v);
        }
        c.expect('}');
        if (part.empty()) throw ParseError("empty part", term_at);
        parts.push_back(std::move(part));
      }
      NcPartition p = [&] {
        try {
          return NcPartition::make(n, std::move(parts));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), term_at);
        }
      }();
      WordTerm t;
      t.value = std::move(p);
      t.exp = parse_exponent(c);
      expr.terms.push_back(std::move(t));
    } else {
      throw ParseError("expected a term (atom or partition)", c.pos);
    }
    if (c.done()) break;
    char sep = c.peek();
    if (sep != '*' && sep != '.')
      throw ParseError("expected '*' or '.' between terms", c.pos);
    ++c.pos;
  }
  return expr;
}

std::string format_normal_form(const BklInstance& inst, const NormalForm& nf) {
  if (nf.is_identity()) return NcPartition::singletons(inst.strands()).str();
  std::ostringstream os;
  for (size_t k = 0; k < nf.factors.size(); ++k) {
    if (k) os << " * ";
    os << inst.partition(nf.factors[k]).str();
  }
  return os.str();
}

}  // namespace garside
