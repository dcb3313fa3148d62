#include "garside/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  image_.resize(n);
  for (int i = 0; i < n; ++i) image_[i] = i;
}

Permutation Permutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(n, 0);
  for (int v : image) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("one-line form is not a bijection");
    seen[v] = 1;
  }
  Permutation p(n);
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw std::invalid_argument("bad transposition indices");
  Permutation p(n);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  return from_one_line(std::move(inv));
}

std::vector<std::vector<int>> Permutation::orbits() const {
  const int n = degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> parts;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    parts.push_back(std::move(orbit));
  }
  return parts;  // discovery order == ascending minimum
}

int Permutation::reflection_length() const {
  return degree() - static_cast<int>(orbits().size());
}

int Permutation::coxeter_length() const {
  int count = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (image_[i] > image_[j]) ++count;
  return count;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ' ';
    os << image_[i];
  }
  os << ']';
  return os.str();
}

size_t Permutation::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : image_) h = h * 1099511628211ull + static_cast<size_t>(v + 1);
  return h;
}

namespace {

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw ParseError("expected an integer", start);
  return std::stoi(s.substr(start, pos - start));
}

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == ','))
    ++pos;
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int n) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size()) throw ParseError("empty permutation", pos);
  if (text[pos] == '[') {
    ++pos;
    std::vector<int> image;
    skip_ws(text, pos);
    while (pos < text.size() && text[pos] != ']') {
      image.push_back(parse_int(text, pos));
      skip_ws(text, pos);
    }
    if (pos >= text.size()) throw ParseError("missing ']'", pos);
    ++pos;
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("trailing input", pos);
    if (static_cast<int>(image.size()) != n)
      throw ParseError("one-line form has wrong degree", 0);
    return from_one_line(std::move(image));
  }
  // cycle notation
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cyc;
    skip_ws(text, pos);
    while (pos < text.size() && text[pos] != ')') {
      size_t at = pos;
      int v = parse_int(text, pos);
      if (v < 0 || v >= n) throw ParseError("index out of range", at);
      cyc.push_back(v);
      skip_ws(text, pos);
    }
    if (pos >= text.size()) throw ParseError("missing ')'", pos);
    ++pos;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (image[from] != from)
        throw ParseError("cycles are not disjoint", 0);
      image[from] = to;
    }
    skip_ws(text, pos);
  }
  return from_one_line(std::move(image));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> image(p.degree());
  for (int i = 0; i < p.degree(); ++i) image[i] = q[p[i]];
  return Permutation::from_one_line(std::move(image));
}

}  // namespace garside
