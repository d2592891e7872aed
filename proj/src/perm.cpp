#include "pottsym/perm.hpp"

#include <algorithm>
#include <numeric>

#include "pottsym/gaussian.hpp"

namespace pottsym {

bool Permutation::isIdentity() const {
  for (int i = 0; i < n(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(n());
  for (int i = 0; i < n(); ++i) inv[img[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& b) const {
  std::vector<int> out(n());
  for (int i = 0; i < n(); ++i) out[i] = img[b.img[i]];
  return Permutation(std::move(out));
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i)
    if (img[i] != i) s.push_back(i);
  return s;
}

std::uint64_t Permutation::supportMask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < n(); ++i)
    if (img[i] != i) m |= std::uint64_t(1) << i;
  return m;
}

long long Permutation::order() const {
  std::vector<bool> seen(n(), false);
  long long ord = 1;
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string to_cycles(const Permutation& p, const std::vector<std::string>& labels) {
  std::string out;
  std::vector<bool> seen(p.n(), false);
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i] || p(i) == i) {
      seen[i] = true;
      continue;
    }
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += labels[j];
      first = false;
      j = p(j);
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation parse_cycles(const std::string& text, const std::vector<std::string>& labels) {
  int n = static_cast<int>(labels.size());
  auto indexOf = [&](const std::string& lab) {
    for (int i = 0; i < n; ++i)
      if (labels[i] == lab) return i;
    throw InputError("unknown vertex '" + lab + "' in permutation");
  };
  Permutation p(n);
  std::vector<bool> used(n, false);
  size_t pos = 0;
  auto skipWs = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skipWs();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InputError("malformed permutation: expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skipWs();
      if (pos >= text.size()) throw InputError("malformed permutation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ')' &&
             text[pos] != ',')
        ++pos;
      std::string lab = text.substr(start, pos - start);
      if (pos < text.size() && text[pos] == ',') ++pos;
      int v = indexOf(lab);
      if (used[v]) throw InputError("vertex '" + lab + "' appears twice in permutation");
      used[v] = true;
      cycle.push_back(v);
    }
    for (size_t k = 0; k + 1 < cycle.size(); ++k) p.img[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) p.img[cycle.back()] = cycle.front();
    skipWs();
  }
  return p;
}

}  // namespace pottsym
