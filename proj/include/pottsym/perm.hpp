#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pottsym {

// Permutation of [0, n) stored as the image vector.
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(int n) : img(n) {
    for (int i = 0; i < n; ++i) img[i] = i;
  }
  explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  bool isIdentity() const;
  Permutation inverse() const;
  // (a.after(b))(i) = a(b(i))
  Permutation after(const Permutation& b) const;
  std::vector<int> support() const;
  std::uint64_t supportMask() const;  // valid for n <= 64
  long long order() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img < b.img; }
};

// Cycle notation over vertex labels, e.g. "(1 2 3 4)(1' 2' 3' 4')".
std::string to_cycles(const Permutation& p, const std::vector<std::string>& labels);
Permutation parse_cycles(const std::string& text, const std::vector<std::string>& labels);

}  // namespace pottsym
