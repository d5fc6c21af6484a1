#pragma once

#include <compare>
#include <string>
#include <vector>

namespace marksmith {

// A permutation of the points 0..n-1, stored as an image array.
// Products compose left to right: (a*b)[x] == b[a[x]], i.e. a acts first,
// matching the right-action convention used throughout the library.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // must be a bijection of 0..n-1

  // Cycle notation on 1-based points, e.g. "(1,2)(3,4)". Whitespace ignored.
  static Perm parse_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;

  // Extend to a larger degree, fixing the new points.
  Perm extended(int degree) const;
  // Shift all moved points up by `offset` within a permutation of `degree` points.
  Perm shifted(int degree, int offset) const;

  std::string cycle_string() const;          // 1-based, "()" for the identity

  friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<int> img_;
};

}  // namespace marksmith
