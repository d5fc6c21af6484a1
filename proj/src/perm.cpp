#include "marksmith/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace marksmith {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("Perm: image array is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::parse_cycles(int degree, const std::string& text) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("Perm: expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("Perm: expected point in cycle notation: " + text);
      int p = std::stoi(text.substr(i, j - i));
      if (p < 1 || p > degree)
        throw std::invalid_argument("Perm: point out of range in cycle notation: " + text);
      cycle.push_back(p - 1);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size()) throw std::invalid_argument("Perm: unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t k = 0; k + 1 < cycle.size(); ++k) {
      if (img[cycle[k]] != cycle[k])
        throw std::invalid_argument("Perm: point repeated in cycle notation: " + text);
      img[cycle[k]] = cycle[k + 1];
    }
    if (cycle.size() > 1) {
      if (img[cycle.back()] != cycle.back())
        throw std::invalid_argument("Perm: point repeated in cycle notation: " + text);
      img[cycle.back()] = cycle.front();
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> img(degree());
  for (int x = 0; x < degree(); ++x) img[x] = rhs.img_[img_[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::order() const {
  int n = 1;
  Perm p = *this;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("Perm: cannot shrink degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::copy(img_.begin(), img_.end(), img.begin());
  return Perm(std::move(img));
}

Perm Perm::shifted(int degree, int offset) const {
  if (offset + this->degree() > degree) throw std::invalid_argument("Perm: shift exceeds degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int x = 0; x < this->degree(); ++x) img[x + offset] = img_[x] + offset;
  return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    out += '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(y + 1);
      seen[y] = 1;
      y = img_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace marksmith
