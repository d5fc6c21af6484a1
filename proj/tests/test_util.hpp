#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "marksmith/matrix.hpp"

namespace marksmith::testutil {

// Parses a whitespace-separated matrix literal; "." means zero, fractions
// like "3/2" are allowed. Rows are newline-separated.
inline RatMat parse_mat(const std::string& text) {
  RatMat m;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<Rat> row;
    std::string cell;
    while (cells >> cell) row.push_back(cell == "." ? Rat(0) : rat_from_string(cell));
    if (!row.empty()) m.push_back(std::move(row));
  }
  return m;
}

// Reorders a square labeled matrix to the given row/column label order.
inline LabeledMatrix in_label_order(const LabeledMatrix& m, const std::vector<std::string>& order) {
  std::vector<int> perm;
  for (const auto& l : order) {
    auto it = std::find(m.row_labels.begin(), m.row_labels.end(), l);
    if (it == m.row_labels.end()) throw std::invalid_argument("in_label_order: missing label " + l);
    perm.push_back(static_cast<int>(it - m.row_labels.begin()));
  }
  return m.reordered(perm);
}

// Submatrix on the given row/column indices (simultaneously).
inline RatMat submatrix(const RatMat& m, const std::vector<int>& ids) {
  RatMat out;
  for (int i : ids) {
    std::vector<Rat> row;
    for (int j : ids) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace marksmith::testutil
