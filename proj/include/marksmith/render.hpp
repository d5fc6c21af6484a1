#pragma once

#include <string>

#include "marksmith/matrix.hpp"

namespace marksmith {

// Aligned text with `.` for zero entries, column labels on top and row
// labels on the left.
std::string render_text(const LabeledMatrix& m);

// {"rows": [...], "cols": [...], "entries": [[...]]}; integral entries are
// emitted as numbers, fractions as "p/q" strings.
std::string render_json(const LabeledMatrix& m);
LabeledMatrix parse_json_matrix(const std::string& text);

std::string render_csv(const LabeledMatrix& m);

enum class OutputFormat { Text, Json, Csv };
std::string render(const LabeledMatrix& m, OutputFormat f);

}  // namespace marksmith
