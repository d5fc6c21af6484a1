#include "marksmith/render.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace marksmith {

std::string render_text(const LabeledMatrix& m) {
  auto cell = [](const Rat& r) { return r == 0 ? std::string(".") : rat_to_string(r); };
  size_t label_w = 0;
  for (const auto& l : m.row_labels) label_w = std::max(label_w, l.size());
  std::vector<size_t> col_w(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    col_w[j] = m.col_labels[j].size();
    for (int i = 0; i < m.rows(); ++i) col_w[j] = std::max(col_w[j], cell(m.at(i, j)).size());
  }
  std::ostringstream out;
  out << std::string(label_w, ' ');
  for (int j = 0; j < m.cols(); ++j) {
    out << ' ' << std::string(col_w[j] - m.col_labels[j].size(), ' ') << m.col_labels[j];
  }
  out << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    out << std::string(label_w - m.row_labels[i].size(), ' ') << m.row_labels[i];
    for (int j = 0; j < m.cols(); ++j) {
      std::string c = cell(m.at(i, j));
      out << ' ' << std::string(col_w[j] - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const LabeledMatrix& m) {
  nlohmann::json j;
  j["rows"] = m.row_labels;
  j["cols"] = m.col_labels;
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& r = m.at(i, c);
      if (is_integer(r) && boost::multiprecision::numerator(r) >= INT64_MIN &&
          boost::multiprecision::numerator(r) <= INT64_MAX)
        row.push_back(static_cast<int64_t>(boost::multiprecision::numerator(r)));
      else
        row.push_back(rat_to_string(r));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

LabeledMatrix parse_json_matrix(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LabeledMatrix m;
  m.row_labels = j.at("rows").get<std::vector<std::string>>();
  m.col_labels = j.at("cols").get<std::vector<std::string>>();
  for (const auto& row : j.at("entries")) {
    std::vector<Rat> r;
    for (const auto& e : row) {
      if (e.is_string()) r.push_back(rat_from_string(e.get<std::string>()));
      else r.push_back(Rat(e.get<int64_t>()));
    }
    m.entries.push_back(std::move(r));
  }
  if (m.entries.size() != m.row_labels.size())
    throw std::invalid_argument("parse_json_matrix: row count mismatch");
  for (const auto& r : m.entries)
    if (r.size() != m.col_labels.size())
      throw std::invalid_argument("parse_json_matrix: column count mismatch");
  return m;
}

std::string render_csv(const LabeledMatrix& m) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) { if (c == '"') q += '"'; q += c; }
    return q + "\"";
  };
  std::ostringstream out;
  out << "";
  for (const auto& l : m.col_labels) out << ',' << quote(l);
  out << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    out << quote(m.row_labels[i]);
    for (int j = 0; j < m.cols(); ++j) out << ',' << rat_to_string(m.at(i, j));
    out << '\n';
  }
  return out.str();
}

std::string render(const LabeledMatrix& m, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return render_text(m);
    case OutputFormat::Json: return render_json(m);
    case OutputFormat::Csv: return render_csv(m);
  }
  return {};
}

}  // namespace marksmith
