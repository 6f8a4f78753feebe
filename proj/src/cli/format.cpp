#include "format.hpp"

#include <algorithm>

namespace fhl::cli {

namespace {

bool is_polynomial(const io::Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("vars") && j.contains("m") && j.contains("terms");
}

bool is_cyclotomic(const io::Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("m") && j.contains("coords");
}

bool is_scalar(const io::Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const io::Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

void flatten(const io::Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
  auto sub = [&](const std::string& k) { return key.empty() ? k : key + "." + k; };
  if (is_scalar(j) || is_polynomial(j) || is_cyclotomic(j)) {
    out.emplace_back(key, readable(j));
    return;
  }
  if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const io::Json& e) {
      return is_scalar(e) || is_polynomial(e) || is_cyclotomic(e) ||
             (e.is_array() && std::all_of(e.begin(), e.end(), [](const io::Json& x) { return is_scalar(x); }));
    });
    if (flat) {
      out.emplace_back(key, readable(j));
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], sub(std::to_string(i)), out);
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), sub(it.key()), out);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
  out << '\n';
}

void aligned(const std::vector<std::vector<std::string>>& lines, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& l : lines) {
    if (width.size() < l.size()) width.resize(l.size(), 0);
    for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
  }
  for (const auto& l : lines) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
      s += l[i];
      if (i + 1 < l.size()) s += std::string(width[i] - l[i].size() + 2, ' ');
    }
    out << s << '\n';
  }
}

}  // namespace

std::string readable(const io::Json& j) {
  if (is_polynomial(j)) return io::polynomial_from_json(j).str();
  if (is_cyclotomic(j)) return io::cyclotomic_from_json(j).str();
  if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) {
      bool nested = j[i].is_array();
      std::string item = readable(j[i]);
      s += (i ? (nested || is_polynomial(j[i]) ? "; " : " ") : "") + (nested ? "(" + item + ")" : item);
    }
    return s;
  }
  return scalar(j);
}

void emit(const Output& o, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << o.json.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(o.summary.is_null() ? o.json : o.summary, "", kv);
  if (f == Format::Csv) {
    if (!o.header.empty()) {
      csv_line(o.header, out);
      for (const auto& r : o.rows) csv_line(r, out);
      return;
    }
    out << "key,value\n";
    for (const auto& [k, v] : kv) csv_line({k, v}, out);
    return;
  }
  std::vector<std::vector<std::string>> lines;
  for (const auto& [k, v] : kv) lines.push_back({k, v});
  aligned(lines, out);
  if (!o.header.empty()) {
    out << '\n';
    std::vector<std::vector<std::string>> table{o.header};
    table.insert(table.end(), o.rows.begin(), o.rows.end());
    aligned(table, out);
  }
}

}  // namespace fhl::cli
