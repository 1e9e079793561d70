#include "dc/text_io.hpp"

#include <cctype>
#include <sstream>

#include "dc/errors.hpp"

namespace dc {

namespace {

struct Cursor {
  const std::string& line;
  std::size_t lineno;
  std::size_t pos = 0;

  void skip(const char* seps) {
    while (pos < line.size() &&
           (std::isspace(static_cast<unsigned char>(line[pos])) ||
            std::string(seps).find(line[pos]) != std::string::npos))
      ++pos;
  }
  bool done() const { return pos >= line.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, lineno, pos + 1);
  }
  int number() {
    std::size_t start = pos;
    if (pos < line.size() && line[pos] == '-') ++pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && line[start] == '-')) {
      pos = start;
      fail("expected an integer");
    }
    try {
      return std::stoi(line.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer out of range");
    }
  }
  void expect(char c) {
    if (pos >= line.size() || line[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

bool ignorable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

template <class Tag>
Matrix<Tag> parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (ignorable(line)) continue;
    Cursor c{line, lineno};
    std::vector<int> row;
    for (c.skip(""); !c.done(); c.skip("")) {
      std::size_t at = c.pos;
      int v = c.number();
      if (v < 0 || (Tag::binary && v > 1)) {
        c.pos = at;
        c.fail(Tag::binary ? "binary entries must be 0 or 1" : "entries must be non-negative");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return Matrix<Tag>::from_rows(rows);
}

template <class Tag>
std::string format_matrix(const Matrix<Tag>& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

template BinaryMatrix parse_matrix<binary_tag>(const std::string&);
template IntegralMatrix parse_matrix<integral_tag>(const std::string&);
template std::string format_matrix(const BinaryMatrix&);
template std::string format_matrix(const IntegralMatrix&);

Display parse_display(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rows;
  std::vector<std::size_t> linenos;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (ignorable(line)) continue;
    std::size_t start = 0;
    for (std::size_t bar; (bar = line.find('|', start)) != std::string::npos; start = bar + 1) {
      rows.push_back(line.substr(0, bar));
      rows.back().replace(0, start, std::string(start, ' '));
      linenos.push_back(lineno);
    }
    rows.push_back(line);
    rows.back().replace(0, start, std::string(start, ' '));
    linenos.push_back(lineno);
  }
  Display d;
  std::vector<int> inner;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Cursor c{rows[r], linenos[r]};
    c.skip("");
    int offset = 0;
    std::size_t colon = rows[r].find(':');
    if (colon != std::string::npos) {
      offset = c.number();
      if (offset < 0) c.fail("negative row offset");
      c.skip("");
      c.expect(':');
    }
    std::vector<int> entries;
    for (c.skip(","); !c.done(); c.skip(",")) entries.push_back(c.number());
    inner.push_back(offset);
    d.rows.push_back(std::move(entries));
  }
  if (!Partition::is_partition(inner))
    throw parse_error("row offsets do not form a partition", linenos.empty() ? 0 : linenos[0], 1);
  d.inner = Partition(inner);
  return d;
}

std::string format_display(const Display& d) {
  std::ostringstream out;
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    if (!d.inner.empty()) out << d.inner[r] << ':';
    for (std::size_t j = 0; j < d.rows[r].size(); ++j) out << (j ? " " : "") << d.rows[r][j];
    out << '\n';
  }
  return out.str();
}

std::map<Square, Square> parse_picture(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<Square, Square> f;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (ignorable(line)) continue;
    Cursor c{line, lineno};
    auto square = [&] {
      c.skip("");
      int r = c.number();
      c.skip("");
      c.expect(',');
      c.skip("");
      int col = c.number();
      return Square{r, col};
    };
    Square s = square();
    c.skip("");
    c.expect('-');
    c.expect('>');
    Square t = square();
    c.skip("");
    if (!c.done()) c.fail("trailing input");
    if (!f.emplace(s, t).second) c.fail("square mapped twice");
  }
  return f;
}

std::string format_picture(const Picture& p) {
  std::ostringstream out;
  for (const auto& [s, t] : p.map)
    out << s.first << ',' << s.second << " -> " << t.first << ',' << t.second << '\n';
  return out.str();
}

}  // namespace dc
