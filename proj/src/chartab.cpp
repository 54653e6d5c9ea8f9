#include <cctype>
#include <fstream>
#include <sstream>

#include "swdeg/errors.hpp"
#include "swdeg/group.hpp"

namespace swdeg {

namespace {

// One whitespace-tokenized logical line with its 1-based source position.
struct Line {
  std::size_t number;
  std::string text;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail(const Line& line, std::size_t col, const std::string& msg) {
  throw ParseError(msg, line.number, col);
}

struct LineScanner {
  const Line& line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.text.size() &&
           std::isspace(static_cast<unsigned char>(line.text[pos]))) {
      ++pos;
    }
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.text.size() &&
           !std::isspace(static_cast<unsigned char>(line.text[pos]))) {
      ++pos;
    }
    if (pos == start) fail(line, pos + 1, "expected a token");
    return line.text.substr(start, pos - start);
  }

  long integer(const std::string& what) {
    skip_ws();
    std::size_t col = pos + 1;
    std::string w = word();
    try {
      std::size_t used = 0;
      long v = std::stol(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      fail(line, col, "expected integer " + what + ", got '" + w + "'");
    }
  }

  void expect(const std::string& keyword) {
    skip_ws();
    std::size_t col = pos + 1;
    if (word() != keyword) fail(line, col, "expected keyword '" + keyword + "'");
  }

  std::string rest() {
    skip_ws();
    return line.text.substr(pos);
  }

  bool done() {
    skip_ws();
    return pos >= line.text.size();
  }
};

}  // namespace

CharacterTable parse_character_table(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string text = strip_comment(raw);
    if (!blank(text)) lines.push_back({lineno, text});
  }
  if (lines.empty()) throw ParseError("empty character table", 1, 1);

  CharacterTable table;
  std::size_t li = 0;
  auto next = [&]() -> const Line& {
    if (li >= lines.size()) {
      throw ParseError("unexpected end of file", lineno + 1, 1);
    }
    return lines[li++];
  };

  {
    LineScanner s{next()};
    s.expect("group");
    table.name = s.word();
  }
  {
    LineScanner s{next()};
    s.expect("order");
    table.order = s.integer("group order");
  }
  long num_classes = 0;
  {
    LineScanner s{next()};
    s.expect("classes");
    num_classes = s.integer("class count");
    if (num_classes < 1) fail(s.line, 1, "class count must be positive");
  }
  for (long c = 0; c < num_classes; ++c) {
    LineScanner s{next()};
    s.expect("class");
    ConjClass cls;
    cls.label = s.word();
    s.expect("size");
    cls.size = s.integer("class size");
    s.expect("ord");
    cls.element_order = s.integer("element order");
    if (!s.done()) fail(s.line, s.pos + 1, "trailing text after class line");
    table.classes.push_back(std::move(cls));
  }
  while (li < lines.size()) {
    LineScanner s{next()};
    s.expect("irrep");
    table.irrep_labels.push_back(s.word());
    s.expect("dim");
    table.dims.push_back(s.integer("irrep dimension"));
    s.skip_ws();
    if (s.pos >= s.line.text.size() || s.line.text[s.pos] != ':') {
      fail(s.line, s.pos + 1, "expected ':' before character values");
    }
    ++s.pos;
    std::vector<Cyclotomic> row;
    std::string values = s.rest();
    std::size_t start = 0;
    while (true) {
      std::size_t bar = values.find('|', start);
      std::string piece = values.substr(start, bar == std::string::npos
                                                   ? std::string::npos
                                                   : bar - start);
      try {
        row.push_back(Cyclotomic::parse(piece));
      } catch (const ParseError& e) {
        fail(s.line, s.pos + start + e.column(),
             "bad character value '" + piece + "'");
      }
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (row.size() != static_cast<std::size_t>(num_classes)) {
      fail(s.line, 1,
           "irrep row has " + std::to_string(row.size()) + " values, expected " +
               std::to_string(num_classes));
    }
    table.values.push_back(std::move(row));
  }
  table.validate();
  return table;
}

CharacterTable parse_character_table(const std::string& text) {
  std::istringstream in(text);
  return parse_character_table(in);
}

CharacterTable parse_character_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open character table file: " + path);
  return parse_character_table(in);
}

}  // namespace swdeg
