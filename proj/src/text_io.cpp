#include "bandposet/text_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bandposet/errors.hpp"

namespace bandposet {

namespace {

struct Line {
  unsigned number;
  std::vector<std::string> words;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  unsigned number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.words.push_back(w);
    if (line.words.empty() || line.words.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const std::string& source, unsigned line,
                       const std::string& message) {
  throw InputError(source + ":" + std::to_string(line) + ": " + message);
}

unsigned number(const std::string& word, const std::string& source,
                unsigned line) {
  if (word.empty() || word.size() > 9 ||
      word.find_first_not_of("0123456789") != std::string::npos) {
    fail(source, line, "expected a number, got '" + word + "'");
  }
  return static_cast<unsigned>(std::stoul(word));
}

unsigned header(const std::vector<Line>& lines, const char* keyword,
                const std::string& source) {
  if (lines.empty()) fail(source, 1, std::string("missing '") + keyword + "' header");
  const auto& h = lines.front();
  if (h.words.size() != 2 || h.words[0] != keyword) {
    fail(source, h.number, std::string("expected '") + keyword + " <n>'");
  }
  const unsigned n = number(h.words[1], source, h.number);
  if (n > kMaxElements) fail(source, h.number, "at most 64 elements");
  return n;
}

}  // namespace

Poset parse_poset(const std::string& text, const std::string& source) {
  const auto lines = tokenize(text);
  const unsigned n = header(lines, "poset", source);
  std::vector<Cover> covers;
  std::vector<unsigned> line_of;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words.size() != 3 || l.words[0] != "cover") {
      fail(source, l.number, "expected 'cover <a> <b>'");
    }
    const unsigned a = number(l.words[1], source, l.number);
    const unsigned b = number(l.words[2], source, l.number);
    if (a >= n || b >= n) fail(source, l.number, "element out of range");
    if (a == b) fail(source, l.number, "an element cannot cover itself");
    covers.emplace_back(a, b);
    line_of.push_back(l.number);
  }
  Poset p;
  try {
    p = Poset::from_covers(n, covers);
  } catch (const AxiomError& e) {
    throw InputError(source + ": " + e.what());
  }
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto [a, b] = covers[i];
    if (!p.covers(a, b)) {
      const auto between = p.up(a) & p.down(b);
      Element mid = a;
      for (Element c : between) {
        if (c != a && c != b) {
          mid = c;
          break;
        }
      }
      fail(source, line_of[i],
           "(" + std::to_string(a) + ", " + std::to_string(b) +
               ") is not a cover: " + std::to_string(mid) + " lies between");
    }
  }
  return p;
}

std::string emit_poset(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << "\n";
  for (auto [a, b] : p.cover_pairs()) out << "cover " << a << " " << b << "\n";
  return out.str();
}

Poset parse_poset_file(const std::string& path) {
  return parse_poset(read_file(path), path);
}

BandOp parse_band(const std::string& text, const std::string& source) {
  const auto lines = tokenize(text);
  const unsigned n = header(lines, "band", source);
  if (lines.size() != n + 1) {
    fail(source, lines.back().number,
         "expected " + std::to_string(n) + " rows, found " +
             std::to_string(lines.size() - 1));
  }
  std::vector<Element> table;
  for (unsigned x = 0; x < n; ++x) {
    const auto& l = lines[x + 1];
    if (l.words.size() != n) {
      fail(source, l.number,
           "row " + std::to_string(x) + " has " +
               std::to_string(l.words.size()) + " entries, expected " +
               std::to_string(n));
    }
    for (const auto& w : l.words) {
      const unsigned v = number(w, source, l.number);
      if (v >= n) {
        fail(source, l.number,
             "row " + std::to_string(x) + ": entry " + w + " out of range");
      }
      table.push_back(v);
    }
  }
  return BandOp(n, std::move(table));
}

BandOp parse_band_file(const std::string& path) {
  return parse_band(read_file(path), path);
}

std::string emit_band(const BandOp& op) {
  std::ostringstream out;
  out << "band " << op.size() << "\n";
  for (Element x = 0; x < op.size(); ++x) {
    for (Element y = 0; y < op.size(); ++y) {
      out << (y ? " " : "") << op(x, y);
    }
    out << "\n";
  }
  return out.str();
}

std::string hasse_dot(const Poset& p,
                      const std::optional<std::vector<std::string>>& labels) {
  if (labels && labels->size() != p.size()) {
    throw InputError("need one label per element");
  }
  const auto h = heights(p);
  unsigned top_rank = 0;
  for (auto v : h) top_rank = std::max(top_rank, v);
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=\""
        << (labels ? (*labels)[x] : std::to_string(x)) << "\"];\n";
  }
  for (unsigned r = 0; p.size() > 0 && r <= top_rank; ++r) {
    out << "  { rank=same;";
    for (Element x = 0; x < p.size(); ++x) {
      if (h[x] == r) out << " n" << x << ";";
    }
    out << " }\n";
  }
  for (auto [a, b] : p.cover_pairs()) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << contents;
  if (!out) throw InputError(path + ": write failed");
}

}  // namespace bandposet
