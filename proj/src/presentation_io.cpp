#include "hbt/presentation_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "hbt/error.hpp"

namespace hbt {

namespace {

struct Token {
  enum class Kind { Word, Number, Punct } kind;
  std::string text;
  long long number = 0;
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Kind::Word, std::string(line.substr(i, j - i))});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      Token t{Token::Kind::Number, std::string(line.substr(i, j - i))};
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, t.number);
      if (ec != std::errc{}) {
        throw Error(ErrorCode::SyntaxError, "number out of range: " + t.text, "line " + std::to_string(line_no));
      }
      out.push_back(std::move(t));
      i = j;
    } else if (c == '(' || c == ')' || c == ',' || c == '-' || c == '+') {
      out.push_back({Token::Kind::Punct, std::string(1, c)});
      ++i;
    } else {
      throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'",
                  "line " + std::to_string(line_no));
    }
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no) : tokens_(std::move(tokens)), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why, locator());
  }
  std::string locator() const { return "line " + std::to_string(line_no_); }

  bool done() const { return pos_ == tokens_.size(); }
  bool peek_punct(char c) const {
    return !done() && tokens_[pos_].kind == Token::Kind::Punct && tokens_[pos_].text[0] == c;
  }
  bool peek_word(std::string_view w) const {
    return !done() && tokens_[pos_].kind == Token::Kind::Word && tokens_[pos_].text == w;
  }

  std::string word() {
    if (done() || tokens_[pos_].kind != Token::Kind::Word) fail("expected a keyword");
    return tokens_[pos_++].text;
  }
  void keyword(std::string_view w) {
    if (!peek_word(w)) fail("expected '" + std::string(w) + "'");
    ++pos_;
  }
  void punct(char c) {
    if (!peek_punct(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    bool negative = false;
    if (peek_punct('-')) {
      negative = true;
      ++pos_;
    }
    if (done() || tokens_[pos_].kind != Token::Kind::Number) fail("expected a number");
    const long long v = tokens_[pos_++].number;
    if (v > 1'000'000'000) fail("number too large");
    return static_cast<int>(negative ? -v : v);
  }
  int natural() {
    if (peek_punct('-')) fail("expected a non-negative number");
    return integer();
  }
  Sign sign() {
    if (peek_punct('+')) {
      ++pos_;
      return Sign::Plus;
    }
    if (peek_punct('-')) {
      ++pos_;
      return Sign::Minus;
    }
    fail("expected '+' or '-'");
  }
  MarkedPoint point() {
    punct('(');
    MarkedPoint m;
    m.hole = natural();
    punct(',');
    m.point = natural();
    punct(')');
    return m;
  }
  void end() {
    if (!done()) fail("unexpected '" + tokens_[pos_].text + "'");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_no_;
};

}  // namespace

PresentationDocument parse_presentation(std::string_view text) {
  PresentationDocument doc;
  HandlebodyPresentation& p = doc.presentation;
  std::optional<int> genus_line;
  std::map<int, int> disk_line;
  std::map<int, int> identify_line;
  std::map<int, std::pair<int, bool>> identify;
  std::map<int, int> anchor_line;
  std::map<int, Sign> anchors;
  std::map<int, int> disk_chords;
  std::map<std::string, int> element_line;
  std::optional<int> holes_line;
  std::optional<int> closed_line;
  std::map<int, std::pair<int, std::vector<std::pair<int, int>>>> configs;  // disk -> (line, pairs)
  std::vector<Face> faces;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    LineParser lp(std::move(tokens), line_no);
    auto once = [&](std::optional<int>& seen, const char* what) {
      if (seen) lp.fail(std::string("duplicate '") + what + "' directive (first on line " + std::to_string(*seen) + ")");
      seen = line_no;
    };
    const std::string directive = lp.word();
    if (directive == "genus") {
      once(genus_line, "genus");
      p.genus = lp.natural();
      element_line["genus"] = line_no;
      element_line["disks"] = line_no;
    } else if (directive == "disk") {
      const int i = lp.natural();
      lp.keyword("n");
      const int n = lp.natural();
      if (disk_line.contains(i)) lp.fail("disk " + std::to_string(i) + " declared twice");
      disk_line[i] = line_no;
      disk_chords[i] = n;
      element_line["disk " + std::to_string(i)] = line_no;
    } else if (directive == "holes") {
      once(holes_line, "holes");
      while (!lp.done()) {
        lp.punct('(');
        HoleTag t;
        t.disk = lp.natural();
        lp.punct(',');
        t.copy = lp.sign() == Sign::Plus ? Copy::Plus : Copy::Minus;
        lp.punct(')');
        element_line["hole " + std::to_string(p.holes.size())] = line_no;
        p.holes.push_back(t);
      }
      if (p.holes.empty()) lp.fail("'holes' needs at least one tag");
      element_line["holes"] = line_no;
    } else if (directive == "identify") {
      const int i = lp.natural();
      lp.keyword("offset");
      const int o = lp.integer();
      bool reversed = false;
      if (lp.peek_word("reversed")) {
        lp.word();
        reversed = true;
      }
      if (identify.contains(i)) lp.fail("disk " + std::to_string(i) + " identified twice");
      identify[i] = {o, reversed};
      identify_line[i] = line_no;
    } else if (directive == "outer") {
      if (lp.done()) lp.fail("'outer' needs at least one arc");
      while (!lp.done()) {
        const MarkedPoint a = lp.point();
        lp.punct('-');
        const MarkedPoint b = lp.point();
        element_line["outer arc " + std::to_string(p.outer_arcs.size())] = line_no;
        p.outer_arcs.emplace_back(a, b);
      }
    } else if (directive == "closed") {
      once(closed_line, "closed");
      p.closed_outer_components = lp.natural();
      element_line["closed"] = line_no;
    } else if (directive == "anchor") {
      const int i = lp.natural();
      const Sign s = lp.sign();
      if (anchors.contains(i)) lp.fail("disk " + std::to_string(i) + " anchored twice");
      anchors[i] = s;
      anchor_line[i] = line_no;
    } else if (directive == "face") {
      Face f;
      while (!lp.done()) f.push_back(lp.point());
      element_line["face " + std::to_string(faces.size())] = line_no;
      if (faces.empty()) element_line["faces"] = line_no;
      faces.push_back(std::move(f));
    } else if (directive == "config") {
      const int i = lp.natural();
      lp.keyword("pairs");
      std::vector<std::pair<int, int>> pairs;
      while (!lp.done()) {
        lp.punct('(');
        const int a = lp.natural();
        lp.punct(',');
        const int b = lp.natural();
        lp.punct(')');
        pairs.emplace_back(a, b);
      }
      if (configs.contains(i)) lp.fail("configuration for disk " + std::to_string(i) + " given twice");
      configs[i] = {line_no, std::move(pairs)};
      element_line["config " + std::to_string(i)] = line_no;
    } else {
      lp.fail("unknown directive '" + directive + "'");
    }
    lp.end();
  }

  auto semantic = [&](ErrorCode cause, const std::string& why, const std::string& element) -> Error {
    const auto it = element_line.find(element);
    std::string where = it != element_line.end() ? "line " + std::to_string(it->second) : std::string("document");
    if (!element.empty()) where += " (" + element + ")";
    return Error(ErrorCode::SemanticError, cause, why, where);
  };

  if (!genus_line) throw semantic(ErrorCode::InvalidArgument, "missing 'genus' directive", "");
  for (const auto& [i, line] : disk_line) {
    if (i >= p.genus) throw semantic(ErrorCode::InvalidArgument, "disk index beyond genus", "disk " + std::to_string(i));
  }
  for (int i = 0; i < p.genus; ++i) {
    if (!disk_line.contains(i)) {
      throw semantic(ErrorCode::InvalidArgument, "missing 'disk " + std::to_string(i) + "' directive", "genus");
    }
    DiskSpec d;
    d.chords = disk_chords[i];
    if (!identify.contains(i)) {
      throw semantic(ErrorCode::BadIdentification, "missing 'identify " + std::to_string(i) + "' directive",
                     "disk " + std::to_string(i));
    }
    d.offset = identify[i].first;
    d.reversed = identify[i].second;
    d.anchor = anchors.contains(i) ? anchors[i] : Sign::Plus;
    p.disks.push_back(d);
    element_line.try_emplace("disk " + std::to_string(i), disk_line[i]);
  }
  for (const auto& [i, line] : identify_line) {
    if (i >= p.genus) {
      throw Error(ErrorCode::SemanticError, ErrorCode::BadIdentification, "identify refers to unknown disk",
                  "line " + std::to_string(line));
    }
    if (!identify[i].second) element_line["disk " + std::to_string(i)] = line;
  }
  for (const auto& [i, line] : anchor_line) {
    if (i >= p.genus) {
      throw Error(ErrorCode::SemanticError, ErrorCode::InvalidArgument, "anchor refers to unknown disk",
                  "line " + std::to_string(line));
    }
  }
  if (!faces.empty()) p.faces = std::move(faces);

  try {
    validate_presentation(p);
  } catch (const Error& e) {
    throw semantic(e.code(), e.what(), e.locator());
  }

  if (!configs.empty()) {
    Configuration c;
    for (int i = 0; i < p.genus; ++i) {
      const auto it = configs.find(i);
      if (it == configs.end()) {
        throw semantic(ErrorCode::InvalidArgument, "configuration lacks disk " + std::to_string(i),
                       "config " + std::to_string(configs.begin()->first));
      }
      try {
        c.diagrams.push_back(ChordDiagram::from_pairs(p.disks[static_cast<std::size_t>(i)].chords, it->second.second));
      } catch (const Error& e) {
        throw semantic(e.code(), e.what(), "config " + std::to_string(i));
      }
    }
    for (const auto& [i, entry] : configs) {
      if (i >= p.genus) throw semantic(ErrorCode::InvalidArgument, "configuration for unknown disk", "config " + std::to_string(i));
    }
    doc.config = std::move(c);
  }
  return doc;
}

namespace {

std::string point_text(const MarkedPoint& m) {
  return "(" + std::to_string(m.hole) + "," + std::to_string(m.point) + ")";
}

}  // namespace

std::string serialize(const PresentationDocument& doc) {
  const HandlebodyPresentation& p = doc.presentation;
  std::ostringstream os;
  os << "genus " << p.genus << "\n";
  for (std::size_t i = 0; i < p.disks.size(); ++i) {
    const DiskSpec& d = p.disks[i];
    os << "disk " << i << " n " << d.chords << "\n";
    os << "identify " << i << " offset " << d.offset << (d.reversed ? " reversed" : "") << "\n";
    os << "anchor " << i << " " << sign_char(d.anchor) << "\n";
  }
  os << "holes";
  for (const HoleTag& t : p.holes) os << " (" << t.disk << "," << copy_char(t.copy) << ")";
  os << "\n";
  for (const auto& [a, b] : p.outer_arcs) os << "outer " << point_text(a) << "-" << point_text(b) << "\n";
  if (p.closed_outer_components != 0) os << "closed " << p.closed_outer_components << "\n";
  if (p.faces) {
    for (const Face& f : *p.faces) {
      os << "face";
      for (const MarkedPoint& m : f) os << " " << point_text(m);
      os << "\n";
    }
  }
  if (doc.config) {
    for (std::size_t i = 0; i < doc.config->diagrams.size(); ++i) {
      os << "config " << i << " pairs " << doc.config->diagrams[i].label() << "\n";
    }
  }
  return os.str();
}

std::string input_digest(const PresentationDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string format_validation(const ValidationReport& report) {
  std::string out = "valid\n";
  for (const std::string& w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

namespace {

std::string euler_text(const std::vector<int>& euler) {
  std::string s = "(";
  for (std::size_t i = 0; i < euler.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(euler[i]);
  }
  return s + ")";
}

std::string node_text(const TransitionGraph& g, int node) {
  return "#" + std::to_string(node) + " " + g.nodes[static_cast<std::size_t>(node)].label();
}

}  // namespace

std::string format_report(const ClassificationReport& r, const TransitionGraph& g, const std::string& digest) {
  std::ostringstream os;
  os << "handlebody classification\n";
  os << "digest: " << digest << "\n";
  os << "genus: " << r.genus << "\n";
  os << "chords:";
  for (int n : r.chords) os << " " << n;
  os << "\n";
  os << "configurations: " << r.total_configurations << "\n";
  os << "potentially-allowable: " << r.potentially_allowable_count << "\n";
  os << "transitions: " << r.transition_count << "\n";
  os << "components: " << r.component_count << "\n";
  os << "tight: " << r.tight_count << "\n";
  for (const ComponentSummary& c : r.components) {
    os << "\ncomponent " << c.id << ": " << (c.allowable ? "allowable" : "disallowed") << ", size " << c.size
       << ", euler " << euler_text(c.euler);
    if (c.allowable) {
      if (c.universally_tight) {
        os << ", universally tight " << (r.genus == 1 ? "(iff, genus 1)" : "(sufficient)");
      } else {
        os << (r.genus == 1 ? ", not universally tight" : ", universal tightness undetermined");
      }
    }
    os << "\n";
    os << "  representative: " << node_text(g, c.representative) << "\n";
    os << "  members:";
    for (int m : c.members) os << " #" << m;
    os << "\n";
    if (!c.allowable) {
      os << "  witness:\n";
      for (std::size_t k = 0; k < c.witness_path.size(); ++k) {
        const int node = c.witness_path[k];
        if (k > 0) os << "    via " << c.witness_steps[k - 1].label() << "\n";
        os << "    " << node_text(g, node) << " sphere-curves " << g.sphere_counts[static_cast<std::size_t>(node)]
           << "\n";
      }
    }
  }
  return os.str();
}

std::string format_graph_dot(const TransitionGraph& g) {
  std::ostringstream os;
  os << "digraph transitions {\n";
  for (int i = 0; i < g.node_count(); ++i) {
    const int comp = g.component_of[static_cast<std::size_t>(i)];
    os << "  n" << i << " [label=\"" << g.nodes[static_cast<std::size_t>(i)].label() << "\", potential="
       << (g.potential[static_cast<std::size_t>(i)] ? "true" : "false")
       << ", allowable=" << (g.allowable[static_cast<std::size_t>(comp)] ? "true" : "false")
       << ", component=" << comp << "];\n";
  }
  for (const Edge& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.witness.label() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_verdict(const TightnessVerdict& v, const Configuration& c, const SurfaceModel& model) {
  std::ostringstream os;
  os << (v.tight ? "TIGHT" : "OVERTWISTED") << "\n";
  os << "configuration: " << c.label() << "\n";
  if (v.tight) {
    os << "every reachable configuration is potentially allowable\n";
  } else if (v.path.empty()) {
    os << "the cut-open sphere carries " << model.sphere_count(c) << " dividing curves\n";
  } else {
    os << "witness:\n";
    for (std::size_t k = 0; k < v.path.size(); ++k) {
      if (k > 0) os << "  via " << v.steps[k - 1].label() << "\n";
      os << "  " << v.path[k].label() << " sphere-curves " << model.sphere_count(v.path[k]) << "\n";
    }
  }
  return os.str();
}

std::string format_diagrams(int n) {
  const std::vector<ChordDiagram> all = enumerate_diagrams(n);
  std::ostringstream os;
  os << "n " << n << " count " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    os << "#" << i << " " << all[i].label() << " euler " << euler_invariant(all[i]) << "\n";
  }
  return os.str();
}

std::pair<std::int64_t, std::int64_t> parse_slope(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::BadSlope, "cannot read slope '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  const auto slash = text.find('/', i);
  auto read = [&](std::string_view s, std::int64_t& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) throw bad();
  };
  if (slash == std::string_view::npos) {
    read(text.substr(i), num);
  } else {
    read(text.substr(i, slash - i), num);
    read(text.substr(slash + 1), den);
  }
  if (den == 0) throw bad();
  if (!negative || num == 0) {
    throw Error(ErrorCode::BadSlope, "slope '" + std::string(text) + "' is not negative");
  }
  return {num, den};
}

}  // namespace hbt
