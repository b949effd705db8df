#include "ordtop/io.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ordtop {

namespace {

bool label_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '+' || c == '-' || c == '\'';
}

// Cursor over one logical line; cols are 1-based for error reports.
struct LineScan {
  const std::string& text;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }

  std::string label() {
    skip_ws();
    if (pos >= text.size() || !label_start(text[pos])) fail("expected a point name");
    std::size_t start = pos;
    while (pos < text.size() && label_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
  bool try_char(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!try_char(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }
  bool try_str(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }
};

int lookup(const Carrier& c, LineScan& sc) {
  int col = 0;
  sc.skip_ws();
  col = sc.col();
  std::string name = sc.label();
  std::optional<int> idx = c.index_of(name);
  if (!idx) throw ParseError(sc.line, col, "unknown point '" + name + "'");
  return *idx;
}

struct RawSections {
  Carrier carrier;
  bool have_points = false;
  std::optional<SetFamily> opens;
  std::optional<std::vector<std::pair<int, int>>> order_pairs;
  std::optional<std::vector<std::pair<int, int>>> rel_pairs;
  int opens_line = 0;
};

void parse_points(RawSections& out, LineScan& sc) {
  while (!sc.done()) {
    sc.skip_ws();
    int col = sc.col();
    std::string name = sc.label();
    if (out.carrier.index_of(name) >= 0)
      throw ParseError(sc.line, col, "duplicate point '" + name + "'");
    if (static_cast<int>(out.carrier.labels.size()) >= kMaxPoints)
      throw ParseError(sc.line, col, "too many points (limit 20)");
    out.carrier.labels.push_back(name);
  }
  if (out.carrier.labels.empty()) sc.fail("at least one point required");
}

Mask parse_set(const Carrier& c, LineScan& sc) {
  sc.expect('{', "to start a set");
  Mask m = 0;
  while (!sc.try_char('}')) {
    if (sc.done()) sc.fail("unterminated set; expected '}'");
    m |= Mask(1) << lookup(c, sc);
  }
  return m;
}

void parse_opens(RawSections& out, LineScan& sc) {
  SetFamily fam;
  std::vector<Mask> raw;
  while (true) {
    raw.push_back(parse_set(out.carrier, sc));
    if (sc.done()) break;
    sc.expect(',', "between sets");
  }
  fam.sets = raw;
  fam.canonicalize();
  out.opens = fam;
}

void parse_pairs(std::vector<std::pair<int, int>>& pairs, const Carrier& c, LineScan& sc,
                 const char* arrow) {
  if (sc.done()) return;  // bare section header: the identity/empty layer
  while (true) {
    int lhs = lookup(c, sc);
    if (!sc.try_str(arrow)) sc.fail(std::string("expected '") + arrow + "'");
    int rhs = lookup(c, sc);
    pairs.emplace_back(lhs, rhs);
    if (sc.done()) break;
    sc.expect(',', "between pairs");
  }
}

Structure assemble(RawSections& raw) {
  Structure s;
  s.carrier = raw.carrier;
  const int n = s.carrier.size();
  if (raw.opens) {
    if (auto issue = validate_topology(n, *raw.opens))
      throw ParseError(raw.opens_line, 1, "opens: " + issue->describe(s.carrier));
    s.topology = FinTopology::make(n, *raw.opens);
  }
  if (raw.order_pairs) {
    Rel r = Rel::identity(n);
    for (auto [a, b] : *raw.order_pairs) r.set(a, b);
    s.order = FinQoset::make(r.closure());
  }
  if (raw.rel_pairs) {
    Rel r(n);
    for (auto [a, b] : *raw.rel_pairs) r.set(a, b);
    s.relation = r;
  }
  return s;
}

Structure parse_text(const std::string& text) {
  RawSections raw;
  std::istringstream in(text);
  std::string fullline;
  int lineno = 0;
  while (std::getline(in, fullline)) {
    ++lineno;
    if (auto hash = fullline.find('#'); hash != std::string::npos)
      fullline.erase(hash);
    LineScan sc{fullline, lineno};
    if (sc.done()) continue;
    std::size_t colon = fullline.find(':');
    if (colon == std::string::npos) sc.fail("expected 'section: ...'");
    std::string key = fullline.substr(sc.pos, colon - sc.pos);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    sc.pos = colon + 1;
    if (key == "points") {
      if (raw.have_points) sc.fail("duplicate section 'points'");
      parse_points(raw, sc);
      raw.have_points = true;
      continue;
    }
    if (!raw.have_points)
      sc.fail("section '" + key + "' before 'points'");
    if (key == "opens") {
      if (raw.opens) sc.fail("duplicate section 'opens'");
      raw.opens_line = lineno;
      parse_opens(raw, sc);
    } else if (key == "order") {
      if (raw.order_pairs) sc.fail("duplicate section 'order'");
      raw.order_pairs.emplace();
      parse_pairs(*raw.order_pairs, raw.carrier, sc, "<=");
    } else if (key == "relation") {
      if (raw.rel_pairs) sc.fail("duplicate section 'relation'");
      raw.rel_pairs.emplace();
      parse_pairs(*raw.rel_pairs, raw.carrier, sc, "->");
    } else {
      sc.fail("unknown section '" + key + "'");
    }
  }
  if (!raw.have_points) throw ParseError(1, 1, "missing 'points' section");
  return assemble(raw);
}

Structure parse_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
  }
  auto bad = [](const std::string& msg) -> ParseError { return ParseError(1, 1, msg); };
  if (!j.is_object()) throw bad("top-level JSON value must be an object");
  for (auto& [key, val] : j.items()) {
    if (key != "points" && key != "opens" && key != "order" && key != "relation")
      throw bad("unknown JSON key '" + key + "'");
    (void)val;
  }
  if (!j.contains("points") || !j["points"].is_array())
    throw bad("JSON input needs a 'points' array");

  RawSections raw;
  for (auto& p : j["points"]) {
    if (!p.is_string()) throw bad("'points' entries must be strings");
    std::string name = p.get<std::string>();
    if (raw.carrier.index_of(name) >= 0) throw bad("duplicate point '" + name + "'");
    if (static_cast<int>(raw.carrier.labels.size()) >= kMaxPoints)
      throw bad("too many points (limit 20)");
    raw.carrier.labels.push_back(name);
  }
  if (raw.carrier.labels.empty()) throw bad("at least one point required");
  raw.have_points = true;

  auto point = [&](const nlohmann::json& v) -> int {
    if (!v.is_string()) throw bad("point references must be strings");
    std::optional<int> idx = raw.carrier.index_of(v.get<std::string>());
    if (!idx) throw bad("unknown point '" + v.get<std::string>() + "'");
    return *idx;
  };
  if (j.contains("opens")) {
    if (!j["opens"].is_array()) throw bad("'opens' must be an array of arrays");
    SetFamily fam;
    std::vector<Mask> sets;
    for (auto& arr : j["opens"]) {
      if (!arr.is_array()) throw bad("'opens' must be an array of arrays");
      Mask m = 0;
      for (auto& v : arr) m |= Mask(1) << point(v);
      sets.push_back(m);
    }
    fam.sets = sets;
    fam.canonicalize();
    raw.opens = fam;
    raw.opens_line = 1;
  }
  auto pair_list = [&](const nlohmann::json& arr,
                       std::vector<std::pair<int, int>>& out_pairs, const char* what) {
    if (!arr.is_array()) throw bad(std::string("'") + what + "' must be an array of pairs");
    for (auto& pr : arr) {
      if (!pr.is_array() || pr.size() != 2)
        throw bad(std::string("'") + what + "' entries must be two-element arrays");
      out_pairs.emplace_back(point(pr[0]), point(pr[1]));
    }
  };
  if (j.contains("order")) {
    raw.order_pairs.emplace();
    pair_list(j["order"], *raw.order_pairs, "order");
  }
  if (j.contains("relation")) {
    raw.rel_pairs.emplace();
    pair_list(j["relation"], *raw.rel_pairs, "relation");
  }
  return assemble(raw);
}

}  // namespace

Structure parse_structure(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_json_text(text);
    break;
  }
  return parse_text(text);
}

std::string serialize_text(const Structure& s) {
  std::ostringstream out;
  out << "points:";
  for (const auto& l : s.carrier.labels) out << ' ' << l;
  out << '\n';
  if (s.topology) {
    out << "opens:";
    bool first = true;
    for (Mask m : s.topology->opens.sets) {
      out << (first ? " " : ", ") << s.carrier.render_set(m);
      first = false;
    }
    out << '\n';
  }
  if (s.order) {
    out << "order:";
    bool first = true;
    for (int x = 0; x < s.order->n; ++x)
      for (int y = 0; y < s.order->n; ++y)
        if (x != y && s.order->le(x, y)) {
          out << (first ? " " : ", ") << s.carrier.labels[x] << "<=" << s.carrier.labels[y];
          first = false;
        }
    out << '\n';
  }
  if (s.relation) {
    out << "relation:";
    bool first = true;
    for (int x = 0; x < s.relation->n; ++x)
      for (int y = 0; y < s.relation->n; ++y)
        if (s.relation->at(x, y)) {
          out << (first ? " " : ", ") << s.carrier.labels[x] << "->" << s.carrier.labels[y];
          first = false;
        }
    out << '\n';
  }
  return out.str();
}

std::string serialize_json(const Structure& s) {
  nlohmann::json j;
  j["points"] = s.carrier.labels;
  auto set_to_array = [&](Mask m) {
    nlohmann::json arr = nlohmann::json::array();
    for_each_bit(m, [&](int x) { arr.push_back(s.carrier.labels[x]); });
    return arr;
  };
  if (s.topology) {
    nlohmann::json arr = nlohmann::json::array();
    for (Mask m : s.topology->opens.sets) arr.push_back(set_to_array(m));
    j["opens"] = arr;
  }
  if (s.order) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x = 0; x < s.order->n; ++x)
      for (int y = 0; y < s.order->n; ++y)
        if (x != y && s.order->le(x, y))
          arr.push_back({s.carrier.labels[x], s.carrier.labels[y]});
    j["order"] = arr;
  }
  if (s.relation) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x = 0; x < s.relation->n; ++x)
      for (int y = 0; y < s.relation->n; ++y)
        if (s.relation->at(x, y)) arr.push_back({s.carrier.labels[x], s.carrier.labels[y]});
    j["relation"] = arr;
  }
  return j.dump(2) + "\n";
}

}  // namespace ordtop
