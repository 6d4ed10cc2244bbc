#include "eqsig/move_script.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "eqsig/error.hpp"
#include "eqsig/integer.hpp"

namespace eqsig {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_words(std::string_view stmt, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < stmt.size()) {
    while (i < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[i]))) ++i;
    const std::size_t start = i;
    while (i < stmt.size() && !std::isspace(static_cast<unsigned char>(stmt[i]))) ++i;
    if (i > start) out.push_back({stmt.substr(start, i - start), base + start});
  }
  return out;
}

struct Field {
  std::string_view value;
  std::size_t offset;
};

class Statement {
 public:
  Statement(std::string_view kind, std::size_t offset, std::map<std::string, Field> fields)
      : kind_(kind), offset_(offset), fields_(std::move(fields)) {}

  void allow(std::set<std::string> keys) const {
    for (const auto& [key, field] : fields_)
      if (!keys.contains(key))
        throw ScriptError(field.offset, "unknown key '" + key + "' for move " + std::string(kind_));
  }

  bool has(const std::string& key) const { return fields_.contains(key); }

  std::size_t index(const std::string& key) const {
    const Field& f = require(key);
    auto v = parse_integer(f.value);
    if (!v || *v < 1 || f.value[0] == '+')
      throw ScriptError(f.offset, key + " must be a positive integer");
    auto narrow = to_int64(*v);
    if (!narrow) throw ScriptError(f.offset, key + " is too large");
    return static_cast<std::size_t>(*narrow);
  }

  int sign(const std::string& key) const {
    const Field& f = require(key);
    if (f.value == "+1" || f.value == "1") return 1;
    if (f.value == "-1") return -1;
    throw ScriptError(f.offset, key + " must be +1 or -1");
  }

  CrossingColor color() const {
    const Field& f = require("color");
    auto c = color_from_token(std::string(f.value));
    if (!c) throw ScriptError(f.offset, "color must be unicolored or bicolored");
    return *c;
  }

  std::optional<int> eps(CrossingColor color) const {
    if (color == CrossingColor::Bicolored) {
      if (!has("eps")) throw ScriptError(offset_, "eps is required for a bicolored move");
      return sign("eps");
    }
    if (has("eps")) throw ScriptError(fields_.at("eps").offset, "eps given for a unicolored move");
    return std::nullopt;
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const Field& f = fields_.at(key);
    if (f.value == "true") return true;
    if (f.value == "false") return false;
    throw ScriptError(f.offset, key + " must be true or false");
  }

  std::size_t offset() const { return offset_; }

 private:
  const Field& require(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end())
      throw ScriptError(offset_, "move " + std::string(kind_) + " requires " + key + "=");
    return it->second;
  }

  std::string_view kind_;
  std::size_t offset_;
  std::map<std::string, Field> fields_;
};

MoveSpec parse_statement(std::string_view stmt, std::size_t base) {
  const auto words = split_words(stmt, base);
  const Token& head = words.front();
  std::map<std::string, Field> fields;
  for (std::size_t w = 1; w < words.size(); ++w) {
    const auto eq = words[w].text.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == words[w].text.size())
      throw ScriptError(words[w].offset, "expected key=value, got '" + std::string(words[w].text) + "'");
    std::string key(words[w].text.substr(0, eq));
    if (!fields.emplace(key, Field{words[w].text.substr(eq + 1), words[w].offset + eq + 1}).second)
      throw ScriptError(words[w].offset, "duplicate key '" + key + "'");
  }
  Statement s(head.text, head.offset, std::move(fields));

  if (head.text == "B") {
    s.allow({"k", "sign"});
    return TypeB{s.index("k"), s.sign("sign")};
  }
  if (head.text == "A1") {
    s.allow({"k", "sign", "color", "eps"});
    TypeA1 m{s.index("k"), s.sign("sign"), s.color(), std::nullopt};
    m.old_epsilon = s.eps(m.color);
    return m;
  }
  if (head.text == "A2") {
    s.allow({"i", "j", "sign", "color", "eps", "mixed"});
    TypeA2 m{s.index("i"), s.index("j"), s.sign("sign"), s.color(), std::nullopt, s.flag("mixed")};
    m.old_epsilon = s.eps(m.color);
    if (!m.mixed && m.i == m.j) throw ScriptError(head.offset, "A2 requires i != j");
    return m;
  }
  if (head.text == "C") {
    s.allow({"sign", "color"});
    return TypeC{s.sign("sign"), s.color()};
  }
  throw ScriptError(head.offset, "unknown move '" + std::string(head.text) + "' (expected B, A1, A2 or C)");
}

std::string signed_text(int v) { return v > 0 ? "+1" : "-1"; }

std::string color_text(CrossingColor color, std::optional<int> eps) {
  std::string out = " color=" + to_token(color);
  if (eps) out += " eps=" + signed_text(*eps);
  return out;
}

}  // namespace

std::vector<MoveSpec> parse_move_script(std::string_view text) {
  std::vector<MoveSpec> moves;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view stmt = text.substr(start, end - start);
    if (!split_words(stmt, start).empty()) moves.push_back(parse_statement(stmt, start));
    start = end + 1;
  }
  return moves;
}

std::string format_move(const MoveSpec& m) {
  if (const auto* b = std::get_if<TypeB>(&m))
    return "B k=" + std::to_string(b->k) + " sign=" + signed_text(b->delta);
  if (const auto* a = std::get_if<TypeA1>(&m))
    return "A1 k=" + std::to_string(a->k) + " sign=" + signed_text(a->delta) +
           color_text(a->color, a->old_epsilon);
  if (const auto* a = std::get_if<TypeA2>(&m))
    return "A2 i=" + std::to_string(a->i) + " j=" + std::to_string(a->j) +
           " sign=" + signed_text(a->delta) + color_text(a->color, a->old_epsilon) +
           (a->mixed ? " mixed=true" : "");
  const auto& c = std::get<TypeC>(m);
  return "C sign=" + signed_text(c.s) + " color=" + to_token(c.color);
}

std::string format_move_script(const std::vector<MoveSpec>& moves) {
  std::string out;
  for (const auto& m : moves) {
    if (!out.empty()) out += "; ";
    out += format_move(m);
  }
  return out;
}

}  // namespace eqsig
