#pragma once

#include "kinsila/catalog.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kinsila::cli {

using Json = nlohmann::ordered_json;
using la::Rational;
using la::Vec;
using lie::LieAlgebra;
using la::operator*;

/// Structural problem in an input file. `line` is 1-based, 0 when unknown;
/// `field` is a JSON pointer, empty for syntax errors.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, std::string field, std::string message)
      : std::runtime_error(format(line, field, message)), line_(line), field_(std::move(field)),
        message_(std::move(message)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& message) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += field + ": ";
    return out + message;
  }

  std::size_t line_;
  std::string field_;
  std::string message_;
};

struct Term {
  std::string basis;
  Rational coeff;
};

struct BracketEntry {
  std::string x, y;
  std::vector<Term> result;
};

/// A Lie algebra description with its Z, s, P roles. Omitted brackets are zero.
struct InputDocument {
  std::string name;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  catalog::Roles roles;
};

namespace detail {

inline std::string pointer_escape(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// Line of the first character of every value, keyed by JSON pointer. The
/// text must already be known to be valid JSON.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {
    ws();
    value("");
  }

  std::size_t line_of(std::string pointer) const {
    for (;;) {
      auto it = lines_.find(pointer);
      if (it != lines_.end()) return it->second;
      const auto cut = pointer.rfind('/');
      if (cut == std::string::npos) return 0;
      pointer.erase(cut);
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void bump() {
    if (peek() == '\n') ++line_;
    ++pos_;
  }
  void ws() {
    while (pos_ < text_.size() && std::string_view(" \t\r\n").find(peek()) != std::string_view::npos) bump();
  }
  std::string string() {
    std::string out;
    bump();  // opening quote
    while (pos_ < text_.size() && peek() != '"') {
      if (peek() == '\\') {
        bump();
        const char c = peek();
        out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
      } else {
        out += peek();
      }
      bump();
    }
    bump();
    return out;
  }
  void value(const std::string& ptr) {
    lines_.emplace(ptr, line_);
    const char c = peek();
    if (c == '{') {
      bump();
      ws();
      while (pos_ < text_.size() && peek() != '}') {
        const std::string key = string();
        ws();
        bump();  // ':'
        ws();
        value(ptr + "/" + pointer_escape(key));
        ws();
        if (peek() == ',') bump();
        ws();
      }
      bump();
    } else if (c == '[') {
      bump();
      ws();
      std::size_t i = 0;
      while (pos_ < text_.size() && peek() != ']') {
        value(ptr + "/" + std::to_string(i++));
        ws();
        if (peek() == ',') bump();
        ws();
      }
      bump();
    } else if (c == '"') {
      string();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(peek()) == std::string_view::npos) bump();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::size_t> lines_;
};

inline std::size_t line_at_byte(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) line += text[i] == '\n';
  return line;
}

}  // namespace detail

/// Parses and structurally checks an input document: JSON shape, declared
/// labels, exact coefficients and consistency of the antisymmetric completion.
inline InputDocument parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    if (auto cut = what.find("] "); cut != std::string::npos) what.erase(0, cut + 2);
    throw InputError(detail::line_at_byte(text, e.byte), "", "malformed JSON: " + what);
  }
  const detail::Locator loc(text);
  auto fail = [&](const std::string& ptr, const std::string& msg) { throw InputError(loc.line_of(ptr), ptr, msg); };
  auto expect_string = [&](const Json& v, const std::string& ptr) -> std::string {
    if (!v.is_string()) fail(ptr, "expected a string");
    return v.get<std::string>();
  };
  auto expect_array = [&](const Json& v, const std::string& ptr) {
    if (!v.is_array()) fail(ptr, "expected an array");
  };

  if (!j.is_object()) fail("", "the document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "$schema" && key != "name" && key != "basis" && key != "brackets" && key != "roles")
      fail("/" + detail::pointer_escape(key), "unknown field");
  for (const char* required : {"name", "basis", "roles"})
    if (!j.contains(required)) fail("", std::string("missing field \"") + required + "\"");

  InputDocument doc;
  doc.name = expect_string(j["name"], "/name");

  expect_array(j["basis"], "/basis");
  if (j["basis"].empty()) fail("/basis", "the basis is empty");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    const std::string ptr = "/basis/" + std::to_string(i);
    std::string label = expect_string(j["basis"][i], ptr);
    if (label.empty()) fail(ptr, "empty label");
    if (!index.emplace(label, i).second) fail(ptr, "label \"" + label + "\" is declared twice");
    doc.basis.push_back(std::move(label));
  }
  const std::size_t n = doc.basis.size();
  auto declared = [&](const Json& v, const std::string& ptr) {
    const std::string label = expect_string(v, ptr);
    auto it = index.find(label);
    if (it == index.end()) fail(ptr, "unknown label \"" + label + "\"");
    return it->second;
  };

  // Canonical [e_i, e_j], i < j, with the pointer of the entry that set it.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Vec, std::string>> seen;
  if (j.contains("brackets")) {
    const Json& bs = j["brackets"];
    expect_array(bs, "/brackets");
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const std::string ptr = "/brackets/" + std::to_string(b);
      const Json& e = bs[b];
      if (!e.is_object()) fail(ptr, "expected an object with x, y and result");
      for (const auto& [key, _] : e.items())
        if (key != "x" && key != "y" && key != "result") fail(ptr + "/" + detail::pointer_escape(key), "unknown field");
      for (const char* required : {"x", "y", "result"})
        if (!e.contains(required)) fail(ptr, std::string("missing field \"") + required + "\"");
      BracketEntry entry;
      const std::size_t x = declared(e["x"], ptr + "/x"), y = declared(e["y"], ptr + "/y");
      entry.x = doc.basis[x];
      entry.y = doc.basis[y];
      expect_array(e["result"], ptr + "/result");
      Vec v = la::zero_vec(n);
      std::set<std::size_t> terms;
      for (std::size_t t = 0; t < e["result"].size(); ++t) {
        const std::string tp = ptr + "/result/" + std::to_string(t);
        const Json& term = e["result"][t];
        if (!term.is_object() || !term.contains("basis") || !term.contains("coeff") || term.size() != 2)
          fail(tp, "expected an object with exactly basis and coeff");
        const std::size_t k = declared(term["basis"], tp + "/basis");
        if (!terms.insert(k).second) fail(tp + "/basis", "label \"" + doc.basis[k] + "\" appears twice in one result");
        const Json& c = term["coeff"];
        if (!c.is_string()) fail(tp + "/coeff", "coefficients are strings; use p/q form, for example \"1/2\"");
        const auto q = la::parse_rational(c.get<std::string>());
        if (!q) fail(tp + "/coeff", "\"" + c.get<std::string>() + "\" is not an exact rational; use p/q form");
        v[k] = *q;
        entry.result.push_back({doc.basis[k], *q});
      }
      if (x == y) {
        if (!la::is_zero(std::span<const Rational>(v)))
          fail(ptr, "[" + entry.x + ", " + entry.x + "] must be zero");
      } else {
        const auto key = std::minmax(x, y);
        Vec canonical = x < y ? v : Rational(-1) * v;
        auto [it, fresh] = seen.try_emplace(key, canonical, ptr);
        if (!fresh && it->second.first != canonical)
          fail(ptr, "conflicts with the entry at line " + std::to_string(loc.line_of(it->second.second)) + " (" +
                        it->second.second + "); [y, x] must be -[x, y]");
      }
      doc.brackets.push_back(std::move(entry));
    }
  }

  const Json& roles = j["roles"];
  if (!roles.is_object()) fail("/roles", "expected an object with Z, s and P");
  for (const auto& [key, _] : roles.items())
    if (key != "Z" && key != "s" && key != "P") fail("/roles/" + detail::pointer_escape(key), "unknown role");
  for (const char* role : {"Z", "s", "P"}) {
    const std::string ptr = std::string("/roles/") + role;
    if (!roles.contains(role)) fail("/roles", std::string("missing role \"") + role + "\"");
    expect_array(roles[role], ptr);
    std::vector<std::string>& out = role[0] == 'Z' ? doc.roles.z : role[0] == 's' ? doc.roles.s : doc.roles.p;
    std::set<std::size_t> once;
    for (std::size_t i = 0; i < roles[role].size(); ++i) {
      const std::size_t k = declared(roles[role][i], ptr + "/" + std::to_string(i));
      if (!once.insert(k).second) fail(ptr + "/" + std::to_string(i), "label listed twice");
      out.push_back(doc.basis[k]);
    }
  }
  return doc;
}

/// Structure constants after antisymmetric completion.
inline lie::StructureConstants structure_constants(const InputDocument& doc) {
  const std::size_t n = doc.basis.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(doc.basis[i], i);
  lie::StructureConstants c(n);
  std::map<std::pair<std::size_t, std::size_t>, Vec> seen;
  for (const auto& e : doc.brackets) {
    const std::size_t x = index.at(e.x), y = index.at(e.y);
    Vec v = la::zero_vec(n);
    for (const auto& t : e.result) v[index.at(t.basis)] += t.coeff;
    if (x == y) continue;
    if (y < x) v = Rational(-1) * v;
    auto [it, fresh] = seen.try_emplace(std::minmax(x, y), v);
    if (!fresh && it->second != v) throw std::invalid_argument("conflicting brackets for [" + e.x + ", " + e.y + "]");
    c.set_bracket(std::min(x, y), std::max(x, y), v);
  }
  return c;
}

inline InputDocument export_document(const catalog::Algebra& a) {
  InputDocument doc;
  const LieAlgebra& L = a.algebra;
  doc.name = std::string(catalog::to_string(a.family)) + "-" + std::to_string(a.space_dim);
  doc.basis = L.labels();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vec v = L.structure().bracket_basis(i, j);
      BracketEntry e{L.labels()[i], L.labels()[j], {}};
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!la::is_zero(v[k])) e.result.push_back({L.labels()[k], v[k]});
      if (!e.result.empty()) doc.brackets.push_back(std::move(e));
    }
  doc.roles = a.roles;
  return doc;
}

inline Json to_json(const InputDocument& doc) {
  Json j;
  j["name"] = doc.name;
  j["basis"] = doc.basis;
  j["brackets"] = Json::array();
  for (const auto& e : doc.brackets) {
    Json r = Json::array();
    for (const auto& t : e.result) r.push_back({{"basis", t.basis}, {"coeff", la::to_string(t.coeff)}});
    j["brackets"].push_back({{"x", e.x}, {"y", e.y}, {"result", std::move(r)}});
  }
  j["roles"] = {{"Z", doc.roles.z}, {"s", doc.roles.s}, {"P", doc.roles.p}};
  return j;
}

/// Canonical text of a document: two-space indentation and a final newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kinsila::cli
