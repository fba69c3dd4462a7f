#pragma once

// Matrix documents (plain text and JSON) and a small order-preserving JSON
// value whose numbers keep their exact decimal text.
//
// Plain text: one row per line, entries are whitespace-separated decimal
// integers with an optional sign, blank lines are ignored, and all rows
// must have the same length. Dimensions are inferred, so a matrix with zero
// rows or columns reads back as 0x0; use JSON to carry empty shapes.
//
// JSON: {"rows": d, "cols": n, "entries": [[...], ...]}. Entries are JSON
// integers of any size; decimal strings are accepted as well.

#include "hypertoric/error.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/integer.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hypertoric {

class ParseError : public Error {
 public:
  using Error::Error;
};

class Json {
 public:
  struct Number {
    std::string text;
  };
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() = default;

  static Json null() { return Json(); }
  static Json boolean(bool b) { return Json(Value(b)); }
  static Json number(const Integer& x) { return Json(Value(Number{x.str()})); }
  static Json number(std::uint64_t x) { return Json(Value(Number{std::to_string(x)})); }
  static Json raw_number(std::string text) { return Json(Value(Number{std::move(text)})); }
  static Json string(std::string s) { return Json(Value(std::move(s))); }
  static Json array(Array a = {}) { return Json(Value(std::move(a))); }
  static Json object() { return Json(Value(Object{})); }

  template <typename Range>
  static Json numbers(const Range& xs) {
    Array a;
    for (const auto& x : xs) a.push_back(number(x));
    return array(std::move(a));
  }

  /// Appends a member; keys keep insertion order.
  Json& set(std::string key, Json value) {
    std::get<Object>(v_).emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Json& push(Json value) {
    std::get<Array>(v_).push_back(std::move(value));
    return *this;
  }

  bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_number() const { return std::holds_alternative<Number>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_object() const { return std::holds_alternative<Object>(v_); }

  bool as_bool() const { return std::get<bool>(v_); }
  const std::string& number_text() const { return std::get<Number>(v_).text; }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const Array& as_array() const { return std::get<Array>(v_); }
  const Object& as_object() const { return std::get<Object>(v_); }
  Array& as_array() { return std::get<Array>(v_); }
  Object& as_object() { return std::get<Object>(v_); }

  const Json* find(std::string_view key) const {
    if (!is_object()) return nullptr;
    for (const auto& [k, v] : as_object())
      if (k == key) return &v;
    return nullptr;
  }

  /// Pretty prints with two-space indentation. Arrays holding only scalars
  /// stay on one line.
  void dump(std::ostream& os, int indent = 0) const {
    std::visit([&](const auto& x) { dump_value(os, x, indent); }, v_);
  }

  std::string dump() const {
    std::ostringstream os;
    dump(os);
    return os.str();
  }

  static Json parse(std::string_view text);

 private:
  using Value = std::variant<std::nullptr_t, bool, Number, std::string, Array, Object>;
  explicit Json(Value v) : v_(std::move(v)) {}

  bool is_scalar() const { return !is_array() && !is_object(); }

  static void pad(std::ostream& os, int indent) { os << std::string(indent * 2, ' '); }

  static void dump_value(std::ostream& os, std::nullptr_t, int) { os << "null"; }
  static void dump_value(std::ostream& os, bool b, int) { os << (b ? "true" : "false"); }
  static void dump_value(std::ostream& os, const Number& n, int) { os << n.text; }
  static void dump_value(std::ostream& os, const std::string& s, int) { write_string(os, s); }

  static void dump_value(std::ostream& os, const Array& a, int indent) {
    if (a.empty()) {
      os << "[]";
      return;
    }
    bool flat = true;
    for (const auto& x : a) flat = flat && x.is_scalar();
    if (flat) {
      os << '[';
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        a[i].dump(os, indent);
      }
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
      pad(os, indent + 1);
      a[i].dump(os, indent + 1);
      os << (i + 1 < a.size() ? ",\n" : "\n");
    }
    pad(os, indent);
    os << ']';
  }

  static void dump_value(std::ostream& os, const Object& o, int indent) {
    if (o.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    for (std::size_t i = 0; i < o.size(); ++i) {
      pad(os, indent + 1);
      write_string(os, o[i].first);
      os << ": ";
      o[i].second.dump(os, indent + 1);
      os << (i + 1 < o.size() ? ",\n" : "\n");
    }
    pad(os, indent);
    os << '}';
  }

  static void write_string(std::ostream& os, std::string_view s) {
    static constexpr char kHex[] = "0123456789abcdef";
    os << '"';
    for (unsigned char c : s) {
      switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        case '\r': os << "\\r"; break;
        default:
          if (c < 0x20)
            os << "\\u00" << kHex[c >> 4] << kHex[c & 15];
          else
            os << c;
      }
    }
    os << '"';
  }

  Value v_ = nullptr;
};

namespace detail {

// Builds a Json tree from nlohmann's SAX events. Integers that overflow 64
// bits arrive as floats together with their source text, which is kept.
class JsonTreeBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  Json root;

  bool null() override { return put(Json::null()); }
  bool boolean(bool b) override { return put(Json::boolean(b)); }
  bool number_integer(number_integer_t v) override {
    return put(Json::raw_number(std::to_string(v)));
  }
  bool number_unsigned(number_unsigned_t v) override {
    return put(Json::raw_number(std::to_string(v)));
  }
  bool number_float(number_float_t, const string_t& s) override { return put(Json::raw_number(s)); }
  bool string(string_t& s) override { return put(Json::string(s)); }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override { return open(Json::object()); }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(Json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string&,
                   const nlohmann::detail::exception& e) override {
    error = "invalid JSON at byte " + std::to_string(pos) + ": " + e.what();
    return false;
  }

  std::string error;

 private:
  bool put(Json v) {
    if (stack_.empty()) {
      root = std::move(v);
      return true;
    }
    Json& top = *stack_.back();
    if (top.is_object())
      top.set(pending_key_, std::move(v));
    else
      top.push(std::move(v));
    return true;
  }

  bool open(Json container) {
    Json* slot;
    if (stack_.empty()) {
      root = std::move(container);
      slot = &root;
    } else {
      Json& top = *stack_.back();
      if (top.is_object()) {
        top.set(pending_key_, std::move(container));
        slot = &top.as_object().back().second;
      } else {
        top.push(std::move(container));
        slot = &top.as_array().back();
      }
    }
    stack_.push_back(slot);
    return true;
  }

  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<Json*> stack_;
  std::string pending_key_;
};

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

inline std::size_t json_count(const Json& v, std::string_view field) {
  if (!v.is_number() || !is_integer_literal(v.number_text()) || v.number_text().front() == '-')
    throw ParseError("\"" + std::string(field) + "\" must be a nonnegative integer");
  return std::stoull(v.number_text());
}

}  // namespace detail

inline Json Json::parse(std::string_view text) {
  detail::JsonTreeBuilder builder;
  if (!nlohmann::json::sax_parse(text.begin(), text.end(), &builder))
    throw ParseError(builder.error.empty() ? "invalid JSON" : builder.error);
  return std::move(builder.root);
}

enum class MatrixFormat { PlainText, Json };

struct MatrixDocument {
  IntMatrix matrix;
  std::string source;  // file path, or "-" for standard input
  MatrixFormat format = MatrixFormat::PlainText;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

inline IntMatrix parse_plain_matrix(std::string_view text) {
  std::vector<IntVector> rows;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream tokens(line);
    IntVector row;
    for (std::string tok; tokens >> tok;) {
      try {
        row.push_back(detail::parse_integer(tok));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (row.empty()) continue;
    if (rows.empty())
      cols = row.size();
    else if (row.size() != cols)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                       " entries, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

inline std::string render_plain_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

inline Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push(Json::numbers(m.row(i)));
  return Json::object()
      .set("rows", Json::number(std::uint64_t{m.rows()}))
      .set("cols", Json::number(std::uint64_t{m.cols()}))
      .set("entries", std::move(entries));
}

inline IntMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("matrix JSON must be an object");
  const Json* rows = doc.find("rows");
  const Json* cols = doc.find("cols");
  const Json* entries = doc.find("entries");
  if (!rows || !cols || !entries)
    throw ParseError("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
  const std::size_t d = detail::json_count(*rows, "rows");
  const std::size_t n = detail::json_count(*cols, "cols");
  if (!entries->is_array() || entries->as_array().size() != d)
    throw ParseError("\"entries\" must be an array of " + std::to_string(d) + " rows");
  IntMatrix m(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    const Json& row = entries->as_array()[i];
    if (!row.is_array() || row.as_array().size() != n)
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const Json& e = row.as_array()[j];
      if (e.is_number())
        m(i, j) = detail::parse_integer(e.number_text());
      else if (e.is_string())
        m(i, j) = detail::parse_integer(e.as_string());
      else
        throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is not an integer");
    }
  }
  return m;
}

/// Detects the format from the first non-blank character ('{' means JSON).
inline MatrixDocument parse_matrix_document(std::string_view text, std::string source = "-") {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  MatrixDocument doc;
  doc.source = std::move(source);
  if (first < text.size() && text[first] == '{') {
    doc.format = MatrixFormat::Json;
    doc.matrix = matrix_from_json(Json::parse(text));
  } else {
    doc.format = MatrixFormat::PlainText;
    doc.matrix = parse_plain_matrix(text);
  }
  return doc;
}

inline std::string render_matrix_document(const MatrixDocument& doc) {
  if (doc.format == MatrixFormat::Json) return matrix_to_json(doc.matrix).dump() + "\n";
  return render_plain_matrix(doc.matrix);
}

}  // namespace hypertoric
