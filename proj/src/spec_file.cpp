#include "quasihom/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

namespace quasihom {

namespace {

using Scalar = std::variant<std::string, Rational>;
using Value = std::variant<Scalar, std::vector<Scalar>>;

class Reader {
 public:
  Reader(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  [[noreturn]] void fail(const std::string& what) const { throw SpecError(what, line_, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string key() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '-'))
      ++pos_;
    if (pos_ == start) fail("expected a key");
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar scalar() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a value");
    const char c = s_[pos_];
    if (c == '"') return basic_string();
    if (c == '\'') {
      const std::size_t start = ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '\'') ++pos_;
      if (pos_ >= s_.size()) fail("unterminated string");
      return std::string(s_.substr(start, pos_++ - start));
    }
    const std::size_t start = pos_;
    if (c == '+' || c == '-') ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start || (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))) {
      pos_ = start;
      fail("expected a string or an integer");
    }
    std::string digits;
    for (char d : s_.substr(start, pos_ - start))
      if (d != '_' && d != '+') digits += d;
    return Rational(parse_rational(digits));
  }

  Value value() {
    if (!peek('[')) return scalar();
    ++pos_;
    std::vector<Scalar> items;
    if (peek(']')) {
      ++pos_;
      return items;
    }
    for (;;) {
      items.push_back(scalar());
      if (peek(',')) {
        ++pos_;
        if (peek(']')) break;
        continue;
      }
      break;
    }
    expect(']');
    return items;
  }

  std::size_t column() const { return pos_ + 1; }

 private:
  std::string basic_string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        if (pos_ + 1 >= s_.size()) fail("bad escape");
        const char e = s_[pos_ + 1];
        if (e == '"' || e == '\\') out += e;
        else if (e == 't') out += '\t';
        else fail("unsupported escape");
        pos_ += 2;
        continue;
      }
      out += s_[pos_++];
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

Rational as_rational(const Scalar& s, std::size_t line, std::size_t col) {
  if (const auto* r = std::get_if<Rational>(&s)) return *r;
  try {
    return parse_rational(std::get<std::string>(s));
  } catch (const std::exception& e) {
    throw SpecError(std::string("bad rational: ") + e.what(), line, col);
  }
}

std::string as_expression(const Scalar& s) {
  if (const auto* r = std::get_if<Rational>(&s)) return to_string(*r);
  return std::get<std::string>(s);
}

}  // namespace

MetricSpec parse_spec(std::string_view text) {
  MetricSpec spec;
  std::string table;
  std::set<std::string> seen;
  std::set<std::string> tables;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Reader r(line, number);
    if (r.at_end()) continue;
    if (r.peek('[')) {
      r.expect('[');
      table = r.key();
      r.expect(']');
      if (!r.at_end()) r.fail("trailing characters after table header");
      if (table != "metric" && table != "params") throw SpecError("unknown table [" + table + "]", number, 2);
      if (!tables.insert(table).second) throw SpecError("duplicate table [" + table + "]", number, 2);
      continue;
    }
    r.skip_ws();
    const std::size_t key_col = r.column();
    const std::string key = r.key();
    r.expect('=');
    r.skip_ws();
    const std::size_t value_col = r.column();
    const Value v = r.value();
    if (!r.at_end()) r.fail("trailing characters after value");
    if (table.empty()) throw SpecError("key '" + key + "' outside a table", number, key_col);
    if (!seen.insert(table + "." + key).second) throw SpecError("duplicate key '" + key + "'", number, key_col);

    if (table == "params") {
      const auto* s = std::get_if<Scalar>(&v);
      if (!s) throw SpecError("parameter '" + key + "' must be a rational", number, value_col);
      if (key == "x" || key == "h" || key == "z") {
        throw SpecError("parameter name '" + key + "' clashes with a coordinate", number, key_col);
      }
      spec.params[key] = as_rational(*s, number, value_col);
      continue;
    }
    if (key == "base_point") {
      const auto* arr = std::get_if<std::vector<Scalar>>(&v);
      if (!arr || arr->size() != 3) throw SpecError("base_point must be an array of three rationals", number, value_col);
      for (int i = 0; i < 3; ++i) spec.base_point[i] = as_rational((*arr)[i], number, value_col);
      continue;
    }
    int idx = -1;
    for (int i = 0; i < 6; ++i)
      if (key == kComponentKeys[i]) idx = i;
    if (idx < 0) throw SpecError("unknown key '" + key + "' in [metric]", number, key_col);
    const auto* s = std::get_if<Scalar>(&v);
    if (!s) throw SpecError("component '" + key + "' must be a string", number, value_col);
    spec.components[idx] = as_expression(*s);
    spec.lines[idx] = number;
    // Skip the opening quote of a string value.
    spec.columns[idx] = value_col + (std::holds_alternative<std::string>(*s) ? 1 : 0);
  }
  return spec;
}

MetricSpec read_spec_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_spec(ss.str());
}

Metric to_metric(const MetricSpec& spec) {
  std::array<Poly, 6> p;
  for (int i = 0; i < 6; ++i) {
    try {
      p[i] = parse_expr(spec.components[i], spec.params);
    } catch (const ParseError& e) {
      throw SpecError(std::string(kComponentKeys[i]) + ": " + e.what(), spec.lines[i],
                      spec.columns[i] + e.position());
    }
  }
  return Metric::from_upper(p[0], p[1], p[2], p[3], p[4], p[5], spec.base_point);
}

std::string to_toml(const MetricSpec& spec) {
  std::ostringstream os;
  os << "[metric]\n";
  for (int i = 0; i < 6; ++i) os << kComponentKeys[i] << " = \"" << spec.components[i] << "\"\n";
  os << "base_point = [\"" << to_string(spec.base_point[0]) << "\", \"" << to_string(spec.base_point[1]) << "\", \""
     << to_string(spec.base_point[2]) << "\"]\n";
  if (!spec.params.empty()) {
    os << "\n[params]\n";
    for (const auto& [k, v] : spec.params) os << k << " = \"" << to_string(v) << "\"\n";
  }
  return os.str();
}

}  // namespace quasihom
