#ifndef SYMPOW_PARSE_HPP
#define SYMPOW_PARSE_HPP

#include "sympow/common.hpp"
#include "sympow/ideal.hpp"
#include "sympow/monomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace sympow {

/// Parsed input: the ideal plus optional user-supplied decomposition data
/// and symbolic-filtration hints (0 means absent).
struct IdealDocument {
  MonomialIdeal ideal;
  std::vector<PrimeSupport> components;
  long generating_degree = 0;
  long c_value = 0;
};

namespace detail {

inline int var_index(const std::vector<std::string>& vars, const std::string& name, int line,
                     int col) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw parse_error("unknown variable '" + name + "'", line, col);
}

/// Monomial expression: factors joined by '*', each NAME or NAME^UINT, or
/// the literal "1". Column numbers are 1-based offsets from col_base.
inline Monomial parse_monomial_text(const std::string& text, const std::vector<std::string>& vars,
                                    int line, int col_base) {
  Monomial m;
  m.e.assign(vars.size(), 0);
  std::size_t i = 0;
  auto col = [&] { return col_base + static_cast<int>(i); };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error("empty monomial", line, col());
  if (text[i] == '1' &&
      (i + 1 == text.size() ||
       [&] {
         std::size_t j = i + 1;
         while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
         return j == text.size();
       }())) {
    return m;
  }
  for (;;) {
    skip_ws();
    std::size_t name_col = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    if (i == name_col)
      throw parse_error("expected a variable name", line, col());
    std::string name = text.substr(name_col, i - name_col);
    int v = var_index(vars, name, line, col_base + static_cast<int>(name_col));
    long exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::size_t d0 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == d0) throw parse_error("expected an exponent after '^'", line, col());
      exp = std::stol(text.substr(d0, i - d0));
    }
    m.e[static_cast<std::size_t>(v)] += static_cast<int>(exp);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '*') throw parse_error("expected '*' between factors", line, col());
    ++i;
  }
  return m;
}

inline void validate_vars(const std::vector<std::string>& vars, int line) {
  if (vars.empty()) throw parse_error("no variables declared", line, 1);
  std::set<std::string> seen;
  for (const std::string& v : vars) {
    if (v.empty()) throw parse_error("empty variable name", line, 1);
    if (!seen.insert(v).second)
      throw parse_error("duplicate variable '" + v + "'", line, 1);
  }
}

inline IdealDocument parse_json_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset the parser reports.
    int line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!doc.is_object()) throw parse_error("top level must be a JSON object", 1, 1);
  if (!doc.contains("vars") || !doc["vars"].is_array())
    throw parse_error("missing \"vars\" array", 1, 1);
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) throw parse_error("variable names must be strings", 1, 1);
    vars.push_back(v.get<std::string>());
  }
  validate_vars(vars, 1);
  if (!doc.contains("gens") || !doc["gens"].is_array() || doc["gens"].empty())
    throw parse_error("empty generator list", 1, 1);
  std::vector<Monomial> gens;
  for (const auto& g : doc["gens"]) {
    if (g.is_string()) {
      gens.push_back(parse_monomial_text(g.get<std::string>(), vars, 1, 1));
    } else if (g.is_array()) {
      if (g.size() != vars.size())
        throw parse_error("generator arity does not match the variable list", 1, 1);
      Monomial m;
      for (const auto& e : g) {
        if (!e.is_number_integer() || e.get<long>() < 0)
          throw parse_error("negative exponent", 1, 1);
        m.e.push_back(static_cast<int>(e.get<long>()));
      }
      gens.push_back(std::move(m));
    } else {
      throw parse_error("generators must be strings or exponent arrays", 1, 1);
    }
  }
  IdealDocument out;
  out.ideal = normalize(vars, std::move(gens));
  if (doc.contains("components")) {
    if (!doc["components"].is_array())
      throw parse_error("\"components\" must be an array", 1, 1);
    for (const auto& comp : doc["components"]) {
      if (!comp.is_array() || comp.empty())
        throw parse_error("each component must be a nonempty array", 1, 1);
      std::set<int> support;
      for (const auto& entry : comp) {
        if (entry.is_string()) {
          support.insert(var_index(vars, entry.get<std::string>(), 1, 1));
        } else if (entry.is_array()) {
          // Generator row of a primary component: its support feeds the prime.
          if (entry.size() != vars.size())
            throw parse_error("component generator arity mismatch", 1, 1);
          for (std::size_t j = 0; j < vars.size(); ++j) {
            if (!entry[j].is_number_integer() || entry[j].get<long>() < 0)
              throw parse_error("negative exponent", 1, 1);
            if (entry[j].get<long>() > 0) support.insert(static_cast<int>(j));
          }
        } else {
          throw parse_error("component entries must be variable names or exponent arrays", 1, 1);
        }
      }
      PrimeSupport p;
      p.vars.assign(support.begin(), support.end());
      out.components.push_back(std::move(p));
    }
  }
  if (doc.contains("generating_degree")) {
    if (!doc["generating_degree"].is_number_integer() || doc["generating_degree"].get<long>() < 1)
      throw parse_error("\"generating_degree\" must be a positive integer", 1, 1);
    out.generating_degree = doc["generating_degree"].get<long>();
  }
  if (doc.contains("c")) {
    if (!doc["c"].is_number_integer() || doc["c"].get<long>() < 1)
      throw parse_error("\"c\" must be a positive integer", 1, 1);
    out.c_value = doc["c"].get<long>();
  }
  return out;
}

inline IdealDocument parse_human_document(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<std::string> vars;
  std::vector<Monomial> gens;
  bool saw_vars = false, saw_gens = false;
  long generating_degree = 0, c_value = 0;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw parse_error("expected 'key: value'", line_no, static_cast<int>(begin) + 1);
    std::string key = line.substr(begin, colon - begin);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::string value = line.substr(colon + 1);
    int value_col = static_cast<int>(colon) + 2;
    if (key == "vars") {
      std::istringstream vs(value);
      std::string name;
      while (vs >> name) vars.push_back(name);
      validate_vars(vars, line_no);
      saw_vars = true;
    } else if (key == "gens") {
      if (!saw_vars)
        throw parse_error("'gens' appeared before 'vars'", line_no, static_cast<int>(begin) + 1);
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        std::string piece =
            comma == std::string::npos ? value.substr(start) : value.substr(start, comma - start);
        if (piece.find_first_not_of(" \t\r") != std::string::npos)
          gens.push_back(parse_monomial_text(piece, vars, line_no,
                                             value_col + static_cast<int>(start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      saw_gens = true;
    } else if (key == "generating_degree" || key == "n") {
      generating_degree = std::stol(value);
      if (generating_degree < 1)
        throw parse_error("generating degree must be positive", line_no, value_col);
    } else if (key == "c") {
      c_value = std::stol(value);
      if (c_value < 1) throw parse_error("c must be positive", line_no, value_col);
    } else {
      throw parse_error("unknown key '" + key + "'", line_no, static_cast<int>(begin) + 1);
    }
  }
  if (!saw_vars) throw parse_error("missing 'vars' line", line_no, 1);
  if (!saw_gens || gens.empty()) throw parse_error("empty generator list", line_no, 1);
  IdealDocument out;
  out.ideal = normalize(vars, std::move(gens));
  out.generating_degree = generating_degree;
  out.c_value = c_value;
  return out;
}

} // namespace detail

/// Accepts either the JSON form or the line-oriented "vars:/gens:" form.
inline IdealDocument parse_ideal_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return detail::parse_json_document(text);
    return detail::parse_human_document(text);
  }
  throw parse_error("empty input", 1, 1);
}

inline IdealDocument parse_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open ideal file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str());
}

/// Canonical JSON serialization; parsing it back yields an equal document.
inline std::string serialize_document(const IdealDocument& doc) {
  nlohmann::json j;
  j["vars"] = doc.ideal.vars;
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& m : doc.ideal.gens) gens.push_back(m.e);
  j["gens"] = std::move(gens);
  if (!doc.components.empty()) {
    nlohmann::json comps = nlohmann::json::array();
    for (const PrimeSupport& p : doc.components) {
      nlohmann::json names = nlohmann::json::array();
      for (int v : p.vars) names.push_back(doc.ideal.vars[static_cast<std::size_t>(v)]);
      comps.push_back(std::move(names));
    }
    j["components"] = std::move(comps);
  }
  if (doc.generating_degree > 0) j["generating_degree"] = doc.generating_degree;
  if (doc.c_value > 0) j["c"] = doc.c_value;
  return j.dump(2) + "\n";
}

} // namespace sympow

#endif
