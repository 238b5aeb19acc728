// config.cpp -- RunConfig loading from JSON or flat TOML.
#include "subwin/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace subwin {

namespace {

using Setter = std::function<void(RunConfig&, const nlohmann::json&)>;

std::size_t as_count(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw Error("config: '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

double as_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw Error("config: '" + key + "' must be a number");
  return v.get<double>();
}

std::string as_string(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) throw Error("config: '" + key + "' must be a string");
  return v.get<std::string>();
}

bool as_bool(const nlohmann::json& v, const std::string& key) {
  if (!v.is_boolean()) throw Error("config: '" + key + "' must be a boolean");
  return v.get<bool>();
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"omega", [](RunConfig& c, const auto& v) { c.omega = as_count(v, "omega"); }},
      {"alpha", [](RunConfig& c, const auto& v) { c.alpha = as_number(v, "alpha"); }},
      {"bi_cutoff", [](RunConfig& c, const auto& v) { c.bi_cutoff = as_number(v, "bi_cutoff"); }},
      {"idf_cutoff",
       [](RunConfig& c, const auto& v) { c.idf_cutoff = as_number(v, "idf_cutoff"); }},
      {"smoothing_add",
       [](RunConfig& c, const auto& v) { c.smoothing_add = as_number(v, "smoothing_add"); }},
      {"n_points", [](RunConfig& c, const auto& v) { c.n_points = as_count(v, "n_points"); }},
      {"bin_halfwidth",
       [](RunConfig& c, const auto& v) { c.bin_halfwidth = as_number(v, "bin_halfwidth"); }},
      {"min_support",
       [](RunConfig& c, const auto& v) { c.min_support = as_count(v, "min_support"); }},
      {"grammar_min_len",
       [](RunConfig& c, const auto& v) { c.grammar_min_len = as_count(v, "grammar_min_len"); }},
      {"grammar_max_len",
       [](RunConfig& c, const auto& v) { c.grammar_max_len = as_count(v, "grammar_max_len"); }},
      {"grammar_system",
       [](RunConfig& c, const auto& v) { c.grammar_system = as_string(v, "grammar_system"); }},
      {"ttr_prefix", [](RunConfig& c, const auto& v) { c.ttr_prefix = as_count(v, "ttr_prefix"); }},
      {"ttr_theory_threshold",
       [](RunConfig& c, const auto& v) {
         c.ttr_theory_threshold = as_number(v, "ttr_theory_threshold");
       }},
      {"classify_top_constructs",
       [](RunConfig& c, const auto& v) {
         c.classify_top_constructs = as_count(v, "classify_top_constructs");
       }},
      {"stoplist", [](RunConfig& c, const auto& v) { c.stoplist_path = as_string(v, "stoplist"); }},
      {"dictionary",
       [](RunConfig& c, const auto& v) { c.dictionary_path = as_string(v, "dictionary"); }},
      {"tagmap", [](RunConfig& c, const auto& v) { c.tagmap_path = as_string(v, "tagmap"); }},
      {"subset",
       [](RunConfig& c, const auto& v) {
         auto s = subset_from_string(as_string(v, "subset"));
         if (!s) throw Error("config: subset must be all, even, or odd");
         c.subset = *s;
       }},
      {"p_scope",
       [](RunConfig& c, const auto& v) {
         const std::string s = as_string(v, "p_scope");
         if (s == "per_document") c.p_scope = WindowSpec::PScope::per_document;
         else if (s == "per_corpus") c.p_scope = WindowSpec::PScope::per_corpus;
         else throw Error("config: p_scope must be per_document or per_corpus");
       }},
      {"pretagged", [](RunConfig& c, const auto& v) { c.pretagged = as_bool(v, "pretagged"); }},
      {"keep_digits",
       [](RunConfig& c, const auto& v) { c.policy.keep_digits = as_bool(v, "keep_digits"); }},
      {"keep_punctuation_tokens",
       [](RunConfig& c, const auto& v) {
         c.policy.keep_punctuation_tokens = as_bool(v, "keep_punctuation_tokens");
       }},
  };
  return table;
}

RunConfig from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("config: expected a JSON object");
  RunConfig config;
  for (const auto& [key, value] : j.items()) {
    auto it = setters().find(key);
    if (it == setters().end()) throw Error("config: unknown key '" + key + "'");
    it->second(config, value);
  }
  return config;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  try {
    return from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("config: invalid JSON: ") + e.what());
  }
}

// Flat TOML subset: `key = value` lines with quoted strings, numbers and
// booleans. Sections are rejected; the config is a single namespace.
RunConfig RunConfig::from_toml_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::object();
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[')
      throw Error("config: TOML sections are not supported (line " + std::to_string(lineno) + ")");
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config: expected key = value (line " + std::to_string(lineno) + ")");
    const std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw Error("config: empty key or value (line " + std::to_string(lineno) + ")");
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"')
        throw Error("config: unterminated string (line " + std::to_string(lineno) + ")");
      j[key] = value.substr(1, value.size() - 2);
    } else if (value == "true" || value == "false") {
      j[key] = (value == "true");
    } else {
      try {
        if (value.find_first_of(".eE") != std::string::npos) {
          j[key] = std::stod(value);
        } else {
          j[key] = std::stoll(value);
        }
      } catch (const std::exception&) {
        throw Error("config: cannot parse value '" + value + "' (line " +
                    std::to_string(lineno) + ")");
      }
    }
  }
  return from_json(j);
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return json ? from_json_text(buf.str()) : from_toml_text(buf.str());
}

}  // namespace subwin
