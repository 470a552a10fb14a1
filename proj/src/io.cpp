#include "blackwell/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "blackwell/error.hpp"

namespace blackwell {

using nlohmann::json;

namespace {

bool integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

double parse_decimal(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) throw Error(ErrorCode::ParseError, "not a number: '" + std::string(whole) + "'");
  return v;
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw Error(ErrorCode::ParseError, std::string("missing array '") + key + "'");
  std::vector<double> out;
  for (const auto& v : doc[key]) out.push_back(parse_json_number(v));
  return out;
}

}  // namespace

double parse_number(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "inf" || lower == "+inf" || lower == "infinity") return INFINITY;
  if (lower == "-inf" || lower == "-infinity") return -INFINITY;
  if (lower == "nan") throw Error(ErrorCode::ParseError, "NaN is not a probability");
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s, text);
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!integer_text(num) || !integer_text(den))
    throw Error(ErrorCode::ParseError, "rational needs integer numerator and denominator: '" + std::string(text) + "'");
  // integers below 2^53 convert exactly, so one division rounds once
  long double a = std::strtold(std::string(num).c_str(), nullptr);
  long double b = std::strtold(std::string(den).c_str(), nullptr);
  if (b == 0.0L) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (std::fabs(a) < 9007199254740992.0L && std::fabs(b) < 9007199254740992.0L)
    return static_cast<double>(a) / static_cast<double>(b);
  return static_cast<double>(a / b);
}

double parse_json_number(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_number(value.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a number or numeric string, got " + value.dump());
}

FiniteExperiment experiment_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "experiment must be a JSON object");
  auto p0 = number_array(doc, "p0");
  auto p1 = number_array(doc, "p1");
  if (!doc.contains("outcomes")) return make_experiment(std::move(p0), std::move(p1));
  std::vector<std::string> names;
  for (const auto& v : doc["outcomes"]) names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  return make_experiment(std::move(names), std::move(p0), std::move(p1));
}

json experiment_to_json(const FiniteExperiment& p) {
  json doc;
  doc["outcomes"] = p.outcomes();
  json r0 = json::array(), r1 = json::array();
  for (double x : p.p0()) r0.push_back(shortest(x));
  for (double x : p.p1()) r1.push_back(shortest(x));
  doc["p0"] = r0;
  doc["p1"] = r1;
  return doc;
}

DivergenceSpec spec_from_json(const json& doc) {
  auto atoms = [&](const char* key) {
    std::vector<SpecAtom> out;
    if (!doc.contains(key)) return out;
    for (const auto& pair : doc[key]) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, std::string(key) + " entries must be [t, w]");
      out.push_back({parse_json_number(pair[0]), parse_json_number(pair[1])});
    }
    return out;
  };
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "spec must be a JSON object");
  return DivergenceSpec(atoms("m0"), atoms("m1"));
}

FinitePmf pmf_from_json(const json& doc) {
  const json& arr = doc.is_object() ? doc.at("probs") : doc;
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "pmf must be an array or {\"probs\": [...]}");
  std::vector<double> probs;
  for (const auto& v : arr) probs.push_back(parse_json_number(v));
  return FinitePmf(std::move(probs));
}

MultiStateExperiment multistate_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("probs")) throw Error(ErrorCode::ParseError, "multi-state file needs 'probs'");
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["probs"]) {
    std::vector<double> r;
    for (const auto& v : row) r.push_back(parse_json_number(v));
    rows.push_back(std::move(r));
  }
  if (doc.contains("states") && doc["states"].get<std::size_t>() != rows.size())
    throw Error(ErrorCode::DimensionMismatch, "'states' does not match the number of rows");
  return MultiStateExperiment(std::move(rows));
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << doc.dump(2) << "\n";
}

FiniteExperiment read_experiment(const std::string& path) {
  try {
    return experiment_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_experiment(const std::string& path, const FiniteExperiment& p) { write_json(path, experiment_to_json(p)); }

void Config::validate() const {
  if (!(tol > 0.0 && tol <= 1e-3)) throw Error(ErrorCode::DomainError, "tol must lie in (0, 1e-3]");
  if (!(t_max >= 1.0)) throw Error(ErrorCode::DomainError, "t_max must be at least 1");
  if (grid_points < 3) throw Error(ErrorCode::DomainError, "grid_points must be at least 3");
  if (n_cap < 1) throw Error(ErrorCode::DomainError, "n_cap must be positive");
}

}  // namespace blackwell
