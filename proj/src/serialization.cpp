#include "prodlab/serialization.hpp"

#include "prodlab/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace prodlab {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_field(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected a rational string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Edge edge_field(const std::string& key) {
  try {
    return parse_edge_key(key);
  } catch (const Error& e) {
    throw ParseError("bad edge key \"" + key + "\": " + e.what());
  }
}

json lists_json(const ListAssignment& la) {
  json out = json::object();
  for (const auto& [e, list] : la.lists()) {
    json arr = json::array();
    for (const Rational& x : list) arr.push_back(format_rational(x));
    out[edge_key(e)] = std::move(arr);
  }
  return out;
}

ListAssignment lists_of(const json& doc) {
  if (!doc.is_object()) throw ParseError("list assignment: expected a JSON object");
  ListAssignment la;
  for (const auto& [key, value] : doc.items()) {
    const Edge e = edge_field(key);
    if (!value.is_array() || value.empty()) throw ParseError("list of " + key + ": expected a non-empty array");
    std::vector<Rational> labels;
    for (const auto& x : value) labels.push_back(rational_field(x, "list of " + key));
    la.set(e, std::move(labels));
  }
  return la;
}

}  // namespace

std::string lists_to_json(const ListAssignment& la) { return lists_json(la).dump(2) + "\n"; }

ListAssignment lists_from_json(std::string_view text) { return lists_of(parse_json(text)); }

std::string labelling_to_json(const Labelling& lab) {
  json out = json::object();
  for (const auto& [e, x] : lab.labels()) out[edge_key(e)] = format_rational(x);
  return out.dump(2) + "\n";
}

Labelling labelling_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("labelling: expected a JSON object");
  Labelling lab;
  for (const auto& [key, value] : doc.items()) lab.set(edge_field(key), rational_field(value, "label of " + key));
  return lab;
}

std::string certificate_to_json(const Certificate& cert) {
  json out;
  out["mode"] = std::string(mode_name(cert.mode));
  out["exponents"] = cert.exponents;
  out["coefficient"] = cert.coefficient.str();
  out["bound"] = cert.bound;
  out["max_degree"] = cert.max_degree;
  return out.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    Certificate cert;
    cert.mode = parse_mode(doc.at("mode").get<std::string>());
    cert.exponents = doc.at("exponents").get<Exponents>();
    cert.coefficient = BigInt(doc.at("coefficient").get<std::string>());
    cert.bound = doc.at("bound").get<std::size_t>();
    cert.max_degree = doc.at("max_degree").get<bool>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

std::string witness_to_json(const AdversaryWitness& w) {
  json out;
  out["graph"] = to_edge_list(w.graph);
  out["lists"] = lists_json(w.lists);
  out["claim"] = w.claim;
  return out.dump(2) + "\n";
}

AdversaryWitness witness_from_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    AdversaryWitness w;
    w.graph = parse_edge_list(doc.at("graph").get<std::string>());
    w.lists = lists_of(doc.at("lists"));
    w.claim = doc.at("claim").get<std::string>();
    return w;
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace prodlab
