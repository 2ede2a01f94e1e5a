#include "mechsynth/netlist.hpp"

#include <fstream>
#include <sstream>

namespace mechsynth {

namespace {

template <class F>
Json to_json_impl(const BasicNetwork<F>& net) {
  Json j;
  j["nodes"] = net.nodes;
  j["elements"] = Json::array();
  for (const auto& e : net.elements) {
    Json je;
    je["kind"] = std::string(to_string(e.kind));
    je["value"] = e.value.str();
    je["nodes"] = {e.a, e.b};
    if (!e.role.empty()) je["role"] = e.role;
    j["elements"].push_back(std::move(je));
  }
  j["ports"] = Json::array();
  for (const Port& p : net.ports) j["ports"].push_back({{"plus", p.plus}, {"minus", p.minus}});
  return j;
}

int node_id(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer node id");
  return v.get<int>();
}

std::string value_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorKind::ParseError, "element values must be exact rational strings, got " + v.dump());
}

template <class F, class ParseValue>
BasicNetwork<F> from_json_impl(const Json& j, ParseValue parse_value) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "netlist must be a JSON object");
  for (const char* key : {"nodes", "elements", "ports"}) {
    if (!j.contains(key) || !j.at(key).is_array()) {
      throw Error(ErrorKind::ParseError, std::string("netlist needs an array field '") + key + "'");
    }
  }
  BasicNetwork<F> net;
  for (const Json& v : j.at("nodes")) net.nodes.push_back(node_id(v, "nodes entry"));
  for (const Json& je : j.at("elements")) {
    if (!je.is_object() || !je.contains("kind") || !je.contains("value") || !je.contains("nodes")) {
      throw Error(ErrorKind::ParseError, "element needs kind, value and nodes");
    }
    const Json& ends = je.at("nodes");
    if (!ends.is_array() || ends.size() != 2) throw Error(ErrorKind::ParseError, "element nodes must be a pair");
    if (!je.at("kind").is_string()) throw Error(ErrorKind::ParseError, "element kind must be a string");
    BasicElement<F> e;
    e.kind = parse_element_kind(je.at("kind").get<std::string>());
    e.value = parse_value(value_text(je.at("value")));
    e.a = node_id(ends[0], "element endpoint");
    e.b = node_id(ends[1], "element endpoint");
    if (je.contains("role")) e.role = je.at("role").get<std::string>();
    net.elements.push_back(std::move(e));
  }
  for (const Json& jp : j.at("ports")) {
    if (!jp.is_object() || !jp.contains("plus") || !jp.contains("minus")) {
      throw Error(ErrorKind::ParseError, "port needs plus and minus");
    }
    net.ports.push_back({node_id(jp.at("plus"), "port plus"), node_id(jp.at("minus"), "port minus")});
  }
  return net;
}

}  // namespace

Json netlist_to_json(const MechNetwork& net) { return to_json_impl(net); }
Json netlist_to_json(const SurdNetwork& net) { return to_json_impl(net); }

MechNetwork netlist_from_json(const Json& j) {
  return from_json_impl<Rat>(j, [](const std::string& s) { return Rat::parse(s); });
}

SurdNetwork surd_netlist_from_json(const Json& j) {
  return from_json_impl<Surd>(j, [](const std::string& s) { return Surd::parse(s); });
}

MechNetwork parse_netlist(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return netlist_from_json(j);
}

std::string format_netlist(const MechNetwork& net) { return netlist_to_json(net).dump(); }

MechNetwork read_netlist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UsageError, "cannot open netlist file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_netlist(ss.str());
}

}  // namespace mechsynth
