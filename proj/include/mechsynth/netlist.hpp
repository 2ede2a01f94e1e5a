#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "mechsynth/network.hpp"

namespace mechsynth {

using Json = nlohmann::ordered_json;

/// {"nodes":[...],"elements":[{"kind":..,"value":"p/q","nodes":[a,b]}],"ports":[{"plus":..,"minus":..}]}
/// Elements carry an optional "role". Values must be exact strings (or JSON
/// integers); floating-point numbers are rejected with ParseError.
Json netlist_to_json(const MechNetwork& net);
Json netlist_to_json(const SurdNetwork& net);
MechNetwork netlist_from_json(const Json& j);
SurdNetwork surd_netlist_from_json(const Json& j);

MechNetwork parse_netlist(std::string_view text);
std::string format_netlist(const MechNetwork& net);
MechNetwork read_netlist_file(const std::string& path);

}  // namespace mechsynth
