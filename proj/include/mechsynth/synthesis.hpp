#pragma once

#include <optional>
#include <string>

#include "mechsynth/netlist.hpp"

namespace mechsynth {

/// Accepted branch, its certificate, and a netlist that has already been
/// checked against the admittance oracle.
struct SynthesisResult {
  std::string branch;
  Json certificate = Json::object();
  MechNetwork netlist;
  /// Set instead of `netlist` when element values are quadratic surds.
  std::optional<SurdNetwork> surd_netlist;
  bool verified = false;

  /// {"branch":..,"certificate":..,"netlist":..,"verified":true}
  Json to_json() const;
};

}  // namespace mechsynth
