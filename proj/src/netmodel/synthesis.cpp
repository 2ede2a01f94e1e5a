#include "mechsynth/synthesis.hpp"

namespace mechsynth {

Json SynthesisResult::to_json() const {
  Json j;
  j["branch"] = branch;
  j["certificate"] = certificate;
  j["netlist"] = surd_netlist ? netlist_to_json(*surd_netlist) : netlist_to_json(netlist);
  j["verified"] = verified;
  return j;
}

}  // namespace mechsynth
