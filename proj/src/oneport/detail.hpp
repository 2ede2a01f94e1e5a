#pragma once

#include <map>
#include <string>

#include "mechsynth/network.hpp"

namespace mechsynth::detail {

/// Copies `topology`, taking each element value from `values` by role. Springs
/// valued zero are open circuits and are dropped, together with any part of
/// the graph that is left without a path to a port.
template <class F>
BasicNetwork<F> assign_roles(const MechNetwork& topology, const std::map<std::string, F>& values);


extern template SurdNetwork assign_roles(const MechNetwork&, const std::map<std::string, Surd>&);
extern template MechNetwork assign_roles(const MechNetwork&, const std::map<std::string, Rat>&);

}  // namespace mechsynth::detail
