#pragma once

#include <string>

#include "json.hpp"
#include "toric/classify.hpp"
#include "toric/moment.hpp"
#include "toric/mrgraph.hpp"
#include "toric/perm.hpp"
#include "toric/plabic.hpp"
#include "toric/polytope.hpp"
#include "toric/positroid.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json to_json(const BruhatInterval& I);
BruhatInterval interval_from_json(const Json& j);

Json to_json(const ToricVerdict& t, const Permutation& v, const Permutation& w);

/// {"I":[...],"terms":[{"sign":1,"exp":{"t1":1,...}}]}
Json minor_to_json(const WiringGraph& G, const std::vector<int>& I);

Json to_json(const Constituent& C);
Json to_json(const GrassmannNecklace& N);

Json to_json(const LatticePolytope& P, const FaceLattice* L = nullptr);

Json plabic_to_json(const PlabicGraph& G);

std::string dot_hasse(const BruhatInterval& I);
std::string dot_plabic(const PlabicGraph& G);
std::string dot_wiring(const WiringGraph& G);

/// OFF export for 3-dimensional polytopes (vertex coordinates are printed
/// as exact decimals when integral, as floating point otherwise).
std::string off_polytope(const LatticePolytope& P);

}  // namespace toric
