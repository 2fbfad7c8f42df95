#pragma once

#include "rht/blowup.hpp"
#include "rht/cohom.hpp"
#include "rht/dga.hpp"
#include "rht/massey.hpp"
#include "rht/models.hpp"
#include "rht/symp.hpp"

#include <json.hpp>

namespace rht {

using Json = nlohmann::ordered_json;

Json dga_to_json(const DGA& d);
DgaPtr dga_from_json(const Json& j);

Json lie_to_json(const LieAlgebra& L);
LieAlgebra lie_from_json(const Json& j);

Json verdict_to_json(const MasseyVerdict& v);
Json betti_to_json(const std::vector<int>& profile);
Json ring_to_json(const Cohomology& H, const Cohomology::RingTable& t,
                  const std::vector<int>& profile);
Json lefschetz_to_json(const LefschetzReport& r);
Json harmonic_to_json(const HarmonicReport& r);
Json blowup_to_json(const BlowupBettiProfile& p);

} // namespace rht
