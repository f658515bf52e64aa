#pragma once

// JSON forms of every report the library produces. Keys and value types are
// fixed; optional facts are null rather than absent.

#include "chowpresentations.hpp"
#include "divisibility.hpp"
#include "verdicts.hpp"
#include "vmrtcatalog.hpp"

#include <json.hpp>

namespace flagcalc {

using Json = nlohmann::ordered_json;

Json to_json(const EdValue& v);
Json to_json(const VmrtDescriptor& d);
Json to_json(const VmrtEntry& e);
Json to_json(const TableReport& r);
Json to_json(const ProofReport& r);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const WitnessBundle& w);
Json to_json(const ObstructionReport& r);

/// Presentation, generators, relations and Hilbert series.
Json ring_summary(const RingPresentation& ring);
/// Standard-monomial basis of degree d and the ideal slice in that degree.
Json ring_degree(const RingPresentation& ring, int d);

/// Variety facts independent of the catalog: dimension, marked nodes,
/// number of positive roots.
Json variety_summary(const MarkedDynkin& m);

}  // namespace flagcalc
