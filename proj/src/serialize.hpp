#ifndef JTYPE_SRC_SERIALIZE_HPP
#define JTYPE_SRC_SERIALIZE_HPP

#include <json.hpp>

#include "jtype/apolar.hpp"
#include "jtype/jordan.hpp"
#include "jtype/partition.hpp"
#include "jtype/perazzo.hpp"

namespace jtype {

using Json = nlohmann::ordered_json;

inline constexpr int record_version = 1;

Json to_json(const Partition& p);
Json to_json(const JordanDegreeType& s);
Json to_json(const HVector& h);
Json to_json(const HfStats& stats);
Json to_json(const PerazzoParams& params);
Json to_json(const TheoremCase& c);
Json to_json(const PredictedJordan& p);
Json to_json(const LefschetzResult& l);
Json to_json(const AnnBasis& basis);
Json to_json(const ChainPosition& pos);

/// Chain endpoints and the case I / II types for the given parameters.
Json chain_json(const PerazzoParams& params);

}  // namespace jtype

#endif
