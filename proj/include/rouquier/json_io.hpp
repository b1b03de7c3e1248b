#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rouquier/blocks.hpp"
#include "rouquier/combinatorics.hpp"
#include "rouquier/hyperplanes.hpp"
#include "rouquier/schur.hpp"

namespace rouquier {

using Json = nlohmann::ordered_json;

// Multipartitions are nested arrays: ((2,1),(3)) <-> [[2,1],[3]].
Json to_json(const Partition& p);
Json to_json(const MultiPartition& lambda);
Partition partition_from_json(const Json& j);
MultiPartition multipartition_from_json(const Json& j);
/// Parses the literal form used on the command line, e.g. "[[2,1],[3]]".
MultiPartition parse_multipartition(const std::string& text);

Json to_json(const ChargedSymbol& symbol);
Json to_json(const ContentMultiset& content);

// {"type":"pair","k":-1,"s":0,"t":1} and {"type":"N"}.
Json to_json(const EssentialHyperplane& h);
EssentialHyperplane hyperplane_from_json(const Json& j);

/// {"blocks":[[lambda, ...], ...]} with blocks in canonical order.
Json to_json(const SetPartition& sp, const std::vector<MultiPartition>& chars);
/// Inverse of to_json over enumerate_multipartitions(d, r).
SetPartition set_partition_from_json(const Json& j, int d, int r);

// {"sign":-1,"x":0,"u":[0,-1],"xminus1":{},"binomials":{"(0,0,1)":1}}
Json to_json(const FactoredSchurElement& f);
FactoredSchurElement factored_schur_from_json(const Json& j);

Json to_json(const SpecializedSchurData& s);
Json to_json(const Specialization& phi);
Json to_json(const BlockReport& report);

}  // namespace rouquier
