#pragma once

// Serialization: the documented JSON schemas, plain-text label formats, and
// the CSV / LaTeX matrix emitters. All output orders are deterministic.

#include "cb2/canonical.hpp"
#include "cb2/cyclotomic.hpp"
#include "cb2/hecke.hpp"
#include "cb2/laurent.hpp"
#include "cb2/partition.hpp"
#include "cb2/quantum_action.hpp"
#include "cb2/symbol.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cb2 {

using json = nlohmann::ordered_json;

// LaurentPoly <-> [[exponent, coefficient], ...] sorted by exponent.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const Partition& p); // [parts...]
Partition partition_from_json(const json& j);

json to_json(const Bipartition& bp); // {"top","bottom","k","r"}
Bipartition bipartition_from_json(const json& j);

json to_json(const Symbol& s); // {"beta","gamma","floor","k","r"}
Symbol symbol_from_json(const json& j);

json to_json(const FockVector& vec); // {"terms":[{"bipartition":...,"coeff":...}]}
FockVector fock_vector_from_json(const json& j);

json to_json(const ContentMultiset& c); // [[value, multiplicity], ...]
json to_json(const WeightVector& w);
json to_json(const MonomialWord& w); // [[index, exponent], ...]
json to_json(const DPartition& dp);

json to_json(const ConstructibleB& comb); // {"type":"B","terms":[...]}
json to_json(const ConstructibleD& comb, bool literal = false);

// "((1),(2,3))"; components padded with leading zeros when pad_* is positive.
std::string format_partition(const Partition& p, int pad = 0);
std::string format_bipartition(const Bipartition& bp, int pad_top = 0, int pad_bottom = 0);
std::string format_dpartition(const DPartition& dp);
std::string format_dlabel(const DLabel& label);

// Parses "((0,0,1),(2,3))" (zeros allowed, normalized away).
Bipartition parse_bipartition(const std::string& text, int k, int r);

std::string matrix_to_csv(const BasisMatrix& matrix);
// Plain array environment in the layout of the weight-block displays: one row
// label column, empty cells for zero entries.
std::string matrix_to_latex(const BasisMatrix& matrix);
std::string laurent_to_latex(const LaurentPoly& p);

} // namespace cb2
