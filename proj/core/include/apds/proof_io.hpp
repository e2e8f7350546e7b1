#pragma once

#include <string>
#include <string_view>

#include "apds/certify.hpp"
#include "apds/proof.hpp"

namespace apds {

/// Proof documents:
///   step          {"atom": "S(a b)", "rule": "i8", "children": [...]}
///   hypothesis    {"hyp": "Q(x)"}
///   continuation  {"continue": "!P(a a)"}
std::string write_proof_json(const ProofNode& proof, int indent = 2);
ProofNode read_proof_json(std::string_view text);

std::string write_trace_json(const std::vector<ReductionStep>& trace, int indent = 2);
std::string write_expansion_map_json(const ExpansionMap& map, const NegationSystem& automaton_negation, int indent = 2);

}  // namespace apds
