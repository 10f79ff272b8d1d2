#pragma once

#include <string>
#include <string_view>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"
#include "rcx/reductions.hpp"
#include "rcx/solver.hpp"

// JSON text for the machine-readable payloads. All vertex ids and colours
// are 1-indexed on the wire; keys are emitted in sorted order, so identical
// values always serialize to identical bytes.
namespace rcx {

std::string verdict_json(const Verdict& v);
std::string fk_evidence_json(const FkEvidence& e, int k);
std::string crx_outcome_json(const CrxOutcome& o, int k);

// Instances are stored as a graph file plus a JSON sidecar holding the
// source description, per-vertex roles, per-edge class tags and the
// optional base colouring.
std::string instance_sidecar_json(const ReductionInstance& inst);
ReductionInstance parse_instance(std::string_view graph_text, std::string_view sidecar_json);

std::string role_tag_name(RoleTag tag);
RoleTag role_tag_from_name(std::string_view name);

}  // namespace rcx
