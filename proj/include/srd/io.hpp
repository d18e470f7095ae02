#pragma once

// File formats shared by the command-line tool and the tests.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "srd/nd_fpt.hpp"
#include "srd/reductions.hpp"
#include "srd/solvers.hpp"
#include "srd/srdf.hpp"

namespace srd::io {

using nlohmann::json;

/// 64-bit FNV-1a of the raw bytes, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// {"labels": [-1|1|2, ...]}
json labeling_to_json(const Labeling& f);
/// Accepts {"labels": [...]} or a solve report carrying result.labels.
/// Throws ParseError (MalformedLine) on shape errors and PreconditionError
/// on values outside {-1, 1, 2}.
Labeling labeling_from_json(const json& j);

json to_json(const MrssInstance& inst);
MrssInstance mrss_from_json(const json& j);

/// "p <|X|> <|Y|> <m> <k>" followed by m lines "e <x> <y>", 1-indexed per side.
RbdsInstance parse_rbds(std::string_view text);
std::string write_rbds(const RbdsInstance& inst);

json to_json(const Verdict& v);
json to_json(const SolveResult& r);
json to_json(const NdPartition& p);

/// {k_prime, roles, witness}
json sidecar(const ReductionOutput& out);

}  // namespace srd::io
