#pragma once

// JSON file formats. Complex numbers are [re, im] pairs and matrices are
// arrays of rows, so M[i][j] = [re, im].
//
//   channel: { "name": str, "dim": N, "kraus": [M, ...] }
//   state:   { "rho": M }  or a bare matrix M
//   walk:    { "graph": {"cycle": N} | {"nodes": V, "degree": d, "ports": [[node, coin], ...]},
//              "coin": M, "decoherence_p": p,
//              "initial": {"coin": a, "node": v} | {"amplitudes": [[re, im], ...]} }
//
// Doubles are written with round-trip precision, so parse -> serialize ->
// parse reproduces every finite value bit for bit.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "qmc/channel.hpp"
#include "qmc/walks.hpp"

namespace qmc::io {

using json = nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j);

json channel_to_json(const KrausSet& k);
KrausSet channel_from_json(const json& j);

json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);

struct WalkFile {
  WalkSpec spec;
  WalkState initial;
};

json walk_to_json(const WalkSpec& spec, const WalkState& initial);
WalkFile walk_from_json(const json& j);

/// Reads and parses a JSON file; failures become ParseError.
json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qmc::io
