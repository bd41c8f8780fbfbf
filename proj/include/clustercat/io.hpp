#pragma once

#include "clustercat/charcat.hpp"
#include "clustercat/clusteralg.hpp"
#include "clustercat/grass.hpp"
#include "clustercat/rep.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace clustercat::io {

using Json = nlohmann::json;

/// {"n": 4, "arrows": [{"id": "a1", "s": 1, "t": 2}, ...]}; "id" is optional.
Json quiver_to_json(const Quiver& q);
/// Throws ParseError on a malformed document, VertexOutOfRange on bad endpoints.
Quiver quiver_from_json(const Json& j);

/// {"quiver": ..., "dims": [...], "matrices": {"a": [[...], ...]}, "relations": [...]}.
/// Matrices are row-major with dims[target] rows.
Json rep_to_json(const Representation& v);
Representation rep_from_json(const Json& j);

/// Parses text, mapping JSON syntax errors to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);
Quiver read_quiver(const std::filesystem::path& path);
Representation read_rep(const std::filesystem::path& path);

/// {"canonical": "x1*x2^-1 + x2^-1*x3", "fraction": "(x1 + x3)/x2"}.
Json laurent_json(const LaurentPoly& f);

/// Vertices with composition series and tau, irreducible maps, meshes.
Json ar_quiver_json(const ARQuiver& ar);

/// Every indecomposable with its index and CC value, in table order.
Json cc_table_json(const TypeAContext& ctx, const CCTable& table);

Json seed_json(const Seed& s);
Json ct_object_json(const CTObject& r, const CCTable& table);

/// All e <= dim V in lexicographic order with chi(Gr_e(V)), plus F_V.
Json grassmannian_json(const Representation& v);

}  // namespace clustercat::io
