#pragma once

#include <string>

#include <json.hpp>

#include "zipunfold/congruence.hpp"
#include "zipunfold/foldverify.hpp"
#include "zipunfold/zipper.hpp"

namespace zipunfold {

using Json = nlohmann::ordered_json;

Json to_json(const Polyhedron& p);
Json to_json(const CutPath& c);
Json to_json(const Net& n);
Json to_json(const Zipping& z);
Json to_json(const ZipRejection& r);
/// `with_rejected` adds every rejected candidate with its violating angle sum.
Json to_json(const ZipReport& r, bool with_rejected = false);
Json to_json(const FoldSpec& f);
Json to_json(const VerificationReport& r);
Json to_json(const Isometry2& g);

/// Net reference {solid, path[, mirrored]} -> (solid, path); throws std::invalid_argument.
CutPath cut_path_from_json(const Json& j);
FoldSpec foldspec_from_json(const Json& j);
FoldSpec load_foldspec(const std::string& path);

/// Stable, human-diffable serialization (2-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace zipunfold
