#pragma once
#include <string>

#include <json.hpp>

#include "cobord/classifying.hpp"
#include "cobord/gps.hpp"
#include "cobord/lazard.hpp"
#include "cobord/ring.hpp"

namespace cobord::serialize {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheVersion = 1;
inline constexpr int kSchemaVersion = 1;

Json imat_to_json(const IMat& m);
IMat imat_from_json(const Json& j);

// Basis cache for a table: version, maxCodegree, generators, per-codegree
// bases ([monomial, coeff] pairs), plus the reduction transforms the bases
// alone cannot reconstruct.
Json table_to_json(const lazard::Table& table);
lazard::TableHandle table_from_json(const Json& j);

std::string cache_file_name(int max_codegree);
// flag value wins over COBORD_CACHE_DIR, which wins over ".cobord-cache"
std::string resolve_cache_dir(const std::string& flag_value);
lazard::TableHandle load_or_build(int max_codegree, const std::string& cache_dir,
                                  bool rebuild);

Json relem_to_json(const RElem& e);
RElem relem_from_json(const Json& j, const RingHandle& ring);

Json series_to_json(const gps::GradedSeries& s);
gps::GradedSeries series_from_json(const Json& j, const RingHandle& ring);

// The `ring` subcommand's result object: generators, relations, and the
// graded pieces for the requested degrees.
Json presentation_to_json(const classifying::RingPresentation& p,
                          const std::vector<int>& degrees);
classifying::RingPresentation presentation_from_json(const Json& j, const RingHandle& ring);

std::string dump(const Json& j);  // fixed formatting, newline-terminated

}  // namespace cobord::serialize
