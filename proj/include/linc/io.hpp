#pragma once
// Artifact serialization and the field-spec mini-language. Everything here
// is deterministic: JSON objects keep their keys sorted, weight tables list
// weights ascending, and counts are decimal strings because dual counts
// outgrow 64 bits.
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "linc/analysis.hpp"
#include "linc/code.hpp"
#include "linc/extension.hpp"
#include "linc/gf.hpp"

namespace linc {

// "p^s" or "p^s:c0,c1,...,cs" with the defining polynomial low-degree-first;
// "p" alone is accepted for prime fields.
FieldPtr parse_field_spec(const std::string& spec);
// Canonical round-trip form, always carrying the defining polynomial.
std::string field_spec(const Field& f);

// Comma-separated element encodings, validated against q; must have exactly
// n entries.
std::vector<uint32_t> parse_vector(const std::string& csv, const FieldPtr& f,
                                   size_t n);

nlohmann::json field_json(const Field& f);
nlohmann::json code_json(const LinearCode& c);
nlohmann::json weights_json(const WeightDistribution& wd);
nlohmann::json extension_json(const ExtensionSpec& spec);

// "weight,count" header plus one row per nonzero count, weights ascending.
std::string weights_csv(const WeightDistribution& wd);

// Fixed two-space indent plus trailing newline, the one JSON text form used
// for files and stdout.
std::string json_text(const nlohmann::json& j);

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace linc
