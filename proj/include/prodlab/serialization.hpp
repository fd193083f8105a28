#pragma once

#include "prodlab/adversary.hpp"
#include "prodlab/certifier.hpp"
#include "prodlab/labelling.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace prodlab {

// JSON documents. Edge keys are "u-v" with u < v; rationals are strings such
// as "3" or "-1/2". Parsing failures throw ParseError.

/// {"0-1": ["1", "2"], ...}
std::string lists_to_json(const ListAssignment& la);
ListAssignment lists_from_json(std::string_view text);

/// {"0-1": "2", ...}
std::string labelling_to_json(const Labelling& lab);
Labelling labelling_from_json(std::string_view text);

/// {"mode": "product", "exponents": [2, 2], "coefficient": "-1", "bound": 3, "max_degree": true}
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

/// {"graph": "<edge list text>", "lists": {...}, "claim": "..."}
std::string witness_to_json(const AdversaryWitness& w);
AdversaryWitness witness_from_json(std::string_view text);

/// Whole-file helpers; failures throw IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace prodlab
