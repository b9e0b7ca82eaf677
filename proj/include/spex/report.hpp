#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "spex/audit.hpp"
#include "spex/search.hpp"
#include "spex/spectral.hpp"

namespace spex {

inline constexpr const char* kToolVersion = "0.1.0";

/// Full-precision decimal rendering; floats travel as strings so payloads
/// stay byte-stable and diffable.
std::string double_str(double x);

/// Envelope around a payload: tool id, normalized command, seed, timestamp.
/// Rerunning the command with the same seed reproduces `payload` bit for bit;
/// only `generated_at` may differ.
nlohmann::ordered_json make_envelope(const std::string& command,
                                     const nlohmann::ordered_json& args,
                                     std::uint64_t seed,
                                     const nlohmann::ordered_json& payload);

nlohmann::ordered_json spectral_to_json(const SpectralResult& r, bool include_vector);
nlohmann::ordered_json search_report_to_json(const SearchReport& r);
nlohmann::ordered_json crossover_to_json(const CrossoverReport& r);
nlohmann::ordered_json wl_to_json(const WLClassification& r);
nlohmann::ordered_json structure_to_json(const StructureClauses& r);
nlohmann::ordered_json audit_params_to_json(const AuditParams& p, int k, int r);

std::string search_report_to_csv(const SearchReport& r);
std::string crossover_to_csv(const CrossoverReport& r);

/// Writes via a temp file in the same directory plus rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace spex
