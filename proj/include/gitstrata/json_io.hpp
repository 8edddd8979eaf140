#pragma once

#include "gitstrata/blowup.hpp"
#include "gitstrata/weights.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gitstrata {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Thrown by the JSON readers with the offending field path in the
/// message.
class FieldError : public std::invalid_argument {
public:
  FieldError(const std::string& path, const std::string& why)
      : std::invalid_argument(path + ": " + why) {}
};

Rational rational_from_json(const nlohmann::json& j, const std::string& path);
QVector qvector_from_json(const nlohmann::json& j, const std::string& path);

WeightSystem weight_system_from_json(const nlohmann::json& j);
std::vector<StratumCell> cells_from_json(const nlohmann::json& j);

nlohmann::json epsweight_to_json(const EpsWeight& w);
nlohmann::json trace_to_json(const std::vector<StepRecord>& trace);

/// 64-bit FNV-1a, hex encoded; stable across platforms, good enough for
/// a content-addressed cache key.
std::string content_hash(const std::string& payload);

/// Deterministic report envelope: sorted keys, canonical rational
/// strings, trailing newline.
std::string make_report(const std::string& command, const std::string& input_hash,
                        const nlohmann::json& outputs);

}  // namespace gitstrata
