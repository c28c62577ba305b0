#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "toric/fan.hpp"
#include "toric/reconstruction.hpp"

namespace toric {

// JSON syntax errors raise ParseError; schema violations raise MalformedFan.
Fan fan_from_json(const nlohmann::json& j);
Fan parse_fan(const std::string& text);
nlohmann::ordered_json fan_to_json(const Fan& f);

GradingInput grading_from_json(const nlohmann::json& j);
GradingInput parse_grading(const std::string& text);

std::string read_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const Vector& v);
nlohmann::ordered_json to_json(const IntegerMatrix& m);

}  // namespace toric
