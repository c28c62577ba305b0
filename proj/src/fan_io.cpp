#include <fstream>
#include <limits>
#include <sstream>

#include "toric/error.hpp"
#include "toric/io.hpp"

namespace toric {

namespace {

nlohmann::json parse_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Integer integer_from(const nlohmann::json& x, const std::string& where) {
  if (!x.is_number_integer()) {
    throw Error(ErrorCode::MalformedFan, where + " must be an integer");
  }
  return x.is_number_unsigned() ? Integer(x.get<std::uint64_t>()) : Integer(x.get<std::int64_t>());
}

Vector vector_from(const nlohmann::json& x, const std::string& where) {
  if (!x.is_array()) throw Error(ErrorCode::MalformedFan, where + " must be an array");
  Vector v;
  for (std::size_t i = 0; i < x.size(); ++i)
    v.push_back(integer_from(x[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::MalformedFan, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Fan fan_from_json(const nlohmann::json& j) {
  Fan f;
  const auto& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0) {
    throw Error(ErrorCode::MalformedFan, "\"dim\" must be a positive integer");
  }
  f.dim = dim.get<std::size_t>();

  const auto& rays = field(j, "rays");
  if (!rays.is_array()) throw Error(ErrorCode::MalformedFan, "\"rays\" must be an array");
  for (std::size_t i = 0; i < rays.size(); ++i)
    f.rays.push_back(vector_from(rays[i], "ray " + std::to_string(i)));

  const auto& cones = field(j, "max_cones");
  if (!cones.is_array()) throw Error(ErrorCode::MalformedFan, "\"max_cones\" must be an array");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string where = "max cone " + std::to_string(c);
    if (!cones[c].is_array()) throw Error(ErrorCode::MalformedFan, where + " must be an array");
    std::vector<std::size_t> idx;
    for (const auto& x : cones[c]) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
        throw Error(ErrorCode::MalformedFan, where + " has a non-index entry");
      }
      idx.push_back(x.get<std::size_t>());
    }
    f.max_cones.push_back(std::move(idx));
  }
  return f;
}

Fan parse_fan(const std::string& text) { return fan_from_json(parse_text(text)); }

nlohmann::ordered_json to_json(const Vector& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min()) {
      a.push_back(x.str());
    } else {
      a.push_back(static_cast<std::int64_t>(x));
    }
  }
  return a;
}

nlohmann::ordered_json to_json(const IntegerMatrix& m) {
  auto a = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

nlohmann::ordered_json fan_to_json(const Fan& f) {
  nlohmann::ordered_json j;
  j["dim"] = f.dim;
  j["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : f.rays) j["rays"].push_back(to_json(r));
  j["max_cones"] = f.max_cones;
  return j;
}

GradingInput grading_from_json(const nlohmann::json& j) {
  const auto& q = field(j, "Q");
  if (!q.is_array() || q.empty()) {
    throw Error(ErrorCode::MalformedFan, "\"Q\" must be a nonempty array of rows");
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < q.size(); ++i)
    rows.push_back(vector_from(q[i], "Q row " + std::to_string(i)));
  const std::size_t cols = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::MalformedFan, "Q row " + std::to_string(i) + " has the wrong length");
    }
  GradingInput gi{IntegerMatrix::from_rows(rows, cols), vector_from(field(j, "w"), "w")};
  if (gi.w.size() != rows.size()) {
    throw Error(ErrorCode::MalformedFan, "\"w\" must have one entry per row of Q");
  }
  return gi;
}

GradingInput parse_grading(const std::string& text) { return grading_from_json(parse_text(text)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace toric
