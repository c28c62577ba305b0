#include "toric/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace toric {

void Report::set_error(std::string code, std::string message) {
  ok = false;
  error_code = std::move(code);
  error_message = std::move(message);
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : sections) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.entries) entries[k] = v;
    j["sections"].push_back({{"title", s.title}, {"entries", entries}});
  }
  if (ok) {
    j["status"] = {{"state", "ok"}};
  } else {
    j["status"] = {{"state", "error"}, {"code", error_code}, {"message", error_message}};
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "toric-cox " << command << "\n";
  os << "input sha256: " << input_digest << "\n";
  for (const auto& s : sections) {
    os << "\n== " << s.title << " ==\n";
    for (const auto& [k, v] : s.entries) {
      os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  os << "\nstatus: ";
  if (ok) {
    os << "ok\n";
  } else {
    os << "error " << error_code << ": " << error_message << "\n";
  }
  return os.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace toric
