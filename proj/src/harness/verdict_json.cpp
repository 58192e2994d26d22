#include "p3/harness/verdict_json.hpp"

#include <stdexcept>

namespace p3 {

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["winner"] = v.winner == Winner::kFirst ? "first" : "second";
  j["grundy"] = v.grundy ? nlohmann::ordered_json(*v.grundy) : nlohmann::ordered_json(nullptr);
  j["witness"] = v.witness ? nlohmann::ordered_json(*v.witness) : nlohmann::ordered_json(nullptr);
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("winner")) throw std::invalid_argument("verdict must be an object with a winner");
  Verdict v;
  const auto& w = j.at("winner");
  if (w == "first") {
    v.winner = Winner::kFirst;
  } else if (w == "second") {
    v.winner = Winner::kSecond;
  } else {
    throw std::invalid_argument("verdict winner must be \"first\" or \"second\"");
  }
  if (j.contains("grundy") && !j.at("grundy").is_null()) {
    if (!j.at("grundy").is_number_unsigned()) throw std::invalid_argument("verdict grundy must be a nonnegative integer");
    v.grundy = j.at("grundy").get<Grundy>();
  }
  if (j.contains("witness") && !j.at("witness").is_null()) {
    if (!j.at("witness").is_number_unsigned()) throw std::invalid_argument("verdict witness must be a vertex id");
    v.witness = j.at("witness").get<Vertex>();
  }
  return v;
}

std::string describe(const Verdict& v) {
  std::string out = v.winner == Winner::kFirst ? "first" : "second";
  if (v.grundy) out += " g=" + std::to_string(*v.grundy);
  if (v.witness) out += " w=" + std::to_string(*v.witness);
  return out;
}

}  // namespace p3
