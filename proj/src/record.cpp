#include "bizon/app/record.hpp"

#include <json.hpp>

#include <sstream>

namespace bizon::app {

std::string to_json(const ResultRecord& rec) {
  nlohmann::ordered_json j;
  j["graph"] = rec.graph;
  j["r"] = rec.r;
  j["method"] = rec.method;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : rec.hilbert.coeffs()) coeffs.push_back(to_string(c));
  j["hilbert"] = coeffs;
  j["dimension"] = to_string(rec.hilbert.dimension());
  j["top_degree"] = rec.hilbert.top_degree();
  j["top_dimension"] = to_string(rec.hilbert.top_coefficient());
  j["wall_time_seconds"] = rec.wall_time_seconds;
  return j.dump(2);
}

std::string to_text(const ResultRecord& rec) {
  std::ostringstream out;
  out << rec.graph << " (r = " << rec.r << ", " << rec.method << "): dim = " << rec.hilbert.dimension()
      << "; h(k): " << (rec.hilbert.is_zero() ? "0" : rec.hilbert.to_string());
  return out.str();
}

} // namespace bizon::app
