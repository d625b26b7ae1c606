#include "json.hpp"
#include "secant/catalog.hpp"

namespace secant::catalog {

std::string report_json(const ClassificationReport& report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : report) {
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    for (const auto& v : e.verdicts) verdicts[v.name] = {{"pass", v.pass}, {"detail", v.detail}};
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    for (const auto& [key, value] : e.computed)
      computed[key] = {{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
    out.push_back({{"name", e.name},
                   {"dim", e.dim},
                   {"verdicts", verdicts},
                   {"computed", computed},
                   {"pass", e.pass},
                   {"reasons", e.reasons()}});
  }
  return out.dump(2);
}

}  // namespace secant::catalog
