#include "ziglab/report.hpp"

#include <sstream>

namespace ziglab {

std::string Report::text(bool include_timing) const {
    std::ostringstream os;
    os << "target: " << target << '\n';
    os << "checked: " << checked << '\n';
    for (const auto& [k, v] : extras) os << k << ": " << v << '\n';
    os << "failures: " << failures.size() << '\n';
    for (const auto& f : failures) os << "  " << f << '\n';
    os << "result: " << (ok() ? "ok" : "FAILED") << '\n';
    if (include_timing) os << "elapsed_ms: " << elapsed_ms << '\n';
    return os.str();
}

nlohmann::ordered_json Report::json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["target"] = target;
    j["checked"] = checked;
    for (const auto& [k, v] : extras) j[k] = v;
    j["failures"] = failures;
    j["ok"] = ok();
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

} // namespace ziglab
