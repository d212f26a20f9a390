#include "tdmono/check_report.hpp"

#include <algorithm>
#include <sstream>

namespace tdmono {

void CheckReport::fail(std::string code, std::string location, std::string detail)
{
    failures.push_back({std::move(code), std::move(location), std::move(detail)});
}

bool CheckReport::has_failure(const std::string& code) const
{
    return std::any_of(failures.begin(), failures.end(),
                       [&](const Failure& f) { return f.code == code; });
}

std::string CheckReport::to_text() const
{
    std::ostringstream os;
    os << name << ": " << (passed() ? "pass" : "FAIL");
    if (!failures.empty())
        os << " (" << failures.size() << " failure" << (failures.size() == 1 ? "" : "s") << ")";
    os << '\n';
    for (const auto& f : failures) {
        os << "  - " << f.code << " at " << f.location;
        if (!f.detail.empty())
            os << ": " << f.detail;
        os << '\n';
    }
    return os.str();
}

util::Json CheckReport::to_json() const
{
    util::Json j;
    j["name"] = name;
    j["passed"] = passed();
    util::Json fs = util::Json::array();
    for (const auto& f : failures)
        fs.push_back({{"code", f.code}, {"location", f.location}, {"detail", f.detail}});
    j["failures"] = std::move(fs);
    j["notes"] = notes;
    return j;
}

} // namespace tdmono
