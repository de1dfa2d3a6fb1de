#include "kmw/fixtures.hpp"

#include <map>

namespace kmw {

namespace {

const std::map<std::string, std::vector<std::vector<std::int64_t>>>& table()
{
    static const std::map<std::string, std::vector<std::vector<std::int64_t>>> t = {
        {"A1", {{2}}},
        {"A2", {{2, -1}, {-1, 2}}},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        {"B2", {{2, -2}, {-1, 2}}},
        {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
        {"C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
        {"A1xA1", {{2, 0}, {0, 2}}},
        {"affineA1", {{2, -2}, {-2, 2}}},
        {"affineA2", {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}},
        {"hyperbolic", {{2, -3}, {-3, 2}}},
    };
    return t;
}

}  // namespace

GeneralizedCartanMatrix fixture(const std::string& name)
{
    auto it = table().find(name);
    if (it == table().end()) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
    return validate_gcm(it->second, name);
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& [name, _] : table()) out.push_back(name);
    return out;
}

}  // namespace kmw
