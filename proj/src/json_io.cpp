#include "kmw/json_io.hpp"

#include <cstdio>

namespace kmw {

GeneralizedCartanMatrix gcm_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
        throw Error(ErrorKind::InvalidArgument, "GCM document needs a \"matrix\" array");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) throw Error(ErrorKind::InvalidArgument, "matrix rows must be arrays");
        std::vector<std::int64_t> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw Error(ErrorKind::InvalidArgument, "matrix entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        rows.push_back(std::move(r));
    }
    std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    return validate_gcm(rows, name);
}

Json gcm_to_json(const GeneralizedCartanMatrix& gcm)
{
    Json doc = Json::object();
    if (!gcm.name().empty()) doc["name"] = gcm.name();
    doc["matrix"] = gcm.entries();
    return doc;
}

std::string roots_to_jsonl(const RootDatum& roots)
{
    std::string out;
    for (const auto& r : roots.entries()) {
        Json line = Json::object();
        line["root"] = r.root;
        line["mult"] = r.mult;
        line["real"] = r.real;
        out += line.dump() + "\n";
    }
    return out;
}

Json rationals_to_json(const QVec& v)
{
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(format_rational(q));
    return arr;
}

namespace {

QVec rationals_from_json(const Json& arr)
{
    if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, "expected an array of rationals");
    QVec out;
    for (const auto& x : arr) {
        if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) out.emplace_back(static_cast<long>(x.get<std::int64_t>()));
        else throw Error(ErrorKind::InvalidArgument, "rationals are strings \"p/q\" or integers");
    }
    return out;
}

}  // namespace

Json weight_to_json(const Weight& w)
{
    Json doc = Json::object();
    doc["c"] = rationals_to_json(w.c);
    doc["m"] = rationals_to_json(w.m);
    return doc;
}

Weight weight_from_json(const Json& doc)
{
    Weight w{rationals_from_json(doc.at("c")), rationals_from_json(doc.at("m"))};
    if (w.c.size() != w.m.size()) throw Error(ErrorKind::InvalidArgument, "c and m must have equal length");
    return w;
}

Json word_to_json(const WeylWord& w)
{
    return Json(w.letters());
}

Json index_set_to_json(const IndexSet& s)
{
    return Json(std::vector<int>(s.begin(), s.end()));
}

Json weight_set_to_json(const WeightSet& s)
{
    Json doc = Json::object();
    doc["basepoint"] = rationals_to_json(s.basepoint);
    doc["cutoff"] = s.cutoff;
    Json offsets = Json::array();
    for (const auto& m : s.offsets) offsets.push_back(m);
    doc["offsets"] = std::move(offsets);
    return doc;
}

WeightSet weight_set_from_json(const Json& doc)
{
    WeightSet s{rationals_from_json(doc.at("basepoint")), doc.at("cutoff").get<std::int64_t>(), {}};
    for (const auto& m : doc.at("offsets")) s.offsets.insert(m.get<ZVec>());
    return s;
}

Json series_to_json(const FormalSeries& s)
{
    Json arr = Json::array();
    for (const auto& [m, k] : s.coefficients()) {
        Json term = Json::object();
        term["offset"] = m;
        term["coeff"] = k;
        arr.push_back(std::move(term));
    }
    return arr;
}

Json hull_to_json(const HullPresentation& h)
{
    Json doc = Json::object();
    Json verts = Json::array(), rays = Json::array();
    for (const auto& v : h.vertices) verts.push_back(v);
    for (const auto& r : h.rays) rays.push_back(r);
    doc["vertices"] = std::move(verts);
    doc["rays"] = std::move(rays);
    doc["truncated"] = h.truncated;
    return doc;
}

std::string digest(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace kmw
