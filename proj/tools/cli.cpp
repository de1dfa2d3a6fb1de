#include "cli.hpp"

#include "kmw/characters.hpp"
#include "kmw/fixtures.hpp"
#include "kmw/hull.hpp"
#include "kmw/json_io.hpp"
#include "kmw/weight_sets.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#ifndef KMW_VERSION
#define KMW_VERSION "dev"
#endif

namespace kmw::cli {

namespace {

constexpr std::size_t kDefaultMaxSteps = 10000;

// Options shared by most subcommands; unused ones stay at their defaults.
struct Options {
    std::string gcm;
    std::string hw;
    std::string offset;
    std::string J = "all";
    std::string Jprime;
    std::string integrability;
    bool simple = false;
    std::int64_t cutoff = 10;
    std::optional<std::size_t> length;
    std::size_t max_steps = kDefaultMaxSteps;
    std::string method = "slice";
    std::string route = "all";
    std::string identity;
    std::string contains;
    bool real_only = false;
    std::string format = "json";
    bool timing = false;
};

/// Outcome of one subcommand: the result document, an exit code and an
/// optional text rendering.
struct Outcome {
    Json result = Json::object();
    int code = kOk;
    std::string text;
};

GeneralizedCartanMatrix load_gcm(const std::string& spec)
{
    if (spec.empty()) throw Error(ErrorKind::InvalidArgument, "--gcm is required");
    for (const auto& name : fixture_names())
        if (name == spec) return fixture(name);
    std::ifstream in(spec);
    if (!in) throw Error(ErrorKind::InvalidArgument, "no fixture or readable file named '" + spec + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidArgument, spec + ": " + e.what());
    }
    if (doc.is_array()) doc = Json{{"matrix", doc}};
    return gcm_from_json(doc);
}

IndexSet parse_subset(const std::string& text, std::size_t rank, const char* flag)
{
    if (text == "all") return full_index_set(rank);
    IndexSet s = parse_index_list(text);
    for (int i : s)
        if (i < 0 || static_cast<std::size_t>(i) >= rank)
            throw Error(ErrorKind::InvalidArgument, std::string(flag) + " index " + std::to_string(i) + " out of range");
    return s;
}

QVec parse_vector(const std::string& text, std::size_t rank, const char* flag, bool zero_default)
{
    if (text.empty() && zero_default) return QVec(rank, Rational(0));
    QVec v = parse_rational_list(text);
    if (v.size() != rank)
        throw Error(ErrorKind::InvalidArgument, std::string(flag) + " needs " + std::to_string(rank) + " entries");
    return v;
}

QVec parse_hw(const Options& o, std::size_t rank)
{
    if (o.hw.empty()) return QVec(rank, Rational(1));
    return parse_vector(o.hw, rank, "--hw", false);
}

Json zvec_list(const ZVecSet& s)
{
    Json arr = Json::array();
    for (const auto& v : s) arr.push_back(v);
    return arr;
}

std::string text_offsets(const ZVecSet& s)
{
    std::string out;
    for (const auto& m : s) out += format_zvec(m) + "\n";
    return out;
}

std::string text_series(const FormalSeries& s)
{
    std::ostringstream out;
    for (const auto& [m, k] : s.coefficients())
        if (k != 0) out << format_zvec(m) << "\t" << k << "\n";
    return out.str();
}

// symmetric difference of two offset sets as JSON
Json difference(const ZVecSet& route, const ZVecSet& reference)
{
    ZVecSet only_route, only_reference;
    std::set_difference(route.begin(), route.end(), reference.begin(), reference.end(),
                        std::inserter(only_route, only_route.end()), HeightLexLess{});
    std::set_difference(reference.begin(), reference.end(), route.begin(), route.end(),
                        std::inserter(only_reference, only_reference.end()), HeightLexLess{});
    return Json{{"only_in_route", zvec_list(only_route)}, {"only_in_slice", zvec_list(only_reference)}};
}

Outcome cmd_roots(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["height"] = o.cutoff;
    inputs["real_only"] = o.real_only;
    Outcome out;
    std::ostringstream text;
    Json roots = Json::array();
    if (o.real_only) {
        for (const auto& r : real_positive_roots(gcm, o.cutoff)) {
            roots.push_back(Json{{"root", r}, {"mult", 1}, {"real", true}});
            text << format_zvec(r) << "\t1\treal\n";
        }
    } else {
        auto sym = try_symmetrize(gcm);
        auto datum = positive_roots(gcm, sym, o.cutoff);
        out.result["symmetrizer"] = rationals_to_json(sym->d);
        for (const auto& r : datum.entries()) {
            roots.push_back(Json{{"root", r.root}, {"mult", r.mult}, {"real", r.real}});
            text << format_zvec(r.root) << "\t" << r.mult << "\t" << (r.real ? "real" : "imaginary") << "\n";
        }
    }
    out.result["count"] = roots.size();
    out.result["roots"] = std::move(roots);
    out.text = text.str();
    return out;
}

Outcome cmd_classify(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["J"] = index_set_to_json(J);
    Outcome out;
    std::ostringstream text;
    out.result["type"] = std::string(to_string(classify_subdiagram(gcm, J)));
    text << "type\t" << to_string(classify_subdiagram(gcm, J)) << "\n";
    Json comps = Json::array();
    for (const auto& comp : connected_components(gcm, J)) {
        auto t = to_string(classify_subdiagram(gcm, comp));
        comps.push_back(Json{{"indices", index_set_to_json(comp)}, {"type", std::string(t)}});
        text << format_index_set(comp) << "\t" << t << "\n";
    }
    out.result["components"] = std::move(comps);
    if (auto sym = try_symmetrize(gcm)) {
        out.result["symmetrizer"] = rationals_to_json(sym->d);
    } else {
        out.result["symmetrizer"] = nullptr;
        text << "not symmetrizable\n";
    }
    out.text = text.str();
    return out;
}

// Routes that apply to M(lambda, J); the slice route always does.
struct RouteSet {
    std::map<std::string, std::function<WeightSet()>> routes;
    std::map<std::string, std::string> skipped;
};

RouteSet applicable_routes(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J, std::int64_t N)
{
    RouteSet rs;
    rs.routes["slice"] = [&gcm, c, J, N] { return wt_parabolic_verma(gcm, c, J, N); };
    const bool simple = J == integrability_of_simple(c);
    const bool finite_isotropy = isotropy_is_finite(gcm, Weight::at_basepoint(c), J);
    if (!simple) {
        rs.skipped["orbit"] = "only for simple modules";
        rs.skipped["weylkac"] = "only for simple modules";
    } else if (!finite_isotropy) {
        rs.skipped["orbit"] = "infinite isotropy";
        rs.skipped["weylkac"] = "infinite isotropy";
    } else {
        rs.routes["orbit"] = [&gcm, c, N] { return wt_simple_via_orbit(gcm, c, N); };
        rs.routes["weylkac"] = [&gcm, c, N] { return support(weyl_kac_weight_series(gcm, c, N).series); };
    }
    if (classify_subdiagram(gcm, J) == DiagramType::Finite)
        rs.routes["hull"] = [&gcm, c, J, N] { return wt_via_hull(gcm, c, J, N); };
    else
        rs.skipped["hull"] = "W_J is infinite";
    return rs;
}

Outcome cmd_weights(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    QVec c = parse_hw(o, gcm.rank());
    IndexSet J = o.simple ? integrability_of_simple(c) : parse_subset(o.integrability, gcm.rank(), "--integrability");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["hw"] = rationals_to_json(c);
    inputs["integrability"] = index_set_to_json(J);
    inputs["method"] = o.method;

    Outcome out;
    out.result["module"] = Json{{"c", rationals_to_json(c)}, {"integrability", index_set_to_json(J)}};
    auto determined = wt_highest_weight_module(gcm, ModuleSpec{c, J}, o.cutoff);
    if (auto* u = std::get_if<Undetermined>(&determined)) {
        out.result["status"] = "undetermined: diagram not complete";
        out.result["potential_integrability"] = index_set_to_json(u->potential_integrability);
        out.result["complete"] = u->complete;
        out.text = "undetermined: diagram not complete\n";
        return out;
    }

    auto rs = applicable_routes(gcm, c, J, o.cutoff);
    if (o.method != "all") {
        auto it = rs.routes.find(o.method);
        if (it == rs.routes.end()) {
            auto skip = rs.skipped.find(o.method);
            if (skip == rs.skipped.end()) throw Error(ErrorKind::InvalidArgument, "unknown method " + o.method);
            throw Error(ErrorKind::InvalidArgument, "method " + o.method + " does not apply: " + skip->second);
        }
        auto set = it->second();
        out.result["status"] = "determined";
        out.result["weights"] = weight_set_to_json(set);
        out.text = text_offsets(set.offsets);
        return out;
    }

    auto reference = rs.routes.at("slice")();
    bool agree = true;
    Json routes = Json::object();
    std::ostringstream text;
    for (const auto& [name, route] : rs.routes) {
        auto set = name == "slice" ? reference : route();
        Json entry{{"count", set.offsets.size()}};
        if (set.offsets != reference.offsets) {
            agree = false;
            entry["difference"] = difference(set.offsets, reference.offsets);
        }
        text << name << "\t" << set.offsets.size() << (set.offsets == reference.offsets ? "" : "\tMISMATCH") << "\n";
        routes[name] = std::move(entry);
    }
    for (const auto& [name, why] : rs.skipped) {
        routes[name] = Json{{"skipped", why}};
        text << name << "\tskipped (" << why << ")\n";
    }
    out.result["status"] = "determined";
    out.result["routes"] = std::move(routes);
    out.result["agreement"] = agree;
    out.result["weights"] = weight_set_to_json(reference);
    text << "agreement: " << (agree ? "true" : "false") << "\n" << text_offsets(reference.offsets);
    out.text = text.str();
    out.code = agree ? kOk : kMismatch;
    return out;
}

Outcome cmd_orbit(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    Weight w{parse_hw(o, gcm.rank()), parse_vector(o.offset, gcm.rank(), "--offset", true)};
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["weight"] = weight_to_json(w);
    inputs["J"] = index_set_to_json(J);
    auto slice = orbit(gcm, w, J, o.cutoff);
    Outcome out;
    Json offsets = Json::array();
    std::ostringstream text;
    for (const auto& m : slice.offsets) {
        offsets.push_back(rationals_to_json(m));
        text << "(";
        for (std::size_t i = 0; i < m.size(); ++i) text << (i ? "," : "") << format_rational(m[i]);
        text << ")\n";
    }
    out.result["count"] = offsets.size();
    out.result["offsets"] = std::move(offsets);
    out.text = text.str();
    return out;
}

Outcome cmd_dominant(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    Weight w{parse_hw(o, gcm.rank()), parse_vector(o.offset, gcm.rank(), "--offset", true)};
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["weight"] = weight_to_json(w);
    inputs["J"] = index_set_to_json(J);
    auto res = to_dominant(gcm, w, J, o.max_steps);
    Outcome out;
    out.result["weight"] = weight_to_json(res.weight);
    out.result["word"] = word_to_json(res.word);
    Json pairings = Json::array();
    for (std::size_t j = 0; j < gcm.rank(); ++j) pairings.push_back(format_rational(res.weight.pairing(gcm, j)));
    out.result["pairings"] = std::move(pairings);
    std::ostringstream text;
    text << "word\t" << word_to_json(res.word).dump() << "\noffset\t" << rationals_to_json(res.weight.m).dump() << "\n";
    out.text = text.str();
    return out;
}

Outcome cmd_character(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    QVec c = parse_hw(o, gcm.rank());
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["hw"] = rationals_to_json(c);
    inputs["J"] = index_set_to_json(J);
    inputs["route"] = o.route;
    Outcome out;
    auto induction = [&] { return ch_parabolic_verma_induction(gcm, c, J, o.cutoff); };
    if (o.route == "induction") {
        auto s = induction();
        out.result["series"] = series_to_json(s);
        out.text = text_series(s);
    } else if (o.route == "alternating" || o.route == "atiyah-bott") {
        auto r = o.route == "alternating" ? ch_parabolic_verma_alternating(gcm, c, J, o.cutoff)
                                          : ch_parabolic_verma_atiyahbott(gcm, c, J, o.cutoff);
        out.result["group_elements"] = r.group_elements;
        out.result["series"] = series_to_json(r.series);
        out.text = text_series(r.series);
    } else if (o.route == "all") {
        auto s = induction();
        auto alt = ch_parabolic_verma_alternating(gcm, c, J, o.cutoff);
        auto ab = ch_parabolic_verma_atiyahbott(gcm, c, J, o.cutoff);
        bool agree = alt.series == s && ab.series == s;
        out.result["agreement"] = agree;
        out.result["group_elements"] = alt.group_elements;
        out.result["series"] = series_to_json(s);
        if (!agree) {
            out.result["alternating"] = series_to_json(alt.series);
            out.result["atiyah_bott"] = series_to_json(ab.series);
        }
        out.text = std::string("agreement: ") + (agree ? "true" : "false") + "\n" + text_series(s);
        out.code = agree ? kOk : kMismatch;
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown route " + o.route);
    }
    return out;
}

Outcome cmd_hull(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    QVec c = parse_hw(o, gcm.rank());
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["hw"] = rationals_to_json(c);
    inputs["J"] = index_set_to_json(J);
    auto h = ray_decomposition(gcm, c, J, o.cutoff);
    Outcome out;
    out.result["hull"] = hull_to_json(h);
    std::ostringstream text;
    text << "vertices\n" << text_offsets(h.vertices) << "rays\n" << text_offsets(h.rays);
    if (h.truncated) text << "truncated\n";
    if (!o.contains.empty()) {
        QVec m = parse_vector(o.contains, gcm.rank(), "--contains", false);
        inputs["contains"] = rationals_to_json(m);
        bool inside = hull_contains(h, m);
        out.result["contains"] = inside;
        text << "contains\t" << (inside ? "true" : "false") << "\n";
    }
    out.text = text.str();
    return out;
}

Outcome cmd_cosets(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    auto Jp = parse_subset(o.Jprime, gcm.rank(), "--J'");
    if (!is_subset(Jp, J)) throw Error(ErrorKind::InvalidArgument, "--J' must be a subset of --J");
    inputs["gcm"] = gcm_to_json(gcm);
    inputs["J"] = index_set_to_json(J);
    inputs["J'"] = index_set_to_json(Jp);
    if (o.length) inputs["length"] = *o.length;
    if (!o.length && classify_subdiagram(gcm, J) != DiagramType::Finite)
        throw Error(ErrorKind::RequiresFiniteType, "W_J is infinite; pass --length");
    Outcome out;
    Json words = Json::array();
    std::ostringstream text;
    for (const auto& w : minimal_coset_reps(gcm, Jp, J, o.length)) {
        words.push_back(word_to_json(w));
        text << word_to_json(w).dump() << "\n";
    }
    out.result["count"] = words.size();
    out.result["representatives"] = std::move(words);
    out.text = text.str();
    return out;
}

Outcome verdict(Outcome out, bool pass)
{
    out.result["pass"] = pass;
    out.code = pass ? kOk : kMismatch;
    out.text += pass ? "pass\n" : "FAIL\n";
    return out;
}

Outcome cmd_check(const Options& o, Json& inputs)
{
    auto gcm = load_gcm(o.gcm);
    inputs["identity"] = o.identity;
    inputs["gcm"] = gcm_to_json(gcm);
    Outcome out;
    out.result["identity"] = o.identity;

    if (o.identity == "denominator") {
        auto r = denominator_identity_report(gcm);
        out.result["roots"] = r.roots;
        out.result["simple_systems"] = r.simple_systems;
        out.result["terms"] = r.lhs.terms().size();
        out.text = "roots\t" + std::to_string(r.roots) + "\nsimple systems\t" + std::to_string(r.simple_systems) + "\n";
        return verdict(std::move(out), r.holds);
    }
    if (o.identity == "rank2-imaginary") {
        const std::size_t L = o.length.value_or(static_cast<std::size_t>(2 * o.cutoff + 4));
        inputs["cutoff"] = o.cutoff;
        inputs["length"] = L;
        auto r = rank2_trivial_identity(gcm, o.cutoff, L);
        Json table = Json::array();
        std::ostringstream text;
        text << "offset\texpected\tobserved\tstabilized_at\n";
        for (const auto& s : r.offsets) {
            table.push_back(Json{{"offset", s.offset},
                                 {"expected", s.expected},
                                 {"observed", s.observed},
                                 {"stabilized_at", s.stabilized_at}});
            text << format_zvec(s.offset) << "\t" << s.expected << "\t" << s.observed << "\t" << s.stabilized_at << "\n";
        }
        out.result["imaginary_roots"] = zvec_list(r.imaginary_roots);
        out.result["stabilization"] = std::move(table);
        out.text = text.str();
        return verdict(std::move(out), r.agreement);
    }

    QVec c = parse_hw(o, gcm.rank());
    auto J = parse_subset(o.J, gcm.rank(), "--J");
    inputs["hw"] = rationals_to_json(c);
    inputs["J"] = index_set_to_json(J);
    inputs["cutoff"] = o.cutoff;

    if (o.identity == "bggl") {
        auto Jp = parse_subset(o.Jprime, gcm.rank(), "--J'");
        if (!is_subset(Jp, J)) throw Error(ErrorKind::InvalidArgument, "--J' must be a subset of --J");
        inputs["J'"] = index_set_to_json(Jp);
        std::optional<std::size_t> L = o.length;
        if (!L && classify_subdiagram(gcm, J) != DiagramType::Finite)
            throw Error(ErrorKind::RequiresFiniteType, "W_J is infinite; pass --length");
        if (L) inputs["length"] = *L;
        auto lhs = bggl_euler_character(gcm, c, Jp, J, o.cutoff, L);
        auto rhs = ch_parabolic_verma_induction(gcm, c, J, o.cutoff);
        out.result["terms"] = minimal_coset_reps(gcm, Jp, J, L).size();
        out.result["character"] = series_to_json(rhs);
        return verdict(std::move(out), lhs == rhs);
    }
    if (o.identity == "atiyah-bott") {
        auto ind = ch_parabolic_verma_induction(gcm, c, J, o.cutoff);
        auto alt = ch_parabolic_verma_alternating(gcm, c, J, o.cutoff);
        auto ab = ch_parabolic_verma_atiyahbott(gcm, c, J, o.cutoff);
        out.result["group_elements"] = ab.group_elements;
        out.result["induction_equals_alternating"] = alt.series == ind;
        out.result["induction_equals_atiyah_bott"] = ab.series == ind;
        return verdict(std::move(out), alt.series == ind && ab.series == ind);
    }
    if (o.identity == "hull-stabilizer") {
        auto s = hull_stabilizer(gcm, ray_decomposition(gcm, c, J, o.cutoff));
        out.result["stabilizer_generators"] = index_set_to_json(s.simple_generators);
        out.result["stabilizer_order"] = s.elements.size();
        out.result["equals_parabolic"] = s.equals_parabolic;
        out.text = "generators\t" + format_index_set(s.simple_generators) + "\norder\t" +
                   std::to_string(s.elements.size()) + "\n";
        return verdict(std::move(out), s.simple_generators == J && s.equals_parabolic);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown identity " + o.identity);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weights and characters of highest weight modules over Kac-Moody algebras", "kmw"};
    app.require_subcommand(1);
    app.set_version_flag("--version", KMW_VERSION);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--timing", o.timing, "record elapsed time in the manifest");
    };
    auto add_gcm = [&](CLI::App* sub) {
        sub->add_option("--gcm,--type", o.gcm, "fixture name or JSON file")->required();
    };

    std::map<CLI::App*, std::function<Outcome(const Options&, Json&)>> handlers;

    auto* roots = app.add_subcommand("roots", "positive roots with multiplicities");
    add_gcm(roots);
    roots->add_option("--height", o.cutoff, "height cutoff");
    roots->add_flag("--real-only", o.real_only, "list real roots only (any GCM)");
    handlers[roots] = cmd_roots;

    auto* classify = app.add_subcommand("classify", "finite/affine/indefinite type of a subdiagram");
    add_gcm(classify);
    classify->add_option("--J", o.J, "index list or 'all'");
    handlers[classify] = cmd_classify;

    auto* weights = app.add_subcommand("weights", "weight set of a highest weight module");
    add_gcm(weights);
    weights->add_option("--hw", o.hw, "highest weight pairings, e.g. 1,1/2")->required();
    auto* integ = weights->add_option("--integrability", o.integrability, "integrability index list");
    auto* simple = weights->add_flag("--simple", o.simple, "the simple module L(lambda)");
    integ->excludes(simple);
    weights->add_option("--cutoff", o.cutoff, "height cutoff");
    weights->add_option("--method", o.method, "slice|orbit|hull|weylkac|all")
        ->check(CLI::IsMember({"slice", "orbit", "hull", "weylkac", "all"}));
    handlers[weights] = cmd_weights;

    auto* orbit_cmd = app.add_subcommand("orbit", "truncated W_J-orbit of a weight");
    add_gcm(orbit_cmd);
    orbit_cmd->add_option("--hw", o.hw, "basepoint pairings")->required();
    orbit_cmd->add_option("--offset", o.offset, "offset below the basepoint");
    orbit_cmd->add_option("--J", o.J, "index list or 'all'");
    orbit_cmd->add_option("--cutoff", o.cutoff, "height cutoff");
    handlers[orbit_cmd] = cmd_orbit;

    auto* dominant = app.add_subcommand("dominant", "raise a weight into the J-dominant chamber");
    add_gcm(dominant);
    dominant->add_option("--hw", o.hw, "basepoint pairings")->required();
    dominant->add_option("--offset", o.offset, "offset below the basepoint");
    dominant->add_option("--J", o.J, "index list or 'all'");
    dominant->add_option("--max-steps", o.max_steps, "reflection budget")->check(CLI::PositiveNumber);
    handlers[dominant] = cmd_dominant;

    auto* character = app.add_subcommand("character", "truncated character of M(lambda, J)");
    add_gcm(character);
    character->add_option("--hw", o.hw, "highest weight pairings")->required();
    character->add_option("--J", o.J, "integrability index list or 'all'");
    character->add_option("--cutoff", o.cutoff, "height cutoff");
    character->add_option("--route", o.route, "induction|alternating|atiyah-bott|all")
        ->check(CLI::IsMember({"induction", "alternating", "atiyah-bott", "all"}));
    handlers[character] = cmd_character;

    auto* hull = app.add_subcommand("hull", "vertex/ray presentation of conv M(lambda, J)");
    add_gcm(hull);
    hull->add_option("--hw", o.hw, "highest weight pairings")->required();
    hull->add_option("--J", o.J, "index list or 'all'");
    hull->add_option("--cutoff", o.cutoff, "truncation height for infinite W_J");
    hull->add_option("--contains", o.contains, "offset to test for membership");
    handlers[hull] = cmd_hull;

    auto* cosets = app.add_subcommand("cosets", "minimal representatives of W_J' \\ W_J");
    add_gcm(cosets);
    cosets->add_option("--J", o.J, "index list or 'all'");
    cosets->add_option("--J'", o.Jprime, "index list");
    cosets->add_option("--length", o.length, "length bound");
    handlers[cosets] = cmd_cosets;

    auto* check = app.add_subcommand("check", "verify an identity exactly");
    check->add_option("identity", o.identity, "denominator|bggl|atiyah-bott|rank2-imaginary|hull-stabilizer")
        ->required()
        ->check(CLI::IsMember({"denominator", "bggl", "atiyah-bott", "rank2-imaginary", "hull-stabilizer"}));
    add_gcm(check);
    check->add_option("--hw", o.hw, "highest weight pairings (default all 1)");
    check->add_option("--J", o.J, "index list or 'all'");
    check->add_option("--J'", o.Jprime, "index list");
    check->add_option("--cutoff", o.cutoff, "height cutoff");
    check->add_option("--length", o.length, "length bound");
    handlers[check] = cmd_check;

    for (auto& [sub, handler] : handlers) add_format(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Json inputs = Json::object();
    Json manifest{{"command", chosen->get_name()}, {"version", KMW_VERSION}};
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = handlers.at(chosen)(o, inputs);
    } catch (const Error& e) {
        const int code = e.kind() == ErrorKind::InvalidArgument ? kUsage : kPrecondition;
        err << "kmw " << chosen->get_name() << ": " << e.what() << "\n";
        outcome.result = Json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        outcome.code = code;
        outcome.text = std::string("error: ") + e.what() + "\n";
    }
    manifest["input_digest"] = digest(inputs.dump());
    Json cutoffs = Json{{"N", o.cutoff}, {"L", nullptr}, {"max_steps", o.max_steps}};
    if (inputs.contains("length")) cutoffs["L"] = inputs["length"];
    manifest["cutoffs"] = std::move(cutoffs);
    manifest["inputs"] = inputs;
    if (o.timing) {
        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        manifest["elapsed_ms"] = elapsed.count();
    }

    if (o.format == "text") {
        out << "# kmw " << manifest["command"].get<std::string>() << " " << KMW_VERSION << " digest "
            << manifest["input_digest"].get<std::string>() << "\n"
            << outcome.text;
    } else {
        Json doc{{"manifest", std::move(manifest)}, {"result", std::move(outcome.result)}};
        out << doc.dump(2) << "\n";
    }
    return outcome.code;
}

}  // namespace kmw::cli
