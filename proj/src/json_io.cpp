#include "sumlike/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

namespace sumlike {

void check_fields(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what)
{
    if (!j.is_object()) {
        fail(std::string(what) + " must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) {
            fail("unknown field '" + key + "' in " + std::string(what));
        }
    }
}

const Json& require(const Json& j, const char* key, std::string_view what)
{
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(std::string(what) + " is missing field '" + key + "'");
    }
    return *it;
}

double as_number(const Json& j, std::string_view what)
{
    if (!j.is_number()) {
        fail(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

std::string as_string(const Json& j, std::string_view what)
{
    if (!j.is_string()) {
        fail(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

std::vector<double> as_numbers(const Json& j, std::string_view what)
{
    if (!j.is_array()) {
        fail(std::string(what) + " must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(as_number(v, what));
    return out;
}

std::vector<std::string> as_strings(const Json& j, std::string_view what)
{
    if (!j.is_array()) {
        fail(std::string(what) + " must be an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        // Real-valued points may be written as bare numbers.
        out.push_back(v.is_number() ? format_real(v.get<double>()) : as_string(v, what));
    }
    return out;
}

namespace {

Interval interval_from_json(const Json& j)
{
    const auto v = as_numbers(j, "domain");
    if (v.size() != 2) {
        fail("domain must be a two-element array [lo, hi]");
    }
    return {v[0], v[1]};
}

Json interval_to_json(const Interval& d)
{
    return Json::array({d.lo, d.hi});
}

void write_number(std::ostringstream& os, double x)
{
    if (std::isnan(x)) {
        os << "\"NaN\"";
    } else if (std::isinf(x)) {
        os << (x > 0 ? "\"INFINITE\"" : "\"-INFINITE\"");
    } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        os << buf;
    }
}

void write(std::ostringstream& os, const Json& j, int indent, int depth)
{
    const auto newline = [&](int d) {
        if (indent > 0) {
            os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) os << ',';
            first = false;
            newline(depth + 1);
            os << Json(key).dump() << (indent > 0 ? ": " : ":");
            write(os, value, indent, depth + 1);
        }
        newline(depth);
        os << '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        bool flat = true;
        for (const auto& v : j) flat = flat && !v.is_structured();
        os << '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) os << (flat && indent > 0 ? ", " : ",");
            first = false;
            if (!flat) newline(depth + 1);
            write(os, v, indent, depth + 1);
        }
        if (!flat) newline(depth);
        os << ']';
        return;
    }
    case Json::value_t::number_float:
        write_number(os, j.get<double>());
        return;
    default:
        os << j.dump();
        return;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// writers

Json to_json(const ModulusSample& s)
{
    Json psi = Json::array();
    for (const auto& row : s.table().rows()) psi.push_back(row);
    return Json{{"name", s.name()}, {"points", s.points()}, {"psi", psi}};
}

Json to_json(const ScalarModulus& f)
{
    if (const auto* pl = std::get_if<PowerLaw>(&f.impl())) {
        Json j{{"type", "power"}, {"exponent", pl->exponent}};
        if (std::isfinite(pl->cap)) j["cap"] = pl->cap;
        return j;
    }
    const auto& pw = std::get<PiecewiseModulus>(f.impl());
    return Json{{"type", "piecewise"},
                {"breakpoints", pw.breakpoints()},
                {"slopes", pw.slopes()},
                {"joins", pw.joins()},
                {"cap", pw.cap()}};
}

Json to_json(const ModulusSpec& spec)
{
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TableModulus>) {
                Json j = to_json(v.sample);
                return Json{{"kind", "table"}, {"name", j["name"]}, {"points", j["points"]}, {"psi", j["psi"]}};
            } else if constexpr (std::is_same_v<T, PowerModulus>) {
                return Json{{"kind", "power"}, {"p", v.p}, {"domain", interval_to_json(v.domain)}};
            } else if constexpr (std::is_same_v<T, FModulus>) {
                return Json{{"kind", "f"}, {"f", to_json(v.f)}, {"domain", interval_to_json(v.domain)}};
            } else {
                return Json{{"kind", "indicator"}, {"blocks", v.blocks}};
            }
        },
        spec.variant());
}

Json to_json(const FamilyDescription& fam)
{
    Json coords = Json::array();
    for (const auto& c : fam.coords) coords.push_back(to_json(c));
    Json j{{"name", fam.name}};
    if (!fam.notes.empty()) j["notes"] = fam.notes;
    if (fam.tail) j["tail"] = *fam.tail;
    j["coords"] = std::move(coords);
    return j;
}

Json to_json(const ToleranceConfig& tol)
{
    return Json{{"eps_abs", tol.eps_abs}, {"eps_rel", tol.eps_rel}};
}

// ---------------------------------------------------------------------------
// readers

ModulusSample sample_from_json(const Json& j)
{
    check_fields(j, {"name", "points", "psi", "kind"}, "sample");
    if (auto it = j.find("kind"); it != j.end() && *it != "table") {
        fail("sample kind must be 'table'");
    }
    const std::string name = j.contains("name") ? as_string(j["name"], "name") : "sample";
    auto points = as_strings(require(j, "points", "sample"), "points");
    const auto& psi = require(j, "psi", "sample");
    if (!psi.is_array()) fail("psi must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : psi) rows.push_back(as_numbers(row, "psi row"));
    return ModulusSample(name, std::move(points), SquareMatrix::from_rows(rows));
}

ScalarModulus scalar_modulus_from_json(const Json& j)
{
    const std::string type = as_string(require(j, "type", "f"), "f.type");
    if (type == "power") {
        check_fields(j, {"type", "exponent", "cap"}, "power f");
        PowerLaw f;
        f.exponent = as_number(require(j, "exponent", "power f"), "exponent");
        if (j.contains("cap")) f.cap = as_number(j["cap"], "cap");
        return f;
    }
    if (type == "piecewise") {
        check_fields(j, {"type", "breakpoints", "slopes", "joins", "cap"}, "piecewise f");
        return PiecewiseModulus(as_numbers(require(j, "breakpoints", "piecewise f"), "breakpoints"),
                                as_numbers(require(j, "slopes", "piecewise f"), "slopes"),
                                as_numbers(require(j, "joins", "piecewise f"), "joins"),
                                as_number(require(j, "cap", "piecewise f"), "cap"));
    }
    fail("unknown f type '" + type + "' (expected 'power' or 'piecewise')");
}

ModulusSpec modulus_spec_from_json(const Json& j)
{
    if (!j.is_object()) fail("coordinate must be a JSON object");
    const std::string kind = as_string(require(j, "kind", "coordinate"), "kind");
    if (kind == "power") {
        check_fields(j, {"kind", "p", "domain"}, "power coordinate");
        PowerModulus pm;
        pm.p = as_number(require(j, "p", "power coordinate"), "p");
        if (j.contains("domain")) pm.domain = interval_from_json(j["domain"]);
        return ModulusSpec(pm);
    }
    if (kind == "table") {
        return ModulusSpec(TableModulus{sample_from_json(j)});
    }
    if (kind == "indicator") {
        check_fields(j, {"kind", "blocks"}, "indicator coordinate");
        const auto& blocks = require(j, "blocks", "indicator coordinate");
        if (!blocks.is_array()) fail("blocks must be an array of label arrays");
        IndicatorModulus im;
        for (const auto& b : blocks) im.blocks.push_back(as_strings(b, "block"));
        return ModulusSpec(im);
    }
    if (kind == "f") {
        check_fields(j, {"kind", "f", "domain"}, "f coordinate");
        Interval domain;
        if (j.contains("domain")) domain = interval_from_json(j["domain"]);
        return ModulusSpec(FModulus{scalar_modulus_from_json(require(j, "f", "f coordinate")), domain});
    }
    fail("unknown coordinate kind '" + kind + "'");
}

FamilyDescription family_from_json(const Json& j)
{
    check_fields(j, {"name", "notes", "tail", "coords"}, "family");
    FamilyDescription fam;
    fam.name = j.contains("name") ? as_string(j["name"], "name") : "family";
    if (j.contains("notes")) fam.notes = as_string(j["notes"], "notes");
    if (j.contains("tail")) fam.tail = as_string(j["tail"], "tail");
    const auto& coords = require(j, "coords", "family");
    if (!coords.is_array()) fail("coords must be an array");
    for (const auto& c : coords) fam.coords.push_back(modulus_spec_from_json(c));
    fam.validate();
    return fam;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string dump_json(const Json& j, int indent)
{
    std::ostringstream os;
    write(os, j, indent, 0);
    return os.str();
}

Json number_or_infinite(double x)
{
    if (std::isinf(x)) return x > 0 ? "INFINITE" : "-INFINITE";
    return x;
}

}  // namespace sumlike
