#include "zariski/surface_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

using json = nlohmann::ordered_json;

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ": '" + j.get<std::string>() + "' is not an integer");
        }
    }
    throw ParseError(where + ": expected an exact integer (number or decimal string)");
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

IntVector vector_from_json(const json& j, std::size_t expect, const std::string& where) {
    if (!j.is_array() || j.size() != expect)
        throw ParseError(where + ": expected an array of " + std::to_string(expect) + " integers");
    IntVector out(expect);
    for (std::size_t i = 0; i < expect; ++i)
        out[i] = int_from_json(j[i], where + "[" + std::to_string(i) + "]");
    return out;
}

const json& require(const json& j, const std::string& field) {
    if (!j.contains(field)) throw ParseError("missing field '" + field + "'");
    return j.at(field);
}

}  // namespace

SurfaceModel surface_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("surface JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("surface JSON: top level is not an object");

    const auto& jname = require(j, "name");
    if (!jname.is_string()) throw ParseError("field 'name': expected a string");

    const auto& jrank = require(j, "rank");
    if (!jrank.is_number_integer() || jrank.get<std::int64_t>() < 1)
        throw ParseError("field 'rank': expected a positive integer");
    const auto rank = static_cast<std::size_t>(jrank.get<std::int64_t>());

    const auto& jgram = require(j, "gram");
    if (!jgram.is_array() || jgram.size() != rank)
        throw ParseError("field 'gram': expected " + std::to_string(rank) + " rows");
    std::vector<IntVector> rows;
    rows.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        rows.push_back(vector_from_json(jgram[i], rank, "gram[" + std::to_string(i) + "]"));

    DivisorClass ample(vector_from_json(require(j, "ample"), rank, "ample"));

    const auto& jcurves = require(j, "curves");
    if (!jcurves.is_array()) throw ParseError("field 'curves': expected an array");
    std::vector<std::pair<std::string, DivisorClass>> curves;
    curves.reserve(jcurves.size());
    for (std::size_t i = 0; i < jcurves.size(); ++i) {
        const auto& jc = jcurves[i];
        const std::string where = "curves[" + std::to_string(i) + "]";
        if (!jc.is_object()) throw ParseError(where + ": expected an object");
        const auto& cn = require(jc, "name");
        if (!cn.is_string()) throw ParseError(where + ".name: expected a string");
        curves.emplace_back(cn.get<std::string>(),
                            DivisorClass(vector_from_json(require(jc, "class"), rank, where + ".class")));
    }

    std::vector<std::string> basis;
    if (j.contains("basis")) {
        const auto& jb = j.at("basis");
        if (!jb.is_array() || jb.size() != rank)
            throw ParseError("field 'basis': expected " + std::to_string(rank) + " names");
        for (const auto& b : jb) {
            if (!b.is_string()) throw ParseError("field 'basis': names must be strings");
            basis.push_back(b.get<std::string>());
        }
    }

    return make_surface(jname.get<std::string>(), IntMatrix::from_rows(rows), std::move(ample),
                        std::move(curves), std::move(basis));
}

std::string surface_to_json(const SurfaceModel& x) {
    json j;
    j["name"] = x.name;
    j["rank"] = x.rank;
    json gram = json::array();
    for (std::size_t i = 0; i < x.rank; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < x.rank; ++k) row.push_back(int_to_json(x.gram.at(i, k)));
        gram.push_back(std::move(row));
    }
    j["gram"] = std::move(gram);
    json ample = json::array();
    for (const auto& c : x.ample.coords) ample.push_back(int_to_json(c));
    j["ample"] = std::move(ample);
    json curves = json::array();
    for (const auto& c : x.curves) {
        json jc;
        jc["name"] = c.name;
        json cls = json::array();
        for (const auto& v : c.cls.coords) cls.push_back(int_to_json(v));
        jc["class"] = std::move(cls);
        curves.push_back(std::move(jc));
    }
    j["curves"] = std::move(curves);
    j["basis"] = x.basis;
    return j.dump(2) + "\n";
}

SurfaceModel load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open surface file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return surface_from_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_surface(const SurfaceModel& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write surface file '" + path + "'");
    out << surface_to_json(x);
}

}  // namespace zariski
