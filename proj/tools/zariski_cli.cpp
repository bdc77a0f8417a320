// Command-line front end: build or load surface lattice models, compute
// Zariski decompositions and denominator bounds, scan example families, and
// verify decomposition files. All arithmetic is exact; every output mode
// renders rationals as "p/q" strings.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zariski/bounds.hpp"
#include "zariski/errors.hpp"
#include "zariski/gallery.hpp"
#include "zariski/linalg.hpp"
#include "zariski/surface_io.hpp"
#include "zariski/zariski.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zariski;

// Exit codes are part of the contract; scripted callers rely on them.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kNotPseudoEffective = 2,   // also: failed verify/validate report
    kOracleDisagreement = 3,   // always a bug
    kEnumerationTooLarge = 4,
};

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

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
    throw ParseError(where + ": expected an exact integer");
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(int_from_json(j, where));
    throw ParseError(where + ": expected a rational \"p/q\" string or integer");
}

// ---------------------------------------------------------------------------
// divisor expressions: "H + Lt", "2*H - E1 - E2", "3 F2 + Gamma"

DivisorClass parse_divisor_expr(const SurfaceModel& x, const std::string& text) {
    DivisorClass acc(x.rank);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    skip_ws();
    if (pos == text.size()) throw ParseError("divisor expression is empty");
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos == text.size() || (text[pos] != '+' && text[pos] != '-'))
                throw ParseError("divisor expression: expected '+' or '-' at position " +
                                 std::to_string(pos));
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
            skip_ws();
        }
        first = false;

        Int coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                digits += text[pos++];
            coeff = Int(digits);
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (pos == text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                    text[pos] == '_'))
            throw ParseError("divisor expression: expected a class name at position " +
                             std::to_string(pos));
        std::string ident;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ident += text[pos++];

        const auto cls = x.resolve_name(ident);
        if (!cls)
            throw ParseError("divisor expression: unknown class name '" + ident + "' on surface '" +
                             x.name + "'");
        acc = acc + (sign * coeff) * *cls;
        skip_ws();
    }
    return acc;
}

// ---------------------------------------------------------------------------
// shared option plumbing

struct ModelOptions {
    std::string surface_file;
    std::string gallery_spec;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
    auto* s = cmd->add_option("--surface", opts.surface_file, "surface model JSON file");
    auto* g = cmd->add_option("--gallery", opts.gallery_spec,
                              "gallery spec (collinear:R | two-lines:K1,K2 | frobenius:P,G,N | "
                              "del-pezzo:R)");
    s->excludes(g);
}

SurfaceModel load_model(const ModelOptions& opts) {
    if (!opts.surface_file.empty()) return load_surface(opts.surface_file);
    if (!opts.gallery_spec.empty()) return gallery::build_from_spec(opts.gallery_spec);
    throw ParseError("one of --surface or --gallery is required");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << content;
}

std::string coords_str(const RationalDivisor& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v.coords[i].str();
    }
    return s + "]";
}

std::string coords_str(const DivisorClass& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v.coords[i].get_str();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// decompose

Int support_det(const SurfaceModel& x, const DivisorClass& d, const ZariskiDecomposition& z) {
    const auto support = z.support();
    if (support.empty()) return 1;
    return linalg::det(negative_part_system(x, d, support).S);
}

json decomposition_to_json(const SurfaceModel& x, const DivisorClass& d,
                           const ZariskiDecomposition& z) {
    json j;
    j["surface"] = x.name;
    json jd = json::array();
    for (const auto& c : d.coords) jd.push_back(int_to_json(c));
    j["D"] = std::move(jd);
    json jp = json::array();
    for (const auto& c : z.positive.coords) jp.push_back(c.str());
    j["P"] = std::move(jp);
    json jn = json::array();
    for (const auto& t : z.negative) {
        json term;
        term["curve"] = x.curves[t.curve].name;
        term["coeff"] = t.coeff.str();
        jn.push_back(std::move(term));
    }
    j["N"] = std::move(jn);
    j["denominator"] = int_to_json(z.denominator);
    json js = json::array();
    for (const auto& t : z.negative) js.push_back(x.curves[t.curve].name);
    j["support"] = std::move(js);
    j["det_support"] = int_to_json(support_det(x, d, z));
    return j;
}

std::string negative_part_str(const SurfaceModel& x, const ZariskiDecomposition& z) {
    if (z.negative.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < z.negative.size(); ++i) {
        if (i) s += " + ";
        s += z.negative[i].coeff.str() + "*" + x.curves[z.negative[i].curve].name;
    }
    return s;
}

int cmd_decompose(const ModelOptions& mopts, const std::string& divisor_expr, bool run_oracle,
                  bool as_json, const std::string& out_path) {
    const auto x = load_model(mopts);
    const auto d = parse_divisor_expr(x, divisor_expr);
    const auto z = decompose(x, d);

    if (run_oracle) {
        const auto zo = decompose_oracle(x, d);
        if (!(zo == z)) {
            std::cerr << "oracle disagreement (this is a bug):\n"
                      << "  engine: P = " << coords_str(z.positive) << ", N = "
                      << negative_part_str(x, z) << "\n"
                      << "  oracle: P = " << coords_str(zo.positive) << ", N = "
                      << negative_part_str(x, zo) << "\n";
            return kOracleDisagreement;
        }
    }

    if (as_json) {
        emit(out_path, decomposition_to_json(x, d, z).dump(2) + "\n");
        return kOk;
    }
    std::ostringstream os;
    os << "surface: " << x.name << "\n"
       << "D = " << coords_str(d) << "\n"
       << "P = " << coords_str(z.positive) << "\n";
    if (z.negative.empty())
        os << "N = 0 (D is nef)\n";
    else
        os << "N = " << negative_part_str(x, z) << "\n";
    os << "support = {";
    for (std::size_t i = 0; i < z.negative.size(); ++i)
        os << (i ? ", " : "") << x.curves[z.negative[i].curve].name;
    os << "}\n"
       << "det(S_support) = " << support_det(x, d, z).get_str() << "\n"
       << "denominator = " << z.denominator.get_str() << "\n";
    if (run_oracle) os << "oracle: agree\n";
    emit(out_path, os.str());
    return kOk;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const ModelOptions& mopts, std::size_t max_size, std::uintmax_t max_subsets,
               bool as_json, const std::string& out_path) {
    const auto x = load_model(mopts);
    const auto sb = bounds::compute_bounds(x, max_size, max_subsets);
    const bool chain_d = sb.d_enum <= sb.d_theorem;
    const bool chain_b = sb.b <= sb.b_theorem;

    if (as_json) {
        json j;
        j["surface"] = x.name;
        j["rho"] = sb.rho;
        j["b"] = int_to_json(sb.b);
        j["delta_abs"] = int_to_json(sb.delta_abs);
        j["d_enum"] = int_to_json(sb.d_enum);
        j["d_theorem"] = int_to_json(sb.d_theorem);
        j["b_theorem"] = int_to_json(sb.b_theorem);
        j["chain_d_enum_le_d_theorem"] = chain_d ? "PASS" : "FAIL";
        j["chain_b_le_b_theorem"] = chain_b ? "PASS" : "FAIL";
        emit(out_path, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "surface: " << x.name << "\n"
           << "rho = " << sb.rho << "\n"
           << "b = " << sb.b.get_str() << "\n"
           << "|Delta| = " << sb.delta_abs.get_str() << "\n"
           << "d_enum = " << sb.d_enum.get_str() << "\n"
           << "b^(rho-1) = " << sb.d_theorem.get_str() << "\n"
           << "d_enum * d_enum! * |Delta| = " << sb.b_theorem.get_str() << "\n"
           << "chain d_enum <= b^(rho-1): " << (chain_d ? "PASS" : "FAIL") << "\n"
           << "chain b <= d_enum * d_enum! * |Delta|: " << (chain_b ? "PASS" : "FAIL") << "\n";
        emit(out_path, os.str());
    }
    return (chain_d && chain_b) ? kOk : kNotPseudoEffective;
}

// ---------------------------------------------------------------------------
// scan

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad range '" + text + "' (expected N or LO..HI)");
    }
}

std::string scan_to_text(const gallery::FamilyScan& scan) {
    std::vector<std::string> headers = scan.param_names;
    headers.insert(headers.end(), {"b", "d_enum", "realized_denominator", "delta_abs", "rho"});
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : scan.rows) {
        std::vector<std::string> r;
        for (long p : row.params) r.push_back(std::to_string(p));
        r.push_back(row.b.get_str());
        r.push_back(row.d_enum.get_str());
        r.push_back(row.realized.get_str());
        r.push_back(row.delta_abs.get_str());
        r.push_back(std::to_string(row.rho));
        cells.push_back(std::move(r));
    }
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    os << "family: " << scan.family << "\n";
    auto put_row = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << r[c] << std::string(width[c] - r[c].size(), ' ');
            os << (c + 1 < r.size() ? "  " : "");
        }
        os << "\n";
    };
    put_row(headers);
    for (const auto& r : cells) put_row(r);
    return os.str();
}

std::string scan_to_csv(const gallery::FamilyScan& scan) {
    std::ostringstream os;
    for (std::size_t c = 0; c < scan.param_names.size(); ++c) os << scan.param_names[c] << ",";
    os << "b,d_enum,realized_denominator,delta_abs,rho\n";
    for (const auto& row : scan.rows) {
        for (long p : row.params) os << p << ",";
        os << row.b.get_str() << "," << row.d_enum.get_str() << "," << row.realized.get_str()
           << "," << row.delta_abs.get_str() << "," << row.rho << "\n";
    }
    return os.str();
}

json scan_to_json(const gallery::FamilyScan& scan) {
    json j;
    j["family"] = scan.family;
    json rows = json::array();
    for (const auto& row : scan.rows) {
        json r;
        for (std::size_t c = 0; c < scan.param_names.size(); ++c)
            r[scan.param_names[c]] = row.params[c];
        r["b"] = int_to_json(row.b);
        r["d_enum"] = int_to_json(row.d_enum);
        r["realized_denominator"] = int_to_json(row.realized);
        r["delta_abs"] = int_to_json(row.delta_abs);
        r["rho"] = row.rho;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

// ---------------------------------------------------------------------------
// verify

struct DecompositionFile {
    DivisorClass d;
    ZariskiDecomposition z;
    std::vector<Violation> pre_violations;  // unknown/duplicate curve names
};

DecompositionFile read_decomposition(const SurfaceModel& x, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open decomposition file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path + ": top level is not an object");
    auto require = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw ParseError(path + ": missing field '" + field + "'");
        return j.at(field);
    };

    DecompositionFile out;
    const auto& jd = require("D");
    if (!jd.is_array() || jd.size() != x.rank)
        throw ParseError(path + ": field 'D' must list " + std::to_string(x.rank) + " integers");
    out.d = DivisorClass(x.rank);
    for (std::size_t i = 0; i < x.rank; ++i) out.d.coords[i] = int_from_json(jd[i], "D");

    const auto& jp = require("P");
    if (!jp.is_array() || jp.size() != x.rank)
        throw ParseError(path + ": field 'P' must list " + std::to_string(x.rank) + " rationals");
    out.z.positive = RationalDivisor(x.rank);
    for (std::size_t i = 0; i < x.rank; ++i)
        out.z.positive.coords[i] = rat_from_json(jp[i], "P");

    const auto& jn = require("N");
    if (!jn.is_array()) throw ParseError(path + ": field 'N' must be an array");
    for (const auto& term : jn) {
        if (!term.is_object() || !term.contains("curve") || !term.contains("coeff"))
            throw ParseError(path + ": entries of 'N' need 'curve' and 'coeff'");
        const std::string cname = term.at("curve").get<std::string>();
        const auto idx = x.find_curve(cname);
        if (!idx) {
            out.pre_violations.push_back(
                {"support-valid", "curve '" + cname + "' is not registered on surface '" +
                                      x.name + "'"});
            continue;
        }
        out.z.negative.push_back({*idx, rat_from_json(term.at("coeff"), "N.coeff")});
    }
    std::sort(out.z.negative.begin(), out.z.negative.end(),
              [](const NegativeTerm& a, const NegativeTerm& b) { return a.curve < b.curve; });
    for (std::size_t t = 1; t < out.z.negative.size(); ++t)
        if (out.z.negative[t].curve == out.z.negative[t - 1].curve)
            out.pre_violations.push_back(
                {"support-valid",
                 "curve '" + x.curves[out.z.negative[t].curve].name + "' listed twice in 'N'"});

    out.z.denominator = int_from_json(require("denominator"), "denominator");
    return out;
}

int cmd_verify(const std::string& surface_file, const std::string& decomposition_file,
               bool as_json, const std::string& out_path) {
    const auto x = load_surface(surface_file);
    const auto file = read_decomposition(x, decomposition_file);

    auto violations = file.pre_violations;
    for (auto& v : verify(x, file.d, file.z)) violations.push_back(std::move(v));

    static const std::vector<std::string> canonical = {
        "sum", "effective", "negative-definite", "orthogonality", "nef",
        "support-bound", "denominator"};
    auto failed = [&](const std::string& name) {
        std::string detail;
        for (const auto& v : violations)
            if (v.invariant == name) detail += (detail.empty() ? "" : "; ") + v.detail;
        return detail;
    };

    std::vector<std::pair<std::string, std::string>> report;  // name -> detail ("" = pass)
    for (const auto& name : canonical) report.emplace_back(name, failed(name));
    for (const auto& v : violations) {
        bool listed = false;
        for (const auto& name : canonical) listed |= (v.invariant == name);
        if (!listed) report.emplace_back(v.invariant, v.detail);
    }

    const bool ok = violations.empty();
    if (as_json) {
        json j;
        j["surface"] = x.name;
        json conds = json::array();
        for (const auto& [name, detail] : report) {
            json c;
            c["name"] = name;
            c["status"] = detail.empty() ? "PASS" : "FAIL";
            if (!detail.empty()) c["detail"] = detail;
            conds.push_back(std::move(c));
        }
        j["conditions"] = std::move(conds);
        j["ok"] = ok;
        emit(out_path, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& [name, detail] : report) {
            os << name << ": " << (detail.empty() ? "PASS" : "FAIL");
            if (!detail.empty()) os << " (" << detail << ")";
            os << "\n";
        }
        os << (ok ? "decomposition verified\n" : "decomposition INVALID\n");
        emit(out_path, os.str());
    }
    return ok ? kOk : kNotPseudoEffective;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& surface_file, const std::string& out_path) {
    try {
        const auto x = load_surface(surface_file);
        emit(out_path, "surface '" + x.name + "' is valid\n");
        return kOk;
    } catch (const ValidationError& e) {
        emit(out_path, std::string(e.what()) + "\n");
        return kNotPseudoEffective;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Zariski decompositions and denominator bounds on surface lattice models"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "zariski 1.0.0");

    // decompose
    ModelOptions dec_model;
    std::string dec_divisor, dec_out;
    bool dec_oracle = false, dec_json = false;
    auto* dec = app.add_subcommand("decompose", "Zariski decomposition of a divisor");
    add_model_options(dec, dec_model);
    dec->add_option("--divisor", dec_divisor, "divisor expression, e.g. \"H+Lt\" or \"2*H-E1\"")
        ->required();
    dec->add_flag("--oracle", dec_oracle, "cross-check against the brute-force subset oracle");
    dec->add_flag("--json", dec_json, "machine-readable output");
    dec->add_option("--out", dec_out, "write output to a file instead of stdout");

    // bounds
    ModelOptions bnd_model;
    std::string bnd_out;
    bool bnd_json = false;
    std::size_t bnd_max_size = 0;
    std::uintmax_t bnd_max_subsets = bounds::kDefaultMaxSubsets;
    auto* bnd = app.add_subcommand("bounds", "negativity and denominator bounds for a surface");
    add_model_options(bnd, bnd_model);
    bnd->add_option("--max-size", bnd_max_size, "cap on enumerated support size (0 = rank-1)");
    bnd->add_option("--max-subsets", bnd_max_subsets, "cap on the subset enumeration (default 2^20)");
    bnd->add_flag("--json", bnd_json, "machine-readable output");
    bnd->add_option("--out", bnd_out, "write output to a file instead of stdout");

    // scan
    std::string scan_family, scan_r, scan_k1, scan_k2, scan_n, scan_out;
    long scan_p = 2, scan_g = 2;
    bool scan_coprime = false, scan_json = false, scan_csv = false;
    auto* scan = app.add_subcommand("scan", "tabulate a family of surfaces");
    scan->add_option("family", scan_family, "collinear | two-lines | frobenius")->required();
    scan->add_option("--r", scan_r, "collinear: range of r, e.g. 3..12");
    scan->add_option("--k1", scan_k1, "two-lines: range of k1");
    scan->add_option("--k2", scan_k2, "two-lines: range of k2");
    scan->add_flag("--coprime-only", scan_coprime, "two-lines: keep coprime (k1,k2) only");
    scan->add_option("--p", scan_p, "frobenius: characteristic (prime)");
    scan->add_option("--g", scan_g, "frobenius: genus (>= 2)");
    scan->add_option("--n", scan_n, "frobenius: range of n");
    scan->add_flag("--json", scan_json, "JSON output");
    scan->add_flag("--csv", scan_csv, "CSV output");
    scan->add_option("--out", scan_out, "write output to a file instead of stdout");

    // verify
    std::string ver_surface, ver_decomposition, ver_out;
    bool ver_json = false;
    auto* ver = app.add_subcommand("verify", "check a decomposition file against a surface");
    ver->add_option("--surface", ver_surface, "surface model JSON file")->required();
    ver->add_option("--decomposition", ver_decomposition, "decomposition JSON file")->required();
    ver->add_flag("--json", ver_json, "machine-readable output");
    ver->add_option("--out", ver_out, "write output to a file instead of stdout");

    // gallery
    std::string gal_spec, gal_out;
    auto* gal = app.add_subcommand("gallery", "emit a gallery surface as a model file");
    gal->add_option("spec", gal_spec, "family:params, e.g. collinear:5")->required();
    gal->add_option("--out", gal_out, "write output to a file instead of stdout");

    // validate
    std::string val_surface, val_out;
    auto* val = app.add_subcommand("validate", "check a surface file against the model invariants");
    val->add_option("--surface", val_surface, "surface model JSON file")->required();
    val->add_option("--out", val_out, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (dec->parsed())
            return cmd_decompose(dec_model, dec_divisor, dec_oracle, dec_json, dec_out);
        if (bnd->parsed())
            return cmd_bounds(bnd_model, bnd_max_size, bnd_max_subsets, bnd_json, bnd_out);
        if (scan->parsed()) {
            gallery::FamilyScan result;
            if (scan_family == "collinear") {
                if (scan_r.empty()) throw ParseError("scan collinear: --r is required");
                const auto r = parse_range(scan_r);
                result = gallery::scan_collinear(r.lo, r.hi);
            } else if (scan_family == "two-lines") {
                if (scan_k1.empty() || scan_k2.empty())
                    throw ParseError("scan two-lines: --k1 and --k2 are required");
                const auto k1 = parse_range(scan_k1), k2 = parse_range(scan_k2);
                result = gallery::scan_two_lines(k1.lo, k1.hi, k2.lo, k2.hi, scan_coprime);
            } else if (scan_family == "frobenius") {
                if (scan_n.empty()) throw ParseError("scan frobenius: --n is required");
                const auto n = parse_range(scan_n);
                result = gallery::scan_frobenius(scan_p, scan_g, n.lo, n.hi);
            } else {
                throw ParseError("unknown scan family '" + scan_family + "'");
            }
            if (scan_json)
                emit(scan_out, scan_to_json(result).dump(2) + "\n");
            else if (scan_csv)
                emit(scan_out, scan_to_csv(result));
            else
                emit(scan_out, scan_to_text(result));
            return kOk;
        }
        if (ver->parsed()) return cmd_verify(ver_surface, ver_decomposition, ver_json, ver_out);
        if (gal->parsed()) {
            emit(gal_out, surface_to_json(gallery::build_from_spec(gal_spec)));
            return kOk;
        }
        if (val->parsed()) return cmd_validate(val_surface, val_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const NotPseudoEffective& e) {
        std::cerr << "not pseudo-effective: " << e.what() << "\n";
        return kNotPseudoEffective;
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEnumerationTooLarge;
    } catch (const OracleLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEnumerationTooLarge;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return kOracleDisagreement;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
