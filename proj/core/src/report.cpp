#include "wilf/report.hpp"

#include "node_checks.hpp"
#include "wilf/bounds.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>
#include <utility>

namespace wilf {

namespace {

using ordered_json = nlohmann::ordered_json;

Int parse_int(std::string_view s) {
    Int v = 0;
    const char* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw std::invalid_argument("bad integer field: '" + std::string(s) + "'");
    return v;
}

bool parse_bool(std::string_view s) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw std::invalid_argument("bad boolean field: '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

void append_rational(std::string& out, const std::optional<Rational>& r) {
    // CSV has no null; the degenerate record writes the 0/0 sentinel.
    if (r) {
        out += std::to_string(r->numerator());
        out += ',';
        out += std::to_string(r->denominator());
    } else {
        out += "0,0";
    }
}

ordered_json rational_to_json(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return ordered_json::array({r->numerator(), r->denominator()});
}

std::optional<Rational> rational_from_json(const ordered_json& j, const char* field) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument(std::string(field) + ": expected [numerator, denominator]");
    const Int den = j[1].get<Int>();
    if (den == 0) throw std::invalid_argument(std::string(field) + ": zero denominator");
    return Rational(j[0].get<Int>(), den);
}

}  // namespace

VerificationRecord make_record(const NumericalSemigroup& sg) {
    VerificationRecord rec;
    rec.generators = sg.minimal_generators();
    rec.multiplicity = sg.multiplicity();
    rec.embedding_dimension = sg.embedding_dimension();
    rec.conductor = sg.conductor();
    rec.c_prime = sg.c_prime();
    rec.genus = sg.genus();
    rec.degenerate = sg.is_degenerate();

    if (rec.degenerate) {
        // N: nothing to bound; every flag is vacuously true.
        rec.type = 0;
        rec.wilf_ok = rec.thm1_ok = rec.type_ok = rec.apery_ok = rec.downset_ok = true;
        rec.is_equality = false;
        return rec;
    }

    rec.type = sg.pseudo_frobenius().type;
    const BoundEvaluation be = evaluate_bounds(sg);
    rec.wilf_quotient = be.wilf_quotient;
    rec.thm1_bound = be.theorem1_bound;
    rec.wilf_ok = be.wilf_holds;
    rec.thm1_ok = be.theorem1_holds;
    rec.type_ok = be.type_bound_holds;
    rec.apery_ok = detail::apery_invariants_hold(sg) && detail::c_prime_formula_matches(sg);
    rec.downset_ok = detail::downset_bound_holds_for(sg);
    rec.is_equality = be.is_wilf_equality;
    return rec;
}

// --- CSV -----------------------------------------------------------------

std::string csv_header() {
    return "generators,m,e,c,c_prime,genus,type,wilf_num,wilf_den,thm1_num,thm1_den,"
           "wilf_ok,thm1_ok,type_ok,is_equality";
}

std::string to_csv_row(const VerificationRecord& rec) {
    std::string out;
    for (std::size_t i = 0; i < rec.generators.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(rec.generators[i]);
    }
    for (Int v : {rec.multiplicity, rec.embedding_dimension, rec.conductor, rec.c_prime,
                  rec.genus, rec.type}) {
        out += ',';
        out += std::to_string(v);
    }
    out += ',';
    append_rational(out, rec.wilf_quotient);
    out += ',';
    append_rational(out, rec.thm1_bound);
    for (bool b : {rec.wilf_ok, rec.thm1_ok, rec.type_ok, rec.is_equality}) {
        out += ',';
        out += b ? '1' : '0';
    }
    return out;
}

VerificationRecord record_from_csv_row(std::string_view row) {
    const auto fields = split(row, ',');
    if (fields.size() != 15)
        throw std::invalid_argument("expected 15 CSV fields, got " +
                                    std::to_string(fields.size()));

    VerificationRecord rec;
    for (std::string_view g : split(fields[0], ';')) rec.generators.push_back(parse_int(g));
    rec.multiplicity = parse_int(fields[1]);
    rec.embedding_dimension = parse_int(fields[2]);
    rec.conductor = parse_int(fields[3]);
    rec.c_prime = parse_int(fields[4]);
    rec.genus = parse_int(fields[5]);
    rec.type = parse_int(fields[6]);

    const Int wilf_num = parse_int(fields[7]);
    const Int wilf_den = parse_int(fields[8]);
    const Int thm1_num = parse_int(fields[9]);
    const Int thm1_den = parse_int(fields[10]);
    rec.degenerate = wilf_den == 0;
    if (rec.degenerate) {
        if (wilf_num != 0 || thm1_num != 0 || thm1_den != 0)
            throw std::invalid_argument("degenerate row must use the 0/0 sentinel");
    } else {
        if (thm1_den == 0) throw std::invalid_argument("zero denominator in non-degenerate row");
        rec.wilf_quotient = Rational(wilf_num, wilf_den);
        rec.thm1_bound = Rational(thm1_num, thm1_den);
    }

    rec.wilf_ok = parse_bool(fields[11]);
    rec.thm1_ok = parse_bool(fields[12]);
    rec.type_ok = parse_bool(fields[13]);
    rec.is_equality = parse_bool(fields[14]);
    // CSV does not carry these two flags (see header comment); a parsed row
    // assumes they passed, which holds for every row an unmodified sweep emits.
    rec.apery_ok = true;
    rec.downset_ok = true;
    return rec;
}

// --- JSON ----------------------------------------------------------------

std::string to_json_line(const VerificationRecord& rec) {
    ordered_json j;
    j["generators"] = rec.generators;
    j["m"] = rec.multiplicity;
    j["e"] = rec.embedding_dimension;
    j["c"] = rec.conductor;
    j["c_prime"] = rec.c_prime;
    j["genus"] = rec.genus;
    j["type"] = rec.type;
    j["degenerate"] = rec.degenerate;
    j["wilf_quotient"] = rational_to_json(rec.wilf_quotient);
    j["theorem1_bound"] = rational_to_json(rec.thm1_bound);
    j["wilf_ok"] = rec.wilf_ok;
    j["thm1_ok"] = rec.thm1_ok;
    j["type_ok"] = rec.type_ok;
    j["apery_ok"] = rec.apery_ok;
    j["downset_ok"] = rec.downset_ok;
    j["is_equality"] = rec.is_equality;
    return j.dump();
}

VerificationRecord record_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON record: ") + e.what());
    }

    try {
        VerificationRecord rec;
        rec.generators = j.at("generators").get<std::vector<Int>>();
        rec.multiplicity = j.at("m").get<Int>();
        rec.embedding_dimension = j.at("e").get<Int>();
        rec.conductor = j.at("c").get<Int>();
        rec.c_prime = j.at("c_prime").get<Int>();
        rec.genus = j.at("genus").get<Int>();
        rec.type = j.at("type").get<Int>();
        rec.degenerate = j.at("degenerate").get<bool>();
        rec.wilf_quotient = rational_from_json(j.at("wilf_quotient"), "wilf_quotient");
        rec.thm1_bound = rational_from_json(j.at("theorem1_bound"), "theorem1_bound");
        rec.wilf_ok = j.at("wilf_ok").get<bool>();
        rec.thm1_ok = j.at("thm1_ok").get<bool>();
        rec.type_ok = j.at("type_ok").get<bool>();
        rec.apery_ok = j.at("apery_ok").get<bool>();
        rec.downset_ok = j.at("downset_ok").get<bool>();
        rec.is_equality = j.at("is_equality").get<bool>();
        if (rec.degenerate != (!rec.wilf_quotient))
            throw std::invalid_argument("degenerate flag inconsistent with null rationals");
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON record: ") + e.what());
    }
}

}  // namespace wilf
