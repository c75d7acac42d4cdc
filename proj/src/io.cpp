#include "sqdet/io.hpp"

#include "sqdet/errors.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace sqdet {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
    static const std::regex form(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, form)) throw InputError("not a rational: '" + text + "'");
    Rational r;
    r.get_num() = BigInt(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    r.get_den() = m[3].matched ? BigInt(m[3].str()) : BigInt(1);
    if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

namespace {

const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string, got " + std::string(j.type_name()));
    return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array, got " + std::string(j.type_name()));
    return j;
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<int>();
}

// Rationals may also be written as bare JSON integers.
Rational as_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    try {
        return parse_rational(as_string(j, where));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

Arrangement parse_arrangement(const json& j) {
    const int dim = as_int(field(j, "dim", "arrangement"), "arrangement.dim");
    if (dim < 1) throw InputError("arrangement.dim: must be positive");
    std::vector<Hyperplane> hs;
    const json& list = as_array(field(j, "hyperplanes", "arrangement"), "arrangement.hyperplanes");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "hyperplanes[" + std::to_string(i) + "]";
        Hyperplane h;
        h.label = as_string(field(list[i], "label", where), where + ".label");
        const json& normal = as_array(field(list[i], "normal", where), where + ".normal");
        for (std::size_t k = 0; k < normal.size(); ++k)
            h.normal.push_back(as_rational(normal[k], where + ".normal[" + std::to_string(k) + "]"));
        h.offset = as_rational(field(list[i], "offset", where), where + ".offset");
        hs.push_back(std::move(h));
    }
    return Arrangement(dim, std::move(hs));
}

nlohmann::ordered_json arrangement_to_json(const Arrangement& arr) {
    nlohmann::ordered_json out;
    out["dim"] = arr.dim();
    out["hyperplanes"] = nlohmann::ordered_json::array();
    for (const auto& h : arr.hyperplanes()) {
        nlohmann::ordered_json hj;
        hj["label"] = h.label;
        hj["normal"] = nlohmann::ordered_json::array();
        for (const auto& c : h.normal) hj["normal"].push_back(format_rational(c));
        hj["offset"] = format_rational(h.offset);
        out["hyperplanes"].push_back(std::move(hj));
    }
    return out;
}

AffineOrientedMatroid parse_oriented_matroid(const json& j) {
    const int rank = as_int(field(j, "rank", "oriented_matroid"), "oriented_matroid.rank");
    std::vector<std::string> ground;
    const json& elements = as_array(field(j, "elements", "oriented_matroid"), "oriented_matroid.elements");
    for (std::size_t i = 0; i < elements.size(); ++i)
        ground.push_back(as_string(elements[i], "elements[" + std::to_string(i) + "]"));
    const std::string chi = as_string(field(j, "chirotope", "oriented_matroid"), "oriented_matroid.chirotope");
    const json& lift = field(j, "lift", "oriented_matroid");
    const std::string g = as_string(field(lift, "g", "lift"), "lift.g");
    const json& list = as_array(field(lift, "feasible_cocircuits", "lift"), "lift.feasible_cocircuits");

    Chirotope central = Chirotope::from_string(ground, rank, chi);
    std::vector<SignVector> feasible;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "lift.feasible_cocircuits[" + std::to_string(i) + "]";
        try {
            feasible.push_back(parse_sign_vector(as_string(list[i], where), ground));
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    return AffineOrientedMatroid(std::move(central), g, std::move(feasible));
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Instance instance_from_arrangement(const Arrangement& arr) {
    Instance out;
    out.kind = "arrangement";
    out.arrangement = arr;
    out.om = compile(arr);
    out.digest = fnv1a_digest(arrangement_to_json(arr).dump());
    return out;
}

Instance load_instance_text(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw InputError("input: expected a JSON object");
    const bool geometric = j.contains("hyperplanes");
    const bool combinatorial = j.contains("chirotope");
    if (geometric == combinatorial)
        throw InputError("input: expected exactly one of an arrangement (\"hyperplanes\") or an oriented matroid "
                         "(\"chirotope\")");
    Instance out;
    if (geometric) {
        out = instance_from_arrangement(parse_arrangement(j));
    } else {
        out.kind = "oriented_matroid";
        out.om = parse_oriented_matroid(j);
    }
    out.digest = fnv1a_digest(text);
    return out;
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_instance_text(buf.str());
}

} // namespace sqdet
