#include "gea/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gea::jsonio {

namespace {

double as_number(const json& j, const std::string& what) {
    if (!j.is_number()) throw std::invalid_argument(what + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument(what + ": number is not finite");
    return v;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '"';
}

void append_value(std::string& out, const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                append_escaped(out, it.key());
                out += ':';
                append_value(out, it.value());
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                append_value(out, v);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
        case json::value_t::boolean:
        case json::value_t::null:
            out += j.dump();
            break;
        case json::value_t::string:
            append_escaped(out, j.get<std::string>());
            break;
        default:
            throw std::invalid_argument("dump_deterministic: unsupported JSON value");
    }
}

}  // namespace

const json& required_field(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument("missing required field \"" + key + "\"");
    return j.at(key);
}

double number_field(const json& j, const std::string& key) {
    return as_number(required_field(j, key), key);
}

json mat3_to_json(const Rotation& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int k = 0; k < 3; ++k) row.push_back(m(i, k));
        rows.push_back(row);
    }
    return rows;
}

Rotation mat3_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument(what + ": expected 3 rows");
    Rotation m;
    for (int i = 0; i < 3; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument(what + ": expected 3 columns per row");
        for (int k = 0; k < 3; ++k) m(i, k) = as_number(row[k], what);
    }
    return m;
}

json skew_to_json(const SkewGenerator& z) {
    return json{{"c12", z.c12}, {"c13", z.c13}, {"c23", z.c23}};
}

SkewGenerator skew_from_json(const json& j, const std::string& what) {
    if (!j.is_object()) throw std::invalid_argument(what + ": expected an object");
    return {number_field(j, "c12"), number_field(j, "c13"), number_field(j, "c23")};
}

json su_to_json(const SuGenerator& v) {
    return json{{"bx", v.bx}, {"by", v.by}, {"bz", v.bz}};
}

SuGenerator su_from_json(const json& j, const std::string& what) {
    if (!j.is_object()) throw std::invalid_argument(what + ": expected an object");
    return {number_field(j, "bx"), number_field(j, "by"), number_field(j, "bz")};
}

json unitary_to_json(const Unitary2& u) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int k = 0; k < 2; ++k) row.push_back(json::array({u(i, k).real(), u(i, k).imag()}));
        rows.push_back(row);
    }
    return rows;
}

Unitary2 unitary_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(what + ": expected 2 rows");
    Unitary2 u;
    for (int i = 0; i < 2; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != 2)
            throw std::invalid_argument(what + ": expected 2 columns per row");
        for (int k = 0; k < 2; ++k) {
            const json& entry = row[k];
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument(what + ": entries must be [re, im] pairs");
            u(i, k) = {as_number(entry[0], what), as_number(entry[1], what)};
        }
    }
    return u;
}

json factors_to_json(const Factorization& f) {
    json out = json::array();
    for (const Factor& factor : f.factors)
        out.push_back(json{{"axis", factor.axis == Axis::Z1 ? "Z1" : "Z2"},
                           {"parameter", factor.parameter}});
    return out;
}

Factorization factors_from_json(const json& j, double rho, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + ": expected an array of factors");
    Factorization f;
    f.rho = rho;
    for (const json& entry : j) {
        const json& axis = required_field(entry, "axis");
        if (!axis.is_string() || (axis != "Z1" && axis != "Z2"))
            throw std::invalid_argument(what + ": factor axis must be \"Z1\" or \"Z2\"");
        f.factors.push_back({axis == "Z1" ? Axis::Z1 : Axis::Z2, number_field(entry, "parameter")});
    }
    return f;
}

json schedule_to_json(const ControlSchedule& s) {
    json segments = json::array();
    for (const Segment& seg : s.segments)
        segments.push_back(json{{"u", seg.u}, {"duration", seg.duration}});
    return json{{"segments", segments}};
}

ControlSchedule schedule_from_json(const json& j, const std::string& what) {
    const json& segments = required_field(j, "segments");
    if (!segments.is_array()) throw std::invalid_argument(what + ": \"segments\" must be an array");
    ControlSchedule s;
    for (const json& entry : segments) {
        const double duration = number_field(entry, "duration");
        if (duration < 0.0) throw std::invalid_argument(what + ": segment duration must be >= 0");
        s.segments.push_back({number_field(entry, "u"), duration});
    }
    return s;
}

std::string dump_deterministic(const json& j) {
    std::string out;
    append_value(out, j);
    return out;
}

void write_deterministic(std::ostream& os, const json& j) {
    os << dump_deterministic(j) << "\n";
}

}  // namespace gea::jsonio
