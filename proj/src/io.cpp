#include "latkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "latkit/errors.hpp"

namespace latkit {

// ---------------------------------------------------------------------------
// JsonValue

JsonValue JsonValue::boolean(bool v) {
    JsonValue j;
    j.kind_ = Kind::boolean;
    j.bool_ = v;
    return j;
}

JsonValue JsonValue::integer(long long v) {
    JsonValue j;
    j.kind_ = Kind::integer;
    j.int_ = v;
    return j;
}

JsonValue JsonValue::real(double v) {
    JsonValue j;
    j.kind_ = Kind::real;
    j.real_ = v;
    return j;
}

JsonValue JsonValue::text(std::string v) {
    JsonValue j;
    j.kind_ = Kind::text;
    j.text_ = std::move(v);
    return j;
}

JsonValue JsonValue::array() {
    JsonValue j;
    j.kind_ = Kind::array;
    return j;
}

JsonValue JsonValue::object() {
    JsonValue j;
    j.kind_ = Kind::object;
    return j;
}

JsonValue JsonValue::real_array(const std::vector<double>& v) {
    JsonValue j = array();
    for (double x : v) j.push(real(x));
    return j;
}

JsonValue JsonValue::integer_array(const std::vector<long long>& v) {
    JsonValue j = array();
    for (long long x : v) j.push(integer(x));
    return j;
}

JsonValue& JsonValue::push(JsonValue v) {
    if (kind_ != Kind::array)
        throw std::logic_error("push on non-array report node");
    items_.push_back(std::move(v));
    return *this;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    if (kind_ != Kind::object)
        throw std::logic_error("set on non-object report node");
    for (const auto& k : keys_)
        if (k == key)
            throw std::logic_error("duplicate report key: " + key);
    keys_.push_back(key);
    items_.push_back(std::move(v));
    return *this;
}

std::string format_real(double x) {
    if (!std::isfinite(x))
        throw std::logic_error("non-finite value in report");
    if (x == 0.0)
        return "0"; // folds -0 into 0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string indent_of(int level) { return std::string(2 * level, ' '); }

} // namespace

bool JsonValue::inline_eligible() const {
    if (kind_ == Kind::object)
        return false;
    if (kind_ != Kind::array)
        return true;
    for (const auto& item : items_)
        if (!item.inline_eligible())
            return false;
    return true;
}

void JsonValue::write_inline(std::string& out) const {
    switch (kind_) {
    case Kind::null_value: out += "null"; break;
    case Kind::boolean: out += bool_ ? "true" : "false"; break;
    case Kind::integer: out += std::to_string(int_); break;
    case Kind::real: out += format_real(real_); break;
    case Kind::text: out += '"' + escape_json(text_) + '"'; break;
    case Kind::array: {
        out += '[';
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) out += ", ";
            items_[i].write_inline(out);
        }
        out += ']';
        break;
    }
    case Kind::object:
        throw std::logic_error("objects never render inline");
    }
}

void JsonValue::write_json(std::string& out, int indent) const {
    if (inline_eligible()) {
        write_inline(out);
        return;
    }
    if (kind_ == Kind::array) {
        out += "[\n";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            out += indent_of(indent + 1);
            items_[i].write_json(out, indent + 1);
            if (i + 1 < items_.size()) out += ',';
            out += '\n';
        }
        out += indent_of(indent) + "]";
        return;
    }
    if (items_.empty()) {
        out += "{}";
        return;
    }
    out += "{\n";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        out += indent_of(indent + 1) + '"' + escape_json(keys_[i]) + "\": ";
        items_[i].write_json(out, indent + 1);
        if (i + 1 < items_.size()) out += ',';
        out += '\n';
    }
    out += indent_of(indent) + "}";
}

std::string JsonValue::dump() const {
    std::string out;
    write_json(out, 0);
    out += '\n';
    return out;
}

void JsonValue::write_text(std::string& out, int indent) const {
    switch (kind_) {
    case Kind::object:
        for (std::size_t i = 0; i < items_.size(); ++i) {
            out += indent_of(indent) + keys_[i] + ":";
            const JsonValue& v = items_[i];
            if (v.inline_eligible()) {
                out += ' ';
                v.write_inline(out);
                out += '\n';
            } else {
                out += '\n';
                v.write_text(out, indent + 1);
            }
        }
        break;
    case Kind::array:
        for (const auto& item : items_) {
            if (item.inline_eligible()) {
                out += indent_of(indent) + "- ";
                item.write_inline(out);
                out += '\n';
            } else {
                out += indent_of(indent) + "-\n";
                item.write_text(out, indent + 1);
            }
        }
        break;
    default:
        out += indent_of(indent);
        write_inline(out);
        out += '\n';
        break;
    }
}

std::string JsonValue::to_text() const {
    std::string out;
    write_text(out, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file: " + path);
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
}

const nlohmann::json& require_field(const nlohmann::json& obj,
                                    const std::string& where,
                                    const std::string& name) {
    if (!obj.is_object())
        throw InputError(where + ": expected an object");
    auto it = obj.find(name);
    if (it == obj.end())
        throw InputError(where + "." + name + ": missing required field");
    return *it;
}

double as_number(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number())
        throw InputError(where + ": expected a number");
    return v.get<double>();
}

long long as_integer(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw InputError(where + ": expected an integer");
    return v.get<long long>();
}

std::string as_string(const nlohmann::json& v, const std::string& where) {
    if (!v.is_string())
        throw InputError(where + ": expected a string");
    return v.get<std::string>();
}

double get_number(const nlohmann::json& obj, const std::string& where,
                  const std::string& key) {
    return as_number(require_field(obj, where, key), where + "." + key);
}

double get_number_or(const nlohmann::json& obj, const std::string& where,
                     const std::string& key, double fallback) {
    if (!obj.is_object() || !obj.contains(key))
        return fallback;
    return as_number(obj.at(key), where + "." + key);
}

long long get_integer(const nlohmann::json& obj, const std::string& where,
                      const std::string& key) {
    return as_integer(require_field(obj, where, key), where + "." + key);
}

long long get_integer_or(const nlohmann::json& obj, const std::string& where,
                         const std::string& key, long long fallback) {
    if (!obj.is_object() || !obj.contains(key))
        return fallback;
    return as_integer(obj.at(key), where + "." + key);
}

Eigen::MatrixXd as_matrix(const nlohmann::json& v, const std::string& where,
                          int rows, int cols) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows");
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = v[i];
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError(row_where + ": expected " + std::to_string(cols) +
                             " numbers");
        for (int j = 0; j < cols; ++j)
            m(i, j) = as_number(row[j], row_where + "[" + std::to_string(j) + "]");
    }
    return m;
}

std::complex<double> as_point(const nlohmann::json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2)
        throw InputError(where + ": expected [x, y]");
    const double x = as_number(v[0], where + "[0]");
    const double y = as_number(v[1], where + "[1]");
    if (!(y > 0.0))
        throw InputError(where + ": point must lie in the upper half-plane");
    return {x, y};
}

namespace {

Place parse_place(const nlohmann::json& j, const std::string& where,
                  bool finite_context) {
    if (!j.is_object())
        throw InputError(where + ": expected a place object");
    std::string kind;
    if (j.contains("kind"))
        kind = as_string(j.at("kind"), where + ".kind");
    else if (finite_context)
        kind = "finite";
    else
        throw InputError(where + ".kind: missing required field");

    Place p;
    if (kind == "real") {
        p.kind = PlaceKind::real;
    } else if (kind == "complex") {
        p.kind = PlaceKind::complex;
    } else if (kind == "finite") {
        p.kind = PlaceKind::finite;
        p.residue_size = get_integer(j, where, "q");
    } else {
        throw InputError(where + ".kind: expected \"real\", \"complex\" or \"finite\"");
    }
    return p;
}

} // namespace

NumberFieldProfile parse_profile_object(const nlohmann::json& j,
                                        const std::string& where) {
    if (!j.is_object())
        throw InputError(where + ": expected a profile object");
    NumberFieldProfile p;
    p.degree = static_cast<int>(get_integer_or(j, where, "degree", 1));
    p.r2 = static_cast<int>(get_integer_or(j, where, "r2", 0));
    p.r1 = static_cast<int>(
        get_integer_or(j, where, "r1", static_cast<long long>(p.degree) - 2 * p.r2));
    p.abs_discriminant = get_number_or(j, where, "abs_discriminant", 1.0);

    p.infinite_places.clear();
    if (j.contains("infinite_places")) {
        const auto& arr = j.at("infinite_places");
        if (!arr.is_array())
            throw InputError(where + ".infinite_places: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            p.infinite_places.push_back(parse_place(
                arr[i], where + ".infinite_places[" + std::to_string(i) + "]", false));
    } else {
        for (int i = 0; i < p.r1; ++i)
            p.infinite_places.push_back(Place{PlaceKind::real, 0});
        for (int i = 0; i < p.r2; ++i)
            p.infinite_places.push_back(Place{PlaceKind::complex, 0});
    }

    p.finite_places.clear();
    if (j.contains("finite_places")) {
        const auto& arr = j.at("finite_places");
        if (!arr.is_array())
            throw InputError(where + ".finite_places: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            p.finite_places.push_back(parse_place(
                arr[i], where + ".finite_places[" + std::to_string(i) + "]", true));
    }

    require_valid_profile(p);
    return p;
}

NumberFieldProfile resolve_profile(const nlohmann::json& entity,
                                   const nlohmann::json& root,
                                   const std::string& where) {
    const bool inline_profile = entity.is_object() && entity.contains("profile");
    const bool ref_profile = entity.is_object() && entity.contains("profile_ref");
    if (inline_profile && ref_profile)
        throw InputError(where + ": give profile or profile_ref, not both");
    if (inline_profile)
        return parse_profile_object(entity.at("profile"), where + ".profile");
    if (ref_profile) {
        const std::string name =
            as_string(entity.at("profile_ref"), where + ".profile_ref");
        if (!root.is_object() || !root.contains("profiles") ||
            !root.at("profiles").is_object() || !root.at("profiles").contains(name))
            throw InputError(where + ".profile_ref: no profile named \"" + name +
                             "\" in the top-level profiles table");
        return parse_profile_object(root.at("profiles").at(name), "profiles." + name);
    }
    return NumberFieldProfile::rationals();
}

HermitianModule parse_module(const nlohmann::json& j, const nlohmann::json& root,
                             const std::string& where) {
    if (!j.is_object())
        throw InputError(where + ": expected a lattice object");
    HermitianModule m;
    const long long rank = get_integer(j, where, "rank");
    if (rank < 1 || rank > 64)
        throw InputError(where + ".rank: expected an integer in [1, 64]");
    m.rank_z = static_cast<int>(rank);

    const auto& basis = require_field(j, where, "basis");
    // JSON rows are the generators; columns carry them internally.
    m.basis = as_matrix(basis, where + ".basis", m.rank_z, m.rank_z).transpose();

    m.torsion_order = get_integer_or(j, where, "torsion_order", 1);
    m.profile = resolve_profile(j, root, where);

    if (j.contains("field_action")) {
        const auto& arr = j.at("field_action");
        if (!arr.is_array())
            throw InputError(where + ".field_action: expected an array of matrices");
        for (std::size_t i = 0; i < arr.size(); ++i)
            m.field_action.push_back(
                as_matrix(arr[i], where + ".field_action[" + std::to_string(i) + "]",
                          m.rank_z, m.rank_z));
    }
    if (j.contains("omega_twist_basis"))
        m.omega_twist_basis =
            as_matrix(j.at("omega_twist_basis"), where + ".omega_twist_basis",
                      m.rank_z, m.rank_z)
                .transpose();

    require_valid_module(m);
    return m;
}

SectionData parse_section(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object())
        throw InputError(where + ": expected a section object");
    SectionData s;
    s.m_p = get_number(j, where, "m_p");
    s.genus = static_cast<int>(get_integer(j, where, "genus"));
    const auto& arr = require_field(j, where, "places");
    if (!arr.is_array() || arr.empty())
        throw InputError(where + ".places: expected a nonempty array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& pj = arr[i];
        const std::string pw = where + ".places[" + std::to_string(i) + "]";
        if (!pj.is_object())
            throw InputError(pw + ": expected a place object");
        SectionPlace pl;
        if (pj.contains("epsilon")) {
            pl.epsilon = as_number(pj.at("epsilon"), pw + ".epsilon");
        } else if (pj.contains("kind")) {
            const std::string kind = as_string(pj.at("kind"), pw + ".kind");
            if (kind == "real")
                pl.epsilon = 1.0;
            else if (kind == "complex")
                pl.epsilon = 2.0;
            else
                throw InputError(pw + ".kind: expected \"real\" or \"complex\"");
        } else {
            throw InputError(pw + ".epsilon: missing required field");
        }
        pl.radius = get_number(pj, pw, "radius");
        s.places.push_back(pl);
    }
    require_valid_section(s);
    return s;
}

AnalyticInputs parse_analytic(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    AnalyticInputs a;
    if (j.contains("infinite_places")) {
        const auto& arr = j.at("infinite_places");
        if (!arr.is_array())
            throw InputError(where + ".infinite_places: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& pj = arr[i];
            const std::string pw =
                where + ".infinite_places[" + std::to_string(i) + "]";
            if (!pj.is_object())
                throw InputError(pw + ": expected a place object");
            InfinitePlaceData pl;
            pl.epsilon = get_number_or(pj, pw, "epsilon", 1.0);
            pl.log_det_laplacian = get_number_or(pj, pw, "log_det_laplacian", 0.0);
            pl.arakelov_volume = get_number_or(pj, pw, "arakelov_volume", 1.0);
            if (pj.contains("archimedean_delta"))
                pl.archimedean_delta =
                    as_number(pj.at("archimedean_delta"), pw + ".archimedean_delta");
            a.infinite_places.push_back(pl);
        }
    }
    if (j.contains("finite_places")) {
        const auto& arr = j.at("finite_places");
        if (!arr.is_array())
            throw InputError(where + ".finite_places: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& pj = arr[i];
            const std::string pw = where + ".finite_places[" + std::to_string(i) + "]";
            if (!pj.is_object())
                throw InputError(pw + ": expected a place object");
            FinitePlaceData pl;
            pl.residue_size = get_integer(pj, pw, "q");
            pl.delta = get_number_or(pj, pw, "delta", 0.0);
            a.finite_places.push_back(pl);
        }
    }
    a.omega_omega = get_number_or(j, where, "omega_omega", 0.0);
    a.l_l_omega_dual = get_number_or(j, where, "l_l_omega_dual", 0.0);
    a.l_f_omega = get_number_or(j, where, "l_f_omega", 0.0);
    a.omega_x_f_omega = get_number_or(j, where, "omega_x_f_omega", 0.0);
    a.deg_det_l2 = get_number_or(j, where, "deg_det_l2", 0.0);
    a.log_det_laplacian_l = get_number_or(j, where, "log_det_laplacian_l", 0.0);
    a.b_g = get_number_or(j, where, "b_g", 0.0);
    a.a_v_g = get_number_or(j, where, "a_v_g", 0.0);
    require_valid_analytic(a);
    return a;
}

JsonValue bound_report_json(const BoundReport& r) {
    JsonValue j = JsonValue::object();
    j.set("name", JsonValue::text(r.name));
    if (r.lhs)
        j.set("lhs", JsonValue::real(*r.lhs));
    j.set("rhs", JsonValue::real(r.rhs));
    if (r.slack)
        j.set("slack", JsonValue::real(*r.slack));
    j.set("verdict", JsonValue::text(r.verdict));
    JsonValue prov = JsonValue::array();
    for (const auto& p : r.provenance) prov.push(JsonValue::text(p));
    j.set("provenance", std::move(prov));
    return j;
}

} // namespace latkit
