#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "latkit/bounds.hpp"
#include "latkit/lattice.hpp"
#include "latkit/number_field.hpp"

namespace latkit {

// Deterministic JSON document for reports: object keys keep insertion order,
// reals print at 12 significant digits, -0 prints as 0.  Identical inputs
// must yield byte-identical reports, which rules out map-ordered printers.
class JsonValue {
public:
    enum class Kind { null_value, boolean, integer, real, text, array, object };

    JsonValue() = default;

    static JsonValue boolean(bool v);
    static JsonValue integer(long long v);
    static JsonValue real(double v);
    static JsonValue text(std::string v);
    static JsonValue array();
    static JsonValue object();

    static JsonValue real_array(const std::vector<double>& v);
    static JsonValue integer_array(const std::vector<long long>& v);

    Kind kind() const { return kind_; }

    // Array append; throws std::logic_error on a non-array.
    JsonValue& push(JsonValue v);
    // Object append; keys are unique and keep insertion order.
    JsonValue& set(const std::string& key, JsonValue v);

    // Pretty JSON, two-space indent, trailing newline.  Arrays holding no
    // objects render inline.
    std::string dump() const;

    // Human-readable key: value rendering for --format text.
    std::string to_text() const;

private:
    void write_json(std::string& out, int indent) const;
    void write_text(std::string& out, int indent) const;
    bool inline_eligible() const;
    void write_inline(std::string& out) const;

    Kind kind_ = Kind::null_value;
    bool bool_ = false;
    long long int_ = 0;
    double real_ = 0.0;
    std::string text_;
    std::vector<JsonValue> items_;  // array elements or object values
    std::vector<std::string> keys_; // object keys, parallel to items_
};

// %.12g with -0 normalized to 0.  Non-finite values are a programming error.
std::string format_real(double x);

// Parses the file, mapping open failures and malformed JSON to InputError.
nlohmann::json load_json_file(const std::string& path);

// Field access with diagnostics naming the offending field.  `where` is the
// dotted path of the enclosing object, e.g. "lattice" or "analytic".
const nlohmann::json& require_field(const nlohmann::json& obj,
                                    const std::string& where,
                                    const std::string& name);
double as_number(const nlohmann::json& v, const std::string& where);
long long as_integer(const nlohmann::json& v, const std::string& where);
std::string as_string(const nlohmann::json& v, const std::string& where);
double get_number(const nlohmann::json& obj, const std::string& where,
                  const std::string& key);
double get_number_or(const nlohmann::json& obj, const std::string& where,
                     const std::string& key, double fallback);
long long get_integer(const nlohmann::json& obj, const std::string& where,
                      const std::string& key);
long long get_integer_or(const nlohmann::json& obj, const std::string& where,
                         const std::string& key, long long fallback);

// rows x cols numeric matrix from a row-major array of arrays.
Eigen::MatrixXd as_matrix(const nlohmann::json& v, const std::string& where,
                          int rows, int cols);

// [x, y] with y > 0.
std::complex<double> as_point(const nlohmann::json& v, const std::string& where);

// Profile from an inline object.  Omitted infinite_places are derived from
// the signature (r1 real places then r2 complex ones).
NumberFieldProfile parse_profile_object(const nlohmann::json& j,
                                        const std::string& where);

// Profile of an entity: inline "profile", or "profile_ref" into the
// top-level "profiles" table, or the rationals when neither is present.
NumberFieldProfile resolve_profile(const nlohmann::json& entity,
                                   const nlohmann::json& root,
                                   const std::string& where);

// Lattice from {"rank", "basis", "torsion_order"?, "field_action"?,
// "omega_twist_basis"?, "profile"?/"profile_ref"?}.  JSON basis rows are the
// generators; internally generators are columns.  Validates the module.
HermitianModule parse_module(const nlohmann::json& j, const nlohmann::json& root,
                             const std::string& where);

// SectionData from {"m_p", "genus", "places": [{"epsilon"|"kind", "radius"}]}.
SectionData parse_section(const nlohmann::json& j, const std::string& where);

// AnalyticInputs; scalar fields default to 0, place lists to empty.
// Subcommands requiring specific fields check presence themselves.
AnalyticInputs parse_analytic(const nlohmann::json& j, const std::string& where);

JsonValue bound_report_json(const BoundReport& r);

} // namespace latkit
