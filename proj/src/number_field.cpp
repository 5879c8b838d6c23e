#include "latkit/number_field.hpp"

#include "latkit/errors.hpp"

#include <sstream>

namespace latkit {

double chi_ring(const NumberFieldProfile& profile) {
    require_valid_profile(profile);
    return -0.5 * std::log(profile.abs_discriminant);
}

double omega_degree(const NumberFieldProfile& profile) {
    require_valid_profile(profile);
    return std::log(profile.abs_discriminant);
}

std::vector<std::string> validate_profile(const NumberFieldProfile& profile) {
    std::vector<std::string> diags;
    if (profile.degree < 1)
        diags.push_back("degree >= 1");
    if (profile.r1 < 0 || profile.r2 < 0)
        diags.push_back("r1, r2 >= 0");
    if (profile.r1 + 2 * profile.r2 != profile.degree)
        diags.push_back("r1+2r2 != degree");
    if (!(profile.abs_discriminant >= 1.0))
        diags.push_back("|D_F| >= 1");

    int real_count = 0, complex_count = 0;
    for (const Place& v : profile.infinite_places) {
        if (v.kind == PlaceKind::real) ++real_count;
        else if (v.kind == PlaceKind::complex) ++complex_count;
        else diags.push_back("finite place listed among infinite places");
    }
    if (real_count != profile.r1 || complex_count != profile.r2)
        diags.push_back("infinite places do not match (r1, r2)");

    for (const Place& v : profile.finite_places) {
        if (v.kind != PlaceKind::finite)
            diags.push_back("infinite place listed among finite places");
        else if (v.residue_size < 2)
            diags.push_back("finite place q_v >= 2");
    }
    return diags;
}

void require_valid_profile(const NumberFieldProfile& profile) {
    const auto diags = validate_profile(profile);
    if (diags.empty()) return;
    std::ostringstream msg;
    msg << "invalid profile:";
    for (const auto& d : diags) msg << " [" << d << "]";
    throw InputError(msg.str());
}

} // namespace latkit
