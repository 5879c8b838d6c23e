#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace latkit {

enum class PlaceKind { real, complex, finite };

// One place v of the base field.  The weight epsilon_v is derived from the
// kind and never stored: 1 (real), 2 (complex), log q_v (finite).
struct Place {
    PlaceKind kind = PlaceKind::real;
    long long residue_size = 0; // q_v, finite places only, q_v >= 2

    double epsilon() const {
        switch (kind) {
        case PlaceKind::real: return 1.0;
        case PlaceKind::complex: return 2.0;
        case PlaceKind::finite: return std::log(static_cast<double>(residue_size));
        }
        return 0.0;
    }
};

// Numerical profile of the base field F: degree, signature, |D_F| and the
// places appearing in the user's inputs.  No symbolic field arithmetic is
// done anywhere; every downstream formula consumes only these numbers.
struct NumberFieldProfile {
    int degree = 1;             // [F:Q]
    int r1 = 1;                 // real places
    int r2 = 0;                 // complex places
    double abs_discriminant = 1.0;
    std::vector<Place> infinite_places{Place{PlaceKind::real, 0}};
    std::vector<Place> finite_places{}; // optional, for epsilon bookkeeping only

    static NumberFieldProfile rationals() { return NumberFieldProfile{}; }
};

// -(1/2) log |D_F|.
double chi_ring(const NumberFieldProfile& profile);

// deg omega_O = -2 chi_ring = log |D_F|.
double omega_degree(const NumberFieldProfile& profile);

// Returns the list of violated invariants, empty when the profile is valid.
std::vector<std::string> validate_profile(const NumberFieldProfile& profile);

// Throws InputError listing the diagnostics when the profile is invalid.
void require_valid_profile(const NumberFieldProfile& profile);

} // namespace latkit
