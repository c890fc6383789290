#pragma once

#include <string>
#include <vector>

namespace casimir {

enum class MaterialKind { vacuum, constant, drude, plasma, tabulated, perfect_metal };

// Dielectric response on the imaginary-frequency axis. eps(i*xi) is real and
// >= 1 for every evaluable kind; mu is fixed at 1 throughout the library.
// perfect_metal is a sentinel: reflection-coefficient code paths handle it,
// numerical evaluation of eps is an error.
struct MaterialModel {
    MaterialKind kind = MaterialKind::vacuum;
    double eps_const = 1.0;  // constant
    double omega_p = 0.0;    // drude, plasma (1/um)
    double gamma = 0.0;      // drude (1/um)
    std::vector<double> tab_xi;   // tabulated, sorted ascending, xi > 0
    std::vector<double> tab_eps;

    static MaterialModel vacuum();
    static MaterialModel constant(double eps);
    static MaterialModel drude(double omega_p, double gamma);
    static MaterialModel plasma(double omega_p);
    static MaterialModel tabulated(std::vector<double> xi, std::vector<double> eps);
    static MaterialModel perfect_metal();
};

bool is_perfect_metal(const MaterialModel& m);

// eps(i*xi). Requires xi > 0 and kind != perfect_metal.
double permittivity(const MaterialModel& m, double xi);

// (1/(2 xi)) d(xi^2 eps)/dxi, the energy-density weight. Equals eps for
// dispersionless materials and exactly 1 for the plasma model.
double energy_weight(const MaterialModel& m, double xi);

struct MaterialDiagnostic {
    double xi;
    std::string message;
};

// Samples the >=1 and non-increasing invariants on a log-spaced xi grid.
// Empty result means the model passes. Diagnostic only, never throws.
std::vector<MaterialDiagnostic> validate(const MaterialModel& m);

// Two-column text (xi, eps), '#' comments, whitespace separated.
MaterialModel load_tabulated_file(const std::string& path);

}  // namespace casimir
