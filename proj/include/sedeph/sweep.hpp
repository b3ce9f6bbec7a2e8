// sweep.hpp - Temperature-time grid sweeps and their file outputs

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sedeph/bath.hpp"
#include "sedeph/criteria.hpp"
#include "sedeph/xstate.hpp"

namespace sedeph {

struct SweepConfig {
    XState state = WernerParams{0.2}.to_x_state();
    // Set when the state came from a Werner parameter; recorded in metadata.
    std::optional<double> werner_c{0.2};
    double kappa{1e-3};
    double theta_min{0.05};
    double theta_max{0.3};
    int theta_steps{100};
    double tau_min{0.0};
    double tau_max{50.0};
    int tau_steps{200};
    bool overlay_decoherence{true};
    bool overlay_sudden_death{true};
    std::string out_prefix{"phase"};
    unsigned threads{1};

    // Throws InputError on invalid ranges.
    void validate() const;
    std::vector<double> thetas() const;
    std::vector<double> taus() const;
};

// Inclusive uniform grid of `steps` points (steps >= 2).
std::vector<double> linspace(double lo, double hi, int steps);

struct GridRow {
    double theta;
    double tau;
    SEClassification result;
};

// Rows ordered theta-major, then tau. The result does not depend on the
// thread count. A failing grid point raises NumericalError naming it.
std::vector<GridRow> sweep_grid(const SweepConfig& cfg);

struct CurveRow {
    double theta;
    double tau_dec;
    std::optional<double> tau_sd;
};

std::vector<CurveRow> overlay_curves(const SweepConfig& cfg);

// Critical temperature for a Werner state: 8 kappa Shi(1/theta) = ln((1+c)/(2c)).
// Throws RangeError unless 0 < c <= 1.
double tcrit_query(double kappa, double c);

// Fixed 17-significant-digit formatting used by every CSV writer.
std::string format_real(double v);

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows);
void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows);
// Gnuplot script drawing the red/blue/white diagram with optional overlays.
void write_plot_script(std::ostream& os, const SweepConfig& cfg, bool with_curves);

} // namespace sedeph
