#pragma once

namespace gea {

/// Tolerance context threaded through every numeric routine. The defaults
/// correspond to a base tolerance of 1e-9; scaled() multiplies all members
/// proportionally so a single knob moves the whole ledger.
struct Tolerances {
    double validate = 1e-9;     ///< matrix invariant checks (orthogonality, det)
    double snap = 1e-9;         ///< boundary snap in the order function
    double step = 1e-10;        ///< one-parameter step solves
    double reconstruct = 1e-8;  ///< factorization residual (Frobenius)
    double drop = 1e-9;         ///< factor drop / merge threshold
    double dependence = 1e-9;   ///< generator linear-dependence threshold

    static Tolerances scaled(double base);
};

const Tolerances& default_tols();

}  // namespace gea
