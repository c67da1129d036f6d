#pragma once

// Regression constants. Each was measured once from this code after the
// closed forms were cross-checked against the Crank-Nicolson solver, and is
// asserted thereafter. `hpmbs validate --measure` prints the current values
// for re-freezing after an intentional numerical change.

namespace hpmbs::validation::frozen {

// bs_put, S = E = 40, r = 0.05, sigma = 0.324336, T = 0.5, t = 0.
inline constexpr double kVanillaAtm = 3.1341649725632905;
// quanto_put_exact, default quanto parameters with S1 = S2 = E = 40.
inline constexpr double kQuantoAtm = 96.956041399409827;
// basket_put_exact, default two-asset basket parameters with S1 = S2 = E = 40.
inline constexpr double kBasketAtm = 1.4110392664949407;

// max |price_single_hpm2 - bs_put| over S in [1, 100] (201 points), order 6.
inline constexpr double kSingleHpmMaxError = 38.012396481133308;
// max |price_basket_hpm - basket_put_exact| over S1, S2 in [20, 60] (41 x 41).
inline constexpr double kBasketHpmMaxError = 0.00029932999130366511;
// max |price_quanto_hpm - quanto_put_exact| over S1, S2 in [20, 60] (41 x 41).
inline constexpr double kQuantoHpmMaxError = 0.0029262086732160242;
// max |hpm_reduced_sum - reduced_exact_u| for y in [-3, 3] (step 0.01) at the default single-asset parameters.
inline constexpr double kReducedSumMaxError = 0.31271294782713466;

}  // namespace hpmbs::validation::frozen
