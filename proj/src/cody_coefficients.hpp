#pragma once

// Coefficients of Cody's near-minimax rational approximations (netlib
// specfun CALERF). Shared by the scalar and SIMD implementations so both
// evaluate the same rational functions.

namespace hpmbs::cody {

// erf(x) = x * P(x^2) / Q(x^2) on |x| <= 0.46875
inline constexpr double kA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                                 3209.37758913846947, 0.185777706184603153};
inline constexpr double kB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                                 2844.23683343917062};

// erfcx(y) = P(y) / Q(y) on 0.46875 < y <= 4
inline constexpr double kC[9] = {0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                                 298.635138197400131,  881.95222124176909,  1712.04761263407058,
                                 2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
inline constexpr double kD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                                 1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                                 3439.36767414372164, 1230.33935480374942};

// erfcx(y) = (1/sqrt(pi) - y^-2 P(y^-2) / Q(y^-2)) / y on y > 4
inline constexpr double kP[6] = {0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
                                 0.0160837851487422766, 6.58749161529837803e-4,
                                 0.0163153871373020978};
inline constexpr double kQ[5] = {2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
                                 0.0605183413124413191, 0.00233520497626869185};

}  // namespace hpmbs::cody
