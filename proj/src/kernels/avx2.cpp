// 4-lane AVX2/FMA variants. Compiled with -mavx2 -mfma; only called after
// the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <cmath>

#include "../cody_coefficients.hpp"
#include "hpmbs/special_functions.hpp"
#include "kernel_impl.hpp"

namespace hpmbs::kernels::detail::avx2 {
namespace {

using V = __m256d;
constexpr std::size_t kLanes = 4;

inline V set1(double x) { return _mm256_set1_pd(x); }
inline V add(V a, V b) { return _mm256_add_pd(a, b); }
inline V sub(V a, V b) { return _mm256_sub_pd(a, b); }
inline V mul(V a, V b) { return _mm256_mul_pd(a, b); }
inline V div(V a, V b) { return _mm256_div_pd(a, b); }
inline V fmadd(V a, V b, V c) { return _mm256_fmadd_pd(a, b, c); }
inline V select(V mask, V if_true, V if_false) { return _mm256_blendv_pd(if_false, if_true, mask); }
inline V lt(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
inline V le(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_LE_OQ); }
inline V gt(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_GT_OQ); }
inline V ge(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_GE_OQ); }
inline V vand(V a, V b) { return _mm256_and_pd(a, b); }
inline bool any(V mask) { return _mm256_movemask_pd(mask) != 0; }
inline V vabs(V x) { return _mm256_andnot_pd(set1(-0.0), x); }

inline bool all_finite(V x) {
    const V diff = sub(x, x);  // NaN for +-inf and NaN
    return _mm256_movemask_pd(_mm256_cmp_pd(diff, _mm256_setzero_pd(), _CMP_EQ_OQ)) == 0xF;
}

// 2^n for integral n in [-1022, 1023]. Adding 2^52 + 2^51 puts n in the low
// mantissa bits; subtracting the magic's bit pattern recovers it as int64.
inline V pow2(V n) {
    const V magic = set1(6755399441055744.0);
    __m256i bits = _mm256_sub_epi64(_mm256_castpd_si256(add(n, magic)), _mm256_castpd_si256(magic));
    bits = _mm256_slli_epi64(_mm256_add_epi64(bits, _mm256_set1_epi64x(1023)), 52);
    return _mm256_castsi256_pd(bits);
}

// e^x via x = n ln2 + r, |r| <= ln2/2, degree-13 Taylor polynomial for e^r
// (truncation below 5e-18) and 2^n applied in two halves so that results in
// the subnormal range are still produced.
V vexp(V x) {
    constexpr double kLog2e = 1.4426950408889634074;
    constexpr double kLn2Hi = 6.93147180369123816490e-01;
    constexpr double kLn2Lo = 1.90821492927058770002e-10;
    constexpr double kMax = 709.782712893384;
    constexpr double kMin = -745.2;
    const V xc = _mm256_min_pd(_mm256_max_pd(x, set1(kMin)), set1(kMax));
    const V n = _mm256_round_pd(mul(xc, set1(kLog2e)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    V r = _mm256_fnmadd_pd(n, set1(kLn2Hi), xc);
    r = _mm256_fnmadd_pd(n, set1(kLn2Lo), r);

    static constexpr double kInvFactorial[14] = {
        1.0,
        1.0,
        1.0 / 2,
        1.0 / 6,
        1.0 / 24,
        1.0 / 120,
        1.0 / 720,
        1.0 / 5040,
        1.0 / 40320,
        1.0 / 362880,
        1.0 / 3628800,
        1.0 / 39916800,
        1.0 / 479001600,
        1.0 / 6227020800,
    };
    V p = set1(kInvFactorial[13]);
    for (int i = 12; i >= 0; --i) p = fmadd(p, r, set1(kInvFactorial[i]));

    const V n1 = _mm256_round_pd(mul(n, set1(0.5)), _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
    const V n2 = sub(n, n1);
    p = mul(mul(p, pow2(n1)), pow2(n2));
    p = select(lt(x, set1(kMin)), _mm256_setzero_pd(), p);
    return select(gt(x, set1(kMax)), set1(INFINITY), p);
}

V verf_small(V x) {
    using namespace cody;
    const V ysq = mul(x, x);
    V num = mul(set1(kA[4]), ysq);
    V den = ysq;
    for (int i = 0; i < 3; ++i) {
        num = mul(add(num, set1(kA[i])), ysq);
        den = mul(add(den, set1(kB[i])), ysq);
    }
    return div(mul(x, add(num, set1(kA[3]))), add(den, set1(kB[3])));
}

// e^{-y^2} with y^2 split into an exact head and small tail.
V vexp_minus_square(V y) {
    const V head = mul(_mm256_round_pd(mul(y, set1(16.0)), _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC),
                       set1(1.0 / 16.0));
    const V tail = mul(sub(y, head), add(y, head));
    return mul(vexp(mul(_mm256_sub_pd(_mm256_setzero_pd(), head), head)),
               vexp(_mm256_sub_pd(_mm256_setzero_pd(), tail)));
}

// erfcx for y >= 0; each range is evaluated only if some lane falls in it.
V verfcx_nonneg(V y) {
    using namespace cody;
    const V small_max = set1(hpmbs::detail::kSmallThreshold);
    const V mid_max = set1(hpmbs::detail::kMidThreshold);
    const V tail_max = set1(hpmbs::detail::kTailThreshold);
    const V in_small = le(y, small_max);
    const V in_mid = vand(gt(y, small_max), le(y, mid_max));
    const V in_tail = vand(gt(y, mid_max), le(y, tail_max));
    const V in_cf = gt(y, tail_max);
    V result = _mm256_setzero_pd();

    if (any(in_small)) {
        const V v = mul(vexp(mul(y, y)), sub(set1(1.0), verf_small(y)));
        result = select(in_small, v, result);
    }
    if (any(in_mid)) {
        V num = mul(set1(kC[8]), y);
        V den = y;
        for (int i = 0; i < 7; ++i) {
            num = mul(add(num, set1(kC[i])), y);
            den = mul(add(den, set1(kD[i])), y);
        }
        result = select(in_mid, div(add(num, set1(kC[7])), add(den, set1(kD[7]))), result);
    }
    if (any(in_tail)) {
        const V inv_sq = div(set1(1.0), mul(y, y));
        V num = mul(set1(kP[5]), inv_sq);
        V den = inv_sq;
        for (int i = 0; i < 4; ++i) {
            num = mul(add(num, set1(kP[i])), inv_sq);
            den = mul(add(den, set1(kQ[i])), inv_sq);
        }
        const V r = div(mul(inv_sq, add(num, set1(kP[4]))), add(den, set1(kQ[4])));
        result = select(in_tail, div(sub(set1(kInvSqrtPi), r), y), result);
    }
    if (any(in_cf)) {
        V t = y;
        for (int n = hpmbs::detail::kContinuedFractionDepth; n >= 1; --n) {
            t = add(y, div(set1(0.5 * n), t));
        }
        result = select(in_cf, div(set1(kInvSqrtPi), t), result);
    }
    return result;
}

V verfc(V x) {
    const V y = vabs(x);
    const V in_small = le(y, set1(hpmbs::detail::kSmallThreshold));
    V r = mul(vexp_minus_square(y), verfcx_nonneg(y));
    r = select(ge(y, set1(hpmbs::detail::kErfcUnderflow)), _mm256_setzero_pd(), r);
    r = select(lt(x, _mm256_setzero_pd()), sub(set1(2.0), r), r);
    if (any(in_small)) {
        r = select(in_small, sub(set1(1.0), verf_small(x)), r);
    }
    return r;
}

V vpoly(const Poly& p, V z) {
    V acc = set1(p.back());
    for (int i = TermPolynomials::kDegree - 1; i >= 0; --i) {
        acc = fmadd(acc, z, set1(p[static_cast<std::size_t>(i)]));
    }
    return acc;
}

// Vector form of gauss_erf_combination.
V vgauss_erf(V z, V a, V b) {
    const V s = mul(z, set1(0.5));
    const V g = vexp(_mm256_sub_pd(_mm256_setzero_pd(), mul(s, s)));
    const V pos = gt(s, _mm256_setzero_pd());
    V result = _mm256_setzero_pd();
    if (any(pos)) {
        const V v = mul(g, _mm256_fnmadd_pd(b, verfcx_nonneg(s), mul(a, set1(kInvSqrtPi))));
        result = select(pos, v, result);
    }
    if (_mm256_movemask_pd(pos) != 0xF) {
        const V v = _mm256_fnmadd_pd(b, verfc(s), mul(mul(a, g), set1(kInvSqrtPi)));
        result = select(pos, result, v);
    }
    return select(_mm256_cmp_pd(s, set1(INFINITY), _CMP_EQ_OQ), _mm256_setzero_pd(), result);
}

}  // namespace

void erfc(const double* x, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const V v = _mm256_loadu_pd(x + i);
        if (!all_finite(v)) {
            scalar::erfc(x + i, kLanes, out + i);
            continue;
        }
        _mm256_storeu_pd(out + i, verfc(v));
    }
    scalar::erfc(x + i, n - i, out + i);
}

void normal_cdf(const double* v, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const V x = _mm256_loadu_pd(v + i);
        if (!all_finite(x)) {
            scalar::normal_cdf(v + i, kLanes, out + i);
            continue;
        }
        const V arg = mul(x, set1(-kSqrt1_2));
        _mm256_storeu_pd(out + i, mul(set1(0.5), verfc(arg)));
    }
    scalar::normal_cdf(v + i, n - i, out + i);
}

void reduced_exact(const double* y, std::size_t n, double tau, GeneralizedReducedParams params,
                   double* out) {
    const double k1 = params.k1;
    const double k2 = params.k2;
    const V root = set1(std::sqrt(2.0 * tau));
    const V shift1 = set1(std::sqrt(0.5 * tau) * (k1 - 1.0));
    const V shift2 = set1(std::sqrt(0.5 * tau) * (k1 + 1.0));
    const V decay = set1(std::exp(-k2 * tau));
    const V log_decay = set1(-k2 * tau);
    const V growth = set1((k1 - k2) * tau);
    const V half = set1(0.5);
    const V rsqrt2 = set1(kSqrt1_2);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const V yv = _mm256_loadu_pd(y + i);
        if (!all_finite(yv)) {
            scalar::reduced_exact(y + i, kLanes, tau, params, out + i);
            continue;
        }
        const V base = div(yv, root);
        const V d1 = add(base, shift1);
        const V d2 = add(base, shift2);
        // Same split as detail::put_difference: the erfcx form where d1 >= 0.
        const V scaled = ge(d1, _mm256_setzero_pd());
        V u = _mm256_setzero_pd();
        if (any(scaled)) {
            const V g = vexp(_mm256_fnmadd_pd(mul(half, d1), d1, log_decay));
            const V a = verfcx_nonneg(mul(_mm256_max_pd(d1, _mm256_setzero_pd()), rsqrt2));
            const V b = verfcx_nonneg(mul(_mm256_max_pd(d2, _mm256_setzero_pd()), rsqrt2));
            u = select(scaled, mul(mul(half, g), sub(a, b)), u);
        }
        if (_mm256_movemask_pd(scaled) != 0xF) {
            const V i1 = mul(decay, mul(half, verfc(mul(d1, rsqrt2))));
            const V i2 = mul(vexp(add(yv, growth)), mul(half, verfc(mul(d2, rsqrt2))));
            u = select(scaled, u, sub(i1, i2));
        }
        const V rounding = vand(lt(u, _mm256_setzero_pd()), gt(u, set1(-1e-16)));
        u = select(rounding, _mm256_setzero_pd(), u);
        _mm256_storeu_pd(out + i, u);
    }
    scalar::reduced_exact(y + i, n - i, tau, params, out + i);
}

void hpm_sum(const double* y, std::size_t n, double w, const Poly& gauss, const Poly& erf,
             double* out) {
    const V wv = set1(w);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const V yv = _mm256_loadu_pd(y + i);
        if (!all_finite(yv)) {
            scalar::hpm_sum(y + i, kLanes, w, gauss, erf, out + i);
            continue;
        }
        const V z = div(yv, wv);
        _mm256_storeu_pd(out + i, mul(wv, vgauss_erf(z, vpoly(gauss, z), vpoly(erf, z))));
    }
    scalar::hpm_sum(y + i, n - i, w, gauss, erf, out + i);
}

}  // namespace hpmbs::kernels::detail::avx2
