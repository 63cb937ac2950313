#pragma once

// High-precision reference values, frozen from an independent 40-digit
// computation. Regenerate with tools/dev/pin_values.py if more are needed.

namespace selberg::pinned {

// log Gamma(1/2) = log sqrt(pi)
inline constexpr double kLogGammaHalf = 0.57236494292470008707;
// log Gamma(1/4 + 10i)
inline constexpr double kLogGammaQuarterP10i_re = -15.364592760295240141;
inline constexpr double kLogGammaQuarterP10i_im = 12.634193666938485786;
// log Gamma(1/4 + 15i)
inline constexpr double kLogGammaQuarterP15i_re = -23.319984172604715982;
inline constexpr double kLogGammaQuarterP15i_im = 25.228748424304992812;
// log Gamma(3+4i)
inline constexpr double kLogGamma3P4i_re = -1.7566267846037841105;
inline constexpr double kLogGamma3P4i_im = 4.7426644380346579282;
// log Gamma(1e5+1e5i)
inline constexpr double kLogGammaBig_re = 1007405.0783746975228;
inline constexpr double kLogGammaBig_im = 1164489.3291652665731;
// log Gamma(-1/2+2i), reflection region
inline constexpr double kLogGammaNegHalfP2i_re = -2.9461153555214209498;
inline constexpr double kLogGammaNegHalfP2i_im = -2.4083119718987953623;
// log Gamma(-2.5+0.5i)
inline constexpr double kLogGammaNegReal_re = -0.93508562129827747868;
inline constexpr double kLogGammaNegReal_im = -8.8709628852474591986;
// |Gamma(1/2-10i)|
inline constexpr double kAbsGammaHalfM10i = 3.7775321128501089899e-7;
// psi(1/4+10i)
inline constexpr double kDigammaQuarterP10i_re = 2.302480880694233774;
inline constexpr double kDigammaQuarterP10i_im = 1.5958120010007441049;
// zeta(1/2)
inline constexpr double kZetaHalf = -1.4603545088095868129;
// imag part of first nontrivial zeta zero
inline constexpr double kZetaZero1 = 14.13472514173469379;
// tenth zero
inline constexpr double kZetaZero10 = 49.773832477672302182;
// 29th zero
inline constexpr double kZetaZero29 = 98.831194218193692233;
// 30th zero (above t=100)
inline constexpr double kZetaZero30 = 101.31785100573139123;
// zeta zero counts: 10 below t=50, 29 below t=100
// |zeta(1/2 + i*t1)|, should be ~0
inline constexpr double kZetaAtHalfPlusZero1Abs = 3.4147274494130155024e-41;
// L(1/2, chi_4)
inline constexpr double kLChi4Half = 0.66769145718960917666;
// L(1, chi_4) = pi/4
inline constexpr double kLChi4One = nan;
// L(1/2, chi_3)
inline constexpr double kLChi3Half = 0.48086755769682862618;
// L(chi4) zeros in (0,30): 10 found
inline constexpr double kChi4Zeros[] = {
    6.0209489046975967, 10.243770304166555, 12.988098012312423, 16.342607104587222, 18.291993196123535, 21.45061134398346, 23.278376520459532, 25.728756425088728, 28.359634343025328, 29.656384014593153
};
inline constexpr int kNumChi4Zeros = 10;
// sum exp(-n/1000)/sqrt(n)
inline constexpr double kSmoothedZetaT0X1000 = 54.589765457395324108;
// sqrt(1000*pi) = X^(1/2) Gamma(1/2) at X=1000
inline constexpr double kSqrt1000Pi = 56.049912163979286993;
// Gamma(1/4-50i)/Gamma(1/4+50i)
inline constexpr double kZetaQuotT100_re = 0.1790309592102366059;
inline constexpr double kZetaQuotT100_im = -0.98384344061657624928;
// zeta(0.3+40i, 1/4)
inline constexpr double kHurwitz1_re = -1.7468576564575226225;
inline constexpr double kHurwitz1_im = -2.383418186625676402;
// zeta(1.5-14.13i, 3/4)
inline constexpr double kHurwitz2_re = -0.90524866219354566722;
inline constexpr double kHurwitz2_im = 1.8472021873643329293;
// zeta(-0.2+12.5i, 1/3)
inline constexpr double kHurwitz3_re = -1.5110917839086281172;
inline constexpr double kHurwitz3_im = 1.7555794624167582471;
// zeta(0.3+12i)
inline constexpr double kZetaAt0p3P12i_re = 1.0440910079876760482;
inline constexpr double kZetaAt0p3P12i_im = -0.8575209782583966952;
// zeta(1.5+20i)
inline constexpr double kZetaAt1p5P20i_re = 0.84730293227555339669;
inline constexpr double kZetaAt1p5P20i_im = -0.43554347280947437988;
// L(1/2+10i, chi4)
inline constexpr double kLChi4At0p5P10i_re = 0.027768952616902770472;
inline constexpr double kLChi4At0p5P10i_im = -0.44306067559374076744;
// Gamma(1/2-10i)*1000^(1/2-10i)
inline constexpr double kR1ZetaT10X1000_re = 0.00001087716948883519191;
inline constexpr double kR1ZetaT10X1000_im = -4.9380838943147630111e-6;

}  // namespace selberg::pinned

