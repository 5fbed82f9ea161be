#include "transcription.hpp"

namespace g2split::transcription {

// The (2,2)-split surface in the absolute invariants x = i1, y = i2, z = i3.
const Lines kS2 = {
    "-27*x^6 - 9459597312000*z^2*x^2 + 20639121408000*z^2*y + 111451255603200*z^2*x - 240734712102912*z^2",
    "-55240704*z*x^4 - 18*y^2*x^4 - 8294400*z*y^2*x^2 - 47278080*z*y*x^3 - 264180754022400000*z^3",
    "-2866544640000*z^2*y*x + 2*x^6*y - 4*x^3*y^3 + 9*x^7 + 331776*z*x^5 + 107495424*z*y*x^2 - 27*y^4 + 9*x*y^4",
    "-52254720*z*y^2*x + 2*y^5 + 161243136*z*y^2 + 161243136*z*x^3 - 12441600*z*y^3 + 54*x^3*y^2",
};

// The (3,3)-split surface reduced mod 5. One entry per display line.
const Lines kS3Mod5 = {
    "x^20 + 3*x^19 + 3*x^18*y + 4*x^17*y^2 + 3*x^18 + 4*x^17*z + 2*x^16*y^2 + 2*x^16*y*z + 2*x^15*y^3 + 4*x^16*z + 2*x^15*y^2",
    "+4*x^15*y*z + x^15*z^2 + x^13*y^3*z + 3*x^14*y*z + x^13*y^2*z + x^13*y*z^2 + 4*x^12*y^3*z + 4*x^12*y^2*z^2 + x^11*y^4*z + x^10*y^5*z",
    "+4*x^13*z^2 + x^12*y^2*z + 4*x^12*z^3 + 3*x^11*y^3*z + 3*x^11*y^2*z^2 + 2*x^11*y*z^3 + 4*x^10*y^4*z + 2*x^10*y^3*z^2",
    "+2*x^9*y^5*z + 2*x^9*y^4*z^2 + 2*x^8*y^6*z + x^7*y^7*z + 4*x^5*y^10 + 3*x^12*z^2 + 3*x^11*y*z^2 + 3*x^11*z^3 + 4*x^10*y*z^3 + 4*x^9*y^4*z",
    "+3*x^9*y^3*z^2 + 2*x^9*y^2*z^3 + 3*x^8*y^5*z + 4*x^8*y^4*z^2 + 3*x^8*y^3*z^3 + 2*x^7*y^6*z + 2*x^7*y^5*z^2 + 3*x^5*y^8*z + 2*x^4*y^10 + x^4*y^9*z",
    "+2*x^3*y^11 + x^2*y^12 + 2*x^10*z^3 + 3*x^9*y^2*z^2 + 4*x^9*y*z^3 + x^9*z^4 + 4*x^8*y^3*z^2 + 4*x^8*y^2*z^3 + 2*x^8*y*z^4 + 3*x^7*y^4*z^2",
    "+2*x^6*y^6*z + 4*x^6*y^5*z^2 + 2*x^6*y^4*z^3 + 3*x^5*y^7*z + x^5*y^5*z^3 + 4*x^4*y^7*z^2 + 2*x^3*y^10 + 3*x^3*y^9*z + 4*x^3*y^8*z^2 + 3*x*y^12",
    "+4*x*y^11*z + 3*y^13 + 4*x^9*z^3 + x^8*y*z^3 + 3*x^8*z^4 + 2*x^7*y^2*z^3 + 2*x^7*y*z^4 + 2*x^7*z^5 + x^6*y^4*z^2 + x^6*y^3*z^3 + 3*x^6*y^2*z^4",
    "+x^6*y*z^5 + 4*x^5*y^5*z^2 + x^5*y^4*z^3 + x^5*y^3*z^4 + x^4*y^6*z^2 + 2*x^4*y^5*z^3 + x^4*y^4*z^4 + 3*x^3*y^6*z^3 + 3*x^2*y^9*z + 3*x^2*y^8*z^2",
    "+4*x^2*y^7*z^3 + 4*x*y^10*z + 3*y^12 + 2*y^11*z + x^7*z^4 + x^6*y^2*z^3 + 3*x^6*y*z^4 + 3*x^6*z^5 + 4*x^5*y^3*z^3 + x^5*y^2*z^4 + 3*x^5*y*z^5",
    "+3*x^5*z^6 + 2*x^4*y^4*z^3 + 4*x^4*y^3*z^4 + x^4*y^2*z^5 + 4*x^3*y^4*z^4 + 3*x^3*y^3*z^5 + 2*x^2*y^7*z^2 + 4*x^2*y^6*z^3 + 2*x^2*y^5*z^4",
    "+2*x*y^8*z^2 + 3*x*y^7*z^3 + 3*y^10*z + 3*y^9*z^2 + 2*x^6*z^4 + 3*x^5*y*z^4 + 3*x^5*z^5 + x^4*y^2*z^4 + 3*x^4*z^6 + 2*x^3*y^3*z^4",
    "+3*x^3*y^2*z^5 + 3*x^2*y^5*z^3 + 3*x^2*y^4*z^4 + 3*x*y^6*z^3 + 2*x*y^5*z^4 + 2*x*y^4*z^5 + 2*y^7*z^3 + y^5*z^5 + 2*x^4*z^5 + x^3*y*z^5",
    "+3*x^3*z^6 + 2*x^2*y^3*z^4 + 2*x^2*y^2*z^5 + 2*x^2*y*z^6 + 2*x*y^4*z^4 + 3*y^5*z^4 + 4*y^4*z^5 + 2*x^3*z^5 + 3*x^2*y*z^5 + 4*x^2*z^6 + x*y^2*z^5",
    "+3*y^2*z^6 + x*z^6 + 3*y^2*z^5 + 4*z^7 + 3*z^6",
};

// z = -(1/82944) phi1(x, y) / phi2(x, y) on the singular set of the (2,2) surface.
const Lines kPhi1 = {
    "104976*y^2 + 5211*x^5 - 48600*y^2*x + 69984*y*x^2 + 3375*y*x^4 + 450*x^3*y^2",
    "-50544*x^4 - 675*x^2*y^2 + 104976*x^3 + 2025*x*y^3 - 10800*y^3 + 20*x^6 + 250*y^4",
    "-37800*x^3*y",
};
const Lines kPhi2 = {
    "1250*y*x^2 - 121500*x*y - 3779136 - 359100*x^2 - 11250*y^2 + 6375*x^3",
    "+421200*y + 2274480*x",
};

// D4 locus.
const Lines kC1 = {
    "100*y^2 - 1458*y + 540*x*y - 243*x^2 + 80*x^3",
};
// D6 locus.
const Lines kC2 = {
    "3888*x - 1188*x^2 + 5*x^3 + 432*y - 360*x*y - 25*y^2",
};
const Lines kC3a = {
    "50*x^4 - 7515*x^3 - 825*y*x^2 + 20412*x^2 - 23490*x*y - 4050*y^2 + 52488*y",
};
const Lines kC3b = {
    "125*y^2 - 1620*y + 1125*x*y - 5832*x + 1890*x^2 + 25*x^3",
};
// y = (1/75) (408240x - 33525x^2 - 944784 + 250x^3) / (-864 + 55x)
const Lines kC3AuxNum = {
    "1/75*(408240*x - 33525*x^2 - 944784 + 250*x^3)",
};
const Lines kC3AuxDen = {
    "-864 + 55*x",
};
const Lines kC3Cubic = {
    "125*x^3 - 9450*x^2 + 247860*x - 944784",
};

// theta: (u, v) -> (i1, i2, i3). Common denominator factor, whose vanishing is J2 = 0.
const Lines kThetaQuadratic = {
    "-405 + 252*u + 4*u^2 - 54*v - 12*u*v + 3*v^2",
};
const Lines kI1Num = {
    "1188*u^3 - 8424*u*v + u^4*v - 24*u^4",
    "+14580*v - 66*u^3*v + 138*u*v^2 + 297*u^2*v + 945*v^2 - 36*v^3 + 9*u^2*v^2",
};
// The printed display never closes this parenthesis; the factor ends at the last term.
const Lines kI2Num = {
    "-81*v^3*u^4 + 2*u^6*v^2 + 234*u^5*v^2",
    "+3162402*u*v^2 - 21384*v^3*u + 26676*v^4 - 473121*v^3 - 72*u^6*v - 5832*v^4*u + 14850*v^3*u^2",
    "-72*v^3*u^3 + 324*v^4*u^2 - 650268*u^3*v - 5940*u^3*v^2 - 3346110*v^2 + 432*u^6 - 1350*u^4*v^2",
    "+136080*u^4*v - 7020*u^5*v - 307638*u^2*v^2",
};
const Lines kI3Cubic = {
    "4*u^3 - u^2*v - 18*u*v + 4*v^2 + 27*v",
};
// Curve of the Jacobian-minor solutions.
const Lines kIso1 = {
    "8*v^3 + 27*v^2 - 54*u*v^2 - u^2*v^2 + 108*u^2*v + 4*u^3*v - 108*u^3",
};

// (r1, r2) of the cubic pair in terms of (u, v).
const Lines kEqrE = {
    "4*v^2 - 18*u*v + 27*v - u^2*v + 4*u^3",
};
const Lines kEqrP = {
    "v - 9 - 2*u",
};

// rho: (r1, r2) -> (i1, i2, i3).
const Lines kRhoK = {
    "-1152*r2^2 + 96*r2*r1 + r1^2",
};
const Lines kRho1Num = {
    "13824*r1^3*r2^2 + 442368*r1^2*r2^3 + 5308416*r1*r2^4 + 192*r1^4*r2 + r1^5 + 786432*r1*r2^3 + 9437184*r2^4",
};
const Lines kRho2Num = {
    "+79626240*r1^4*r2^4 - 4076863488*r1^2*r2^5 + 34560*r1^6*r2^2",
    "+12230590464*r1^2*r2^6 + 32614907904*r1*r2^6 + 14495514624*r2^6 + 288*r1^7*r2 + 2211840*r1^5*r2^3",
    "+r1^8 - 212336640*r1^3*r2^4 + 1528823808*r1^3*r2^5 - 2359296*r1^4*r2^3",
};
const Lines kJ2Locus = {
    "-1152*r2^2 + 96*r1*r2 + r1^2",
};
const Lines kRSystem1 = {
    "3*r1^8 + 720*r1^7*r2 + 69120*r1^6*r2^2 + 2048*r1^5*r2^2 + 3317760*r1^5*r2^3 + 79626240*r1^4*r2^4 - 417792*r1^4*r2^3",
    "-24772608*r1^3*r2^4 + 764411904*r1^3*r2^5 - 113246208*r1^2*r2^5 + 50331648*r1*r2^5",
    "-5435817984*r1*r2^6 - 2415919104*r2^6",
};
const Lines kRSystem2 = {
    "9*r1^5 + 1296*r1^4*r2 + 62208*r1^3*r2^2 - 10240*r1^2*r2^2 + 995328*r1^2*r2^3 + 786432*r1*r2^3 - 2359296*r2^4",
};
const Lines kRSystem3 = {
    "9*r1^8 + 2160*r1^7*r2 + 207360*r1^6*r2^2 + 9953280*r1^5*r2^3 + 38912*r1^5*r2^2 + 238878720*r1^4*r2^4",
    "-3735552*r1^4*r2^3 + 2293235712*r1^3*r2^5 - 247726080*r1^3*r2^4 + 905969664*r1^2*r2^5",
    "+201326592*r1*r2^5 - 5435817984*r1*r2^6 - 4831838208*r2^6",
};

}  // namespace g2split::transcription
