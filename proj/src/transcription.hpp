#pragma once

// Raw text of the stored surface equations and parametrizations. Each entry is
// a list of display lines; lines are joined with spaces and parsed as infix.

#include <string_view>
#include <vector>

namespace g2split::transcription {

using Lines = std::vector<std::string_view>;

extern const Lines kS2;
extern const Lines kS3Mod5;
extern const Lines kPhi1;
extern const Lines kPhi2;
extern const Lines kC1;
extern const Lines kC2;
extern const Lines kC3a;
extern const Lines kC3b;
extern const Lines kC3AuxNum;
extern const Lines kC3AuxDen;
extern const Lines kC3Cubic;

extern const Lines kThetaQuadratic;
extern const Lines kI1Num;
extern const Lines kI2Num;
extern const Lines kI3Cubic;
extern const Lines kIso1;

extern const Lines kEqrE;
extern const Lines kEqrP;

extern const Lines kRhoK;
extern const Lines kRho1Num;
extern const Lines kRho2Num;
extern const Lines kJ2Locus;
extern const Lines kRSystem1;
extern const Lines kRSystem2;
extern const Lines kRSystem3;

}  // namespace g2split::transcription
