// generated by tests/reference/gen_expected.py -- do not edit
#pragma once

namespace expected {

struct Frac {
  long long num;
  long long den;
};

// from calc_core
inline constexpr Frac kExpectedMaxUniform4[4] = {{5, 8}, {25, 32}, {55, 64}, {463, 512}};
inline constexpr Frac kXvcgUniform4N2[4] = {{1, 8}, {3, 8}, {5, 8}, {7, 8}};
inline constexpr Frac kXvcgUniform4N3[4] = {{1, 48}, {7, 48}, {19, 48}, {37, 48}};
inline constexpr Frac kPvcgUniform4N2[4] = {{1, 32}, {1, 8}, {9, 32}, {1, 2}};
inline constexpr Frac kEharmUniform4N2[4] = {{1, 2}, {5, 8}, {3, 4}, {7, 8}};
inline constexpr Frac kMyersonUniform4N1 = {3, 8};
inline constexpr Frac kMyersonUniform4N2 = {19, 32};
inline constexpr Frac kBestSpaRevUniform4N2 = {37, 64};
inline constexpr Frac kBestSpaReserveUniform4N2 = {3, 4};
inline constexpr Frac kSetupPhase1WinProbsUniform4N2[4] = {{1, 8}, {1, 8}, {1, 8}, {1, 8}};
inline constexpr Frac kSetupPhase2WinProbsUniform4N2[4] = {{1, 8}, {3, 8}, {3, 8}, {3, 8}};
inline constexpr Frac kSetupPhase3WinProbsUniform4N2[4] = {{1, 8}, {3, 8}, {5, 8}, {5, 8}};

// from calc_border
inline constexpr bool kBorderOracleFrozenFeasible[12] = {true, false, false, true, true, true, false, true, true, false, true, true};

// from calc_lp
inline constexpr Frac kSingleLpUniform4Objective = {13, 32};
inline constexpr Frac kBorderLpUniform4N2Objective = {81, 256};
inline constexpr Frac kReducedUniformLpUniform4N2Objective = {9, 32};
inline constexpr Frac kReducedUniformLpUniform4N2X[4] = {{0, 1}, {0, 1}, {3, 4}, {3, 4}};
inline constexpr Frac kFillRemarkLambda11 = {1, 1};
inline constexpr Frac kFillRemarkLambda21 = {1, 8};
inline constexpr Frac kFillRemarkLambda22 = {7, 8};
inline constexpr Frac kFillRemarkLambda32 = {1, 1};
inline constexpr Frac kFillRemarkLambda42 = {1, 1};
inline constexpr Frac kFillRemarkPhi[4] = {{0, 1}, {2, 1}, {10, 1}, {15, 1}};
inline constexpr Frac kFillRemarkValue = {27, 4};
inline constexpr Frac kSingleLpRemarkObjective = {27, 4};
inline constexpr Frac kBorderLpAppCObjectiveDelta10th = {51, 200};
inline constexpr Frac kBorderLpAppCXDelta10th[4] = {{0, 1}, {0, 1}, {0, 1}, {17, 20}};

// from calc_verify
inline constexpr Frac kCounterexampleXstarDelta100th[4] = {{1, 40}, {11, 200}, {13, 200}, {107, 200}};
inline constexpr Frac kCounterexampleUstarDelta100th[4] = {{0, 1}, {3, 400}, {1, 100}, {33, 1000}};
inline constexpr Frac kCounterexampleIneqLhsDelta100th[3] = {{1, 100}, {33, 1000}, {33, 1000}};
inline constexpr Frac kCounterexampleIneqRhsDelta100th[3] = {{11, 2000}, {9, 400}, {13, 400}};
inline constexpr Frac kCounterexampleXstarDelta20th[4] = {{1, 8}, {11, 40}, {13, 40}, {27, 40}};
inline constexpr Frac kCounterexampleUstarDelta20th[4] = {{0, 1}, {3, 80}, {1, 20}, {33, 200}};
inline constexpr Frac kCounterexampleIneqLhsDelta20th[3] = {{1, 20}, {33, 200}, {33, 200}};
inline constexpr Frac kCounterexampleIneqRhsDelta20th[3] = {{11, 400}, {9, 80}, {13, 80}};
inline constexpr Frac kCounterexampleXstarDelta10th[4] = {{1, 4}, {11, 20}, {13, 20}, {17, 20}};
inline constexpr Frac kCounterexampleUstarDelta10th[4] = {{0, 1}, {3, 40}, {1, 10}, {33, 100}};
inline constexpr Frac kCounterexampleIneqLhsDelta10th[3] = {{1, 10}, {33, 100}, {33, 100}};
inline constexpr Frac kCounterexampleIneqRhsDelta10th[3] = {{11, 200}, {9, 40}, {13, 40}};
inline constexpr Frac kSameBidBoundTwoFifthsN2 = {4, 5};
inline constexpr Frac kSameBidBoundOneFifthN2 = {9, 10};
inline constexpr Frac kNonconvexProductsA5[4] = {{87, 10}, {189, 10}, {117, 5}, {207, 10}};
inline constexpr Frac kNonconvexProductsA4[3] = {{9, 5}, {14, 5}, {27, 10}};
inline constexpr Frac kNonconvexProductsA3[2] = {{9, 10}, {7, 10}};
inline constexpr Frac kNonconvexProductsB5[4] = {{87, 10}, {81, 10}, {91, 5}, {207, 10}};
inline constexpr Frac kNonconvexProductsB4[3] = {{9, 5}, {6, 5}, {21, 10}};
inline constexpr Frac kNonconvexProductsB3[2] = {{9, 10}, {3, 10}};
inline constexpr Frac kNonconvexMidY[5] = {{3, 10}, {1, 2}, {4, 5}, {9, 10}, {9, 10}};
inline constexpr Frac kNonconvexMidProducts5[4] = {{87, 10}, {27, 2}, {104, 5}, {207, 10}};
inline constexpr Frac kNonconvexMidProducts4[3] = {{9, 5}, {2, 1}, {12, 5}};
inline constexpr Frac kUniformReserveRevUniform4 = {9, 16};

// from calc_engine
inline constexpr Frac kFseMainWinProb[4] = {{1, 8}, {3, 8}, {5, 8}, {7, 8}};
inline constexpr Frac kFseMainExpPayFirst[4] = {{1, 32}, {1, 8}, {9, 32}, {1, 2}};
inline constexpr Frac kFseMainExpPaySecond[4] = {{1, 32}, {1, 4}, {21, 32}, {5, 4}};
inline constexpr Frac kFseSetup1WinProb[1] = {{1, 8}};
inline constexpr Frac kFseSetup1ExpPayFirst[1] = {{1, 32}};
inline constexpr Frac kFseSetup1ExpPaySecond[1] = {{1, 32}};
inline constexpr Frac kFseSetup2WinProb[2] = {{1, 8}, {3, 8}};
inline constexpr Frac kFseSetup2ExpPayFirst[2] = {{1, 32}, {1, 8}};
inline constexpr Frac kFseSetup2ExpPaySecond[2] = {{1, 32}, {1, 4}};
inline constexpr Frac kFseSetup3WinProb[3] = {{1, 8}, {3, 8}, {5, 8}};
inline constexpr Frac kFseSetup3ExpPayFirst[3] = {{1, 32}, {1, 8}, {9, 32}};
inline constexpr Frac kFseSetup3ExpPaySecond[3] = {{1, 32}, {1, 4}, {21, 32}};
inline constexpr Frac kFseFavoriteSeparationPerR = {1, 16};

// from calc_learners
inline constexpr long long kMetaArmCount231 = 8;
inline constexpr long long kMetaArmCount341 = 27;
inline constexpr long long kMetaArmCount2_1000_1 = 2002;
inline constexpr Frac kRecencySigmaExample[2] = {{2, 1}, {4, 1}};
inline constexpr long long kAdversarialAlwaysBRegretT1000 = 250;

}  // namespace expected
