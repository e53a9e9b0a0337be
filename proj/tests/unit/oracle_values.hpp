#pragma once
// Generated by tests/oracles/gen_oracles.py (brute force / mpmath / scipy).
// Do not edit by hand.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline const std::vector<double> kTriangle3ColorLevels = {6, 18, 0, 3};
inline const std::vector<double> kC5_3ColorLevels = {30, 90, 60, 60, 0, 3};
inline constexpr std::int64_t kGrid3x3Chromatic3 = 246;
inline constexpr std::int64_t kPetersenChromatic3 = 120;
inline const std::vector<std::pair<int, int>> kPetersenEdges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {6, 8}, {7, 9}, {8, 5}, {9, 6}};
inline const std::vector<double> kIsing2x2Levels = {2, 0, 12, 0, 2};
inline constexpr double kIsing2x2ZAt1 = 3.660654676616821;
inline const std::vector<double> kIsing3x3Levels = {2, 0, 8, 32, 46, 96, 144, 96, 46, 32, 8, 0, 2};
inline const std::vector<double> kP3MatchingLevels = {1, 2};
inline const std::vector<double> kC6MatchingLevels = {1, 6, 9, 2};
inline const std::vector<double> kGrid3x3MatchingLevels = {1, 12, 44, 56, 18};
inline const std::vector<double> kP3HardcoreLevels = {5, 2, 1};
inline const std::vector<double> kC5HardcoreLevels = {11, 10, 5, 5, 0, 1};
inline constexpr double kP3HardcoreFugacity2 = 11;
inline constexpr double kSoftplusGamma = 2.970628109057377;
inline const std::vector<double> kSoftplusBreakpoints = {0.0, 1.345783163027529, 2.970628109057377};
inline constexpr double kSoftplusPieceBound = 6.4715862361296415;
inline constexpr int kLowerBoundLength_100_20 = 29;
inline constexpr double kLowerBoundBound_100_20 = 17.68754569252328;
inline constexpr int kGreedyLengthBinomial100 = 10;
inline constexpr int kGreedyLengthBinomial400 = 21;
inline constexpr double kMedianConfidence30 = 0.9972504658358596;
inline constexpr double kMedianConfidence5 = 0.896484375;
inline constexpr double kKappa_1_1 = 2.710505431213761e-20;
inline constexpr double kQBudget_100_20_01 = 11683460140431.0;
inline constexpr double kRatioZ11Ln2 = 0.75;

}  // namespace oracle
