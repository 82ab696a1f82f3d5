#pragma once

// Reference digit strings for test anchors (independently known values,
// trusted well past the 24 digits used here).
namespace anchors {

inline constexpr const char* pi = "3.141592653589793238462643";
inline constexpr const char* e = "2.718281828459045235360287";
inline constexpr const char* sqrt2 = "1.414213562373095048801688";
inline constexpr const char* sqrt3 = "1.732050807568877293527446";
inline constexpr const char* sqrt5 = "2.236067977499789696409173";
inline constexpr const char* phi = "1.618033988749894848204586";
inline constexpr const char* ln2 = "0.693147180559945309417232";
inline constexpr const char* zeta2 = "1.644934066848226436472415";
inline constexpr const char* zeta3 = "1.202056903159594285399738";
inline constexpr const char* zeta4 = "1.082323233711138191516003";
inline constexpr const char* zeta6 = "1.017343061984449139714517";
inline constexpr const char* zeta8 = "1.004077356197944339378685";
inline constexpr const char* log_1_plus_sqrt2 = "0.881373587019543025232609";
inline constexpr const char* log_2_plus_sqrt3 = "1.316957896924816708625046";
inline constexpr const char* log_phi = "0.481211825059603447497758";

} // namespace anchors
