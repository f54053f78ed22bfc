#pragma once

// Frozen values from tests/reference/derive_values.py (mpmath, 40 digits).
// Regenerate with: python3 tests/reference/derive_values.py

namespace ref {

inline constexpr double ext_iso_001_025 = 0.0012511670268382411452;
inline constexpr double ext_iso_005_025 = 0.0063969720173860617542;
inline constexpr double h_001_025 = 0.031270830773026051443;
inline constexpr double theta_iso_005_025 = 0.10168926829916876408;
inline constexpr double theta_max_cap_025 = 0.20776346619363361087;
inline constexpr double jgamma_ratio_005_025 = 2.9602590156895985107;
inline constexpr double oa_01_cap = 0.44532653159145611777;
inline constexpr double beta1_01_cap = 0.14447312798610570902;

// a = pi/49, r0 = 1/4, p = lambda = 9/10, reproducing convention
inline constexpr double theorem_r_lambda = 0.23141141357875468008;
inline constexpr double theorem_delta1 = 0.017261659295639277098;
inline constexpr double theorem_r1 = 1.8582319009098822336;
inline constexpr double theorem_integral = 0.01063525131133626145;
inline constexpr double theorem_case_i = 0.010205431545050658826;
inline constexpr double theorem_case_ii = 0.010717904519704950536;
inline constexpr double theorem_balanced_p = 0.90466572258299312311;
inline constexpr double theorem_balanced = 0.010217836828105436032;
inline constexpr double theorem_half_a = 0.010204081632653061224;
inline constexpr double theorem_c_r1m1 = 0.42871618078819802143;
inline constexpr double theorem_outcir_full = 0.10717904519704950536;  // outcir(pi, r1 - 1, a) / pi
inline constexpr double theorem_g_020 = 2.7231663985588485853;
inline constexpr double theorem_g_025 = 3.0;
inline constexpr double theorem_kink_low = 0.2215744818388166466;
inline constexpr double theorem_kink_high = 0.23529881692067726161;
inline constexpr double theorem_cross_section_09_02 = 0.069219258623029068953;

// same parameters, r_lambda = lambda a + (1 - lambda) r0
inline constexpr double literal_r_lambda = 0.082702722208792120706;
inline constexpr double literal_delta1 = 0.027046211751728701601;
inline constexpr double literal_r1 = 1.1870029439376134715;
inline constexpr double literal_integral = 0.011452873968033354405;
inline constexpr double literal_case_i = 0.010389396642807504741;
inline constexpr double literal_case_ii = 0.0022901169904982853107;
inline constexpr double literal_balanced_p = 0.58564052336460403498;
inline constexpr double literal_balanced = 0.0094893167761669757541;

// refined optimum point a = 0.06473, r0 = 0.22785, p = 0.88794, lambda = 0.90696
inline constexpr double sec41_r_lambda = 0.2126733152;
inline constexpr double sec41_delta1 = 0.01865170039480180384;
inline constexpr double sec41_r1 = 1.7364374369129016999;
inline constexpr double sec41_integral = 0.009332270707862778834;
inline constexpr double sec41_case_i = 0.010302213511060309915;
inline constexpr double sec41_case_ii = 0.0103023355561428082;
inline constexpr double sec41_balanced_p = 0.88794129786245109669;
inline constexpr double sec41_balanced = 0.010302216236006480197;
inline constexpr double sec41_half_a = 0.010302099466338385084;

inline constexpr double cunningham = 0.0092592592592592592593;
inline constexpr double upper_bound = 0.0904822031355754126;

}  // namespace ref
