#pragma once
// Frozen high-precision reference values for the worked gadget examples.
// Computed once from an independent straightedge-and-compass implementation
// of the same constructions and pinned here; regressions against these catch
// silent geometry changes. Coordinates are in the canonical pose (apex A at
// the origin, gamma bisected by the -y axis, B_L at x < 0) unless a case
// says otherwise.

#include "origon/geom.hpp"

namespace refs {

using origon::Point2;

// remark gadget: alpha=90, beta_l=45, beta_r=120, delta=0 (gamma=105 deg)
inline constexpr double remark_r = 1.6426796317045815;
inline constexpr double remark_zeta_l_deg = 21.530779719971463;
inline constexpr double remark_zeta_r_deg = 46.24964229317774;
inline constexpr double remark_phi_lo_deg = 12.50071541364452;
inline constexpr double remark_phi_hi_deg = 43.061559439942926;

// delta gadget: alpha=80, beta_l=70, beta_r=100, delta_l=10, delta_r=15
inline constexpr double delta_phi_orth_deg = 57.27028308879952;
inline constexpr double delta_phi_lo_deg = 21.640909163869093;
inline constexpr double delta_phi_hi_deg = 64.85397411614322;
inline constexpr double delta_phi_l_deg = 43.24744164000616;

// left-critical cube gadget: alpha=beta=90, phi_l = 2 atan(1/2)
inline constexpr Point2 cube_e_l{-0.3535533905932736, -1.0606601717798207};
inline constexpr Point2 cube_g_l = cube_e_l;   // critical: G_L merged into E_L
inline constexpr Point2 cube_g_r{0.4714045207910319, -0.9428090415820634};

// remark gadget at phi_l = 18 deg
inline constexpr Point2 rem_c{1.0058511764957845e-16, -1.6426796317045815};
inline constexpr Point2 rem_d{-0.5664062369248326, -0.8241261886220158};
inline constexpr Point2 rem_e_l{-2.867274639014924, -3.021477028316073};
inline constexpr Point2 rem_e_r{0.14808455643793844, -0.934969092510014};
inline constexpr Point2 rem_g_l{-0.8280918693272136, -0.8726267538037775};
inline constexpr Point2 rem_g_r{0.13932580380197523, -0.8796685047880366};

// delta gadget at phi_l = delta_phi_l_deg
inline constexpr Point2 delta_c{0.10096608707877043, -2.5467761367555335};
inline constexpr Point2 delta_e_l{-1.3243408035933872, -2.0102787393627795};
inline constexpr Point2 delta_e_r{0.6451731084163576, -1.6275522880525934};
inline constexpr Point2 delta_g_l{-0.6915609933875272, -1.0497527209064175};
inline constexpr Point2 delta_h_l{-0.9666928186485197, -1.4673881643991518};
inline constexpr Point2 delta_g_r{0.39536275012835664, -0.9973657305116812};
inline constexpr Point2 delta_h_r{0.5035281011474217, -1.2702301172050618};

// delta gadget at the left-critical phi_l (G_L = H_L)
inline constexpr double delta_crit_phi_l_deg = 64.85397411614322;
inline constexpr Point2 delta_crit_g_l{-0.5915503957881243, -1.4229973524427149};

// conventional cube gadget
inline constexpr Point2 convcube_c{0.0, -1.414213562373095};
inline constexpr Point2 convcube_d_l{-0.35355339059327373, -1.0606601717798212};
inline constexpr Point2 convcube_d_r{0.35355339059327373, -1.0606601717798212};

// remark division, d=3, p=(1,1,1), phi_l=18 deg (C-frame: C at origin,
// apexes on +y)
inline constexpr double rem18_dcoef = 2.4003885421002624;
inline constexpr double rem18_gcoef_l = 3.462507899448953;
inline constexpr double rem18_gcoef_r = 1.0628652582432772;
inline constexpr Point2 rem18_a3{0.0, 4.928038895113745};
inline constexpr Point2 rem18_b_l3{-2.3800600208737053, 3.101754608087582};
inline constexpr Point2 rem18_e_l1{-2.8672746390149255, -1.3787973966114937};
inline constexpr Point2 rem18_e_r1{0.14808455643793825, 0.7077105391945673};
inline constexpr Point2 rem18_e_l2{-2.8672746390149255, 0.26388223509308784};
inline constexpr Point2 rem18_fp1{-1.3595950412884934, -0.3355434287084631};
inline constexpr Point2 rem18_fp2{-1.3595950412884934, 1.3071362029961184};
inline constexpr Point2 rem18_d1{-0.5664062369248326, 0.8185534430825657};
inline constexpr Point2 rem18_d2{-1.1328124738496652, 1.6371068861651314};
inline constexpr Point2 rem18_dp1{-0.9708698696216225, 1.4030722523088424};
inline constexpr Point2 rem18_g_l1{-0.8280918693272137, 0.7700528779008038};
inline constexpr Point2 rem18_g_l2{-1.6561837386544274, 1.5401057558016076};
inline constexpr Point2 rem18_gp_l1{-1.164371752738967, 1.082763703345515};
inline constexpr Point2 rem18_j_r2{0.8915635341135983, 1.7798986863336077};
inline constexpr Point2 rem18_m_r2{-0.9082700861465983, 1.6194350169984248};
inline constexpr Point2 rem18_k_l2{-1.7906594337339272, 1.0088568878693724};
inline constexpr Point2 rem18_k_r2{-0.9285306488430611, 1.605415518122863};

// remark division at phi_l = 2 zeta_l
inline constexpr double rem_crit_dcoef = 1.368699562023754;
inline constexpr double rem_crit_gcoef_l = 1.0000000000000002;
inline constexpr double rem_crit_gcoef_r = 1.4619951975392147;

// remark division at 2 zeta_l, d=2, raw ratios (1,3); frozen from a run with
// unnormalized ratios, so scale by 1/2 for the normalized (0.5, 1.5) run.
inline constexpr Point2 rem_crit13_k_l2{-0.8716734714616592, 2.4706459990305487};
inline constexpr Point2 rem_crit13_k_r2{-0.47502696205315914, 2.5697674389513767};

// prism optima (golden-section on the admissible t interval)
struct PrismRef {
    int n;
    double t, kmin, psi_deg, k0, kconv;
};
inline constexpr PrismRef prism_refs[] = {
    {3, 0.6669650297609613, 1.1329940659148754, -7.403801717901624, 1.154700538379251,
     1.7320508075688767},
    {4, 0.40463859378166, 0.7061286556187869, 0.9396879073652628, 0.7071067811865477,
     0.9999999999999999},
    {5, 0.304429202992342, 0.5152934283356824, 2.136439495422405, 0.5257311121191335,
     0.7265425280053609},
    {6, 0.248053958884206, 0.4041325128524164, 2.1374912216343196, 0.4226497308103738,
     0.5773502691896257},
    {8, 0.1907435698305464, 0.2836116248912247, 0.9018390163075327, 0.3065629648763774,
     0.41421356237309503},
    {12, 0.12933179371003412, 0.18072037733761886, 0.26148042486010314, 0.19980084500925616,
     0.2679491924311227},
};

// Published four-significant-figure table for the prism extrusion.
struct PrismTableRow {
    int n;
    double kmin, t_l, psi_deg, k0, kconv;
    double inv_kmin, inv_k0, inv_kconv;
    double ratio_k0, ratio_kconv;   // kmin^-1/k0^-1 and kmin^-1/kconv^-1
};
inline constexpr PrismTableRow prism_table[] = {
    {3, 1.133, 0.6670, -7.404, 1.155, 1.732, 0.8826, 0.8660, 0.5774, 1.019, 1.529},
    {4, 0.7061, 0.4046, 0.9397, 0.7071, 1.0, 1.416, 1.414, 1.0, 1.001, 1.416},
    {5, 0.5153, 0.3044, 2.136, 0.5257, 0.7265, 1.941, 1.902, 1.376, 1.020, 1.410},
    {6, 0.4041, 0.2481, 2.137, 0.4226, 0.5774, 2.474, 2.366, 1.732, 1.046, 1.428},
    {8, 0.2836, 0.1907, 0.9018, 0.3066, 0.4142, 3.526, 3.262, 2.414, 1.081, 1.460},
    {12, 0.1807, 0.1293, 0.2615, 0.1998, 0.2679, 5.533, 5.005, 3.732, 1.106, 1.483},
};

}  // namespace refs
