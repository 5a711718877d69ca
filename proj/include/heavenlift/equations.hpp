#pragma once

#include <vector>

#include "heavenlift/charts.hpp"

namespace heavenlift {

// Every equation the verifier knows how to evaluate.  Names follow the role
// of the equation, not its source; `_C` marks the conjugate companion of a
// relation (identical to its partner on real-valued fields, kept separate so
// conjugation symmetry is itself testable).
enum class EquationId {
  // complex Monge-Ampere equations for a Kaehler potential u(c1, c1b, c2, c2b)
  CMA_ELLIPTIC,    // u_{1 1b} u_{2 2b} - u_{1 2b} u_{2 1b} = 1
  CMA_HYPERBOLIC,  // u_{1 1b} u_{2 2b} - u_{1 2b} u_{2 1b} = -1

  // the same equations written in the real coordinates x,y,z,t
  CMA_REAL,      // (u_xx+u_yy)(u_zz+u_tt) - (u_xt+u_yz)^2 - (u_yt-u_xz)^2 = 1
  HCMA_REAL,     // ... = -1
  CMA_REDUCED,   // u_yy(u_zz+u_tt) - u_yz^2 - u_yt^2 = 1 (x-independent u)
  HCMA_REDUCED,  // ... = -1

  // two-variable Legendre transform image of the elliptic equation,
  // v(p, pb, c2, c2b)
  CMA_LEGENDRE,  // v_{p pb} v_{2 2b} - v_{p 2b} v_{pb 2} = v_pp v_pbpb - v_{p pb}^2
  VEQ_PP,        // v_pp = A v_{p pb}
  VEQ_PZBAR,     // v_{p 2b} = C v_{p pb}
  VEQ_ZZBAR,     // v_{2 2b} = B v_{p pb}
  VEQ_PP_C,      // conjugates of the three above
  VEQ_PZBAR_C,
  VEQ_ZZBAR_C,
  VEQ_UNIT,      // v_{p pb} = 1 + v_p v_pb

  // linear system for w = e^{-v} implied by VEQ_UNIT-normalized solutions
  W_LIN_1,  // w_{p pb} + w = 0
  W_LIN_2,  // w_pp + w - i w_2 = 0
  W_LIN_3,  // w_{p 2b} - i (w_p - w_pb) = 0
  W_LIN_4,  // w_{2 2b} - i (w_2 - w_2b) = 0
  W_LIN_1C,
  W_LIN_2C,
  W_LIN_3C,
  W_LIN_4C,
  W_WAVE,      // w_{2 2b} = w_pp + w_pbpb - 2 w_{p pb}
  LAPLACE3,    // f_{x0 x0} + f_{2 2b} = 0 (f constant in Im p)
  LAPLACE3_W,  // w_{x1 x1} + w_{2 2b} = 0 for w = e^{-v}
  HELMHOLTZ,   // f_{2 2b} + f = 0 (f taken as-is)

  // hyperbolic Legendre image, v(p, q, t, z) real
  HCMA_LEGENDRE,  // (v_pp+v_qq)(v_tt+v_zz) - (v_pt-v_qz)^2 - (v_pz+v_qt)^2
                  //   = v_pp v_qq - v_pq^2
  PARTNER_A,      // v_qq = v_pz + v_qt
  PARTNER_B,      // v_pq = v_qz - v_pt
  PARTNER_C,      // v_qq = v_tt + v_zz
  WAVE3,          // alias of PARTNER_C for seed fields

  // one-variable Legendre / rotation image, psi(q, qb, z, zb)
  HCMA_LEG_ROT,  // psi_{q qb} psi_{z zb} - psi_{q zb} psi_{qb z}
                 //   + e^{psi_q + psi_qb}(psi_qq psi_qbqb - psi_{q qb}^2) = 0
  ROT_CONSTRAINT_1,     // e^{psi_qb}(psi_qbqb + psi_{q qb}) = lambda psi_{q zb}
  ROT_CONSTRAINT_2,     // lambda e^{psi_q}(psi_qq + psi_{q qb}) = psi_{qb z}
  ROT_CONSTRAINT_XY_1,  // the same pair in x,y derivatives
  ROT_CONSTRAINT_XY_2,
  BF_COMBINED,  // psi_{z zb} = e^{psi_q+psi_qb}(psi_qq + 2 psi_{q qb} + psi_qbqb)
  BF_REAL,      // psi_{z zb} = e^{psi_x} psi_xx
  BF_V,         // v_{z zb} = e^v (v_xx + v_x^2)
  BF_ELLIPTIC,  // psi_{z zb} + e^{psi_x} psi_xx = 0

  // pairs (psi, omega) on the rotation chart
  LIE_Y,       // psi_y = i omega_x
  BACKLUND_1,  // omega_z = psi_z - 2 lambda e^{(psi_x + omega_x)/2}
  BACKLUND_2,  // omega_zb = -psi_zb + 2 lambda^{-1} e^{(psi_x - omega_x)/2}
  OMEGA_SYM,   // omega_{z zb} = e^{psi_x} omega_xx

  // pairs and triples (u, phi, psi) on the original chart
  SYM_LINEARIZATION,  // u_{2 2b} phi_{1 1b} + u_{1 1b} phi_{2 2b}
                      //   - u_{2 1b} phi_{1 2b} - u_{1 2b} phi_{2 1b} = 0
  PARTNER_POT_1,      // psi_1 = lambda (u_{1 2b} phi_1b - u_{1 1b} phi_2b)
  PARTNER_POT_2,      // psi_2 = lambda (u_{2 2b} phi_1b - u_{2 1b} phi_2b)
  PARTNER_INV_1,      // phi_1 = -+ conj(lambda)^{-1} (u_{1 2b} psi_1b - u_{1 1b} psi_2b)
  PARTNER_INV_2,      // phi_2 = -+ conj(lambda)^{-1} (u_{2 2b} psi_1b - u_{2 1b} psi_2b)
  SELF_PARTNER_1,     // phi_1 = lambda (u_{1 2b} phi_1b - u_{1 1b} phi_2b), |lambda| = 1
  SELF_PARTNER_2,     // phi_2 = lambda (u_{2 2b} phi_1b - u_{2 1b} phi_2b)
  SELF_PARTNER_CONJ_1,  // phi_1b = lambda^{-1} (u_{2 1b} phi_1 - u_{1 1b} phi_2)
  SELF_PARTNER_CONJ_2,  // phi_2b = lambda^{-1} (u_{2 2b} phi_1 - u_{1 2b} phi_2)
  BASIC_PAIR_1,         // the two-equation core system: SELF_PARTNER_1 and
  BASIC_PAIR_2,         // SELF_PARTNER_CONJ_1 under their usual names
};

enum class EquationArity { single, pair, triple };

const char* equation_name(EquationId eq);
ChartId equation_chart(EquationId eq);
EquationArity equation_arity(EquationId eq);
bool equation_uses_lambda(EquationId eq);
// the self-partner family is only consistent for unimodular lambda; these
// equations refuse any other value
bool equation_requires_unit_lambda(EquationId eq);
const std::vector<EquationId>& all_equations();

}  // namespace heavenlift
