#include "heavenlift/equations.hpp"

namespace heavenlift {

const char* equation_name(EquationId eq) {
  switch (eq) {
    case EquationId::CMA_ELLIPTIC: return "cma_elliptic";
    case EquationId::CMA_HYPERBOLIC: return "cma_hyperbolic";
    case EquationId::CMA_REAL: return "cma_real";
    case EquationId::HCMA_REAL: return "hcma_real";
    case EquationId::CMA_REDUCED: return "cma_reduced";
    case EquationId::HCMA_REDUCED: return "hcma_reduced";
    case EquationId::CMA_LEGENDRE: return "cma_legendre";
    case EquationId::VEQ_PP: return "veq_pp";
    case EquationId::VEQ_PZBAR: return "veq_pzbar";
    case EquationId::VEQ_ZZBAR: return "veq_zzbar";
    case EquationId::VEQ_PP_C: return "veq_pp_c";
    case EquationId::VEQ_PZBAR_C: return "veq_pzbar_c";
    case EquationId::VEQ_ZZBAR_C: return "veq_zzbar_c";
    case EquationId::VEQ_UNIT: return "veq_unit";
    case EquationId::W_LIN_1: return "w_lin_1";
    case EquationId::W_LIN_2: return "w_lin_2";
    case EquationId::W_LIN_3: return "w_lin_3";
    case EquationId::W_LIN_4: return "w_lin_4";
    case EquationId::W_LIN_1C: return "w_lin_1c";
    case EquationId::W_LIN_2C: return "w_lin_2c";
    case EquationId::W_LIN_3C: return "w_lin_3c";
    case EquationId::W_LIN_4C: return "w_lin_4c";
    case EquationId::W_WAVE: return "w_wave";
    case EquationId::LAPLACE3: return "laplace3";
    case EquationId::LAPLACE3_W: return "laplace3_w";
    case EquationId::HELMHOLTZ: return "helmholtz";
    case EquationId::HCMA_LEGENDRE: return "hcma_legendre";
    case EquationId::PARTNER_A: return "partner_a";
    case EquationId::PARTNER_B: return "partner_b";
    case EquationId::PARTNER_C: return "partner_c";
    case EquationId::WAVE3: return "wave3";
    case EquationId::HCMA_LEG_ROT: return "hcma_leg_rot";
    case EquationId::ROT_CONSTRAINT_1: return "rot_constraint_1";
    case EquationId::ROT_CONSTRAINT_2: return "rot_constraint_2";
    case EquationId::ROT_CONSTRAINT_XY_1: return "rot_constraint_xy_1";
    case EquationId::ROT_CONSTRAINT_XY_2: return "rot_constraint_xy_2";
    case EquationId::BF_COMBINED: return "bf_combined";
    case EquationId::BF_REAL: return "bf_real";
    case EquationId::BF_V: return "bf_v";
    case EquationId::BF_ELLIPTIC: return "bf_elliptic";
    case EquationId::LIE_Y: return "lie_y";
    case EquationId::BACKLUND_1: return "backlund_1";
    case EquationId::BACKLUND_2: return "backlund_2";
    case EquationId::OMEGA_SYM: return "omega_sym";
    case EquationId::SYM_LINEARIZATION: return "sym_linearization";
    case EquationId::PARTNER_POT_1: return "partner_pot_1";
    case EquationId::PARTNER_POT_2: return "partner_pot_2";
    case EquationId::PARTNER_INV_1: return "partner_inv_1";
    case EquationId::PARTNER_INV_2: return "partner_inv_2";
    case EquationId::SELF_PARTNER_1: return "self_partner_1";
    case EquationId::SELF_PARTNER_2: return "self_partner_2";
    case EquationId::SELF_PARTNER_CONJ_1: return "self_partner_conj_1";
    case EquationId::SELF_PARTNER_CONJ_2: return "self_partner_conj_2";
    case EquationId::BASIC_PAIR_1: return "basic_pair_1";
    case EquationId::BASIC_PAIR_2: return "basic_pair_2";
  }
  return "?";
}

ChartId equation_chart(EquationId eq) {
  switch (eq) {
    case EquationId::CMA_ELLIPTIC:
    case EquationId::CMA_HYPERBOLIC:
    case EquationId::SYM_LINEARIZATION:
    case EquationId::PARTNER_POT_1:
    case EquationId::PARTNER_POT_2:
    case EquationId::PARTNER_INV_1:
    case EquationId::PARTNER_INV_2:
    case EquationId::SELF_PARTNER_1:
    case EquationId::SELF_PARTNER_2:
    case EquationId::SELF_PARTNER_CONJ_1:
    case EquationId::SELF_PARTNER_CONJ_2:
    case EquationId::BASIC_PAIR_1:
    case EquationId::BASIC_PAIR_2:
      return ChartId::ORIGINAL;
    case EquationId::CMA_REAL:
    case EquationId::HCMA_REAL:
    case EquationId::CMA_REDUCED:
    case EquationId::HCMA_REDUCED:
      return ChartId::REAL_XYZT;
    case EquationId::CMA_LEGENDRE:
    case EquationId::VEQ_PP:
    case EquationId::VEQ_PZBAR:
    case EquationId::VEQ_ZZBAR:
    case EquationId::VEQ_PP_C:
    case EquationId::VEQ_PZBAR_C:
    case EquationId::VEQ_ZZBAR_C:
    case EquationId::VEQ_UNIT:
    case EquationId::W_LIN_1:
    case EquationId::W_LIN_2:
    case EquationId::W_LIN_3:
    case EquationId::W_LIN_4:
    case EquationId::W_LIN_1C:
    case EquationId::W_LIN_2C:
    case EquationId::W_LIN_3C:
    case EquationId::W_LIN_4C:
    case EquationId::W_WAVE:
    case EquationId::LAPLACE3:
    case EquationId::LAPLACE3_W:
    case EquationId::HELMHOLTZ:
      return ChartId::LEGENDRE_CMA;
    case EquationId::HCMA_LEGENDRE:
    case EquationId::PARTNER_A:
    case EquationId::PARTNER_B:
    case EquationId::PARTNER_C:
    case EquationId::WAVE3:
      return ChartId::LEGENDRE_HCMA;
    case EquationId::HCMA_LEG_ROT:
    case EquationId::ROT_CONSTRAINT_1:
    case EquationId::ROT_CONSTRAINT_2:
    case EquationId::ROT_CONSTRAINT_XY_1:
    case EquationId::ROT_CONSTRAINT_XY_2:
    case EquationId::BF_COMBINED:
    case EquationId::BF_REAL:
    case EquationId::BF_V:
    case EquationId::BF_ELLIPTIC:
    case EquationId::LIE_Y:
    case EquationId::BACKLUND_1:
    case EquationId::BACKLUND_2:
    case EquationId::OMEGA_SYM:
      return ChartId::ROT_LEGENDRE;
  }
  return ChartId::ORIGINAL;
}

EquationArity equation_arity(EquationId eq) {
  switch (eq) {
    case EquationId::LIE_Y:
    case EquationId::BACKLUND_1:
    case EquationId::BACKLUND_2:
    case EquationId::OMEGA_SYM:
    case EquationId::SYM_LINEARIZATION:
    case EquationId::SELF_PARTNER_1:
    case EquationId::SELF_PARTNER_2:
    case EquationId::SELF_PARTNER_CONJ_1:
    case EquationId::SELF_PARTNER_CONJ_2:
    case EquationId::BASIC_PAIR_1:
    case EquationId::BASIC_PAIR_2:
      return EquationArity::pair;
    case EquationId::PARTNER_POT_1:
    case EquationId::PARTNER_POT_2:
    case EquationId::PARTNER_INV_1:
    case EquationId::PARTNER_INV_2:
      return EquationArity::triple;
    default:
      return EquationArity::single;
  }
}

bool equation_uses_lambda(EquationId eq) {
  switch (eq) {
    case EquationId::ROT_CONSTRAINT_1:
    case EquationId::ROT_CONSTRAINT_2:
    case EquationId::ROT_CONSTRAINT_XY_1:
    case EquationId::ROT_CONSTRAINT_XY_2:
    case EquationId::BACKLUND_1:
    case EquationId::BACKLUND_2:
    case EquationId::PARTNER_POT_1:
    case EquationId::PARTNER_POT_2:
    case EquationId::PARTNER_INV_1:
    case EquationId::PARTNER_INV_2:
    case EquationId::SELF_PARTNER_1:
    case EquationId::SELF_PARTNER_2:
    case EquationId::SELF_PARTNER_CONJ_1:
    case EquationId::SELF_PARTNER_CONJ_2:
    case EquationId::BASIC_PAIR_1:
    case EquationId::BASIC_PAIR_2:
      return true;
    default:
      return false;
  }
}

bool equation_requires_unit_lambda(EquationId eq) {
  switch (eq) {
    case EquationId::SELF_PARTNER_1:
    case EquationId::SELF_PARTNER_2:
    case EquationId::SELF_PARTNER_CONJ_1:
    case EquationId::SELF_PARTNER_CONJ_2:
    case EquationId::BASIC_PAIR_1:
    case EquationId::BASIC_PAIR_2:
      return true;
    default:
      return false;
  }
}

const std::vector<EquationId>& all_equations() {
  static const std::vector<EquationId> all = {
      EquationId::CMA_ELLIPTIC,
      EquationId::CMA_HYPERBOLIC,
      EquationId::CMA_REAL,
      EquationId::HCMA_REAL,
      EquationId::CMA_REDUCED,
      EquationId::HCMA_REDUCED,
      EquationId::CMA_LEGENDRE,
      EquationId::VEQ_PP,
      EquationId::VEQ_PZBAR,
      EquationId::VEQ_ZZBAR,
      EquationId::VEQ_PP_C,
      EquationId::VEQ_PZBAR_C,
      EquationId::VEQ_ZZBAR_C,
      EquationId::VEQ_UNIT,
      EquationId::W_LIN_1,
      EquationId::W_LIN_2,
      EquationId::W_LIN_3,
      EquationId::W_LIN_4,
      EquationId::W_LIN_1C,
      EquationId::W_LIN_2C,
      EquationId::W_LIN_3C,
      EquationId::W_LIN_4C,
      EquationId::W_WAVE,
      EquationId::LAPLACE3,
      EquationId::LAPLACE3_W,
      EquationId::HELMHOLTZ,
      EquationId::HCMA_LEGENDRE,
      EquationId::PARTNER_A,
      EquationId::PARTNER_B,
      EquationId::PARTNER_C,
      EquationId::WAVE3,
      EquationId::HCMA_LEG_ROT,
      EquationId::ROT_CONSTRAINT_1,
      EquationId::ROT_CONSTRAINT_2,
      EquationId::ROT_CONSTRAINT_XY_1,
      EquationId::ROT_CONSTRAINT_XY_2,
      EquationId::BF_COMBINED,
      EquationId::BF_REAL,
      EquationId::BF_V,
      EquationId::BF_ELLIPTIC,
      EquationId::LIE_Y,
      EquationId::BACKLUND_1,
      EquationId::BACKLUND_2,
      EquationId::OMEGA_SYM,
      EquationId::SYM_LINEARIZATION,
      EquationId::PARTNER_POT_1,
      EquationId::PARTNER_POT_2,
      EquationId::PARTNER_INV_1,
      EquationId::PARTNER_INV_2,
      EquationId::SELF_PARTNER_1,
      EquationId::SELF_PARTNER_2,
      EquationId::SELF_PARTNER_CONJ_1,
      EquationId::SELF_PARTNER_CONJ_2,
      EquationId::BASIC_PAIR_1,
      EquationId::BASIC_PAIR_2,
  };
  return all;
}

}  // namespace heavenlift
