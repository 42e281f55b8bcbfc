//! Exhaustive and sampled checks of the identities satisfied by the lattice
//! polynomials.

mod bijection;
mod cauchy;
mod error;
mod gstat;
mod local;
pub mod polys;
mod properties;
mod report;
mod ribbon;
mod star;
mod ybe;

pub use bijection::{check_bijections, check_content_transport, check_theta_commutes, conjugate_ribbon_tableau};
pub use cauchy::{check_cauchy, extensions, Cauchy, VarCounts};
pub use error::IdentityError;
pub use gstat::{
    check_g_chains, check_g_conjugate, check_strip_duality, check_xy_swap, conjugate, g, g_tilde,
    strips_below,
};
pub use local::{check_cancellation_flip, check_corner_flip};
pub use properties::{
    check_cancellation, check_eta_split, check_factorization, check_general_cancel, check_homogeneity, check_main3,
    check_restriction, check_single_row_swap, check_symmetry, inv_count, Split,
};
pub use report::{all_pass, differ, VerificationReport};
pub use ribbon::{check_l_equals_g, check_other_forms, other_form_constants, twice_box, OtherForms};
pub use star::{
    a_count, check_l_star, check_lp_star, check_star_stability, d_stat, dp_stat, gray_thresholds, l_star_closed,
    l_star_direct, light_thresholds, lp_star_closed, lp_star_direct,
};
pub use ybe::{verify_weight_tables, verify_ybe, Ybe};
