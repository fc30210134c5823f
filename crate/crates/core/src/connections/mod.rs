//! Left-invariant Hermitian connections: the (1,1) forms that parametrize
//! them, their torsion by two independent routes, the Gauduchon line, the
//! connection coefficients and the component checkers.

mod alpha;
mod checks;
mod connection;
mod torsion;

pub use alpha::{alpha_plus, trivial_alpha, validate_alpha, AlphaForm};
pub use checks::{
    d_omega_cyclic_witness, hermitian_torsion_condition_failure, theta_j_condition_witness,
    torsion_pattern_residual, verify_hermitian_torsion_conditions, ConditionFailure,
};
pub use connection::{
    connection_from_torsion, hat_transform, j_parallel_witness, metric_compat_witness,
    torsion_of_connection, verify_j_parallel, verify_metric_compat, Connection, HatTensor,
};
pub use torsion::{
    bismut_simplified_torsion, bismut_theta, chern_theta, gauduchon_alpha, gauduchon_torsion,
    gauduchon_torsion_from_thetas, gauduchon_torsion_poly, hermitian_torsion,
    hermitian_torsion_general, torsion_11_part,
};
