//! Default numerical tolerances, collected in one place.
//!
//! All values are stated for `f64`; callers on other scalar types convert
//! with [`crate::scalar::real`]. Functions that take an explicit tolerance
//! parameter use these as their documented defaults.
//!
//! | constant | value | guards |
//! |---|---|---|
//! | `SVD_MAX_SWEEPS` | 60 | Jacobi sweep budget |
//! | `PI_CERT_TOL` | 1e-9 | partial isometry residual `‖ee*e − e‖` |
//! | `PI_SIGMA_TOL` | 1e-7 | singular values clustered to {0, 1} |
//! | `SUPPORT_ZERO_TOL_REL` | 1e-10 | support cutoff, relative to σ₁ |
//! | `UNIT_VECTOR_TOL` | 1e-12 | unit-vector preconditions |
//! | `UNIT_NORM_TOL` | 1e-8 | unit p-norm preconditions |
//! | `ORTH_NORM_TOL` | 1e-8 | `‖a±b‖_p^p` within this of 2 |
//! | `P_GATE_RADIUS` | 1e-6 | exclusion radius around p = 2 |
//! | `CLUSTER_TOL_REL` | 1e-8 | relative singular-value cluster width |
//! | `INVERT_STEP_TOL` | 1e-12 | bisection step bound |
//! | `ORACLE_FLOOR_SLACK` | 1e-6 | profile minimum below `(γ−1)^p` |
//! | `CLUSTER_VALUE_GAP` | 1e-3 | reconstruction: same-cluster decision |
//! | `ISOMETRY_CONTRACT_TOL` | 1e-8 | spot check `‖Δx−Δy‖ = ‖x−y‖` |
//! | `DICHOTOMY_TOL` | 1e-6 | phase-branch match |
//! | `FRAME_TOL` | 1e-8 | recovered frame orthonormality |
//! | `CLASSIFY_MAX_ERROR` | 1e-8 | extension check pass threshold |

pub const SVD_MAX_SWEEPS: usize = 60;
pub const PI_CERT_TOL: f64 = 1e-9;
pub const PI_SIGMA_TOL: f64 = 1e-7;
pub const SUPPORT_ZERO_TOL_REL: f64 = 1e-10;
pub const UNIT_VECTOR_TOL: f64 = 1e-12;
pub const UNIT_NORM_TOL: f64 = 1e-8;
pub const ORTH_NORM_TOL: f64 = 1e-8;
pub const P_GATE_RADIUS: f64 = 1e-6;
pub const CLUSTER_TOL_REL: f64 = 1e-8;
pub const INVERT_STEP_TOL: f64 = 1e-12;
pub const ORACLE_FLOOR_SLACK: f64 = 1e-6;
pub const CLUSTER_VALUE_GAP: f64 = 1e-3;
pub const ISOMETRY_CONTRACT_TOL: f64 = 1e-8;
pub const DICHOTOMY_TOL: f64 = 1e-6;
pub const FRAME_TOL: f64 = 1e-8;
pub const CLASSIFY_MAX_ERROR: f64 = 1e-8;
