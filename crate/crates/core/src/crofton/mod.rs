//! Non-vanishing certificates for invariant Crofton distributions on
//! `R^{p,q}`: ball pairings of the universal families, the centro-affine
//! pairing, the kernel phenomenon for `mu_c`, and the `q = 2` basis table.
//!
//! Unknown positive constants (pushforward normalizations, `c_{p,k}`) are
//! never computed; every certificate is invariant under them.

mod ellipsoid_route;
mod mu_c;
mod pairing;
mod q2;

pub use ellipsoid_route::{degenerate_ellipsoid_route, EllipsoidRouteReport, RoutePoint};
pub use mu_c::{mu_c_vanishing, mu_c_vanishing_up_to, KappaPoles, MuCReport};
pub use pairing::{centroaffine_pairing, universal_pairing, CentroAffineReport, PairingReport, UniversalCase};
pub use q2::{
    q2_basis_certificate, q2_report, restriction_table, Angle, EntryMethod, Q2Certificate, Q2Entry, Q2Strategy,
    RestrictionRow, RestrictionValue, AMBIGUITY_GATE,
};

use thiserror::Error;

use crate::grassmann::GrassmannError;
use crate::matintegrals::MatIntegralError;
use crate::special::SpecialError;

#[derive(Debug, Error)]
pub enum CroftonError {
    #[error("inadmissible case: {0}")]
    InadmissibleCase(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("(p, k) = ({p}, {k}): required entry {entry} = {value:e} is below the ambiguity gate")]
    NumericallyAmbiguous { p: u32, k: u32, entry: String, value: f64 },
    #[error("not certified: {0}")]
    NotCertified(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    MatIntegral(#[from] MatIntegralError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
}

#[cfg(test)]
mod tests;
