//! Exact computations around free Lie algebras, tangential derivations,
//! Johnson images, trace maps and twisted cohomology of presented groups.

pub mod combinat;
pub mod cyclic;
pub mod exactlin;
pub mod freelie;
pub mod grouppres;
pub mod johnson;
pub mod tangent;
