//! Exact symbolic algebra for Young and Hermitian Young projection
//! operators on SU(N) tensor product spaces.

pub mod algebra;
pub mod perm;
pub mod projectors;
pub mod symbolic;
pub mod verify;
pub mod tableau;
