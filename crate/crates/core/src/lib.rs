pub mod combinat;
pub mod error;
pub mod gfun;
pub mod hessenberg;
pub mod hikita;
pub mod json;
pub mod modlaw;
pub mod oracle;
pub mod orientations;
pub mod ptab;
pub mod qalg;
pub mod symfun;
pub mod verify;

pub use combinat::{Composition, Partition, Syt};
pub use error::{Error, Result};
pub use qalg::{QPoly, QRat};
pub use symfun::{Basis, SymFun};
pub use hessenberg::{HessFn, Shape};
pub use modlaw::{ModularTriple, PathCombination};
pub use ptab::PFilling;
