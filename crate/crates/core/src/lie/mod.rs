//! Lie algebras with explicit bases, structure constants and root data.

mod roots;
mod so_odd;
mod table;
mod weights;

pub use roots::{build_g2_root_data, build_root_data, so_odd_root_data, RootSystemData};
pub use so_odd::{build_so_odd, MatrixElement, SoOdd};
pub use table::{AlgebraElement, BasisKind, StructureTable};
pub use weights::{positive_combination, reflect, Coefficient, WeightBasis, WeightVec};
