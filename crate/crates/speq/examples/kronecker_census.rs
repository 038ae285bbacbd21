//! Census of Kronecker representation classes at small dimension vectors
//! over GF(2): total isomorphism classes and indecomposables.
//!
//! Along multiples of the stable element (1,1) the indecomposable count
//! matches the closed points of the projective line by degree: 4 classes at
//! (2,2), 5 at (3,3).

use speq::catalog;
use speq::rep::{enumerate_indecomposables, enumerate_reps, RepCtx};
use speq::species::{Base, FqSpecies};

fn main() {
    let ctx = RepCtx::new(&FqSpecies::untwisted(Base::new(2, 1), catalog::kronecker())).unwrap();
    for dims in [[1u64, 1], [2, 1], [2, 2], [3, 2], [3, 3]] {
        let total = enumerate_reps(&ctx, &dims, 1 << 24).unwrap().len();
        let ind = enumerate_indecomposables(&ctx, &dims, 1 << 24)
            .unwrap()
            .len();
        println!("dims {dims:?}: {total} classes, {ind} indecomposable");
    }
}
