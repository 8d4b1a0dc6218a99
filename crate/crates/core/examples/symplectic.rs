//! Symplectic forms and the compatible pre-Malcev products they induce.

use malcev_super::algebra::{check_pre_malcev, Superalgebra};
use malcev_super::fixtures::pre_malcev_1_1;
use malcev_super::graded::SuperSpace;
use malcev_super::operators::{check_symplectic, is_compatible, pre_malcev_from_symplectic, BilinearForm};
use malcev_super::q;
use malcev_super::yangbaxter::{canonical_r, symplectic_from_r};

fn main() -> malcev_super::Result<()> {
    // [x, y] = y with ω(x, y) = 1
    let a = Superalgebra::with_product(SuperSpace::new(2, 0), vec![(0, 1, 1, q(1)), (1, 0, 1, q(-1))])?;
    let w = BilinearForm::new(a.space().clone(), vec![vec![q(0), q(1)], vec![q(-1), q(0)]])?;
    println!("{}", check_symplectic(&w, &a)?);
    let p = pre_malcev_from_symplectic(&w, &a)?;
    println!("x·y products {:?}", p.product()?.entries());
    println!("{}, compatible: {}", check_pre_malcev(&p)?, is_compatible(&p, &a)?);

    // an invertible solution gives a symplectic form on its algebra
    let c = canonical_r(&pre_malcev_1_1())?;
    let w = symplectic_from_r(&c)?;
    println!("from canonical r: ω = {:?}", w.matrix());
    println!("{}", check_symplectic(&w, c.algebra())?);
    Ok(())
}
