//! Rota–Baxter operators on sl(2) from MYBE solutions and the trace form.

use malcev_super::fixtures::sl2;
use malcev_super::operators::{check_rota_baxter, classify_form, BilinearForm, RbVariant};
use malcev_super::q;
use malcev_super::search::grid_mybe_solutions;
use malcev_super::yangbaxter::{rb_from_invariant_form, MybeCandidate};

fn main() -> malcev_super::Result<()> {
    let a = sl2();
    let rows = [[2, 0, 0], [0, 0, 1], [0, 1, 0]];
    let b = BilinearForm::new(a.space().clone(), rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())?;
    println!("{:?}", classify_form(&b, &a)?);
    let sols = grid_mybe_solutions(&a, 1)?;
    println!("{} skew solutions with coordinates in {{-1, 0, 1}}", sols.len());
    for s in sols.into_iter().filter(|s| !s.is_zero()).take(4) {
        let rb = rb_from_invariant_form(&MybeCandidate::new(a.clone(), s)?, &b)?;
        println!("R = {:?}", rb.matrix());
        println!("  {}", check_rota_baxter(&rb, &a, RbVariant::Unsigned)?);
    }
    Ok(())
}
