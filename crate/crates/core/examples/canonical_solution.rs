//! The canonical MYBE solution attached to a pre-Malcev superalgebra.

use malcev_super::fixtures::{pre_malcev_1_1, pre_malcev_1_1_b};
use malcev_super::yangbaxter::{canonical_r, check_operator_form, mybe_lhs, mybe_lhs_with, MybeConvention};

fn main() -> malcev_super::Result<()> {
    for p in [pre_malcev_1_1(), pre_malcev_1_1_b()] {
        let c = canonical_r(&p)?;
        println!("double of dimension {}|{}", c.algebra().space().even_dim(), c.algebra().space().odd_dim());
        for (i, j, v) in c.r().entries() {
            println!("  {v} {} ⊗ {}", c.algebra().space().label(i), c.algebra().space().label(j));
        }
        println!("  tensor form solved: {}", mybe_lhs(&c).is_zero());
        println!("  {}", check_operator_form(&c)?);
        // the other sign placement does not vanish on odd parts
        println!("  displayed-sign terms left: {}", mybe_lhs_with(&c, MybeConvention::Displayed).len());
    }
    Ok(())
}
