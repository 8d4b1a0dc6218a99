//! An O-operator `T: V → A` gives a solution `r = T - σ(T)` of the MYBE in
//! `A ⋉ V*`; a map that is not an O-operator does not.

use malcev_super::fixtures::{random_even_map, sl2_standard, sl2_standard_oop};
use malcev_super::yangbaxter::{check_operator_form, mybe_report, r_from_o_operator};

fn main() -> malcev_super::Result<()> {
    let rep = sl2_standard();
    let other = random_even_map(rep.space(), rep.algebra().space(), 5, 2);
    for (name, t) in [("O-operator", sl2_standard_oop()), ("random map", other)] {
        let c = r_from_o_operator(&t, &rep)?;
        println!("{name}: r has {} terms in dimension {}", c.r().entries().len(), c.algebra().dim());
        println!("  {}", mybe_report(&c));
        println!("  {}", check_operator_form(&c)?);
    }
    Ok(())
}
