//! Commutators of alternative superalgebras are Malcev superalgebras.

use malcev_super::algebra::{check_alternative, check_malcev, commutator_superalgebra};
use malcev_super::fixtures::{cayley_dickson, grassmann_envelope, split_octonions};
use malcev_super::MUL;

fn main() -> malcev_super::Result<()> {
    let cases = [
        ("split octonions", split_octonions()),
        ("quaternion envelope", grassmann_envelope(&cayley_dickson(&[-1, -1]))),
    ];
    for (name, a) in cases {
        let alt = check_alternative(&a)?;
        let c = commutator_superalgebra(&a, MUL)?;
        let mal = check_malcev(&c)?;
        println!("{name} ({}|{}):", a.space().even_dim(), a.space().odd_dim());
        println!("  {alt}");
        println!("  commutator {mal}");
    }
    Ok(())
}
