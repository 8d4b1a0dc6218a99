//! Representations of a Malcev superalgebra, their duals and semidirect products.

use malcev_super::algebra::check_malcev;
use malcev_super::fixtures::{malcev_1_1_module, random_action};
use malcev_super::graded::SuperSpace;
use malcev_super::modules::{check_malcev_representation, dual_representation, semidirect_malcev};

fn main() -> malcev_super::Result<()> {
    let rho = malcev_1_1_module();
    let dual = dual_representation(&rho);
    for (name, r) in [("rho", &rho), ("rho*", &dual)] {
        println!("{name}: {}", check_malcev_representation(r)?);
        println!("  semidirect product {}", check_malcev(&semidirect_malcev(r)?)?);
    }
    // a random action is almost never a representation, and the semidirect product notices
    let bad = random_action(rho.algebra(), &SuperSpace::new(1, 1), 11, 2);
    println!("random action: {}", check_malcev_representation(&bad)?);
    println!("  semidirect product {}", check_malcev(&semidirect_malcev(&bad)?)?);
    Ok(())
}
