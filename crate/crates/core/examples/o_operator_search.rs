//! Enumerates small integer O-operators for the standard sl(2) module and
//! builds the pre-Malcev product on the module from each.

use malcev_super::algebra::check_pre_malcev;
use malcev_super::fixtures::sl2_standard;
use malcev_super::operators::pre_malcev_from_o_operator;
use malcev_super::search::grid_o_operators;

fn main() -> malcev_super::Result<()> {
    let rep = sl2_standard();
    let ops = grid_o_operators(&rep, 1)?;
    println!("{} O-operators with entries in {{-1, 0, 1}}", ops.len());
    for t in ops.iter().filter(|t| t.rank() == 2).take(3) {
        let p = pre_malcev_from_o_operator(t, &rep)?;
        println!("T = {:?}", t.matrix());
        println!("  product {:?}", p.product()?.entries());
        println!("  {}", check_pre_malcev(&p)?);
    }
    Ok(())
}
