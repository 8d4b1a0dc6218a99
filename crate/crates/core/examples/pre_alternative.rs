//! A Rota–Baxter operator on the split octonions gives a pre-alternative
//! structure, and both paths down to pre-Malcev agree.

use malcev_super::algebra::{check_pre_alternative, check_pre_malcev, pre_malcev_from_pre_alternative};
use malcev_super::fixtures::{regular_bimodule, split_octonion_rb, split_octonions};
use malcev_super::modules::rep_from_bimodule;
use malcev_super::operators::{pre_alternative_from_o_operator, pre_malcev_from_o_operator};

fn main() -> malcev_super::Result<()> {
    let o = split_octonions();
    let b = regular_bimodule(&o);
    let r = split_octonion_rb();
    let pa = pre_alternative_from_o_operator(&r, &b)?;
    println!("{}", check_pre_alternative(&pa)?);
    let down = pre_malcev_from_pre_alternative(&pa)?;
    let across = pre_malcev_from_o_operator(&r, &rep_from_bimodule(&b)?)?;
    println!("{}", check_pre_malcev(&down)?);
    println!("routes agree: {}", down.product()? == across.product()?);
    Ok(())
}
