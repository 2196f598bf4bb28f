//! Closed forms in dihedral groups and the `C'_s C'_x` bookkeeping via hom ranks.

use soergel::chars::{dihedral_checks, omnibus_check, selfdual_expansion};
use soergel::coxeter::{CoxeterMatrix, CoxeterSystem, Side};
use soergel::hecke::Hecke;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in [Some(3), Some(5), None] {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m)?)?;
        let hecke = Hecke::new(sys.clone());
        let report = dihedral_checks(&hecke, 7)?;
        println!(
            "I2({}): closed form {}, products {} ({} cases), recursion {}",
            m.map_or("inf".to_string(), |m| m.to_string()),
            report.closed_form,
            report.product_identity,
            report.product_cases,
            report.gamma_recursion
        );
    }

    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Some(6))?)?;
    let hecke = Hecke::new(sys.clone());
    let x = sys.parse_element("s t s t")?;
    let exp = selfdual_expansion(&hecke, x)?;
    for (y, h) in &exp.terms {
        println!("BS(s t s t) contains B_[{}] with multiplicity {h}", sys.word_string(*y));
    }

    let x = sys.parse_element("t s t")?;
    assert!(!sys.descends(x, 0, Side::Left));
    let (ok, rows) = omnibus_check(&hecke, 0, x)?;
    println!("C'_s C'_[t s t] bookkeeping holds: {ok}");
    for r in rows {
        println!("  [{}]: m = {}, hom into = {}, hom out = {}", r.y, r.m_y, r.hom_into, r.hom_out);
    }
    Ok(())
}
