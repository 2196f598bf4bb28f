//! Persisting computed Kazhdan-Lusztig basis elements in a JSON-lines file.

use soergel::cli::cache::{cache_key, KlCache};
use soergel::coxeter::{CoxeterMatrix, CoxeterSystem};
use soergel::hecke::Hecke;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join(format!("soergel-example-{}.jsonl", std::process::id()));
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Some(7))?)?;
    let x = sys.parse_element("s t s t s")?;
    println!("key: {}", cache_key(sys.matrix(), &sys.word_string(x)));

    let hecke = Hecke::new(sys.clone());
    let mut cache = KlCache::open(&path);
    cache.store(&hecke, x)?;

    let fresh = Hecke::new(sys.clone());
    let reopened = KlCache::open(&path);
    println!("loaded from {}: {}", path.display(), reopened.load_into(&fresh, x));
    println!("identical: {}", *fresh.kl_basis(x) == *hecke.kl_basis(x));
    std::fs::remove_file(&path)?;
    Ok(())
}
