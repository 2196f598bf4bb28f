//! Hecke element expressions: `;`-separated terms `coeff * T[word]`,
//! `coeff * C[word]` or `coeff * B[word]`, where `T` is the normalized standard
//! basis, `C` the Kazhdan-Lusztig basis and `B` the product of the
//! `T_s + 1`. The coefficient is a Laurent polynomial in `v`, optionally
//! parenthesized, and may be omitted.

use crate::chars::{bs_character, BSObject};
use crate::hecke::{Hecke, HeckeElt};
use crate::laurent::LaurentPoly;

pub fn parse_hecke_element(hecke: &Hecke, text: &str) -> Result<HeckeElt, String> {
    let mut out = hecke.zero();
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok(out);
    }
    for term in text.split(';') {
        out = &out + &parse_term(hecke, term.trim())?;
    }
    Ok(out)
}

fn parse_term(hecke: &Hecke, term: &str) -> Result<HeckeElt, String> {
    let bad = || format!("malformed term `{term}`");
    let body = term.strip_suffix(']').ok_or_else(bad)?;
    let open = body.rfind('[').ok_or_else(bad)?;
    let word = &body[open + 1..];
    let head = body[..open].trim_end();
    let kind = head.chars().last().ok_or_else(bad)?;
    let coeff = head[..head.len() - kind.len_utf8()].trim();
    let coeff = coeff.strip_suffix('*').unwrap_or(coeff).trim();
    let coeff = coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coeff);
    let c: LaurentPoly = if coeff.is_empty() {
        LaurentPoly::one()
    } else {
        coeff.parse().map_err(|_| format!("malformed coefficient `{coeff}`"))?
    };
    let sys = hecke.system();
    let base = match kind {
        'T' => hecke.t_tilde(sys.parse_element(word).map_err(|e| e.to_string())?),
        'C' => (*hecke.kl_basis(sys.parse_element(word).map_err(|e| e.to_string())?)).clone(),
        'B' => bs_character(hecke, &BSObject::new(sys.parse_word(word).map_err(|e| e.to_string())?, 0)),
        _ => return Err(bad()),
    };
    Ok(base.scale(&c))
}
