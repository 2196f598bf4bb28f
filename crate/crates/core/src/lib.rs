//! Exact Hecke algebra and Soergel bimodule calculus for Coxeter systems.

pub mod coxeter;
pub mod exactalg;
pub mod laurent;
pub mod hecke;
pub mod chars;
pub mod bimlab;
pub mod cli;

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
