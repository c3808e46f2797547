//! Exact weight multiplicities of simple highest weight modules from
//! supermatrix realizations and Shapovalov forms.

pub mod cache;
pub mod probe;
pub mod realization;
pub mod verma;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub use probe::{boundedness_probe, ProbeReport, ProbeStatus};
pub use realization::{realize, Realization};
pub use verma::{
    shapovalov_rank, shapovalov_rank_with, truncated_character, verma_weight_basis, PbwMonomial,
    PbwOrder, ShapovalovReport,
};

use crate::rootdata::Algebra;
use crate::Result;

/// Realizations are shared between jobs on the same algebra.
pub(crate) fn realization_for(alg: &Algebra) -> Result<Arc<Realization>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Realization>>>> = OnceLock::new();
    let key = format!("{}/{}", alg.spec(), alg.convention());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().expect("realization cache").get(&key) {
        return Ok(r.clone());
    }
    let r = Arc::new(realize(alg)?);
    cache
        .lock()
        .expect("realization cache")
        .insert(key, r.clone());
    Ok(r)
}
