//! Quotient fingerprints: which catalog groups a presented group maps onto.
//!
//! The fingerprint records existence only, matching the set-of-quotients
//! point of view; raw epimorphism counts stay available separately for
//! diagnostics. For abelian catalog members the existence question factors
//! through the abelianization, where it is a divisibility condition on
//! invariant factors; everything else runs the backtracking search.

use super::catalog::{Catalog, CatalogId};
use super::epi::exists_epimorphism;
use super::Presentation;
use crate::zlinalg::HomologySummary;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// The subset of a catalog admitting an epimorphism from a fixed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFingerprint {
    pub catalog_ids: Vec<CatalogId>,
    pub catalog_version: String,
}

/// Fingerprints from different catalogs cannot be compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogMismatch {
    pub left: String,
    pub right: String,
}

impl fmt::Display for CatalogMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "catalog versions differ: '{}' vs '{}'",
            self.left, self.right
        )
    }
}

impl std::error::Error for CatalogMismatch {}

/// Which side of a comparison a diff entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffSide {
    OnlyFirst,
    OnlySecond,
}

impl fmt::Display for DiffSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffSide::OnlyFirst => write!(f, "first"),
            DiffSide::OnlySecond => write!(f, "second"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffEntry {
    pub id: CatalogId,
    pub order: u64,
    pub side: DiffSide,
}

/// Symmetric difference of two fingerprints, ordered by group order then
/// catalog id. Empty means "not distinguished by this catalog" — never
/// that the profinite completions agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FingerprintDiff {
    pub entries: Vec<DiffEntry>,
    pub catalog_version: String,
}

impl FingerprintDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Order of the smallest group in the diff.
    pub fn min_order(&self) -> Option<u64> {
        self.entries.first().map(|e| e.order)
    }
}

/// Computes the fingerprint of `p` over the catalog.
pub fn quotient_fingerprint(p: &Presentation, catalog: &Catalog) -> QuotientFingerprint {
    let abelianization = p.abelianization();
    let mut ids = Vec::new();
    for entry in &catalog.entries {
        let hit = match &entry.abelian_invariants {
            Some(invariants) => abelian_epi_exists(&abelianization, invariants),
            None => exists_epimorphism(p, &entry.table),
        };
        if hit {
            ids.push(entry.id);
        }
    }
    QuotientFingerprint {
        catalog_ids: ids,
        catalog_version: catalog.version.clone(),
    }
}

/// Whether Z^b1 ⊕ ∏ Z/f_i surjects onto the abelian group with the given
/// invariant factors, which must be listed in divisibility order
/// a_1 | a_2 | ... | a_r. Aligning largest against largest, each target
/// factor must divide its counterpart, with the free summands counting as
/// divisible by everything.
pub fn abelian_epi_exists(h: &HomologySummary, target_invariants: &[u64]) -> bool {
    let r = target_invariants.len();
    let s = h.torsion.len();
    if r > h.b1 + s {
        return false;
    }
    for i in 0..r {
        let source_pos = h.b1 + s - r + i;
        if source_pos >= s {
            continue; // aligned against a free summand
        }
        let a = BigInt::from(target_invariants[i]);
        if !(&h.torsion[source_pos] % &a).is_zero() {
            return false;
        }
    }
    true
}

/// Symmetric difference of two fingerprints over the same catalog. The
/// catalog supplies the orders for the report.
pub fn compare_fingerprints(
    f1: &QuotientFingerprint,
    f2: &QuotientFingerprint,
    catalog: &Catalog,
) -> Result<FingerprintDiff, CatalogMismatch> {
    if f1.catalog_version != f2.catalog_version || f1.catalog_version != catalog.version {
        return Err(CatalogMismatch {
            left: f1.catalog_version.clone(),
            right: if f2.catalog_version != f1.catalog_version {
                f2.catalog_version.clone()
            } else {
                catalog.version.clone()
            },
        });
    }
    let mut entries = Vec::new();
    for entry in &catalog.entries {
        let in1 = f1.catalog_ids.contains(&entry.id);
        let in2 = f2.catalog_ids.contains(&entry.id);
        match (in1, in2) {
            (true, false) => entries.push(DiffEntry {
                id: entry.id,
                order: entry.order(),
                side: DiffSide::OnlyFirst,
            }),
            (false, true) => entries.push(DiffEntry {
                id: entry.id,
                order: entry.order(),
                side: DiffSide::OnlySecond,
            }),
            _ => {}
        }
    }
    entries.sort_by_key(|e| (e.order, e.id));
    Ok(FingerprintDiff {
        entries,
        catalog_version: catalog.version.clone(),
    })
}
