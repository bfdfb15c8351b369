//! The catalog of finite target groups used for quotient fingerprints.
//!
//! Families: cyclic n, dihedral of order 2n, symmetric and alternating on
//! up to 6 points, and PSL(2, p) for small primes p, all realized by
//! standard permutation generators and verified against the closed-form
//! order of the family.
//!
//! The default catalog takes every family member up to a ceiling order and
//! curates it to be pairwise non-isomorphic, so that the catalog id
//! (family, parameter) doubles as the isomorphism-class label: dihedral:6
//! (≅ symmetric:3) and psl2:{2,3,5} (≅ symmetric:3, alternating:4,
//! alternating:5) are excluded, as is alternating:3 (≅ cyclic:3). It is an
//! under-approximation of all finite groups of bounded order, not a small
//! groups library.

use super::table::{FiniteGroupTable, Perm};
use std::fmt;

/// Ceiling order of the default catalog; override per call or with the
/// `PF_CATALOG_MAX` environment variable in the CLI.
pub const DEFAULT_MAX_ORDER: u64 = 60;

/// Hard cap on a single table so a typo cannot ask for a gigabyte.
const MAX_TABLE_ORDER: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupFamily {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Psl2,
}

impl GroupFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GroupFamily::Cyclic => "cyclic",
            GroupFamily::Dihedral => "dihedral",
            GroupFamily::Symmetric => "symmetric",
            GroupFamily::Alternating => "alternating",
            GroupFamily::Psl2 => "psl2",
        }
    }

    pub fn from_name(name: &str) -> Option<GroupFamily> {
        match name {
            "cyclic" => Some(GroupFamily::Cyclic),
            "dihedral" => Some(GroupFamily::Dihedral),
            "symmetric" => Some(GroupFamily::Symmetric),
            "alternating" => Some(GroupFamily::Alternating),
            "psl2" => Some(GroupFamily::Psl2),
            _ => None,
        }
    }
}

/// Catalog identity, printed as `family:parameter` (e.g. `dihedral:10`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogId {
    pub family: GroupFamily,
    pub parameter: u32,
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.name(), self.parameter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogError {
    pub family: GroupFamily,
    pub parameter: u32,
    pub reason: String,
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unsupported parameter {} for family {}: {}",
            self.parameter,
            self.family.name(),
            self.reason
        )
    }
}

impl std::error::Error for CatalogError {}

fn unsupported(family: GroupFamily, parameter: u32, reason: &str) -> CatalogError {
    CatalogError {
        family,
        parameter,
        reason: reason.to_string(),
    }
}

/// Closed-form order of a family member.
fn expected_order(family: GroupFamily, parameter: u32) -> u64 {
    match family {
        GroupFamily::Cyclic => parameter as u64,
        GroupFamily::Dihedral => parameter as u64,
        GroupFamily::Symmetric => (1..=parameter as u64).product(),
        GroupFamily::Alternating => {
            let fact: u64 = (1..=parameter as u64).product();
            if parameter <= 2 {
                1
            } else {
                fact / 2
            }
        }
        GroupFamily::Psl2 => {
            let p = parameter as u64;
            if p == 2 {
                6
            } else {
                p * (p * p - 1) / 2
            }
        }
    }
}

/// Builds the multiplication table of a family member from its standard
/// permutation generators; the resulting order is checked against the
/// closed form.
pub fn build_catalog_group(
    family: GroupFamily,
    parameter: u32,
) -> Result<FiniteGroupTable, CatalogError> {
    let generators = match family {
        GroupFamily::Cyclic => {
            let n = parameter;
            if n < 1 {
                return Err(unsupported(family, n, "need n >= 1"));
            }
            if n as u64 > MAX_TABLE_ORDER {
                return Err(unsupported(family, n, "table too large"));
            }
            let cycle: Vec<u8> = (0..n as u8).collect();
            vec![Perm::from_cycles(n.max(1) as usize, &[&cycle])]
        }
        GroupFamily::Dihedral => {
            let order = parameter;
            if order < 4 || order % 2 != 0 {
                return Err(unsupported(family, order, "order must be even and >= 4"));
            }
            if order as u64 > MAX_TABLE_ORDER {
                return Err(unsupported(family, order, "table too large"));
            }
            let n = order / 2;
            if n == 2 {
                // the order-4 dihedral group is the Klein four group; the
                // square has no faithful 2-point realization
                vec![
                    Perm::from_cycles(4, &[&[0, 1]]),
                    Perm::from_cycles(4, &[&[2, 3]]),
                ]
            } else {
                let rotation: Vec<u8> = (0..n as u8).collect();
                let reflection: Vec<u8> = (0..n as u8).map(|i| ((n as u8) - i) % n as u8).collect();
                vec![
                    Perm::from_cycles(n as usize, &[&rotation]),
                    Perm::new(reflection),
                ]
            }
        }
        GroupFamily::Symmetric => {
            let k = parameter;
            if !(1..=6).contains(&k) {
                return Err(unsupported(family, k, "need 1 <= k <= 6"));
            }
            let degree = k.max(1) as usize;
            if k == 1 {
                vec![Perm::identity(1)]
            } else {
                let cycle: Vec<u8> = (0..k as u8).collect();
                vec![
                    Perm::from_cycles(degree, &[&[0, 1]]),
                    Perm::from_cycles(degree, &[&cycle]),
                ]
            }
        }
        GroupFamily::Alternating => {
            let k = parameter;
            if !(1..=6).contains(&k) {
                return Err(unsupported(family, k, "need 1 <= k <= 6"));
            }
            let degree = k.max(1) as usize;
            if k <= 2 {
                vec![Perm::identity(degree)]
            } else if k == 3 {
                vec![Perm::from_cycles(3, &[&[0, 1, 2]])]
            } else {
                let long: Vec<u8> = if k % 2 == 1 {
                    (0..k as u8).collect()
                } else {
                    (1..k as u8).collect()
                };
                vec![
                    Perm::from_cycles(degree, &[&[0, 1, 2]]),
                    Perm::from_cycles(degree, &[&long]),
                ]
            }
        }
        GroupFamily::Psl2 => {
            let p = parameter;
            if ![2, 3, 5, 7, 11, 13].contains(&p) {
                return Err(unsupported(
                    family,
                    p,
                    "p must be one of 2, 3, 5, 7, 11, 13",
                ));
            }
            // action on the projective line {0, .., p-1, infinity = p}
            let infinity = p as u8;
            let translate: Vec<u8> = (0..=p as u8)
                .map(|i| {
                    if i == infinity {
                        infinity
                    } else {
                        (i + 1) % p as u8
                    }
                })
                .collect();
            let invert: Vec<u8> = (0..=p as u8)
                .map(|i| {
                    if i == infinity {
                        0
                    } else if i == 0 {
                        infinity
                    } else {
                        // -1/z mod p
                        let inv = mod_inverse(i as u64, p as u64);
                        ((p as u64 - inv) % p as u64) as u8
                    }
                })
                .collect();
            vec![Perm::new(translate), Perm::new(invert)]
        }
    };
    let table = FiniteGroupTable::from_generators(generators);
    let expected = expected_order(family, parameter);
    assert_eq!(
        table.order() as u64,
        expected,
        "{}:{} closed-form order mismatch",
        family.name(),
        parameter
    );
    Ok(table)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a not divisible by p
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// One catalog member: its id, table, and, when the group is abelian, its
/// invariant factors (which let existence queries go through the
/// abelianization instead of a search).
pub struct CatalogEntry {
    pub id: CatalogId,
    pub table: FiniteGroupTable,
    pub abelian_invariants: Option<Vec<u64>>,
}

impl CatalogEntry {
    pub fn order(&self) -> u64 {
        self.table.order() as u64
    }
}

/// A curated, pairwise non-isomorphic list of finite groups up to a
/// ceiling order, with a version string that pins its composition.
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub version: String,
}

pub fn catalog_version(max_order: u64) -> String {
    format!("families-v1;max-order={}", max_order)
}

/// Builds the default catalog: cyclic 2..=N, dihedral 4..=N (except 6),
/// symmetric 3..=6, alternating 4..=6, psl2 {7, 11, 13}, each kept only
/// when its order is at most `max_order`.
pub fn default_catalog(max_order: u64) -> Catalog {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut push = |family: GroupFamily, parameter: u32, abelian: Option<Vec<u64>>| {
        if expected_order(family, parameter) > max_order {
            return;
        }
        let table = build_catalog_group(family, parameter).expect("curated parameter");
        entries.push(CatalogEntry {
            id: CatalogId { family, parameter },
            table,
            abelian_invariants: abelian,
        });
    };
    for n in 2..=max_order.min(MAX_TABLE_ORDER) as u32 {
        push(GroupFamily::Cyclic, n, Some(vec![n as u64]));
    }
    for order in (4..=max_order.min(MAX_TABLE_ORDER) as u32).step_by(2) {
        if order == 6 {
            continue; // isomorphic to symmetric:3
        }
        let abelian = if order == 4 { Some(vec![2, 2]) } else { None };
        push(GroupFamily::Dihedral, order, abelian);
    }
    for k in 3..=6 {
        push(GroupFamily::Symmetric, k, None);
    }
    for k in 4..=6 {
        push(GroupFamily::Alternating, k, None);
    }
    for p in [7, 11, 13] {
        push(GroupFamily::Psl2, p, None);
    }
    entries.sort_by(|a, b| {
        (a.order(), a.id.family, a.id.parameter).cmp(&(b.order(), b.id.family, b.id.parameter))
    });
    Catalog {
        entries,
        version: catalog_version(max_order),
    }
}
