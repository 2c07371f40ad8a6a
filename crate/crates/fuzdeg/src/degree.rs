//! Permutability of class pairs and the commutativity degree sd(G).
//!
//! Two classes are permutable when every cross pair of their chain members
//! permutes in the lattice. The 0-level (the whole group, implicitly present
//! when the support is proper) is omitted there: G permutes with everything,
//! so it can never flip the answer. Mutual permutability is different — the
//! whole group is mutually permutable with K only when K is quasinormal —
//! so the implicit 0-level must participate in that check.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::FuzzyClass;
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;

/// A nonnegative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Fraction {
        assert!(den != 0);
        let g = num.gcd(&den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Decimal rendering to six places; informational only.
    pub fn decimal(&self) -> String {
        format!("{:.6}", self.num as f64 / self.den as f64)
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Every cross pair of chain members permutes.
pub fn class_permutes(lat: &SubgroupLattice, c1: &FuzzyClass, c2: &FuzzyClass) -> bool {
    c1.chain
        .iter()
        .all(|&h| c2.chain.iter().all(|&k| lat.permutes(h, k)))
}

/// Every cross pair of level subgroups is mutually permutable, counting the
/// implicit 0-level (the whole group) of a proper-support class.
pub fn class_mutually_permutes(lat: &SubgroupLattice, c1: &FuzzyClass, c2: &FuzzyClass) -> bool {
    let eff = |c: &FuzzyClass| {
        let mut ids = c.chain.clone();
        if !c.full_support {
            ids.push(lat.top_id());
        }
        ids
    };
    let e1 = eff(c1);
    let e2 = eff(c2);
    e1.iter()
        .all(|&h| e2.iter().all(|&k| lat.mutually_permutable(h, k)))
}

/// Size of `C(mu)`: how many classes permute with `c`.
pub fn commuting_set_size(lat: &SubgroupLattice, classes: &[FuzzyClass], c: &FuzzyClass) -> u64 {
    classes
        .iter()
        .filter(|other| class_permutes(lat, c, other))
        .count() as u64
}

/// Counts of classes whose chain members are all normal / all quasinormal.
pub fn normal_and_quasinormal_counts(
    lat: &SubgroupLattice,
    classes: &[FuzzyClass],
) -> (u64, u64) {
    let mut n_count = 0u64;
    let mut qn_count = 0u64;
    for c in classes {
        if c.chain.iter().all(|&h| lat.is_quasinormal(h)) {
            qn_count += 1;
            if c.chain.iter().all(|&h| lat.is_normal(h)) {
                n_count += 1;
            }
        } else if c.chain.iter().all(|&h| lat.is_normal(h)) {
            n_count += 1; // unreachable: normal implies quasinormal
        }
    }
    (n_count, qn_count)
}

/// Full degree computation over all ordered class pairs.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub group: String,
    /// s(G): number of classes.
    pub s: u64,
    pub permutable_pairs: u64,
    pub sd: Fraction,
    pub n_count: u64,
    pub qn_count: u64,
    /// |C(mu)| per class, indexed as in the enumerated class list.
    pub per_class_commuting: Vec<u64>,
}

pub fn compute_sd(
    lat: &SubgroupLattice,
    classes: &[FuzzyClass],
    pair_cap: u64,
) -> Result<DegreeReport> {
    let s = classes.len() as u64;
    let pairs = s.checked_mul(s).ok_or(Error::Capacity {
        what: "ordered class pairs".into(),
        needed: u64::MAX,
        cap: pair_cap,
    })?;
    if pairs > pair_cap {
        return Err(Error::Capacity {
            what: "ordered class pairs".into(),
            needed: pairs,
            cap: pair_cap,
        });
    }
    let per_class_commuting: Vec<u64> = classes
        .par_iter()
        .map(|c| commuting_set_size(lat, classes, c))
        .collect();
    let permutable_pairs: u64 = per_class_commuting.iter().sum();
    let (n_count, qn_count) = normal_and_quasinormal_counts(lat, classes);
    Ok(DegreeReport {
        group: lat.group().label().to_string(),
        s,
        permutable_pairs,
        sd: Fraction::new(permutable_pairs, pairs),
        n_count,
        qn_count,
        per_class_commuting,
    })
}
