//! Equivalence classes of fuzzy subgroups as chains in the subgroup lattice.
//!
//! A class is determined by its strictly increasing chain of positive level
//! subgroups; the top of the chain is the support. Elements outside the
//! support carry membership 0, so a proper-support class implicitly has the
//! whole group as its 0-level. Counting uses the recurrence
//! `c(H) = 1 + sum of c(K) over K strictly below H`, which runs bottom-up
//! over the lattice; enumeration is a DFS that materializes every chain.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::oracle::FuzzySubgroup;

/// One equivalence class: a nonempty chain of subgroup ids, strictly
/// increasing under inclusion. The last entry is the support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzyClass {
    pub chain: Vec<usize>,
    pub support_id: usize,
    pub full_support: bool,
}

impl FuzzyClass {
    pub fn new(lat: &SubgroupLattice, chain: Vec<usize>) -> FuzzyClass {
        assert!(!chain.is_empty());
        debug_assert!(chain
            .windows(2)
            .all(|w| w[0] != w[1] && lat.leq(w[0], w[1])));
        let support_id = *chain.last().unwrap();
        FuzzyClass {
            chain,
            support_id,
            full_support: support_id == lat.top_id(),
        }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false // chains are nonempty by construction
    }
}

/// Chain counts per support subgroup.
#[derive(Debug, Clone, Serialize)]
pub struct ClassCensus {
    /// `per_top[id]` = number of chains whose top is subgroup `id`; this is
    /// the count of classes with support exactly that subgroup.
    pub per_top: Vec<u64>,
    pub total: u64,
    pub longest_chain: usize,
}

impl ClassCensus {
    /// Number of classes whose support is exactly subgroup `h`.
    pub fn s_star(&self, h: usize) -> u64 {
        self.per_top[h]
    }
}

/// Count all nonempty chains without materializing them.
pub fn count_classes(lat: &SubgroupLattice) -> ClassCensus {
    let n = lat.len();
    let mut per_top = vec![0u64; n];
    let mut longest = vec![0usize; n];
    for h in 0..n {
        let mut c = 1u64;
        let mut l = 1usize;
        for k in 0..h {
            if lat.leq(k, h) {
                c = c.saturating_add(per_top[k]);
                l = l.max(longest[k] + 1);
            }
        }
        per_top[h] = c;
        longest[h] = l;
    }
    let total = per_top.iter().fold(0u64, |a, &b| a.saturating_add(b));
    ClassCensus {
        per_top,
        total,
        longest_chain: longest.into_iter().max().unwrap_or(0),
    }
}

/// Materialize every class, in lexicographic order of the id sequence.
pub fn enumerate_classes(lat: &SubgroupLattice, class_cap: u64) -> Result<Vec<FuzzyClass>> {
    let census = count_classes(lat);
    if census.total > class_cap {
        return Err(Error::Capacity {
            what: format!("chain count for {}", lat.group().label()),
            needed: census.total,
            cap: class_cap,
        });
    }
    let mut out = Vec::with_capacity(census.total as usize);
    let mut stack = Vec::new();
    for start in 0..lat.len() {
        stack.push(start);
        extend_chain(lat, &mut stack, &mut out);
        stack.pop();
    }
    debug_assert_eq!(out.len() as u64, census.total);
    Ok(out)
}

fn extend_chain(lat: &SubgroupLattice, stack: &mut Vec<usize>, out: &mut Vec<FuzzyClass>) {
    out.push(FuzzyClass::new(lat, stack.clone()));
    let last = *stack.last().unwrap();
    // Strict inclusion forces a strictly larger id (ids sort by size).
    for next in last + 1..lat.len() {
        if lat.leq(last, next) {
            stack.push(next);
            extend_chain(lat, stack, out);
            stack.pop();
        }
    }
}

/// Map a concrete fuzzy subgroup to its class: the level subgroups of its
/// distinct positive values, largest value first.
pub fn classify(lat: &SubgroupLattice, mu: &FuzzySubgroup) -> Result<FuzzyClass> {
    let g = lat.group();
    mu.check_compatible(g)?;
    let mut chain = Vec::new();
    for t in mu.positive_image_desc() {
        let mask = mu.level_mask(g, t);
        let id = lat.id_of_mask(mask).ok_or_else(|| {
            Error::Internal(format!(
                "level set at {t} is not a lattice subgroup (mask {mask:#x})"
            ))
        })?;
        chain.push(id);
    }
    Ok(FuzzyClass::new(lat, chain))
}

/// JSON-facing view of the census.
#[derive(Debug, Clone, Serialize)]
pub struct CensusExport {
    pub group: String,
    pub s: u64,
    pub longest_chain: usize,
    pub per_top: Vec<PerTopEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerTopEntry {
    pub id: usize,
    pub name: String,
    pub size: u32,
    pub s_star: u64,
}

pub fn export_census(lat: &SubgroupLattice, census: &ClassCensus) -> CensusExport {
    CensusExport {
        group: lat.group().label().to_string(),
        s: census.total,
        longest_chain: census.longest_chain,
        per_top: lat
            .subgroups()
            .iter()
            .map(|s| PerTopEntry {
                id: s.id,
                name: lat.subgroup_name(s.id),
                size: s.size,
                s_star: census.per_top[s.id],
            })
            .collect(),
    }
}

/// JSON-facing view of a class list: chains as id arrays plus member names.
#[derive(Debug, Clone, Serialize)]
pub struct ClassExport {
    pub chain: Vec<usize>,
    pub members: Vec<Vec<String>>,
    pub full_support: bool,
}

pub fn export_classes(lat: &SubgroupLattice, classes: &[FuzzyClass]) -> Vec<ClassExport> {
    classes
        .iter()
        .map(|c| ClassExport {
            chain: c.chain.clone(),
            members: c
                .chain
                .iter()
                .map(|&id| {
                    crate::lattice::mask_elems(lat.subgroups()[id].members, lat.group().order())
                        .map(|i| lat.group().elem_name(i).to_string())
                        .collect()
                })
                .collect(),
            full_support: c.full_support,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupSpec, DEFAULT_MAX_ORDER};
    use crate::oracle::{rat, FuzzySubgroup};

    fn lat(spec: &str) -> SubgroupLattice {
        let g = GroupSpec::parse(spec).unwrap().build(DEFAULT_MAX_ORDER).unwrap();
        SubgroupLattice::new(g)
    }

    #[test]
    fn counting_matches_known_values() {
        for (spec, expected) in [
            ("cyclic:1", 1),
            ("cyclic:2", 3),
            ("cyclic:4", 7),
            ("cyclic:8", 15),
            ("cyclic:16", 31),
            ("cyclic:3", 3),
            ("cyclic:9", 7),
            ("cyclic:5", 3),
            ("klein", 15),
            ("dihedral:4", 15),
            ("dihedral:8", 63),
            ("symmetric:3", 19),
            ("dihedral:6", 19),
            ("product:cyclic:2,cyclic:4", 47),
        ] {
            assert_eq!(count_classes(&lat(spec)).total, expected, "{spec}");
        }
        for p in [3u64, 5, 7, 11] {
            let census = count_classes(&lat(&format!("dihedral:{}", 2 * p)));
            assert_eq!(census.total, 4 * p + 7);
        }
    }

    #[test]
    fn class_export_shapes() {
        let l = lat("symmetric:3");
        let classes = enumerate_classes(&l, 1_000).unwrap();
        let exported = export_classes(&l, &classes);
        assert_eq!(exported.len(), 19);
        for (c, e) in classes.iter().zip(&exported) {
            assert_eq!(c.chain, e.chain);
            assert_eq!(c.full_support, e.full_support);
            // Member lists line up with the subgroup sizes along the chain.
            for (&id, members) in c.chain.iter().zip(&e.members) {
                assert_eq!(members.len() as u32, l.subgroups()[id].size);
            }
        }
        assert_eq!(exported[0].members[0], vec!["e".to_string()]);
        let json = serde_json::to_string(&exported).unwrap();
        assert!(json.contains("\"full_support\":true"));

        let census_json =
            serde_json::to_string(&export_census(&l, &count_classes(&l))).unwrap();
        assert!(census_json.contains("\"s\":19"));
    }

    #[test]
    fn census_identities() {
        for spec in ["cyclic:12", "klein", "symmetric:3", "dihedral:8", "dihedral:10"] {
            let l = lat(spec);
            let census = count_classes(&l);
            assert_eq!(census.total % 2, 1, "{spec}: total must be odd");
            assert_eq!(census.per_top[l.top_id()], census.total.div_ceil(2));
            assert_eq!(census.per_top[l.trivial_id()], 1);
            let proper: u64 = (0..l.len() - 1).map(|i| census.per_top[i]).sum();
            assert_eq!(proper, (census.total - 1) / 2);
        }
    }

    #[test]
    fn enumeration_agrees_with_count() {
        for spec in ["cyclic:1", "cyclic:12", "klein", "symmetric:3", "dihedral:8"] {
            let l = lat(spec);
            let classes = enumerate_classes(&l, 10_000_000).unwrap();
            let census = count_classes(&l);
            assert_eq!(classes.len() as u64, census.total, "{spec}");
            // Chains are unique and lexicographically ordered.
            for w in classes.windows(2) {
                assert!(w[0].chain < w[1].chain);
            }
            let longest = classes.iter().map(|c| c.len()).max().unwrap();
            assert_eq!(longest, census.longest_chain);
            for c in &classes {
                assert_eq!(c.full_support, c.support_id == l.top_id());
                assert_eq!(c.support_id, *c.chain.last().unwrap());
            }
        }
    }

    #[test]
    fn trivial_group_single_class() {
        let l = lat("cyclic:1");
        let classes = enumerate_classes(&l, 10).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].chain, vec![0]);
        assert!(classes[0].full_support);
    }

    #[test]
    fn capacity_cap_enforced() {
        let l = lat("dihedral:8");
        assert!(matches!(
            enumerate_classes(&l, 10),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn s_star_values() {
        let l = lat("symmetric:3");
        let census = count_classes(&l);
        assert_eq!(census.s_star(l.trivial_id()), 1);
        let rot = l.subgroups().iter().find(|s| s.size == 3).unwrap().id;
        assert_eq!(census.s_star(rot), 2);
        let l8 = lat("dihedral:8");
        let census8 = count_classes(&l8);
        assert_eq!(census8.s_star(l8.top_id()), 32);
    }

    #[test]
    fn s_star_matches_standalone_subgroup_count() {
        for spec in ["symmetric:3", "dihedral:8", "cyclic:12", "product:cyclic:2,cyclic:4"] {
            let l = lat(spec);
            let census = count_classes(&l);
            for sub in l.subgroups() {
                let members: Vec<usize> =
                    crate::lattice::mask_elems(sub.members, l.group().order()).collect();
                let h = l
                    .group()
                    .subgroup_as_group(&members, format!("H{}", sub.id))
                    .unwrap();
                let h_census = count_classes(&SubgroupLattice::new(h));
                assert_eq!(
                    census.s_star(sub.id),
                    h_census.total.div_ceil(2),
                    "{spec} subgroup {}",
                    sub.id
                );
            }
        }
    }

    #[test]
    fn classify_examples() {
        let l = lat("symmetric:3");
        let g = l.group();
        let one = rat(1, 1);

        // Constant-1 map: single-element chain at the top.
        let mu = FuzzySubgroup::new(g, vec![one; 6]).unwrap();
        let c = classify(&l, &mu).unwrap();
        assert_eq!(c.chain, vec![l.top_id()]);
        assert!(c.full_support);

        // Indicator of a subgroup H: the one-element chain [H].
        let rot = l.subgroups().iter().find(|s| s.size == 3).unwrap();
        let values: Vec<_> = (0..6)
            .map(|i| {
                if rot.members & crate::lattice::bit(i) != 0 {
                    one
                } else {
                    rat(0, 1)
                }
            })
            .collect();
        let mu = FuzzySubgroup::new(g, values).unwrap();
        let c = classify(&l, &mu).unwrap();
        assert_eq!(c.chain, vec![rot.id]);
        assert!(!c.full_support);

        // Three positive levels: {e} < <a> < G. Elements 1,2 are the
        // 3-cycles in lexicographic order of S3's permutations.
        let rot_members: Vec<usize> =
            crate::lattice::mask_elems(rot.members, 6).collect();
        let values: Vec<_> = (0..6)
            .map(|i| {
                if i == 0 {
                    one
                } else if rot_members.contains(&i) {
                    rat(1, 2)
                } else {
                    rat(1, 4)
                }
            })
            .collect();
        let mu = FuzzySubgroup::new(g, values).unwrap();
        let c = classify(&l, &mu).unwrap();
        assert_eq!(c.chain, vec![l.trivial_id(), rot.id, l.top_id()]);
    }
}
