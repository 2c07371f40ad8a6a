//! Cross-validation suites: every chain-level result is re-derived from the
//! enumerated membership maps by literal quantifier evaluation, and the
//! numbered claims of the source reference are checked one by one.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classes::{classify, count_classes, enumerate_classes, FuzzyClass};
use crate::degree::{class_mutually_permutes, class_permutes, compute_sd, Fraction};
use crate::error::Result;
use crate::lattice::SubgroupLattice;
use crate::oracle::{
    enumerate_fuzzy_subgroups, equivalent, fuzzy_product, is_fuzzy_quasinormal, is_fuzzy_subgroup,
    is_mutually_permuted_by, is_permuted_by, FuzzySubgroup, MembershipGrid, Rat,
};

/// How pair-quantified suites walk the enumeration.
#[derive(Debug, Clone, Copy)]
pub enum CheckMode {
    /// Every ordered pair.
    Exhaustive,
    /// A fixed number of seeded pseudorandom ordered pairs.
    Sampled { pairs: u64, seed: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub description: String,
    pub checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    fn pass(name: &str, description: &str, checked: u64) -> SuiteResult {
        SuiteResult {
            name: name.into(),
            description: description.into(),
            checked,
            passed: true,
            counterexample: None,
        }
    }

    fn fail(name: &str, description: &str, checked: u64, witness: String) -> SuiteResult {
        SuiteResult {
            name: name.into(),
            description: description.into(),
            checked,
            passed: false,
            counterexample: Some(witness),
        }
    }
}

/// An observation where a computed value contradicts a reference claim.
#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyNote {
    pub quantity: String,
    pub paper_value: String,
    pub computed_value: String,
    pub paper_location: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub order: usize,
    pub s: u64,
    pub oracle_maps: u64,
    pub grid_depth: usize,
    pub suites: Vec<SuiteResult>,
    pub notes: Vec<DiscrepancyNote>,
    pub all_passed: bool,
}

/// Run every suite against `lat`. `depth_override` widens the grid; caps are
/// enforced on the membership-map space and the class count.
pub fn run_verification(
    lat: &SubgroupLattice,
    depth_override: Option<usize>,
    class_cap: u64,
    pair_cap: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let g = lat.group();
    let census = count_classes(lat);
    let depth = depth_override.unwrap_or(census.longest_chain);
    let grid = MembershipGrid::harmonic(depth.max(1));
    let enumerated = enumerate_fuzzy_subgroups(g, &grid, census.longest_chain, class_cap)?;
    let classes = enumerate_classes(lat, class_cap)?;
    let chains: Vec<FuzzyClass> = enumerated
        .iter()
        .map(|mu| classify(lat, mu))
        .collect::<Result<_>>()?;

    let mode = if g.order() <= 6 {
        CheckMode::Exhaustive
    } else {
        CheckMode::Sampled { pairs: 10_000, seed }
    };

    let suites = vec![
        suite_equivalence_partition(lat, &enumerated, &chains, &classes),
        suite_support_counts(lat, &chains)?,
        suite_permutability_level_criterion(lat, &enumerated, &chains, mode),
        suite_mutual_level_criterion(lat, &enumerated, &chains, mode),
        suite_product_commutation(g, &enumerated, mode),
        suite_permutable_image_bound(g, &enumerated, mode),
        suite_permutable_product_closure(g, &enumerated, mode),
        suite_quasinormal_dual(lat, &enumerated, &chains)?,
        suite_quasinormal_commutes_with_all(lat, &enumerated)?,
        suite_degree_agreement(lat, &enumerated, &chains, &classes, pair_cap)?,
    ];

    let notes = worked_example_notes(lat);
    let all_passed = suites.iter().all(|s| s.passed);
    Ok(VerificationReport {
        group: g.label().to_string(),
        order: g.order(),
        s: census.total,
        oracle_maps: enumerated.len() as u64,
        grid_depth: grid.depth(),
        suites,
        notes,
        all_passed,
    })
}

fn pair_indices(total: usize, mode: CheckMode) -> Vec<(usize, usize)> {
    match mode {
        CheckMode::Exhaustive => (0..total)
            .flat_map(|i| (0..total).map(move |j| (i, j)))
            .collect(),
        CheckMode::Sampled { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..pairs)
                .map(|_| (rng.gen_range(0..total), rng.gen_range(0..total)))
                .collect()
        }
    }
}

/// Bucketing by the natural equivalence matches the chain census, and the
/// chain map is a bijection between buckets and enumerated chains.
fn suite_equivalence_partition(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
    chains: &[FuzzyClass],
    classes: &[FuzzyClass],
) -> SuiteResult {
    let name = "5.1-equivalence-partition";
    let desc = "bucket count by natural equivalence equals the chain count; \
                same bucket iff same chain";
    let mut checked = 0u64;
    let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, c) in chains.iter().enumerate() {
        buckets.entry(c.chain.clone()).or_default().push(i);
    }
    let census = count_classes(lat);
    if buckets.len() as u64 != census.total {
        return SuiteResult::fail(
            name,
            desc,
            checked,
            format!(
                "oracle produced {} buckets but the census counts {}",
                buckets.len(),
                census.total
            ),
        );
    }
    let chain_set: std::collections::BTreeSet<&Vec<usize>> =
        classes.iter().map(|c| &c.chain).collect();
    for chain in buckets.keys() {
        if !chain_set.contains(chain) {
            return SuiteResult::fail(
                name,
                desc,
                checked,
                format!("oracle bucket chain {chain:?} missing from enumerated chains"),
            );
        }
    }
    // Pairwise: equivalent iff same chain.
    for i in 0..enumerated.len() {
        for j in i + 1..enumerated.len() {
            checked += 1;
            let eq = equivalent(&enumerated[i], &enumerated[j]);
            let same = chains[i].chain == chains[j].chain;
            if eq != same {
                return SuiteResult::fail(
                    name,
                    desc,
                    checked,
                    format!(
                        "maps {} and {}: equivalent={eq} but same chain={same}",
                        enumerated[i].render(),
                        enumerated[j].render()
                    ),
                );
            }
        }
    }
    SuiteResult::pass(name, desc, checked)
}

/// Bucket support counts equal the census per-top counts, the full-support
/// share is (s+1)/2, and each per-top count matches the standalone count of
/// the support subgroup.
fn suite_support_counts(
    lat: &SubgroupLattice,
    chains: &[FuzzyClass],
) -> Result<SuiteResult> {
    let name = "5.2/5.4-support-counts";
    let desc = "classes with a given support: (s(H)+1)/2 per subgroup, \
                (s(G)+1)/2 at the top";
    let census = count_classes(lat);
    let mut checked = 0u64;
    let mut per_top_buckets: BTreeMap<usize, std::collections::BTreeSet<Vec<usize>>> =
        BTreeMap::new();
    for c in chains {
        per_top_buckets
            .entry(c.support_id)
            .or_default()
            .insert(c.chain.clone());
    }
    for sub in lat.subgroups() {
        checked += 1;
        let bucket_count = per_top_buckets.get(&sub.id).map_or(0, |s| s.len()) as u64;
        if bucket_count != census.per_top[sub.id] {
            return Ok(SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "support {}: oracle sees {bucket_count} classes, census says {}",
                    lat.subgroup_name(sub.id),
                    census.per_top[sub.id]
                ),
            ));
        }
        // Standalone recomputation of s(H) from the sub-table.
        let members: Vec<usize> =
            crate::lattice::mask_elems(sub.members, lat.group().order()).collect();
        let h = lat
            .group()
            .subgroup_as_group(&members, format!("H{}", sub.id))?;
        let h_census = count_classes(&SubgroupLattice::new(h));
        if census.per_top[sub.id] != h_census.total.div_ceil(2) {
            return Ok(SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "support {}: per-top {} != (s(H)+1)/2 with s(H)={}",
                    lat.subgroup_name(sub.id),
                    census.per_top[sub.id],
                    h_census.total
                ),
            ));
        }
    }
    if census.total % 2 != 1 || census.per_top[lat.top_id()] != census.total.div_ceil(2) {
        return Ok(SuiteResult::fail(
            name,
            desc,
            checked,
            format!("census parity broken: total={}", census.total),
        ));
    }
    Ok(SuiteResult::pass(name, desc, checked))
}

/// Definitional permutability (both directions) agrees with the chain-pair
/// criterion for every checked representative pair.
fn suite_permutability_level_criterion(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
    chains: &[FuzzyClass],
    mode: CheckMode,
) -> SuiteResult {
    let name = "3.1-permutability-level-criterion";
    let desc = "mu,nu permutable definitionally iff all level-subgroup pairs permute";
    let g = lat.group();
    let mut checked = 0u64;
    for (i, j) in pair_indices(enumerated.len(), mode) {
        checked += 1;
        let definitional = is_permuted_by(g, &enumerated[i], &enumerated[j])
            && is_permuted_by(g, &enumerated[j], &enumerated[i]);
        let by_chains = class_permutes(lat, &chains[i], &chains[j]);
        if definitional != by_chains {
            return SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "mu={} nu={}: definitional={definitional}, chains={by_chains}",
                    enumerated[i].render(),
                    enumerated[j].render()
                ),
            );
        }
    }
    SuiteResult::pass(name, desc, checked)
}

/// Same fidelity for mutual permutability.
fn suite_mutual_level_criterion(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
    chains: &[FuzzyClass],
    mode: CheckMode,
) -> SuiteResult {
    let name = "3.2-mutual-level-criterion";
    let desc = "mu,nu mutually permutable definitionally iff all level-subgroup \
                pairs are mutually permutable";
    let mut checked = 0u64;
    for (i, j) in pair_indices(enumerated.len(), mode) {
        checked += 1;
        let definitional = is_mutually_permuted_by(lat, &enumerated[i], &enumerated[j])
            && is_mutually_permuted_by(lat, &enumerated[j], &enumerated[i]);
        let by_chains = class_mutually_permutes(lat, &chains[i], &chains[j]);
        if definitional != by_chains {
            return SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "mu={} nu={}: definitional={definitional}, chains={by_chains}",
                    enumerated[i].render(),
                    enumerated[j].render()
                ),
            );
        }
    }
    SuiteResult::pass(name, desc, checked)
}

/// The max-min product is a fuzzy subgroup iff it commutes.
fn suite_product_commutation(
    g: &crate::group::Group,
    enumerated: &[FuzzySubgroup],
    mode: CheckMode,
) -> SuiteResult {
    let name = "2.2-product-commutation";
    let desc = "mu∘nu is a fuzzy subgroup iff mu∘nu = nu∘mu";
    let mut checked = 0u64;
    for (i, j) in pair_indices(enumerated.len(), mode) {
        checked += 1;
        let ab = fuzzy_product(g, enumerated[i].values(), enumerated[j].values());
        let ba = fuzzy_product(g, enumerated[j].values(), enumerated[i].values());
        let is_sub = match is_fuzzy_subgroup(g, &ab) {
            Ok(v) => v,
            Err(e) => return SuiteResult::fail(name, desc, checked, e.to_string()),
        };
        if is_sub != (ab == ba) {
            return SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "mu={} nu={}: product fuzzy-subgroup={is_sub}, commutes={}",
                    enumerated[i].render(),
                    enumerated[j].render(),
                    ab == ba
                ),
            );
        }
    }
    SuiteResult::pass(name, desc, checked)
}

/// For permutable pairs and comparable image values, the smaller value is
/// attained by the other map.
fn suite_permutable_image_bound(
    g: &crate::group::Group,
    enumerated: &[FuzzySubgroup],
    mode: CheckMode,
) -> SuiteResult {
    let name = "p3.1-permutable-image-bound";
    let desc = "for permutable mu,nu and t in Im mu, s in Im nu with t <= s, \
                some element has nu-value >= t (and symmetrically)";
    let mut checked = 0u64;
    for (i, j) in pair_indices(enumerated.len(), mode) {
        let mu = &enumerated[i];
        let nu = &enumerated[j];
        if !(is_permuted_by(g, mu, nu) && is_permuted_by(g, nu, mu)) {
            continue;
        }
        checked += 1;
        for t in mu.image_desc() {
            for s in nu.image_desc() {
                let ok = if t <= s {
                    nu.values().iter().any(|&v| v >= t)
                } else {
                    mu.values().iter().any(|&v| v >= s)
                };
                if !ok {
                    return SuiteResult::fail(
                        name,
                        desc,
                        checked,
                        format!("mu={} nu={} t={t} s={s}", mu.render(), nu.render()),
                    );
                }
            }
        }
    }
    SuiteResult::pass(name, desc, checked)
}

/// Permutable pairs have a product that is again a fuzzy subgroup.
fn suite_permutable_product_closure(
    g: &crate::group::Group,
    enumerated: &[FuzzySubgroup],
    mode: CheckMode,
) -> SuiteResult {
    let name = "p3.2-permutable-product-closure";
    let desc = "if mu and nu are permutable then mu∘nu is a fuzzy subgroup";
    let mut checked = 0u64;
    for (i, j) in pair_indices(enumerated.len(), mode) {
        let mu = &enumerated[i];
        let nu = &enumerated[j];
        if !(is_permuted_by(g, mu, nu) && is_permuted_by(g, nu, mu)) {
            continue;
        }
        checked += 1;
        let prod = fuzzy_product(g, mu.values(), nu.values());
        match is_fuzzy_subgroup(g, &prod) {
            Ok(true) => {}
            Ok(false) => {
                return SuiteResult::fail(
                    name,
                    desc,
                    checked,
                    format!(
                        "permutable mu={} nu={} but product is not a fuzzy subgroup",
                        mu.render(),
                        nu.render()
                    ),
                )
            }
            Err(e) => return SuiteResult::fail(name, desc, checked, e.to_string()),
        }
    }
    SuiteResult::pass(name, desc, checked)
}

/// The conjugation characterization and the level characterization of fuzzy
/// quasinormality agree, and match all-quasinormal chains.
fn suite_quasinormal_dual(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
    chains: &[FuzzyClass],
) -> Result<SuiteResult> {
    let name = "4.2-quasinormal-dual";
    let desc = "conjugation condition over all subgroups iff every attained \
                level subgroup is quasinormal";
    let mut checked = 0u64;
    for (mu, chain) in enumerated.iter().zip(chains) {
        checked += 1;
        // is_fuzzy_quasinormal errors out if the two characterizations split.
        let qn = is_fuzzy_quasinormal(lat, mu)?;
        let chain_qn = chain.chain.iter().all(|&h| lat.is_quasinormal(h));
        if qn != chain_qn {
            return Ok(SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "mu={}: quasinormal={qn} but chain-quasinormal={chain_qn}",
                    mu.render()
                ),
            ));
        }
    }
    Ok(SuiteResult::pass(name, desc, checked))
}

/// Quasinormal maps are exactly those whose product commutes with every
/// enumerated map, and they are permuted by every enumerated map.
fn suite_quasinormal_commutes_with_all(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
) -> Result<SuiteResult> {
    let name = "4.3-quasinormal-commutes-with-all";
    let desc = "mu fuzzy quasinormal iff mu∘nu = nu∘mu for every enumerated nu; \
                quasinormal mu is permuted by every nu";
    let g = lat.group();
    let mut checked = 0u64;
    for mu in enumerated {
        let qn = is_fuzzy_quasinormal(lat, mu)?;
        let mut commutes_with_all = true;
        for nu in enumerated {
            checked += 1;
            let ab = fuzzy_product(g, mu.values(), nu.values());
            let ba = fuzzy_product(g, nu.values(), mu.values());
            if ab != ba {
                commutes_with_all = false;
                break;
            }
        }
        if qn != commutes_with_all {
            return Ok(SuiteResult::fail(
                name,
                desc,
                checked,
                format!(
                    "mu={}: quasinormal={qn}, commutes-with-all={commutes_with_all}",
                    mu.render()
                ),
            ));
        }
        if qn {
            for nu in enumerated {
                if !is_permuted_by(g, mu, nu) {
                    return Ok(SuiteResult::fail(
                        name,
                        desc,
                        checked,
                        format!(
                            "quasinormal mu={} not permuted by nu={}",
                            mu.render(),
                            nu.render()
                        ),
                    ));
                }
            }
        }
    }
    Ok(SuiteResult::pass(name, desc, checked))
}

/// sd computed over chains equals sd re-derived from definitional pair
/// checks on one representative per class.
fn suite_degree_agreement(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
    chains: &[FuzzyClass],
    classes: &[FuzzyClass],
    pair_cap: u64,
) -> Result<SuiteResult> {
    let name = "sd-definitional-agreement";
    let desc = "sd over chain pairs equals sd over definitional checks on \
                class representatives";
    let report = compute_sd(lat, classes, pair_cap)?;
    let (oracle_pairs, s) = oracle_sd_pair_count(lat, enumerated, chains, classes);
    let oracle_sd = Fraction::new(oracle_pairs, s * s);
    let checked = s * s;
    if report.sd != oracle_sd {
        return Ok(SuiteResult::fail(
            name,
            desc,
            checked,
            format!("chain sd={} oracle sd={oracle_sd}", report.sd),
        ));
    }
    Ok(SuiteResult::pass(name, desc, checked))
}

/// Count permutable ordered class pairs using one enumerated representative
/// per class and the definitional both-ways check. Returns (count, s).
pub fn oracle_sd_pair_count(
    lat: &SubgroupLattice,
    enumerated: &[FuzzySubgroup],
    chains: &[FuzzyClass],
    classes: &[FuzzyClass],
) -> (u64, u64) {
    let g = lat.group();
    let mut rep: BTreeMap<&[usize], &FuzzySubgroup> = BTreeMap::new();
    for (mu, chain) in enumerated.iter().zip(chains) {
        rep.entry(chain.chain.as_slice()).or_insert(mu);
    }
    debug_assert_eq!(rep.len(), classes.len());
    let reps: Vec<&FuzzySubgroup> = classes
        .iter()
        .map(|c| rep[c.chain.as_slice()])
        .collect();
    let s = classes.len() as u64;
    let mut permutable = 0u64;
    for mu in &reps {
        for nu in &reps {
            if is_permuted_by(g, mu, nu) && is_permuted_by(g, nu, mu) {
                permutable += 1;
            }
        }
    }
    (permutable, s)
}

/// Recorded observations about the order-6 worked example: the claimed
/// product identity fails under direct evaluation; the claimed
/// non-permutability holds.
fn worked_example_notes(lat: &SubgroupLattice) -> Vec<DiscrepancyNote> {
    let g = lat.group();
    if g.order() != 6 || g.is_abelian() {
        return Vec::new();
    }
    // mu: 1 at e, 1/2 at one involution, 1/3 elsewhere; nu the same on a
    // different involution.
    let involutions: Vec<usize> = (1..6).filter(|&i| g.mul(i, i) == 0).collect();
    let (b, ab) = (involutions[0], involutions[1]);
    let spike = |at: usize| -> Vec<Rat> {
        (0..6)
            .map(|i| {
                if i == 0 {
                    Rat::new(1, 1)
                } else if i == at {
                    Rat::new(1, 2)
                } else {
                    Rat::new(1, 3)
                }
            })
            .collect()
    };
    let mu = FuzzySubgroup::new(g, spike(b)).expect("worked example map is a fuzzy subgroup");
    let nu = FuzzySubgroup::new(g, spike(ab)).expect("worked example map is a fuzzy subgroup");
    let prod = fuzzy_product(g, mu.values(), nu.values());
    let mut notes = Vec::new();
    if prod != mu.values() {
        let rendered: Vec<String> = prod.iter().map(|v| v.to_string()).collect();
        notes.push(DiscrepancyNote {
            quantity: "mu∘nu for the Section 3 example maps".into(),
            paper_value: "mu∘nu = mu".into(),
            computed_value: format!(
                "mu∘nu = [{}] differs from mu = {}",
                rendered.join(","),
                mu.render()
            ),
            paper_location: "Section 3, example".into(),
        });
    }
    if is_permuted_by(g, &mu, &nu) {
        notes.push(DiscrepancyNote {
            quantity: "mu permuted by nu for the Section 3 example maps".into(),
            paper_value: "mu is not permuted by nu".into(),
            computed_value: "mu is permuted by nu".into(),
            paper_location: "Section 3, example".into(),
        });
    }
    notes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupSpec, DEFAULT_MAX_ORDER};

    fn verify(spec: &str) -> VerificationReport {
        let g = GroupSpec::parse(spec).unwrap().build(DEFAULT_MAX_ORDER).unwrap();
        let lat = SubgroupLattice::new(g);
        run_verification(&lat, None, 10_000_000, 100_000_000, 7).unwrap()
    }

    #[test]
    fn all_suites_pass_on_small_groups() {
        for spec in ["cyclic:1", "cyclic:4", "cyclic:6", "klein", "symmetric:3"] {
            let report = verify(spec);
            assert!(
                report.all_passed,
                "{spec}: {:#?}",
                report.suites.iter().filter(|s| !s.passed).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn s3_report_details() {
        let report = verify("symmetric:3");
        assert_eq!(report.s, 19);
        assert!(report.all_passed);
        // The worked-example product mismatch is recorded.
        assert!(!report.notes.is_empty());
        assert!(report.notes[0].quantity.contains("mu∘nu"));
    }

    #[test]
    fn dihedral6_matches_symmetric3() {
        let report = verify("dihedral:6");
        assert_eq!(report.s, 19);
        assert!(report.all_passed);
        assert!(!report.notes.is_empty());
    }

    #[test]
    fn klein_report_has_no_example_notes() {
        let report = verify("klein");
        assert!(report.notes.is_empty());
        assert_eq!(report.s, 15);
    }

    #[test]
    fn small_cyclic_and_dihedral_class_counts() {
        let report = verify("cyclic:4");
        assert!(report.all_passed);
        assert_eq!(report.s, 7);
        let report = verify("dihedral:4");
        assert!(report.all_passed);
        assert_eq!(report.s, 15);
    }

    #[test]
    fn deeper_grid_same_partition() {
        let g = GroupSpec::parse("symmetric:3").unwrap().build(DEFAULT_MAX_ORDER).unwrap();
        let lat = SubgroupLattice::new(g);
        let report = run_verification(&lat, Some(4), 10_000_000, 100_000_000, 7).unwrap();
        assert!(report.all_passed);
        assert_eq!(report.grid_depth, 4);
        assert_eq!(report.s, 19);
    }
}
