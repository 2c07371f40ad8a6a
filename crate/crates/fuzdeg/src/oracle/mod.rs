//! Brute-force ground truth over literal fuzzy subgroups.
//!
//! Membership values are exact rationals; every definition is evaluated by
//! direct quantifier expansion with no level-criterion shortcuts. This module
//! exists for cross-validation of the chain-level computations, not speed.

pub mod verify;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{bit, is_subgroup_mask, mask_elems, Mask, SubgroupLattice};

/// Exact membership value.
pub type Rat = Rational64;

/// Shorthand constructor for exact rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// A strictly decreasing alphabet of positive membership values starting at 1.
/// Any map uses these values plus 0.
#[derive(Debug, Clone)]
pub struct MembershipGrid {
    levels: Vec<Rat>,
}

impl MembershipGrid {
    pub fn new(levels: Vec<Rat>) -> Result<MembershipGrid> {
        if levels.first() != Some(&Rat::one()) {
            return Err(Error::InvalidSpec("grid must start at 1".into()));
        }
        if levels.windows(2).any(|w| w[0] <= w[1]) || levels.iter().any(|v| *v <= Rat::zero()) {
            return Err(Error::InvalidSpec(
                "grid values must be strictly decreasing and positive".into(),
            ));
        }
        Ok(MembershipGrid { levels })
    }

    /// The default alphabet 1, 1/2, 1/3, ... of the given depth.
    pub fn harmonic(depth: usize) -> MembershipGrid {
        assert!(depth >= 1);
        MembershipGrid {
            levels: (0..depth).map(|k| rat(1, k as i64 + 1)).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Rat] {
        &self.levels
    }
}

/// An explicit fuzzy subgroup: one exact rational per element, value 1 at
/// the identity, satisfying the two subgroup laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySubgroup {
    values: Vec<Rat>,
}

impl FuzzySubgroup {
    /// Validate `values` as a fuzzy subgroup on `g` with value 1 at the
    /// identity.
    pub fn new(g: &Group, values: Vec<Rat>) -> Result<FuzzySubgroup> {
        if values.len() != g.order() {
            return Err(Error::InvalidFuzzy(format!(
                "expected {} values, got {}",
                g.order(),
                values.len()
            )));
        }
        if values[0] != Rat::one() {
            return Err(Error::InvalidFuzzy("identity must carry value 1".into()));
        }
        if values
            .iter()
            .any(|v| *v < Rat::zero() || *v > Rat::one())
        {
            return Err(Error::InvalidFuzzy("values must lie in [0,1]".into()));
        }
        if !is_fuzzy_subgroup(g, &values)? {
            return Err(Error::InvalidFuzzy(
                "map violates the fuzzy subgroup laws".into(),
            ));
        }
        Ok(FuzzySubgroup { values })
    }

    fn from_checked(values: Vec<Rat>) -> FuzzySubgroup {
        FuzzySubgroup { values }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn value(&self, i: usize) -> Rat {
        self.values[i]
    }

    pub fn check_compatible(&self, g: &Group) -> Result<()> {
        if self.values.len() != g.order() {
            return Err(Error::InvalidFuzzy(format!(
                "fuzzy subgroup on {} elements used with group of order {}",
                self.values.len(),
                g.order()
            )));
        }
        Ok(())
    }

    /// Distinct positive values of the image, in decreasing order.
    pub fn positive_image_desc(&self) -> Vec<Rat> {
        let mut vals: Vec<Rat> = self
            .values
            .iter()
            .copied()
            .filter(|v| *v > Rat::zero())
            .collect();
        vals.sort_unstable();
        vals.dedup();
        vals.reverse();
        vals
    }

    /// All distinct attained values (including 0 when attained), decreasing.
    pub fn image_desc(&self) -> Vec<Rat> {
        let mut vals = self.values.clone();
        vals.sort_unstable();
        vals.dedup();
        vals.reverse();
        vals
    }

    /// `{x : mu(x) >= t}` as a bitmask.
    pub fn level_mask(&self, g: &Group, t: Rat) -> Mask {
        (0..g.order())
            .filter(|&i| self.values[i] >= t)
            .fold(0, |acc, i| acc | bit(i))
    }

    /// `{x : mu(x) > 0}` as a bitmask.
    pub fn support_mask(&self, g: &Group) -> Mask {
        (0..g.order())
            .filter(|&i| self.values[i] > Rat::zero())
            .fold(0, |acc, i| acc | bit(i))
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Decide whether `values` is a fuzzy subgroup, two independent ways: the
/// direct laws `mu(xy) >= min(mu(x),mu(y))` and `mu(x^-1) >= mu(x)`, and the
/// level-set criterion (every cut at an attained value is a subgroup). The
/// two must agree; disagreement is an internal error.
pub fn is_fuzzy_subgroup(g: &Group, values: &[Rat]) -> Result<bool> {
    let direct = satisfies_laws(g, values);
    let by_levels = levels_all_subgroups(g, values);
    if direct != by_levels {
        return Err(Error::Internal(format!(
            "direct laws say {direct} but level-set criterion says {by_levels} for {values:?}"
        )));
    }
    Ok(direct)
}

fn satisfies_laws(g: &Group, values: &[Rat]) -> bool {
    let n = g.order();
    for x in 0..n {
        if values[g.inv(x)] < values[x] {
            return false;
        }
        for y in 0..n {
            let m = values[x].min(values[y]);
            if values[g.mul(x, y)] < m {
                return false;
            }
        }
    }
    true
}

fn levels_all_subgroups(g: &Group, values: &[Rat]) -> bool {
    let mut image: Vec<Rat> = values.to_vec();
    image.sort_unstable();
    image.dedup();
    image.into_iter().all(|t| {
        let mask = (0..g.order())
            .filter(|&i| values[i] >= t)
            .fold(0 as Mask, |acc, i| acc | bit(i));
        mask == 0 || is_subgroup_mask(g, mask)
    })
}

/// Enumerate every fuzzy subgroup on `g` whose values come from
/// `grid ∪ {0}`, with value 1 fixed at the identity.
pub fn enumerate_fuzzy_subgroups(
    g: &Group,
    grid: &MembershipGrid,
    longest_chain: usize,
    cap: u64,
) -> Result<Vec<FuzzySubgroup>> {
    if grid.depth() < longest_chain {
        return Err(Error::InsufficientDepth {
            needed: longest_chain,
            got: grid.depth(),
        });
    }
    let n = g.order();
    let choices = grid.depth() as u64 + 1;
    let space = (n as u32)
        .checked_sub(1)
        .and_then(|exp| choices.checked_pow(exp));
    match space {
        Some(s) if s <= cap => {}
        _ => {
            return Err(Error::Capacity {
                what: format!("membership map space for {}", g.label()),
                needed: space.unwrap_or(u64::MAX),
                cap,
            })
        }
    }
    // Alphabet: grid levels then 0, indexed by an odometer over positions
    // 1..n. Ascending odometer order keeps the output deterministic.
    let mut alphabet = grid.levels().to_vec();
    alphabet.push(Rat::zero());
    let mut out = Vec::new();
    let mut digits = vec![0usize; n.saturating_sub(1)];
    loop {
        let mut values = Vec::with_capacity(n);
        values.push(Rat::one());
        values.extend(digits.iter().map(|&d| alphabet[d]));
        if is_fuzzy_subgroup(g, &values)? {
            out.push(FuzzySubgroup::from_checked(values));
        }
        // increment odometer
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// The natural equivalence: identical strict value ordering and identical
/// zero set.
pub fn equivalent(mu: &FuzzySubgroup, nu: &FuzzySubgroup) -> bool {
    let n = mu.values.len();
    debug_assert_eq!(n, nu.values.len());
    for x in 0..n {
        if (mu.values[x] == Rat::zero()) != (nu.values[x] == Rat::zero()) {
            return false;
        }
        for y in 0..n {
            if (mu.values[x] > mu.values[y]) != (nu.values[x] > nu.values[y]) {
                return false;
            }
        }
    }
    true
}

/// Max-min convolution `(a ∘ b)(x) = max over yz=x of min(a(y), b(z))`.
/// Accepts arbitrary membership maps, not just fuzzy subgroups.
pub fn fuzzy_product(g: &Group, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = g.order();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a[y].min(b[g.mul(g.inv(y), x)]))
                .max()
                .unwrap()
        })
        .collect()
}

/// `mu` is permuted by `nu`: for all a, b there is an x with
/// `mu(x^-1 a b) >= mu(a)` and `nu(x) >= nu(b)`.
pub fn is_permuted_by(g: &Group, mu: &FuzzySubgroup, nu: &FuzzySubgroup) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            let found = (0..n).any(|x| {
                nu.values[x] >= nu.values[b] && mu.values[g.mul(g.inv(x), ab)] >= mu.values[a]
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// The two-sided conjugation condition quantified over a family of
/// subgroups: for each subgroup L, every a in G and l in L admit l1, l2 in L
/// with `mu(l1^-1 a l) >= mu(a)` and `mu(l a l2^-1) >= mu(a)`.
fn conjugation_condition<I: IntoIterator<Item = Mask>>(
    g: &Group,
    mu: &FuzzySubgroup,
    subgroups: I,
) -> bool {
    let n = g.order();
    for l_mask in subgroups {
        let members: Vec<usize> = mask_elems(l_mask, n).collect();
        for a in 0..n {
            for &l in &members {
                let al = g.mul(a, l);
                let ok1 = members
                    .iter()
                    .any(|&l1| mu.values[g.mul(g.inv(l1), al)] >= mu.values[a]);
                if !ok1 {
                    return false;
                }
                let la = g.mul(l, a);
                let ok2 = members
                    .iter()
                    .any(|&l2| mu.values[g.mul(la, g.inv(l2))] >= mu.values[a]);
                if !ok2 {
                    return false;
                }
            }
        }
    }
    true
}

/// `mu` is permuted by `nu` mutually: the conjugation condition over every
/// lattice subgroup contained in a level set of `nu`, for every attained
/// value of `nu` (including 0 when attained, where the level set is G).
pub fn is_mutually_permuted_by(
    lat: &SubgroupLattice,
    mu: &FuzzySubgroup,
    nu: &FuzzySubgroup,
) -> bool {
    let g = lat.group();
    let mut seen_levels: Vec<Mask> = Vec::new();
    for b in nu.image_desc() {
        let level = nu.level_mask(g, b);
        if seen_levels.contains(&level) {
            continue;
        }
        seen_levels.push(level);
        let subs = lat
            .subgroups()
            .iter()
            .filter(|s| s.members & level == s.members)
            .map(|s| s.members);
        if !conjugation_condition(g, mu, subs) {
            return false;
        }
    }
    true
}

/// Fuzzy quasinormality, decided by two characterizations that must agree:
/// the conjugation condition over every subgroup of G, and quasinormality of
/// every level subgroup at attained values.
pub fn is_fuzzy_quasinormal(lat: &SubgroupLattice, mu: &FuzzySubgroup) -> Result<bool> {
    let g = lat.group();
    let q1 = conjugation_condition(g, mu, lat.subgroups().iter().map(|s| s.members));
    let q2 = mu.image_desc().into_iter().all(|t| {
        let mask = mu.level_mask(g, t);
        match lat.id_of_mask(mask) {
            Some(id) => lat.is_quasinormal(id),
            None => false, // unreachable for a valid fuzzy subgroup
        }
    });
    if q1 != q2 {
        return Err(Error::Internal(format!(
            "quasinormality characterizations disagree (conjugation={q1}, levels={q2}) for {}",
            mu.render()
        )));
    }
    Ok(q1)
}

/// `mu(xy) = mu(yx)` everywhere.
pub fn is_fuzzy_normal(g: &Group, mu: &FuzzySubgroup) -> bool {
    let n = g.order();
    (0..n).all(|x| (0..n).all(|y| mu.values[g.mul(x, y)] == mu.values[g.mul(y, x)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupSpec, DEFAULT_MAX_ORDER};

    fn group(spec: &str) -> Group {
        GroupSpec::parse(spec).unwrap().build(DEFAULT_MAX_ORDER).unwrap()
    }

    fn s3() -> Group {
        group("dihedral:6") // same presentation names a, b as the worked maps
    }

    /// mu with value 1 at e, `v` at the named element, `w` elsewhere.
    fn spike(g: &Group, name: &str, v: Rat, w: Rat) -> Vec<Rat> {
        (0..g.order())
            .map(|i| {
                if i == 0 {
                    Rat::one()
                } else if g.elem_name(i) == name {
                    v
                } else {
                    w
                }
            })
            .collect()
    }

    #[test]
    fn dual_characterization_examples() {
        let g = s3();
        // Constant 1 map.
        assert!(is_fuzzy_subgroup(&g, &[Rat::one(); 6]).unwrap());
        // 1 at e, 1/2 at b, 1/3 elsewhere: levels {e}, {e,b}, G.
        let mu = spike(&g, "b", rat(1, 2), rat(1, 3));
        assert!(is_fuzzy_subgroup(&g, &mu).unwrap());
        // 1 at e, 1/2 at a, 0 elsewhere: {e,a} not closed (a^2 missing).
        let bad = spike(&g, "a", rat(1, 2), rat(0, 1));
        assert!(!is_fuzzy_subgroup(&g, &bad).unwrap());
    }

    #[test]
    fn enumeration_small_counts() {
        let triv = group("cyclic:1");
        let grid = MembershipGrid::harmonic(1);
        let all = enumerate_fuzzy_subgroups(&triv, &grid, 1, 1_000).unwrap();
        assert_eq!(all.len(), 1);

        let z2 = group("cyclic:2");
        let grid = MembershipGrid::harmonic(2);
        let all = enumerate_fuzzy_subgroups(&z2, &grid, 2, 1_000).unwrap();
        // (1,1), (1,1/2), (1,0)
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn enumeration_depth_and_capacity_errors() {
        let z4 = group("cyclic:4");
        let grid = MembershipGrid::harmonic(2);
        assert!(matches!(
            enumerate_fuzzy_subgroups(&z4, &grid, 3, 1_000),
            Err(Error::InsufficientDepth { needed: 3, got: 2 })
        ));
        let grid = MembershipGrid::harmonic(3);
        assert!(matches!(
            enumerate_fuzzy_subgroups(&z4, &grid, 3, 10),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn equivalence_examples() {
        let g = s3();
        let mu = FuzzySubgroup::new(&g, spike(&g, "b", rat(1, 2), rat(1, 3))).unwrap();
        assert!(equivalent(&mu, &mu));
        let nu = FuzzySubgroup::new(&g, spike(&g, "b", rat(3, 4), rat(1, 4))).unwrap();
        assert!(equivalent(&mu, &nu));
        // Different ordering pattern: plateau vs two levels on the subgroup.
        let rot_plateau = FuzzySubgroup::new(
            &g,
            (0..6)
                .map(|i| if g.elem_name(i).starts_with('b') || g.elem_name(i).contains('b') {
                    Rat::zero()
                } else {
                    Rat::one()
                })
                .collect(),
        )
        .unwrap();
        let rot_graded = FuzzySubgroup::new(
            &g,
            (0..6)
                .map(|i| {
                    if i == 0 {
                        Rat::one()
                    } else if g.elem_name(i).contains('b') {
                        Rat::zero()
                    } else {
                        rat(1, 2)
                    }
                })
                .collect(),
        )
        .unwrap();
        assert!(!equivalent(&rot_plateau, &rot_graded));
    }

    #[test]
    fn product_identities() {
        let g = s3();
        let mu = spike(&g, "b", rat(1, 2), rat(1, 3));
        // Identity of the convolution: indicator of {e}.
        let mut point = vec![Rat::zero(); 6];
        point[0] = Rat::one();
        assert_eq!(fuzzy_product(&g, &mu, &point), mu);
        // mu ∘ (constant 1) is constant 1: pick y = e.
        let top = vec![Rat::one(); 6];
        assert_eq!(fuzzy_product(&g, &mu, &top), top);
    }

    #[test]
    fn worked_example_product_and_permutation() {
        // mu: 1 at e, 1/2 at b, 1/3 else; nu: 1 at e, 1/2 at ab, 1/3 else.
        let g = s3();
        let mu = FuzzySubgroup::new(&g, spike(&g, "b", rat(1, 2), rat(1, 3))).unwrap();
        let nu = FuzzySubgroup::new(&g, spike(&g, "ab", rat(1, 2), rat(1, 3))).unwrap();
        let prod = fuzzy_product(&g, mu.values(), nu.values());
        // The product raises the value at ab to 1/2 (factor e * ab), so the
        // claimed identity "mu ∘ nu = mu" fails at ab.
        let ab = (0..6).find(|&i| g.elem_name(i) == "ab").unwrap();
        assert_eq!(prod[ab], rat(1, 2));
        assert_eq!(mu.value(ab), rat(1, 3));
        assert_ne!(prod, mu.values());
        // And mu is not permuted by nu.
        assert!(!is_permuted_by(&g, &mu, &nu));
    }

    #[test]
    fn permuted_by_constant_one() {
        let g = s3();
        let top = FuzzySubgroup::new(&g, vec![Rat::one(); 6]).unwrap();
        let mu = FuzzySubgroup::new(&g, spike(&g, "b", rat(1, 2), rat(1, 3))).unwrap();
        assert!(is_permuted_by(&g, &mu, &top));
        assert!(is_permuted_by(&g, &top, &mu));
    }

    #[test]
    fn fuzzy_normal_is_everywhere_agreeable() {
        let g = s3();
        let lat = SubgroupLattice::new(g);
        let g = lat.group();
        // Graded along {e} < <a> < G: fuzzy normal since both are normal.
        let mu = FuzzySubgroup::new(
            g,
            (0..6)
                .map(|i| {
                    if i == 0 {
                        Rat::one()
                    } else if g.elem_name(i).contains('b') {
                        rat(1, 3)
                    } else {
                        rat(1, 2)
                    }
                })
                .collect(),
        )
        .unwrap();
        assert!(is_fuzzy_normal(g, &mu));
        assert!(is_fuzzy_quasinormal(&lat, &mu).unwrap());
        let grid = MembershipGrid::harmonic(3);
        let all = enumerate_fuzzy_subgroups(g, &grid, 3, 100_000).unwrap();
        for nu in &all {
            assert!(is_permuted_by(g, &mu, nu));
            assert!(is_mutually_permuted_by(&lat, &mu, nu));
        }
    }

    #[test]
    fn quasinormality_examples() {
        let lat = SubgroupLattice::new(s3());
        let g = lat.group();
        let top = FuzzySubgroup::new(g, vec![Rat::one(); 6]).unwrap();
        assert!(is_fuzzy_quasinormal(&lat, &top).unwrap());
        // Indicator of a reflection subgroup: its level <b> is not
        // quasinormal.
        let b = (0..6).find(|&i| g.elem_name(i) == "b").unwrap();
        let mut vals = vec![Rat::zero(); 6];
        vals[0] = Rat::one();
        vals[b] = Rat::one();
        let mu = FuzzySubgroup::new(g, vals).unwrap();
        assert!(!is_fuzzy_quasinormal(&lat, &mu).unwrap());
    }

    #[test]
    fn mutually_permuted_by_point_indicator() {
        let lat = SubgroupLattice::new(s3());
        let g = lat.group();
        let mut point = vec![Rat::zero(); 6];
        point[0] = Rat::one();
        let nu = FuzzySubgroup::new(g, point).unwrap();
        let mu = FuzzySubgroup::new(g, vec![Rat::one(); 6]).unwrap();
        // nu's only positive level is {e}; but 0 is attained, so the level
        // at 0 is all of G and the condition ranges over every subgroup.
        assert!(is_mutually_permuted_by(&lat, &mu, &nu));
    }

    #[test]
    fn reflection_indicators_not_mutually_permutable() {
        let lat = SubgroupLattice::new(s3());
        let g = lat.group();
        let ind = |name: &str| {
            let i = (0..6).find(|&i| g.elem_name(i) == name).unwrap();
            let mut vals = vec![Rat::zero(); 6];
            vals[0] = Rat::one();
            vals[i] = Rat::one();
            FuzzySubgroup::new(g, vals).unwrap()
        };
        let mu = ind("b");
        let nu = ind("ab");
        assert!(!(is_mutually_permuted_by(&lat, &mu, &nu) && is_mutually_permuted_by(&lat, &nu, &mu)));
        // They are not plainly permutable either.
        assert!(!(is_permuted_by(g, &mu, &nu) && is_permuted_by(g, &nu, &mu)));
    }

    #[test]
    fn grid_validation() {
        assert!(MembershipGrid::new(vec![Rat::one(), rat(1, 2)]).is_ok());
        assert!(MembershipGrid::new(vec![rat(1, 2)]).is_err());
        assert!(MembershipGrid::new(vec![Rat::one(), rat(1, 2), rat(1, 2)]).is_err());
        assert!(MembershipGrid::new(vec![Rat::one(), rat(0, 1)]).is_err());
    }

    #[test]
    fn fuzzy_subgroup_constructor_rejects_bad_maps() {
        let g = s3();
        assert!(matches!(
            FuzzySubgroup::new(&g, vec![Rat::one(); 3]),
            Err(Error::InvalidFuzzy(_))
        ));
        let mut vals = vec![Rat::one(); 6];
        vals[0] = rat(1, 2);
        assert!(FuzzySubgroup::new(&g, vals).is_err());
        let bad = spike(&g, "a", rat(1, 2), rat(0, 1));
        assert!(FuzzySubgroup::new(&g, bad).is_err());
    }
}
