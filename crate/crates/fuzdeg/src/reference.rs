//! Reference values reported in the source literature, checked against
//! definitional computation. Rows never assert a mismatched reference value
//! as correct; mismatches become discrepancy entries carrying the location
//! of the original claim.

use serde::Serialize;

use crate::classes::{count_classes, enumerate_classes};
use crate::degree::{compute_sd, Fraction};
use crate::error::Result;
use crate::group::GroupSpec;
use crate::lattice::SubgroupLattice;
use crate::oracle::verify::DiscrepancyNote;

/// What a claim asserts about a group.
#[derive(Debug, Clone)]
pub enum ClaimValue {
    ClassCount(u64),
    Degree(Fraction),
}

/// One reference claim: a quantity, where it was stated, and its value.
#[derive(Debug, Clone)]
pub struct Claim {
    pub quantity: String,
    pub spec: GroupSpec,
    pub value: ClaimValue,
    pub paper_value: String,
    pub paper_location: String,
}

fn count_claim(quantity: &str, spec: &str, value: u64, location: &str) -> Claim {
    Claim {
        quantity: quantity.into(),
        spec: GroupSpec::parse(spec).expect("static spec"),
        value: ClaimValue::ClassCount(value),
        paper_value: value.to_string(),
        paper_location: location.into(),
    }
}

fn degree_claim(quantity: &str, spec: &str, num: u64, den: u64, location: &str) -> Claim {
    Claim {
        quantity: quantity.into(),
        spec: GroupSpec::parse(spec).expect("static spec"),
        value: ClaimValue::Degree(Fraction::new(num, den)),
        paper_value: if den == 1 {
            num.to_string()
        } else {
            format!("{num}/{den}")
        },
        paper_location: location.into(),
    }
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Every claim covered by the reference table, in a fixed order.
pub fn all_claims() -> Vec<Claim> {
    let mut claims = Vec::new();
    for (p, n) in [(2u64, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1)] {
        let order = p.pow(n);
        claims.push(count_claim(
            &format!("s(Z{order})"),
            &format!("cyclic:{order}"),
            (1u64 << (n + 1)) - 1,
            "Proposition 5.6",
        ));
    }
    claims.push(count_claim("s(D4)", "dihedral:4", 15, "Example 6.1"));
    claims.push(count_claim("s(D8)", "dihedral:8", 63, "Example 6.2"));
    claims.push(count_claim("s(S3)", "symmetric:3", 19, "Example 6.5"));
    for p in [3u64, 5, 7, 11] {
        claims.push(count_claim(
            &format!("s(D{})", 2 * p),
            &format!("dihedral:{}", 2 * p),
            4 * p + 7,
            "Theorem 6.3",
        ));
    }
    claims.push(degree_claim(
        "sd(D4)",
        "dihedral:4",
        1,
        1,
        "abelian case (implied by Example 6.1)",
    ));
    claims.push(degree_claim(
        "sd(S3)",
        "symmetric:3",
        50,
        361,
        "Section 7, first example",
    ));
    claims.push(degree_claim(
        "sd(D8)",
        "dihedral:8",
        3897,
        3969,
        "Section 7, second example",
    ));
    for p in [3u64, 5, 7] {
        claims.push(degree_claim(
            &format!("sd(D{})", 2 * p),
            &format!("dihedral:{}", 2 * p),
            1,
            1,
            "Section 7, proposition",
        ));
    }
    claims
}

/// Claims that apply to the group a spec builds. Dihedral specs of order 2p
/// also pick up the claims stated for the isomorphic symmetric group when
/// p = 3.
pub fn claims_for_spec(spec: &GroupSpec) -> Vec<Claim> {
    let mut out = Vec::new();
    match spec {
        GroupSpec::Cyclic(n) => {
            if let Some((_, k)) = prime_power(*n as u64) {
                out.push(count_claim(
                    &format!("s(Z{n})"),
                    &format!("cyclic:{n}"),
                    (1u64 << (k + 1)) - 1,
                    "Proposition 5.6",
                ));
            }
        }
        GroupSpec::Dihedral(two_n) => {
            let p = (two_n / 2) as u64;
            if *two_n == 4 {
                out.push(count_claim("s(D4)", "dihedral:4", 15, "Example 6.1"));
                out.push(degree_claim(
                    "sd(D4)",
                    "dihedral:4",
                    1,
                    1,
                    "abelian case (implied by Example 6.1)",
                ));
            }
            if *two_n == 8 {
                out.push(count_claim("s(D8)", "dihedral:8", 63, "Example 6.2"));
                out.push(degree_claim(
                    "sd(D8)",
                    "dihedral:8",
                    3897,
                    3969,
                    "Section 7, second example",
                ));
            }
            if p >= 3 && prime_power(p).is_some_and(|(_, k)| k == 1) {
                out.push(count_claim(
                    &format!("s(D{two_n})"),
                    &format!("dihedral:{two_n}"),
                    4 * p + 7,
                    "Theorem 6.3",
                ));
                out.push(degree_claim(
                    &format!("sd(D{two_n})"),
                    &format!("dihedral:{two_n}"),
                    1,
                    1,
                    "Section 7, proposition",
                ));
            }
            if *two_n == 6 {
                out.push(degree_claim(
                    "sd(D6)",
                    "dihedral:6",
                    50,
                    361,
                    "Section 7, first example (S3 = D6)",
                ));
            }
        }
        GroupSpec::Symmetric(3) => {
            out.push(count_claim("s(S3)", "symmetric:3", 19, "Example 6.5"));
            out.push(degree_claim(
                "sd(S3)",
                "symmetric:3",
                50,
                361,
                "Section 7, first example",
            ));
        }
        _ => {}
    }
    out
}

/// A checked claim: reference value next to the computed one.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimRow {
    pub claim: String,
    pub paper_value: String,
    pub computed_value: String,
    pub matched: bool,
    pub paper_location: String,
}

impl ClaimRow {
    pub fn to_discrepancy(&self) -> DiscrepancyNote {
        DiscrepancyNote {
            quantity: self.claim.clone(),
            paper_value: self.paper_value.clone(),
            computed_value: self.computed_value.clone(),
            paper_location: self.paper_location.clone(),
        }
    }
}

/// Evaluate one claim against the computed quantities of its group.
pub fn check_claim(claim: &Claim, max_order: usize, class_cap: u64, pair_cap: u64) -> Result<ClaimRow> {
    let group = claim.spec.build(max_order)?;
    let lat = SubgroupLattice::new(group);
    let row = match &claim.value {
        ClaimValue::ClassCount(expected) => {
            let computed = count_classes(&lat).total;
            ClaimRow {
                claim: claim.quantity.clone(),
                paper_value: claim.paper_value.clone(),
                computed_value: computed.to_string(),
                matched: computed == *expected,
                paper_location: claim.paper_location.clone(),
            }
        }
        ClaimValue::Degree(expected) => {
            let classes = enumerate_classes(&lat, class_cap)?;
            let report = compute_sd(&lat, &classes, pair_cap)?;
            ClaimRow {
                claim: claim.quantity.clone(),
                paper_value: claim.paper_value.clone(),
                computed_value: report.sd.to_string(),
                matched: report.sd == *expected,
                paper_location: claim.paper_location.clone(),
            }
        }
    };
    Ok(row)
}

/// The full reference table.
pub fn paper_table(max_order: usize, class_cap: u64, pair_cap: u64) -> Result<Vec<ClaimRow>> {
    all_claims()
        .iter()
        .map(|c| check_claim(c, max_order, class_cap, pair_cap))
        .collect()
}
