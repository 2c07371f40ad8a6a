//! Finite groups as validated multiplication tables.
//!
//! Elements are indices `0..order` with the identity fixed at index 0.
//! Constructors cover the families used throughout: cyclic, dihedral,
//! symmetric (n <= 5), the Klein four-group, direct products, and raw
//! Cayley tables read from a file.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Hard ceiling on group order: subgroup member sets are `u128` bitmasks.
pub const MASK_ORDER_LIMIT: usize = 128;

/// Default runtime cap on group order.
pub const DEFAULT_MAX_ORDER: usize = 128;

/// A finite group given by its full multiplication table.
///
/// Invariants (checked on every construction path):
/// - `table[0][j] = j` and `table[i][0] = i` (identity at index 0),
/// - every element has a two-sided inverse,
/// - the table is associative,
/// - every row and column is a permutation of `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>, // row-major, table[i * order + j] = x_i * x_j
    inverse: Vec<usize>,
    label: String,
    elem_names: Vec<String>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elem_name(&self, i: usize) -> &str {
        &self.elem_names[i]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Order of a single element (smallest k >= 1 with x^k = e).
    pub fn elem_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut acc = i;
        while acc != 0 {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    /// Cyclic group of order `n`, written additively mod n.
    pub fn cyclic(n: usize, max_order: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidSpec("cyclic order must be positive".into()));
        }
        check_capacity(n, max_order)?;
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        let elem_names = (0..n).map(|i| i.to_string()).collect();
        let g = Group {
            order: n,
            table,
            inverse,
            label: format!("Z{n}"),
            elem_names,
        };
        g.validate()?;
        Ok(g)
    }

    /// Dihedral group of order `two_n = 2n`, n >= 2. Elements `0..n` are the
    /// rotations `a^i`; elements `n..2n` are the reflections `a^i b`, with
    /// `b a = a^{-1} b`.
    pub fn dihedral(two_n: usize, max_order: usize) -> Result<Group> {
        if !two_n.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!(
                "dihedral order must be even, got {two_n}"
            )));
        }
        let n = two_n / 2;
        if n < 2 {
            return Err(Error::InvalidSpec(format!(
                "dihedral order must be at least 4, got {two_n}"
            )));
        }
        check_capacity(two_n, max_order)?;
        let enc = |rot: usize, refl: bool| if refl { n + rot } else { rot };
        let mut table = vec![0usize; two_n * two_n];
        for i in 0..two_n {
            let (ri, fi) = (i % n, i >= n);
            for j in 0..two_n {
                let (rj, fj) = (j % n, j >= n);
                // (a^ri b^fi)(a^rj b^fj): move b past a^rj when fi is set.
                let rot = if fi { (ri + n - rj) % n } else { (ri + rj) % n };
                table[i * two_n + j] = enc(rot, fi ^ fj);
            }
        }
        let inverse = (0..two_n)
            .map(|i| if i < n { (n - i) % n } else { i })
            .collect();
        let elem_names = (0..two_n)
            .map(|i| {
                let (r, f) = (i % n, i >= n);
                match (r, f) {
                    (0, false) => "e".to_string(),
                    (1, false) => "a".to_string(),
                    (r, false) => format!("a^{r}"),
                    (0, true) => "b".to_string(),
                    (1, true) => "ab".to_string(),
                    (r, true) => format!("a^{r}b"),
                }
            })
            .collect();
        let g = Group {
            order: two_n,
            table,
            inverse,
            label: format!("D{two_n}"),
            elem_names,
        };
        g.validate()?;
        Ok(g)
    }

    /// Symmetric group on `n <= 5` letters. Elements are the permutations of
    /// `0..n` in lexicographic order (identity first); the product `s*t`
    /// applies `t` first, then `s`.
    pub fn symmetric(n: usize, max_order: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidSpec("symmetric degree must be positive".into()));
        }
        if n > 5 {
            return Err(Error::Capacity {
                what: format!("symmetric group degree {n}"),
                needed: n as u64,
                cap: 5,
            });
        }
        let perms = permutations_lex(n);
        let order = perms.len();
        check_capacity(order, max_order)?;
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mut table = vec![0usize; order * order];
        for (i, s) in perms.iter().enumerate() {
            for (j, t) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
                table[i * order + j] = index_of(&composed);
            }
        }
        let mut inverse = vec![0usize; order];
        for (i, s) in perms.iter().enumerate() {
            let mut inv = vec![0usize; n];
            for (x, &sx) in s.iter().enumerate() {
                inv[sx] = x;
            }
            inverse[i] = index_of(&inv);
        }
        let elem_names = perms.iter().map(|p| cycle_name(p)).collect();
        let g = Group {
            order,
            table,
            inverse,
            label: format!("S{n}"),
            elem_names,
        };
        g.validate()?;
        Ok(g)
    }

    /// Klein four-group with the conventional names e, a, b, ab.
    pub fn klein(max_order: usize) -> Result<Group> {
        check_capacity(4, max_order)?;
        let raw = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let names = ["e", "a", "b", "ab"].map(String::from).to_vec();
        Group::from_cayley_table_named(raw, "V4".into(), Some(names))
    }

    /// Component-wise direct product.
    pub fn direct_product(&self, other: &Group, max_order: usize) -> Result<Group> {
        let order = self
            .order
            .checked_mul(other.order)
            .ok_or_else(|| Error::Capacity {
                what: "direct product order".into(),
                needed: u64::MAX,
                cap: max_order as u64,
            })?;
        check_capacity(order, max_order)?;
        let enc = |x: usize, y: usize| x * other.order + y;
        let mut table = vec![0usize; order * order];
        for x1 in 0..self.order {
            for y1 in 0..other.order {
                for x2 in 0..self.order {
                    for y2 in 0..other.order {
                        table[enc(x1, y1) * order + enc(x2, y2)] =
                            enc(self.mul(x1, x2), other.mul(y1, y2));
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|i| enc(self.inv(i / other.order), other.inv(i % other.order)))
            .collect();
        let elem_names = (0..order)
            .map(|i| {
                format!(
                    "({},{})",
                    self.elem_name(i / other.order),
                    other.elem_name(i % other.order)
                )
            })
            .collect();
        let g = Group {
            order,
            table,
            inverse,
            label: format!("{}x{}", self.label, other.label),
            elem_names,
        };
        g.validate()?;
        Ok(g)
    }

    /// Validate a raw square table as a group. If the identity sits at an
    /// index other than 0, the elements are relabeled so it lands at 0.
    pub fn from_cayley_table(raw: Vec<Vec<usize>>, label: String) -> Result<Group> {
        Group::from_cayley_table_named(raw, label, None)
    }

    fn from_cayley_table_named(
        raw: Vec<Vec<usize>>,
        label: String,
        names: Option<Vec<String>>,
    ) -> Result<Group> {
        let order = raw.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (i, row) in raw.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::InvalidTable(format!(
                        "entry [{i}][{j}] = {v} out of range 0..{order}"
                    )));
                }
            }
        }
        if order > MASK_ORDER_LIMIT {
            return Err(Error::Capacity {
                what: "group order".into(),
                needed: order as u64,
                cap: MASK_ORDER_LIMIT as u64,
            });
        }
        // Locate the two-sided identity.
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| raw[e][j] == j && raw[j][e] == j))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity element".into()))?;
        let names =
            names.unwrap_or_else(|| (0..order).map(|i| if i == identity { "e".into() } else { format!("g{i}") }).collect());
        let (raw, names) = if identity == 0 {
            (raw, names)
        } else {
            // Swap indices 0 and `identity`.
            let mut perm: Vec<usize> = (0..order).collect();
            perm.swap(0, identity);
            let relabeled = (0..order)
                .map(|i| (0..order).map(|j| perm[raw[perm[i]][perm[j]]]).collect())
                .collect();
            let renames = (0..order).map(|i| names[perm[i]].clone()).collect();
            (relabeled, renames)
        };
        let table: Vec<usize> = raw.iter().flatten().copied().collect();
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            match (0..order).find(|&j| table[i * order + j] == 0 && table[j * order + i] == 0) {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(Error::InvalidTable(format!(
                        "element {i} has no two-sided inverse"
                    )))
                }
            }
        }
        let g = Group {
            order,
            table,
            inverse,
            label,
            elem_names: names,
        };
        g.validate()?;
        Ok(g)
    }

    /// Parse the Cayley-table file format:
    /// line 1 `order n`, optional line `label <string>`, then n rows of n ints.
    pub fn from_file(path: &Path) -> Result<Group> {
        let text = std::fs::read_to_string(path)?;
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidSpec("empty table file".into()))?;
        let order: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidSpec(format!("expected `order n` header, got {header:?}")))?;
        let mut rows = Vec::with_capacity(order);
        let mut label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "file".into());
        for line in lines {
            if let Some(rest) = line.strip_prefix("label") {
                label = rest.trim().to_string();
                continue;
            }
            let row: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse).collect();
            rows.push(row.map_err(|e| Error::InvalidSpec(format!("bad table row {line:?}: {e}")))?);
        }
        if rows.len() != order {
            return Err(Error::InvalidSpec(format!(
                "expected {order} table rows, got {}",
                rows.len()
            )));
        }
        Group::from_cayley_table(rows, label)
    }

    /// Apply a relabeling permutation (must fix index 0); the result is an
    /// isomorphic copy.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Group> {
        if perm.len() != self.order || perm[0] != 0 {
            return Err(Error::InvalidSpec(
                "relabeling must be a permutation fixing index 0".into(),
            ));
        }
        let mut inv_perm = vec![0usize; self.order];
        for (i, &p) in perm.iter().enumerate() {
            inv_perm[p] = i;
        }
        let raw = (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| perm[self.mul(inv_perm[i], inv_perm[j])])
                    .collect()
            })
            .collect();
        let names = (0..self.order)
            .map(|i| self.elem_names[inv_perm[i]].clone())
            .collect();
        Group::from_cayley_table_named(raw, self.label.clone(), Some(names))
    }

    /// Restrict the table to a sublist of elements that is closed under the
    /// product, producing a standalone validated group. `members` must
    /// contain index 0.
    pub fn subgroup_as_group(&self, members: &[usize], label: String) -> Result<Group> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::InvalidTable("subgroup must contain the identity".into()));
        }
        let mut to_new = vec![usize::MAX; self.order];
        for (new, &old) in sorted.iter().enumerate() {
            to_new[old] = new;
        }
        let raw: Vec<Vec<usize>> = sorted
            .iter()
            .map(|&i| {
                sorted
                    .iter()
                    .map(|&j| {
                        let p = self.mul(i, j);
                        if to_new[p] == usize::MAX {
                            usize::MAX // caught by range validation below
                        } else {
                            to_new[p]
                        }
                    })
                    .collect()
            })
            .collect();
        if raw.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(Error::InvalidTable("element set is not closed under product".into()));
        }
        let names = sorted.iter().map(|&i| self.elem_names[i].clone()).collect();
        Group::from_cayley_table_named(raw, label, Some(names))
    }

    /// Exhaustive check of the four table invariants.
    fn validate(&self) -> Result<()> {
        let n = self.order;
        for j in 0..n {
            if self.mul(0, j) != j {
                return Err(Error::InvalidTable(format!("identity law fails: e*x{j} != x{j}")));
            }
        }
        for i in 0..n {
            if self.mul(i, 0) != i {
                return Err(Error::InvalidTable(format!("identity law fails: x{i}*e != x{i}")));
            }
            let v = self.inverse[i];
            if self.mul(i, v) != 0 || self.mul(v, i) != 0 {
                return Err(Error::InvalidTable(format!("inverse law fails for element {i}")));
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = self.mul(i, j);
                let c = self.mul(j, i);
                if seen_row[r] {
                    return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
                }
                if seen_col[c] {
                    return Err(Error::InvalidTable(format!("column {i} is not a permutation")));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

fn check_capacity(order: usize, max_order: usize) -> Result<()> {
    let cap = max_order.min(MASK_ORDER_LIMIT);
    if order > cap {
        return Err(Error::Capacity {
            what: "group order".into(),
            needed: order as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Cycle-notation name for a permutation, `e` for the identity.
fn cycle_name(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// A parsed group description: which family to build and with what parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Total order 2n.
    Dihedral(usize),
    Symmetric(usize),
    Klein,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    File(PathBuf),
}

impl GroupSpec {
    /// Parse spec strings of the form `cyclic:n`, `dihedral:2n`,
    /// `symmetric:n`, `klein`, `product:<spec>,<spec>`, `file:<path>`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let mut rest = s.trim();
        let spec = Self::parse_prefix(&mut rest)?;
        if !rest.is_empty() {
            return Err(Error::InvalidSpec(format!(
                "trailing input {rest:?} after group spec"
            )));
        }
        Ok(spec)
    }

    fn parse_prefix(rest: &mut &str) -> Result<GroupSpec> {
        let take_int = |rest: &mut &str| -> Result<usize> {
            let end = rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(rest.len());
            let (num, tail) = rest.split_at(end);
            let v = num
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("expected integer at {rest:?}")))?;
            *rest = tail;
            Ok(v)
        };
        if let Some(tail) = rest.strip_prefix("cyclic:") {
            *rest = tail;
            Ok(GroupSpec::Cyclic(take_int(rest)?))
        } else if let Some(tail) = rest.strip_prefix("dihedral:") {
            *rest = tail;
            Ok(GroupSpec::Dihedral(take_int(rest)?))
        } else if let Some(tail) = rest.strip_prefix("symmetric:") {
            *rest = tail;
            Ok(GroupSpec::Symmetric(take_int(rest)?))
        } else if let Some(tail) = rest.strip_prefix("klein") {
            *rest = tail;
            Ok(GroupSpec::Klein)
        } else if let Some(tail) = rest.strip_prefix("product:") {
            *rest = tail;
            let left = Self::parse_prefix(rest)?;
            let Some(tail) = rest.strip_prefix(',') else {
                return Err(Error::InvalidSpec(format!(
                    "product spec needs two comma-separated parts, stopped at {rest:?}"
                )));
            };
            *rest = tail;
            let right = Self::parse_prefix(rest)?;
            Ok(GroupSpec::Product(Box::new(left), Box::new(right)))
        } else if let Some(tail) = rest.strip_prefix("file:") {
            // A file path consumes the remainder of the input.
            let path = PathBuf::from(tail);
            *rest = "";
            Ok(GroupSpec::File(path))
        } else {
            Err(Error::InvalidSpec(format!(
                "unknown group family in {rest:?} (expected cyclic:, dihedral:, symmetric:, klein, product:, file:)"
            )))
        }
    }

    pub fn build(&self, max_order: usize) -> Result<Group> {
        match self {
            GroupSpec::Cyclic(n) => Group::cyclic(*n, max_order),
            GroupSpec::Dihedral(two_n) => Group::dihedral(*two_n, max_order),
            GroupSpec::Symmetric(n) => Group::symmetric(*n, max_order),
            GroupSpec::Klein => Group::klein(max_order),
            GroupSpec::Product(a, b) => {
                let left = a.build(max_order)?;
                let right = b.build(max_order)?;
                left.direct_product(&right, max_order)
            }
            GroupSpec::File(path) => {
                let g = Group::from_file(path)?;
                check_capacity(g.order(), max_order)?;
                Ok(g)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Klein => write!(f, "klein"),
            GroupSpec::Product(a, b) => write!(f, "product:{a},{b}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let g = Group::cyclic(1, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 1);
        let g = Group::cyclic(4, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.mul(1, 3), 0);
        assert!(g.is_abelian());
    }

    #[test]
    fn cyclic_capacity() {
        assert!(matches!(
            Group::cyclic(200, DEFAULT_MAX_ORDER),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            Group::cyclic(20, 10),
            Err(Error::Capacity { .. })
        ));
        assert!(Group::cyclic(0, DEFAULT_MAX_ORDER).is_err());
    }

    #[test]
    fn dihedral_relations() {
        let g = Group::dihedral(8, DEFAULT_MAX_ORDER).unwrap();
        let (a, b) = (1, 4);
        // b*a = a^3*b
        let a3b = g.mul(g.mul(g.mul(1, 1), 1), b);
        assert_eq!(g.mul(b, a), a3b);
        // b*a*b = a^{-1}
        assert_eq!(g.mul(g.mul(b, a), b), g.inv(a));
        assert!(!g.is_abelian());

        // D4 is the Klein four-group: abelian, every element an involution.
        let d4 = Group::dihedral(4, DEFAULT_MAX_ORDER).unwrap();
        assert!(d4.is_abelian());
        assert!((1..4).all(|i| d4.mul(i, i) == 0));

        assert!(matches!(
            Group::dihedral(7, DEFAULT_MAX_ORDER),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn symmetric_basics() {
        let g = Group::symmetric(1, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 1);
        let s3 = Group::symmetric(3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(matches!(
            Group::symmetric(6, DEFAULT_MAX_ORDER),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn s3_isomorphic_to_d6() {
        let s3 = Group::symmetric(3, DEFAULT_MAX_ORDER).unwrap();
        let d6 = Group::dihedral(6, DEFAULT_MAX_ORDER).unwrap();
        // Exhaustive search over relabelings fixing the identity.
        let perms = permutations_lex(5);
        let found = perms.iter().any(|tail| {
            let sigma: Vec<usize> = std::iter::once(0).chain(tail.iter().map(|&x| x + 1)).collect();
            (0..6).all(|i| {
                (0..6).all(|j| sigma[s3.mul(i, j)] == d6.mul(sigma[i], sigma[j]))
            })
        });
        assert!(found, "no table-preserving relabeling S3 -> D6");
    }

    #[test]
    fn product_basics() {
        let z1 = Group::cyclic(1, DEFAULT_MAX_ORDER).unwrap();
        let z6 = Group::cyclic(6, DEFAULT_MAX_ORDER).unwrap();
        let p = z1.direct_product(&z6, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(p.order(), 6);
        // Z1 x H is an isomorphic copy of H: identical table up to encoding.
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(p.mul(i, j), z6.mul(i, j));
            }
        }
        let z2 = Group::cyclic(2, DEFAULT_MAX_ORDER).unwrap();
        let z16 = Group::cyclic(16, DEFAULT_MAX_ORDER).unwrap();
        assert!(matches!(
            z2.direct_product(&z16, 16),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn cayley_table_validation() {
        let g = Group::from_cayley_table(vec![vec![0]], "triv".into()).unwrap();
        assert_eq!(g.order(), 1);

        let bad = Group::from_cayley_table(vec![vec![0, 1], vec![1, 1]], "bad".into());
        assert!(matches!(bad, Err(Error::InvalidTable(_))));

        // Z3 written with its identity at index 2: ingestion relabels it to 0.
        let mut raw = vec![vec![0usize; 3]; 3];
        let z3 = Group::cyclic(3, DEFAULT_MAX_ORDER).unwrap();
        let perm = [2usize, 1, 0];
        for i in 0..3 {
            for j in 0..3 {
                raw[i][j] = perm[z3.mul(perm[i], perm[j])];
            }
        }
        let g = Group::from_cayley_table(raw, "Z3-shifted".into()).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.order(), 3);
        // identity back at 0
        assert!((0..3).all(|j| g.mul(0, j) == j));
    }

    #[test]
    fn transposition_self_inverse() {
        let s3 = Group::symmetric(3, DEFAULT_MAX_ORDER).unwrap();
        for i in 0..6 {
            if s3.elem_order(i) == 2 {
                assert_eq!(s3.inv(i), i);
            }
        }
        // Round-trip the full 6x6 table through raw ingestion.
        let raw: Vec<Vec<usize>> = (0..6)
            .map(|i| (0..6).map(|j| s3.mul(i, j)).collect())
            .collect();
        let rebuilt = Group::from_cayley_table(raw, "S3-raw".into()).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(rebuilt.mul(i, j), s3.mul(i, j));
            }
        }
    }

    #[test]
    fn spec_parsing_round_trip() {
        for s in [
            "cyclic:12",
            "dihedral:8",
            "symmetric:3",
            "klein",
            "product:cyclic:2,cyclic:4",
            "product:product:cyclic:2,cyclic:2,cyclic:2",
        ] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build(DEFAULT_MAX_ORDER).unwrap();
        }
        assert!(GroupSpec::parse("frobnicate:3").is_err());
        assert!(GroupSpec::parse("cyclic:").is_err());
        assert!(GroupSpec::parse("cyclic:4junk").is_err());
        assert!(GroupSpec::parse("product:cyclic:2").is_err());
    }

    #[test]
    fn nested_product_order() {
        let spec = GroupSpec::parse("product:product:cyclic:2,cyclic:2,cyclic:2").unwrap();
        let g = spec.build(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
    }

    #[test]
    fn relabeled_is_valid_group() {
        let d8 = Group::dihedral(8, DEFAULT_MAX_ORDER).unwrap();
        let perm = [0usize, 3, 1, 2, 7, 5, 6, 4];
        let g = d8.relabeled(&perm).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert!(d8.relabeled(&[1, 0, 2, 3, 4, 5, 6, 7]).is_err());
    }
}
