//! Complete subgroup lattices with precomputed relation matrices.
//!
//! Subgroups are stored as `u128` bitmasks over element indices. Enumeration
//! uses cyclic extension: close each known subgroup extended by one outside
//! element, iterating to a fixpoint. Inclusion, pairwise permutability,
//! mutual permutability, normality, and quasinormality are all filled
//! eagerly so downstream chain computations are pure table lookups.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::group::Group;

/// Element set of a subgroup, one bit per element index.
pub type Mask = u128;

#[inline]
pub fn bit(i: usize) -> Mask {
    1u128 << i
}

/// Members of a mask in ascending element order.
pub fn mask_elems(mask: Mask, order: usize) -> impl Iterator<Item = usize> {
    (0..order).filter(move |&i| mask & bit(i) != 0)
}

/// Close `mask` under the group product (the identity is added if missing).
pub fn close_mask(g: &Group, mask: Mask) -> Mask {
    let mut closed = mask | bit(0);
    loop {
        let mut next = closed;
        let members: Vec<usize> = mask_elems(closed, g.order()).collect();
        for &x in &members {
            for &y in &members {
                next |= bit(g.mul(x, y));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// A nonempty subset containing `e` and closed under the product is a
/// subgroup (finiteness supplies inverses).
pub fn is_subgroup_mask(g: &Group, mask: Mask) -> bool {
    if mask & bit(0) == 0 {
        return false;
    }
    let members: Vec<usize> = mask_elems(mask, g.order()).collect();
    members
        .iter()
        .all(|&x| members.iter().all(|&y| mask & bit(g.mul(x, y)) != 0))
}

/// One subgroup in a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subgroup {
    pub id: usize,
    pub members: Mask,
    pub size: u32,
}

/// All subgroups of a group plus the relation matrices between them.
///
/// `subgroups[0]` is the trivial subgroup and the last entry is the whole
/// group; ids are stable across runs (sorted by size, then mask value).
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: Group,
    subgroups: Vec<Subgroup>,
    mask_to_id: HashMap<Mask, usize>,
    leq: Vec<Vec<bool>>,
    permutes: Vec<Vec<bool>>,
    mutually: Vec<Vec<bool>>,
    normal: Vec<bool>,
    quasinormal: Vec<bool>,
}

impl SubgroupLattice {
    /// Enumerate every subgroup of `g` and fill all relation matrices.
    pub fn new(g: Group) -> SubgroupLattice {
        let order = g.order();
        let mut masks: Vec<Mask> = vec![bit(0)];
        let mut seen: HashMap<Mask, ()> = HashMap::new();
        seen.insert(bit(0), ());
        let mut frontier = vec![bit(0)];
        while let Some(mask) = frontier.pop() {
            for x in 1..order {
                if mask & bit(x) != 0 {
                    continue;
                }
                let extended = close_mask(&g, mask | bit(x));
                if seen.insert(extended, ()).is_none() {
                    masks.push(extended);
                    frontier.push(extended);
                }
            }
        }
        masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
        let subgroups: Vec<Subgroup> = masks
            .iter()
            .enumerate()
            .map(|(id, &members)| {
                debug_assert_eq!(order as u32 % members.count_ones(), 0);
                Subgroup {
                    id,
                    members,
                    size: members.count_ones(),
                }
            })
            .collect();
        let mask_to_id = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let n = subgroups.len();

        let leq: Vec<Vec<bool>> = subgroups
            .iter()
            .map(|a| subgroups.iter().map(|b| a.members & b.members == a.members).collect())
            .collect();

        // Pairwise permutability: HK = KH, computed from product masks. Rows
        // fill in parallel; the collected order is fixed by the row index.
        let permutes: Vec<Vec<bool>> = subgroups
            .par_iter()
            .map(|a| {
                subgroups
                    .iter()
                    .map(|b| {
                        product_mask(&g, a.members, b.members)
                            == product_mask(&g, b.members, a.members)
                    })
                    .collect()
            })
            .collect();

        let normal: Vec<bool> = subgroups
            .iter()
            .map(|h| {
                (0..order).all(|x| {
                    let conj = mask_elems(h.members, order)
                        .fold(0 as Mask, |acc, m| acc | bit(g.mul(g.mul(x, m), g.inv(x))));
                    conj == h.members
                })
            })
            .collect();

        let quasinormal: Vec<bool> = (0..n).map(|i| (0..n).all(|j| permutes[i][j])).collect();

        // Mutual permutability: every subgroup of one permutes with the other.
        let mutually: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).all(|k| !leq[k][j] || permutes[i][k])
                            && (0..n).all(|k| !leq[k][i] || permutes[j][k])
                    })
                    .collect()
            })
            .collect();

        SubgroupLattice {
            group: g,
            subgroups,
            mask_to_id,
            leq,
            permutes,
            mutually,
            normal,
            quasinormal,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds the trivial subgroup
    }

    /// Id of the trivial subgroup.
    pub fn trivial_id(&self) -> usize {
        0
    }

    /// Id of the whole group.
    pub fn top_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn id_of_mask(&self, mask: Mask) -> Option<usize> {
        self.mask_to_id.get(&mask).copied()
    }

    /// Subgroup inclusion: `i ⊆ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// The element-set product `{xy : x ∈ h, y ∈ k}`; not a subgroup in
    /// general.
    pub fn set_product(&self, h: usize, k: usize) -> Mask {
        product_mask(&self.group, self.subgroups[h].members, self.subgroups[k].members)
    }

    /// HK = KH as sets.
    pub fn permutes(&self, h: usize, k: usize) -> bool {
        self.permutes[h][k]
    }

    /// Each of h, k permutes with every lattice subgroup of the other.
    pub fn mutually_permutable(&self, h: usize, k: usize) -> bool {
        self.mutually[h][k]
    }

    /// Invariant under conjugation by every group element.
    pub fn is_normal(&self, h: usize) -> bool {
        self.normal[h]
    }

    /// Permutes with every subgroup of the group.
    pub fn is_quasinormal(&self, h: usize) -> bool {
        self.quasinormal[h]
    }

    /// Covering pairs `(child, parent)` of the inclusion order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let covered = (0..n)
                    .all(|k| k == i || k == j || !(self.leq[i][k] && self.leq[k][j]));
                if covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// A display name for a subgroup: `{e}` for the trivial subgroup, the
    /// group label at the top, a generator form `<x>` or `<x,y>` when a
    /// generating set of size <= 2 exists, otherwise the member list.
    pub fn subgroup_name(&self, id: usize) -> String {
        let sub = &self.subgroups[id];
        let order = self.group.order();
        if sub.size == 1 {
            return "{e}".into();
        }
        if id == self.top_id() {
            return self.group.label().to_string();
        }
        let members: Vec<usize> = mask_elems(sub.members, order).collect();
        for &m in &members[1..] {
            if close_mask(&self.group, bit(m)) == sub.members {
                return format!("<{}>", self.group.elem_name(m));
            }
        }
        for (i, &m1) in members.iter().enumerate().skip(1) {
            for &m2 in &members[i + 1..] {
                if close_mask(&self.group, bit(m1) | bit(m2)) == sub.members {
                    return format!(
                        "<{},{}>",
                        self.group.elem_name(m1),
                        self.group.elem_name(m2)
                    );
                }
            }
        }
        let names: Vec<&str> = members.iter().map(|&m| self.group.elem_name(m)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// DOT rendering of the Hasse diagram, child -> parent.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
        for sub in &self.subgroups {
            out.push_str(&format!(
                "  n{} [label=\"{}\"];\n",
                sub.id,
                self.subgroup_name(sub.id).replace('"', "\\\"")
            ));
        }
        for (child, parent) in self.hasse_edges() {
            out.push_str(&format!("  n{child} -> n{parent};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Structured export of the full lattice.
    pub fn export(&self) -> LatticeExport {
        LatticeExport {
            group: self.group.label().to_string(),
            order: self.group.order(),
            subgroups: self
                .subgroups
                .iter()
                .map(|s| SubgroupExport {
                    id: s.id,
                    size: s.size,
                    name: self.subgroup_name(s.id),
                    members: mask_elems(s.members, self.group.order())
                        .map(|i| self.group.elem_name(i).to_string())
                        .collect(),
                })
                .collect(),
            leq: self.leq.clone(),
            permutes: self.permutes.clone(),
            mutually_permutable: self.mutually.clone(),
            normal: self.normal.clone(),
            quasinormal: self.quasinormal.clone(),
            hasse_edges: self.hasse_edges(),
        }
    }
}

fn product_mask(g: &Group, h: Mask, k: Mask) -> Mask {
    let mut out: Mask = 0;
    for x in mask_elems(h, g.order()) {
        for y in mask_elems(k, g.order()) {
            out |= bit(g.mul(x, y));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupExport {
    pub id: usize,
    pub size: u32,
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeExport {
    pub group: String,
    pub order: usize,
    pub subgroups: Vec<SubgroupExport>,
    pub leq: Vec<Vec<bool>>,
    pub permutes: Vec<Vec<bool>>,
    pub mutually_permutable: Vec<Vec<bool>>,
    pub normal: Vec<bool>,
    pub quasinormal: Vec<bool>,
    pub hasse_edges: Vec<(usize, usize)>,
}
