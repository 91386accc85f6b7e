//! Set partitions, the adjacency relation used for interval coverings,
//! joins, and exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    ground: BTreeSet<String>,
    /// Disjoint nonempty blocks covering the ground set, kept sorted by
    /// their smallest element.
    blocks: Vec<BTreeSet<String>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<String>>) -> Result<Self> {
        let mut ground = BTreeSet::new();
        let mut normalized: Vec<BTreeSet<String>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block in partition".into()));
            }
            let set: BTreeSet<String> = block.into_iter().collect();
            for label in &set {
                if !ground.insert(label.clone()) {
                    return Err(Error::Invalid(format!("label `{label}` in two blocks")));
                }
            }
            normalized.push(set);
        }
        if ground.is_empty() {
            return Err(Error::Invalid("partition of the empty set".into()));
        }
        normalized.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        Ok(SetPartition { ground, blocks: normalized })
    }

    pub fn from_strs(blocks: &[&[&str]]) -> Result<Self> {
        SetPartition::new(
            blocks
                .iter()
                .map(|b| b.iter().map(|s| s.to_string()).collect())
                .collect(),
        )
    }

    pub fn ground(&self) -> &BTreeSet<String> {
        &self.ground
    }

    pub fn blocks(&self) -> &[BTreeSet<String>] {
        &self.blocks
    }

    pub fn n_parts(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn block_of(&self, label: &str) -> Option<&BTreeSet<String>> {
        self.blocks.iter().find(|b| b.contains(label))
    }
}

/// The paper's adjacency: each block A of `p1` is either a union of some
/// blocks of `p2` or a subset of one block of `p2`.
pub fn partition_adjacent(p1: &SetPartition, p2: &SetPartition) -> Result<bool> {
    if p1.ground != p2.ground {
        return Err(Error::GroundSetMismatch);
    }
    for a in &p1.blocks {
        let subset_of_one = p2.blocks.iter().any(|b| a.is_subset(b));
        // union of some blocks of p2: every block meeting a lies inside a
        let union_of_some = p2
            .blocks
            .iter()
            .filter(|b| b.iter().any(|x| a.contains(x)))
            .all(|b| b.is_subset(a));
        if !subset_of_one && !union_of_some {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finest partition coarser than both (union-find over shared labels).
pub fn partition_join(p1: &SetPartition, p2: &SetPartition) -> Result<SetPartition> {
    if p1.ground != p2.ground {
        return Err(Error::GroundSetMismatch);
    }
    let labels: Vec<&String> = p1.ground.iter().collect();
    let index: BTreeMap<&String, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let ra = find(parent, a);
        let rb = find(parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for p in [p1, p2] {
        for block in &p.blocks {
            let mut it = block.iter();
            let first = index[it.next().unwrap()];
            for label in it {
                union(&mut parent, first, index[label]);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, label) in labels.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push((*label).clone());
    }
    SetPartition::new(groups.into_values().collect())
}

/// All set partitions of {1..n} (labels "1".."n"), via restricted growth
/// strings. Bell(5) = 52.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let max_block = *rgs.iter().max().unwrap();
        let mut blocks: Vec<Vec<String>> = vec![Vec::new(); max_block + 1];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push((i + 1).to_string());
        }
        out.push(SetPartition::new(blocks).unwrap());
        // next restricted growth string
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_adjacency_examples() {
        // {u},{v,w} vs {u,v},{w}: not adjacent
        let p1 = SetPartition::from_strs(&[&["u"], &["v", "w"]]).unwrap();
        let p2 = SetPartition::from_strs(&[&["u", "v"], &["w"]]).unwrap();
        assert!(!partition_adjacent(&p1, &p2).unwrap());
        // {u},{v,w} vs {u,v,w}: adjacent
        let p3 = SetPartition::from_strs(&[&["u", "v", "w"]]).unwrap();
        assert!(partition_adjacent(&p1, &p3).unwrap());
        // reflexive: each block is a union of itself
        assert!(partition_adjacent(&p1, &p1).unwrap());
    }

    #[test]
    fn ground_set_mismatch_rejected() {
        let p1 = SetPartition::from_strs(&[&["u"]]).unwrap();
        let p2 = SetPartition::from_strs(&[&["v"]]).unwrap();
        assert!(partition_adjacent(&p1, &p2).is_err());
    }

    #[test]
    fn join_of_paper_example() {
        let p1 = SetPartition::from_strs(&[&["a"], &["b"], &["c", "d", "e"]]).unwrap();
        let p2 = SetPartition::from_strs(&[&["a", "b"], &["c"], &["d", "e"]]).unwrap();
        let join = partition_join(&p1, &p2).unwrap();
        let expect = SetPartition::from_strs(&[&["a", "b"], &["c", "d", "e"]]).unwrap();
        assert_eq!(join, expect);
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(enumerate_partitions(1).len(), 1);
        assert_eq!(enumerate_partitions(2).len(), 2);
        assert_eq!(enumerate_partitions(3).len(), 5);
        assert_eq!(enumerate_partitions(4).len(), 15);
        assert_eq!(enumerate_partitions(5).len(), 52);
    }

    #[test]
    fn overlapping_blocks_rejected() {
        assert!(SetPartition::from_strs(&[&["a", "b"], &["b"]]).is_err());
        assert!(SetPartition::from_strs(&[&[]]).is_err());
    }
}
