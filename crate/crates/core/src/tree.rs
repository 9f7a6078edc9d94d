//! Planar binary trees.
//!
//! A tree with `n + 1` leaves indexes a degree-`n` basis element of the free
//! dendriform algebra on one generator. Trees are immutable and share
//! subtrees through `Arc`, so grafting is O(1) and cloning is cheap.
//!
//! The canonical text form is `|` for the leaf and `(LR)` for a grafting.
//! Canonical order is lexicographic order on that text.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{AlgebraError, Result};

#[derive(Clone)]
pub enum Tree {
    Leaf,
    Graft(Arc<Node>),
}

#[derive(Debug)]
pub struct Node {
    left: Tree,
    right: Tree,
    leaves: usize,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    pub fn graft(left: Tree, right: Tree) -> Tree {
        let leaves = left.leaf_count() + right.leaf_count();
        Tree::Graft(Arc::new(Node {
            left,
            right,
            leaves,
        }))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Graft(n) => n.leaves,
        }
    }

    /// Number of internal vertices, i.e. the degree of the operation the tree represents.
    pub fn degree(&self) -> usize {
        self.leaf_count() - 1
    }

    pub fn split(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Graft(n) => Some((&n.left, &n.right)),
        }
    }

    pub fn left(&self) -> Option<&Tree> {
        self.split().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Tree> {
        self.split().map(|(_, r)| r)
    }

    pub fn mirror(&self) -> Tree {
        match self.split() {
            None => Tree::Leaf,
            Some((l, r)) => Tree::graft(r.mirror(), l.mirror()),
        }
    }

    pub fn encode(&self) -> String {
        let mut out = String::with_capacity(2 * self.leaf_count());
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut String) {
        match self.split() {
            None => out.push('|'),
            Some((l, r)) => {
                out.push('(');
                l.encode_into(out);
                r.encode_into(out);
                out.push(')');
            }
        }
    }

    pub fn decode(text: &str) -> Result<Tree> {
        let bytes = text.as_bytes();
        let (tree, end) = decode_at(bytes, 0)?;
        if end != bytes.len() {
            return Err(AlgebraError::Parse {
                offset: end,
                message: "trailing input after tree".into(),
            });
        }
        Ok(tree)
    }
}

fn decode_at(bytes: &[u8], pos: usize) -> Result<(Tree, usize)> {
    match bytes.get(pos) {
        Some(b'|') => Ok((Tree::Leaf, pos + 1)),
        Some(b'(') => {
            let (l, pos) = decode_at(bytes, pos + 1)?;
            let (r, pos) = decode_at(bytes, pos)?;
            match bytes.get(pos) {
                Some(b')') => Ok((Tree::graft(l, r), pos + 1)),
                Some(_) => Err(AlgebraError::Parse {
                    offset: pos,
                    message: "expected `)`".into(),
                }),
                None => Err(AlgebraError::Parse {
                    offset: pos,
                    message: "unexpected end of input, expected `)`".into(),
                }),
            }
        }
        Some(_) => Err(AlgebraError::Parse {
            offset: pos,
            message: "expected `|` or `(`".into(),
        }),
        None => Err(AlgebraError::Parse {
            offset: pos,
            message: "unexpected end of input, expected a tree".into(),
        }),
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => true,
            (Tree::Graft(a), Tree::Graft(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.leaves == b.leaves && a.left == b.left && a.right == b.right)
            }
            _ => false,
        }
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.split() {
            None => state.write_u8(1),
            Some((l, r)) => {
                state.write_u8(0);
                l.hash(state);
                r.hash(state);
            }
        }
    }
}

// The encoding is prefix-free and `(` sorts before `|`, so text order is:
// any graft before the leaf, grafts compared on (left, right).
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => Ordering::Equal,
            (Tree::Graft(_), Tree::Leaf) => Ordering::Less,
            (Tree::Leaf, Tree::Graft(_)) => Ordering::Greater,
            (Tree::Graft(a), Tree::Graft(b)) => {
                if Arc::ptr_eq(a, b) {
                    return Ordering::Equal;
                }
                a.left.cmp(&b.left).then_with(|| a.right.cmp(&b.right))
            }
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.encode())
    }
}

impl FromStr for Tree {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Tree::decode(s)
    }
}

pub fn graft(left: Tree, right: Tree) -> Tree {
    Tree::graft(left, right)
}

/// `right_comb(n) = graft(Leaf, right_comb(n - 1))`.
pub fn right_comb(leaves: usize) -> Result<Tree> {
    if leaves == 0 {
        return Err(AlgebraError::invalid("a comb needs at least one leaf"));
    }
    Ok((1..leaves).fold(Tree::Leaf, |acc, _| Tree::graft(Tree::Leaf, acc)))
}

/// `left_comb(n) = graft(left_comb(n - 1), Leaf)`.
pub fn left_comb(leaves: usize) -> Result<Tree> {
    if leaves == 0 {
        return Err(AlgebraError::invalid("a comb needs at least one leaf"));
    }
    Ok((1..leaves).fold(Tree::Leaf, |acc, _| Tree::graft(acc, Tree::Leaf)))
}

static ENUM_CACHE: OnceLock<Mutex<Vec<Arc<[Tree]>>>> = OnceLock::new();

/// All trees with `leaves` leaves, in canonical order.
pub fn enumerate_trees(leaves: usize) -> Result<Arc<[Tree]>> {
    if leaves == 0 {
        return Err(AlgebraError::invalid("trees have at least one leaf"));
    }
    let cache = ENUM_CACHE.get_or_init(|| Mutex::new(vec![Arc::from(vec![Tree::Leaf])]));
    let mut memo = cache.lock().expect("tree cache poisoned");
    while memo.len() < leaves {
        let n = memo.len() + 1;
        let mut trees = Vec::new();
        for k in 1..n {
            for l in memo[k - 1].iter() {
                for r in memo[n - k - 1].iter() {
                    trees.push(Tree::graft(l.clone(), r.clone()));
                }
            }
        }
        trees.sort();
        memo.push(Arc::from(trees));
    }
    Ok(memo[leaves - 1].clone())
}

/// Catalan number `C_n` by the convolution recurrence.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![1u128; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(&*enumerate_trees(1).unwrap(), &[Tree::Leaf]);
        assert_eq!(enumerate_trees(4).unwrap().len(), 5);
        assert_eq!(enumerate_trees(8).unwrap().len(), 429);
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn counts_match_catalan_recurrence() {
        for n in 1..=12 {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len() as u128, catalan(n - 1));
            assert!(trees.iter().all(|t| t.leaf_count() == n));
        }
    }

    #[test]
    fn order_is_text_order() {
        for n in 1..=7 {
            let trees = enumerate_trees(n).unwrap();
            let codes: Vec<String> = trees.iter().map(Tree::encode).collect();
            let mut sorted = codes.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(codes, sorted);
        }
        // mixed sizes compare like their encodings as well
        let mut all: Vec<Tree> = (1..=5)
            .flat_map(|n| enumerate_trees(n).unwrap().to_vec())
            .collect();
        all.sort();
        let codes: Vec<String> = all.iter().map(Tree::encode).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
    }

    #[test]
    fn pbt4_canonical_order() {
        let codes: Vec<String> = enumerate_trees(4)
            .unwrap()
            .iter()
            .map(Tree::encode)
            .collect();
        assert_eq!(
            codes,
            [
                "(((||)|)|)",
                "((|(||))|)",
                "((||)(||))",
                "(|((||)|))",
                "(|(|(||)))"
            ]
        );
    }

    #[test]
    fn grafting() {
        assert_eq!(graft(Tree::Leaf, Tree::Leaf).encode(), "(||)");
        let rl = graft(Tree::Leaf, graft(Tree::Leaf, Tree::Leaf));
        assert_eq!(rl.encode(), "(|(||))");
        assert_eq!(rl.leaf_count(), 3);
        assert_eq!(rl.degree(), 2);
    }

    #[test]
    fn combs() {
        assert_eq!(right_comb(2).unwrap(), left_comb(2).unwrap());
        assert_eq!(right_comb(1).unwrap(), Tree::Leaf);
        assert_eq!(right_comb(4).unwrap().encode(), "(|(|(||)))");
        assert_eq!(left_comb(4).unwrap().encode(), "(((||)|)|)");
        assert!(right_comb(0).is_err());
        assert!(left_comb(0).is_err());
        for n in 1..=10 {
            assert_eq!(left_comb(n).unwrap().mirror(), right_comb(n).unwrap());
        }
    }

    #[test]
    fn mirror_involution_permutes() {
        assert_eq!(Tree::Leaf.mirror(), Tree::Leaf);
        assert_eq!(right_comb(5).unwrap().mirror(), left_comb(5).unwrap());
        for n in 1..=7 {
            let trees = enumerate_trees(n).unwrap();
            let mut mirrored: Vec<Tree> = trees.iter().map(Tree::mirror).collect();
            for (a, m) in trees.iter().zip(&mirrored) {
                assert_eq!(&m.mirror(), a);
            }
            mirrored.sort();
            assert_eq!(&mirrored[..], &trees[..]);
        }
    }

    #[test]
    fn encoding() {
        assert_eq!(Tree::Leaf.encode(), "|");
        assert_eq!(
            t("(|(||))"),
            graft(Tree::Leaf, graft(Tree::Leaf, Tree::Leaf))
        );
        for n in 1..=10 {
            let trees = enumerate_trees(n).unwrap();
            let codes: std::collections::HashSet<String> = trees.iter().map(Tree::encode).collect();
            assert_eq!(codes.len(), trees.len());
            for tree in trees.iter() {
                assert_eq!(&Tree::decode(&tree.encode()).unwrap(), tree);
            }
        }
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert_eq!(
            Tree::decode("(|"),
            Err(AlgebraError::Parse {
                offset: 2,
                message: "unexpected end of input, expected a tree".into()
            })
        );
        assert!(matches!(
            Tree::decode("(||)|"),
            Err(AlgebraError::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            Tree::decode("(|x)"),
            Err(AlgebraError::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            Tree::decode(""),
            Err(AlgebraError::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            Tree::decode("(|||)"),
            Err(AlgebraError::Parse { offset: 3, .. })
        ));
    }
}
