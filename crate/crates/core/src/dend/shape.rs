//! Products in the free dendriform algebra on one generator, basis `PBT`.
//!
//! For `t = t_l v t_r` and `s = s_l v s_r`:
//!
//! ```text
//! t < s = t_l v (t_r * s)
//! t > s = (t * s_l) v s_r
//! ```
//!
//! where `*` is `<` plus `>`, and the leaf acts as a two-sided unit for `*`.
//! Results are returned as multisets of trees (each tree listed once per
//! occurrence).

use crate::tree::Tree;

pub fn prec(t: &Tree, s: &Tree) -> Vec<Tree> {
    let (tl, tr) = t.split().expect("left operand of < must not be the unit");
    debug_assert!(!s.is_leaf());
    star(tr, s)
        .into_iter()
        .map(|r| Tree::graft(tl.clone(), r))
        .collect()
}

pub fn succ(t: &Tree, s: &Tree) -> Vec<Tree> {
    let (sl, sr) = s.split().expect("right operand of > must not be the unit");
    debug_assert!(!t.is_leaf());
    star(t, sl)
        .into_iter()
        .map(|r| Tree::graft(r, sr.clone()))
        .collect()
}

/// Associative product, with the leaf as unit.
pub fn star(t: &Tree, s: &Tree) -> Vec<Tree> {
    if t.is_leaf() {
        return vec![s.clone()];
    }
    if s.is_leaf() {
        return vec![t.clone()];
    }
    let mut out = prec(t, s);
    out.extend(succ(t, s));
    out
}
