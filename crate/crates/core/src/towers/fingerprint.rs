use super::Tower;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{invariant_signature, is_isomorphic, min_generators, normal_subgroups, quotient, FiniteGroup};
use crate::par;
use crate::words::verbal::advance;

/// Largest order with an exact canonical table.
pub const CANONICAL_MAX: usize = 16;

const NONE: u32 = u32::MAX;

/// Table relabeled by breadth-first search from the generator tuple, or
/// `None` if the tuple does not generate.
fn bfs_code(g: &FiniteGroup, gens: &[usize]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut label = vec![NONE; n];
    let mut order = Vec::with_capacity(n);
    label[g.identity()] = 0;
    order.push(g.identity());
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for &s in gens {
            let y = g.mul(x, s);
            if label[y] == NONE {
                label[y] = order.len() as u32;
                order.push(y);
            }
        }
        i += 1;
    }
    if order.len() < n {
        return None;
    }
    let mut code = Vec::with_capacity(n * n);
    for &x in &order {
        for &y in &order {
            code.push(label[g.mul(x, y)]);
        }
    }
    Some(code)
}

/// Lexicographically least BFS-relabeled table over all generating tuples
/// of minimal length. Two groups get equal codes iff they are isomorphic.
pub fn canonical_code(g: &FiniteGroup, caps: &Caps) -> Result<Vec<u32>> {
    let n = g.order();
    if n > CANONICAL_MAX {
        return Err(Error::InvalidParameter(format!("canonical codes only up to order {CANONICAL_MAX}")));
    }
    let d = min_generators(g, caps)?;
    if d == 0 {
        return Ok(vec![0]);
    }
    let best = par::fold_range(
        n,
        || None::<Vec<u32>>,
        |mut best, first| {
            let mut tuple = vec![0; d];
            tuple[0] = first;
            loop {
                if let Some(c) = bfs_code(g, &tuple) {
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
                if !advance(&mut tuple[1..], n) {
                    break;
                }
            }
            best
        },
        |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        },
    );
    Ok(best.expect("some tuple of length d(G) generates"))
}

/// One isomorphism class of quotients.
#[derive(Clone, Debug)]
pub struct FingerprintEntry {
    /// A representative quotient.
    pub group: FiniteGroup,
    /// Canonical table for orders up to [`CANONICAL_MAX`].
    pub code: Option<Vec<u32>>,
    pub signature: Vec<(usize, usize)>,
}

impl FingerprintEntry {
    fn new(group: FiniteGroup, caps: &Caps) -> Result<Self> {
        let code = if group.order() <= CANONICAL_MAX { Some(canonical_code(&group, caps)?) } else { None };
        let signature = invariant_signature(&group);
        Ok(FingerprintEntry { group, code, signature })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    fn same_class(&self, other: &FingerprintEntry, caps: &Caps) -> Result<bool> {
        if self.order() != other.order() || self.signature != other.signature {
            return Ok(false);
        }
        match (&self.code, &other.code) {
            (Some(a), Some(b)) => Ok(a == b),
            _ => is_isomorphic(&self.group, &other.group, caps),
        }
    }
}

/// Isomorphism classes of the quotients of order at most `index_bound`.
#[derive(Clone, Debug)]
pub struct Fingerprint {
    pub index_bound: usize,
    pub entries: Vec<FingerprintEntry>,
}

impl Fingerprint {
    pub fn empty(index_bound: usize) -> Self {
        Fingerprint { index_bound, entries: Vec::new() }
    }

    /// Adds the class of `g`; false if it was already present.
    pub fn insert(&mut self, g: FiniteGroup, caps: &Caps) -> Result<bool> {
        if g.order() > self.index_bound {
            return Err(Error::InvalidParameter(format!("order {} exceeds bound {}", g.order(), self.index_bound)));
        }
        let e = FingerprintEntry::new(g, caps)?;
        for x in &self.entries {
            if x.same_class(&e, caps)? {
                return Ok(false);
            }
        }
        self.entries.push(e);
        self.entries.sort_by(|a, b| {
            (a.order(), &a.code, &a.signature).cmp(&(b.order(), &b.code, &b.signature))
        });
        Ok(true)
    }

    pub fn contains(&self, g: &FiniteGroup, caps: &Caps) -> Result<bool> {
        let e = FingerprintEntry::new(g.clone(), caps)?;
        for x in &self.entries {
            if x.same_class(&e, caps)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn is_subset(&self, other: &Fingerprint, caps: &Caps) -> Result<bool> {
        for e in &self.entries {
            if !other.contains(&e.group, caps)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as sets of isomorphism classes.
    pub fn same_classes(&self, other: &Fingerprint, caps: &Caps) -> Result<bool> {
        Ok(self.entries.len() == other.entries.len() && self.is_subset(other, caps)?)
    }

    pub fn count_of_order(&self, n: usize) -> usize {
        self.entries.iter().filter(|e| e.order() == n).count()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.entries.iter().map(FingerprintEntry::order).collect()
    }
}

pub fn fingerprint(t: &Tower, index_bound: usize, caps: &Caps) -> Result<Fingerprint> {
    if index_bound == 0 {
        return Err(Error::InvalidParameter("index bound must be positive".into()));
    }
    let mut fp = Fingerprint::empty(index_bound);
    for level in t.levels() {
        let kernels: Vec<_> =
            normal_subgroups(level, caps)?.into_iter().filter(|n| n.index() <= index_bound).collect();
        let quotients = par::map(&kernels, |n| quotient(level, n).map(|q| q.0));
        for q in quotients {
            fp.insert(q?, caps)?;
        }
    }
    Ok(fp)
}

/// Whether both towers have the same quotients up to `index_bound`.
pub fn compare_fingerprints(a: &Tower, b: &Tower, index_bound: usize, caps: &Caps) -> Result<bool> {
    fingerprint(a, index_bound, caps)?.same_classes(&fingerprint(b, index_bound, caps)?, caps)
}
