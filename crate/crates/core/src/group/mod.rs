//! Finite groups as dense multiplication tables.

mod bitset;
mod hom;
mod iso;
mod named;
mod perm;
mod series;
mod spec;
mod subgroup;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use bitset::ElemSet;
pub use hom::GroupHom;
pub use iso::{invariant_signature, is_isomorphic, is_isomorphic_witness};
pub use named::{
    alternating, cyclic, dihedral, direct_product, direct_product_all, elementary_abelian,
    named_group, parse_group_name, power, quaternion8, symmetric, trivial,
};
pub use perm::{group_from_permutations, parse_cycles, Permutation};
pub use series::{composition_series, composition_series_with, CompositionSeries, SeriesChoice};
pub use spec::GroupSpec;
pub use subgroup::{
    conjugacy_classes, core, count_subgroups_of_index, cyclic_subgroups, generated_subgroup,
    is_normal, is_simple, join, maximal_subgroups, min_generators, normal_closure,
    normal_subgroups, quotient, subgroup_as_group, subgroups, SubgroupSet,
};

use crate::error::{Error, Result};

/// Element index in `0..order`; `0` is always the identity.
pub type Elem = usize;

struct GroupData {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    label: Option<String>,
    generators: OnceLock<Vec<Elem>>,
}

/// A finite group given by its full multiplication table.
///
/// Cloning is cheap: the table is shared behind an `Arc`.
#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking the group axioms.
    ///
    /// Element `0` must be the identity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry {x} out of range in row {i}")));
                }
                flat.push(x as u32);
            }
        }
        Self::from_flat(n, flat, None)
    }

    /// Checked constructor over a flat table.
    pub(crate) fn from_flat(order: usize, table: Vec<u32>, label: Option<String>) -> Result<Self> {
        for a in 0..order {
            if table[a] as usize != a || table[a * order] as usize != a {
                return Err(Error::InvalidTable("element 0 is not a two-sided identity".into()));
            }
        }
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    if table[b * order + a] != 0 {
                        return Err(Error::InvalidTable(format!("{b} is a one-sided inverse of {a}")));
                    }
                    inverse[a] = b as u32;
                    break;
                }
            }
            if inverse[a] == u32::MAX {
                return Err(Error::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        let g = FiniteGroup::assemble(order, table, inverse, label);
        g.check_associative()?;
        Ok(g)
    }

    /// Constructor for tables that are groups by construction.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<u32>, label: Option<String>) -> Self {
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row.iter().position(|&x| x == 0).expect("group table row lacks identity") as u32;
        }
        FiniteGroup::assemble(order, table, inverse, label)
    }

    fn assemble(order: usize, table: Vec<u32>, inverse: Vec<u32>, label: Option<String>) -> Self {
        FiniteGroup {
            data: Arc::new(GroupData { order, table, inverse, label, generators: OnceLock::new() }),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.data.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.data.table[a * self.data.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.data.inverse[a] as Elem
    }

    /// `h⁻¹ g h`
    #[inline]
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let mut base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn label(&self) -> Option<&str> {
        self.data.label.as_deref()
    }

    /// Same group with a different display name.
    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let d = &self.data;
        FiniteGroup::assemble(d.order, d.table.clone(), d.inverse.clone(), Some(label.into()))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators()
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators()[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, |acc, o| lcm(acc, o))
    }

    /// A small generating set, chosen greedily (largest element order first).
    ///
    /// Not necessarily minimal; see [`min_generators`] for that.
    pub fn generators(&self) -> &[Elem] {
        self.data.generators.get_or_init(|| {
            let n = self.order();
            let mut by_order: Vec<Elem> = (1..n).collect();
            let orders: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
            by_order.sort_by_key(|&a| (std::cmp::Reverse(orders[a]), a));
            let mut gens = Vec::new();
            let mut span = ElemSet::from_elems(n, [0]);
            for a in by_order {
                if span.len() == n {
                    break;
                }
                if !span.contains(a) {
                    gens.push(a);
                    span = subgroup::closure(self, &gens);
                }
            }
            gens
        })
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Full associativity/identity/inverse check. O(n³).
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidTable("identity fails".into()));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::InvalidTable(format!("inverse of {a} fails")));
            }
        }
        self.check_associative()
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Sorted list of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Some(l) => write!(f, "FiniteGroup({l}, order {})", self.order()),
            None => write!(f, "FiniteGroup(order {})", self.order()),
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Some(l) => f.write_str(l),
            None => write!(f, "<group of order {}>", self.order()),
        }
    }
}

#[cfg(test)]
pub(crate) fn perm_closure_for_tests(gens: &[Permutation], caps: &crate::Caps) -> (FiniteGroup, Vec<Permutation>) {
    perm::closure_with_elements(gens[0].degree(), gens, caps).unwrap()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_table_accepts_c3() {
        let g = FiniteGroup::from_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.element_order(1), 3);
        g.validate().unwrap();
    }

    #[test]
    fn from_table_rejects_nonassociative() {
        // a Latin square with identity 0 that is not associative
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&rows), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn from_table_rejects_bad_identity() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table(&rows).is_err());
    }

    #[test]
    fn pow_and_exponent() {
        let c4 = cyclic(4).unwrap();
        assert_eq!(c4.pow(1, 2), 2);
        assert_eq!(c4.pow(1, -1), 3);
        assert_eq!(c4.exponent(), 4);
        assert_eq!(symmetric(3).unwrap().exponent(), 6);
    }
}
