//! Library of named families: C_n, D_n, S_n, A_n, Q8, E_{p,k} and products.

use super::perm::{group_from_permutations, Permutation};
use super::{is_prime, FiniteGroup};
use crate::caps::Caps;
use crate::error::{Error, Result};

pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_flat_unchecked(1, vec![0], Some("1".into()))
}

/// Cyclic group `Z/nZ`; element `i` is the residue `i`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("C_n needs n >= 1".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(((a + b) % n) as u32);
        }
    }
    Ok(FiniteGroup::from_flat_unchecked(n, table, Some(format!("C{n}"))))
}

/// Dihedral group of order `2n`. Element `i + n*j` is `r^i s^j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("D_n needs n >= 1".into()));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, b) = (x % n, x / n);
        for y in 0..order {
            let (c, d) = (y % n, y / n);
            // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
            let i = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            let j = (b + d) % 2;
            table.push((i + n * j) as u32);
        }
    }
    Ok(FiniteGroup::from_flat_unchecked(order, table, Some(format!("D{n}"))))
}

/// Quaternion group. Elements `0..8` are `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> FiniteGroup {
    // unit (index 0..4 = 1,i,j,k) and sign
    fn unit_mul(a: usize, b: usize) -> (usize, bool) {
        // returns (unit, negative)
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    }
    let decode = |x: usize| (x / 2, x % 2 == 1);
    let encode = |u: usize, neg: bool| 2 * u + neg as usize;
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        let (ua, na) = decode(x);
        for y in 0..8 {
            let (ub, nb) = decode(y);
            let (u, n) = unit_mul(ua, ub);
            table.push(encode(u, n ^ na ^ nb) as u32);
        }
    }
    FiniteGroup::from_flat_unchecked(8, table, Some("Q8".into()))
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    symmetric_with_caps(n, &Caps::default())
}

fn symmetric_with_caps(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("S_n needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(trivial().with_label("S1"));
    }
    let swap = Permutation::from_cycles(n, &[vec![1, 2]])?;
    let cycle = Permutation::from_cycles(n, &[(1..=n).collect()])?;
    Ok(group_from_permutations(n, &[swap, cycle], caps)?.with_label(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    alternating_with_caps(n, &Caps::default())
}

fn alternating_with_caps(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("A_n needs n >= 1".into()));
    }
    if n < 3 {
        return Ok(trivial().with_label(format!("A{n}")));
    }
    // 3-cycles (1 2 i) generate A_n
    let gens = (3..=n)
        .map(|i| Permutation::from_cycles(n, &[vec![1, 2, i]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(group_from_permutations(n, &gens, caps)?.with_label(format!("A{n}")))
}

/// Direct product; element `(a, b)` has index `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    let label = match (a.label(), b.label()) {
        (Some(l), Some(r)) => Some(format!("{l}x{r}")),
        _ => None,
    };
    FiniteGroup::from_flat_unchecked(n, table, label)
}

/// Product of a list of factors, folded left to right.
pub fn direct_product_all(factors: &[FiniteGroup], caps: &Caps) -> Result<FiniteGroup> {
    let total: u128 = factors.iter().map(|f| f.order() as u128).product();
    caps.check_group_order(total)?;
    Ok(match factors.split_first() {
        None => trivial(),
        Some((first, rest)) => rest.iter().fold(first.clone(), |acc, f| direct_product(&acc, f)),
    })
}

/// `S^k`; `S^0` is trivial.
pub fn power(s: &FiniteGroup, k: usize, caps: &Caps) -> Result<FiniteGroup> {
    let g = direct_product_all(&vec![s.clone(); k], caps)?;
    Ok(match s.label() {
        Some(l) if k > 1 => g.with_label(format!("{l}^{k}")),
        _ => g,
    })
}

/// Elementary abelian group `(C_p)^k`.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("E_(p,k) needs p prime, got {p}")));
    }
    if k == 0 {
        return Ok(trivial());
    }
    Ok(power(&cyclic(p)?, k, &Caps::default())?.with_label(format!("E{p}^{k}")))
}

/// Builds a named group from its family letter and parameters.
///
/// Families: `C`/`D`/`S`/`A` take `n`; `Q` takes `n = 8`; `E` takes `p` and `k`;
/// `1`/`trivial` take nothing.
pub fn named_group(name: &str, n: Option<usize>, p: Option<usize>, k: Option<usize>, caps: &Caps) -> Result<FiniteGroup> {
    let need_n = || n.ok_or_else(|| Error::InvalidParameter(format!("{name} needs parameter n")));
    let g = match name {
        "1" | "trivial" => trivial(),
        "C" | "Z" => cyclic(need_n()?)?,
        "D" => dihedral(need_n()?)?,
        "S" => symmetric_with_caps(need_n()?, caps)?,
        "A" => alternating_with_caps(need_n()?, caps)?,
        "Q" | "Q8" => match n {
            None | Some(8) => quaternion8(),
            Some(m) => return Err(Error::InvalidParameter(format!("only Q8 is available, not Q{m}"))),
        },
        "E" => {
            let p = p.ok_or_else(|| Error::InvalidParameter("E needs parameter p".into()))?;
            let k = k.or(n).ok_or_else(|| Error::InvalidParameter("E needs parameter k".into()))?;
            elementary_abelian(p, k)?
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    caps.check_group_order(g.order() as u128)?;
    Ok(g)
}

/// Parses shorthand like `S3`, `C4`, `Q8`, `V4`, `E2^3`, `D4`, `S3xC5`.
pub fn parse_group_name(text: &str, caps: &Caps) -> Result<FiniteGroup> {
    let parts: Vec<&str> = text.split(['x', '×']).map(str::trim).collect();
    if parts.len() > 1 {
        let factors = parts.iter().map(|p| parse_group_name(p, caps)).collect::<Result<Vec<_>>>()?;
        let g = direct_product_all(&factors, caps)?;
        return Ok(g.with_label(parts.join("x")));
    }
    let t = parts[0];
    if t == "1" || t == "trivial" {
        return Ok(trivial());
    }
    if t == "Q8" {
        return Ok(quaternion8());
    }
    if t == "V4" {
        return Ok(elementary_abelian(2, 2)?.with_label("V4"));
    }
    let bad = || Error::UnknownName(text.to_string());
    let (family, rest) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
    if family == "E" {
        let (p, k) = rest.split_once('^').ok_or_else(bad)?;
        let p = p.parse().map_err(|_| bad())?;
        let k = k.parse().map_err(|_| bad())?;
        return named_group("E", None, Some(p), Some(k), caps);
    }
    // C2^3 style powers
    let (n, exp) = match rest.split_once('^') {
        Some((n, e)) => (n, Some(e.parse::<usize>().map_err(|_| bad())?)),
        None => (rest, None),
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    let base = named_group(family, Some(n), None, None, caps)?;
    match exp {
        Some(e) => power(&base, e, caps),
        None => Ok(base),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_order(g: &FiniteGroup, k: usize) -> usize {
        g.elements().filter(|&a| g.element_order(a) == k).count()
    }

    #[test]
    fn families_are_groups() {
        for g in [
            cyclic(4).unwrap(),
            dihedral(4).unwrap(),
            dihedral(1).unwrap(),
            dihedral(2).unwrap(),
            quaternion8(),
            symmetric(4).unwrap(),
            alternating(4).unwrap(),
            elementary_abelian(3, 2).unwrap(),
        ] {
            g.validate().unwrap_or_else(|e| panic!("{g:?}: {e}"));
        }
    }

    #[test]
    fn orders() {
        assert_eq!(cyclic(4).unwrap().order(), 4);
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        let g = direct_product(&symmetric(3).unwrap(), &cyclic(5).unwrap());
        assert_eq!(g.order(), 30);
        assert_eq!(g.label(), Some("S3xC5"));
        g.validate().unwrap();
    }

    #[test]
    fn q8_has_one_involution() {
        let q = quaternion8();
        // brute-force order profile
        assert_eq!(count_order(&q, 2), 1);
        assert_eq!(count_order(&q, 4), 6);
        assert_eq!(q.mul(2, 2), 1); // i^2 = -1
        assert_eq!(q.mul(2, 4), 6); // ij = k
        assert_eq!(q.mul(4, 2), 7); // ji = -k
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(named_group("E", None, Some(4), Some(2), &Caps::default()), Err(Error::InvalidParameter(_))));
        assert!(matches!(named_group("C", Some(0), None, None, &Caps::default()), Err(Error::InvalidParameter(_))));
        assert!(matches!(named_group("M", Some(11), None, None, &Caps::default()), Err(Error::UnknownName(_))));
    }

    #[test]
    fn shorthand() {
        let caps = Caps::default();
        assert_eq!(parse_group_name("S3xC5", &caps).unwrap().order(), 30);
        assert_eq!(parse_group_name("E2^3", &caps).unwrap().order(), 8);
        assert_eq!(parse_group_name("C2^2", &caps).unwrap().order(), 4);
        assert_eq!(parse_group_name("Q8", &caps).unwrap().order(), 8);
        assert!(parse_group_name("Foo", &caps).is_err());
    }
}
