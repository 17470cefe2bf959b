use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::FiniteGroup;
use crate::caps::Caps;
use crate::error::{Error, Result};

/// A permutation of `{1..degree}`, stored zero-based as images.
///
/// Products act left to right: `(p * q)(x) = q(p(x))`, so
/// `(1 2)(1 2 3)` first applies `(1 2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// From zero-based images; checks bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u32).collect() })
    }

    /// From one-based cycles such as `[[1, 2], [3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!("point {p} outside 1..={degree}")));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                used[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    /// One-based cycles of length > 1.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses cycle notation such as `"(1 2)(3 4)"` (commas also accepted).
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(Error::InvalidPermutation(format!("expected '(' in `{text}`")));
        };
        let close = stripped
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{text}`")))?;
        let body = &stripped[..close];
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad point `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = stripped[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Closes the generators under composition and returns the table group.
///
/// Elements are numbered in breadth-first order from the identity.
pub fn group_from_permutations(degree: usize, generators: &[Permutation], caps: &Caps) -> Result<FiniteGroup> {
    let (g, _) = closure_with_elements(degree, generators, caps)?;
    Ok(g)
}

pub(crate) fn closure_with_elements(
    degree: usize,
    generators: &[Permutation],
    caps: &Caps,
) -> Result<(FiniteGroup, Vec<Permutation>)> {
    if degree == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!("{g} has degree {} not {degree}", g.degree())));
        }
    }
    let gens: Vec<&Permutation> = generators.iter().collect();
    let mut elems = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, u32> = HashMap::from([(elems[0].clone(), 0)]);
    // right[x][i] = x * gens[i]; parent[x] = (y, i) with x = y * gens[i]
    let mut right: Vec<Vec<u32>> = Vec::new();
    let mut parent: Vec<(u32, usize)> = vec![(0, usize::MAX)];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let mut row = Vec::with_capacity(gens.len());
        for (i, s) in gens.iter().enumerate() {
            let y = elems[x].then(s);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    if elems.len() >= caps.group_order {
                        return Err(Error::ClosureExceedsCap { cap: caps.group_order });
                    }
                    let id = elems.len() as u32;
                    index.insert(y.clone(), id);
                    elems.push(y);
                    parent.push((x as u32, i));
                    queue.push_back(id as usize);
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
    }
    let n = elems.len();
    let mut table = vec![0u32; n * n];
    // elements are in BFS order, so parent[b] < b
    for a in 0..n {
        table[a * n] = a as u32;
        for b in 1..n {
            let (p, i) = parent[b];
            let ap = table[a * n + p as usize] as usize;
            table[a * n + b] = right[ap][i];
        }
    }
    Ok((FiniteGroup::from_flat_unchecked(n, table, None), elems))
}
