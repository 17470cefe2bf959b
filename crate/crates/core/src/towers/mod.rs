//! Finite truncations of inverse systems, their quotient fingerprints,
//! product towers and prime-support bookkeeping.

mod decomp;
mod fingerprint;
mod support;

pub use decomp::{decomposition_check, DecompositionReport};
pub use fingerprint::{canonical_code, compare_fingerprints, fingerprint, Fingerprint, FingerprintEntry};
pub use support::{prime_support_check, PrimeSupport, SupportFactor, SupportHit, SupportReport, Template};

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{
    cyclic, direct_product_all, is_prime, power, Elem, FiniteGroup, GroupHom, GroupSpec,
};

/// Levels `G₁ ← G₂ ← … ← G_k` with `maps[i]: levels[i+1] → levels[i]`.
#[derive(Clone, Debug)]
pub struct Tower {
    levels: Vec<FiniteGroup>,
    maps: Vec<GroupHom>,
    label: Option<String>,
}

impl Tower {
    /// Checks that every map is a surjective homomorphism between the
    /// adjacent levels.
    pub fn new(levels: Vec<FiniteGroup>, maps: Vec<GroupHom>) -> Result<Tower> {
        if levels.is_empty() {
            return Err(Error::InvalidParameter("a tower needs at least one level".into()));
        }
        if maps.len() + 1 != levels.len() {
            return Err(Error::InvalidParameter(format!(
                "{} levels need {} maps, got {}",
                levels.len(),
                levels.len() - 1,
                maps.len()
            )));
        }
        let t = Tower { levels, maps, label: None };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, m) in self.maps.iter().enumerate() {
            if m.source().table_rows() != self.levels[i + 1].table_rows()
                || m.target().table_rows() != self.levels[i].table_rows()
            {
                return Err(Error::InvalidHom(format!("map {i} does not join levels {} and {}", i + 2, i + 1)));
            }
            m.validate()?;
            if !m.is_surjective() {
                return Err(Error::InvalidHom(format!("map {i} is not surjective")));
            }
        }
        for w in self.maps.windows(2) {
            w[1].then(&w[0])?.validate()?;
        }
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Tower {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    /// The first `depth` levels.
    pub fn truncate(&self, depth: usize) -> Result<Tower> {
        if depth == 0 || depth > self.depth() {
            return Err(Error::InvalidParameter(format!("cannot truncate depth {} to {depth}", self.depth())));
        }
        Ok(Tower { levels: self.levels[..depth].to_vec(), maps: self.maps[..depth - 1].to_vec(), label: self.label.clone() })
    }

    /// A constant tower with identity maps.
    pub fn constant(g: &FiniteGroup, depth: usize) -> Result<Tower> {
        check_depth(depth)?;
        let t = Tower { levels: vec![g.clone(); depth], maps: vec![GroupHom::identity(g); depth - 1], label: None };
        Ok(match g.label() {
            Some(l) => t.with_label(l.to_string()),
            None => t,
        })
    }

    pub fn to_file(&self) -> TowerFile {
        TowerFile {
            levels: self.levels.iter().map(GroupSpec::from_group).collect(),
            maps: self.maps.iter().map(|m| MapSpec::Images(m.map().to_vec())).collect(),
        }
    }
}

fn check_depth(depth: usize) -> Result<()> {
    if depth == 0 {
        return Err(Error::InvalidParameter("depth must be at least 1".into()));
    }
    Ok(())
}

fn check_prime(p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    Ok(p as usize)
}

fn prime_power(p: usize, i: usize, caps: &Caps) -> Result<usize> {
    let n = (p as u128).checked_pow(i as u32).unwrap_or(u128::MAX);
    caps.check_group_order(n)?;
    Ok(n as usize)
}

/// Mixed-radix digits of `x`, most significant first.
fn decode(mut x: Elem, radices: &[usize]) -> Vec<Elem> {
    let mut digits = vec![0; radices.len()];
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d = x % r;
        x /= r;
    }
    digits
}

fn encode(digits: &[Elem], radices: &[usize]) -> Elem {
    digits.iter().zip(radices).fold(0, |acc, (&d, &r)| acc * r + d)
}

/// `∏ φᵢ : ∏ Aᵢ → ∏ Bᵢ` on products built by [`direct_product_all`].
fn product_hom(source: FiniteGroup, target: FiniteGroup, maps: &[&GroupHom]) -> Result<GroupHom> {
    let src: Vec<usize> = maps.iter().map(|m| m.source().order()).collect();
    let dst: Vec<usize> = maps.iter().map(|m| m.target().order()).collect();
    let images = (0..source.order())
        .map(|x| {
            let d: Vec<Elem> = decode(x, &src).iter().zip(maps).map(|(&a, m)| m.apply(a)).collect();
            encode(&d, &dst)
        })
        .collect();
    GroupHom::new(source, target, images)
}

/// Reduction `C_m → C_n` for `n | m`.
fn reduction(from: &FiniteGroup, to: &FiniteGroup) -> Result<GroupHom> {
    GroupHom::new(from.clone(), to.clone(), (0..from.order()).map(|x| x % to.order()).collect())
}

/// A bundled family of towers.
///
/// ```json
/// {"family":"Zp","p":2}
/// {"family":"Zp^p","p":3}
/// {"family":"constant","group":{"kind":"named","name":"S","n":3}}
/// {"family":"product","factors":[...],"support":[2,3]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    /// `C_p ← C_{p²} ← …` with reduction maps.
    #[serde(rename = "Zp")]
    Zp { p: u64 },
    /// `(C_p)^p ← (C_{p²})^p ← …`, componentwise reduction.
    #[serde(rename = "Zp^p")]
    PowerZp { p: u64 },
    #[serde(rename = "constant")]
    Constant { group: GroupSpec },
    #[serde(rename = "product")]
    Product {
        factors: Vec<FamilySpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        support: Option<Vec<u64>>,
    },
}

impl FamilySpec {
    /// Primes dividing the order of some level.
    pub fn support(&self, caps: &Caps) -> Result<Vec<u64>> {
        let mut out = match self {
            FamilySpec::Zp { p } | FamilySpec::PowerZp { p } => {
                check_prime(*p)?;
                vec![*p]
            }
            FamilySpec::Constant { group } => prime_divisors(group.build(caps)?.order() as u64),
            FamilySpec::Product { support: Some(s), .. } => s.clone(),
            FamilySpec::Product { factors, support: None } => {
                let mut all = Vec::new();
                for f in factors {
                    all.extend(f.support(caps)?);
                }
                all
            }
        };
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// File shape `{"family": ..., "depth": 3}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyFile {
    #[serde(flatten)]
    pub family: FamilySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
}

pub fn tower_from_family(family: &FamilySpec, depth: usize, caps: &Caps) -> Result<Tower> {
    check_depth(depth)?;
    match family {
        FamilySpec::Zp { p } => {
            let p = check_prime(*p)?;
            let levels = (1..=depth).map(|i| cyclic(prime_power(p, i, caps)?)).collect::<Result<Vec<_>>>()?;
            let maps = levels.windows(2).map(|w| reduction(&w[1], &w[0])).collect::<Result<Vec<_>>>()?;
            Ok(Tower { levels, maps, label: Some(format!("Z{p}")) })
        }
        FamilySpec::PowerZp { p } => {
            let p = check_prime(*p)?;
            let cyclics = (1..=depth).map(|i| cyclic(prime_power(p, i, caps)?)).collect::<Result<Vec<_>>>()?;
            let levels = cyclics.iter().map(|c| power(c, p, caps)).collect::<Result<Vec<_>>>()?;
            let mut maps = Vec::new();
            for i in 0..depth - 1 {
                let red = reduction(&cyclics[i + 1], &cyclics[i])?;
                maps.push(product_hom(levels[i + 1].clone(), levels[i].clone(), &vec![&red; p])?);
            }
            Ok(Tower { levels, maps, label: Some(format!("Z{p}^{p}")) })
        }
        FamilySpec::Constant { group } => Tower::constant(&group.build(caps)?, depth),
        FamilySpec::Product { factors, .. } => {
            let towers = factors.iter().map(|f| tower_from_family(f, depth, caps)).collect::<Result<Vec<_>>>()?;
            product_tower(&towers.into_iter().map(ProductFactor::Tower).collect::<Vec<_>>(), depth, caps)
        }
    }
}

/// A factor of a product tower.
#[derive(Clone, Debug)]
pub enum ProductFactor {
    Tower(Tower),
    /// Constant in every level.
    Fixed(FiniteGroup),
}

/// Levelwise direct product of the first `depth` levels of each factor.
pub fn product_tower(factors: &[ProductFactor], depth: usize, caps: &Caps) -> Result<Tower> {
    check_depth(depth)?;
    if factors.is_empty() {
        return Err(Error::InvalidParameter("product of no factors".into()));
    }
    let towers = factors
        .iter()
        .map(|f| match f {
            ProductFactor::Tower(t) => t.truncate(depth),
            ProductFactor::Fixed(g) => Tower::constant(g, depth),
        })
        .collect::<Result<Vec<_>>>()?;
    let label = towers.iter().map(|t| t.label().map(str::to_string)).collect::<Option<Vec<_>>>().map(|l| l.join("x"));
    if towers.len() == 1 {
        return Ok(towers.into_iter().next().unwrap());
    }
    let mut levels = Vec::with_capacity(depth);
    for i in 0..depth {
        let fs: Vec<FiniteGroup> = towers.iter().map(|t| t.levels[i].clone()).collect();
        levels.push(direct_product_all(&fs, caps)?);
    }
    let mut maps = Vec::with_capacity(depth - 1);
    for i in 0..depth - 1 {
        let ms: Vec<&GroupHom> = towers.iter().map(|t| &t.maps[i]).collect();
        maps.push(product_hom(levels[i + 1].clone(), levels[i].clone(), &ms)?);
    }
    Ok(Tower { levels, maps, label })
}

/// `S3 × ∏_{p ∈ primes} (Z_p)^p`, truncated at `depth`.
pub fn s3_times_zpp(primes: &[u64], depth: usize, caps: &Caps) -> Result<Tower> {
    let mut factors = vec![FamilySpec::Constant { group: GroupSpec::named("S", 3) }];
    factors.extend(primes.iter().map(|&p| FamilySpec::PowerZp { p }));
    tower_from_family(&FamilySpec::Product { factors, support: None }, depth, caps)
}

/// A map given by element images, or `"canonical"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Images(Vec<Elem>),
    Keyword(String),
}

/// `{"levels": [group specs], "maps": [[images] | "canonical"]}`.
///
/// A canonical map is the identity between equal tables, reduction
/// `C_m → C_n`, or the componentwise canonical map between products with
/// the same number of factors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TowerFile {
    pub levels: Vec<GroupSpec>,
    pub maps: Vec<MapSpec>,
}

impl TowerFile {
    pub fn build(&self, caps: &Caps) -> Result<Tower> {
        let levels = self.levels.iter().map(|s| s.build(caps)).collect::<Result<Vec<_>>>()?;
        if self.maps.len() + 1 != levels.len() {
            return Err(Error::InvalidParameter(format!(
                "{} levels need {} maps, got {}",
                levels.len(),
                levels.len().saturating_sub(1),
                self.maps.len()
            )));
        }
        let mut maps = Vec::new();
        for (i, m) in self.maps.iter().enumerate() {
            let (src, dst) = (&levels[i + 1], &levels[i]);
            maps.push(match m {
                MapSpec::Images(v) => GroupHom::new(src.clone(), dst.clone(), v.clone())?,
                MapSpec::Keyword(k) if k == "canonical" => {
                    canonical_map(&self.levels[i + 1], src, &self.levels[i], dst, caps)?
                }
                MapSpec::Keyword(k) => return Err(Error::InvalidParameter(format!("unknown map keyword `{k}`"))),
            });
        }
        Tower::new(levels, maps)
    }
}

fn cyclic_order(spec: &GroupSpec) -> Option<usize> {
    match spec {
        GroupSpec::Named { name, n, .. } if name == "C" || name == "Z" => *n,
        _ => None,
    }
}

fn canonical_map(
    src_spec: &GroupSpec,
    src: &FiniteGroup,
    dst_spec: &GroupSpec,
    dst: &FiniteGroup,
    caps: &Caps,
) -> Result<GroupHom> {
    if src.table_rows() == dst.table_rows() {
        return Ok(GroupHom::identity(src));
    }
    if let (Some(m), Some(n)) = (cyclic_order(src_spec), cyclic_order(dst_spec)) {
        if n > 0 && m % n == 0 {
            return reduction(src, dst);
        }
    }
    if let (GroupSpec::Product { factors: a }, GroupSpec::Product { factors: b }) = (src_spec, dst_spec) {
        if a.len() == b.len() {
            let mut parts = Vec::new();
            for (fa, fb) in a.iter().zip(b) {
                let (ga, gb) = (fa.build(caps)?, fb.build(caps)?);
                parts.push(canonical_map(fa, &ga, fb, &gb, caps)?);
            }
            return product_hom(src.clone(), dst.clone(), &parts.iter().collect::<Vec<_>>());
        }
    }
    Err(Error::InvalidHom("no canonical map between these levels".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;

    #[test]
    fn family_examples() {
        let caps = Caps::default();
        let t = tower_from_family(&FamilySpec::Zp { p: 2 }, 3, &caps).unwrap();
        assert_eq!(t.levels().iter().map(|g| g.order()).collect::<Vec<_>>(), vec![2, 4, 8]);
        t.validate().unwrap();
        assert_eq!(t.maps()[1].apply(5), 1);

        let t = tower_from_family(&FamilySpec::Constant { group: GroupSpec::named("S", 3) }, 2, &caps).unwrap();
        assert_eq!(t.maps()[0].map(), &[0, 1, 2, 3, 4, 5]);

        let t = s3_times_zpp(&[2, 3], 1, &caps).unwrap();
        assert_eq!(t.levels()[0].order(), 648);

        let t = tower_from_family(&FamilySpec::PowerZp { p: 2 }, 3, &caps).unwrap();
        assert_eq!(t.levels().iter().map(|g| g.order()).collect::<Vec<_>>(), vec![4, 16, 64]);
        t.validate().unwrap();
    }

    #[test]
    fn product_examples() {
        let caps = Caps::default();
        let z2 = tower_from_family(&FamilySpec::Zp { p: 2 }, 3, &caps).unwrap();
        let z3 = tower_from_family(&FamilySpec::Zp { p: 3 }, 3, &caps).unwrap();
        let s3 = symmetric(3).unwrap();
        let t = product_tower(&[ProductFactor::Fixed(s3), ProductFactor::Tower(z2.clone())], 2, &caps).unwrap();
        assert_eq!(t.levels().iter().map(|g| g.order()).collect::<Vec<_>>(), vec![12, 24]);
        let single = product_tower(&[ProductFactor::Tower(z2.clone())], 3, &caps).unwrap();
        assert_eq!(single.levels()[2].table_rows(), z2.levels()[2].table_rows());
        let t = product_tower(&[ProductFactor::Tower(z2), ProductFactor::Tower(z3)], 2, &caps).unwrap();
        assert_eq!(t.levels().iter().map(|g| g.order()).collect::<Vec<_>>(), vec![6, 36]);
        assert!(crate::group::is_isomorphic(&t.levels()[1], &cyclic(36).unwrap(), &caps).unwrap());
    }

    #[test]
    fn bad_towers_rejected() {
        let caps = Caps::default();
        let c2 = cyclic(2).unwrap();
        let c4 = cyclic(4).unwrap();
        // C2 -> C4 is not onto
        let inc = GroupHom::new(c2.clone(), c4.clone(), vec![0, 2]).unwrap();
        assert!(Tower::new(vec![c4, c2], vec![inc]).is_err());
        assert!(tower_from_family(&FamilySpec::Zp { p: 4 }, 2, &caps).is_err());
        assert!(tower_from_family(&FamilySpec::Zp { p: 2 }, 0, &caps).is_err());
        let big = Caps { group_order: 100, ..caps };
        assert!(tower_from_family(&FamilySpec::Zp { p: 2 }, 7, &big).is_err());
    }

    #[test]
    fn tower_files() {
        let caps = Caps::default();
        let json = r#"{"levels":[{"kind":"named","name":"C","n":2},{"kind":"named","name":"C","n":4}],"maps":["canonical"]}"#;
        let t: TowerFile = serde_json::from_str(json).unwrap();
        let t = t.build(&caps).unwrap();
        assert_eq!(t.maps()[0].map(), &[0, 1, 0, 1]);
        let json = r#"{"levels":[{"kind":"named","name":"C","n":2},{"kind":"named","name":"E","p":2,"k":2}],"maps":[[0,1,0,1]]}"#;
        let t2: TowerFile = serde_json::from_str(json).unwrap();
        let t2 = t2.build(&caps).unwrap();
        let back = t2.to_file().build(&caps).unwrap();
        assert_eq!(back.maps()[0].map(), t2.maps()[0].map());
        let prod = r#"{"levels":[
            {"kind":"product","factors":[{"kind":"named","name":"S","n":3},{"kind":"named","name":"C","n":2}]},
            {"kind":"product","factors":[{"kind":"named","name":"S","n":3},{"kind":"named","name":"C","n":4}]}],
            "maps":["canonical"]}"#;
        let t3: TowerFile = serde_json::from_str(prod).unwrap();
        assert_eq!(t3.build(&caps).unwrap().levels()[1].order(), 24);
        let bad = r#"{"levels":[{"kind":"named","name":"C","n":3},{"kind":"named","name":"E","p":2,"k":2}],"maps":["canonical"]}"#;
        let bad: TowerFile = serde_json::from_str(bad).unwrap();
        assert!(bad.build(&caps).is_err());
    }

    #[test]
    fn family_files_parse() {
        let f: FamilyFile = serde_json::from_str(r#"{"family":"Zp","p":2,"depth":3}"#).unwrap();
        assert_eq!(f.family, FamilySpec::Zp { p: 2 });
        assert_eq!(f.depth, Some(3));
        let f: FamilyFile = serde_json::from_str(
            r#"{"family":"product","factors":[{"family":"Zp","p":3},{"family":"constant","group":{"kind":"named","name":"Q8"}}]}"#,
        )
        .unwrap();
        assert_eq!(f.family.support(&Caps::default()).unwrap(), vec![2, 3]);
    }

    #[test]
    fn radix_round_trip() {
        let r = [3, 4, 5];
        for x in 0..60 {
            assert_eq!(encode(&decode(x, &r), &r), x);
        }
    }
}
