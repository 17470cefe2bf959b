use serde::{Deserialize, Serialize};

use super::{prime_divisors, FamilySpec};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{is_prime, GroupSpec};

/// Per-prime member of an indexed family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Template {
    #[serde(rename = "Zp")]
    Zp,
    #[serde(rename = "Zp^p")]
    PowerZp,
}

/// One factor, or one infinite block of factors, of a product.
///
/// ```json
/// {"factor":"group","kind":"named","name":"S","n":3}
/// {"factor":"family","family":"Zp","p":5}
/// {"factor":"every_prime","template":"Zp^p"}
/// {"factor":"repeated","group":{"kind":"named","name":"C","n":2}}
/// {"factor":"declared","name":"mystery","infinite":true}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "factor", rename_all = "snake_case")]
pub enum SupportFactor {
    Group(GroupSpec),
    Family(FamilySpec),
    /// One member per prime `p`, supported exactly on `p`.
    EveryPrime { template: Template },
    /// Infinitely many copies of one finite group.
    Repeated { group: GroupSpec },
    /// A block described only by its declared support.
    Declared {
        name: String,
        #[serde(default)]
        infinite: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        support: Option<Vec<u64>>,
    },
}

/// A factor (or block member) whose order is divisible by the prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportHit {
    pub factor: usize,
    /// The prime indexing the member, for `every_prime` blocks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member: Option<u64>,
    /// The hit stands for infinitely many factors.
    pub infinite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSupport {
    pub prime: u64,
    pub hits: Vec<SupportHit>,
    pub finite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub primes: Vec<PrimeSupport>,
    pub pass: bool,
}

/// For each prime `p ≤ prime_bound`, which factors have order divisible by
/// `p`; passes iff no prime is shared by infinitely many factors.
pub fn prime_support_check(factors: &[SupportFactor], prime_bound: u64, caps: &Caps) -> Result<SupportReport> {
    // (support, infinite) per factor; `None` support means one member per prime
    let mut described: Vec<(Option<Vec<u64>>, bool)> = Vec::new();
    for f in factors {
        described.push(match f {
            SupportFactor::Group(g) => (Some(prime_divisors(g.build(caps)?.order() as u64)), false),
            SupportFactor::Family(fam) => (Some(fam.support(caps)?), false),
            SupportFactor::EveryPrime { .. } => (None, false),
            SupportFactor::Repeated { group } => (Some(prime_divisors(group.build(caps)?.order() as u64)), true),
            SupportFactor::Declared { support: Some(s), infinite, .. } => (Some(s.clone()), *infinite),
            SupportFactor::Declared { name, support: None, .. } => return Err(Error::UnknownSupport(name.clone())),
        });
    }
    let mut primes = Vec::new();
    for p in (2..=prime_bound).filter(|&p| is_prime(p)) {
        let mut hits = Vec::new();
        for (i, (support, infinite)) in described.iter().enumerate() {
            match support {
                None => hits.push(SupportHit { factor: i, member: Some(p), infinite: false }),
                Some(s) if s.contains(&p) => hits.push(SupportHit { factor: i, member: None, infinite: *infinite }),
                Some(_) => {}
            }
        }
        let finite = hits.iter().all(|h| !h.infinite);
        primes.push(PrimeSupport { prime: p, hits, finite });
    }
    let pass = primes.iter().all(|p| p.finite);
    Ok(SupportReport { primes, pass })
}
