use super::subgroup::{normal_subgroups, quotient, subgroup_as_group, SubgroupSet};
use super::FiniteGroup;
use crate::caps::Caps;
use crate::error::Result;

/// `{1} = chain[0] ◁ chain[1] ◁ ... ◁ chain[n] = G` with simple factors
/// `factors[k] ≅ chain[k+1] / chain[k]`.
#[derive(Clone, Debug)]
pub struct CompositionSeries {
    pub chain: Vec<SubgroupSet>,
    pub factors: Vec<FiniteGroup>,
}

impl CompositionSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }
}

/// Which maximal normal subgroup to descend into when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SeriesChoice {
    /// First in canonical order.
    #[default]
    First,
    /// Last in canonical order.
    Last,
}

pub fn composition_series(g: &FiniteGroup, caps: &Caps) -> Result<CompositionSeries> {
    composition_series_with(g, caps, SeriesChoice::First)
}

/// Descends from `G` through maximal normal subgroups.
pub fn composition_series_with(g: &FiniteGroup, caps: &Caps, choice: SeriesChoice) -> Result<CompositionSeries> {
    caps.check_enumeration(g.order())?;
    let mut chain = vec![SubgroupSet::whole(g)];
    let mut factors = Vec::new();
    loop {
        let top = chain.last().expect("chain is never empty");
        if top.is_trivial() {
            break;
        }
        let (h, emb) = subgroup_as_group(g, top);
        let normals = normal_subgroups(&h, caps)?;
        let proper: Vec<&SubgroupSet> = normals.iter().filter(|n| !n.is_whole()).collect();
        let maximal: Vec<&SubgroupSet> = proper
            .iter()
            .filter(|n| !proper.iter().any(|m| m.order() > n.order() && n.is_subset(m)))
            .copied()
            .collect();
        let pick = match choice {
            SeriesChoice::First => maximal[0],
            SeriesChoice::Last => maximal[maximal.len() - 1],
        };
        let (factor, _) = quotient(&h, pick)?;
        factors.push(factor);
        let lifted = SubgroupSet::new(g, pick.elements().iter().map(|&i| emb[i]))?;
        chain.push(lifted);
    }
    chain.reverse();
    factors.reverse();
    Ok(CompositionSeries { chain, factors })
}
