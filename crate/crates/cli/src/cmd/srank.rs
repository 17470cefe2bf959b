use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use verbalis::group::min_generators;
use verbalis::srank::{
    check_frattini_cover, count_quotients_brute, count_quotients_via_series, frattini_subgroup, non_generators, s_rank,
};
use verbalis::{Caps, GroupHom};

use crate::input::{self, Outcome};
use crate::output;

#[derive(Args, Debug)]
pub struct SrankArgs {
    #[arg(long = "g", value_name = "GROUP")]
    g: String,
    /// A finite simple group.
    #[arg(long = "s", value_name = "GROUP")]
    s: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Series,
    Brute,
    Both,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long = "g", value_name = "GROUP")]
    g: String,
    #[arg(long = "f", value_name = "GROUP")]
    f: String,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

#[derive(Args, Debug)]
pub struct FrattiniArgs {
    #[arg(long = "g", value_name = "GROUP")]
    g: String,
}

#[derive(Args, Debug)]
pub struct CoverArgs {
    #[arg(long, value_name = "GROUP")]
    source: String,
    #[arg(long, value_name = "GROUP")]
    target: String,
    /// Image of each source element, e.g. `0,1,0,1`.
    #[arg(long, value_name = "ELEMENTS")]
    map: String,
}

pub fn srank(a: &SrankArgs, caps: &Caps) -> Outcome<Value> {
    let g = input::group("g", &a.g, caps)?;
    let s = input::group("s", &a.s, caps)?;
    let r = s_rank(&g, &s, caps)?;
    Ok(json!({
        "s_rank": { "rank": r.rank, "witnesses": r.witnesses.len(), "M_order": r.m.order() },
        "rank": r.rank,
        "m": output::subgroup(&r.m),
        "witnesses": output::subgroups(&r.witnesses),
        "isomorphism": {
            "source_order": r.isomorphism.source().order(),
            "target_order": r.isomorphism.target().order(),
            "bijective": r.isomorphism.is_bijective(),
            "map": r.isomorphism.map(),
        },
    }))
}

pub fn count(a: &CountArgs, caps: &Caps) -> Outcome<Value> {
    let g = input::group("g", &a.g, caps)?;
    let f = input::group("f", &a.f, caps)?;
    Ok(match a.method {
        Method::Series => json!({ "series": count_quotients_via_series(&g, &f, caps)? }),
        Method::Brute => json!({ "brute": count_quotients_brute(&g, &f, caps)? }),
        Method::Both => {
            let series = count_quotients_via_series(&g, &f, caps)?;
            let brute = count_quotients_brute(&g, &f, caps)?;
            json!({ "series": series, "brute": brute, "agree": series == brute })
        }
    })
}

pub fn frattini(a: &FrattiniArgs, caps: &Caps) -> Outcome<Value> {
    let g = input::group("g", &a.g, caps)?;
    let phi = frattini_subgroup(&g, caps)?;
    let ng = non_generators(&g, caps)?;
    Ok(json!({
        "frattini": output::subgroup(&phi),
        "non_generators": ng.to_vec(),
        "agree": phi.bits() == &ng,
    }))
}

pub fn cover(a: &CoverArgs, caps: &Caps) -> Outcome<Value> {
    let source = input::group("source", &a.source, caps)?;
    let target = input::group("target", &a.target, caps)?;
    let map = input::elements("map", &a.map)?;
    let phi = GroupHom::new(source.clone(), target.clone(), map)?;
    let c = check_frattini_cover(&phi, caps)?;
    Ok(json!({
        "frattini_cover": {
            "is_cover": c.is_cover,
            "kernel_order": c.kernel.order(),
            "frattini_order": c.frattini.order(),
        },
        "surjective": c.surjective,
        "is_cover": c.is_cover,
        "kernel": output::subgroup(&c.kernel),
        "frattini": output::subgroup(&c.frattini),
        "min_generators": {
            "source": min_generators(&source, caps)?,
            "target": min_generators(&target, caps)?,
        },
    }))
}
