//! Oracle suites behind `verify <target>`.

use std::fmt;
use std::str::FromStr;

use angulated::artheory::{
    ar_angle, ar_angle_in, cover, is_ar_angle, is_cover, is_left_almost_split, is_right_almost_split, theorem_b_check,
};
use angulated::wide::{bar, enumerate_wide, is_shift_closed, is_wide, is_wide_oracle, unbar, MAX_ENUMERATION_PERIOD};
use angulated::{
    check_hom_exactness, d_exact_seq, hom_dim, min_angle, Angle, FamilyParams, IndecObject, Morphism, SubcatSpec,
};

use crate::syntax::parse_subcat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Golden,
    Hom,
    Angles,
    Chains,
    Ar,
    CoverAr,
    Wide,
    All,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "golden" => Target::Golden,
            "hom" => Target::Hom,
            "angles" => Target::Angles,
            "chains" => Target::Chains,
            "ar" => Target::Ar,
            "cover-ar" => Target::CoverAr,
            "wide" => Target::Wide,
            "all" => Target::All,
            other => {
                return Err(format!(
                    "unknown verify target `{other}` (golden, hom, angles, chains, ar, cover-ar, wide, all)"
                ))
            }
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Golden => "golden",
            Target::Hom => "hom",
            Target::Angles => "angles",
            Target::Chains => "chains",
            Target::Ar => "ar",
            Target::CoverAr => "cover-ar",
            Target::Wide => "wide",
            Target::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), cases: 0, failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn run(params: &FamilyParams, target: Target) -> Vec<Check> {
    match target {
        Target::Golden => golden(),
        Target::Hom => hom(params),
        Target::Angles => angles(params),
        Target::Chains => chains(params),
        Target::Ar => ar(params),
        Target::CoverAr => cover_ar(params),
        Target::Wide => wide(params),
        Target::All => {
            [golden(), hom(params), angles(params), chains(params), ar(params), cover_ar(params), wide(params)]
                .into_iter()
                .flatten()
                .collect()
        }
    }
}

/// Positions of an angle whose slots are all indecomposable, plus the
/// position of the connecting map's target; `None` for other shapes.
pub fn angle_positions(a: &Angle) -> Option<(Vec<i64>, i64)> {
    let pos = a.objects().iter().map(|x| x.as_indec().map(|y| y.pos)).collect::<Option<Vec<_>>>()?;
    let end = a.connecting().target().as_indec()?.pos;
    Some((pos, end))
}

/// Every map is the canonical basis morphism between its endpoints.
pub fn all_canonical(a: &Angle) -> bool {
    a.maps().iter().all(|f| match (f.source().as_indec(), f.target().as_indec()) {
        (Some(x), Some(y)) => Morphism::basis(a.params(), x, y).is_ok_and(|b| &b == f),
        _ => f.is_zero(),
    })
}

fn window(params: &FamilyParams) -> impl Iterator<Item = IndecObject> {
    (1..=params.period()).map(IndecObject::at)
}

fn wide_specs(params: &FamilyParams) -> Vec<SubcatSpec> {
    enumerate_wide(params).unwrap_or_default()
}

fn golden() -> Vec<Check> {
    let p = FamilyParams::new(4, 4, 9).expect("valid");
    let s = parse_subcat(&p, "1,2,5,6,9,10").expect("valid");
    let mut ambient = Check::new("golden: ambient AR angles at (4,4,9)");
    for (j, want) in
        [(1, (vec![-8, -7, -4, -3, 0, 1], 4)), (5, (vec![-4, -3, 0, 1, 4, 5], 8)), (10, (vec![1, 2, 5, 6, 9, 10], 13))]
    {
        let a = ar_angle(&p, IndecObject::at(j));
        ambient.record(angle_positions(&a) == Some(want.clone()) && all_canonical(&a), || format!("ar f{j}"));
    }
    let mut sub = Check::new("golden: cover and AR angles in S = {1,2,5,6,9,10}");
    let c = cover(&p, &s, IndecObject::f(&p, -1, 4));
    sub.record(c.source.as_indec() == Some(IndecObject::f(&p, -1, 2)), || "cover of s-1:f4".into());
    for (j, want) in [(1, (vec![-10, -7, -6, -3, -2, 1], 2)), (5, (vec![-6, -3, -2, 1, 2, 5], 6))] {
        let ok = ar_angle_in(&p, &s, IndecObject::at(j))
            .is_ok_and(|a| angle_positions(&a) == Some(want.clone()) && all_canonical(&a));
        sub.record(ok, || format!("ar --sub f{j}"));
    }
    for j in [6, 10] {
        let ok = ar_angle_in(&p, &s, IndecObject::at(j)).is_ok_and(|a| a == ar_angle(&p, IndecObject::at(j)));
        sub.record(ok, || format!("ar --sub f{j} equals the ambient angle"));
    }
    vec![ambient, sub]
}

/// Hom dimensions and composites against walks on the quiver with every
/// `l`-fold composite killed.
fn hom(params: &FamilyParams) -> Vec<Check> {
    let l = params.l();
    let span = params.period() + l;
    let walk = |a: i64, b: i64| -> u8 {
        let mut at = a;
        let mut steps = 0;
        while at < b && steps < l {
            at += 1;
            steps += 1;
        }
        u8::from(at == b && steps < l)
    };
    let mut dims = Check::new("hom: dimensions match the path oracle");
    let mut comp = Check::new("hom: basis composites match path concatenation");
    for x in 1..=params.period() {
        for y in x - span..=x + span {
            let (a, b) = (IndecObject::at(x), IndecObject::at(y));
            dims.record(hom_dim(params, a, b) == walk(x, y), || format!("Hom(p{x}, p{y})"));
            if walk(x, y) == 0 {
                continue;
            }
            for z in y..y + l {
                let c = IndecObject::at(z);
                let (Ok(f), Ok(g)) = (Morphism::basis(params, a, b), Morphism::basis(params, b, c)) else {
                    continue;
                };
                let gf = angulated::compose(&g, &f).expect("composable");
                let ok =
                    if walk(x, z) == 1 { Morphism::basis(params, a, c).is_ok_and(|u| u == gf) } else { gf.is_zero() };
                comp.record(ok, || format!("p{x} -> p{y} -> p{z}"));
            }
        }
    }
    vec![dims, comp]
}

fn admissible(params: &FamilyParams) -> Vec<Morphism> {
    let mut out = Vec::new();
    for x in window(params) {
        for delta in 1..params.l() {
            let y = IndecObject::at(x.pos + delta);
            out.push(Morphism::basis(params, x, y).expect("distance below l"));
        }
    }
    out
}

fn angles(params: &FamilyParams) -> Vec<Check> {
    let (d, l, m) = (params.d(), params.l(), params.m());
    let mut shape = Check::new("angles: d+2 indecomposable terms, alternating gaps, span m-1+delta");
    let mut rot = Check::new("angles: rotating d+2 times is the shift");
    let mut exact = Check::new("angles: minimal angles are Hom-exact");
    for mu in admissible(params) {
        let x = mu.source().as_indec().expect("indecomposable");
        let y = mu.target().as_indec().expect("indecomposable");
        let delta = y.pos - x.pos;
        let Ok(a) = min_angle(&mu) else {
            shape.record(false, || format!("min_angle p{} -> p{}", x.pos, y.pos));
            continue;
        };
        let ok = angle_positions(&a).is_some_and(|(pos, end)| {
            let gaps_ok = pos.windows(2).enumerate().all(|(k, w)| {
                let want = if k % 2 == 0 { delta } else { l - delta };
                w[1] - w[0] == want
            });
            pos.len() == (d + 2) as usize
                && gaps_ok
                && pos[pos.len() - 1] - pos[0] == m - 1 + delta
                && end == pos[0] + params.period()
        }) && a.map(d as usize) == &mu;
        shape.record(ok, || format!("min_angle p{} -> p{}", x.pos, y.pos));
        rot.record(a.rotate(d + 2) == a.shifted(1), || format!("p{} -> p{}", x.pos, y.pos));
        exact.record(check_hom_exactness(&a).passed(), || format!("p{} -> p{}", x.pos, y.pos));
    }
    vec![shape, rot, exact]
}

fn chains(params: &FamilyParams) -> Vec<Check> {
    let mut exact = Check::new("chains: d-exact sequences are Hom-exact on both sides");
    for mu in admissible(params) {
        let y = mu.target().as_indec().expect("indecomposable");
        if y.pos > params.period() {
            continue;
        }
        let ok = d_exact_seq(&mu).is_ok_and(|c| c.exactness_failures().is_empty());
        exact.record(ok, || format!("{} -> {}", mu.source().label(params), mu.target().label(params)));
    }
    vec![exact]
}

fn ar(params: &FamilyParams) -> Vec<Check> {
    let full = SubcatSpec::full(params);
    let n = params.slots();
    let mut ambient = Check::new("ar: ambient AR angles are exact, almost split and radical");
    for x in window(params) {
        let a = ar_angle(params, x);
        let ok = check_hom_exactness(&a).passed()
            && is_right_almost_split(params, &full, a.map(n - 2)).unwrap_or(false)
            && is_left_almost_split(params, &full, a.map(0)).unwrap_or(false)
            && a.maps()[1..n - 2].iter().all(Morphism::is_radical);
        ambient.record(ok, || format!("ar {}", x.label(params)));
    }
    let mut sub = Check::new("ar: AR angles in every wide subcategory");
    let mut covers = Check::new("ar: covers are covers");
    for s in wide_specs(params) {
        for x in window(params) {
            covers.record(is_cover(params, &s, &cover(params, &s, x).mor), || {
                format!("cover --sub {s} {}", x.label(params))
            });
            if s.contains(x) {
                let ok = ar_angle_in(params, &s, x).and_then(|a| is_ar_angle(params, &s, &a)).unwrap_or(false);
                sub.record(ok, || format!("ar --sub {s} {}", x.label(params)));
            }
        }
    }
    vec![ambient, sub, covers]
}

fn cover_ar(params: &FamilyParams) -> Vec<Check> {
    let mut c = Check::new("cover-ar: cover of the head iff AR angle in the subcategory");
    for s in wide_specs(params) {
        for x in window(params).filter(|x| s.contains(*x)) {
            let ok = theorem_b_check(params, &s, x).is_ok_and(|r| r.passed());
            c.record(ok, || format!("{s} at {}", x.label(params)));
        }
    }
    vec![c]
}

fn wide(params: &FamilyParams) -> Vec<Check> {
    let specs = wide_specs(params);
    let mut enumeration = Check::new("wide: enumeration matches the power-set oracle");
    if params.period() <= 16 {
        let period = params.period();
        let mut hits: Vec<Vec<i64>> = Vec::new();
        for mask in 0u32..(1 << period) {
            let s = SubcatSpec::new(params, (1..=period).filter(|i| mask >> (i - 1) & 1 == 1)).expect("window");
            let oracle = is_wide_oracle(params, &s);
            enumeration.record(oracle == is_wide(params, &s), || format!("classification of {s}"));
            if oracle {
                hits.push(s.indices().collect());
            }
        }
        hits.sort();
        let listed: Vec<Vec<i64>> = specs.iter().map(|s| s.indices().collect()).collect();
        enumeration.record(hits == listed, || format!("{} oracle hits, {} listed", hits.len(), listed.len()));
    } else if params.period() > MAX_ENUMERATION_PERIOD {
        enumeration.record(false, || "period too large to enumerate".into());
    }
    let mut bij = Check::new("wide: unbar after bar is the identity on shift-closed predicates");
    let lo = -2 * params.period();
    let hi = 3 * params.period();
    for s in &specs {
        let b = bar(s);
        bij.record(unbar(params, |x| b.contains(x)) == *s, || format!("unbar(bar({s}))"));
        bij.record(is_shift_closed(params, |q| b.contains_pos(q), lo..=hi), || format!("bar({s}) is shift closed"));
    }
    vec![enumeration, bij]
}
