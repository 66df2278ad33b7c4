//! Formal θ-stable A-parameter shapes `ψ = ℓ₁ψ₁ ⊕ ⋯ ⊕ ℓₖψₖ` with
//! `Σ ℓᵢnᵢ = 8`: validation, classification and exhaustive enumeration.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};

pub const TOTAL: u32 = 8;

/// Image constraint of a θ-fixed component: inside `G₂` or inside `Ad(PGL(3))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixedKind {
    G2Type,
    Pgl3Type,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orbit {
    Fixed(FixedKind),
    /// Member of the θ-orbit `ψ, θψ, θ²ψ` with the given label.
    ThreeCycle(u32),
}

impl Orbit {
    fn rank(&self) -> u8 {
        match self {
            Orbit::Fixed(FixedKind::G2Type) => 0,
            Orbit::Fixed(FixedKind::Pgl3Type) => 1,
            Orbit::ThreeCycle(_) => 2,
        }
    }

    fn label(&self) -> String {
        match self {
            Orbit::Fixed(FixedKind::G2Type) => "fixed:G2".into(),
            Orbit::Fixed(FixedKind::Pgl3Type) => "fixed:PGL3".into(),
            Orbit::ThreeCycle(id) => format!("cycle:{id}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub n: u32,
    pub ell: u32,
    pub orbit: Orbit,
}

impl Component {
    pub fn fixed(n: u32, ell: u32, kind: FixedKind) -> Self {
        Component { n, ell, orbit: Orbit::Fixed(kind) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    ZeroDimension,
    ZeroMultiplicity,
    WrongTotal(u32),
    OrbitSize { id: u32, members: usize },
    OrbitMismatch { id: u32 },
    G2TypeTooLarge { n: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroDimension => write!(f, "component of dimension 0"),
            Violation::ZeroMultiplicity => write!(f, "component of multiplicity 0"),
            Violation::WrongTotal(t) => write!(f, "sum of l*n is {t}, not {TOTAL}"),
            Violation::OrbitSize { id, members } => write!(f, "orbit {id} has {members} members, not 3"),
            Violation::OrbitMismatch { id } => write!(f, "orbit {id} has unequal dimensions or multiplicities"),
            Violation::G2TypeTooLarge { n } => write!(f, "G2-type component of dimension {n} > 7"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterShape {
    pub components: Vec<Component>,
}

impl ParameterShape {
    pub fn new(components: Vec<Component>) -> Self {
        ParameterShape { components }
    }

    /// Adds the three members of a θ-orbit.
    pub fn with_orbit(mut self, id: u32, n: u32, ell: u32) -> Self {
        for _ in 0..3 {
            self.components.push(Component { n, ell, orbit: Orbit::ThreeCycle(id) });
        }
        self
    }

    pub fn total(&self) -> u32 {
        self.components.iter().map(|c| c.n * c.ell).sum()
    }

    fn orbit_ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self
            .components
            .iter()
            .filter_map(|c| match c.orbit {
                Orbit::ThreeCycle(id) => Some(id),
                Orbit::Fixed(_) => None,
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Components sorted by `(orbit type, n, ℓ)`, orbits relabelled `1, 2, …`.
    pub fn canonical(&self) -> ParameterShape {
        let mut orbits: Vec<(u32, u32, u32)> = self
            .orbit_ids()
            .into_iter()
            .map(|id| {
                let c = self.components.iter().find(|c| c.orbit == Orbit::ThreeCycle(id)).expect("listed id");
                (c.n, c.ell, id)
            })
            .collect();
        orbits.sort_unstable();
        let relabel = |id: u32| orbits.iter().position(|o| o.2 == id).expect("listed id") as u32 + 1;
        let mut comps: Vec<Component> = self
            .components
            .iter()
            .map(|c| match c.orbit {
                Orbit::ThreeCycle(id) => Component { orbit: Orbit::ThreeCycle(relabel(id)), ..*c },
                Orbit::Fixed(_) => *c,
            })
            .collect();
        comps.sort_by_key(|c| (c.orbit.rank(), c.n, c.ell, c.orbit));
        ParameterShape { components: comps }
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|c| json!({ "n": c.n, "multiplicity": c.ell, "orbit": c.orbit.label() }))
            .collect();
        json!({ "components": comps })
    }

    /// Compact form such as `2x1[cycle:1]*3 + 2x1[fixed:G2]`.
    pub fn describe(&self) -> String {
        let c = self.canonical();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < c.components.len() {
            let x = c.components[i];
            let run = c.components[i..].iter().take_while(|y| **y == x).count();
            let base = format!("{}x{}[{}]", x.n, x.ell, x.orbit.label());
            parts.push(if run > 1 { format!("{base}*{run}") } else { base });
            i += run;
        }
        parts.join(" + ")
    }
}

/// All violated invariants; empty for a valid shape.
pub fn validate(s: &ParameterShape) -> Vec<Violation> {
    let mut out = Vec::new();
    if s.components.iter().any(|c| c.n == 0) {
        out.push(Violation::ZeroDimension);
    }
    if s.components.iter().any(|c| c.ell == 0) {
        out.push(Violation::ZeroMultiplicity);
    }
    if s.total() != TOTAL {
        out.push(Violation::WrongTotal(s.total()));
    }
    for id in s.orbit_ids() {
        let members: Vec<&Component> = s.components.iter().filter(|c| c.orbit == Orbit::ThreeCycle(id)).collect();
        if members.len() != 3 {
            out.push(Violation::OrbitSize { id, members: members.len() });
        }
        if members.iter().any(|c| c.n != members[0].n || c.ell != members[0].ell) {
            out.push(Violation::OrbitMismatch { id });
        }
    }
    for c in &s.components {
        if c.orbit == Orbit::Fixed(FixedKind::G2Type) && c.n > 7 {
            out.push(Violation::G2TypeTooLarge { n: c.n });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub theta_stable: bool,
    pub square_integrable: bool,
    pub elliptic: bool,
    pub stable: bool,
    pub semi_stable: bool,
    /// Worked examples whose printed verdict differs from the rules.
    pub discrepancies: Vec<String>,
}

/// The shape `ψ₁ ⊕ θψ₁ ⊕ θ²ψ₁ ⊕ ψ₂` with `ψ₁`, `ψ₂` two-dimensional.
pub fn gl2_example() -> ParameterShape {
    ParameterShape::new(vec![Component::fixed(2, 1, FixedKind::G2Type)]).with_orbit(1, 2, 1)
}

pub fn classify(s: &ParameterShape) -> Result<Classification> {
    let v = validate(s);
    if !v.is_empty() {
        let msg: Vec<String> = v.iter().map(ToString::to_string).collect();
        return Err(AlgebraError::InvalidShape(msg.join("; ")));
    }
    let semi_stable = s.components.iter().any(|c| matches!(c.orbit, Orbit::ThreeCycle(_)));
    let elliptic = s.components.iter().all(|c| c.ell <= 2);
    let mut discrepancies = Vec::new();
    let c = s.canonical();
    let example = gl2_example().canonical();
    let kind_free = |x: &ParameterShape| -> Vec<(u32, u32, bool)> {
        x.components.iter().map(|c| (c.n, c.ell, matches!(c.orbit, Orbit::ThreeCycle(_)))).collect()
    };
    if kind_free(&c) == kind_free(&example) && elliptic {
        discrepancies.push("rule l_i <= 2 gives elliptic; the worked example is stated not elliptic".into());
    }
    Ok(Classification {
        theta_stable: true,
        square_integrable: s.components.iter().all(|c| c.ell == 1),
        elliptic,
        stable: !semi_stable,
        semi_stable,
        discrepancies,
    })
}

/// The building blocks of a shape: a fixed component, or a whole θ-orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Block {
    Fixed(FixedKind, u32, u32),
    Cycle(u32, u32),
}

impl Block {
    fn weight(&self) -> u32 {
        match self {
            Block::Fixed(_, n, l) => n * l,
            Block::Cycle(n, l) => 3 * n * l,
        }
    }
}

fn blocks(total: u32) -> Vec<Block> {
    let mut out = Vec::new();
    for kind in [FixedKind::G2Type, FixedKind::Pgl3Type] {
        let max_n = if kind == FixedKind::G2Type { total.min(7) } else { total };
        for n in 1..=max_n {
            for l in 1..=total / n {
                out.push(Block::Fixed(kind, n, l));
            }
        }
    }
    for n in 1..=total / 3 {
        for l in 1..=total / (3 * n) {
            out.push(Block::Cycle(n, l));
        }
    }
    out.sort();
    out
}

/// Every valid shape of the given total, canonical, without repetition, in
/// lexicographic order of block choices.
pub fn enumerate_shapes(total: u32) -> Vec<ParameterShape> {
    fn rec(bs: &[Block], start: usize, left: u32, cur: &mut Vec<Block>, out: &mut Vec<Vec<Block>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..bs.len() {
            if bs[i].weight() <= left {
                cur.push(bs[i]);
                rec(bs, i, left - bs[i].weight(), cur, out);
                cur.pop();
            }
        }
    }
    let bs = blocks(total);
    let mut choices = Vec::new();
    rec(&bs, 0, total, &mut Vec::new(), &mut choices);
    choices
        .into_iter()
        .map(|choice| {
            let mut shape = ParameterShape::new(Vec::new());
            let mut id = 0;
            for b in choice {
                match b {
                    Block::Fixed(k, n, l) => shape.components.push(Component::fixed(n, l, k)),
                    Block::Cycle(n, l) => {
                        id += 1;
                        shape = shape.with_orbit(id, n, l);
                    }
                }
            }
            shape.canonical()
        })
        .collect()
}

/// Frozen number of shapes of total 8.
pub const SHAPE_COUNT_8: usize = 893;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    /// Coefficient of `x^total` in `∏_blocks 1/(1 − x^w)`.
    fn generating_count(total: u32) -> usize {
        let mut c = vec![0usize; total as usize + 1];
        c[0] = 1;
        for b in blocks(total) {
            let w = b.weight() as usize;
            for k in w..=total as usize {
                c[k] += c[k - w];
            }
        }
        c[total as usize]
    }

    #[test]
    fn enumeration_is_complete_and_unique() {
        let shapes = enumerate_shapes(TOTAL);
        assert!(shapes.iter().all(|s| validate(s).is_empty()));
        let set: HashSet<ParameterShape> = shapes.iter().cloned().collect();
        assert_eq!(set.len(), shapes.len());
        assert_eq!(shapes.len(), generating_count(TOTAL));
        assert_eq!(shapes.len(), SHAPE_COUNT_8);
        let trivial = ParameterShape::new(vec![Component::fixed(1, 1, FixedKind::G2Type); 8]);
        assert!(set.contains(&trivial.canonical()));
        assert_eq!(enumerate_shapes(TOTAL), shapes);
    }

    #[test]
    fn worked_classifications() {
        let p8 = ParameterShape::new(vec![Component::fixed(8, 1, FixedKind::Pgl3Type)]);
        let c = classify(&p8).unwrap();
        assert!(c.stable && c.square_integrable && c.elliptic && !c.semi_stable);
        let g7 = ParameterShape::new(vec![Component::fixed(7, 1, FixedKind::G2Type), Component::fixed(1, 1, FixedKind::G2Type)]);
        let c = classify(&g7).unwrap();
        assert!(c.stable && c.square_integrable);
        let c = classify(&gl2_example()).unwrap();
        assert!(c.semi_stable && !c.stable && c.elliptic && c.square_integrable);
        assert_eq!(c.discrepancies.len(), 1);
    }

    #[test]
    fn violations() {
        let bad_orbit = ParameterShape::new(vec![
            Component { n: 2, ell: 1, orbit: Orbit::ThreeCycle(1) },
            Component { n: 2, ell: 1, orbit: Orbit::ThreeCycle(1) },
            Component { n: 1, ell: 1, orbit: Orbit::ThreeCycle(1) },
            Component::fixed(3, 1, FixedKind::G2Type),
        ]);
        assert!(validate(&bad_orbit).contains(&Violation::OrbitMismatch { id: 1 }));
        let big = ParameterShape::new(vec![Component::fixed(8, 1, FixedKind::G2Type)]);
        assert_eq!(validate(&big), vec![Violation::G2TypeTooLarge { n: 8 }]);
        assert!(classify(&big).is_err());
        assert!(validate(&gl2_example()).is_empty());
        let short = ParameterShape::new(vec![Component::fixed(3, 1, FixedKind::G2Type)]);
        assert_eq!(validate(&short), vec![Violation::WrongTotal(3)]);
    }

    proptest! {
        #[test]
        fn classification_ignores_order_and_labels(idx in 0usize..200, seed in any::<u64>()) {
            let shapes = enumerate_shapes(TOTAL);
            let s = &shapes[idx % shapes.len()];
            let mut comps = s.components.clone();
            let k = comps.len();
            for i in 0..k {
                comps.swap(i, (seed as usize).wrapping_add(i * 7) % k);
            }
            let relabelled: Vec<Component> = comps
                .into_iter()
                .map(|c| match c.orbit {
                    Orbit::ThreeCycle(id) => Component { orbit: Orbit::ThreeCycle(id + 10), ..c },
                    _ => c,
                })
                .collect();
            let t = ParameterShape::new(relabelled);
            prop_assert_eq!(t.canonical(), s.clone());
            prop_assert_eq!(classify(&t).unwrap(), classify(s).unwrap());
            let c = classify(s).unwrap();
            prop_assert!(!c.square_integrable || c.elliptic);
            prop_assert!(c.stable != c.semi_stable);
        }
    }
}
