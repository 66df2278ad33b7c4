//! The verification suites behind `verify`, each a pure function of the seed
//! and the sample count.

use std::str::FromStr;

use crate::clifford::{bivector_exp, center_elements, random_unit_vector, CliffordElement, QuadraticSpace};
use crate::endoscopy::{self, SElement};
use crate::error::AlgebraError;
use crate::field::{CycloNum, ExactMatrix, Rational};
use crate::lie::{self, S3, S4};
use crate::octonion::{octonion_q, octonion_t1, octonion_t2, octonion_t3, trilinear_t, Octonion};
use crate::okubo::{calibrate_trace_factor, okubo_mul, OkuboElement};
use crate::parameters::{self, Component, FixedKind, ParameterShape};
use crate::report::{Check, Provenance, Report, SuiteReport};
use crate::sample::Sampler;
use crate::so8;
use crate::spinor::{self, labeling, pairing_n, vector_action, SpinorElement};
use crate::triality::{self, octonion_model, SpinorTriality, TrialityMap, UnitChoice};
use crate::weyl::{self, CartanType, Levi};

use Provenance::{Derived, Paper, Trivial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Octonion,
    Clifford,
    Spinor,
    Triality,
    Lie,
    Endoscopy,
    Weyl,
    Parameters,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Octonion,
        Suite::Clifford,
        Suite::Spinor,
        Suite::Triality,
        Suite::Lie,
        Suite::Endoscopy,
        Suite::Weyl,
        Suite::Parameters,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Octonion => "octonion",
            Suite::Clifford => "clifford",
            Suite::Spinor => "spinor",
            Suite::Triality => "triality",
            Suite::Lie => "lie",
            Suite::Endoscopy => "endoscopy",
            Suite::Weyl => "weyl",
            Suite::Parameters => "parameters",
        }
    }

    pub fn run(&self, seed: u64, samples: usize) -> SuiteReport {
        let mut s = Sampler::derived(seed, self.name());
        let checks = match self {
            Suite::Octonion => octonion_suite(&mut s, samples),
            Suite::Clifford => clifford_suite(&mut s, samples),
            Suite::Spinor => spinor_suite(&mut s, samples),
            Suite::Triality => triality_suite(&mut s, samples),
            Suite::Lie => lie_suite(&mut s, samples),
            Suite::Endoscopy => endoscopy_suite(),
            Suite::Weyl => weyl_suite(),
            Suite::Parameters => parameters_suite(),
        };
        SuiteReport { name: self.name().to_string(), checks }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Runs the suites concurrently; the report lists them in the canonical order.
pub fn run_suites(suites: &[Suite], seed: u64, samples: usize) -> Report {
    let mut list: Vec<Suite> = suites.to_vec();
    list.sort();
    list.dedup();
    let results: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = list.iter().map(|suite| scope.spawn(move || suite.run(seed, samples))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    });
    Report { version: env!("CARGO_PKG_VERSION").to_string(), seed, samples, suites: results }
}

fn count_ok(n: usize, mut f: impl FnMut() -> bool) -> usize {
    (0..n).filter(|_| f()).count()
}

fn sampled(name: &str, n: usize, ok: usize, provenance: Provenance) -> Check {
    Check::new(name, ok == n, format!("{n}/{n}"), format!("{ok}/{n}"), provenance)
}

fn octonion_suite(s: &mut Sampler, samples: usize) -> Vec<Check> {
    let n = samples.max(1);
    let mut out = Vec::new();
    let ok = count_ok(n, || {
        let (x, y) = (Octonion::random(s), Octonion::random(s));
        x.mul(&y).norm() == &x.norm() * &y.norm()
    });
    out.push(sampled("norm_is_multiplicative", n, ok, Paper).with_ref("N(x·y) = N(x)·N(y)"));
    let ok = count_ok(n, || {
        let (x, y) = (Octonion::random(s), Octonion::random(s));
        x.mul_plus_plus(&y).norm() == &x.norm() * &y.norm()
    });
    out.push(Check::claim(
        "printed_zorn_signs_compose",
        ok == n,
        format!("{n}/{n}"),
        format!("{ok}/{n}"),
        "a x + d v + w* ∧ y*",
    ));
    let ok = count_ok(n, || {
        let (x, y) = (Octonion::random(s), Octonion::random(s));
        x.para_mul(&y).para_mul(&x) == y.scale(&x.norm())
    });
    out.push(sampled("para_product_flexible_law", n, ok, Derived).with_ref("x ⋆ y = x̄ · ȳ"));
    let ok = count_ok(n, || {
        let (x, y, z) = (Octonion::random(s), Octonion::random(s), Octonion::random(s));
        x.para_mul(&y).b_n(&z) == x.b_n(&y.para_mul(&z))
    });
    out.push(sampled("para_product_associative_form", n, ok, Derived));
    let m = (n / 4).max(1);
    let ok = count_ok(m, || {
        let (x, y, z) = (Octonion::random(s), Octonion::random(s), Octonion::random(s));
        let t = trilinear_t(&x, &y, &z);
        octonion_q(3, &octonion_t3(&x, &y)) == &octonion_q(1, &x) * &octonion_q(2, &y)
            && octonion_q(2, &octonion_t2(&x, &z)) == &octonion_q(1, &x) * &octonion_q(3, &z)
            && octonion_q(1, &octonion_t1(&y, &z)) == &octonion_q(2, &y) * &octonion_q(3, &z)
            && t == trilinear_t(&y, &z, &x)
    });
    out.push(sampled("octonion_triality_orthogonal", m, ok, Derived));
    let pairs: Vec<(OkuboElement, OkuboElement)> =
        (0..10).map(|_| (OkuboElement::random(s), OkuboElement::random(s))).collect();
    let factor = calibrate_trace_factor(&pairs);
    let shown = factor.as_ref().map_or("none".to_string(), ToString::to_string);
    out.push(Check::new("okubo_calibrated_trace_factor", factor == Some(Rational::new(1, 3)), "1/3", &shown, Derived));
    let (x, y) = &pairs[0];
    let raw = okubo_mul(x.matrix(), y.matrix(), &Rational::one());
    out.push(Check::claim(
        "okubo_printed_trace_factor",
        raw.trace().is_zero(),
        "trace-free product",
        format!("trace {}", raw.trace()),
        "x ⋆ y = μ xy + (1 − μ) yx − tr_𝕄(yx) 1_𝕄",
    ));
    let ok = count_ok(n, || {
        let (x, y) = (OkuboElement::random(s), OkuboElement::random(s));
        x.star(&y).norm() == &x.norm() * &y.norm()
    });
    out.push(sampled("okubo_norm_is_multiplicative", n, ok, Derived).with_ref("μ = (1−ω)/3"));
    out
}

fn clifford_suite(s: &mut Sampler, samples: usize) -> Vec<Check> {
    let sp = QuadraticSpace::standard(8);
    let mut out = Vec::new();
    let e: Vec<CliffordElement> = (0..8).map(|i| CliffordElement::basis_vector(&sp, i)).collect();
    let relations = (0..8).all(|i| {
        (0..8).all(|j| {
            let anti = &(&e[i] * &e[j]) + &(&e[j] * &e[i]);
            let expected = if i == j { CliffordElement::scalar(&sp, CycloNum::from_int(-2)) } else { CliffordElement::zero(&sp) };
            anti == expected
        })
    });
    out.push(Check::new("generator_relations", relations, "e_i e_j + e_j e_i = -2δ_ij", relations, Trivial));
    let m = (samples / 10).clamp(1, 10);
    let ok = count_ok(m, || {
        let a = &random_unit_vector(&sp, s) * &random_unit_vector(&sp, s);
        let b = &random_unit_vector(&sp, s) * &random_unit_vector(&sp, s);
        a.is_spin() && (&a * &b).vector_rep().ok() == Some(&a.vector_rep().unwrap() * &b.vector_rep().unwrap())
    });
    out.push(sampled("vector_rep_multiplicative", m, ok, Derived).with_ref("ρ(x)v = ι(x) v x̄"));
    let c = center_elements(&sp);
    let rho_eta = c.eta.vector_rep().expect("η is in Pin");
    let minus = ExactMatrix::identity(8).scale(&CycloNum::from_int(-1));
    out.push(Check::equal("eta_squared", "1".to_string(), c.eta_squared.to_string(), Derived));
    out.push(Check::new(
        "eta_anticommutes_with_vectors",
        c.anticommutes_with_vectors && c.commutes_with_even_blades,
        true,
        c.anticommutes_with_vectors && c.commutes_with_even_blades,
        Derived,
    ));
    out.push(Check::claim(
        "vector_rep_of_eta",
        rho_eta.is_identity(),
        "Id",
        if rho_eta == minus { "-Id" } else { "other" },
        "ρ|_{C(Spin(8))} = 1",
    ));
    let non_commuting = bivector_exp(&sp, &[(Rational::new(1, 4), 0b101), (Rational::new(1, 4), 0b110)]);
    out.push(Check::new(
        "bivector_exp_rejects_noncommuting",
        matches!(non_commuting, Err(AlgebraError::NonCommutingBlades(_, _))),
        "error",
        non_commuting.is_err(),
        Trivial,
    ));
    out
}

fn spinor_suite(s: &mut Sampler, samples: usize) -> Vec<Check> {
    let l = labeling();
    let mut out = Vec::new();
    let n = samples.clamp(1, 50);
    let ok = count_ok(n, || {
        let (u, v) = (s.scalars(8), s.scalars(8));
        let bq = u.iter().zip(&v).map(|(a, b)| a * b).sum::<CycloNum>().scale(&Rational::from_int(-2));
        let x = SpinorElement::from_half(l.plus_masks(), &s.scalars(8));
        let y = SpinorElement::from_half(l.minus_masks(), &s.scalars(8));
        let z = &x + &y;
        &vector_action(&u, &vector_action(&v, &z)) + &vector_action(&v, &vector_action(&u, &z)) == z.scale(&bq)
    });
    out.push(sampled("clifford_relation_on_module", n, ok, Derived));
    let rank = spinor::blade_action_span().rank();
    out.push(Check::equal("blade_actions_independent", 256, rank, Derived));
    let g = spinor::gram_n(l.plus_masks());
    out.push(Check::new("pairing_symmetric_on_even", g == g.transpose(), true, g == g.transpose(), Derived));
    out.push(Check::equal("pairing_gram_rank", 8, g.rank(), Derived));
    let ok = count_ok(n, || {
        let v = s.scalars(8);
        let x = SpinorElement::random_in(l.plus_masks(), s);
        let y = SpinorElement::random_in(l.minus_masks(), s);
        pairing_n(&vector_action(&v, &x), &y) == pairing_n(&x, &vector_action(&v, &y))
    });
    out.push(sampled("pairing_vector_invariance", n, ok, Derived));
    out.push(Check::new("half_spin_labeling", true, "even = S+", l.describe(), Trivial));
    out
}

fn triality_suite(s: &mut Sampler, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let tri = SpinorTriality::get();
    let data = tri.data();
    let u = UnitChoice::standard();
    out.push(Check::new("unit_choice", true, "q(v1) = N(x1) = 1", u.describe(), Trivial));
    out.push(Check::new("y1_consistency", tri.t2(&u.v1, &u.y1()) == u.x1, "v1 y1 = x1", tri.t2(&u.v1, &u.y1()) == u.x1, Paper).with_ref("v₁ y₁ = v₁(v₁ x₁) = q(v₁) x₁ = x₁"));
    let i1 = triality::make_iota(1, &u).expect("unit choice");
    let i2 = triality::make_iota(2, &u).expect("unit choice");
    for (name, m) in [("iota1_squared", &i1), ("iota2_squared", &i2)] {
        let sq = TrialityMap::compose(m, m).is_identity();
        out.push(Check::new(name, sq, "identity", sq, Paper).with_ref("ι₁² = ι₂² = 1"));
    }
    let valid = i1.validate(data) && i2.validate(data);
    out.push(Check::new("iotas_are_triality_automorphisms", valid, true, valid, Derived));
    let t = triality::theta_prime(&u).expect("unit choice");
    let cube = t.pow(3).is_identity() && !t.is_identity();
    out.push(Check::new("theta_prime_order_three", cube, "order 3", cube, Paper).with_ref("with θ′³ = 1"));
    let explicit = triality::theta_prime_explicit(&u).expect("unit choice") == t;
    out.push(Check::new("theta_prime_explicit_formula", explicit, true, explicit, Paper).with_ref("θ′(v, x, y) = (x₁(v₁ x), y₁(x₁ y), v₁(y₁ v))"));
    let shift = triality::conjugated_components(&u).map(|c| c.iter().all(ExactMatrix::is_identity)).unwrap_or(false);
    out.push(Check::new("conjugate_is_cyclic_shift", shift, true, shift, Paper).with_ref("h = (Id_{SO(8)}, x₁ v₁, y₁ v₁)"));
    let d = triality::standard_dtheta();
    let order = d.pow(3).is_identity() && !d.is_identity();
    out.push(Check::new("dtheta_order_three", order, "dθ³ = Id", order, Paper).with_ref("There exists an automorphism θ of order 3 on Spin(8)"));
    let bracket = triality::preserves_bracket(d);
    out.push(Check::new("dtheta_preserves_bracket", bracket, "378 pairs", bracket, Derived));
    let fixed = triality::fixed_subalgebra(d).map(|f| f.dim).unwrap_or(0);
    out.push(Check::equal("dtheta_fixed_dim", 14, fixed, Paper).with_ref("Spin(8)^θ = G₂"));
    let m = (samples / 20).clamp(1, 5);
    let ok = count_ok(m, || {
        let vs = [s.scalars(8), s.scalars(8), s.scalars(8)];
        let mut good = data.check_orthogonality(std::slice::from_ref(&vs));
        for i in 1..=3 {
            for k in (1..=3).filter(|&k| k != i) {
                let (a, b) = (&vs[i - 1], &vs[k - 1]);
                let ab = data.product(i, a, k, b);
                let lhs = data.product(i, a, 6 - i - k, &ab);
                let q = data.q(i, a, a);
                good &= lhs == b.iter().map(|c| c * &q).collect::<Vec<_>>();
            }
        }
        let n = tri.q(2, &vs[1], &vs[1]);
        good && tri.t1(&vs[1], &tri.t3(&vs[0], &vs[1])) == vs[0].iter().map(|c| c * &n).collect::<Vec<_>>()
    });
    out.push(sampled("composition_lemma", m, ok, Paper).with_ref("v_i (v_i v_k) = q_i(v_i) v_k"));
    let sp = so8::space();
    let ok = count_ok(m, || {
        let a = (0..4).fold(CliffordElement::one(&sp), |acc, _| &acc * &random_unit_vector(&sp, s));
        let tr = triality::spin_to_triple(&a).expect("even unit product");
        tr.validate(data) && tr.intertwines_t3(data)
    });
    out.push(sampled("spin_triples_preserve_form", m, ok, Paper).with_ref("t₃(A₁(v₁), A₂(v₂)) = A₃(t₃(v₁, v₂))"));
    let minus = ExactMatrix::identity(8).scale(&CycloNum::from_int(-1));
    let flipped = TrialityMap::from_mats([ExactMatrix::identity(8), ExactMatrix::identity(8), minus]);
    out.push(Check::new("sign_flip_rejected", !flipped.validate(data), "rejected", !flipped.validate(data), Derived));
    let small = triality::TrialityData::new([ExactMatrix::identity(4), ExactMatrix::identity(4), ExactMatrix::identity(4)], vec![]);
    out.push(Check::new("dimension_gate", small.is_err(), "rejected", small.is_err(), Trivial).with_ref("only in dimensions 1, 2, 4, and 8"));
    let ok = count_ok(m, || {
        let tr: octonion_model::Triple = std::array::from_fn(|_| ExactMatrix::from_fn(8, 8, |_, _| s.scalar()));
        octonion_model::sigma2(&octonion_model::sigma1(&tr)) == octonion_model::theta(&tr)
    });
    out.push(sampled("octonion_model_sigma_product", m, ok, Paper).with_ref("θ(A, B, C) = (B, C, A)"));
    out
}

fn lie_suite(s: &mut Sampler, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let der = lie::octonion_derivations();
    out.push(Check::equal("der_octonions_dim", 14, der.dim(), Paper).with_ref("dim_F(G₂) = 14"));
    out.push(Check::equal("der_split_pair_dim", 0, lie::derivation_algebra(&lie::split_pair()).dim(), Trivial));
    out.push(Check::equal("der_m3_dim", 8, lie::derivation_algebra(&lie::matrix_algebra(3)).dim(), Derived));
    match lie::diagnose(der, 1) {
        Ok(d) => {
            out.push(Check::equal("g2_center_dim", 0, d.center_dim, Derived));
            out.push(Check::equal("g2_derived_dim", 14, d.derived_dim, Derived));
            out.push(Check::equal("g2_rank", 2, d.rank, Derived));
        }
        Err(e) => out.push(Check::new("g2_diagnostic", false, "closed", e, Derived)),
    }
    let m = (samples / 20).clamp(1, 5);
    let ok = count_ok(m, || {
        let d = der.combination(&s.scalars(14));
        let xs: Vec<Octonion> = (0..3).map(|_| Octonion::random(s)).collect();
        let dx = |o: &Octonion| Octonion::from_basis_coords(&d.mul_vec(&o.basis_coords()).expect("eight"));
        let total = &(&trilinear_t(&dx(&xs[0]), &xs[1], &xs[2]) + &trilinear_t(&xs[0], &dx(&xs[1]), &xs[2]))
            + &trilinear_t(&xs[0], &xs[1], &dx(&xs[2]));
        total.is_zero()
    });
    out.push(sampled("derivations_preserve_trilinear", m, ok, Derived));
    for (label, values, expected, reference) in [
        ("s3", S3, 8usize, "ξ₃(SL(3,ℂ)) = (C_{G₂(ℂ)}(s₃))°"),
        ("s4", S4, 6usize, "(C_{G₂(ℂ)}(s₄))° ≅ SO(4,ℂ)"),
    ] {
        let placed = lie::place_diagonal(values);
        let Some(placed) = placed else {
            out.push(Check::new(&format!("{label}_placement"), false, "an automorphism placement", "none", Derived));
            continue;
        };
        out.push(Check::new(
            &format!("{label}_placement"),
            true,
            "automorphism of the octonions",
            format!(
                "as given: {}; used {:?}; {} automorphism placements",
                placed.as_given_is_automorphism,
                placed.action.eigenvalues_in_basis_order(),
                placed.automorphism_placements
            ),
            Derived,
        ));
        let dim = lie::commutant_in(der, &placed.action.matrix()).map(|c| c.dim()).unwrap_or(0);
        out.push(Check::claim(&format!("{label}_commutant_dim"), dim == expected, expected, dim, reference));
    }
    out
}

fn endoscopy_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let s0 = endoscopy::build_s0();
    let rho = s0.vector_rep().expect("s0 is spin");
    let diag = endoscopy::s0_expected_diagonal();
    let iso = endoscopy::s0_in_isotropic_basis();
    out.push(Check::new("rho_s0_isotropic_basis", iso == diag, "diag(1, ω, ω⁻¹, 1, 1, ω⁻¹, ω, 1)", iso == diag, Paper)
        .with_ref("ρ(s₀) = diag(1, w, w⁻¹, 1, 1, w⁻¹, w, 1) ∈ SO(8, ℂ)"));
    out.push(Check::claim(
        "rho_s0_orthonormal_basis",
        rho == diag,
        "diagonal in e1..e8",
        "rotation in the planes (e2, e6), (e3, e7)",
        "where {e₁, e₂, …, e₈} is the standard orthonormal basis of ℂ⁸",
    ));
    out.push(Check::equal("rho_s0_order", 3, rho.order(12).unwrap_or(0), Derived));
    let s4 = endoscopy::build_s4prime();
    out.push(Check::new("s4prime_is_spin", s4.is_spin(), true, s4.is_spin(), Derived));
    let order4 = s4.vector_rep().ok().and_then(|r| r.order(24));
    out.push(Check::new("rho_s4prime_order", order4 == Some(3), 3, format!("{order4:?}"), Derived));
    let one = CliffordElement::one(&so8::space());
    let g2 = endoscopy::twisted_fixed(&one).map(|f| f.dim).unwrap_or(0);
    out.push(Check::equal("fixed_dim_g2", 14, g2, Paper).with_ref("Spin(8)^θ = G₂"));
    match endoscopy::twisted_fixed(&s0) {
        Ok(f) => out.push(Check::new("fixed_dim_s0", f.dim == 8 && f.closed, "8, closed", format!("{}, closed {}", f.dim, f.closed), Paper)
            .with_ref("connected centralizer of s in … is Ad(PGL(3,ℂ))")),
        Err(e) => out.push(Check::new("fixed_dim_s0", false, "8", e, Paper)),
    }
    let auto = triality::twisted_by(&s4, triality::standard_dtheta());
    let actual = match triality::fixed_subalgebra(&auto) {
        Ok(f) => format!("{}", f.dim),
        Err(_) => format!("not of order 3; kernel dim {}", triality::fixed_points(&auto).dim),
    };
    out.push(Check::claim("fixed_dim_s4prime", actual == "6", 6, &actual, "(SO(4), s₄′ ⋊ θ, ξ₄′)"));
    let d = ExactMatrix::diagonal(&[-1, -1, 1].map(CycloNum::from_int));
    let xi = endoscopy::xi3_embed(&d).ok();
    let expected = ExactMatrix::diagonal(&[-1, -1, 1, 1, -1, -1, 1].map(CycloNum::from_int));
    out.push(Check::new("xi3_diagonal", xi.as_ref() == Some(&expected), "diag(-1,-1,1,1,-1,-1,1)", xi.is_some(), Paper).with_ref("x ↦ diag(x, 1, ᵗx⁻¹)"));
    let shear = ExactMatrix::from_ints(&[&[1, 2, 0], &[0, 1, 3], &[0, 0, 1]]);
    let auto_ok = endoscopy::xi3_is_automorphism(&shear).unwrap_or(false);
    out.push(Check::new("xi3_preserves_product", auto_ok, true, auto_ok, Derived));
    let id2 = ExactMatrix::identity(2);
    let m2 = id2.scale(&CycloNum::from_int(-1));
    let kernel = endoscopy::so4_action(&m2, &m2).map(|m| m.is_identity()).unwrap_or(false);
    out.push(Check::new("so4_kernel", kernel, "(-1, -1) acts trivially", kernel, Paper).with_ref("The kernel is μ₂ = {±(I, I)}"));
    let x1 = ExactMatrix::from_ints(&[&[2, 1], &[1, 1]]);
    let x2 = ExactMatrix::from_ints(&[&[1, 0], &[5, 1]]);
    let preserved = endoscopy::so4_action(&x1, &x2).map(|m| lie::octonion_algebra().is_automorphism(&m)).unwrap_or(false);
    out.push(Check::new("so4_preserves_product", preserved, true, preserved, Derived));
    let (twisted, standard) = endoscopy::default_data();
    for d in twisted.iter().chain(&standard) {
        let kind = if d.twisted { "twisted" } else { "standard" };
        let name = format!("iota_{kind}_{}", d.name);
        let element = match &d.s_element {
            SElement::Identity => "1".to_string(),
            SElement::Spin(n) => n.clone(),
            SElement::Tuple(t) => format!("{t:?}"),
        };
        let actual = format!("{} (s = {element})", d.coefficient);
        out.push(match &d.expected {
            Some(e) => Check::new(&name, *e == d.coefficient, e, actual, Paper).with_ref("ι(G, G′) = k(G, G′) |Z̄(Ĝ′)^Γ|⁻¹ |Out_G(G′)|⁻¹"),
            None => Check::new(&name, true, format!("computed ({})", d.note), actual, Derived),
        });
    }
    out
}

fn weyl_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let rs = weyl::RootSystemG2::new();
    let mut pos = rs.positives.clone();
    pos.sort();
    let listed = format!("{pos:?}");
    out.push(Check::new("positive_roots", pos == [[0, 1], [1, 0], [1, 1], [2, 1], [3, 1], [3, 2]], "α, β, α+β, 2α+β, 3α+β, 3α+2β", listed, Paper)
        .with_ref("{α, β, α+β, 2α+β, 3α+β, 3α+2β}"));
    out.push(Check::equal("highest_root", "[3, 2]".to_string(), format!("{:?}", rs.highest_root()), Paper).with_ref("highest root is β₀ = 3α + 2β"));
    out.push(Check::equal("weyl_order", 12, weyl::weyl_group().len(), Derived));
    let table: Vec<u64> = weyl::rotation_table().iter().map(|(_, d)| *d).collect();
    out.push(Check::equal("regular_det_table", "[1, 3, 4, 3, 1]".to_string(), format!("{table:?}"), Derived));
    out.push(Check::equal("regular_inverse_sum", Rational::new(35, 12), weyl::regular_inverse_sum(), Derived));
    for (levi, expected) in [(Levi::Gl2Short, (1, 6)), (Levi::Gl2Long, (1, 6)), (Levi::Torus, (1, 12)), (Levi::Gl2Twisted, (1, 6))] {
        out.push(
            Check::equal(&format!("levi_coefficient_{levi}"), Rational::new(expected.0, expected.1), weyl::levi_coefficient(levi), Paper)
                .with_ref("1/6 Σ_{w ∈ W(GL(2)_s)_reg}"),
        );
    }
    let (w, det) = weyl::gl2_levi_regular();
    out.push(Check::equal("gl2_levi_det", 2, det, Derived));
    let term = weyl::levi_coefficient(Levi::Gl2Short) * Rational::new(1, det as i64);
    out.push(Check::new("gl2_levi_term", term == Rational::new(1, 12) && w == -1, "1/12", term, Derived));
    for (t, v) in [(CartanType::G2, 1), (CartanType::A2, 3), (CartanType::D4, 4)] {
        out.push(Check::equal(&format!("cartan_det_{t:?}"), v, weyl::cartan_determinant(t), Derived));
    }
    out
}

fn parameters_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let shapes = parameters::enumerate_shapes(parameters::TOTAL);
    let unique: std::collections::HashSet<&ParameterShape> = shapes.iter().collect();
    out.push(Check::equal("shape_count", parameters::SHAPE_COUNT_8, shapes.len(), Derived));
    out.push(Check::equal("shapes_distinct", shapes.len(), unique.len(), Trivial));
    let valid = shapes.iter().all(|s| parameters::validate(s).is_empty());
    out.push(Check::new("shapes_valid", valid, true, valid, Trivial).with_ref("square integrable if ℓ_i = 1 for all i, and elliptic if ℓ_i ≤ 2"));
    let flags = |s: &ParameterShape| {
        parameters::classify(s)
            .map(|c| format!("stable={} sq_int={} elliptic={} semi_stable={}", c.stable, c.square_integrable, c.elliptic, c.semi_stable))
            .unwrap_or_else(|e| e.to_string())
    };
    let p8 = ParameterShape::new(vec![Component::fixed(8, 1, FixedKind::Pgl3Type)]);
    let want = "stable=true sq_int=true elliptic=true semi_stable=false";
    out.push(Check::equal("classify_pgl3_8", want.to_string(), flags(&p8), Paper).with_ref("Im ψ ⊆ Ad(PGL(3,ℂ))"));
    let g7 = ParameterShape::new(vec![Component::fixed(7, 1, FixedKind::G2Type), Component::fixed(1, 1, FixedKind::G2Type)]);
    out.push(Check::equal("classify_g2_7_1", want.to_string(), flags(&g7), Derived));
    let ex = parameters::gl2_example();
    let c = parameters::classify(&ex).expect("valid example");
    out.push(Check::new("classify_gl2_example_flags", c.semi_stable && c.square_integrable, "semi_stable", flags(&ex), Derived));
    out.push(Check::claim("gl2_example_elliptic", !c.elliptic, "not elliptic", format!("elliptic = {}", c.elliptic), "is not an elliptic A-parameter"));
    let big = ParameterShape::new(vec![Component::fixed(8, 1, FixedKind::G2Type)]);
    out.push(Check::new("g2type_bound", !parameters::validate(&big).is_empty(), "violation", parameters::validate(&big).len(), Paper).with_ref("As G₂ ⊂ SO(7,ℂ), we have n_i ≤ 7"));
    out
}

/// Serialized report for the given seed, used to compare runs.
pub fn report_json(suites: &[Suite], seed: u64, samples: usize) -> String {
    run_suites(suites, seed, samples).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("galois".parse::<Suite>().is_err());
    }

    #[test]
    fn weyl_and_parameters_suites() {
        let r = run_suites(&[Suite::Parameters, Suite::Weyl], 7, 10);
        assert_eq!(r.suites[0].name, "weyl");
        assert_eq!(r.count(Status::Fail), 0);
        assert_eq!(r.count(Status::PaperMismatch), 1);
        assert_eq!(r.exit_code(), 2);
    }
}
