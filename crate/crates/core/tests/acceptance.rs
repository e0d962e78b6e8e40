//! The acceptance suite. Prints one line per criterion and exits non-zero
//! if any fails. Runs without the libtest harness so the lines are always
//! shown.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use hammock_core::corpus;
use hammock_core::fincat::{lax_colim, nerve, nerve_indexed, truncated_simplex_category, CatDiagram, FinCat};
use hammock_core::hammock::hammock_hom_space;
use hammock_core::hocolim::{
    bk_colim, bk_colim_indexed, bk_vs_diagonal_evidence, dual_bk_colim, duality_check, quillen_a_evidence,
    thomason_evidence, Outcome, SSetDiagram,
};
use hammock_core::homres::{
    build_cosimplicial_resolution, build_simplicial_resolution, comparison_report, cosimplicial_asphericity_check,
    cosimplicial_resolutions, middle_double_colimit, resolution_asphericity_check, simplicial_resolutions, tot,
    total_hom_complex, CompareOptions,
};
use hammock_core::locres::{hammock_vs_loc_evidence, loc_hom_space};
use hammock_core::modelcat::{validate_model_structure, ModelStructure};
use hammock_core::sset::snf::smith_normal_form;
use hammock_core::sset::{
    diagonal, homology, normalized_chain_complex, weq_evidence_pair, BiTruncSSet, SSetMap, TruncSSet,
};

use common::*;

/// Truncation for the simplicial-identity suite.
const K_IDENTITIES: usize = 3;
/// Time budgets.
const IDENTITIES_BUDGET: Duration = Duration::from_secs(60);
const MODEL_BUDGET: Duration = Duration::from_secs(30);
const COMPARISON_BUDGET: Duration = Duration::from_secs(120);
/// Random inputs: count and truncation.
const DUALITY_SAMPLES: usize = 25;
const DUALITY_K: usize = 2;
const COMPARISON_SAMPLES: usize = 10;
const COMPARISON_K: usize = 2;
/// Homology degrees.
const COMPARISON_DEGREE: usize = 1;
const QUILLEN_DEGREE: usize = 2;
const ASPHERICITY_DEGREE: usize = 2;
const ASPHERICITY_HEIGHT: usize = 2;
const INDEPENDENCE_DEGREE: usize = 1;
/// Bounds for hammock and localisation hom-spaces.
const MAX_LENGTH: usize = 4;
/// Relative categories without directed cycles, where the localisation
/// levels are finite and stable.
const ACYCLIC_RELCATS: [&str; 4] = ["I2-ids", "I2-a", "chain3-isos", "chain3-01"];
const SEED: u64 = 0x4a4d_4d4b;

type Outcome_ = Result<String, String>;

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn valid(name: &str, x: &TruncSSet) -> Result<(), String> {
    let r = x.validate();
    ensure(r.passed(), || format!("{name}: {r:?}"))
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:?}, budget {budget:?}"))?;
    Ok(t)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn canonical_models() -> Vec<(String, ModelStructure)> {
    [
        "chain3-trivial",
        "chain3-coarse",
        "square-poset-trivial",
        "square-poset-coarse",
    ]
    .iter()
    .map(|n| (n.to_string(), corpus::model_structure(n).expect("bundled")))
    .collect()
}

fn fixture_diagrams() -> Vec<(String, CatDiagram)> {
    let z2 = Arc::new(corpus::z2());
    let mut out = vec![("Z2 over pt".to_string(), CatDiagram::constant(cat("pt"), z2))];
    let mut r = rng(SEED);
    for shape in corpus::CATEGORY_NAMES {
        out.push((format!("random over {shape}"), random_cat_diagram(&mut r, shape)));
    }
    out
}

fn criterion_1() -> Outcome_ {
    let start = Instant::now();
    let k = K_IDENTITIES;
    let mut checked = 0usize;
    let mut check = |name: &str, x: &TruncSSet| -> Result<(), String> {
        checked += 1;
        valid(name, x)
    };
    let cats = corpus::categories();
    for (name, c) in &cats {
        let n = nerve(c, k);
        check(&format!("nerve {name}"), &n)?;
        let d = SSetDiagram::constant(c.clone(), TruncSSet::point(k));
        check(&format!("bk_colim pt over {name}"), &bk_colim(&d, k).map_err(err)?)?;
        check(
            &format!("dual_bk_colim pt over {name}"),
            &dual_bk_colim(&d, k).map_err(err)?,
        )?;
        for j in 1..=2 {
            let shape = Arc::new(truncated_simplex_category(j));
            check(
                &format!("tot of constant N({name}), j={j}"),
                &tot(&SSetDiagram::constant(shape, n.clone()), k).map_err(err)?,
            )?;
        }
    }
    for (name, d) in fixture_diagrams() {
        let x = SSetDiagram::nerve_of(&d, k).map_err(err)?;
        check(&format!("bk_colim {name}"), &bk_colim(&x, k).map_err(err)?)?;
        check(&format!("dual_bk_colim {name}"), &dual_bk_colim(&x, k).map_err(err)?)?;
    }
    for j in 1..=2 {
        let x = SSetDiagram::nerve_of(&cosimplicial_simplices(j), k).map_err(err)?;
        check(&format!("tot Δ^• over Δ≤{j}"), &tot(&x, k).map_err(err)?)?;
    }
    for (a, ca) in &cats {
        for (b, cb) in &cats {
            let x = BiTruncSSet::external_product(&nerve(ca, k), &nerve(cb, k)).map_err(err)?;
            check(&format!("diagonal N({a}) ⊠ N({b})"), &diagonal(&x))?;
        }
    }
    let mut relcats = corpus::relcats();
    relcats.extend(
        corpus::model_structures()
            .into_iter()
            .map(|(n, m)| (n, m.relcat().expect("valid"))),
    );
    for (name, r) in &relcats {
        for a in r.cat.objects() {
            for b in r.cat.objects() {
                let h = hammock_hom_space(r, a, b, k, MAX_LENGTH).map_err(err)?;
                check(&format!("hammock_hom_space {name} ({a},{b})"), h.sset())?;
            }
        }
    }
    for (name, m) in corpus::model_structures() {
        for a in m.cat.objects() {
            let cos = build_cosimplicial_resolution(&m, a, k).map_err(err)?;
            for b in m.cat.objects() {
                let sim = build_simplicial_resolution(&m, b, k).map_err(err)?;
                check(
                    &format!("total_hom_complex {name} ({a},{b})"),
                    &total_hom_complex(&cos.object, &sim.object).map_err(err)?,
                )?;
                check(
                    &format!("middle_double_colimit {name} ({a},{b})"),
                    &middle_double_colimit(&cos.object, &sim.object, k, 1).map_err(err)?,
                )?;
            }
        }
    }
    for name in ACYCLIC_RELCATS {
        let r = corpus::relcat_named(name).map_err(err)?;
        for a in r.cat.objects() {
            for b in r.cat.objects() {
                check(
                    &format!("loc_hom_space {name} ({a},{b})"),
                    loc_hom_space(&r, a, b, k, MAX_LENGTH).map_err(err)?.sset(),
                )?;
            }
        }
    }
    let t = within(start, IDENTITIES_BUDGET)?;
    Ok(format!("{checked} simplicial sets at k={k} in {:.1}s", t.as_secs_f64()))
}

/// The point diagram's Bousfield–Kan simplices `⟨chain, *⟩` sent to their
/// chains, checked to be a simplicial bijection.
fn criterion_2() -> Outcome_ {
    let k = K_IDENTITIES;
    for (name, c) in corpus::categories() {
        let bk = bk_colim_indexed(&SSetDiagram::constant(c.clone(), TruncSSet::point(k)), k).map_err(err)?;
        let n = nerve_indexed(&c, k);
        let levels = bk
            .keys
            .iter()
            .enumerate()
            .map(|(l, keys)| {
                keys.iter()
                    .map(|s| n.index[l].get(&s.chain).copied().ok_or("chain missing from nerve"))
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        let f = SSetMap::new(Arc::new(bk.sset), Arc::new(n.sset), levels).map_err(|e| format!("{name}: {e}"))?;
        ensure(f.is_levelwise_bijection(), || format!("{name}: not a bijection"))?;
    }
    Ok(format!("6 categories, explicit bijections at k={k}"))
}

fn criterion_3() -> Outcome_ {
    let mut r = rng(SEED + 3);
    let mut shapes = Vec::new();
    for i in 0..DUALITY_SAMPLES {
        let d = random_shape_diagram(&mut r);
        let x = SSetDiagram::nerve_of(&d, DUALITY_K).map_err(err)?;
        ensure(duality_check(&x, DUALITY_K).map_err(err)?, || {
            format!("sample {i} failed")
        })?;
        shapes.push(d.shape.num_objects());
    }
    Ok(format!("{DUALITY_SAMPLES} random diagrams at k={DUALITY_K}"))
}

fn criterion_4() -> Outcome_ {
    let mut r = rng(SEED + 4);
    for _ in 0..COMPARISON_SAMPLES {
        let (name, x) = random_bisimplicial(&mut r, COMPARISON_K);
        let e = bk_vs_diagonal_evidence(&x, COMPARISON_DEGREE).map_err(err)?;
        ensure(e.holds, || format!("{name}: {e:?}"))?;
    }
    Ok(format!(
        "{COMPARISON_SAMPLES} bisimplicial sets at d={COMPARISON_DEGREE}"
    ))
}

fn criterion_5() -> Outcome_ {
    let mut diagrams = vec![(
        "Z2 over pt".to_string(),
        CatDiagram::constant(cat("pt"), Arc::new(corpus::z2())),
    )];
    let mut r = rng(SEED + 5);
    while diagrams.len() < COMPARISON_SAMPLES {
        let d = random_shape_diagram(&mut r);
        diagrams.push((format!("random over {} objects", d.shape.num_objects()), d));
    }
    for (name, d) in &diagrams {
        let e = thomason_evidence(d, COMPARISON_DEGREE).map_err(err)?;
        ensure(e.holds, || format!("{name}: {e:?}"))?;
    }
    let d = &diagrams[0].1;
    let grothendieck = homology(&nerve(&lax_colim(d).map_err(err)?.cat, COMPARISON_K), 1);
    let hocolim = homology(
        &bk_colim(&SSetDiagram::nerve_of(d, COMPARISON_K).map_err(err)?, COMPARISON_K).map_err(err)?,
        1,
    );
    for h in [&grothendieck, &hocolim] {
        ensure(h.group() == (0, vec![2]), || format!("Z2 over pt: H_1 = {h:?}"))?;
    }
    Ok(format!(
        "{} diagrams at d={COMPARISON_DEGREE}; Z2 over pt has H_1 = Z/2 on both sides",
        diagrams.len()
    ))
}

fn criterion_6() -> Outcome_ {
    let mut n = 0;
    for f in corpus::functors().into_iter().filter(|f| f.has_adjoint()) {
        let q = quillen_a_evidence(&f.functor, QUILLEN_DEGREE).map_err(err)?;
        ensure(q.outcome == Outcome::Holds, || format!("{}: {:?}", f.name, q.outcome))?;
        n += 1;
    }
    ensure(n > 0, || "no functor with an adjoint".into())?;
    Ok(format!("{n} functors with adjoints at d={QUILLEN_DEGREE}"))
}

fn criterion_7() -> Outcome_ {
    let start = Instant::now();
    for (name, m) in canonical_models() {
        let r = validate_model_structure(&m);
        ensure(r.valid, || format!("{name}: {:?}", r.failures))?;
    }
    let corruptions = corpus::corruptions();
    ensure(corruptions.len() == 20, || format!("{} corruptions", corruptions.len()))?;
    for c in &corruptions {
        let r = validate_model_structure(&c.structure);
        ensure(!r.valid && r.failed_axioms().contains(&c.axiom), || {
            format!("{}: cited {:?}, failed {:?}", c.name, c.axiom, r.failed_axioms())
        })?;
    }
    let t = within(start, MODEL_BUDGET)?;
    Ok(format!(
        "4 structures accepted, 20 corruptions rejected in {:.2}s",
        t.as_secs_f64()
    ))
}

/// `Ho(M)(a, b)` for the canonical structures on a poset: with weak
/// equivalences the isomorphisms it is the poset itself; with every map a
/// weak equivalence every hom-set is a point when the poset is connected.
fn ho_oracle(m: &ModelStructure, a: usize, b: usize) -> usize {
    let c: &FinCat = &m.cat;
    if c.morphism_ids().all(|f| m.is_weq(f)) {
        1
    } else {
        c.hom(a, b).len()
    }
}

fn criterion_8() -> Outcome_ {
    let opts = CompareOptions::default();
    let mut pairs = 0;
    for (name, m) in canonical_models() {
        let start = Instant::now();
        for a in m.cat.objects() {
            for b in m.cat.objects() {
                let r = comparison_report(&m, a, b, &opts).map_err(err)?;
                let oracle = ho_oracle(&m, a, b);
                ensure(r.pi0_agree && r.spaces[0].pi0 == oracle && r.ho_hom == oracle, || {
                    format!(
                        "{name} ({a},{b}): {:?} vs oracle {oracle}",
                        r.spaces.iter().map(|s| s.pi0).collect::<Vec<_>>()
                    )
                })?;
                pairs += 1;
            }
        }
        within(start, COMPARISON_BUDGET).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{pairs} pairs, four spaces agree at π0 with |Ho(M)(A,B)|"))
}

fn criterion_9() -> Outcome_ {
    let mut n = 0;
    for (name, m) in corpus::model_structures() {
        for o in m.cat.objects() {
            for res in simplicial_resolutions(&m, o, ASPHERICITY_HEIGHT, 4).map_err(err)? {
                let r = resolution_asphericity_check(&m, &res, ASPHERICITY_DEGREE).map_err(err)?;
                ensure(r.aspherical, || format!("{name}: simplicial resolution of {o}: {r:?}"))?;
                n += 1;
            }
            for res in cosimplicial_resolutions(&m, o, ASPHERICITY_HEIGHT, 4).map_err(err)? {
                let r = cosimplicial_asphericity_check(&m, &res, ASPHERICITY_DEGREE).map_err(err)?;
                ensure(r.aspherical, || {
                    format!("{name}: cosimplicial resolution of {o}: {r:?}")
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} resolutions aspherical at d={ASPHERICITY_DEGREE}"))
}

fn criterion_10() -> Outcome_ {
    let mut pairs = 0;
    for name in ["I2-ids", "I2-a", "chain3-isos"] {
        let r = corpus::relcat_named(name).map_err(err)?;
        for a in r.cat.objects() {
            for b in r.cat.objects() {
                let e = hammock_vs_loc_evidence(&r, a, b, K_IDENTITIES, MAX_LENGTH, 2).map_err(err)?;
                ensure(e.pi0_agree && e.loc_stable && e.hammock_bounds.pi0_stable, || {
                    format!("{name} ({a},{b}): {e:?}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs agree at π0 with stable bounds"))
}

/// `H_1` from verified Smith forms of `∂_1` and `∂_2`.
fn h1_by_snf(x: &TruncSSet) -> Result<(usize, Vec<i64>), String> {
    let c = normalized_chain_complex(x);
    let mut forms = Vec::new();
    for n in [1, 2] {
        let m = c.boundaries[n].to_dense();
        let s = smith_normal_form(&m);
        ensure(s.verify(&m), || format!("U·M·V check failed for ∂_{n}"))?;
        forms.push(s);
    }
    let (r1, r2) = (forms[0].invariants.len(), forms[1].invariants.len());
    let torsion = forms[1].invariants.iter().copied().filter(|&t| t > 1).collect();
    Ok((c.ranks[1] - r1 - r2, torsion))
}

fn criterion_11() -> Outcome_ {
    let z2 = nerve(&corpus::z2(), 3);
    let boundary = TruncSSet::boundary_simplex(2, 3);
    for (name, x, expected) in [("N(Z2)", &z2, (0, vec![2])), ("∂Δ²", &boundary, (1, vec![]))] {
        let snf = h1_by_snf(x)?;
        ensure(snf == expected, || format!("{name}: SNF gives {snf:?}"))?;
        let h = homology(x, 1);
        ensure(h.group() == expected && h.reliable, || {
            format!("{name}: homology gives {h:?}")
        })?;
    }
    Ok("H_1(N(Z2)) = Z/2, H_1(∂Δ²) = Z".into())
}

fn criterion_12() -> Outcome_ {
    let m = corpus::model_structure("walking-iso-trivial").map_err(err)?;
    let rs = simplicial_resolutions(&m, 0, 2, 8).map_err(err)?;
    let first = rs.first().ok_or("no resolution")?;
    let other = rs
        .iter()
        .find(|r| r.object.levels() != first.object.levels())
        .ok_or("only one resolution found")?;
    ensure(
        first.certificate.is_resolution && other.certificate.is_resolution,
        || "uncertified resolution".into(),
    )?;
    let mut pairs = 0;
    for a in m.cat.objects() {
        let cos = build_cosimplicial_resolution(&m, a, 2).map_err(err)?;
        let x = total_hom_complex(&cos.object, &first.object).map_err(err)?;
        let y = total_hom_complex(&cos.object, &other.object).map_err(err)?;
        let e = weq_evidence_pair(&x, &y, INDEPENDENCE_DEGREE).map_err(err)?;
        ensure(e.holds, || format!("source {a}: {e:?}"))?;
        pairs += 1;
    }
    Ok(format!(
        "two resolutions of x, {pairs} sources, d={INDEPENDENCE_DEGREE}"
    ))
}

type Criterion = (&'static str, fn() -> Outcome_);

fn main() {
    let criteria: [Criterion; 12] = [
        ("simplicial identities", criterion_1),
        ("Bousfield–Kan colimit of a point is the nerve", criterion_2),
        ("duality isomorphism", criterion_3),
        ("Bousfield–Kan colimit vs diagonal", criterion_4),
        ("Thomason evidence", criterion_5),
        ("Quillen A evidence", criterion_6),
        ("model-axiom verifier", criterion_7),
        ("four derived hom-spaces at π0", criterion_8),
        ("resolution asphericity", criterion_9),
        ("hammock vs simplicial localisation", criterion_10),
        ("homology engine", criterion_11),
        ("resolution independence", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {e} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
