//! Runs the ten acceptance criteria and prints one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;

use gentorsion::braid3::{self, parse_braid};
use gentorsion::certificate::{verify, Certificate};
use gentorsion::extension::ExtElement;
use gentorsion::modular::{
    self, axis, classify, elliptic_fixed_point, gen3_torsion, parabolic_generator, reverser_on_axis_check,
    reversible, Gen3Tag, IsometryClass, Reason,
};
use gentorsion::oracle::{sweep_agreement, SearchBudget};
use gentorsion::seifert::{
    classify_reversible_families, gen_n_certificate, parse_seifert, quotient_presentation, quotient_scheme,
    BaseSurface, ExceptionalFiber, Family, SeifertData,
};
use gentorsion::word::{enumerate_reduced, is_conjugate, reduce, Word};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn w(t: &str) -> Word {
    Word::parse(&modular::scheme(), t).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn parabolic_torsion() -> Outcome {
    let mut yes = Vec::new();
    for n in (1..=10i64).flat_map(|n| [n, -n]) {
        let g = parabolic_generator().pow(n);
        let v = gen3_torsion(&g, modular::default_search_bound(&g)).map_err(err)?;
        if v.tag == Gen3Tag::Yes {
            let c = v.certificate.ok_or("yes without certificate")?;
            ensure(c.validates(&g), || format!("certificate fails for n = {n}"))?;
            // h1 = k⁻¹ with k conjugate to b or b⁻¹
            ensure(c.h1.mul(&c.k).is_identity(), || format!("h1 ≠ k⁻¹ for n = {n}"))?;
            let b_like = is_conjugate(&w("b"), &c.k).map_err(err)?.is_some()
                || is_conjugate(&w("b^2"), &c.k).map_err(err)?.is_some();
            ensure(b_like, || format!("k = {} not a conjugate of b^±1", c.k))?;
            yes.push(n);
        }
    }
    yes.sort();
    ensure(yes == vec![-2, 2], || format!("yes at {yes:?}"))?;
    Ok("yes exactly at n = ±2".into())
}

fn reversibility_sweep(budget: &SearchBudget) -> Outcome {
    let r = sweep_agreement("pslz-reversible", budget).map_err(err)?;
    ensure(r.mismatches.is_empty() && r.beyond_budget == 0, || format!("{:?}", r.mismatches))?;
    Ok(format!("{} words, 0 mismatches", r.checked))
}

fn involutive_reversers() -> Outcome {
    let mut count = 0;
    for g in enumerate_reduced(&modular::scheme(), 6).skip(1) {
        if classify(&g).map_err(err)? != IsometryClass::Hyperbolic {
            continue;
        }
        if let Some(r) = reversible(&g).map_err(err)? {
            ensure(r.reverser.pow(2).is_identity(), || format!("{} reverses {g} but is not an involution", r.reverser))?;
            let (u, v) = &r.involutions;
            ensure(u.pow(2).is_identity() && v.pow(2).is_identity() && u.mul(v) == g, || {
                format!("bad decomposition for {g}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} hyperbolic reversers, all involutions"))
}

fn axis_geometry() -> Outcome {
    let mut count = 0;
    for g in enumerate_reduced(&modular::scheme(), 8).skip(1) {
        if classify(&g).map_err(err)? != IsometryClass::Hyperbolic {
            continue;
        }
        if let Some(r) = reversible(&g).map_err(err)? {
            let on = reverser_on_axis_check::<i64, f64>(&g, &r.reverser, modular::DEFAULT_TOLERANCE).map_err(err)?;
            ensure(on, || format!("fixed point of {} off the axis of {g}", r.reverser))?;
            count += 1;
        }
    }
    ensure(count >= 20, || format!("only {count} instances"))?;
    let g = w("a b a b^2");
    let ax = axis::<i64>(&g).map_err(err)?;
    let p = elliptic_fixed_point::<i64>(&w("a")).map_err(err)?;
    let dx = p.re.clone() - ax.center.clone();
    ensure(
        ax.center == Ratio::new(1, 2)
            && ax.radius_sq == Ratio::new(5, 4)
            && p.re == Ratio::from_integer(0)
            && p.im_sq == Ratio::from_integer(1)
            && dx.clone() * dx + p.im_sq == ax.radius_sq,
        || "hand instance does not hold exactly".into(),
    )?;
    Ok(format!("{count} reversible hyperbolic elements on their axes"))
}

fn isomorphism_reproduction() -> Outcome {
    let d = parse_seifert("(O,o,0|1,(2,1),(3,1));boundaries=1").map_err(err)?;
    let q = quotient_presentation(&d);
    let rels: Vec<String> = q.relations.iter().map(ToString::to_string).collect();
    ensure(q.generators == ["c1", "c2"] && rels == ["c1^2 = 1", "c2^3 = 1"], || q.to_string())?;
    let scheme = quotient_scheme(&d).ok_or("no quotient scheme")?.scheme;
    let pslz = modular::scheme();
    ensure(
        (0..2).all(|i| scheme.order(i) == pslz.order(i)) && scheme.len() == 2,
        || format!("quotient scheme {scheme}"),
    )?;
    let nf = |t: &str| braid3::normal_form(&parse_braid(t).unwrap());
    ensure(nf("x^2") == nf("h") && nf("y^3") == nf("h"), || "x² = y³ = h fails".into())?;
    let full = nf("s1 s2 s1 s2 s1 s2");
    ensure(full.m == 1 && full.q.is_identity(), || format!("(s1 s2)^3 = {full}"))?;
    ensure(nf("s1 s2 s1") == nf("s2 s1 s2"), || "braid relation fails".into())?;
    Ok(format!("quotient {q}, (s1 s2)^3 = (1, 1)"))
}

fn commutator_family(budget: &SearchBudget) -> Outcome {
    let s = braid3::scheme();
    let x = braid3::x();
    let mut count = 0;
    for q in enumerate_reduced(&modular::scheme(), 4) {
        for m in -1..=1 {
            let k = ExtElement::from_parts(&s, m, &q).map_err(err)?;
            let c = x.commutator(&k);
            if c.is_identity() {
                continue;
            }
            let r = braid3::reversible_element(&c).map_err(err)?;
            ensure(r.is_some(), || format!("[x, {k}] not reported reversible"))?;
            count += 1;
        }
    }
    for t in ["h", "s1"] {
        let r = braid3::reversible_b3(&parse_braid(t).unwrap()).map_err(err)?;
        ensure(r.is_none(), || format!("{t} reported reversible"))?;
    }
    let r = sweep_agreement("b3-reversible", budget).map_err(err)?;
    ensure(r.mismatches.is_empty(), || format!("{:?}", r.mismatches))?;
    Ok(format!(
        "{count} commutators reversible; oracle sweep {} inputs, 0 mismatches ({} beyond budget)",
        r.checked, r.beyond_budget
    ))
}

fn product_certificate() -> Outcome {
    let text = "y s1 y S1 s1 y S1 H";
    let g = braid3::normal_form(&parse_braid(text).unwrap());
    let v = braid3::gen3_torsion_element(&g, braid3::default_search_bound(&g)).map_err(err)?;
    ensure(v.tag == Gen3Tag::Yes, || format!("verdict {:?}", v.tag))?;
    let c = v.certificate.ok_or("no certificate")?;
    let cert = Certificate::Torsion {
        group: "b3".into(),
        element: text.into(),
        n: 3,
        conjugators: vec!["1".into(), braid3::section(&c.h1).to_string(), braid3::section(&c.k).to_string()],
    };
    ensure(verify(&cert).map_err(err)?, || "verify rejected the certificate".into())?;
    let rejected = braid3::product_form_offset(1, 1);
    ensure(rejected == Err(Reason::NoIntegerOffset { n: 3, total: 2 }), || format!("{rejected:?}"))?;
    Ok(format!("certificate verified; e1 e2 h^x rejected: {}", rejected.unwrap_err()))
}

fn offset_arithmetic() -> Outcome {
    let d = SeifertData::trefoil();
    for n in [2, 3] {
        let c = gen_n_certificate(&d, n).map_err(err)?.ok_or(format!("no certificate for n = {n}"))?;
        ensure(c.x == -1 && n * c.x + c.m1 + c.m2 == 0, || format!("n = {n}: {c:?}"))?;
        ensure(c.validate_in_b3(&d).map_err(err)?, || format!("n = {n} fails in B3"))?;
    }
    let bare = parse_seifert("(O,o,0 | 1); boundaries=1").map_err(err)?;
    ensure(gen_n_certificate(&bare, 3).map_err(err)?.is_none(), || "certificate without fibers".into())?;
    Ok("x = -1 for n = 2, 3; both validate in B3".into())
}

fn random_data(rng: &mut ChaCha8Rng) -> SeifertData {
    loop {
        let orientable = rng.gen_bool(0.5);
        let genus = rng.gen_range(if orientable { 0..=2 } else { 1..=3 });
        let boundaries = rng.gen_range(0..=2);
        let fibers = (0..rng.gen_range(0..=4))
            .map(|_| ExceptionalFiber {
                mu: rng.gen_range(2..=6),
                beta: rng.gen_range(-3..=3),
            })
            .collect();
        let names: Vec<String> = (1..=genus)
            .flat_map(|i| if orientable { vec![format!("a{i}"), format!("b{i}")] } else { vec![format!("x{i}")] })
            .chain((1..=boundaries).map(|i| format!("d{i}")))
            .collect();
        let phi: Vec<(String, i8)> = names.into_iter().map(|n| (n, if rng.gen_bool(0.3) { -1 } else { 1 })).collect();
        let refs: Vec<(&str, i8)> = phi.iter().map(|(n, v)| (n.as_str(), *v)).collect();
        if let Ok(d) = SeifertData::new(orientable, genus, boundaries, rng.gen_range(-2..=2), fibers, &refs) {
            return d;
        }
    }
}

fn family_reports() -> Outcome {
    let trefoil = classify_reversible_families(&SeifertData::trefoil());
    ensure(
        trefoil.families == [Family::TwoHalfTwists { i: 1, j: 1, sign: -1, phi_k: 1, beta: 1 }],
        || format!("trefoil: {:?}", trefoil.families),
    )?;

    let g1 = parse_seifert("(O,o,1 | 0; (4,1),(4,1)); boundaries=0; phi: a1=-1,b1=+1").map_err(err)?;
    let r = classify_reversible_families(&g1);
    let has = |f: &Family| r.families.contains(f);
    ensure(
        has(&Family::PowersOfH)
            && has(&Family::TwoHalfTwists { i: 1, j: 2, sign: 1, phi_k: -1, beta: 1 })
            && has(&Family::TwoHalfTwists { i: 1, j: 2, sign: -1, phi_k: 1, beta: 1 })
            && r.families.iter().all(|f| matches!(f, Family::PowersOfH | Family::TwoHalfTwists { .. })),
        || format!("genus one: {:?}", r.families),
    )?;

    let kb = parse_seifert("(N,2 | 0); boundaries=0; phi: x1=-1,x2=-1").map_err(err)?;
    let r = classify_reversible_families(&kb);
    ensure(
        r.families.iter().any(|f| matches!(f, Family::SurfaceException { surface: BaseSurface::KleinBottle, .. })),
        || format!("klein bottle: {:?}", r.families),
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let d = random_data(&mut rng);
        for f in classify_reversible_families(&d).families {
            if let Family::TwoHalfTwists { i, j, .. } = f {
                let (a, b) = (d.exceptional[i - 1], d.exceptional[j - 1]);
                ensure(a.mu % 2 == 0 && b.mu % 2 == 0 && a.beta == b.beta, || format!("{f:?} for {d}"))?;
            }
        }
    }
    Ok("fixtures match; 100 random data sets respect parity and beta".into())
}

fn invariance() -> Outcome {
    let scheme = modular::scheme();
    let words: Vec<Word> = enumerate_reduced(&scheme, 6).skip(1).collect();
    let conjugators: Vec<Word> = enumerate_reduced(&scheme, 2).collect();
    let mut certificates = 0;
    for g in &words {
        let raw = g.to_raw();
        ensure(reduce(&raw, &scheme).map_err(err)? == *g, || format!("{g} not idempotent"))?;
        let rev = reversible(g).map_err(err)?;
        let tag = gen3_torsion(g, modular::default_search_bound(g)).map_err(err)?;
        for other in std::iter::once(g.inverse()).chain(conjugators.iter().map(|k| g.conjugate_by(k))) {
            ensure(reversible(&other).map_err(err)?.is_some() == rev.is_some(), || {
                format!("reversibility differs between {g} and {other}")
            })?;
            let t = gen3_torsion(&other, modular::default_search_bound(&other)).map_err(err)?;
            ensure(t.tag == tag.tag, || format!("gen3 differs between {g} and {other}"))?;
        }
        if let Some(r) = &rev {
            let (u, v) = &r.involutions;
            for cert in [
                Certificate::Reverser { group: "pslz".into(), element: g.to_string(), reverser: r.reverser.to_string() },
                Certificate::Involutions {
                    group: "pslz".into(),
                    element: g.to_string(),
                    first: u.to_string(),
                    second: v.to_string(),
                },
            ] {
                ensure(verify(&cert).map_err(err)?, || format!("{cert:?}"))?;
                certificates += 1;
            }
        }
        if let Some(c) = &tag.certificate {
            let cert = Certificate::Torsion {
                group: "pslz".into(),
                element: g.to_string(),
                n: 3,
                conjugators: vec!["1".into(), c.h1.to_string(), c.k.to_string()],
            };
            ensure(verify(&cert).map_err(err)?, || format!("{cert:?}"))?;
            certificates += 1;
        }
    }
    Ok(format!("{} words, {certificates} certificates verified", words.len()))
}

fn main() -> ExitCode {
    let pslz_budget = SearchBudget::default();
    let b3_budget = SearchBudget::new(4, 2, 1_000_000).unwrap();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("parabolic gen-3 torsion exactly at n = ±2", Box::new(parabolic_torsion)),
        ("PSL(2,Z) reversibility agrees with brute force", Box::new(move || reversibility_sweep(&pslz_budget))),
        ("hyperbolic reversers are involutions", Box::new(involutive_reversers)),
        ("reverser fixed points lie on axes", Box::new(axis_geometry)),
        ("trefoil quotient and B3 relations", Box::new(isomorphism_reproduction)),
        ("commutator family and B3 oracle agreement", Box::new(move || commutator_family(&b3_budget))),
        ("B3 product-of-conjugates certificate", Box::new(product_certificate)),
        ("fiber offset arithmetic on trefoil data", Box::new(offset_arithmetic)),
        ("reversible family reports", Box::new(family_reports)),
        ("invariance and certificate verification", Box::new(invariance)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
