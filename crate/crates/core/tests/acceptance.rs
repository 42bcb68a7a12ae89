//! Acceptance suite: one line per criterion, each exhaustive over a small
//! corpus. Runs as a plain binary so the lines are printed as they finish.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use locdual::absolutes::{absolute_space, adjoint_pair};
use locdual::ba::{all_homs, ElemSet, FcIdeal, IndexSet, Powerset, StructMap};
use locdual::completion::{
    completion_lemma, completions_equivalent, extend_contact, fc as cfc, lca_completion, relabel_completion,
};
use locdual::contact::{bounded_clusters, rho_s, weight};
use locdual::corpus;
use locdual::duality::{counit_lambda, fc as dfc, product_sum_check, psi_a, theta_a, theta_t, unit_tx};
use locdual::error::Result;
use locdual::ideals::{sigma_stone, sigma_zlba, Pseudolattice};
use locdual::lba::{
    classify_pair, counit_naturality, counit_sigma, eg_el_roundtrip, el_eg_roundtrip, fc as lfc, functor_el,
    functor_ep, unit_e, unit_naturality, LocalPair,
};
use locdual::topo::{all_topologies, classify_map, continuous_maps, find_homeomorphism, FinSpace};

type Criterion = (&'static str, fn() -> Result<Outcome>);

/// Outcome of one criterion: instances examined and the first failure.
struct Outcome {
    checked: usize,
    failure: Option<String>,
    note: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checked: 0,
            failure: None,
            note: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn pairs_upto(n: usize) -> Vec<LocalPair> {
    corpus::local_pairs(n)
}

fn stone_zlba() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 0..=5 {
        let x = FinSpace::discrete(n);
        let u = unit_tx(&x)?;
        o.record(u.homeomorphism, || format!("t_X on discrete({n})"));
        let t = theta_t(&x)?;
        let c = counit_lambda(&t.pair)?;
        o.record(c.iso.holds() && c.ideal_onto_ck, || format!("λ on CO(discrete({n}))"));
    }
    for p in pairs_upto(4) {
        let c = counit_lambda(&p)?;
        o.record(c.iso.holds(), || format!("λ on {p:?}"));
        o.record(c.ideal_onto_ck, || format!("λ(I) = CK on {p:?}"));
        let u = unit_tx(&theta_a(&p)?.space)?;
        o.record(u.homeomorphism, || format!("t on the dual of {p:?}"));
    }
    Ok(o)
}

fn simple_is_principal() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 0..=4 {
        let alg = Powerset::new(n)?;
        let p = Pseudolattice::from_powerset(alg)?;
        let principal: BTreeSet<u64> = (0..p.len()).map(|a| p.down(a)).collect();
        for j in p.ideals_brute() {
            o.record(p.is_simple(j)? == principal.contains(&j), || format!("ideal {} of P({n})", p.show(j)));
        }
    }
    Ok(o)
}

fn sigma_isos() -> Result<Outcome> {
    let mut o = Outcome::new();
    for x in corpus::zero_dimensional_spaces(4) {
        let s = sigma_stone(&x)?;
        o.record(s.check.holds(), || format!("Σ on {x:?}"));
    }
    for p in pairs_upto(4) {
        if classify_pair(p.algebra, &p.ideal)?.zlba.holds() {
            let s = sigma_zlba(p.algebra, &p.ideal)?;
            o.record(s.check.holds(), || format!("Σ on {p:?}"));
        }
    }
    Ok(o)
}

fn clusters_are_ultrafilters() -> Result<Outcome> {
    let mut o = Outcome::new();
    for p in pairs_upto(4) {
        let t = rho_s(p.algebra, &p.ideal)?;
        let clusters: BTreeSet<ElemSet> = bounded_clusters(&t).into_iter().map(|c| c.members).collect();
        let ultra: BTreeSet<ElemSet> = p.algebra.bounded_ultrafilters(&p.ideal)?.into_iter().collect();
        o.record(clusters == ultra, || format!("{p:?}"));
    }
    Ok(o)
}

fn gbpl_characterizations() -> Result<Outcome> {
    let mut o = Outcome::new();
    let mut chain3_negative = false;
    for (name, p) in corpus::pseudolattices() {
        let r = p.is_gbpl();
        o.record(r.agree, || name.clone());
        if name == "chain3" {
            chain3_negative = !r.gbpl;
        }
    }
    o.record(chain3_negative, || "the 3-chain is classified as a GBPL".into());
    Ok(o)
}

fn functor_equivalences() -> Result<Outcome> {
    let mut o = Outcome::new();
    let pairs = pairs_upto(3);
    for p in &pairs {
        let ep = functor_ep(p)?;
        let u = unit_e(p, &ep)?;
        o.record(u.check.holds() && u.ideal_onto, || format!("E^z E^p on {p:?}"));
        let c = counit_sigma(p)?;
        o.record(c.sigma.check.holds() && c.inverse.is_some(), || format!("E^p E^z on {p:?}"));
        let el = functor_el(p)?;
        o.record(el_eg_roundtrip(&el)?, || format!("E^l E^g on E^l{p:?}"));
        o.record(eg_el_roundtrip(p)?, || format!("E^g E^l on {p:?}"));
    }
    for s1 in pairs.iter().filter(|p| p.algebra.atom_count() <= 2) {
        for s2 in pairs.iter().filter(|p| p.algebra.atom_count() <= 2) {
            for phi in all_homs(s1.algebra, s2.algebra) {
                o.record(unit_naturality(s1, s2, &phi)?.holds(), || format!("unit naturality {phi:?}"));
                o.record(counit_naturality(s1, s2, &phi)?.holds(), || format!("counit naturality {phi:?}"));
            }
        }
    }
    for (name, p) in corpus::pseudolattices() {
        if p.is_gbpl().gbpl {
            o.record(el_eg_roundtrip(&p)?, || format!("E^l E^g on {name}"));
        }
    }
    o.record(lfc::check_unit(6).holds(), || "e on FinCofin(ℕ) into Si(Fin)".into());
    o.record(lfc::el_is_gbpl(6), || "Fin(ℕ) is a GBPL".into());
    Ok(o)
}

fn product_duality() -> Result<Outcome> {
    let mut o = Outcome::new();
    let lcas = corpus::lca_corpus(3);
    for a in &lcas {
        for b in &lcas {
            let ps = product_sum_check(&[a.clone(), b.clone()])?;
            o.record(ps.homeomorphism, || {
                format!("P({}) x P({})", a.algebra.atom_count(), b.algebra.atom_count())
            });
        }
    }
    o.note = Some(format!("{} LCAs in the corpus", lcas.len()));
    Ok(o)
}

fn weight_theorem() -> Result<Outcome> {
    let mut o = Outcome::new();
    let mut plain = Vec::new();
    for t in corpus::lca_corpus(3) {
        let (w, _) = weight(&t)?;
        let x = psi_a(&t)?.space;
        let (uw, _) = x.union_closed_weight()?;
        plain.push(format!("{}/{}", w, x.weight()?.0));
        o.record(w == uw, || format!("P({}): w(T) = {w}, union-closed w(X) = {uw}", t.algebra.atom_count()));
    }
    o.note = Some(format!("w(T)/plain w(X): {}", plain.join(" ")));
    Ok(o)
}

fn pi_weight_theorem() -> Result<Outcome> {
    let mut o = Outcome::new();
    for x in corpus::spaces(4).into_iter().filter(|x| x.is_pi_semiregular()) {
        let a = x.pi_weight()?.0;
        let b = x.rc_algebra().algebra().pi_weight()?.0;
        o.record(a == b, || format!("{x:?}: {a} vs {b}"));
    }
    Ok(o)
}

fn map_taxonomy() -> Result<Outcome> {
    let mut o = Outcome::new();
    let spaces = corpus::spaces(3);
    for x in &spaces {
        for y in &spaces {
            for f in continuous_maps(x, y) {
                let flags = classify_map(&f).flags.expect("continuous");
                let v = flags.violations();
                o.record(v.is_empty(), || format!("{f:?}: {v:?}"));
            }
        }
    }
    Ok(o)
}

fn mr_gives_rc_iso() -> Result<Outcome> {
    let mut o = Outcome::new();
    let spaces = corpus::spaces(3);
    for x in &spaces {
        for y in &spaces {
            for f in continuous_maps(x, y) {
                if classify_map(&f).flags.is_some_and(|fl| fl.mr) {
                    let a = adjoint_pair(&f)?;
                    o.record(a.psi_iso, || format!("{f:?}"));
                }
            }
        }
    }
    Ok(o)
}

fn absolute_facts() -> Result<Outcome> {
    let mut o = Outcome::new();
    for n in 0..=4 {
        for x in all_topologies(n) {
            let w = absolute_space(&x)?;
            o.record(w.rc_iso_check.holds() && w.extremally_disconnected, || format!("{x:?}"));
            o.record(w.via_contact, || format!("contact construction on {x:?}"));
            let ww = absolute_space(&w.space)?;
            o.record(find_homeomorphism(&w.space, &ww.space).is_some(), || format!("idempotence on {x:?}"));
        }
    }
    Ok(o)
}

fn completion_facts() -> Result<Outcome> {
    let mut o = Outcome::new();
    for t in corpus::lca_corpus(3) {
        let n = t.algebra.atom_count();
        let c = lca_completion(&t)?;
        o.record(c.checks.holds(), || format!("completion of P({n}): {:?}", c.checks));
        o.record(completion_lemma(&t, &c.target, &c.embedding)?.holds(), || format!("lemma on P({n})"));
        let e = extend_contact(&t, &StructMap::identity(t.algebra))?;
        o.record(e.eta == t, || format!("case formulas on P({n})"));
        let again = lca_completion(&t)?;
        o.record(completions_equivalent(&c, &again).iso.is_some(), || format!("two runs on P({n})"));
        let perm: Vec<usize> = (0..n).rev().collect();
        let moved = relabel_completion(&c, &perm)?;
        o.record(completions_equivalent(&c, &moved).iso.is_some(), || format!("relabelled P({n})"));
    }
    o.record(cfc::check_against_rho_s().is_none(), || "FinCofin(ℕ) in P(ℕ)".into());
    Ok(o)
}

fn fincofin_suite() -> Result<Outcome> {
    let mut o = Outcome::new();
    let fin = FcIdeal::fin();
    let class = lfc::classify(&fin);
    o.record(class.lba.holds() && class.plba.holds(), || format!("{class:?}"));
    o.record(!class.zlba.holds(), || "classified as ZLBA".into());
    let (evens, join) = lfc::zlba_witness();
    o.record(evens == IndexSet::evens() && join.is_none(), || format!("witness {evens:?} has join {join:?}"));
    let d = dfc::theta_a(&fin)?;
    o.record(!d.points.cofinite && d.points.principal_at == IndexSet::all(), || format!("{d:?}"));
    o.record(fin.density().holds(), || "Fin is not dense".into());
    o.record(fin.primality().holds(), || "Fin is not prime".into());
    o.record(fin.principal_generator().is_none(), || "Fin is principal".into());
    o.record(lfc::prime_dense_criterion(&fin)?.equivalent(), || "prime dense criterion".into());
    o.note = class.zlba.witness().map(|w| format!("not ZLBA: {w}"));
    Ok(o)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("Stone/ZLBA round trips", stone_zlba),
        ("simple ideals are principal", simple_is_principal),
        ("Σ isomorphisms", sigma_isos),
        ("bounded clusters are bounded ultrafilters", clusters_are_ultrafilters),
        ("GBPL characterizations agree", gbpl_characterizations),
        ("E-functor equivalences", functor_equivalences),
        ("product duality", product_duality),
        ("weight of an LCA and of its dual", weight_theorem),
        ("π-weight of π-semiregular spaces", pi_weight_theorem),
        ("map taxonomy", map_taxonomy),
        ("MR-maps give RC isomorphisms", mr_gives_rc_iso),
        ("absolutes", absolute_facts),
        ("LCA-completions", completion_facts),
        ("symbolic FinCofin", fincofin_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match result {
            Ok(o) => {
                let slow = secs >= 60.0;
                let pass = o.failure.is_none() && !slow;
                if !pass {
                    failed += 1;
                }
                let mut s = format!(
                    "{} {:2} {name}: {} instances, {secs:.2}s",
                    if pass { "PASS" } else { "FAIL" },
                    i + 1,
                    o.checked
                );
                if let Some(f) = o.failure {
                    s.push_str(&format!("; first failure: {f}"));
                }
                if slow {
                    s.push_str("; over the 60s budget");
                }
                if let Some(n) = o.note {
                    s.push_str(&format!("; {n}"));
                }
                s
            }
            Err(e) => {
                failed += 1;
                format!("FAIL {:2} {name}: error {e}", i + 1)
            }
        };
        println!("{line}");
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
