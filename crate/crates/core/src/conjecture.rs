//! Conjecture checkers, identity suites and the batch verification harness.
//!
//! Every check produces a `Verdict`. Hypotheses are evaluated first and a
//! failed hypothesis yields a vacuous verdict, never a silently skipped
//! conclusion; conclusion failures under satisfied hypotheses are
//! counterexamples, which on proved ground signal engine bugs.

use crate::error::{Error, Result};
use crate::maxclass::{catalog, CatalogGroup, Family, MaxClassProfile};
use crate::modrep::{
    is_faithful, is_quadratic_element, is_quadratic_subgroup, unipotent_minpoly_degree,
    Representation,
};
use crate::offender::{
    best_offenders, enumerate_ea, thompson_subgroup, timmesfeld_replace,
    weakly_closed_quadratic_offender, EaPoset, OffenderReport,
};
use crate::pcgroup::{
    commutator_subgroup_pairs, maximal_subgroups, omega1, Caps, CentralSeries, Element,
    PcGroup, Subgroup,
};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    NotApplicable { reason: String },
    Witness { witness: Vec<Vec<u32>>, detail: String },
    Vacuous { detail: String },
    Counterexample { detail: String, group: String, module: String },
    InternalInconsistency { detail: String },
}

impl Verdict {
    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. } | Verdict::InternalInconsistency { .. })
    }

    pub fn status_name(&self) -> &'static str {
        match self {
            Verdict::NotApplicable { .. } => "not_applicable",
            Verdict::Witness { .. } => "witness",
            Verdict::Vacuous { .. } => "vacuous",
            Verdict::Counterexample { .. } => "counterexample",
            Verdict::InternalInconsistency { .. } => "internal_inconsistency",
        }
    }
}

fn witness_of(elems: Vec<Element>, detail: String) -> Verdict {
    Verdict::Witness { witness: elems.into_iter().map(|e| e.0).collect(), detail }
}

/// Everything the per-module checkers consume, computed once.
pub struct ModuleContext<'a> {
    pub g: &'a PcGroup,
    pub rho: &'a Representation,
    pub poset: &'a EaPoset,
    pub series: &'a CentralSeries,
    pub faithful: bool,
    /// None when the module is not faithful.
    pub offenders: Option<OffenderReport>,
    pub omega_z: Subgroup,
    /// First quadratic element of Omega_1(Z(G)), if any.
    pub central_quadratic: Option<Element>,
    /// Reproduction data for counterexample verdicts.
    pub group_name: String,
    pub module_name: String,
}

impl<'a> ModuleContext<'a> {
    pub fn analyze(
        g: &'a PcGroup,
        rho: &'a Representation,
        poset: &'a EaPoset,
        series: &'a CentralSeries,
        group_name: &str,
        module_name: &str,
        caps: &Caps,
    ) -> Result<ModuleContext<'a>> {
        let faithful = is_faithful(g, rho, caps)?;
        let offenders = if faithful { Some(best_offenders(g, poset, rho, caps)?) } else { None };
        let z = crate::pcgroup::center(g, caps)?;
        let omega_z = omega1(g, &z, caps)?;
        let central_quadratic = omega_z
            .elements()
            .iter()
            .find(|x| !x.is_identity() && is_quadratic_element(rho, x))
            .cloned();
        Ok(ModuleContext {
            g,
            rho,
            poset,
            series,
            faithful,
            offenders,
            omega_z,
            central_quadratic,
            group_name: group_name.into(),
            module_name: module_name.into(),
        })
    }

    pub fn fmodule(&self) -> bool {
        self.offenders.as_ref().map_or(false, |r| r.fmodule)
    }

    pub fn j0(&self) -> Option<i64> {
        self.offenders.as_ref().and_then(|r| r.j0)
    }

    fn counterexample(&self, detail: String) -> Verdict {
        Verdict::Counterexample {
            detail,
            group: self.g.presentation().to_pcp_string(),
            module: format!("{}/{}", self.group_name, self.module_name),
        }
    }
}

/// Quadratic-element search over Omega_1(Z(G)) on faithful F-modules.
pub fn check_quadratic(ctx: &ModuleContext) -> Verdict {
    if !ctx.faithful {
        return Verdict::NotApplicable { reason: "module is not faithful".into() };
    }
    if !ctx.fmodule() {
        return Verdict::NotApplicable { reason: "not an F-module".into() };
    }
    match &ctx.central_quadratic {
        Some(x) => witness_of(vec![x.clone()], "quadratic element in Omega_1(Z(G))".into()),
        None => ctx.counterexample("no quadratic element in Omega_1(Z(G))".into()),
    }
}

/// Minimal-polynomial bound search over Omega_1(Z(G)).
pub fn check_oliver(ctx: &ModuleContext) -> Verdict {
    if !ctx.faithful {
        return Verdict::NotApplicable { reason: "module is not faithful".into() };
    }
    if !ctx.fmodule() {
        return Verdict::NotApplicable { reason: "not an F-module".into() };
    }
    let bound = ctx.g.p() - 1;
    for x in ctx.omega_z.elements() {
        if x.is_identity() {
            continue;
        }
        match unipotent_minpoly_degree(ctx.rho, x) {
            Ok(k) if k <= bound => {
                return witness_of(
                    vec![x.clone()],
                    format!("minimal polynomial degree {k} <= p - 1"),
                );
            }
            Ok(_) => {}
            Err(e) => {
                return Verdict::InternalInconsistency { detail: format!("non-unipotent action: {e}") }
            }
        }
    }
    ctx.counterexample(format!("no central element with minimal polynomial degree <= {bound}"))
}

/// Instance-wise replacement checks: a quadratic best offender with equal
/// j-exponent inside every best offender, and a weakly closed quadratic
/// offender at the top j-exponent whose refinement lands in normal closures.
pub fn replacement_suite(ctx: &ModuleContext, caps: &Caps) -> Verdict {
    if !ctx.faithful {
        return Verdict::NotApplicable { reason: "module is not faithful".into() };
    }
    let Some(report) = &ctx.offenders else {
        return Verdict::NotApplicable { reason: "module is not faithful".into() };
    };
    if !report.fmodule {
        return Verdict::Vacuous { detail: "no offenders to replace".into() };
    }
    let mut replaced = 0;
    for e in report.best_members() {
        match timmesfeld_replace(ctx.poset, report, e, ctx.rho) {
            Ok(_) => replaced += 1,
            Err(err) => return Verdict::InternalInconsistency { detail: err.to_string() },
        }
    }
    match weakly_closed_quadratic_offender(ctx.g, ctx.poset, report, caps) {
        Ok(Some(w)) => Verdict::Witness {
            witness: ctx.poset.members[w.member].gens().iter().map(|x| x.0.clone()).collect(),
            detail: format!(
                "replaced {replaced} best offenders; weakly closed quadratic offender at j-exponent {} with {} refinement pairs",
                w.j0,
                w.refinement.len()
            ),
        },
        Ok(None) => Verdict::Vacuous { detail: "no offenders to replace".into() },
        Err(err) => Verdict::InternalInconsistency { detail: err.to_string() },
    }
}

/// Commuting quadratic pair identities. Samples pairs (a, b) with
/// c = [a, b] != 1 central in <a, b> and a quadratic; for each, with
/// d = a c and e = a c^2, the bilinear coefficient law
/// [v, a^i d^j, a^k d^l] = (il + jk) [v, a, d], the scalar identity
/// [v, e, e] = -4 [v, a, d], and the conclusion [V, <a, c>, <a, c>] = 0.
pub fn quadratic_pair_suite(ctx: &ModuleContext, samples: u32, seed: u64) -> Verdict {
    use rand::{Rng, SeedableRng};
    if !ctx.faithful {
        return Verdict::NotApplicable { reason: "module is not faithful".into() };
    }
    let g = ctx.g;
    let rho = ctx.rho;
    let p = g.p();
    let dim = rho.dim();

    let quadratics: Vec<Element> =
        g.elements().filter(|x| is_quadratic_element(rho, x)).collect();
    if quadratics.is_empty() {
        return Verdict::Vacuous { detail: "no quadratic elements on this module".into() };
    }

    let exhaustive = g.order() <= 100;
    let mut pairs: Vec<(Element, Element)> = Vec::new();
    if exhaustive {
        for a in &quadratics {
            for b in g.elements() {
                pairs.push((a.clone(), b.clone()));
            }
        }
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let elems: Vec<Element> = g.elements().collect();
        let mut attempts = 0;
        let mut found = 0;
        while found < samples && attempts < samples * 200 {
            attempts += 1;
            let a = quadratics[rng.gen_range(0..quadratics.len())].clone();
            let b = elems[rng.gen_range(0..elems.len())].clone();
            let c = g.comm(&a, &b);
            if !c.is_identity() && g.commute(&c, &a) && g.commute(&c, &b) {
                pairs.push((a, b));
                found += 1;
            }
        }
    }

    let vectors: Vec<Vec<u32>> = if dim <= 16 {
        (0..dim)
            .map(|j| {
                let mut v = vec![0u32; dim];
                v[j] = 1;
                v
            })
            .collect()
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
        (0..8)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect())
            .collect()
    };

    let mut qualifying = 0u64;
    let mut tuple_checks = 0u64;
    for (a, b) in &pairs {
        let c = g.comm(a, b);
        if c.is_identity() || !g.commute(&c, a) || !g.commute(&c, b) {
            continue;
        }
        qualifying += 1;
        let d = g.mul(a, &c);
        let e = g.mul(a, &g.mul(&c, &c));
        // powers a^i d^j as elements
        let a_pows: Vec<Element> = (0..p as i64).map(|i| g.pow(a, i)).collect();
        let d_pows: Vec<Element> = (0..p as i64).map(|j| g.pow(&d, j)).collect();
        for v in &vectors {
            let vad = rho.commutator_vector(&d, &rho.commutator_vector(a, v));
            // scalar identity [v, e, e] = -4 [v, a, d]
            let vee = rho.commutator_vector(&e, &rho.commutator_vector(&e, v));
            let scalar = (4 * (p - 1)) % p; // -4 mod p
            let want: Vec<u32> = vad.iter().map(|&x| x * scalar % p).collect();
            if vee != want {
                return ctx.counterexample(format!(
                    "[v,e,e] != -4 [v,a,d] for a = {:?}, b = {:?}",
                    a.0, b.0
                ));
            }
            for i in 0..p {
                for j in 0..p {
                    let first = g.mul(&a_pows[i as usize], &d_pows[j as usize]);
                    let w = rho.commutator_vector(&first, v);
                    for k in 0..p {
                        for l in 0..p {
                            let second = g.mul(&a_pows[k as usize], &d_pows[l as usize]);
                            let lhs = rho.commutator_vector(&second, &w);
                            let coeff = (i * l + j * k) % p;
                            let rhs: Vec<u32> = vad.iter().map(|&x| x * coeff % p).collect();
                            tuple_checks += 1;
                            if lhs != rhs {
                                return ctx.counterexample(format!(
                                    "coefficient law fails at (i,j,k,l) = ({i},{j},{k},{l}) for a = {:?}, b = {:?}",
                                    a.0, b.0
                                ));
                            }
                        }
                    }
                }
            }
        }
        // conclusion: E = <a, c> is quadratic
        let e_sub = match Subgroup::closure(g, &[a.clone(), c.clone()], &Caps::default()) {
            Ok(s) => s,
            Err(err) => return Verdict::InternalInconsistency { detail: err.to_string() },
        };
        if !is_quadratic_subgroup(rho, &e_sub) {
            return ctx.counterexample(format!(
                "[V, E, E] != 0 for E = <a, c>, a = {:?}, b = {:?}",
                a.0, b.0
            ));
        }
    }
    if qualifying == 0 {
        return Verdict::Vacuous { detail: "no qualifying pair (a, b)".into() };
    }
    Verdict::Witness {
        witness: Vec::new(),
        detail: format!(
            "{qualifying} qualifying pairs, {tuple_checks} coefficient tuples verified{}",
            if exhaustive { " (exhaustive)" } else { "" }
        ),
    }
}

/// One structural sub-suite outcome.
#[derive(Debug, Clone, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    pub verdict: Verdict,
}

/// The structural hypothesis-to-conclusion suites. Each evaluates its
/// hypothesis exactly as stated and only then asserts the conclusion;
/// vacuous outcomes stay visible in the report.
pub fn structure_suites(ctx: &ModuleContext, caps: &Caps) -> Vec<NamedVerdict> {
    let mut out = Vec::new();
    let g = ctx.g;
    let p = g.p() as u64;
    let no_central_quadratic = ctx.central_quadratic.is_none();
    let z2 = ctx.series.upper_term(g, 2);
    let z3 = ctx.series.upper_term(g, 3);
    let z4 = ctx.series.upper_term(g, 4);
    let g2 = ctx.series.lower_term(g, 2);

    // offender order bounds under a quadratic-free center
    out.push(NamedVerdict {
        name: "offender-order-bounds".into(),
        verdict: if !ctx.faithful || !ctx.fmodule() {
            Verdict::Vacuous { detail: "needs a faithful F-module".into() }
        } else if !no_central_quadratic {
            Verdict::Vacuous { detail: "Omega_1(Z(G)) has a quadratic element".into() }
        } else {
            let report = ctx.offenders.as_ref().expect("faithful");
            let mut bad = None;
            for e in &report.offenders {
                let order = ctx.poset.members[e.member].order();
                if order < p * p {
                    bad = Some(format!("offender of order {order}"));
                    break;
                }
                if e.weakly_closed && order < p * p * p {
                    bad = Some(format!("weakly closed offender of order {order}"));
                    break;
                }
            }
            match bad {
                Some(detail) => ctx.counterexample(detail),
                None => Verdict::Witness {
                    witness: Vec::new(),
                    detail: format!("{} offenders respect the bounds", report.offenders.len()),
                },
            }
        },
    });

    // no quadratic element in the second center
    out.push(NamedVerdict {
        name: "second-center-quadratic-free".into(),
        verdict: if !ctx.faithful || !ctx.fmodule() {
            Verdict::Vacuous { detail: "needs a faithful F-module".into() }
        } else if !no_central_quadratic {
            Verdict::Vacuous { detail: "Omega_1(Z(G)) has a quadratic element".into() }
        } else {
            match z2.elements().iter().find(|x| is_quadratic_element(ctx.rho, x)) {
                Some(x) => {
                    ctx.counterexample(format!("quadratic element {:?} in Z_2(G)", x.0))
                }
                None => Verdict::Witness {
                    witness: Vec::new(),
                    detail: format!("no quadratic element among {} elements of Z_2(G)", z2.order()),
                },
            }
        },
    });

    // weakly closed quadratic offenders centralize the low upper-central layers
    out.push(NamedVerdict {
        name: "weakly-closed-action".into(),
        verdict: (|| {
            if !ctx.faithful || !ctx.fmodule() {
                return Verdict::Vacuous { detail: "needs a faithful F-module".into() };
            }
            if !no_central_quadratic {
                return Verdict::Vacuous { detail: "Omega_1(Z(G)) has a quadratic element".into() };
            }
            let report = ctx.offenders.as_ref().expect("faithful");
            let targets: Vec<usize> = report
                .offenders
                .iter()
                .filter(|e| e.quadratic && e.weakly_closed)
                .map(|e| e.member)
                .collect();
            if targets.is_empty() {
                return Verdict::Vacuous { detail: "no weakly closed quadratic offender".into() };
            }
            for &m in &targets {
                let e = &ctx.poset.members[m];
                let commutes = |h: &Subgroup| {
                    h.gens().iter().all(|a| e.gens().iter().all(|b| g.commute(a, b)))
                };
                let meet_trivial = |h: &Subgroup| {
                    e.elements().iter().filter(|x| h.contains(x)).count() == 1
                };
                if !meet_trivial(&z2) {
                    return ctx.counterexample("Z_2(G) meets the offender".into());
                }
                if !commutes(&z2) {
                    return ctx.counterexample("[Z_2(G), E] != 1".into());
                }
                if !commutes(&z3) {
                    return ctx.counterexample("[Z_3(G), E] != 1".into());
                }
                let z4e = match commutator_subgroup_pairs(g, &z4, e, caps) {
                    Ok(s) => s,
                    Err(err) => return Verdict::InternalInconsistency { detail: err.to_string() },
                };
                let ok = z4e
                    .elements()
                    .iter()
                    .all(|x| z3.contains(x) && e.contains(x));
                if !ok {
                    return ctx.counterexample("[Z_4(G), E] is not inside Z_3(G) and E".into());
                }
            }
            Verdict::Witness {
                witness: Vec::new(),
                detail: format!("{} weakly closed quadratic offenders checked", targets.len()),
            }
        })(),
    });

    // class at most four with a quadratic-free center cannot carry an F-module
    out.push(NamedVerdict {
        name: "low-class-fmodule".into(),
        verdict: if !ctx.faithful {
            Verdict::Vacuous { detail: "module is not faithful".into() }
        } else if ctx.series.class > 4 {
            Verdict::Vacuous { detail: format!("class {} > 4", ctx.series.class) }
        } else if !no_central_quadratic {
            Verdict::Vacuous { detail: "Omega_1(Z(G)) has a quadratic element".into() }
        } else if ctx.fmodule() {
            ctx.counterexample("F-module on a class <= 4 group with quadratic-free center".into())
        } else {
            Verdict::Witness { witness: Vec::new(), detail: "not an F-module, as required".into() }
        },
    });

    // abelian normal subgroups contain no offender
    out.push(NamedVerdict {
        name: "abelian-normal-offender-free".into(),
        verdict: (|| {
            if !ctx.faithful {
                return Verdict::Vacuous { detail: "module is not faithful".into() };
            }
            if !no_central_quadratic {
                return Verdict::Vacuous { detail: "Omega_1(Z(G)) has a quadratic element".into() };
            }
            let report = ctx.offenders.as_ref().expect("faithful");
            // E sits inside an abelian normal subgroup iff E^G is abelian
            let mut checked = 0;
            for e in &report.offenders {
                let nc = match ctx.poset.members[e.member].normal_closure(g, caps) {
                    Ok(s) => s,
                    Err(err) => return Verdict::InternalInconsistency { detail: err.to_string() },
                };
                if nc.is_abelian(g) {
                    return ctx.counterexample(
                        "offender with abelian normal closure sits in an abelian normal subgroup"
                            .into(),
                    );
                }
                checked += 1;
            }
            Verdict::Witness {
                witness: Vec::new(),
                detail: format!("{checked} offenders lie in no abelian normal subgroup"),
            }
        })(),
    });

    // offenders never centralize the derived subgroup
    out.push(NamedVerdict {
        name: "offenders-move-derived".into(),
        verdict: (|| {
            if !ctx.faithful {
                return Verdict::Vacuous { detail: "module is not faithful".into() };
            }
            if !no_central_quadratic {
                return Verdict::Vacuous { detail: "Omega_1(Z(G)) has a quadratic element".into() };
            }
            let report = ctx.offenders.as_ref().expect("faithful");
            let mut checked = 0;
            for e in &report.offenders {
                let member = &ctx.poset.members[e.member];
                let centralizes = g2
                    .gens()
                    .iter()
                    .all(|a| member.gens().iter().all(|b| g.commute(a, b)));
                if centralizes {
                    return ctx.counterexample("offender centralizing the derived subgroup".into());
                }
                checked += 1;
            }
            Verdict::Witness {
                witness: Vec::new(),
                detail: format!("{checked} offenders move the derived subgroup"),
            }
        })(),
    });

    // a quadratic offender whose normal closure splits off an abelian normal
    // subgroup forces a central quadratic element
    out.push(NamedVerdict {
        name: "closure-splitting-center".into(),
        verdict: (|| {
            if !ctx.faithful {
                return Verdict::Vacuous { detail: "module is not faithful".into() };
            }
            let report = ctx.offenders.as_ref().expect("faithful");
            let mut hypothesis: Option<String> = None;
            'outer: for e in report.offenders.iter().filter(|e| e.quadratic) {
                let member = &ctx.poset.members[e.member];
                let nc = match member.normal_closure(g, caps) {
                    Ok(s) => s,
                    Err(err) => return Verdict::InternalInconsistency { detail: err.to_string() },
                };
                let mut candidates: Vec<Subgroup> = Vec::new();
                if nc.is_abelian(g) {
                    candidates.push(nc.clone());
                }
                // center of the closure
                let zc: Vec<Element> = nc
                    .elements()
                    .iter()
                    .filter(|x| nc.gens().iter().all(|s| g.commute(s, x)))
                    .cloned()
                    .collect();
                candidates.push(Subgroup::from_element_set(g, zc, caps));
                for term in ctx.series.lower.iter().skip(1) {
                    if term.is_subgroup_of(&nc) && term.is_abelian(g) {
                        candidates.push(term.clone());
                    }
                }
                for k in candidates {
                    if !k.is_normal(g) || !k.is_abelian(g) {
                        continue;
                    }
                    let mut gens = member.gens().to_vec();
                    gens.extend(k.gens().iter().cloned());
                    let ek = match Subgroup::closure(g, &gens, caps) {
                        Ok(s) => s,
                        Err(err) => {
                            return Verdict::InternalInconsistency { detail: err.to_string() }
                        }
                    };
                    if ek == nc {
                        hypothesis = Some(format!(
                            "quadratic offender of order {} with splitting closure",
                            member.order()
                        ));
                        break 'outer;
                    }
                }
            }
            match hypothesis {
                None => Verdict::Vacuous {
                    detail: "no quadratic offender with a splitting normal closure found".into(),
                },
                Some(h) => match &ctx.central_quadratic {
                    Some(x) => witness_of(vec![x.clone()], h),
                    None => ctx.counterexample(format!(
                        "{h}, yet Omega_1(Z(G)) has no quadratic element"
                    )),
                },
            }
        })(),
    });

    out
}

/// Abelian invariants of B/(B meet Z) for abelian B, via the order filtration
/// in the quotient.
fn quotient_abelian_invariants(g: &PcGroup, b: &Subgroup, z: &Subgroup) -> Vec<u64> {
    let p = g.p() as u64;
    let quotient_size = b.order() / z.order();
    let mut counts = Vec::new();
    let mut k = 0u32;
    loop {
        let c = b
            .elements()
            .iter()
            .filter(|x| {
                let mut y = (*x).clone();
                for _ in 0..k {
                    y = g.pow(&y, p as i64);
                }
                z.contains(&y)
            })
            .count() as u64
            / z.order();
        counts.push(log_p(c, p));
        if c == quotient_size {
            break;
        }
        k += 1;
    }
    let mut invs = Vec::new();
    for k in 1..counts.len() {
        let at_least_k = counts[k] - counts[k - 1];
        let at_least_k1 = if k + 1 < counts.len() { counts[k + 1] - counts[k] } else { 0 };
        for _ in 0..(at_least_k - at_least_k1) {
            invs.push(p.pow(k as u32));
        }
    }
    invs.sort_unstable_by(|a, b| b.cmp(a));
    invs
}

fn log_p(mut x: u64, p: u64) -> u64 {
    let mut k = 0;
    while x > 1 {
        assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

/// For abelian normal A with cyclic quotient and normal B <= A in a
/// non-abelian group: [B, G] and B/(B meet Z(G)) have equal abelian
/// invariants. Hypothesis violations are errors, not counterexamples.
pub fn commutator_quotient_check(
    g: &PcGroup,
    a: &Subgroup,
    b: &Subgroup,
    caps: &Caps,
) -> Result<Verdict> {
    let full = Subgroup::full(g, caps)?;
    if full.is_abelian(g) {
        return Err(Error::HypothesisViolation("the ambient group is abelian".into()));
    }
    if !a.is_abelian(g) || !a.is_normal(g) {
        return Err(Error::HypothesisViolation("A must be abelian and normal".into()));
    }
    if !b.is_subgroup_of(a) || !b.is_normal(g) {
        return Err(Error::HypothesisViolation("B must be normal and inside A".into()));
    }
    // G/A cyclic: successive quotients along a generator outside A
    let index = full.order() / a.order();
    let cyclic = if index == 1 {
        true
    } else {
        g.elements().any(|x| {
            // x generates G modulo A
            let mut cur = x.clone();
            let mut k = 1;
            while !a.contains(&cur) {
                cur = g.mul(&cur, &x);
                k += 1;
            }
            k as u64 == index
        })
    };
    if !cyclic {
        return Err(Error::HypothesisViolation("G/A is not cyclic".into()));
    }

    let bg = crate::pcgroup::commutator_subgroup(g, b, &full, caps)?;
    let z = crate::pcgroup::center(g, caps)?;
    let bz_elems: Vec<Element> =
        b.elements().iter().filter(|x| z.contains(x)).cloned().collect();
    let bz = Subgroup::from_element_set(g, bz_elems, caps);
    let lhs = bg.abelian_invariants(g);
    let rhs = quotient_abelian_invariants(g, b, &bz);
    if lhs != rhs {
        return Ok(Verdict::Counterexample {
            detail: format!("invariants differ: [B,G] has {lhs:?}, B/(B meet Z) has {rhs:?}"),
            group: g.presentation().to_pcp_string(),
            module: "-".into(),
        });
    }
    if bg.order() * bz.order() != b.order() {
        return Ok(Verdict::Counterexample {
            detail: "order identity |[B,G]| * |B meet Z| = |B| fails".into(),
            group: g.presentation().to_pcp_string(),
            module: "-".into(),
        });
    }
    Ok(Verdict::Witness {
        witness: Vec::new(),
        detail: format!("invariants {lhs:?} agree"),
    })
}

/// All subgroups of an abelian subgroup, by single-element extensions.
fn subgroups_of_abelian(g: &PcGroup, a: &Subgroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    assert!(a.is_abelian(g));
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Subgroup::trivial(g));
    let mut frontier = vec![Subgroup::trivial(g)];
    while let Some(s) = frontier.pop() {
        for x in a.elements() {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.gens().to_vec();
            gens.push(x.clone());
            let bigger = Subgroup::closure(g, &gens, caps)?;
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Runs the commutator-quotient identity over every (abelian maximal A,
/// normal B <= A) pair of the group.
pub fn commutator_quotient_suite(g: &PcGroup, caps: &Caps) -> Result<Verdict> {
    let full = Subgroup::full(g, caps)?;
    if full.is_abelian(g) {
        return Ok(Verdict::Vacuous { detail: "ambient group is abelian".into() });
    }
    let maximals = maximal_subgroups(g, caps)?;
    let mut pairs = 0;
    for a in maximals.iter().filter(|m| m.is_abelian(g)) {
        for b in subgroups_of_abelian(g, a, caps)? {
            if !b.is_normal(g) {
                continue;
            }
            match commutator_quotient_check(g, a, &b, caps)? {
                Verdict::Witness { .. } => pairs += 1,
                bad @ (Verdict::Counterexample { .. } | Verdict::InternalInconsistency { .. }) => {
                    return Ok(bad)
                }
                _ => {}
            }
        }
    }
    if pairs == 0 {
        Ok(Verdict::Vacuous { detail: "no abelian maximal subgroup".into() })
    } else {
        Ok(Verdict::Witness {
            witness: Vec::new(),
            detail: format!("{pairs} (A, B) pairs verified"),
        })
    }
}

// ---------------------------------------------------------------------------
// batch harness

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub p: u32,
    pub max_n: u32,
    pub seed: u64,
    pub samples: u32,
    pub max_elements: u64,
    pub max_rank: u32,
    pub include: Vec<String>,
    #[serde(skip)]
    pub include_texts: Vec<(String, String)>,
}

impl SuiteConfig {
    pub fn default_suite(p: u32, max_n: u32, seed: u64) -> SuiteConfig {
        SuiteConfig {
            p,
            max_n,
            seed,
            samples: 48,
            max_elements: 1_000_000,
            max_rank: 8,
            include: Vec::new(),
            include_texts: Vec::new(),
        }
    }

    pub fn caps(&self) -> Caps {
        Caps { max_elements: self.max_elements, max_rank: self.max_rank }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileJson {
    pub order_log: u32,
    pub class: u32,
    pub is_maximal_class: bool,
    pub exceptional: bool,
    pub degree_of_commutativity: Option<u32>,
    pub g1_abelian: bool,
    pub g1_order_log: u32,
    pub omega1_g1_order_log: u32,
    pub lower_orders: Vec<u64>,
    pub upper_orders: Vec<u64>,
    pub covered: bool,
    pub coverage_reason: String,
}

impl ProfileJson {
    pub fn from_profile(g: &PcGroup, prof: &MaxClassProfile) -> ProfileJson {
        ProfileJson {
            order_log: prof.n,
            class: prof.class,
            is_maximal_class: prof.is_maximal_class,
            exceptional: prof.exceptional,
            degree_of_commutativity: prof.degree_of_commutativity,
            g1_abelian: prof.g1_abelian,
            g1_order_log: prof.g1_centralizer.order_exponent(g.p()),
            omega1_g1_order_log: prof.omega1_g1.order_exponent(g.p()),
            lower_orders: prof.series.lower.iter().map(|h| h.order()).collect(),
            upper_orders: prof.series.upper.iter().map(|h| h.order()).collect(),
            covered: prof.coverage.covered,
            coverage_reason: prof.coverage.reason.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OffenderJson {
    pub rank: u32,
    pub order_log: u32,
    pub gens: Vec<Vec<u32>>,
    pub j_exponent: i64,
    pub fixed_dim: usize,
    pub best: bool,
    pub quadratic: bool,
    pub weakly_closed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub group: String,
    pub p: u32,
    pub n: u32,
    pub module: Option<String>,
    pub dimension: Option<usize>,
    pub faithful: Option<bool>,
    pub fmodule: Option<bool>,
    pub j0_exponent: Option<i64>,
    pub covered: bool,
    pub conjecture_status: Option<String>,
    pub witness: Option<Vec<u32>>,
    pub offenders: Vec<OffenderJson>,
    pub profile: Option<ProfileJson>,
    pub checks: Vec<NamedVerdict>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub witnesses: u32,
    pub vacuous: u32,
    pub open: u32,
    pub failures: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchReport {
    pub tool_version: String,
    pub config: SuiteConfig,
    pub instances: Vec<InstanceReport>,
    pub summary: Summary,
}

impl BatchReport {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn has_failures(&self) -> bool {
        self.summary.failures > 0
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

struct GroupJob {
    name: String,
    group: PcGroup,
    catalog: Option<CatalogGroup>,
}

fn default_groups(config: &SuiteConfig, caps: &Caps) -> Result<Vec<GroupJob>> {
    let mut jobs = Vec::new();
    let p = config.p;
    if config.max_n >= 3 {
        let cg = catalog(Family::Heisenberg, p, 3, caps)?;
        jobs.push(GroupJob { name: cg.name(), group: cg.group.clone(), catalog: Some(cg) });
    }
    if p + 1 <= config.max_n {
        let cg = catalog(Family::Wreath, p, p + 1, caps)?;
        jobs.push(GroupJob { name: cg.name(), group: cg.group.clone(), catalog: Some(cg) });
    }
    for n in 3..=config.max_n {
        let cg = catalog(Family::Padic, p, n, caps)?;
        jobs.push(GroupJob { name: cg.name(), group: cg.group.clone(), catalog: Some(cg) });
    }
    for (name, text) in &config.include_texts {
        let (group, _) = PcGroup::parse_validate(text)?;
        jobs.push(GroupJob { name: name.clone(), group, catalog: None });
    }
    Ok(jobs)
}

/// Modules evaluated per group: the regular module, one permutation module
/// per maximal subgroup, and the natural module where the family defines one.
fn modules_for(job: &GroupJob, caps: &Caps) -> Result<Vec<(String, Representation)>> {
    let g = &job.group;
    let mut out = Vec::new();
    out.push(("regular".to_string(), Representation::regular(g, caps)?));
    for (k, m) in maximal_subgroups(g, caps)?.iter().enumerate() {
        out.push((format!("perm[{}]", k + 1), Representation::permutation(g, m, caps)?));
    }
    if let Some(cg) = &job.catalog {
        match cg.family {
            Family::Heisenberg => {
                out.push(("natural".to_string(), Representation::natural_unitriangular(cg)?));
            }
            Family::Wreath => {
                out.push(("natural".to_string(), Representation::natural_affine(cg)?));
            }
            Family::Padic => {
                if cg.n <= cg.p {
                    out.push(("natural".to_string(), Representation::natural_affine(cg)?));
                }
            }
        }
    }
    Ok(out)
}

fn module_instance(
    job: &GroupJob,
    poset: &EaPoset,
    series: &CentralSeries,
    profile: Option<&MaxClassProfile>,
    module_name: &str,
    rho: &Representation,
    config: &SuiteConfig,
    caps: &Caps,
) -> Result<InstanceReport> {
    let g = &job.group;
    let ctx = ModuleContext::analyze(g, rho, poset, series, &job.name, module_name, caps)?;
    let seed = config.seed ^ fnv1a(&format!("{}/{}", job.name, module_name));

    let mut checks = Vec::new();
    let quadratic = check_quadratic(&ctx);
    let oliver = check_oliver(&ctx);
    checks.push(NamedVerdict { name: "quadratic".into(), verdict: quadratic.clone() });
    checks.push(NamedVerdict { name: "oliver".into(), verdict: oliver.clone() });
    checks.push(NamedVerdict {
        name: "replacement".into(),
        verdict: replacement_suite(&ctx, caps),
    });
    checks.push(NamedVerdict {
        name: "quadratic-pairs".into(),
        verdict: quadratic_pair_suite(&ctx, config.samples, seed),
    });
    checks.extend(structure_suites(&ctx, caps));

    let covered = profile.map_or(false, |p| p.is_maximal_class && p.coverage.covered);
    let (conjecture_status, witness) = match &quadratic {
        Verdict::Witness { witness, .. } => {
            ("witness".to_string(), witness.first().cloned())
        }
        Verdict::NotApplicable { .. } => ("not_applicable".to_string(), None),
        Verdict::Counterexample { .. } => {
            if covered {
                ("counterexample".to_string(), None)
            } else {
                ("open".to_string(), None)
            }
        }
        _ => ("not_applicable".to_string(), None),
    };

    let offenders = ctx
        .offenders
        .as_ref()
        .map(|r| {
            r.offenders
                .iter()
                .map(|e| OffenderJson {
                    rank: e.rank,
                    order_log: poset.members[e.member].order_exponent(g.p()),
                    gens: poset.members[e.member].gens().iter().map(|x| x.0.clone()).collect(),
                    j_exponent: e.j.exponent,
                    fixed_dim: e.j.fixed_dim,
                    best: e.best,
                    quadratic: e.quadratic,
                    weakly_closed: e.weakly_closed,
                })
                .collect()
        })
        .unwrap_or_default();

    Ok(InstanceReport {
        group: job.name.clone(),
        p: g.p(),
        n: g.n() as u32,
        module: Some(module_name.to_string()),
        dimension: Some(rho.dim()),
        faithful: Some(ctx.faithful),
        fmodule: Some(ctx.fmodule()),
        j0_exponent: ctx.j0(),
        covered,
        conjecture_status: Some(conjecture_status),
        witness,
        offenders,
        profile: None,
        checks,
    })
}

fn process_group(
    job: &GroupJob,
    config: &SuiteConfig,
    caps: &Caps,
) -> Result<Vec<InstanceReport>> {
    let g = &job.group;
    let mut instances = Vec::new();
    // the profile needs order at least p^3; smaller ingested groups still
    // get the module checks
    let prof = if g.n() >= 3 { Some(crate::maxclass::profile(g, caps)?) } else { None };
    let series = match &prof {
        Some(p) => p.series.clone(),
        None => crate::pcgroup::central_series(g, caps)?,
    };
    let poset = enumerate_ea(g, caps)?;
    let covered = prof.as_ref().map_or(false, |p| p.is_maximal_class && p.coverage.covered);

    // group-level record: profile plus group-only checks
    let mut group_checks = Vec::new();
    group_checks.push(NamedVerdict {
        name: "commutator-quotient".into(),
        verdict: commutator_quotient_suite(g, caps)?,
    });
    let thompson = thompson_subgroup(g, &poset, caps)?;
    group_checks.push(NamedVerdict {
        name: "thompson-subgroup".into(),
        verdict: Verdict::Witness {
            witness: thompson.gens().iter().map(|x| x.0.clone()).collect(),
            detail: format!("J(G) has order p^{}", thompson.order_exponent(g.p())),
        },
    });
    instances.push(InstanceReport {
        group: job.name.clone(),
        p: g.p(),
        n: g.n() as u32,
        module: None,
        dimension: None,
        faithful: None,
        fmodule: None,
        j0_exponent: None,
        covered,
        conjecture_status: None,
        witness: None,
        offenders: Vec::new(),
        profile: prof.as_ref().map(|p| ProfileJson::from_profile(g, p)),
        checks: group_checks,
    });

    let modules = modules_for(job, caps)?;
    let mut module_reports: Vec<Result<InstanceReport>> = Vec::new();
    modules
        .par_iter()
        .map(|(name, rho)| {
            module_instance(job, &poset, &series, prof.as_ref(), name, rho, config, caps)
        })
        .collect_into_vec(&mut module_reports);
    for r in module_reports {
        instances.push(r?);
    }
    Ok(instances)
}

/// Cross product of groups and modules, all checkers, aggregated verdicts.
/// Groups over the enumeration caps are skipped and reported, not fatal.
pub fn batch_suite(config: &SuiteConfig) -> Result<BatchReport> {
    let caps = config.caps();
    let jobs = default_groups(config, &caps)?;
    let mut instances: Vec<InstanceReport> = Vec::new();

    for job in &jobs {
        match process_group(job, config, &caps) {
            Ok(group_instances) => instances.extend(group_instances),
            Err(Error::CapExceeded { what, cap }) => {
                instances.push(InstanceReport {
                    group: job.name.clone(),
                    p: job.group.p(),
                    n: job.group.n() as u32,
                    module: None,
                    dimension: None,
                    faithful: None,
                    fmodule: None,
                    j0_exponent: None,
                    covered: false,
                    conjecture_status: None,
                    witness: None,
                    offenders: Vec::new(),
                    profile: None,
                    checks: vec![NamedVerdict {
                        name: "resource-cap".into(),
                        verdict: Verdict::NotApplicable {
                            reason: format!("skipped: {what} exceeds the cap of {cap}"),
                        },
                    }],
                });
            }
            Err(e) => return Err(e),
        }
    }

    let mut summary = Summary::default();
    for inst in &instances {
        if inst.conjecture_status.as_deref() == Some("open") {
            summary.open += 1;
        }
        for check in &inst.checks {
            match &check.verdict {
                Verdict::Witness { .. } => summary.witnesses += 1,
                Verdict::Vacuous { .. } => summary.vacuous += 1,
                Verdict::Counterexample { .. } => {
                    let conjecture_check = check.name == "quadratic" || check.name == "oliver";
                    if conjecture_check && !inst.covered {
                        // outside the proved range: open, not a failure
                    } else {
                        summary.failures += 1;
                    }
                }
                Verdict::InternalInconsistency { .. } => summary.failures += 1,
                Verdict::NotApplicable { .. } => {}
            }
        }
    }

    Ok(BatchReport {
        tool_version: crate::TOOL_VERSION.to_string(),
        config: config.clone(),
        instances,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn heisenberg_ctx_parts() -> (PcGroup, Representation, EaPoset, CentralSeries) {
        let cg = catalog(Family::Heisenberg, 3, 3, &caps()).unwrap();
        let rho = Representation::natural_unitriangular(&cg).unwrap();
        let poset = enumerate_ea(&cg.group, &caps()).unwrap();
        let series = crate::pcgroup::central_series(&cg.group, &caps()).unwrap();
        (cg.group, rho, poset, series)
    }

    #[test]
    fn quadratic_witness_on_the_natural_module() {
        let (g, rho, poset, series) = heisenberg_ctx_parts();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "heisenberg(3,3)", "natural", &caps())
                .unwrap();
        match check_quadratic(&ctx) {
            Verdict::Witness { witness, .. } => {
                assert_eq!(witness, vec![vec![0, 0, 1]]);
            }
            v => panic!("expected witness, got {v:?}"),
        }
        // p = 3: the two checkers coincide
        assert_eq!(check_oliver(&ctx).status_name(), check_quadratic(&ctx).status_name());
    }

    #[test]
    fn not_applicable_on_non_fmodule() {
        let (g, _, poset, series) = heisenberg_ctx_parts();
        let rho = Representation::regular(&g, &caps()).unwrap();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "heisenberg(3,3)", "regular", &caps())
                .unwrap();
        assert!(matches!(check_quadratic(&ctx), Verdict::NotApplicable { .. }));
        assert!(matches!(check_oliver(&ctx), Verdict::NotApplicable { .. }));
        assert_eq!(check_oliver(&ctx).status_name(), check_quadratic(&ctx).status_name());
    }

    #[test]
    fn pair_suite_is_exhaustive_on_heisenberg() {
        let (g, rho, poset, series) = heisenberg_ctx_parts();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "heisenberg(3,3)", "natural", &caps())
                .unwrap();
        match quadratic_pair_suite(&ctx, 16, 1) {
            Verdict::Witness { detail, .. } => {
                assert!(detail.contains("exhaustive"), "{detail}");
            }
            v => panic!("expected witness, got {v:?}"),
        }
    }

    #[test]
    fn pair_suite_vacuous_without_quadratic_elements() {
        // cyclic 9 acting regularly has no quadratic element
        let g = PcGroup::parse_validate("3 2\npow 1: 0 1\n").unwrap().0;
        let rho = Representation::regular(&g, &caps()).unwrap();
        let poset = enumerate_ea(&g, &caps()).unwrap();
        let series = crate::pcgroup::central_series(&g, &caps()).unwrap();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "cyclic9", "regular", &caps())
                .unwrap();
        assert!(matches!(
            quadratic_pair_suite(&ctx, 16, 1),
            Verdict::Vacuous { .. }
        ));
    }

    #[test]
    fn replacement_suite_on_natural_module() {
        let (g, rho, poset, series) = heisenberg_ctx_parts();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "heisenberg(3,3)", "natural", &caps())
                .unwrap();
        assert!(matches!(replacement_suite(&ctx, &caps()), Verdict::Witness { .. }));
    }

    #[test]
    fn structure_suites_on_regular_module() {
        // faithful, no central quadratic, not an F-module: the class <= 4 and
        // offender suites run non-vacuously
        let (g, _, poset, series) = heisenberg_ctx_parts();
        let rho = Representation::regular(&g, &caps()).unwrap();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "heisenberg(3,3)", "regular", &caps())
                .unwrap();
        assert!(ctx.central_quadratic.is_none());
        let suites = structure_suites(&ctx, &caps());
        let by_name = |name: &str| {
            suites.iter().find(|s| s.name == name).map(|s| s.verdict.clone()).unwrap()
        };
        assert!(matches!(by_name("low-class-fmodule"), Verdict::Witness { .. }));
        assert!(matches!(by_name("abelian-normal-offender-free"), Verdict::Witness { .. }));
        assert!(matches!(by_name("offenders-move-derived"), Verdict::Witness { .. }));
        assert!(matches!(by_name("offender-order-bounds"), Verdict::Vacuous { .. }));
        assert!(!suites.iter().any(|s| s.verdict.is_failure()));
    }

    #[test]
    fn structure_suites_on_natural_module() {
        // a central quadratic element exists, so the quadratic-free suites are
        // vacuous and the splitting suite finds its hypothesis
        let (g, rho, poset, series) = heisenberg_ctx_parts();
        let ctx =
            ModuleContext::analyze(&g, &rho, &poset, &series, "heisenberg(3,3)", "natural", &caps())
                .unwrap();
        let suites = structure_suites(&ctx, &caps());
        let by_name = |name: &str| {
            suites.iter().find(|s| s.name == name).map(|s| s.verdict.clone()).unwrap()
        };
        assert!(matches!(by_name("offender-order-bounds"), Verdict::Vacuous { .. }));
        assert!(matches!(by_name("closure-splitting-center"), Verdict::Witness { .. }));
        assert!(!suites.iter().any(|s| s.verdict.is_failure()));
    }

    #[test]
    fn commutator_quotient_examples() {
        // abelian group: hypothesis violation
        let ea = PcGroup::parse_validate("3 2").unwrap().0;
        let full = Subgroup::full(&ea, &caps()).unwrap();
        let triv = Subgroup::trivial(&ea);
        assert!(matches!(
            commutator_quotient_check(&ea, &full, &triv, &caps()),
            Err(Error::HypothesisViolation(_))
        ));

        // B inside the center: both sides trivial
        let cg = catalog(Family::Padic, 3, 4, &caps()).unwrap();
        let g = &cg.group;
        let translations =
            Subgroup::closure(g, &(2..=4).map(|i| g.generator(i)).collect::<Vec<_>>(), &caps())
                .unwrap();
        let z = crate::pcgroup::center(g, &caps()).unwrap();
        match commutator_quotient_check(g, &translations, &z, &caps()).unwrap() {
            Verdict::Witness { detail, .. } => assert!(detail.contains("[]"), "{detail}"),
            v => panic!("expected witness, got {v:?}"),
        }

        // B = G_2 in padic(3,5)
        let cg = catalog(Family::Padic, 3, 5, &caps()).unwrap();
        let g = &cg.group;
        let prof = crate::maxclass::profile(g, &caps()).unwrap();
        let a = prof.g1_centralizer.clone();
        let b = prof.series.lower_term(g, 2);
        assert!(matches!(
            commutator_quotient_check(g, &a, &b, &caps()).unwrap(),
            Verdict::Witness { .. }
        ));
    }

    #[test]
    fn commutator_quotient_suite_over_padic() {
        for n in 3..=5 {
            let cg = catalog(Family::Padic, 3, n, &caps()).unwrap();
            match commutator_quotient_suite(&cg.group, &caps()).unwrap() {
                Verdict::Witness { detail, .. } => {
                    assert!(detail.contains("pairs verified"), "{detail}")
                }
                v => panic!("expected witness for n = {n}, got {v:?}"),
            }
        }
    }

    #[test]
    fn empty_config_gives_empty_report() {
        let mut config = SuiteConfig::default_suite(3, 2, 42);
        config.max_n = 2; // below every family threshold
        let report = batch_suite(&config).unwrap();
        assert!(report.instances.is_empty());
        assert!(!report.has_failures());
    }

    #[test]
    fn small_batch_has_no_failures() {
        let config = SuiteConfig::default_suite(3, 4, 42);
        let report = batch_suite(&config).unwrap();
        assert!(!report.has_failures(), "{}", report.to_json_string());
        // heisenberg, wreath, padic(3,3), padic(3,4); each with a group record
        assert_eq!(report.instances.iter().filter(|i| i.module.is_none()).count(), 4);
        // every faithful F-module instance carries a witness
        for inst in &report.instances {
            if inst.fmodule == Some(true) && inst.faithful == Some(true) {
                assert_eq!(inst.conjecture_status.as_deref(), Some("witness"), "{}", inst.group);
            }
        }
        assert!(report.summary.witnesses > 0);
        assert!(report.summary.vacuous > 0);
        assert_eq!(report.summary.open, 0);
    }

    #[test]
    fn batch_json_is_deterministic() {
        let config = SuiteConfig::default_suite(3, 4, 7);
        let a = batch_suite(&config).unwrap().to_json_string();
        let b = batch_suite(&config).unwrap().to_json_string();
        assert_eq!(a, b);
    }
}
