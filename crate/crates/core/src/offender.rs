//! The elementary abelian subgroup poset and offender analytics: best
//! offenders, quadratic replacement inside a best offender, weak closure and
//! the Thompson subgroup.

use crate::error::{Error, Result};
use crate::modrep::{
    is_faithful, is_quadratic_subgroup, j_exponent, JExponent, Representation,
};
use crate::pcgroup::{Caps, Element, PcGroup, Subgroup};
use rayon::prelude::*;

/// All nontrivial elementary abelian subgroups, grouped by rank, with the
/// containment relation precomputed.
#[derive(Debug, Clone)]
pub struct EaPoset {
    /// Sorted by (rank, canonical key).
    pub members: Vec<Subgroup>,
    pub ranks: Vec<u32>,
    /// contained[i] = indices of the proper nontrivial members inside member i.
    pub contained: Vec<Vec<usize>>,
}

impl EaPoset {
    pub fn max_rank(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<usize> {
        self.members
            .binary_search_by(|m| {
                let ra = self.rank_key(m);
                let rb = self.rank_key(s);
                ra.cmp(&rb).then_with(|| m.cmp(s))
            })
            .ok()
    }

    fn rank_key(&self, s: &Subgroup) -> u64 {
        s.order()
    }
}

/// Complete poset of nontrivial elementary abelian subgroups: rank 1 from the
/// order-p elements, rank r+1 by extending rank-r members with commuting
/// order-p elements outside them.
pub fn enumerate_ea(g: &PcGroup, caps: &Caps) -> Result<EaPoset> {
    if g.order() > caps.max_elements as u128 {
        return Err(Error::CapExceeded {
            what: "elementary abelian enumeration".into(),
            cap: caps.max_elements,
        });
    }
    let p = g.p() as u64;
    let order_p: Vec<Element> =
        g.elements().filter(|x| !x.is_identity() && g.order_of(x) == p).collect();

    let mut by_rank: Vec<Vec<Subgroup>> = Vec::new();
    let mut rank1 = std::collections::BTreeSet::new();
    for x in &order_p {
        rank1.insert(Subgroup::closure(g, std::slice::from_ref(x), caps)?);
    }
    by_rank.push(rank1.into_iter().collect());

    loop {
        let rank = by_rank.len() as u32;
        if rank >= caps.max_rank {
            break;
        }
        let prev = by_rank.last().unwrap();
        let mut next = std::collections::BTreeSet::new();
        for e in prev {
            for x in &order_p {
                if e.contains(x) {
                    continue;
                }
                if !e.gens().iter().all(|a| g.commute(a, x)) {
                    continue;
                }
                let mut gens = e.gens().to_vec();
                gens.push(x.clone());
                let bigger = Subgroup::closure(g, &gens, caps)?;
                debug_assert_eq!(bigger.order(), e.order() * p);
                next.insert(bigger);
            }
        }
        if next.is_empty() {
            break;
        }
        by_rank.push(next.into_iter().collect());
    }

    let mut members = Vec::new();
    let mut ranks = Vec::new();
    for (r, group) in by_rank.iter().enumerate() {
        for s in group {
            members.push(s.clone());
            ranks.push((r + 1) as u32);
        }
    }
    let contained: Vec<Vec<usize>> = members
        .iter()
        .enumerate()
        .map(|(i, e)| {
            members
                .iter()
                .enumerate()
                .filter(|(j, f)| *j != i && f.order() < e.order() && f.is_subgroup_of(e))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(EaPoset { members, ranks, contained })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct OffenderEntry {
    /// Index into the poset members.
    pub member: usize,
    pub rank: u32,
    pub j: JExponent,
    pub best: bool,
    pub quadratic: bool,
    pub weakly_closed: bool,
}

#[derive(Debug, Clone)]
pub struct OffenderReport {
    /// j-exponents for every poset member, by member index.
    pub j_exponents: Vec<JExponent>,
    /// Offenders only (j >= 0), with flags, in poset order.
    pub offenders: Vec<OffenderEntry>,
    /// Maximal j-exponent over the offenders.
    pub j0: Option<i64>,
    pub fmodule: bool,
}

impl OffenderReport {
    pub fn best_members(&self) -> Vec<usize> {
        self.offenders.iter().filter(|e| e.best).map(|e| e.member).collect()
    }
}

/// j-exponents over the whole poset plus the best-offender analysis.
/// Rejects non-faithful modules.
pub fn best_offenders(
    g: &PcGroup,
    poset: &EaPoset,
    rho: &Representation,
    caps: &Caps,
) -> Result<OffenderReport> {
    if !is_faithful(g, rho, caps)? {
        return Err(Error::NotFaithful);
    }
    let j_exponents: Vec<JExponent> =
        poset.members.par_iter().map(|e| j_exponent(g, rho, e)).collect();

    // E is best iff j_E >= j_F for every subgroup F <= E, the trivial
    // subgroup included; subgroups of an elementary abelian group are all in
    // the poset, so containment lookups decide it.
    let mut offenders = Vec::new();
    let mut j0 = None;
    for (i, j) in j_exponents.iter().enumerate() {
        if !j.is_offender() {
            continue;
        }
        let best = poset.contained[i].iter().all(|&f| j_exponents[f].exponent <= j.exponent)
            && j.exponent >= 0;
        let e = &poset.members[i];
        offenders.push(OffenderEntry {
            member: i,
            rank: poset.ranks[i],
            j: *j,
            best,
            quadratic: is_quadratic_subgroup(rho, e),
            weakly_closed: is_weakly_closed(g, e, caps)?,
        });
        j0 = Some(j0.map_or(j.exponent, |cur: i64| cur.max(j.exponent)));
    }
    // cross-check two routes to the F-module verdict
    let any_offender = j_exponents.iter().any(|j| j.is_offender());
    let fmodule = !offenders.is_empty();
    if any_offender != fmodule {
        return Err(Error::InternalInconsistency(
            "offender scan and best-offender scan disagree".into(),
        ));
    }
    Ok(OffenderReport { j_exponents, offenders, j0, fmodule })
}

/// Weak closure of an abelian subgroup: every distinct conjugate fails to
/// commute with it. The conjugate scan runs over all of G, which covers a
/// transversal of the normalizer.
pub fn is_weakly_closed(g: &PcGroup, a: &Subgroup, caps: &Caps) -> Result<bool> {
    if !a.is_abelian(g) {
        return Err(Error::HypothesisViolation("weak closure is defined for abelian subgroups".into()));
    }
    if g.order() > caps.max_elements as u128 {
        return Err(Error::CapExceeded { what: "conjugate scan".into(), cap: caps.max_elements });
    }
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(a.clone());
    for x in g.elements() {
        let conj = a.conjugate_by(g, &x);
        if conj == *a || !seen.insert(conj.clone()) {
            continue;
        }
        let commutes =
            a.gens().iter().all(|u| conj.gens().iter().all(|v| g.commute(u, v)));
        if commutes {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quadratic replacement inside a best offender: some F <= E with F best,
/// quadratic and j_F = j_E. Searches smallest order first, then by canonical
/// key; failure contradicts the replacement theorem and is reported as an
/// internal inconsistency.
pub fn timmesfeld_replace(
    poset: &EaPoset,
    report: &OffenderReport,
    member: usize,
    rho: &Representation,
) -> Result<usize> {
    let entry = report
        .offenders
        .iter()
        .find(|e| e.member == member)
        .ok_or_else(|| Error::HypothesisViolation("not an offender".into()))?;
    if !entry.best {
        return Err(Error::HypothesisViolation("replacement needs a best offender".into()));
    }
    let je = report.j_exponents[member].exponent;
    let mut candidates: Vec<usize> = poset.contained[member].clone();
    candidates.push(member);
    candidates.sort_by(|&a, &b| {
        poset.members[a]
            .order()
            .cmp(&poset.members[b].order())
            .then_with(|| poset.members[a].cmp(&poset.members[b]))
    });
    for f in candidates {
        if report.j_exponents[f].exponent != je {
            continue;
        }
        let is_best =
            poset.contained[f].iter().all(|&x| report.j_exponents[x].exponent <= je);
        if !is_best {
            continue;
        }
        if is_quadratic_subgroup(rho, &poset.members[f]) {
            return Ok(f);
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no quadratic best offender inside member {member} at j-exponent {je}"
    )))
}

#[derive(Debug, Clone)]
pub struct WeaklyClosedWitness {
    pub member: usize,
    pub j0: i64,
    /// For every offender D at j0, a weakly closed quadratic offender at j0
    /// inside the normal closure of D.
    pub refinement: Vec<(usize, usize)>,
}

/// A weakly closed quadratic offender attaining j0, with the normal-closure
/// refinement. None when the module is not an F-module; an F-module without
/// such an offender is an internal inconsistency.
pub fn weakly_closed_quadratic_offender(
    g: &PcGroup,
    poset: &EaPoset,
    report: &OffenderReport,
    caps: &Caps,
) -> Result<Option<WeaklyClosedWitness>> {
    let Some(j0) = report.j0 else {
        return Ok(None);
    };
    let at_j0: Vec<&OffenderEntry> =
        report.offenders.iter().filter(|e| e.j.exponent == j0).collect();
    let witness = at_j0.iter().find(|e| e.quadratic && e.weakly_closed).map(|e| e.member);
    let Some(member) = witness else {
        return Err(Error::InternalInconsistency(format!(
            "F-module with j0 exponent {j0} but no weakly closed quadratic offender"
        )));
    };
    // refinement: each offender D at j0 has such an E inside its normal closure
    let mut refinement = Vec::new();
    for d in &at_j0 {
        let closure = poset.members[d.member].normal_closure(g, caps)?;
        let found = at_j0
            .iter()
            .find(|e| {
                e.quadratic && e.weakly_closed && poset.members[e.member].is_subgroup_of(&closure)
            })
            .map(|e| e.member);
        match found {
            Some(e) => refinement.push((d.member, e)),
            None => {
                return Err(Error::InternalInconsistency(format!(
                    "no weakly closed quadratic offender inside the normal closure of member {}",
                    d.member
                )))
            }
        }
    }
    Ok(Some(WeaklyClosedWitness { member, j0, refinement }))
}

/// Thompson subgroup: join of the elementary abelian subgroups of greatest
/// rank.
pub fn thompson_subgroup(g: &PcGroup, poset: &EaPoset, caps: &Caps) -> Result<Subgroup> {
    let max_rank = poset.max_rank();
    let mut gens = Vec::new();
    for (i, s) in poset.members.iter().enumerate() {
        if poset.ranks[i] == max_rank {
            gens.extend(s.gens().iter().cloned());
        }
    }
    Subgroup::closure(g, &gens, caps)
}
