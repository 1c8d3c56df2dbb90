//! Subgroups with cached element sets, closure, normality, centralizers,
//! central series and the omega/agemo subgroups.
//!
//! The canonical key of a subgroup is its sorted element list; two subgroups
//! are equal exactly when those lists coincide.

use super::group::{Element, PcGroup};
use crate::error::{Error, Result};

/// Enumeration limits for element caching and poset construction.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_elements: u64,
    pub max_rank: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_elements: 1_000_000, max_rank: 8 }
    }
}

#[derive(Debug, Clone)]
pub struct Subgroup {
    gens: Vec<Element>,
    /// Sorted, deduplicated element list; the canonical key.
    elems: Vec<Element>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elems.cmp(&other.elems)
    }
}

impl Subgroup {
    pub fn trivial(g: &PcGroup) -> Subgroup {
        Subgroup { gens: Vec::new(), elems: vec![g.identity()] }
    }

    /// Closure of a generating set, with the enumeration cap enforced.
    pub fn closure(g: &PcGroup, gens: &[Element], caps: &Caps) -> Result<Subgroup> {
        let gens: Vec<Element> = gens.iter().filter(|x| !x.is_identity()).cloned().collect();
        let elems = closure_elems(g, &gens, caps)?;
        let gens = reduce_generators(g, &gens, &elems, caps)?;
        let sub = Subgroup { gens, elems };
        debug_assert!(is_p_power(sub.order(), g.p() as u64));
        Ok(sub)
    }

    /// Wrap a set already known to be a subgroup (e.g. a centralizer scan).
    pub fn from_element_set(g: &PcGroup, mut elems: Vec<Element>, caps: &Caps) -> Subgroup {
        elems.sort();
        elems.dedup();
        let gens = reduce_generators(g, &elems, &elems, caps).expect("set below cap");
        Subgroup { gens, elems }
    }

    /// The whole group as a subgroup; fails above the cap.
    pub fn full(g: &PcGroup, caps: &Caps) -> Result<Subgroup> {
        if g.order() > caps.max_elements as u128 {
            return Err(Error::CapExceeded { what: "full group cache".into(), cap: caps.max_elements });
        }
        let elems: Vec<Element> = g.elements().collect();
        Ok(Subgroup { gens: g.generators(), elems })
    }

    pub fn gens(&self) -> &[Element] {
        &self.gens
    }

    pub fn elements(&self) -> &[Element] {
        &self.elems
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    /// a with |H| = p^a.
    pub fn order_exponent(&self, p: u32) -> u32 {
        let mut o = self.order();
        let mut a = 0;
        while o > 1 {
            assert_eq!(o % p as u64, 0, "subgroup order not a p-power");
            o /= p as u64;
            a += 1;
        }
        a
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        if self.order() > other.order() {
            return false;
        }
        self.elems.iter().all(|x| other.contains(x))
    }

    pub fn is_abelian(&self, g: &PcGroup) -> bool {
        let gens = &self.gens;
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if !g.commute(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Exponent-p abelian test.
    pub fn is_elementary_abelian(&self, g: &PcGroup) -> bool {
        self.is_abelian(g) && self.gens.iter().all(|x| g.order_of(x) <= g.p() as u64)
    }

    pub fn conjugate_by(&self, g: &PcGroup, x: &Element) -> Subgroup {
        let ix = g.inv(x);
        let conj = |a: &Element| g.mul(&g.mul(&ix, a), x);
        let mut elems: Vec<Element> = self.elems.iter().map(conj).collect();
        elems.sort();
        let gens = self.gens.iter().map(conj).collect();
        Subgroup { gens, elems }
    }

    pub fn is_normal(&self, g: &PcGroup) -> bool {
        for s in &self.gens {
            for i in 1..=g.n() {
                if !self.contains(&g.conj(s, &g.generator(i))) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest normal subgroup of g containing self.
    pub fn normal_closure(&self, g: &PcGroup, caps: &Caps) -> Result<Subgroup> {
        let mut current = self.clone();
        loop {
            let mut extra = Vec::new();
            for s in &current.gens {
                for i in 1..=g.n() {
                    let c = g.conj(s, &g.generator(i));
                    if !current.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return Ok(current);
            }
            let mut gens = current.gens.clone();
            gens.extend(extra);
            current = Subgroup::closure(g, &gens, caps)?;
        }
    }

    /// Multiset of cyclic orders in the canonical decomposition. Only valid
    /// for abelian subgroups; computed from the order filtration.
    pub fn abelian_invariants(&self, g: &PcGroup) -> Vec<u64> {
        assert!(self.is_abelian(g));
        let p = g.p() as u64;
        // s[k] = log_p #{ x : x^(p^k) = 1 }
        let mut counts = Vec::new();
        let mut k = 0u32;
        loop {
            let c = self.elems.iter().filter(|x| {
                let mut y = (*x).clone();
                for _ in 0..k {
                    y = g.pow(&y, p as i64);
                }
                y.is_identity()
            }).count() as u64;
            counts.push(log_p(c, p));
            if c == self.order() {
                break;
            }
            k += 1;
        }
        // number of invariants of order >= p^k is s_k - s_{k-1}
        let mut invs = Vec::new();
        for k in 1..counts.len() {
            let at_least_k = counts[k] - counts[k - 1];
            // invariants of order exactly p^k: (s_k - s_{k-1}) - (s_{k+1} - s_k)
            let at_least_k1 = if k + 1 < counts.len() { counts[k + 1] - counts[k] } else { 0 };
            for _ in 0..(at_least_k - at_least_k1) {
                invs.push(p.pow(k as u32));
            }
        }
        invs.sort_unstable_by(|a, b| b.cmp(a));
        invs
    }
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

fn is_p_power(mut x: u64, p: u64) -> bool {
    while x > 1 {
        if x % p != 0 {
            return false;
        }
        x /= p;
    }
    x == 1
}

/// BFS closure under right multiplication; sorted element list.
fn closure_elems(g: &PcGroup, gens: &[Element], caps: &Caps) -> Result<Vec<Element>> {
    let mut set = std::collections::BTreeSet::new();
    set.insert(g.identity());
    let mut frontier: Vec<Element> = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for gen in gens {
            if gen.is_identity() {
                continue;
            }
            let y = g.mul(&x, gen);
            if set.insert(y.clone()) {
                if set.len() as u64 > caps.max_elements {
                    return Err(Error::CapExceeded {
                        what: "subgroup closure".into(),
                        cap: caps.max_elements,
                    });
                }
                frontier.push(y);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Greedy small generating set for a known element list.
fn reduce_generators(
    g: &PcGroup,
    candidates: &[Element],
    elems: &[Element],
    caps: &Caps,
) -> Result<Vec<Element>> {
    let mut gens: Vec<Element> = Vec::new();
    let mut cur: Vec<Element> = vec![g.identity()];
    for x in candidates.iter().chain(elems.iter()) {
        if cur.len() == elems.len() {
            break;
        }
        if cur.binary_search(x).is_err() {
            gens.push(x.clone());
            cur = closure_elems(g, &gens, caps)?;
        }
    }
    Ok(gens)
}

/// C_G(A/B) = { g : [a, g] in B for all a in A }. Requires B normal in G,
/// B <= A and A normal in G; checking generators of A then suffices.
pub fn section_centralizer(
    g: &PcGroup,
    a: &Subgroup,
    b: &Subgroup,
    caps: &Caps,
) -> Result<Subgroup> {
    if !b.is_subgroup_of(a) {
        return Err(Error::HypothesisViolation("B is not contained in A".into()));
    }
    if !b.is_normal(g) {
        return Err(Error::HypothesisViolation("B is not normal".into()));
    }
    if !a.is_normal(g) {
        return Err(Error::HypothesisViolation("A is not normal".into()));
    }
    if g.order() > caps.max_elements as u128 {
        return Err(Error::CapExceeded {
            what: "section centralizer scan".into(),
            cap: caps.max_elements,
        });
    }
    let gen_invs: Vec<Element> = a.gens().iter().map(|s| g.inv(s)).collect();
    let mut found = Vec::new();
    for x in g.elements() {
        let ix = g.inv(&x);
        let ok = a.gens().iter().zip(gen_invs.iter()).all(|(s, is)| {
            // [s, x] = s^-1 x^-1 s x
            let c = g.mul(&g.mul(is, &ix), &g.mul(s, &x));
            b.contains(&c)
        });
        if ok {
            found.push(x);
        }
    }
    Ok(Subgroup::from_element_set(g, found, caps))
}

pub fn center(g: &PcGroup, caps: &Caps) -> Result<Subgroup> {
    let full = Subgroup::full(g, caps)?;
    section_centralizer(g, &full, &Subgroup::trivial(g), caps)
}

/// [A, B] for A, B normal in G: the normal closure of the generator-pair
/// commutators. Centralizers are subgroups, so once the generator images
/// commute modulo the closure, all of A and B do.
pub fn commutator_subgroup(
    g: &PcGroup,
    a: &Subgroup,
    b: &Subgroup,
    caps: &Caps,
) -> Result<Subgroup> {
    debug_assert!(a.is_normal(g) && b.is_normal(g));
    let mut gens = Vec::new();
    for x in a.gens() {
        for y in b.gens() {
            let c = g.comm(x, y);
            if !c.is_identity() {
                gens.push(c);
            }
        }
    }
    gens.sort();
    gens.dedup();
    Subgroup::closure(g, &gens, caps)?.normal_closure(g, caps)
}

/// [A, B] from all element pairs; oracle-grade and valid without normality.
pub fn commutator_subgroup_pairs(
    g: &PcGroup,
    a: &Subgroup,
    b: &Subgroup,
    caps: &Caps,
) -> Result<Subgroup> {
    let mut gens = Vec::new();
    for x in a.elements() {
        for y in b.elements() {
            let c = g.comm(x, y);
            if !c.is_identity() {
                gens.push(c);
            }
        }
    }
    gens.sort();
    gens.dedup();
    Subgroup::closure(g, &gens, caps)
}

#[derive(Debug, Clone)]
pub struct CentralSeries {
    /// G = lower[0] >= lower[1] = G' >= ... >= trivial (last).
    pub lower: Vec<Subgroup>,
    /// trivial = upper[0] <= Z(G) = upper[1] <= ... <= G (last).
    pub upper: Vec<Subgroup>,
    /// G, G', G'', ... down to trivial (last).
    pub derived: Vec<Subgroup>,
    /// Nilpotency class: length of the upper series.
    pub class: u32,
}

impl CentralSeries {
    /// Lower-central term by 1-based index; indices past the series read as
    /// the trivial group.
    pub fn lower_term(&self, g: &PcGroup, i: usize) -> Subgroup {
        assert!(i >= 1);
        if i <= self.lower.len() {
            self.lower[i - 1].clone()
        } else {
            Subgroup::trivial(g)
        }
    }

    pub fn upper_term(&self, g: &PcGroup, i: usize) -> Subgroup {
        if i < self.upper.len() {
            self.upper[i].clone()
        } else {
            let _ = g;
            self.upper.last().expect("nonempty").clone()
        }
    }
}

pub fn central_series(g: &PcGroup, caps: &Caps) -> Result<CentralSeries> {
    let full = Subgroup::full(g, caps)?;

    let mut lower = vec![full.clone()];
    loop {
        let last = lower.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, last, &full, caps)?;
        assert!(next.order() < last.order(), "lower series must strictly descend");
        lower.push(next);
    }

    let gens: Vec<Element> = g.generators();
    let gen_invs: Vec<Element> = gens.iter().map(|x| g.inv(x)).collect();
    let mut upper = vec![Subgroup::trivial(g)];
    loop {
        let prev = upper.last().unwrap();
        let mut found = Vec::new();
        for x in g.elements() {
            let ix = g.inv(&x);
            let ok = gens.iter().zip(gen_invs.iter()).all(|(gen, igen)| {
                // [x, gen] = x^-1 gen^-1 x gen
                let c = g.mul(&g.mul(&ix, igen), &g.mul(&x, gen));
                prev.contains(&c)
            });
            if ok {
                found.push(x);
            }
        }
        let next = Subgroup::from_element_set(g, found, caps);
        if next.order() == prev.order() {
            assert_eq!(next.order(), full.order(), "p-groups are nilpotent");
            break;
        }
        let done = next.order() == full.order();
        upper.push(next);
        if done {
            break;
        }
    }
    let class = (upper.len() - 1) as u32;

    let mut derived = vec![full.clone()];
    loop {
        let last = derived.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, last, last, caps)?;
        if next.order() == last.order() {
            break;
        }
        derived.push(next);
    }

    Ok(CentralSeries { lower, upper, derived, class })
}

/// Omega_1(H): generated by the elements of order dividing p.
pub fn omega1(g: &PcGroup, h: &Subgroup, caps: &Caps) -> Result<Subgroup> {
    let p = g.p() as u64;
    let gens: Vec<Element> =
        h.elements().iter().filter(|x| g.order_of(x) <= p).cloned().collect();
    Subgroup::closure(g, &gens, caps)
}

/// Agemo: generated by the p-th powers.
pub fn mho1(g: &PcGroup, h: &Subgroup, caps: &Caps) -> Result<Subgroup> {
    let p = g.p() as i64;
    let gens: Vec<Element> = h.elements().iter().map(|x| g.pow(x, p)).collect();
    Subgroup::closure(g, &gens, caps)
}

/// Frattini subgroup G' * mho1(G).
pub fn frattini(g: &PcGroup, caps: &Caps) -> Result<Subgroup> {
    let full = Subgroup::full(g, caps)?;
    let derived = commutator_subgroup(g, &full, &full, caps)?;
    let mho = mho1(g, &full, caps)?;
    let mut gens = derived.gens().to_vec();
    gens.extend(mho.gens().iter().cloned());
    Subgroup::closure(g, &gens, caps)
}

/// All index-p subgroups, sorted by canonical key.
pub fn maximal_subgroups(g: &PcGroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    let p = g.p();
    let phi = frattini(g, caps)?;
    // coset representatives of G/phi with elementary abelian structure
    let full = Subgroup::full(g, caps)?;
    let mut reps: Vec<Element> = Vec::new();
    let mut seen: std::collections::BTreeSet<Element> = std::collections::BTreeSet::new();
    for x in full.elements() {
        let key = coset_key(g, &phi, x);
        if seen.insert(key) {
            reps.push(x.clone());
        }
    }
    // coordinates in G/phi via a greedily chosen basis
    let mut basis: Vec<Element> = Vec::new();
    let mut span: Vec<Element> = vec![coset_key(g, &phi, &g.identity())];
    for r in &reps {
        let key = coset_key(g, &phi, r);
        if span.contains(&key) {
            continue;
        }
        basis.push(r.clone());
        // regenerate span
        span = enumerate_span(g, &phi, &basis);
        if span.len() == reps.len() {
            break;
        }
    }
    let d = basis.len();
    assert_eq!(reps.len(), (p as usize).pow(d as u32), "G/Phi must be elementary abelian");

    // hyperplanes: kernels of nonzero functionals up to scalar
    let mut result = Vec::new();
    let mut lambdas: Vec<Vec<u32>> = Vec::new();
    for idx in 1..(p as usize).pow(d as u32) {
        let mut lam = Vec::with_capacity(d);
        let mut v = idx;
        for _ in 0..d {
            lam.push((v % p as usize) as u32);
            v /= p as usize;
        }
        // keep one representative per projective class: first nonzero = 1
        if lam.iter().find(|&&x| x != 0) == Some(&1) {
            lambdas.push(lam);
        }
    }
    for lam in lambdas {
        let mut gens = phi.gens().to_vec();
        // kernel basis of the functional
        for (coords, elem) in coords_of_span(g, &basis) {
            let dot: u32 =
                coords.iter().zip(lam.iter()).map(|(&c, &l)| c * l).sum::<u32>() % p;
            if dot == 0 && !elem.is_identity() {
                gens.push(elem);
            }
        }
        let m = Subgroup::closure(g, &gens, caps)?;
        assert_eq!(m.order() * p as u64, g.order_u64());
        result.push(m);
    }
    result.sort();
    result.dedup();
    Ok(result)
}

/// Canonical key of the coset x*Phi: its least element.
fn coset_key(g: &PcGroup, phi: &Subgroup, x: &Element) -> Element {
    phi.elements().iter().map(|f| g.mul(x, f)).min().expect("nonempty coset")
}

fn enumerate_span(g: &PcGroup, phi: &Subgroup, basis: &[Element]) -> Vec<Element> {
    coords_of_span(g, basis).into_iter().map(|(_, e)| coset_key(g, phi, &e)).collect()
}

/// All F_p combinations of the basis, with their coordinate vectors.
fn coords_of_span(g: &PcGroup, basis: &[Element]) -> Vec<(Vec<u32>, Element)> {
    let p = g.p();
    let mut out = vec![(vec![0u32; basis.len()], g.identity())];
    for (bi, b) in basis.iter().enumerate() {
        let mut next = Vec::new();
        for (coords, elem) in &out {
            let mut acc = elem.clone();
            for e in 0..p {
                let mut c = coords.clone();
                c[bi] = e;
                next.push((c, acc.clone()));
                acc = g.mul(&acc, b);
            }
        }
        out = next;
    }
    out
}
