//! Validated groups and collection arithmetic.
//!
//! `PcGroup` wraps a presentation that passed weight inference and the full
//! associativity overlap check, so normal forms are unique and every element
//! is an exponent vector. Collection from the left reduces arbitrary words.

use super::presentation::{ExpVec, PcPresentation};
use crate::error::{Error, Result};
use serde::Serialize;

/// Group element in normal form g1^{e1} ... gn^{en}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Element(pub ExpVec);

impl Element {
    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub order: u128,
    pub weights: Vec<u32>,
    pub triple_checks: usize,
    pub power_checks: usize,
}

/// A consistent weighted power-commutator group.
#[derive(Debug, Clone)]
pub struct PcGroup {
    pres: PcPresentation,
    weights: Vec<u32>,
    order: u128,
}

const COLLECTION_STEP_LIMIT: u64 = 200_000_000;

impl PcGroup {
    /// Weight inference plus the associativity and power overlap checks.
    pub fn validate(pres: PcPresentation) -> Result<(PcGroup, ValidationReport)> {
        let weights = infer_weights(&pres)?;
        let order = (pres.p as u128)
            .checked_pow(pres.n as u32)
            .ok_or_else(|| Error::Unsupported("group order overflows u128".into()))?;
        let g = PcGroup { pres, weights, order };

        // Associativity overlaps (gi gj) gk = gi (gj gk) for k <= j <= i.
        let n = g.pres.n;
        let mut triple_checks = 0;
        for i in 0..n {
            for j in 0..=i {
                for k in 0..=j {
                    let gi = g.generator(i + 1);
                    let gj = g.generator(j + 1);
                    let gk = g.generator(k + 1);
                    let lhs = g.mul(&g.mul(&gi, &gj), &gk);
                    let rhs = g.mul(&gi, &g.mul(&gj, &gk));
                    if lhs != rhs {
                        return Err(Error::Inconsistent(format!(
                            "overlap (g{} g{}) g{} != g{} (g{} g{})",
                            i + 1,
                            j + 1,
                            k + 1,
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                    triple_checks += 1;
                }
            }
        }

        // Power overlaps.
        let p = g.pres.p;
        let mut power_checks = 0;
        for i in 0..n {
            let gi = g.generator(i + 1);
            // gi^p gi = gi gi^p
            let gi_p = g.pow_gen_p(i);
            let lhs = g.mul(&gi_p, &gi);
            let rhs = g.mul(&gi, &gi_p);
            if lhs != rhs {
                return Err(Error::Inconsistent(format!("overlap g{0}^p g{0} != g{0} g{0}^p", i + 1)));
            }
            power_checks += 1;
            for j in 0..i {
                let gj = g.generator(j + 1);
                // gi^p gj = gi^{p-1} (gi gj)
                let lhs = g.mul(&gi_p, &gj);
                let mut rhs = g.mul(&gi, &gj);
                for _ in 0..p - 1 {
                    rhs = g.mul(&gi, &rhs);
                }
                // rhs above is gi^{p-1} (gi gj) computed left to right
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "overlap g{}^p g{} != g{}^{} (g{} g{})",
                        i + 1,
                        j + 1,
                        i + 1,
                        p - 1,
                        i + 1,
                        j + 1
                    )));
                }
                power_checks += 1;
                // gi gj^p = (gi gj) gj^{p-1}
                let gj_p = g.pow_gen_p(j);
                let lhs = g.mul(&gi, &gj_p);
                let mut rhs = g.mul(&gi, &gj);
                for _ in 0..p - 1 {
                    rhs = g.mul(&rhs, &gj);
                }
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "overlap g{} g{}^p != (g{} g{}) g{}^{}",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1,
                        j + 1,
                        p - 1
                    )));
                }
                power_checks += 1;
            }
        }

        let report = ValidationReport {
            order,
            weights: g.weights.clone(),
            triple_checks,
            power_checks,
        };
        Ok((g, report))
    }

    pub fn parse_validate(text: &str) -> Result<(PcGroup, ValidationReport)> {
        PcGroup::validate(PcPresentation::parse(text)?)
    }

    fn pow_gen_p(&self, i: usize) -> Element {
        // gi^p via the relation word, which is its defining value
        Element(self.pres.pow[i].clone())
    }

    pub fn p(&self) -> u32 {
        self.pres.p
    }

    pub fn n(&self) -> usize {
        self.pres.n
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order).expect("order fits u64 at supported sizes")
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn identity(&self) -> Element {
        Element(vec![0; self.pres.n])
    }

    /// 1-based generator index.
    pub fn generator(&self, i: usize) -> Element {
        assert!(i >= 1 && i <= self.pres.n);
        let mut e = vec![0; self.pres.n];
        e[i - 1] = 1;
        Element(e)
    }

    pub fn generators(&self) -> Vec<Element> {
        (1..=self.pres.n).map(|i| self.generator(i)).collect()
    }

    /// Collect a word given as (0-based generator, exponent) letters.
    fn collect(&self, word: &[(usize, u32)]) -> Element {
        let p = self.pres.p;
        let n = self.pres.n;
        let mut e = vec![0u32; n];
        // stack of pending letters, top = next to process
        let mut stack: Vec<(usize, u32)> =
            word.iter().rev().filter(|&&(_, c)| c != 0).copied().collect();
        let mut steps = 0u64;
        while let Some((i, cnt)) = stack.pop() {
            steps += 1;
            assert!(steps < COLLECTION_STEP_LIMIT, "collection did not terminate");
            if cnt > 1 {
                stack.push((i, cnt - 1));
            }
            // does gi commute (by relation) with the displaced tail?
            let tail_start = i + 1;
            let mut needs_conjugation = false;
            for k in tail_start..n {
                if e[k] != 0 && self.pres.comm[k][i].iter().any(|&x| x != 0) {
                    needs_conjugation = true;
                    break;
                }
            }
            if !needs_conjugation {
                e[i] += 1;
                if e[i] == p {
                    e[i] = 0;
                    // gi^p = pow word, in higher generators; insert before tail,
                    // but since it commutes-with... it must still bubble past the
                    // tail, so push the tail and then the word.
                    let pow = &self.pres.pow[i];
                    if pow.iter().any(|&x| x != 0) {
                        let mut displaced: Vec<(usize, u32)> = Vec::new();
                        for k in (tail_start..n).rev() {
                            if e[k] != 0 {
                                displaced.push((k, e[k]));
                                e[k] = 0;
                            }
                        }
                        // stack gets: pow word letters, then tail letters
                        for &(k, c) in displaced.iter() {
                            stack.push((k, c));
                        }
                        for k in (0..n).rev() {
                            if pow[k] != 0 {
                                stack.push((k, pow[k]));
                            }
                        }
                    }
                }
                continue;
            }
            // displace the tail, bump gi, then replay the conjugated tail
            let mut tail: Vec<(usize, u32)> = Vec::new();
            for k in tail_start..n {
                if e[k] != 0 {
                    tail.push((k, e[k]));
                    e[k] = 0;
                }
            }
            e[i] += 1;
            let mut pending: Vec<(usize, u32)> = Vec::new(); // letters in word order
            if e[i] == p {
                e[i] = 0;
                let pow = &self.pres.pow[i];
                for k in 0..n {
                    if pow[k] != 0 {
                        pending.push((k, pow[k]));
                    }
                }
            }
            for &(k, c) in &tail {
                let comm = &self.pres.comm[k][i];
                if comm.iter().all(|&x| x == 0) {
                    pending.push((k, c));
                } else {
                    // (gk [gk, gi])^c
                    for _ in 0..c {
                        pending.push((k, 1));
                        for m in 0..n {
                            if comm[m] != 0 {
                                pending.push((m, comm[m]));
                            }
                        }
                    }
                }
            }
            for &(k, c) in pending.iter().rev() {
                stack.push((k, c));
            }
        }
        Element(e)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut word: Vec<(usize, u32)> = Vec::new();
        for (i, &c) in a.0.iter().enumerate() {
            if c != 0 {
                word.push((i, c));
            }
        }
        for (i, &c) in b.0.iter().enumerate() {
            if c != 0 {
                word.push((i, c));
            }
        }
        self.collect(&word)
    }

    pub fn inv(&self, a: &Element) -> Element {
        let p = self.pres.p;
        let n = self.pres.n;
        let mut c = a.clone();
        // the correcting letters g_1^{k_1} ... g_n^{k_n} are already a
        // normal form, so the inverse is just their exponent vector
        let mut v = vec![0u32; n];
        for i in 0..n {
            let k = (p - c.0[i]) % p;
            if k != 0 {
                let gi_k = {
                    let mut e = vec![0; n];
                    e[i] = k;
                    Element(e)
                };
                c = self.mul(&c, &gi_k);
                v[i] = k;
            }
            debug_assert_eq!(c.0[i], 0);
        }
        debug_assert!(c.is_identity());
        Element(v)
    }

    pub fn pow(&self, a: &Element, k: i64) -> Element {
        if k < 0 {
            return self.pow(&self.inv(a), -k);
        }
        let mut e = k as u64;
        let mut acc = self.identity();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Commutator [a, b] = a^-1 b^-1 a b.
    pub fn comm(&self, a: &Element, b: &Element) -> Element {
        let ia = self.inv(a);
        let ib = self.inv(b);
        self.mul(&self.mul(&ia, &ib), &self.mul(a, b))
    }

    /// Conjugate a^g = g^-1 a g.
    pub fn conj(&self, a: &Element, g: &Element) -> Element {
        let ig = self.inv(g);
        self.mul(&self.mul(&ig, a), g)
    }

    /// Least power of p annihilating a.
    pub fn order_of(&self, a: &Element) -> u64 {
        let p = self.pres.p as u64;
        let mut x = a.clone();
        let mut ord = 1u64;
        while !x.is_identity() {
            x = self.pow(&x, self.pres.p as i64);
            ord *= p;
        }
        ord
    }

    pub fn commute(&self, a: &Element, b: &Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// All p^n normal forms in lexicographic order.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter { group: self, next: Some(vec![0; self.pres.n]) }
    }
}

pub struct ElementIter<'a> {
    group: &'a PcGroup,
    next: Option<ExpVec>,
}

impl Iterator for ElementIter<'_> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        let cur = self.next.take()?;
        let p = self.group.pres.p;
        let mut succ = cur.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < p {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Element(cur))
    }
}

/// Minimal weights making every relation strictly weight-increasing, or an
/// error when no such assignment exists. Also requires weights that do not
/// decrease with the generator index, which collection relies on.
fn infer_weights(pres: &PcPresentation) -> Result<Vec<u32>> {
    let n = pres.n;
    let bound = (n as u32) + 1;
    let mut w = vec![1u32; n];
    loop {
        let mut changed = false;
        let bump = |w: &mut Vec<u32>, lhs_weight: u32, word: &ExpVec, what: &str| -> Result<bool> {
            let mut any = false;
            for (k, &e) in word.iter().enumerate() {
                if e != 0 && w[k] <= lhs_weight {
                    w[k] = lhs_weight + 1;
                    if w[k] > bound {
                        return Err(Error::WeightViolation(format!(
                            "{what} forces unbounded weight on g{}",
                            k + 1
                        )));
                    }
                    any = true;
                }
            }
            Ok(any)
        };
        for i in 0..n {
            let lhs = w[i];
            changed |= bump(&mut w, lhs, &pres.pow[i].clone(), &format!("pow g{}", i + 1))?;
            for j in 0..i {
                let lhs = w[i].max(w[j]);
                changed |= bump(
                    &mut w,
                    lhs,
                    &pres.comm[i][j].clone(),
                    &format!("comm [g{}, g{}]", i + 1, j + 1),
                )?;
            }
        }
        if !changed {
            break;
        }
    }
    for i in 1..n {
        if w[i] < w[i - 1] {
            return Err(Error::WeightViolation(format!(
                "generators must be ordered by weight, but w(g{}) = {} < w(g{}) = {}",
                i + 1,
                w[i],
                i,
                w[i - 1]
            )));
        }
    }
    Ok(w)
}
