//! Maximal-class analytics and the built-in catalog of maximal-class groups.
//!
//! The catalog families are all split extensions of a cyclic group of order p
//! acting on a finite quotient of Z[x]: the action generator multiplies by
//! 1 + x, so commutation against it multiplies by x. The translation quotient
//! is handled with exact integer lattice arithmetic (Hermite normal forms),
//! which pins down element orders without any guesswork.

use crate::error::{Error, Result};
use crate::pcgroup::{
    central_series, commutator_subgroup, omega1, section_centralizer, Caps, CentralSeries,
    PcGroup, PcPresentation, Subgroup,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Heisenberg,
    Wreath,
    Padic,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Heisenberg => "heisenberg",
            Family::Wreath => "wreath",
            Family::Padic => "padic",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        match s {
            "heisenberg" => Some(Family::Heisenberg),
            "wreath" => Some(Family::Wreath),
            "padic" => Some(Family::Padic),
            _ => None,
        }
    }
}

/// A catalog group remembers how it was built; the natural module
/// constructors need the family.
#[derive(Debug, Clone)]
pub struct CatalogGroup {
    pub group: PcGroup,
    pub family: Family,
    pub p: u32,
    pub n: u32,
}

impl CatalogGroup {
    pub fn name(&self) -> String {
        format!("{}({},{})", self.family.name(), self.p, self.n)
    }
}

/// Scope verdict for the proved range on maximal-class groups of order p^n.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Coverage {
    pub covered: bool,
    pub reason: String,
}

/// The verified range: n <= 8, or n >= max(2p-6, p+2).
pub fn coverage(p: u32, n: u32) -> Coverage {
    let bound = (2 * p as i64 - 6).max(p as i64 + 2);
    if n <= 8 {
        Coverage { covered: true, reason: format!("n = {n} <= 8") }
    } else if (n as i64) >= bound {
        Coverage { covered: true, reason: format!("n = {n} >= max(2p-6, p+2) = {bound}") }
    } else {
        Coverage { covered: false, reason: format!("8 < n = {n} < max(2p-6, p+2) = {bound}") }
    }
}

#[derive(Debug, Clone)]
pub struct MaxClassProfile {
    pub p: u32,
    pub n: u32,
    pub class: u32,
    pub is_maximal_class: bool,
    pub series: CentralSeries,
    /// C_G(G_2/G_4), the distinguished maximal subgroup when n >= 4.
    pub g1_centralizer: Subgroup,
    /// (i, C_G(G_i/G_{i+2})) for 3 <= i <= n-2.
    pub two_step_centralizers: Vec<(u32, Subgroup)>,
    pub exceptional: bool,
    /// Degree of commutativity; None when the group is not of maximal class.
    pub degree_of_commutativity: Option<u32>,
    pub g1_abelian: bool,
    pub omega1_g1: Subgroup,
    pub coverage: Coverage,
}

/// Full maximal-class profile. Errors below order p^3, where maximal class
/// is not defined; non-maximal-class groups of larger order get partial data.
pub fn profile(g: &PcGroup, caps: &Caps) -> Result<MaxClassProfile> {
    let p = g.p();
    let n = g.n() as u32;
    if n < 3 {
        return Err(Error::HypothesisViolation(format!(
            "maximal-class profile needs order at least p^3, got p^{n}"
        )));
    }
    let series = central_series(g, caps)?;
    let class = series.class;
    let is_maximal_class = class == n - 1;

    let g2 = series.lower_term(g, 2);
    let g4 = series.lower_term(g, 4);
    let g1c = section_centralizer(g, &g2, &g4, caps)?;
    let g1_abelian = g1c.is_abelian(g);

    let mut two_step = Vec::new();
    if n >= 5 {
        for i in 3..=n - 2 {
            let a = series.lower_term(g, i as usize);
            let b = series.lower_term(g, (i + 2) as usize);
            two_step.push((i, section_centralizer(g, &a, &b, caps)?));
        }
    }
    let exceptional = n >= 5 && two_step.iter().any(|(_, c)| *c != g1c);

    let degree_of_commutativity = if is_maximal_class {
        Some(if g1_abelian { n - 3 } else { degree_search(g, &series, &g1c, n, caps)? })
    } else {
        None
    };

    let omega1_g1 = omega1(g, &g1c, caps)?;

    Ok(MaxClassProfile {
        p,
        n,
        class,
        is_maximal_class,
        series,
        g1_centralizer: g1c,
        two_step_centralizers: two_step,
        exceptional,
        degree_of_commutativity,
        g1_abelian,
        omega1_g1,
        coverage: coverage(p, n),
    })
}

/// Largest l with [S_i, S_j] <= S_{i+j+l} for all i, j >= 1, where S_1 is the
/// two-step centralizer and S_i the lower central terms for i >= 2.
fn degree_search(
    g: &PcGroup,
    series: &CentralSeries,
    g1c: &Subgroup,
    n: u32,
    caps: &Caps,
) -> Result<u32> {
    let term = |i: u32| -> Subgroup {
        if i == 1 {
            g1c.clone()
        } else {
            series.lower_term(g, i as usize)
        }
    };
    let class = series.class;
    let mut commutators: Vec<(u32, u32, Subgroup)> = Vec::new();
    for i in 1..=class {
        for j in i..=class {
            let a = term(i);
            let b = term(j);
            if a.is_trivial() || b.is_trivial() {
                continue;
            }
            commutators.push((i, j, commutator_subgroup(g, &a, &b, caps)?));
        }
    }
    let mut best = 0;
    for l in 0..=n.saturating_sub(3) {
        let ok = commutators.iter().all(|(i, j, c)| c.is_subgroup_of(&term(i + j + l)));
        if ok {
            best = l;
        } else {
            break;
        }
    }
    Ok(best)
}

pub fn catalog(family: Family, p: u32, n: u32, caps: &Caps) -> Result<CatalogGroup> {
    if !is_odd_prime(p) {
        return Err(Error::Unsupported(format!("{p} is not an odd prime")));
    }
    let group = match family {
        Family::Heisenberg => {
            if n != 3 {
                return Err(Error::Unsupported(format!("heisenberg fixes n = 3, got n = {n}")));
            }
            let mut pres = PcPresentation::trivial_relations(p, 3);
            pres.comm[1][0] = vec![0, 0, 1];
            PcGroup::validate(pres)?.0
        }
        Family::Wreath => {
            if n != p + 1 {
                return Err(Error::Unsupported(format!(
                    "wreath fixes n = p + 1 = {}, got n = {n}",
                    p + 1
                )));
            }
            let ring = TranslationRing::wreath(p)?;
            build_split_extension(p, &ring)?
        }
        Family::Padic => {
            if n < 3 {
                return Err(Error::Unsupported(format!("padic needs n >= 3, got n = {n}")));
            }
            if n > 16 {
                return Err(Error::Unsupported(format!("padic supports n <= 16, got n = {n}")));
            }
            let ring = TranslationRing::padic(p, n - 1)?;
            build_split_extension(p, &ring)?
        }
    };
    let _ = caps;
    Ok(CatalogGroup { group, family, p, n })
}

fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Finite quotient ring Z[x]/I with x nilpotent, presented as Z^d modulo a
/// full-rank relation lattice, plus the multiplication-by-x map.
#[derive(Debug, Clone)]
pub struct TranslationRing {
    pub p: u32,
    /// Number of pc generators the translations contribute (m = n - 1).
    pub m: u32,
    /// x * (last basis vector), before lattice reduction.
    shift_last: Vec<i64>,
    /// HNF of the relation lattice.
    lattice: Hnf,
    /// HNF of the chain subgroup A_i = <x^i, ..., x^{m-1}> + L for i = 0..=m.
    chain: Vec<Hnf>,
    /// Reduced vectors of the translations t_i = x^{i-1}, i = 1..=m.
    translations: Vec<Vec<i64>>,
}

impl TranslationRing {
    /// Z[x]/(phi_p(1+x), x^m): the cyclotomic local ring truncated at x^m.
    pub fn padic(p: u32, m: u32) -> Result<TranslationRing> {
        // phi_p(1+x) = sum_{k=1}^{p} C(p,k) x^{k-1}, monic of degree p-1
        let f: Vec<i64> = (1..=p as u64).map(|k| binom(p as u64, k)).collect();
        let m_us = m as usize;
        if m_us <= (p - 1) as usize {
            // ambient Z[x]/x^m, relations x^j * f truncated
            let d = m_us;
            let shift_last = vec![0i64; d];
            let mut rows = Vec::new();
            for j in 0..d {
                let mut row = vec![0i64; d];
                for (k, &c) in f.iter().enumerate() {
                    if j + k < d {
                        row[j + k] = c;
                    }
                }
                rows.push(row);
            }
            TranslationRing::build(p, m, d, shift_last, rows)
        } else {
            // ambient Z[x]/f, relations x^{m+j} reduced mod f
            let d = (p - 1) as usize;
            // x^{p-1} = -(f - x^{p-1}) since f = 0
            let shift_last: Vec<i64> = f[..d].iter().map(|&c| -c).collect();
            let mut rows = Vec::new();
            let mut cur = vec![0i64; d];
            cur[0] = 1;
            for _ in 0..m_us {
                cur = shift_vector(&cur, &shift_last)?;
            }
            for _ in 0..d {
                rows.push(cur.clone());
                cur = shift_vector(&cur, &shift_last)?;
            }
            TranslationRing::build(p, m, d, shift_last, rows)
        }
    }

    /// F_p[x]/x^p: the base of the wreath product C_p wr C_p.
    pub fn wreath(p: u32) -> Result<TranslationRing> {
        let d = p as usize;
        let shift_last = vec![0i64; d];
        let mut rows = Vec::new();
        for j in 0..d {
            let mut row = vec![0i64; d];
            row[j] = p as i64;
            rows.push(row);
        }
        TranslationRing::build(p, p, d, shift_last, rows)
    }

    fn build(
        p: u32,
        m: u32,
        d: usize,
        shift_last: Vec<i64>,
        lattice_rows: Vec<Vec<i64>>,
    ) -> Result<TranslationRing> {
        let lattice = Hnf::from_rows(d, lattice_rows.clone())?;
        if lattice.quotient_order()? != (p as u128).pow(m) {
            return Err(Error::InternalInconsistency(format!(
                "translation quotient has order {} instead of {}^{}",
                lattice.quotient_order()?,
                p,
                m
            )));
        }
        // translations t_i = x^{i-1}, reduced
        let mut translations = Vec::new();
        let mut cur = vec![0i64; d];
        cur[0] = 1;
        for _ in 0..m {
            translations.push(lattice.reduce(&cur));
            cur = shift_vector(&cur, &shift_last)?;
        }
        // chain subgroups
        let mut chain = Vec::new();
        for i in 0..=m as usize {
            let mut rows = lattice_rows.clone();
            for t in &translations[i..] {
                rows.push(t.clone());
            }
            chain.push(Hnf::from_rows(d, rows)?);
        }
        // each chain step must have index exactly p
        for i in 1..=m as usize {
            let prev = chain[i - 1].quotient_order()?;
            let next = chain[i].quotient_order()?;
            if next != prev * p as u128 {
                return Err(Error::InternalInconsistency(format!(
                    "chain step {i} does not have index {p}"
                )));
            }
        }
        Ok(TranslationRing { p, m, shift_last, lattice, chain, translations })
    }

    fn mul_by_x(&self, v: &[i64]) -> Result<Vec<i64>> {
        Ok(self.lattice.reduce(&shift_vector(v, &self.shift_last)?))
    }

    fn scale(&self, v: &[i64], k: i64) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(v.len());
        for &c in v {
            out.push(c.checked_mul(k).ok_or_else(overflow)?);
        }
        Ok(self.lattice.reduce(&out))
    }

    /// Exponents (e_1..e_m) with v = e_1 t_1 + ... + e_m t_m along the chain.
    fn digits(&self, v: &[i64]) -> Result<Vec<u32>> {
        let p = self.p as i64;
        let mut v = self.lattice.reduce(v);
        let mut out = Vec::with_capacity(self.m as usize);
        for i in 0..self.m as usize {
            let mut found = None;
            for e in 0..p {
                let mut w = v.clone();
                for (wc, tc) in w.iter_mut().zip(self.translations[i].iter()) {
                    *wc -= e.checked_mul(*tc).ok_or_else(overflow)?;
                }
                if self.chain[i + 1].is_member(&w) {
                    found = Some((e as u32, w));
                    break;
                }
            }
            let (e, w) = found.ok_or_else(|| {
                Error::InternalInconsistency("chain digit extraction failed".into())
            })?;
            out.push(e);
            v = w;
        }
        if !self.lattice.is_member(&v) {
            return Err(Error::InternalInconsistency("digit remainder nonzero".into()));
        }
        Ok(out)
    }

    /// Abelian invariants of the translation quotient, largest first.
    pub fn abelian_invariants(&self) -> Result<Vec<u64>> {
        self.lattice.elementary_divisors()
    }
}

fn overflow() -> Error {
    Error::Unsupported("integer overflow in translation ring arithmetic".into())
}

/// x * v in the ambient basis: shift coordinates up, folding the top
/// coordinate through the reduction vector.
fn shift_vector(v: &[i64], shift_last: &[i64]) -> Result<Vec<i64>> {
    let d = v.len();
    let mut out = vec![0i64; d];
    for j in 0..d - 1 {
        out[j + 1] = v[j];
    }
    let top = v[d - 1];
    if top != 0 {
        for j in 0..d {
            let add = shift_last[j].checked_mul(top).ok_or_else(overflow)?;
            out[j] = out[j].checked_add(add).ok_or_else(overflow)?;
        }
    }
    Ok(out)
}

/// Row-style Hermite normal form of a full-rank integer lattice in Z^d.
#[derive(Debug, Clone)]
struct Hnf {
    d: usize,
    rows: Vec<Vec<i64>>,
}

impl Hnf {
    fn from_rows(d: usize, mut rows: Vec<Vec<i64>>) -> Result<Hnf> {
        let mut r = 0usize;
        for c in 0..d {
            loop {
                let mut idx = None;
                let mut best = i64::MAX;
                for (i, row) in rows.iter().enumerate().skip(r) {
                    let a = row[c].abs();
                    if a != 0 && a < best {
                        best = a;
                        idx = Some(i);
                    }
                }
                let Some(i) = idx else { break };
                rows.swap(r, i);
                let pivot = rows[r][c];
                let mut done = true;
                for i in r + 1..rows.len() {
                    let q = rows[i][c] / pivot;
                    if q != 0 {
                        for j in 0..d {
                            let sub = rows[r][j].checked_mul(q).ok_or_else(overflow)?;
                            rows[i][j] = rows[i][j].checked_sub(sub).ok_or_else(overflow)?;
                        }
                    }
                    if rows[i][c] != 0 {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if r < rows.len() && rows[r][c] != 0 {
                if rows[r][c] < 0 {
                    for x in rows[r].iter_mut() {
                        *x = -*x;
                    }
                }
                r += 1;
            }
        }
        rows.truncate(r);
        if rows.len() != d {
            return Err(Error::InternalInconsistency(format!(
                "relation lattice has rank {} < {d}",
                rows.len()
            )));
        }
        // reduce entries above each pivot
        for i in (0..d).rev() {
            let pivot = rows[i][i];
            for k in 0..i {
                let q = rows[k][i].div_euclid(pivot);
                if q != 0 {
                    for j in 0..d {
                        let sub = rows[i][j].checked_mul(q).ok_or_else(overflow)?;
                        rows[k][j] = rows[k][j].checked_sub(sub).ok_or_else(overflow)?;
                    }
                }
            }
        }
        Ok(Hnf { d, rows })
    }

    /// Canonical representative of v modulo the lattice, coordinates reduced
    /// in ascending pivot order.
    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        for i in 0..self.d {
            let pivot = self.rows[i][i];
            let q = w[i].div_euclid(pivot);
            if q != 0 {
                for j in 0..self.d {
                    w[j] -= self.rows[i][j] * q;
                }
            }
        }
        w
    }

    fn is_member(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    fn quotient_order(&self) -> Result<u128> {
        let mut o: u128 = 1;
        for i in 0..self.d {
            o = o
                .checked_mul(self.rows[i][i] as u128)
                .ok_or_else(|| Error::Unsupported("quotient order overflow".into()))?;
        }
        Ok(o)
    }

    /// Elementary divisors (Smith normal form diagonal), descending, 1s dropped.
    fn elementary_divisors(&self) -> Result<Vec<u64>> {
        let mut m: Vec<Vec<i64>> = self.rows.clone();
        let size = self.d;
        let mut divisors = Vec::new();
        let mut offset = 0usize;
        while offset < size {
            loop {
                let mut best: Option<(usize, usize)> = None;
                let mut best_val = i64::MAX;
                for i in offset..size {
                    for j in offset..size {
                        let a = m[i][j].abs();
                        if a != 0 && a < best_val {
                            best_val = a;
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else {
                    return Err(Error::InternalInconsistency("singular lattice in snf".into()));
                };
                m.swap(offset, bi);
                for row in m.iter_mut() {
                    row.swap(offset, bj);
                }
                let pivot = m[offset][offset];
                let mut clean = true;
                for i in offset + 1..size {
                    let q = m[i][offset] / pivot;
                    if q != 0 {
                        for j in offset..size {
                            m[i][j] -= q * m[offset][j];
                        }
                    }
                    if m[i][offset] != 0 {
                        clean = false;
                    }
                }
                for j in offset + 1..size {
                    let q = m[offset][j] / pivot;
                    if q != 0 {
                        for i in offset..size {
                            m[i][j] -= q * m[i][offset];
                        }
                    }
                    if m[offset][j] != 0 {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            divisors.push(m[offset][offset].unsigned_abs());
            offset += 1;
        }
        divisors.retain(|&x| x > 1);
        divisors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(divisors)
    }
}

fn binom(n: u64, k: u64) -> i64 {
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r as i64
}

/// Assemble the pc presentation of <s> acting on the translation quotient by
/// multiplication by 1 + x, and validate it.
fn build_split_extension(p: u32, ring: &TranslationRing) -> Result<PcGroup> {
    let m = ring.m as usize;
    let n = m + 1;
    let mut pres = PcPresentation::trivial_relations(p, n);
    let to_word = |digits: &[u32]| -> Vec<u32> {
        let mut w = vec![0u32; n];
        w[1..].copy_from_slice(digits);
        w
    };
    for i in 0..m {
        let t = &ring.translations[i];
        // g_{i+2}^p = p * t_i
        let pt = ring.scale(t, p as i64)?;
        pres.pow[i + 1] = to_word(&ring.digits(&pt)?);
        // [g_{i+2}, g_1] = x * t_i
        let xt = ring.mul_by_x(t)?;
        pres.comm[i + 1][0] = to_word(&ring.digits(&xt)?);
    }
    let (group, _) = PcGroup::validate(pres)?;
    Ok(group)
}
