//! Test-side oracles, kept independent of the engine paths they check.
//!
//! The word reducer here rewrites the rightmost violation first, one rewrite
//! per pass, in contrast to the engine's left-to-right stack collector. The
//! offender oracle enumerates every subgroup and scans every vector of the
//! module instead of using the poset and nullspace machinery.

// shared by several test binaries; not every binary uses every oracle
#![allow(dead_code)]

use quadcheck::gfp::Mat;
use quadcheck::modrep::Representation;
use quadcheck::pcgroup::{Caps, Element, ExpVec, PcGroup, PcPresentation, Subgroup};

/// Normal form by naive free reduction: repeatedly rewrite the rightmost
/// descending adjacent pair or the rightmost run of p equal letters.
pub fn reduce_naive(pres: &PcPresentation, word: &[usize]) -> ExpVec {
    let p = pres.p as usize;
    let mut w: Vec<usize> = word.to_vec();
    let mut steps = 0u64;
    loop {
        steps += 1;
        assert!(steps < 10_000_000, "naive reduction did not terminate");
        let mut rewritten = false;
        // rightmost applicable position of either rule
        let mut pos = w.len();
        while pos > 0 {
            pos -= 1;
            // run rule: p equal letters ending at pos
            if pos + 1 >= p {
                let start = pos + 1 - p;
                if w[start..=pos].iter().all(|&x| x == w[pos]) {
                    let gen = w[pos];
                    let mut replacement: Vec<usize> = Vec::new();
                    for (k, &e) in pres.pow[gen].iter().enumerate() {
                        for _ in 0..e {
                            replacement.push(k);
                        }
                    }
                    w.splice(start..=pos, replacement);
                    rewritten = true;
                    break;
                }
            }
            // swap rule: descending adjacent pair
            if pos + 1 < w.len() && w[pos] > w[pos + 1] {
                let (a, b) = (w[pos], w[pos + 1]);
                let mut replacement = vec![b, a];
                for (k, &e) in pres.comm[a][b].iter().enumerate() {
                    for _ in 0..e {
                        replacement.push(k);
                    }
                }
                w.splice(pos..=pos + 1, replacement);
                rewritten = true;
                break;
            }
        }
        if !rewritten {
            break;
        }
    }
    let mut exps = vec![0u32; pres.n];
    for &g in &w {
        exps[g] += 1;
    }
    assert!(exps.iter().all(|&e| e < pres.p), "reduced word not in normal form: {w:?}");
    // the reduced word must be sorted
    assert!(w.windows(2).all(|ab| ab[0] <= ab[1]), "reduced word not sorted: {w:?}");
    exps
}

fn letters(e: &ExpVec) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &c) in e.iter().enumerate() {
        for _ in 0..c {
            out.push(i);
        }
    }
    out
}

/// Product of two normal forms by naive reduction of the concatenated word.
pub fn mul_naive(pres: &PcPresentation, a: &ExpVec, b: &ExpVec) -> ExpVec {
    let mut word = letters(a);
    word.extend(letters(b));
    reduce_naive(pres, &word)
}

/// Every subgroup of a small group, from closures of all generator pairs.
/// Valid whenever every subgroup is 2-generated, which holds for the
/// order-27 groups this oracle serves.
pub fn all_subgroups_bruteforce(g: &PcGroup, caps: &Caps) -> Vec<Subgroup> {
    let elems: Vec<Element> = g.elements().collect();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Subgroup::trivial(g));
    for a in &elems {
        for b in &elems {
            let s = Subgroup::closure(g, &[a.clone(), b.clone()], caps).unwrap();
            seen.insert(s);
        }
    }
    seen.into_iter().collect()
}

/// Fixed-space dimension by scanning all p^d vectors.
pub fn fixed_dim_bruteforce(g: &PcGroup, rho: &Representation, h: &Subgroup) -> usize {
    let p = g.p();
    let d = rho.dim();
    let mats: Vec<Mat> = h.elements().iter().map(|x| rho.matrix_of(x)).collect();
    let mut count = 0u64;
    let total = (p as u64).pow(d as u32);
    for idx in 0..total {
        let mut v = Vec::with_capacity(d);
        let mut rest = idx;
        for _ in 0..d {
            v.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        if mats.iter().all(|m| m.apply(&v) == v) {
            count += 1;
        }
    }
    let mut dim = 0;
    let mut c = count;
    while c > 1 {
        assert_eq!(c % p as u64, 0, "fixed set is not a subspace");
        c /= p as u64;
        dim += 1;
    }
    dim
}

pub struct BruteOffender {
    pub subgroup: Subgroup,
    pub rank: u32,
    pub j_exponent: i64,
    pub best: bool,
}

/// Offender analytics over every elementary abelian subgroup, with the
/// best-offender condition checked against every subgroup below it.
pub fn offender_oracle(g: &PcGroup, rho: &Representation, caps: &Caps) -> Vec<BruteOffender> {
    let p = g.p();
    let subgroups = all_subgroups_bruteforce(g, caps);
    let j_of: Vec<i64> = subgroups
        .iter()
        .map(|h| {
            h.order_exponent(p) as i64 + fixed_dim_bruteforce(g, rho, h) as i64 - rho.dim() as i64
        })
        .collect();
    let mut out = Vec::new();
    for (i, h) in subgroups.iter().enumerate() {
        if h.is_trivial() || !h.is_elementary_abelian(g) {
            continue;
        }
        let best = subgroups
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_subgroup_of(h))
            .all(|(k, _)| j_of[k] <= j_of[i]);
        out.push(BruteOffender {
            subgroup: h.clone(),
            rank: h.order_exponent(p),
            j_exponent: j_of[i],
            best,
        });
    }
    out
}
