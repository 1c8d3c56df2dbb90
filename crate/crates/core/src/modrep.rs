//! Modules over the prime field: representation validation, fixed spaces,
//! commutator spaces, quadraticity and the j-exponent functional.
//!
//! Conventions: vectors are columns, the group acts on the left, and the
//! module commutator is [v, g] = rho(g) v - v. Permutation-type modules keep
//! their permutations; fixed spaces then come from orbit sums, which agree
//! with the generic nullspace route (tested, not assumed).

use crate::error::{Error, Result};
use crate::gfp::{Mat, Subspace};
use crate::maxclass::{CatalogGroup, Family};
use crate::pcgroup::{center, omega1, Caps, Element, ExpVec, PcGroup, Subgroup};

#[derive(Debug, Clone)]
enum Action {
    Dense(Vec<Mat>),
    /// perm[g][j] = image index of basis vector j under rho(g).
    Perm(Vec<Vec<usize>>),
}

#[derive(Debug, Clone)]
pub struct Representation {
    p: u32,
    dim: usize,
    descriptor: String,
    action: Action,
}

/// j_H(V) = p^exponent with exponent = log_p|H| + dim C_V(H) - dim V.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct JExponent {
    pub exponent: i64,
    pub subgroup_log: u32,
    pub fixed_dim: usize,
    pub dim: usize,
}

impl JExponent {
    pub fn is_offender(&self) -> bool {
        self.exponent >= 0
    }
}

impl Representation {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Validated representation from one matrix per pc generator.
    pub fn from_matrices(g: &PcGroup, mats: Vec<Mat>, descriptor: &str) -> Result<Representation> {
        if mats.len() != g.n() {
            return Err(Error::RelationViolated(format!(
                "expected {} matrices, got {}",
                g.n(),
                mats.len()
            )));
        }
        let dim = mats.first().map_or(0, |m| m.rows);
        for (i, m) in mats.iter().enumerate() {
            if m.rows != dim || m.cols != dim {
                return Err(Error::RelationViolated(format!(
                    "matrix for g{} is {}x{}, expected {dim}x{dim}",
                    i + 1,
                    m.rows,
                    m.cols
                )));
            }
            if m.p != g.p() {
                return Err(Error::RelationViolated(format!(
                    "matrix field GF({}) does not match group prime {}",
                    m.p,
                    g.p()
                )));
            }
            if !m.is_invertible() {
                return Err(Error::NotInvertible(i + 1));
            }
        }
        let rho =
            Representation { p: g.p(), dim, descriptor: descriptor.into(), action: Action::Dense(mats) };
        rho.check_relations(g)?;
        Ok(rho)
    }

    fn from_perms(g: &PcGroup, perms: Vec<Vec<usize>>, descriptor: &str) -> Result<Representation> {
        let dim = perms.first().map_or(0, |p| p.len());
        let rho = Representation {
            p: g.p(),
            dim,
            descriptor: descriptor.into(),
            action: Action::Perm(perms),
        };
        rho.check_relations(g)?;
        Ok(rho)
    }

    /// Permutation action of G on itself by left multiplication.
    pub fn regular(g: &PcGroup, caps: &Caps) -> Result<Representation> {
        if g.order() > caps.max_elements as u128 {
            return Err(Error::CapExceeded {
                what: "regular module basis".into(),
                cap: caps.max_elements,
            });
        }
        let elems: Vec<Element> = g.elements().collect();
        let index = |x: &Element| -> usize { elems.binary_search(x).expect("element enumerated") };
        let mut perms = Vec::with_capacity(g.n());
        for i in 1..=g.n() {
            let gi = g.generator(i);
            perms.push(elems.iter().map(|x| index(&g.mul(&gi, x))).collect());
        }
        Representation::from_perms(g, perms, "regular")
    }

    /// Permutation action on the left cosets of H.
    pub fn permutation(g: &PcGroup, h: &Subgroup, caps: &Caps) -> Result<Representation> {
        if g.order() > caps.max_elements as u128 {
            return Err(Error::CapExceeded {
                what: "coset enumeration".into(),
                cap: caps.max_elements,
            });
        }
        // canonical key of xH is its least element
        let coset_key = |x: &Element| -> Element {
            h.elements().iter().map(|s| g.mul(x, s)).min().expect("nonempty coset")
        };
        let mut keys: Vec<Element> = Vec::new();
        {
            let mut seen = std::collections::BTreeSet::new();
            for x in g.elements() {
                let k = coset_key(&x);
                if seen.insert(k.clone()) {
                    keys.push(k);
                }
            }
            keys.sort();
        }
        let index = |k: &Element| -> usize { keys.binary_search(k).expect("coset enumerated") };
        let mut perms = Vec::with_capacity(g.n());
        for i in 1..=g.n() {
            let gi = g.generator(i);
            perms.push(keys.iter().map(|k| index(&coset_key(&g.mul(&gi, k)))).collect());
        }
        Representation::from_perms(g, perms, "permutation")
    }

    /// The 3-dimensional unitriangular module of the Heisenberg group:
    /// g1 acts as I + E12 and g2 as I + E23.
    pub fn natural_unitriangular(cg: &CatalogGroup) -> Result<Representation> {
        if cg.family != Family::Heisenberg {
            return Err(Error::Unsupported(
                "the unitriangular module is defined for the heisenberg family".into(),
            ));
        }
        let p = cg.p;
        let mut a = Mat::identity(p, 3);
        a[(0, 1)] = 1;
        let mut b = Mat::identity(p, 3);
        b[(1, 2)] = 1;
        let mut c = Mat::identity(p, 3);
        c[(0, 2)] = p - 1;
        Representation::from_matrices(&cg.group, vec![a, b, c], "natural")
    }

    /// Homogeneous affine module: translations act on A + F_p e by adding
    /// multiples of themselves to the constant line, the cyclic part by
    /// multiplication. Needs an elementary abelian translation subgroup, so
    /// padic is supported for n <= p and wreath for its fixed n = p + 1.
    pub fn natural_affine(cg: &CatalogGroup) -> Result<Representation> {
        let p = cg.p;
        let supported = match cg.family {
            Family::Wreath => true,
            Family::Padic => cg.n <= p,
            Family::Heisenberg => false,
        };
        if !supported {
            return Err(Error::Unsupported(format!(
                "no affine module for {}: translations are not elementary abelian",
                cg.name()
            )));
        }
        let m = (cg.n - 1) as usize;
        let dim = m + 1;
        // multiplication by 1 + x on F_p[x]/x^m, padded with the constant line
        let mut one_plus_x = Mat::identity(p, dim);
        for j in 0..m - 1 {
            one_plus_x[(j + 1, j)] = 1;
        }
        // the cyclic generator acts on the translation block by (1+x)^{-1}
        let s = one_plus_x.inverse().expect("unipotent");
        let mut mats = vec![s];
        for i in 0..m {
            let mut t = Mat::identity(p, dim);
            t[(i, m)] = 1; // e -> x^{i} + e
            mats.push(t);
        }
        Representation::from_matrices(&cg.group, mats, "natural")
    }

    /// Parse the `.mat` format: line 1 `p d m`, then m matrices of d rows.
    pub fn from_mat_text(g: &PcGroup, text: &str, descriptor: &str) -> Result<Representation> {
        let mut numbers: Vec<(usize, Vec<u32>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row: std::result::Result<Vec<u32>, _> =
                line.split_whitespace().map(|t| t.parse()).collect();
            match row {
                Ok(r) => numbers.push((idx + 1, r)),
                Err(_) => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("bad integer row '{line}'"),
                    })
                }
            }
        }
        let Some((first_line, header)) = numbers.first().cloned() else {
            return Err(Error::Parse { line: 0, msg: "empty matrix file".into() });
        };
        if header.len() != 3 {
            return Err(Error::Parse { line: first_line, msg: "expected 'p d m' header".into() });
        }
        let (p, d, m) = (header[0], header[1] as usize, header[2] as usize);
        if p != g.p() {
            return Err(Error::Parse {
                line: first_line,
                msg: format!("matrix prime {p} does not match group prime {}", g.p()),
            });
        }
        if m != g.n() {
            return Err(Error::Parse {
                line: first_line,
                msg: format!("{m} matrices for a group with {} generators", g.n()),
            });
        }
        let rows = &numbers[1..];
        if rows.len() != m * d {
            return Err(Error::Parse {
                line: first_line,
                msg: format!("expected {} rows, got {}", m * d, rows.len()),
            });
        }
        let mut mats = Vec::with_capacity(m);
        for gi in 0..m {
            let mut mat_rows = Vec::with_capacity(d);
            for r in 0..d {
                let (line_no, row) = &rows[gi * d + r];
                if row.len() != d {
                    return Err(Error::Parse {
                        line: *line_no,
                        msg: format!("expected {d} entries, got {}", row.len()),
                    });
                }
                if row.iter().any(|&x| x >= p) {
                    return Err(Error::Parse {
                        line: *line_no,
                        msg: format!("entry out of range [0, {p})"),
                    });
                }
                mat_rows.push(row.clone());
            }
            mats.push(Mat::from_rows(p, mat_rows));
        }
        Representation::from_matrices(g, mats, descriptor)
    }

    pub fn to_mat_string(&self) -> String {
        let mut out = format!("{} {} {}\n", self.p, self.dim, self.gen_count());
        for i in 0..self.gen_count() {
            let m = self.gen_matrix(i);
            for r in 0..self.dim {
                let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }

    fn gen_count(&self) -> usize {
        match &self.action {
            Action::Dense(mats) => mats.len(),
            Action::Perm(perms) => perms.len(),
        }
    }

    /// Matrix of the 0-based generator.
    pub fn gen_matrix(&self, i: usize) -> Mat {
        match &self.action {
            Action::Dense(mats) => mats[i].clone(),
            Action::Perm(perms) => {
                let mut m = Mat::zeros(self.p, self.dim, self.dim);
                for (j, &img) in perms[i].iter().enumerate() {
                    m[(img, j)] = 1;
                }
                m
            }
        }
    }

    fn check_relations(&self, g: &PcGroup) -> Result<()> {
        let p = g.p() as u64;
        let pres = g.presentation();
        for i in 0..g.n() {
            let gi = self.gen_matrix(i);
            let lhs = gi.pow(p);
            let rhs = self.matrix_of_word(&pres.pow[i]);
            if lhs != rhs {
                return Err(Error::RelationViolated(format!("pow relation of g{}", i + 1)));
            }
            for j in 0..i {
                let gj = self.gen_matrix(j);
                let gi_inv = gi.inverse().expect("validated invertible");
                let gj_inv = gj.inverse().expect("validated invertible");
                let lhs = gi_inv.mul(&gj_inv).mul(&gi).mul(&gj);
                let rhs = self.matrix_of_word(&pres.comm[i][j]);
                if lhs != rhs {
                    return Err(Error::RelationViolated(format!(
                        "comm relation [g{}, g{}]",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn matrix_of_word(&self, word: &ExpVec) -> Mat {
        let mut m = Mat::identity(self.p, self.dim);
        for (i, &e) in word.iter().enumerate() {
            if e != 0 {
                m = m.mul(&self.gen_matrix(i).pow(e as u64));
            }
        }
        m
    }

    pub fn matrix_of(&self, x: &Element) -> Mat {
        self.matrix_of_word(&x.0)
    }

    /// rho(x) v without materializing the matrix.
    pub fn apply_element(&self, x: &Element, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        for (i, &e) in x.0.iter().enumerate().rev() {
            for _ in 0..e {
                v = self.apply_gen(i, &v);
            }
        }
        v
    }

    fn apply_gen(&self, i: usize, v: &[u32]) -> Vec<u32> {
        match &self.action {
            Action::Dense(mats) => mats[i].apply(v),
            Action::Perm(perms) => {
                let mut out = vec![0u32; self.dim];
                for (j, &img) in perms[i].iter().enumerate() {
                    out[img] = v[j];
                }
                out
            }
        }
    }

    /// [v, x] = rho(x) v - v.
    pub fn commutator_vector(&self, x: &Element, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut w = self.apply_element(x, v);
        for (wi, &vi) in w.iter_mut().zip(v.iter()) {
            *wi = (*wi + p - vi) % p;
        }
        w
    }

    pub fn acts_trivially(&self, x: &Element) -> bool {
        (0..self.dim).all(|j| {
            let e = basis_vector(self.dim, j);
            self.apply_element(x, &e) == e
        })
    }

    fn perms(&self) -> Option<&Vec<Vec<usize>>> {
        match &self.action {
            Action::Perm(p) => Some(p),
            Action::Dense(_) => None,
        }
    }

    fn perm_of(&self, x: &Element) -> Option<Vec<usize>> {
        let perms = self.perms()?;
        let mut sigma: Vec<usize> = (0..self.dim).collect();
        for (i, &e) in x.0.iter().enumerate().rev() {
            for _ in 0..e {
                sigma = sigma.iter().map(|&j| perms[i][j]).collect();
            }
        }
        Some(sigma)
    }
}

fn basis_vector(dim: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[j] = 1;
    v
}

/// C_V(H): common fixed space of all of H, the intersection over generators
/// of the nullspaces of rho(h) - I. Permutation modules use orbit sums, which
/// span exactly the same subspace.
pub fn fixed_space(rho: &Representation, h: &Subgroup) -> Subspace {
    let p = rho.p;
    let d = rho.dim;
    if h.gens().is_empty() {
        return Subspace::full(p, d);
    }
    if rho.perms().is_some() {
        // orbits of <gens(H)> on the basis
        let sigmas: Vec<Vec<usize>> =
            h.gens().iter().map(|x| rho.perm_of(x).expect("perm kernel")).collect();
        let mut uf: Vec<usize> = (0..d).collect();
        fn find(uf: &mut Vec<usize>, mut i: usize) -> usize {
            while uf[i] != i {
                uf[i] = uf[uf[i]];
                i = uf[i];
            }
            i
        }
        for sigma in &sigmas {
            for j in 0..d {
                let (a, b) = (find(&mut uf, j), find(&mut uf, sigma[j]));
                if a != b {
                    uf[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbits: std::collections::BTreeMap<usize, Vec<u32>> = Default::default();
        for j in 0..d {
            let root = find(&mut uf, j);
            orbits.entry(root).or_insert_with(|| vec![0; d])[j] = 1;
        }
        return Subspace::from_vectors(p, d, orbits.into_values().collect());
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for hgen in h.gens() {
        let m = rho.matrix_of(hgen);
        for r in 0..d {
            let mut row = m.row(r).to_vec();
            row[r] = (row[r] + p - 1) % p;
            rows.push(row);
        }
    }
    Mat::from_rows(p, rows).nullspace()
}

/// Iterated commutator space [V, H, ..., H] with k brackets. Generators
/// suffice at every step because the target is a subspace closed under the
/// action and rho(h1 h2) - I = (rho(h1) - I) rho(h2) + (rho(h2) - I).
pub fn commutator_space(rho: &Representation, h: &Subgroup, iterations: u32) -> Subspace {
    let p = rho.p;
    let d = rho.dim;
    let mut current = Subspace::full(p, d);
    for _ in 0..iterations {
        if current.dim() == 0 {
            break;
        }
        let mut vecs = Vec::new();
        for w in &current.basis {
            for hgen in h.gens() {
                let c = rho.commutator_vector(hgen, w);
                if c.iter().any(|&x| x != 0) {
                    vecs.push(c);
                }
            }
        }
        current = Subspace::from_vectors(p, d, vecs);
    }
    current
}

pub fn j_exponent(g: &PcGroup, rho: &Representation, h: &Subgroup) -> JExponent {
    let a = h.order_exponent(g.p());
    let c = fixed_space(rho, h).dim();
    JExponent {
        exponent: a as i64 + c as i64 - rho.dim as i64,
        subgroup_log: a,
        fixed_dim: c,
        dim: rho.dim,
    }
}

/// Faithfulness via the kernel test on Omega_1(Z(G)): a nontrivial kernel,
/// being normal, meets the center in an element of order p.
pub fn is_faithful(g: &PcGroup, rho: &Representation, caps: &Caps) -> Result<bool> {
    let z = center(g, caps)?;
    let oz = omega1(g, &z, caps)?;
    for x in oz.elements() {
        if !x.is_identity() && rho.acts_trivially(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (rho(x) - I)^2 = 0 with rho(x) != I.
pub fn is_quadratic_element(rho: &Representation, x: &Element) -> bool {
    let d = rho.dim;
    let mut nontrivial = false;
    for j in 0..d {
        let e = basis_vector(d, j);
        let w = rho.commutator_vector(x, &e);
        if w.iter().any(|&c| c != 0) {
            nontrivial = true;
            let w2 = rho.commutator_vector(x, &w);
            if w2.iter().any(|&c| c != 0) {
                return false;
            }
        }
    }
    nontrivial
}

/// [V, E, E] = 0, checked on generator pairs.
pub fn is_quadratic_subgroup(rho: &Representation, e: &Subgroup) -> bool {
    let d = rho.dim;
    for j in 0..d {
        let v = basis_vector(d, j);
        for a in e.gens() {
            let w = rho.commutator_vector(a, &v);
            if w.iter().all(|&c| c == 0) {
                continue;
            }
            for b in e.gens() {
                let w2 = rho.commutator_vector(b, &w);
                if w2.iter().any(|&c| c != 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// Least k >= 1 with (rho(x) - I)^k = 0; errors if rho(x) is not unipotent.
pub fn unipotent_minpoly_degree(rho: &Representation, x: &Element) -> Result<u32> {
    let m = rho.matrix_of(x);
    let d = m.sub(&Mat::identity(rho.p, rho.dim));
    let mut power = d.clone();
    let mut k = 1;
    loop {
        if power.is_zero() {
            return Ok(k);
        }
        if k as usize > rho.dim {
            return Err(Error::NotUnipotent(format!(
                "(rho(x) - I)^{} is still nonzero past the dimension",
                k
            )));
        }
        power = power.mul(&d);
        k += 1;
    }
}
