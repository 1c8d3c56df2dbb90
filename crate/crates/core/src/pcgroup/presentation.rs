//! Power-commutator presentations and the `.pcp` text format.
//!
//! A presentation has generators g1..gn over an odd prime p, a power relation
//! `gi^p = pow[i]` per generator and a commutator relation `[gi, gj] = comm[i][j]`
//! for every j < i. Relation words are stored as normal-form exponent vectors.
//! Omitted relations are trivial.

use crate::error::{Error, Result};

/// Exponent vector of length n, entries in `[0, p)`.
pub type ExpVec = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    pub p: u32,
    pub n: usize,
    /// pow[i] = value of g_{i+1}^p (0-based storage).
    pub pow: Vec<ExpVec>,
    /// comm[i][j] = value of [g_{i+1}, g_{j+1}] for j < i.
    pub comm: Vec<Vec<ExpVec>>,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PcPresentation {
    pub fn trivial_relations(p: u32, n: usize) -> Self {
        PcPresentation {
            p,
            n,
            pow: vec![vec![0; n]; n],
            comm: (0..n).map(|i| vec![vec![0; n]; i]).collect(),
        }
    }

    /// Parse the `.pcp` format. Line 1 is `p n`; then `pow i: e1 .. en` and
    /// `comm i j: e1 .. en` lines. `#` starts a comment.
    pub fn parse(text: &str) -> Result<PcPresentation> {
        let mut header: Option<(u32, usize)> = None;
        let mut pres: Option<PcPresentation> = None;
        let mut seen_pow = Vec::new();
        let mut seen_comm = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if header.is_none() {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected 'p n', got '{line}'"),
                    });
                }
                let p: u32 = parts[0].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad prime '{}'", parts[0]),
                })?;
                let n: usize = parts[1].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad generator count '{}'", parts[1]),
                })?;
                if !is_prime(p) || p == 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("{p} is not an odd prime"),
                    });
                }
                if n == 0 {
                    return Err(Error::Parse { line: line_no, msg: "n must be at least 1".into() });
                }
                if p > 251 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("prime {p} exceeds the supported bound 251"),
                    });
                }
                header = Some((p, n));
                pres = Some(PcPresentation::trivial_relations(p, n));
                seen_pow = vec![false; n];
                seen_comm = (0..n).map(|i| vec![false; i]).collect();
                continue;
            }
            let (p, n) = header.unwrap();
            let pres = pres.as_mut().unwrap();
            let Some(colon) = line.find(':') else {
                return Err(Error::Parse { line: line_no, msg: format!("missing ':' in '{line}'") });
            };
            let (head, tail) = line.split_at(colon);
            let head: Vec<&str> = head.split_whitespace().collect();
            let word = parse_word(&tail[1..], p, n, line_no)?;
            match head.as_slice() {
                ["pow", i_str] => {
                    let i = parse_gen_index(i_str, n, line_no)?;
                    if seen_pow[i - 1] {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate pow relation for g{i}"),
                        });
                    }
                    seen_pow[i - 1] = true;
                    pres.pow[i - 1] = word;
                }
                ["comm", i_str, j_str] => {
                    let i = parse_gen_index(i_str, n, line_no)?;
                    let j = parse_gen_index(j_str, n, line_no)?;
                    if j >= i {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("comm {i} {j}: need j < i"),
                        });
                    }
                    if seen_comm[i - 1][j - 1] {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate comm relation for [g{i}, g{j}]"),
                        });
                    }
                    seen_comm[i - 1][j - 1] = true;
                    pres.comm[i - 1][j - 1] = word;
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected 'pow i:' or 'comm i j:', got '{line}'"),
                    });
                }
            }
        }
        pres.ok_or(Error::Parse { line: 0, msg: "empty presentation".into() })
    }

    /// Emit the `.pcp` text, listing only nontrivial relations.
    pub fn to_pcp_string(&self) -> String {
        let mut out = format!("{} {}\n", self.p, self.n);
        for i in 0..self.n {
            if self.pow[i].iter().any(|&e| e != 0) {
                out.push_str(&format!("pow {}:{}\n", i + 1, fmt_word(&self.pow[i])));
            }
        }
        for i in 0..self.n {
            for j in 0..i {
                if self.comm[i][j].iter().any(|&e| e != 0) {
                    out.push_str(&format!(
                        "comm {} {}:{}\n",
                        i + 1,
                        j + 1,
                        fmt_word(&self.comm[i][j])
                    ));
                }
            }
        }
        out
    }
}

fn fmt_word(w: &[u32]) -> String {
    w.iter().map(|e| format!(" {e}")).collect()
}

fn parse_gen_index(s: &str, n: usize, line: usize) -> Result<usize> {
    let i: usize = s
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("bad generator index '{s}'") })?;
    if i < 1 || i > n {
        return Err(Error::Parse { line, msg: format!("generator index {i} out of range 1..={n}") });
    }
    Ok(i)
}

fn parse_word(s: &str, p: u32, n: usize, line: usize) -> Result<ExpVec> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != n {
        return Err(Error::Parse {
            line,
            msg: format!("expected {n} exponents, got {}", parts.len()),
        });
    }
    let mut w = Vec::with_capacity(n);
    for part in parts {
        let e: u32 = part
            .parse()
            .map_err(|_| Error::Parse { line, msg: format!("bad exponent '{part}'") })?;
        if e >= p {
            return Err(Error::Parse { line, msg: format!("exponent {e} not in [0, {p})") });
        }
        w.push(e);
    }
    Ok(w)
}
