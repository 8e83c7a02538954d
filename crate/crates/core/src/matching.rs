//! Higher-order matching polynomials: counts of vertex-disjoint `r`-edge paths
//! by enumeration, and closed forms for complete and complete multipartite graphs.
//!
//! `M_r(K) = sum_j (-1)^j p_r(K, j) x^{N - (r+1) j}` where `p_r(K, j)` counts
//! sets of `j` vertex-disjoint simple paths with `r` edges each.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, int, Rational};
use crate::hypergeom::{self, HypParams};
use crate::operator;
use crate::par::Exec;
use crate::poly::{Basis, Poly};
use crate::report::Report;
use crate::spec::{Kind, SystemSpec};

/// Largest vertex count the bitmask enumerator supports.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Graph(format!("at most {MAX_VERTICES} vertices are supported, got {n}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Graph(format!("edge {u} {v} is outside 0..{}", self.n)));
        }
        if u == v {
            return Err(Error::Graph(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// One `u v` pair per line, 0-indexed; blank lines and `#` comments are skipped.
    /// The vertex count is one more than the largest index unless `n` is given.
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Graph(format!("line {}: '{s}' is not a vertex index", lineno + 1)))
            };
            if fields.len() != 2 {
                return Err(Error::Graph(format!("line {}: expected two vertex indices", lineno + 1)));
            }
            edges.push((parse(fields[0])?, parse(fields[1])?));
        }
        let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Graph::from_edges(n, &edges)
    }

    /// Vertex sets of all simple paths with `r` edges, one per undirected path
    /// (first endpoint below last endpoint).
    pub fn paths(&self, r: usize) -> Vec<u64> {
        let mut out = Vec::new();
        if r == 0 || r + 1 > self.n {
            return out;
        }
        for start in 0..self.n {
            self.extend_path(start, start, 1 << start, r, &mut out);
        }
        out
    }

    fn extend_path(&self, start: usize, last: usize, used: u64, left: usize, out: &mut Vec<u64>) {
        let mut next = self.adj[last] & !used;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            let used = used | 1 << v;
            if left == 1 {
                if start < v {
                    out.push(used);
                }
            } else {
                self.extend_path(start, v, used, left - 1, out);
            }
        }
    }
}

/// Complete multipartite graph on parts `n_1, ..., n_k`, vertices numbered
/// consecutively part by part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteGraph {
    parts: Vec<usize>,
}

impl MultipartiteGraph {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Graph("at least one part is required".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Graph("part sizes must be positive".into()));
        }
        let total: usize = parts.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::Graph(format!("at most {MAX_VERTICES} vertices are supported, got {total}")));
        }
        Ok(MultipartiteGraph { parts })
    }

    /// `K_n` as `n` singleton parts.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn bipartite(n: usize, m: usize) -> Result<Self> {
        Self::new(vec![n, m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_graph(&self) -> Graph {
        let mut part_of = Vec::with_capacity(self.vertex_count());
        for (p, &size) in self.parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let n = part_of.len();
        let mut g = Graph::empty(n).expect("size checked on construction");
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v).expect("indices in range");
                }
            }
        }
        g
    }
}

impl fmt::Display for MultipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "K_{{{}}}", parts.join(","))
    }
}

fn count_disjoint(paths: &[u64], from: usize, used: u64, left: usize) -> u64 {
    if left == 0 {
        return 1;
    }
    let mut total = 0;
    for k in from..paths.len() {
        if paths.len() - k < left {
            break;
        }
        if paths[k] & used == 0 {
            total += count_disjoint(paths, k + 1, used | paths[k], left - 1);
        }
    }
    total
}

/// Number of sets of `j` vertex-disjoint `r`-edge paths.
pub fn count_path_packings(g: &Graph, r: usize, j: usize) -> BigInt {
    if j == 0 {
        return BigInt::one();
    }
    if (r + 1) * j > g.vertex_count() {
        return BigInt::zero();
    }
    BigInt::from(count_disjoint(&g.paths(r), 0, 0, j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchRecord {
    pub r: usize,
    /// `p_r(K, j)` for `j = 0..=N/(r+1)`.
    pub counts: Vec<BigInt>,
    pub polynomial: Poly,
}

/// `M_r(g)` from enumerated packing counts; distinct `j` run through `exec`.
pub fn matching_poly_oracle(g: &Graph, r: usize, exec: Exec) -> Result<MatchRecord> {
    if r == 0 {
        return Err(Error::Precondition("path length r must be positive".into()));
    }
    let n = g.vertex_count();
    let paths = g.paths(r);
    let js: Vec<usize> = (0..=n / (r + 1)).collect();
    let counts: Vec<BigInt> = exec.map(&js, |&j| BigInt::from(count_disjoint(&paths, 0, 0, j)));
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (j, c) in counts.iter().enumerate() {
        let v = Rational::from_integer(c.clone());
        coeffs[n - (r + 1) * j] = if j % 2 == 0 { v } else { -v };
    }
    Ok(MatchRecord {
        r,
        counts,
        polynomial: Poly::new(Basis::Monomial, coeffs),
    })
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(exact::factorial(n))
}

fn sign(j: usize) -> Rational {
    if j % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `sum_j (-1)^j n! / ((n-(r+1)j)! j! 2^j) x^{n-(r+1)j}`.
pub fn complete_sum(n: usize, r: usize) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut j = 0;
    while (r + 1) * j <= n {
        let e = n - (r + 1) * j;
        coeffs[e] = sign(j) * fact(n) / (fact(e) * fact(j) * exact::pow(&int(2), j));
        j += 1;
    }
    Poly::new(Basis::Monomial, coeffs)
}

/// `x^n r+1F0(Delta(r+1; -n); -; (-1)^r (r+1)^{r+1} / (2 x^{r+1}))`.
pub fn formula_complete(n: usize, r: usize) -> Result<Poly> {
    let h = r + 1;
    let upper = hypergeom::delta_vec(h, &int(-(n as i64)));
    let mut z = exact::pow(&int(h as i64), h) / int(2);
    if r % 2 == 1 {
        z = -z;
    }
    hypergeom::pfq_in_power(&HypParams::new(upper, vec![]), &z, -(h as i64), n, n + 1)
}

/// The family with `G = d/dx` and `q(G) = -G^{r+1}/2`.
pub fn complete_spec(r: usize) -> Result<SystemSpec> {
    SystemSpec::pure_power(Kind::Continuous, vec![], int(1), Rational::new((-1).into(), 2.into()), r + 1)
}

/// Oracle, explicit sum, hypergeometric form and operator construction for `K_n`.
pub fn complete_check(n: usize, r: usize, exec: Exec) -> Result<Report> {
    let mut report = Report::new("matching-complete").param("n", n).param("r", r);
    let oracle = matching_poly_oracle(&MultipartiteGraph::complete(n)?.to_graph(), r, exec)?.polynomial;
    let sum = complete_sum(n, r);
    let hyp = formula_complete(n, r)?;
    let built = operator::build_p(&complete_spec(r)?, n);
    for (name, p) in [("explicit sum", &sum), ("hypergeometric form", &hyp), ("operator family", &built)] {
        if let Some(msg) = first_difference(&oracle, p) {
            report.violation(format!("{name} vs enumeration: {msg}"));
        }
    }
    report.note(format!("M_{r}(K_{n}) = {oracle}"));
    Ok(report)
}

fn first_difference(a: &Poly, b: &Poly) -> Option<String> {
    let top = a.coeffs().len().max(b.coeffs().len());
    (0..top).rev().find_map(|k| {
        let (ca, cb) = (a.coeff(k), b.coeff(k));
        (ca != cb).then(|| format!("coefficient of x^{k}: {ca} vs {cb}"))
    })
}

fn require_odd(r: usize) -> Result<()> {
    if r % 2 == 0 {
        return Err(Error::Precondition(format!("path length r must be odd, got {r}")));
    }
    Ok(())
}

/// `x^{n+m} r+1F0(Delta(h; -n), Delta(h; -m); -; -(r+1)^{r+1} / (2x)^{r+1})`, `h = (r+1)/2`.
pub fn formula_bipartite(n: usize, m: usize, r: usize) -> Result<Poly> {
    require_odd(r)?;
    let h = r.div_ceil(2);
    let mut upper = hypergeom::delta_vec(h, &int(-(n as i64)));
    upper.extend(hypergeom::delta_vec(h, &int(-(m as i64))));
    let z = -exact::pow(&int(r as i64 + 1), r + 1) / exact::pow(&int(2), r + 1);
    hypergeom::pfq_in_power(&HypParams::new(upper, vec![]), &z, -(r as i64 + 1), n + m, n + m + 1)
}

/// `sum_j (-1)^j n! m! / ((n-hj)! (m-hj)! j!) x^{n+m-(r+1)j}`, `h = (r+1)/2`.
pub fn bipartite_sum(n: usize, m: usize, r: usize) -> Result<Poly> {
    require_odd(r)?;
    let h = r.div_ceil(2);
    let mut coeffs = vec![Rational::zero(); n + m + 1];
    let mut j = 0;
    while h * j <= n.min(m) {
        coeffs[n + m - (r + 1) * j] =
            sign(j) * fact(n) * fact(m) / (fact(n - h * j) * fact(m - h * j) * fact(j));
        j += 1;
    }
    Ok(Poly::new(Basis::Monomial, coeffs))
}

/// The `l = 1`, `d = 1` family with `R(H) = -(H - M + 1)`, `M = n - m`.
pub fn bipartite_spec(n: usize, m: usize) -> Result<SystemSpec> {
    let big_m = n as i64 - m as i64;
    SystemSpec::pure_power(Kind::Continuous, vec![int(-big_m)], int(-1), int(1), 1)
}

/// `x^{-M} P_n(x^2)` for the family of [`bipartite_spec`], requiring `n >= m`.
pub fn bipartite_bridge(n: usize, m: usize) -> Result<Poly> {
    if n < m {
        return Err(Error::Precondition(format!("needs n >= m, got n = {n}, m = {m}")));
    }
    let p = operator::build_p(&bipartite_spec(n, m)?, n).substitute_power(&Rational::one(), 2);
    let shift = n - m;
    let coeffs = p.coeffs();
    if coeffs.iter().take(shift).any(|c| !c.is_zero()) {
        return Err(Error::NonPolynomialTerm { term: 0 });
    }
    Ok(Poly::new(Basis::Monomial, coeffs.iter().skip(shift).cloned().collect()))
}

/// Oracle, hypergeometric form, explicit sum and (for `r = 1`) the operator family for `K_{n,m}`.
pub fn bipartite_check(n: usize, m: usize, r: usize, exec: Exec) -> Result<Report> {
    let mut report = Report::new("matching-bipartite").param("n", n).param("m", m).param("r", r);
    let oracle = matching_poly_oracle(&MultipartiteGraph::bipartite(n, m)?.to_graph(), r, exec)?.polynomial;
    let mut forms = vec![("hypergeometric form", formula_bipartite(n, m, r)?), ("explicit sum", bipartite_sum(n, m, r)?)];
    if r == 1 {
        forms.push(("operator family", bipartite_bridge(n.max(m), n.min(m))?));
    }
    for (name, p) in &forms {
        if let Some(msg) = first_difference(&oracle, p) {
            report.violation(format!("{name} vs enumeration: {msg}"));
        }
    }
    report.note(format!("M_{r}(K_{{{n},{m}}}) = {oracle}"));
    Ok(report)
}

/// Parameter blocks used for the multipartite closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConjectureReading {
    /// `Delta(r+1; -n_s)` for every part.
    Literal,
    /// `Delta((r+1)/2; -n_s)` for every part, which reduces to the bipartite form for two parts.
    HalfBlock,
}

impl ConjectureReading {
    pub const ALL: [ConjectureReading; 2] = [ConjectureReading::Literal, ConjectureReading::HalfBlock];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureReading::Literal => "literal",
            ConjectureReading::HalfBlock => "half-block",
        }
    }
}

/// `x^N F(blocks; -; -(r+1)^{r+1} / (2x)^{r+1})` as `(exponent, coefficient)` pairs,
/// highest exponent first; exponents may be negative.
pub fn conjectured_form(parts: &[usize], r: usize, reading: ConjectureReading) -> Result<Vec<(i64, Rational)>> {
    require_odd(r)?;
    let block = match reading {
        ConjectureReading::Literal => r + 1,
        ConjectureReading::HalfBlock => r.div_ceil(2),
    };
    let upper: Vec<Rational> = parts
        .iter()
        .flat_map(|&n| hypergeom::delta_vec(block, &int(-(n as i64))))
        .collect();
    let total: usize = parts.iter().sum();
    let z = -exact::pow(&int(r as i64 + 1), r + 1) / exact::pow(&int(2), r + 1);
    let coeffs = hypergeom::pfq_coefficients(&HypParams::new(upper, vec![]), total + 1)?;
    let mut out = Vec::new();
    let mut zj = Rational::one();
    for (j, c) in coeffs.iter().enumerate() {
        let v = c * &zj;
        zj *= &z;
        if !v.is_zero() {
            out.push((total as i64 - (r as i64 + 1) * j as i64, v));
        }
    }
    Ok(out)
}

/// Compares the multipartite closed form with enumeration; reports `EQUAL`
/// or the first differing coefficient.
pub fn conjecture_multipartite(parts: &[usize], r: usize, reading: ConjectureReading, exec: Exec) -> Result<Report> {
    let graph = MultipartiteGraph::new(parts.to_vec())?;
    let mut report = Report::new("matching-multipartite")
        .param("parts", format!("{parts:?}"))
        .param("r", r)
        .param("reading", reading.name());
    let oracle = matching_poly_oracle(&graph.to_graph(), r, exec)?.polynomial;
    let form = conjectured_form(parts, r, reading)?;
    let total = graph.vertex_count() as i64;
    let lowest = form.iter().map(|(e, _)| *e).min().unwrap_or(0).min(0);
    let mut mismatch = None;
    for e in (lowest..=total).rev() {
        let expected = if e >= 0 { oracle.coeff(e as usize) } else { Rational::zero() };
        let got = form
            .iter()
            .find(|(k, _)| *k == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero);
        if expected != got {
            mismatch = Some(format!("coefficient of x^{e}: enumeration {expected}, closed form {got}"));
            break;
        }
    }
    match mismatch {
        None => report.note("EQUAL"),
        Some(msg) => report.violation(msg),
    }
    report.note(format!("enumeration: {oracle}"));
    Ok(report)
}
