//! The combinatorial pipeline: partitions with parts >= 2, prototype
//! matrices and their determinants, sink-star and legal-set counting,
//! closed-form low-order coefficients, and the assembled polynomial.
//!
//! A sink star with q >= 2 leaves at vertex v can be chosen in
//! `C(d(v), q)` ways; a legal set places one star per partition part on
//! pairwise distinct sink vertices. The coefficient `d_k` is
//! `(-1)^m * sum over partitions of k of (legal sets) * det(prototype)`,
//! where the prototype determinant for parts `(c_1, ..., c_l)` is
//! `prod (-1)^(c_i - 1) * (c_i - 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::{DegreeSequence, Graph};
use crate::linalg::{IntMatrix, IntPoly};
use crate::zeta::{Method, ReducedZetaResult};
use crate::Error;

/// A partition of an integer into non-increasing parts, each >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates non-increasing order and the minimum part size.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p < 2) {
            return Err(Error::InvalidArgument(
                "partition parts must be >= 2".to_string(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be non-increasing".to_string(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer `k`.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct part values with multiplicities, descending by value.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((value, mult)) if *value == p => *mult += 1,
                _ => groups.push((p, 1)),
            }
        }
        groups
    }

    /// Renders as `(3,2)`; the empty partition as `()`.
    pub fn label(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

/// All partitions of `k` into parts >= 2, in lexicographic-descending
/// order. `k = 0` yields the single empty partition; `k = 1` yields none.
pub fn partitions_min2(k: usize) -> Vec<Partition> {
    fn recurse(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if remaining < 2 {
            return;
        }
        for part in (2..=remaining.min(max_part)).rev() {
            current.push(part);
            recurse(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(k, k, &mut Vec::new(), &mut out);
    out
}

/// The block-diagonal prototype matrix of a partition: one
/// all-ones-minus-identity block of size `c` per part `c`.
pub fn prototype_matrix(p: &Partition) -> IntMatrix {
    let k = p.sum();
    let mut block_of = vec![usize::MAX; k];
    let mut offset = 0;
    for (idx, &c) in p.parts().iter().enumerate() {
        for slot in block_of.iter_mut().skip(offset).take(c) {
            *slot = idx;
        }
        offset += c;
    }
    IntMatrix::from_fn(k, |i, j| {
        BigInt::from(u8::from(i != j && block_of[i] == block_of[j]))
    })
}

fn prototype_det_closed(p: &Partition) -> BigInt {
    let mut det = BigInt::one();
    for &c in p.parts() {
        let factor = BigInt::from(c as i64 - 1);
        det *= if c % 2 == 0 { -factor } else { factor };
    }
    det
}

/// Determinant of the prototype matrix, computed directly and asserted
/// against the closed form `prod (-1)^(c-1) * (c - 1)`.
pub fn prototype_det(p: &Partition) -> BigInt {
    let direct = prototype_matrix(p).determinant();
    assert_eq!(
        direct,
        prototype_det_closed(p),
        "prototype determinant closed form failed for {}",
        p.label()
    );
    direct
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Number of sink stars with `q` leaves: `sum over d(v) >= q of C(d(v), q)`.
/// Requires `q >= 2`; a sink needs in-degree at least 2.
pub fn sink_star_count(d: &DegreeSequence, q: usize) -> Result<BigInt, Error> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "sink stars need at least 2 leaves, got {q}"
        )));
    }
    Ok(d.degrees().iter().map(|&deg| binomial(deg, q)).sum())
}

/// Vertex bridges (2-leaf sink stars) split by sink degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBridgeTally {
    /// Number of degree-2 vertices (each carries exactly one bridge).
    pub degree_two_sinks: BigInt,
    /// Total bridges at vertices of degree >= 3.
    pub higher_degree_bridges: BigInt,
    /// Per-vertex bridge counts `C(d(v), 2)` for the degree >= 3 vertices.
    pub per_vertex: Vec<(usize, BigInt)>,
}

/// Counts vertex bridges: `|B|` (degree-2 sinks), `|C|` (bridges at
/// degree >= 3 sinks), and the per-vertex counts behind `|C|`.
pub fn vertex_bridge_tally(d: &DegreeSequence) -> VertexBridgeTally {
    let mut degree_two = 0u64;
    let mut higher = BigInt::zero();
    let mut per_vertex = Vec::new();
    for (v, &deg) in d.degrees().iter().enumerate() {
        if deg == 2 {
            degree_two += 1;
        } else if deg >= 3 {
            let c = binomial(deg, 2);
            higher += &c;
            per_vertex.push((v, c));
        }
    }
    VertexBridgeTally {
        degree_two_sinks: BigInt::from(degree_two),
        higher_degree_bridges: higher,
        per_vertex,
    }
}

fn big_choose_2(x: &BigInt) -> BigInt {
    x * (x - BigInt::one()) / BigInt::from(2)
}

/// Number of legal (distinct-sink) pairs of vertex bridges:
/// `C(|C| + |B|, 2) - sum over d(v) >= 3 of C(C(v), 2)`.
pub fn legal_pair_count(d: &DegreeSequence) -> BigInt {
    let tally = vertex_bridge_tally(d);
    let total = &tally.degree_two_sinks + &tally.higher_degree_bridges;
    let mut count = big_choose_2(&total);
    for (_, c) in &tally.per_vertex {
        count -= big_choose_2(c);
    }
    count
}

/// Number of legal sets of sink stars whose leaf counts realize the
/// partition: collections with one star per part, pairwise distinct
/// sinks, a part-`c` star at vertex `v` chosen in `C(d(v), c)` ways.
///
/// Computed as the ordered-tuple count over distinct vertices via a
/// dynamic program, divided by the factorial of each repeated part
/// value's multiplicity; the division is asserted exact.
pub fn legal_set_count(d: &DegreeSequence, p: &Partition) -> BigInt {
    let groups = p.grouped();
    if let Some(&(max_part, _)) = groups.first() {
        if max_part > d.max_degree() {
            return BigInt::zero();
        }
    }
    let usable = d.degrees().iter().filter(|&&deg| deg >= 2).count();
    if p.len() > usable {
        return BigInt::zero();
    }

    // Mixed-radix DP state: how many stars of each part value are placed.
    let radix: Vec<usize> = groups.iter().map(|&(_, mult)| mult + 1).collect();
    let mut stride = vec![1usize; groups.len()];
    for i in 1..groups.len() {
        stride[i] = stride[i - 1] * radix[i - 1];
    }
    let states: usize = radix.iter().product::<usize>().max(1);

    let mut f = vec![BigInt::zero(); states];
    f[0] = BigInt::one();
    for &deg in d.degrees() {
        if deg < 2 {
            continue;
        }
        let choices: Vec<BigInt> = groups.iter().map(|&(value, _)| binomial(deg, value)).collect();
        // Descending state order: each vertex hosts at most one star.
        for s in (0..states).rev() {
            if f[s].is_zero() {
                continue;
            }
            for (idx, &(_, mult)) in groups.iter().enumerate() {
                let placed = (s / stride[idx]) % radix[idx];
                if placed < mult && !choices[idx].is_zero() {
                    // Remaining slots of this value distinguish the
                    // ordered tuples we are counting.
                    let open_slots = BigInt::from(mult - placed);
                    let add = &f[s] * &choices[idx] * open_slots;
                    f[s + stride[idx]] += add;
                }
            }
        }
    }
    let ordered = f[states - 1].clone();

    let mut denom = BigInt::one();
    for &(_, mult) in &groups {
        for i in 2..=mult {
            denom *= BigInt::from(i);
        }
    }
    let (q, r) = ordered.div_rem(&denom);
    assert!(r.is_zero(), "legal-set multiplicity division must be exact");
    q
}

fn sign_for_edges(m: usize) -> BigInt {
    if m % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn half_edge_count(d: &DegreeSequence) -> usize {
    let total = d.total();
    assert!(total % 2 == 0, "degree sum must be even");
    total / 2
}

/// Closed form for `d_2`: `(-1)^(m+1)` times the number of line-graph
/// edges, `sum C(d(v), 2)`.
pub fn d2_closed(d: &DegreeSequence) -> BigInt {
    let m = half_edge_count(d);
    let count: BigInt = d.degrees().iter().map(|&deg| binomial(deg, 2)).sum();
    -sign_for_edges(m) * count
}

/// Closed form for `d_3`: `(-1)^m * 2 * sum C(d(v), 3)`.
pub fn d3_closed(d: &DegreeSequence) -> BigInt {
    let m = half_edge_count(d);
    let count: BigInt = d.degrees().iter().map(|&deg| binomial(deg, 3)).sum();
    sign_for_edges(m) * BigInt::from(2) * count
}

/// Closed form for `d_4`: `(-1)^m * (|V| - 3 * sum C(d(v), 4))` with
/// `|V|` the legal pair count.
pub fn d4_closed(d: &DegreeSequence) -> BigInt {
    let m = half_edge_count(d);
    let quads: BigInt = d.degrees().iter().map(|&deg| binomial(deg, 4)).sum();
    sign_for_edges(m) * (legal_pair_count(d) - BigInt::from(3) * quads)
}

/// One partition's contribution to a coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCountRow {
    pub partition: Partition,
    pub legal_sets: BigInt,
    pub prototype_det: BigInt,
    /// `legal_sets * prototype_det`.
    pub term: BigInt,
}

/// The per-partition breakdown of one coefficient `d_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCountBreakdown {
    pub k: usize,
    pub m: usize,
    pub rows: Vec<StarCountRow>,
    pub d_k: BigInt,
}

impl StarCountBreakdown {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "m": self.m,
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "partition": r.partition.label(),
                "legal_sets": r.legal_sets.to_string(),
                "prototype_det": r.prototype_det.to_string(),
                "term": r.term.to_string(),
            })).collect::<Vec<_>>(),
            "d_k": self.d_k.to_string(),
        })
    }

    /// Table form mirroring the per-partition columns.
    pub fn to_text(&self) -> String {
        let mut out = format!("k = {}\n", self.k);
        out.push_str("partition | legal sets | prototype det | term\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{} | {} | {} | {}\n",
                r.partition.label(),
                r.legal_sets,
                r.prototype_det,
                r.term
            ));
        }
        out.push_str(&format!("d_{} = {}\n", self.k, self.d_k));
        out
    }
}

/// Evaluates the coefficient formula
/// `d_k = (-1)^m * sum over partitions of |legal sets| * det(prototype)`.
pub fn dk_combinatorial(g: &Graph, k: usize) -> Result<StarCountBreakdown, Error> {
    let m = g.m();
    if k > 2 * m {
        return Err(Error::IndexOutOfRange { k, max: 2 * m });
    }
    let degrees = g.degree_sequence();
    let mut rows = Vec::new();
    let mut total = BigInt::zero();
    for partition in partitions_min2(k) {
        let legal_sets = legal_set_count(&degrees, &partition);
        // The asserted direct determinant is only worth its cost on
        // partitions that contribute; vanished rows take the closed form.
        let det = if legal_sets.is_zero() {
            prototype_det_closed(&partition)
        } else {
            prototype_det(&partition)
        };
        let term = &legal_sets * &det;
        total += &term;
        rows.push(StarCountRow {
            partition,
            legal_sets,
            prototype_det: det,
            term,
        });
    }
    Ok(StarCountBreakdown {
        k,
        m,
        rows,
        d_k: sign_for_edges(m) * total,
    })
}

/// Assembles the reduced Bartholdi polynomial purely from star counts.
pub fn reduced_poly_combinatorial(g: &Graph) -> ReducedZetaResult {
    let m = g.m();
    let mut coeffs = vec![BigInt::zero(); 2 * m + 1];
    for k in 0..=2 * m {
        let breakdown = dk_combinatorial(g, k).expect("k is in range by construction");
        coeffs[2 * m - k] = breakdown.d_k;
    }
    ReducedZetaResult {
        n: g.n(),
        m,
        method: Method::Combinatorial,
        poly: IntPoly::new(coeffs),
    }
}
