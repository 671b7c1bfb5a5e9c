//! The symmetric digraph D(G), its arc involution, and the matrices
//! T, J, B of the oriented line graph.
//!
//! Edge `i` of the source graph, stored as `{u, v}` with `u < v`,
//! contributes arc `i = (u, v)` and arc `i + m = (v, u)`; the arc
//! involution is `a <-> a + m (mod 2m)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::linalg::{IntMatrix, IntPoly};
use crate::Error;

/// The 2m labeled arcs of D(G) together with the inversion pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSystem {
    m: usize,
    arcs: Vec<(usize, usize)>,
}

impl ArcSystem {
    pub fn new(g: &Graph) -> Self {
        let m = g.m();
        let mut arcs = Vec::with_capacity(2 * m);
        arcs.extend(g.edges().iter().copied());
        arcs.extend(g.edges().iter().map(|&(u, v)| (v, u)));
        ArcSystem { m, arcs }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of arcs, `2m`.
    pub fn arc_count(&self) -> usize {
        2 * self.m
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Origin vertex of arc `a`.
    pub fn tail(&self, a: usize) -> usize {
        self.arcs[a].0
    }

    /// Terminus vertex of arc `a`.
    pub fn head(&self, a: usize) -> usize {
        self.arcs[a].1
    }

    /// Index of the inverse arc.
    pub fn inverse(&self, a: usize) -> usize {
        (a + self.m) % (2 * self.m)
    }
}

/// A square 0/1 matrix indexed by arc indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    dim: usize,
    data: Vec<u8>,
}

impl BinaryMatrix {
    pub fn zeros(dim: usize) -> Self {
        BinaryMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BinaryMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                if f(i, j) {
                    m.data[i * dim + j] = 1;
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.dim + j] == 1
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| BigInt::from(self.data[i * self.dim + j]))
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.dim).filter(|&j| self.get(i, j)).count()
    }

    /// Plain-text export: one row of 0/1 digits per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.push(if self.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// JSON export: array of 0/1 arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.dim)
                .map(|i| {
                    serde_json::Value::Array(
                        (0..self.dim)
                            .map(|j| serde_json::Value::from(u8::from(self.get(i, j))))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// Adjacency matrix T of the oriented line graph:
/// `T[i][j] = 1` iff `head(i) = tail(j)` and `j` is not the inverse of `i`.
pub fn matrix_t(a: &ArcSystem) -> BinaryMatrix {
    BinaryMatrix::from_fn(a.arc_count(), |i, j| {
        a.head(i) == a.tail(j) && j != a.inverse(i)
    })
}

/// The arc involution matrix J: `J[i][j] = 1` iff `j` is the inverse of `i`.
pub fn matrix_j(m: usize) -> BinaryMatrix {
    BinaryMatrix::from_fn(2 * m, |i, j| j == (i + m) % (2 * m))
}

/// The full continuation matrix B: `B[i][j] = 1` iff `head(i) = tail(j)`
/// (backtracking included), so that `B = T + J`.
pub fn matrix_b(a: &ArcSystem) -> BinaryMatrix {
    BinaryMatrix::from_fn(a.arc_count(), |i, j| a.head(i) == a.tail(j))
}

/// Pass/fail record of the structural identities tying T, J, and the
/// line graph together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Off-diagonal blocks are symmetric: `B = B^T` and `C = C^T`.
    pub off_blocks_symmetric: bool,
    /// The lower-right block equals the transpose of the upper-left one.
    pub d_block_is_a_transpose: bool,
    /// The off-diagonal blocks have zero diagonals.
    pub off_blocks_zero_diagonal: bool,
    /// `T^T = J T J`.
    pub transpose_identity: bool,
    /// `A + B + C + A^T` is the adjacency matrix of the line graph.
    pub line_graph_identity: bool,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.off_blocks_symmetric
            && self.d_block_is_a_transpose
            && self.off_blocks_zero_diagonal
            && self.transpose_identity
            && self.line_graph_identity
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "off_blocks_symmetric": self.off_blocks_symmetric,
            "d_block_is_a_transpose": self.d_block_is_a_transpose,
            "off_blocks_zero_diagonal": self.off_blocks_zero_diagonal,
            "transpose_identity": self.transpose_identity,
            "line_graph_identity": self.line_graph_identity,
            "pass": self.all_pass(),
        })
    }
}

/// Checks the block structure of T in the arc labeling where rows/columns
/// `0..m` are the forward arcs and `m..2m` their inverses.
pub fn check_structure(t: &BinaryMatrix, j: &BinaryMatrix, g: &Graph) -> StructureReport {
    let dim = t.dim();
    let m = dim / 2;
    let block = |bi: usize, bj: usize, i: usize, jx: usize| t.get(bi * m + i, bj * m + jx);

    let mut off_blocks_symmetric = true;
    let mut d_block_is_a_transpose = true;
    let mut off_blocks_zero_diagonal = true;
    for i in 0..m {
        if block(0, 1, i, i) || block(1, 0, i, i) {
            off_blocks_zero_diagonal = false;
        }
        for jx in 0..m {
            if block(0, 1, i, jx) != block(0, 1, jx, i) || block(1, 0, i, jx) != block(1, 0, jx, i)
            {
                off_blocks_symmetric = false;
            }
            if block(1, 1, i, jx) != block(0, 0, jx, i) {
                d_block_is_a_transpose = false;
            }
        }
    }

    let ti = t.to_int_matrix();
    let ji = j.to_int_matrix();
    let transpose_identity = ti.transpose() == ji.mul(&ti).mul(&ji);

    let lg = crate::graph::line_graph(g);
    let mut line_graph_identity = true;
    for i in 0..m {
        for jx in 0..m {
            let sum = u8::from(block(0, 0, i, jx))
                + u8::from(block(0, 1, i, jx))
                + u8::from(block(1, 0, i, jx))
                + u8::from(block(0, 0, jx, i));
            let adjacent = u8::from(i != jx && lg.has_edge(i, jx));
            if sum != adjacent {
                line_graph_identity = false;
            }
        }
    }

    StructureReport {
        off_blocks_symmetric,
        d_block_is_a_transpose,
        off_blocks_zero_diagonal,
        transpose_identity,
        line_graph_identity,
    }
}

/// Size limits for the brute-force verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceBounds {
    /// Maximum number of arcs (2m) admitted to subset/walk enumeration.
    pub max_arcs: usize,
    /// Maximum closed-walk length for the trace identity.
    pub max_walk_len: usize,
}

impl Default for BruteForceBounds {
    fn default() -> Self {
        BruteForceBounds {
            max_arcs: 16,
            max_walk_len: 8,
        }
    }
}

/// Enumerates every closed arc-walk `(a_1, ..., a_k)` of D(G) (cyclic
/// continuation, so `head(a_k) = tail(a_1)` as well) and returns the
/// polynomial `sum over walks of u^bumps`, where a bump is a position
/// with `a_{j+1} = inverse(a_j)`, counted cyclically.
pub fn closed_walk_bump_poly(
    a: &ArcSystem,
    k: usize,
    bounds: &BruteForceBounds,
) -> Result<IntPoly, Error> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "closed walks must have length >= 1".to_string(),
        ));
    }
    if a.arc_count() > bounds.max_arcs {
        return Err(Error::BoundExceeded {
            what: format!("walk enumeration on {} arcs", a.arc_count()),
            limit: bounds.max_arcs,
        });
    }
    if k > bounds.max_walk_len {
        return Err(Error::BoundExceeded {
            what: format!("walk length {k}"),
            limit: bounds.max_walk_len,
        });
    }

    let n = a.arcs().iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, &(u, _)) in a.arcs().iter().enumerate() {
        out_arcs[u].push(idx);
    }

    let mut bump_counts = vec![BigInt::zero(); k + 1];
    let mut walk = Vec::with_capacity(k);
    for start in 0..a.arc_count() {
        walk.push(start);
        extend_walks(a, &out_arcs, k, &mut walk, &mut bump_counts);
        walk.pop();
    }
    Ok(IntPoly::new(bump_counts))
}

fn extend_walks(
    a: &ArcSystem,
    out_arcs: &[Vec<usize>],
    k: usize,
    walk: &mut Vec<usize>,
    bump_counts: &mut [BigInt],
) {
    if walk.len() == k {
        let last = *walk.last().unwrap();
        if a.head(last) != a.tail(walk[0]) {
            return;
        }
        let mut bumps = 0usize;
        for i in 0..k {
            if walk[(i + 1) % k] == a.inverse(walk[i]) {
                bumps += 1;
            }
        }
        bump_counts[bumps] += BigInt::one();
        return;
    }
    let from = a.head(*walk.last().unwrap());
    for &next in &out_arcs[from] {
        walk.push(next);
        extend_walks(a, out_arcs, k, walk, bump_counts);
        walk.pop();
    }
}
