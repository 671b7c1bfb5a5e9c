//! Zeta-function computations: the Ihara reciprocal polynomial, exact
//! two-variable Bartholdi evaluations, and the reduced Bartholdi
//! polynomial via the determinant and product pipelines.
//!
//! The reduced polynomial is `det(T + uJ)`, a degree-`2m` polynomial in
//! `u` whose coefficient of `u^(2m-k)` is written `d_k`. The determinant
//! pipeline obtains it as `(-1)^m * c(-u)` with `c` the characteristic
//! polynomial of `J*T`, using `T + uJ = J * (J*T + uI)` and
//! `det(J) = (-1)^m`. The product pipeline multiplies one factor
//! `(u + d(v) - 1) * (u - 1)^(d(v) - 1)` per vertex, which is the same
//! determinant read off the block-diagonal form of `J*T`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arcs::{matrix_b, matrix_j, matrix_t, ArcSystem};
use crate::graph::Graph;
use crate::linalg::{IntMatrix, IntPoly, RationalMatrix};
use crate::Error;

/// Which pipeline produced a [`ReducedZetaResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Determinant,
    Product,
    Combinatorial,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Determinant => "determinant",
            Method::Product => "product",
            Method::Combinatorial => "combinatorial",
        }
    }
}

/// The reduced Bartholdi zeta polynomial of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedZetaResult {
    pub n: usize,
    pub m: usize,
    pub method: Method,
    /// `det(T + uJ)`, degree exactly `2m` in `u` (constant 1 for m = 0).
    pub poly: IntPoly,
}

impl ReducedZetaResult {
    /// The coefficient `d_k` of `u^(2m-k)`.
    pub fn coefficient_d(&self, k: usize) -> Result<BigInt, Error> {
        let max = 2 * self.m;
        if k > max {
            return Err(Error::IndexOutOfRange { k, max });
        }
        Ok(self.poly.coeff(max - k))
    }

    /// All coefficients as `(k, d_k)` pairs, ascending in `k`.
    pub fn d_values(&self) -> Vec<(usize, BigInt)> {
        (0..=2 * self.m)
            .map(|k| (k, self.poly.coeff(2 * self.m - k)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut d = serde_json::Map::new();
        for (k, v) in self.d_values() {
            d.insert(k.to_string(), serde_json::Value::String(v.to_string()));
        }
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "method": self.method.as_str(),
            "coeffs_ascending": self.poly.to_json(),
            "d": d,
        })
    }

    /// Descending-power text form, e.g. `-u^6 + 3u^4 - 3u^2 + 1`.
    pub fn to_text(&self) -> String {
        self.poly.to_text_descending("u")
    }
}

/// The Ihara zeta reciprocal `det(I - tT)` as an integer polynomial in
/// `t`, obtained from the characteristic polynomial of T by coefficient
/// reversal. Constant term 1; identically 1 on forests.
pub fn ihara_reciprocal(g: &Graph) -> IntPoly {
    let a = ArcSystem::new(g);
    let t = matrix_t(&a).to_int_matrix();
    t.charpoly().reversed(a.arc_count())
}

/// An exact Bartholdi zeta reciprocal evaluation at a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BartholdiEvaluation {
    pub u: BigRational,
    pub t: BigRational,
    pub edge_value: BigRational,
    pub vertex_value: BigRational,
    pub agreement: bool,
}

/// Edge form of the Bartholdi zeta reciprocal:
/// `det(I - (B - (1-u)J)t)`, asserted equal to `det(I - (T + uJ)t)`.
pub fn bartholdi_edge_eval(g: &Graph, u: &BigRational, t: &BigRational) -> BigRational {
    let a = ArcSystem::new(g);
    let dim = a.arc_count();
    let tm = matrix_t(&a);
    let bm = matrix_b(&a);
    let jm = matrix_j(a.m());
    let one_minus_u = BigRational::one() - u;

    let ind = |flag: bool| {
        if flag {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };
    let via_b = RationalMatrix::from_fn(dim, |i, j| {
        let entry = ind(bm.get(i, j)) - &one_minus_u * ind(jm.get(i, j));
        ind(i == j) - t * entry
    })
    .determinant();
    let via_t = RationalMatrix::from_fn(dim, |i, j| {
        let entry = ind(tm.get(i, j)) + u * ind(jm.get(i, j));
        ind(i == j) - t * entry
    })
    .determinant();
    assert_eq!(via_b, via_t, "B - (1-u)J and T + uJ are the same matrix");
    via_t
}

/// Vertex form of the Bartholdi zeta reciprocal:
/// `(1 - (1-u)^2 t^2)^(m-n) * det(I - tA + (1-u)(D - (1-u)I) t^2)`,
/// with A the vertex adjacency matrix and D the degree matrix.
///
/// Errors when the prefactor base vanishes while its exponent `m - n`
/// is negative.
pub fn bartholdi_vertex_eval(
    g: &Graph,
    u: &BigRational,
    t: &BigRational,
) -> Result<BigRational, Error> {
    let n = g.n();
    let exponent = g.m() as i64 - n as i64;
    let one_minus_u = BigRational::one() - u;
    let base = BigRational::one() - &one_minus_u * &one_minus_u * t * t;
    if base.is_zero() && exponent < 0 {
        return Err(Error::PrefactorPole { exponent });
    }

    let degrees = g.degree_sequence();
    let det = RationalMatrix::from_fn(n, |i, j| {
        let mut entry = BigRational::zero();
        if i == j {
            entry += BigRational::one();
            let d_minus = BigRational::from_integer(BigInt::from(degrees.degrees()[i]))
                - &one_minus_u;
            entry += &one_minus_u * d_minus * t * t;
        } else if g.has_edge(i, j) {
            entry -= t;
        }
        entry
    })
    .determinant();

    let mut result = det;
    if exponent >= 0 {
        for _ in 0..exponent {
            result *= &base;
        }
    } else {
        for _ in 0..(-exponent) {
            result /= &base;
        }
    }
    Ok(result)
}

/// Evaluates both determinant forms and records their agreement.
pub fn evaluate_bartholdi(
    g: &Graph,
    u: &BigRational,
    t: &BigRational,
) -> Result<BartholdiEvaluation, Error> {
    let edge_value = bartholdi_edge_eval(g, u, t);
    let vertex_value = bartholdi_vertex_eval(g, u, t)?;
    let agreement = edge_value == vertex_value;
    Ok(BartholdiEvaluation {
        u: u.clone(),
        t: t.clone(),
        edge_value,
        vertex_value,
        agreement,
    })
}

/// Determinant pipeline for the reduced Bartholdi polynomial:
/// `det(T + uJ) = (-1)^m * charpoly(J*T)(-u)`.
pub fn reduced_bartholdi_det(g: &Graph) -> ReducedZetaResult {
    let a = ArcSystem::new(g);
    let t = matrix_t(&a).to_int_matrix();
    let j = matrix_j(a.m()).to_int_matrix();
    let c = j.mul(&t).charpoly();
    let mut poly = c.substitute_neg();
    if a.m() % 2 == 1 {
        poly = -&poly;
    }
    ReducedZetaResult {
        n: g.n(),
        m: a.m(),
        method: Method::Determinant,
        poly,
    }
}

/// Product pipeline: `det(T + uJ)` assembled as
/// `(-1)^m * prod over vertices of (u + d(v) - 1) * (u - 1)^(d(v) - 1)`.
/// Isolated vertices contribute the empty factor 1; leaves contribute `u`.
pub fn reduced_bartholdi_product(g: &Graph) -> ReducedZetaResult {
    let mut poly = IntPoly::one();
    for &d in g.degree_sequence().degrees() {
        if d == 0 {
            continue;
        }
        let linear = IntPoly::new(vec![BigInt::from(d as i64 - 1), BigInt::one()]);
        let u_minus_one = IntPoly::from_i64(&[-1, 1]);
        poly = &poly * &linear;
        poly = &poly * &u_minus_one.pow(d - 1);
    }
    if g.m() % 2 == 1 {
        poly = -&poly;
    }
    ReducedZetaResult {
        n: g.n(),
        m: g.m(),
        method: Method::Product,
        poly,
    }
}

/// Runs all three pipelines and checks coefficient-for-coefficient
/// agreement, returning the determinant result on success.
pub fn reduced_bartholdi_all(g: &Graph) -> Result<ReducedZetaResult, Error> {
    let det = reduced_bartholdi_det(g);
    let product = reduced_bartholdi_product(g);
    let stars = crate::stars::reduced_poly_combinatorial(g);
    for other in [&product.poly, &stars.poly] {
        if let Some(power) = first_mismatch(&det.poly, other) {
            return Err(Error::PipelineDisagreement {
                power,
                lhs: det.poly.coeff(power).to_string(),
                rhs: other.coeff(power).to_string(),
            });
        }
    }
    Ok(det)
}

/// First power at which two polynomials differ, if any.
pub fn first_mismatch(a: &IntPoly, b: &IntPoly) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&i| a.coeff(i) != b.coeff(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, random_graph, realize_degree_sequence, DegreeSequence};
    use num_rational::Ratio;

    fn triangle() -> Graph {
        parse_edge_list("0 1\n0 2\n1 2").unwrap()
    }

    fn single_edge() -> Graph {
        parse_edge_list("0 1").unwrap()
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Brute-force symbolic determinant over polynomial entries by
    /// cofactor expansion; the oracle for the determinant pipeline.
    fn symbolic_det(entries: &[Vec<IntPoly>]) -> IntPoly {
        let n = entries.len();
        if n == 0 {
            return IntPoly::one();
        }
        if n == 1 {
            return entries[0][0].clone();
        }
        let mut det = IntPoly::zero();
        for j in 0..n {
            if entries[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<IntPoly>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| entries[r][c].clone())
                        .collect()
                })
                .collect();
            let term = &entries[0][j] * &symbolic_det(&minor);
            if j % 2 == 0 {
                det = &det + &term;
            } else {
                det = &det - &term;
            }
        }
        det
    }

    fn t_plus_uj_symbolic(g: &Graph) -> IntPoly {
        let a = ArcSystem::new(g);
        let t = matrix_t(&a);
        let j = matrix_j(a.m());
        let entries: Vec<Vec<IntPoly>> = (0..a.arc_count())
            .map(|i| {
                (0..a.arc_count())
                    .map(|jx| {
                        let mut p = IntPoly::zero();
                        if t.get(i, jx) {
                            p = &p + &IntPoly::one();
                        }
                        if j.get(i, jx) {
                            p = &p + &IntPoly::from_i64(&[0, 1]);
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        symbolic_det(&entries)
    }

    #[test]
    fn ihara_single_edge_is_one() {
        assert_eq!(ihara_reciprocal(&single_edge()), IntPoly::one());
    }

    #[test]
    fn ihara_triangle() {
        // T is two disjoint directed 3-cycles, so det(I - tT) = (1 - t^3)^2.
        assert_eq!(
            ihara_reciprocal(&triangle()),
            IntPoly::from_i64(&[1, 0, 0, -2, 0, 0, 1])
        );
    }

    #[test]
    fn ihara_of_trees_is_one() {
        let trees = [
            "0 1\n1 2",
            "0 1\n1 2\n2 3",
            "0 1\n0 2\n0 3",
            "0 1\n0 2\n0 3\n0 4\n4 5",
        ];
        for spec in trees {
            let g = parse_edge_list(spec).unwrap();
            assert_eq!(ihara_reciprocal(&g), IntPoly::one(), "{spec}");
        }
    }

    #[test]
    fn reduced_det_single_edge() {
        let r = reduced_bartholdi_det(&single_edge());
        assert_eq!(r.poly, IntPoly::from_i64(&[0, 0, -1]));
        assert_eq!(r.to_text(), "-u^2");
    }

    #[test]
    fn reduced_det_triangle_against_symbolic_oracle() {
        let r = reduced_bartholdi_det(&triangle());
        let expected = IntPoly::from_i64(&[1, 0, -3, 0, 3, 0, -1]);
        assert_eq!(r.poly, expected);
        assert_eq!(t_plus_uj_symbolic(&triangle()), expected);
    }

    #[test]
    fn reduced_det_matches_symbolic_oracle_on_random_graphs() {
        for seed in 0..8u64 {
            let g = random_graph(5, Ratio::new(2, 5), seed).unwrap();
            if g.m() > 4 {
                continue; // keep the cofactor oracle cheap
            }
            assert_eq!(reduced_bartholdi_det(&g).poly, t_plus_uj_symbolic(&g));
        }
    }

    #[test]
    fn product_pipeline_matches_determinant() {
        let cases = [
            single_edge(),
            triangle(),
            parse_edge_list("0 1\n1 2").unwrap(),
            parse_edge_list("n 5\n0 1\n0 2\n0 3").unwrap(), // isolated vertex + leaves
            parse_edge_list("").unwrap(),
        ];
        for g in cases {
            let det = reduced_bartholdi_det(&g);
            let product = reduced_bartholdi_product(&g);
            assert_eq!(det.poly, product.poly, "n={} m={}", g.n(), g.m());
            assert_eq!(product.poly.degree().unwrap_or(0), 2 * g.m());
        }
    }

    #[test]
    fn degree_sequence_determines_the_polynomial() {
        let d = DegreeSequence::new(vec![2, 2, 2, 3, 4, 5, 6]);
        let g1 = realize_degree_sequence(&d).unwrap();
        let mut degrees = d.degrees().to_vec();
        degrees.reverse();
        let g2 = realize_degree_sequence(&DegreeSequence::new(degrees)).unwrap();
        assert_eq!(
            reduced_bartholdi_det(&g1).poly,
            reduced_bartholdi_det(&g2).poly
        );
    }

    #[test]
    fn coefficient_accessors() {
        let r = reduced_bartholdi_det(&triangle());
        assert_eq!(r.coefficient_d(0).unwrap(), BigInt::from(-1));
        assert_eq!(r.coefficient_d(1).unwrap(), BigInt::zero());
        assert_eq!(r.coefficient_d(2).unwrap(), BigInt::from(3));
        assert_eq!(r.coefficient_d(6).unwrap(), BigInt::from(1));
        assert!(matches!(
            r.coefficient_d(7),
            Err(Error::IndexOutOfRange { k: 7, max: 6 })
        ));
    }

    #[test]
    fn edge_eval_at_t_zero_is_one() {
        for g in [single_edge(), triangle()] {
            let v = bartholdi_edge_eval(&g, &rational(7, 3), &BigRational::zero());
            assert_eq!(v, BigRational::one());
        }
    }

    #[test]
    fn edge_eval_at_u_zero_matches_ihara() {
        let g = triangle();
        let ihara = ihara_reciprocal(&g);
        for (n, d) in [(1, 2), (-2, 3), (5, 7), (0, 1)] {
            let t = rational(n, d);
            let v = bartholdi_edge_eval(&g, &BigRational::zero(), &t);
            assert_eq!(v, ihara.eval_rational(&t));
        }
    }

    #[test]
    fn edge_eval_triangle_at_one_half() {
        // Independent oracle: det(I - (T + J)/2) by rational elimination.
        let g = triangle();
        let a = ArcSystem::new(&g);
        let t = matrix_t(&a);
        let j = matrix_j(a.m());
        let half = rational(1, 2);
        let oracle = RationalMatrix::from_fn(a.arc_count(), |i, jx| {
            let mut e = BigRational::zero();
            if i == jx {
                e += BigRational::one();
            }
            if t.get(i, jx) {
                e -= &half;
            }
            if j.get(i, jx) {
                e -= &half;
            }
            e
        })
        .determinant();
        assert_eq!(bartholdi_edge_eval(&g, &BigRational::one(), &half), oracle);
    }

    #[test]
    fn vertex_eval_at_t_zero_is_one() {
        let g = triangle();
        for u in [rational(0, 1), rational(3, 4), rational(-5, 2)] {
            assert_eq!(
                bartholdi_vertex_eval(&g, &u, &BigRational::zero()).unwrap(),
                BigRational::one()
            );
        }
    }

    #[test]
    fn vertex_eval_on_path_with_unit_prefactor() {
        // Path on 2 vertices at u = 1, t = 1: exponent m - n = -1 with
        // base 1, then det(I - A) = 0.
        let g = single_edge();
        let v = bartholdi_vertex_eval(&g, &BigRational::one(), &BigRational::one()).unwrap();
        assert_eq!(v, BigRational::zero());
    }

    #[test]
    fn vertex_eval_pole_is_an_error() {
        // Path on 2 vertices at u = 0, t = 1: base = 1 - 1 = 0, exponent -1.
        let g = single_edge();
        assert!(matches!(
            bartholdi_vertex_eval(&g, &BigRational::zero(), &BigRational::one()),
            Err(Error::PrefactorPole { exponent: -1 })
        ));
    }

    #[test]
    fn vertex_and_edge_forms_agree() {
        let g = parse_edge_list("0 1\n1 2\n2 3\n0 3\n0 2").unwrap();
        for (un, ud, tn, td) in [(1, 2), (2, 3), (-1, 3), (3, 1)]
            .iter()
            .zip([(1, 3), (-2, 5), (1, 7), (2, 9)].iter())
            .map(|(&(a, b), &(c, d))| (a, b, c, d))
        {
            let u = rational(un, ud);
            let t = rational(tn, td);
            let eval = evaluate_bartholdi(&g, &u, &t).unwrap();
            assert!(eval.agreement, "u={u} t={t}");
        }
    }

    #[test]
    fn bivariate_slice_matches_reduced_polynomial() {
        // charpoly(T + u0*J) evaluated at v = 0 equals det(T + u0*J)
        // up to the sign (-1)^(2m) = +1, for several integer u0.
        for g in [single_edge(), triangle()] {
            let a = ArcSystem::new(&g);
            let t = matrix_t(&a);
            let j = matrix_j(a.m());
            let reduced = reduced_bartholdi_det(&g);
            for u0 in [-3i64, -1, 0, 2, 5] {
                let m = IntMatrix::from_fn(a.arc_count(), |i, jx| {
                    let mut e = BigInt::zero();
                    if t.get(i, jx) {
                        e += 1;
                    }
                    if j.get(i, jx) {
                        e += u0;
                    }
                    e
                });
                let at_zero = m.charpoly().coeff(0);
                assert_eq!(at_zero, reduced.poly.eval_int(&BigInt::from(u0)));
            }
        }
    }

    #[test]
    fn json_shape_is_stable() {
        let r = reduced_bartholdi_det(&single_edge());
        let json = r.to_json();
        assert_eq!(json["m"], 1);
        assert_eq!(json["method"], "determinant");
        assert_eq!(json["coeffs_ascending"][2], "-1");
        assert_eq!(json["d"]["0"], "-1");
        assert_eq!(json["d"]["1"], "0");
        assert_eq!(json["d"]["2"], "0");
    }
}
