//! Symmetric Gauss quadrature on triangles and Gauss–Legendre rules on edges.
//!
//! Triangle rules are stated in barycentric coordinates with weights summing
//! to one, so `|K| * sum(w_q f(x_q))` integrates `f` over a physical triangle.
//! Edge rules live on [-1, 1] with weights summing to two, so
//! `(|E|/2) * sum(w_q f(x(s_q)))` integrates over a physical edge.

/// A quadrature rule on the reference triangle, exact for polynomials up to
/// `degree`.
#[derive(Debug, Clone)]
pub struct TriangleRule {
    pub degree: usize,
    /// Barycentric coordinates (l0, l1, l2) of each node.
    pub points: Vec<[f64; 3]>,
    /// Weights, summing to 1.
    pub weights: Vec<f64>,
}

/// A Gauss–Legendre rule on [-1, 1], exact for polynomials up to `degree`.
#[derive(Debug, Clone)]
pub struct EdgeRule {
    pub degree: usize,
    pub points: Vec<f64>,
    /// Weights, summing to 2.
    pub weights: Vec<f64>,
}

fn orbit1(points: &mut Vec<[f64; 3]>, weights: &mut Vec<f64>, w: f64) {
    let t = 1.0 / 3.0;
    points.push([t, t, t]);
    weights.push(w);
}

// Orbit of (a, b, b): the three cyclic placements of the odd coordinate.
fn orbit3(points: &mut Vec<[f64; 3]>, weights: &mut Vec<f64>, a: f64, w: f64) {
    let b = 0.5 * (1.0 - a);
    points.push([a, b, b]);
    points.push([b, a, b]);
    points.push([b, b, a]);
    for _ in 0..3 {
        weights.push(w);
    }
}

// Orbit of (a, b, c) with all coordinates distinct: all six permutations.
fn orbit6(points: &mut Vec<[f64; 3]>, weights: &mut Vec<f64>, a: f64, b: f64, w: f64) {
    let c = 1.0 - a - b;
    for p in [
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ] {
        points.push(p);
        weights.push(w);
    }
}

fn triangle_rule_degree2() -> TriangleRule {
    let mut points = Vec::new();
    let mut weights = Vec::new();
    orbit3(&mut points, &mut weights, 2.0 / 3.0, 1.0 / 3.0);
    TriangleRule {
        degree: 2,
        points,
        weights,
    }
}

fn triangle_rule_degree4() -> TriangleRule {
    let mut points = Vec::new();
    let mut weights = Vec::new();
    orbit3(
        &mut points,
        &mut weights,
        0.816_847_572_980_459,
        0.109_951_743_655_322,
    );
    orbit3(
        &mut points,
        &mut weights,
        0.108_103_018_168_070,
        0.223_381_589_678_011,
    );
    TriangleRule {
        degree: 4,
        points,
        weights,
    }
}

fn triangle_rule_degree6() -> TriangleRule {
    let mut points = Vec::new();
    let mut weights = Vec::new();
    orbit3(
        &mut points,
        &mut weights,
        0.873_821_971_016_996,
        0.050_844_906_370_207,
    );
    orbit3(
        &mut points,
        &mut weights,
        0.501_426_509_658_179,
        0.116_786_275_726_379,
    );
    orbit6(
        &mut points,
        &mut weights,
        0.636_502_499_121_399,
        0.310_352_451_033_785,
        0.082_851_075_618_374,
    );
    TriangleRule {
        degree: 6,
        points,
        weights,
    }
}

// Collapsed (Duffy) product of two 5-point Gauss–Legendre rules: with
// x = u(1-v), y = v the Jacobian factor (1-v) raises the v-degree of a
// total-degree-8 integrand to 9, which 5 points integrate exactly.
fn triangle_rule_degree8() -> TriangleRule {
    let gl = edge_rule(9);
    let mut points = Vec::new();
    let mut weights = Vec::new();
    for (su, wu) in gl.points.iter().zip(&gl.weights) {
        for (sv, wv) in gl.points.iter().zip(&gl.weights) {
            let u = 0.5 * (su + 1.0);
            let v = 0.5 * (sv + 1.0);
            let x = u * (1.0 - v);
            let y = v;
            points.push([1.0 - x - y, x, y]);
            // Quarter from the two [-1,1] -> [0,1] maps, doubled for the
            // weights-sum-to-one convention on the triangle.
            weights.push(0.5 * wu * wv * (1.0 - v));
        }
    }
    TriangleRule {
        degree: 8,
        points,
        weights,
    }
}

/// Smallest stocked triangle rule exact for polynomials of total degree
/// `degree` (supported up to 8).
///
/// Panics on degrees above 8; nothing in the crate integrates past that.
pub fn triangle_rule(degree: usize) -> TriangleRule {
    match degree {
        0..=2 => triangle_rule_degree2(),
        3 | 4 => triangle_rule_degree4(),
        5 | 6 => triangle_rule_degree6(),
        7 | 8 => triangle_rule_degree8(),
        d => panic!("no stocked triangle quadrature rule of degree {d}"),
    }
}

/// Gauss–Legendre rule on [-1, 1] exact for polynomials of degree `degree`
/// (n points are exact up to degree 2n-1; supported up to 9).
pub fn edge_rule(degree: usize) -> EdgeRule {
    let (points, weights): (Vec<f64>, Vec<f64>) = match degree {
        0 | 1 => (vec![0.0], vec![2.0]),
        2 | 3 => {
            let p = 1.0 / 3f64.sqrt();
            (vec![-p, p], vec![1.0, 1.0])
        }
        4 | 5 => {
            let p = (3.0f64 / 5.0).sqrt();
            (vec![-p, 0.0, p], vec![5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0])
        }
        6 | 7 => {
            let p1 = 0.339_981_043_584_856_3;
            let p2 = 0.861_136_311_594_052_6;
            let w1 = 0.652_145_154_862_546_1;
            let w2 = 0.347_854_845_137_453_9;
            (vec![-p2, -p1, p1, p2], vec![w2, w1, w1, w2])
        }
        8 | 9 => {
            let p1 = 0.538_469_310_105_683_1;
            let p2 = 0.906_179_845_938_664_0;
            let w0 = 0.568_888_888_888_888_9;
            let w1 = 0.478_628_670_499_366_5;
            let w2 = 0.236_926_885_056_189_1;
            (vec![-p2, -p1, 0.0, p1, p2], vec![w2, w1, w0, w1, w2])
        }
        d => panic!("no stocked edge quadrature rule of degree {d}"),
    };
    EdgeRule {
        degree,
        points,
        weights,
    }
}

/// Legendre polynomial P_k evaluated at `s` (three-term recurrence).
pub fn legendre(k: usize, s: f64) -> f64 {
    match k {
        0 => 1.0,
        1 => s,
        _ => {
            let mut pm = 1.0;
            let mut p = s;
            for n in 1..k {
                let next = ((2 * n + 1) as f64 * s * p - n as f64 * pm) / (n + 1) as f64;
                pm = p;
                p = next;
            }
            p
        }
    }
}
