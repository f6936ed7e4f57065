//! Comet-shaped quivers: star graphs with g loops at the center, their
//! Cartan data, canonical dimension vectors, and real/imaginary root
//! classification by reflection descent.

use crate::combinatorics::{MultiPartition, SplitType};

/// A star-shaped graph with `g` loops at the central vertex and legs of the
/// given lengths. Vertex 0 is the center; leg `i` contributes vertices
/// `[i,1], ..., [i,s_i]` numbered consecutively after the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CometQuiver {
    pub g: u32,
    pub leg_lengths: Vec<usize>,
}

/// A vector of integer coordinates over the vertex set of a [`CometQuiver`],
/// center first, then the legs in order, outward along each leg.
pub type DimVector = Vec<i64>;

/// Outcome of root classification, with a reflection word as witness. The
/// word lists the vertices reflected at, in the order applied to the input;
/// applying it in reverse to the final vector recovers the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootClass {
    NotRoot,
    RealRoot {
        word: Vec<usize>,
        simple: usize,
    },
    ImaginaryRoot {
        word: Vec<usize>,
        fundamental: DimVector,
    },
}

impl RootClass {
    pub fn is_root(&self) -> bool {
        !matches!(self, RootClass::NotRoot)
    }

    pub fn is_real(&self) -> bool {
        matches!(self, RootClass::RealRoot { .. })
    }

    pub fn is_imaginary(&self) -> bool {
        matches!(self, RootClass::ImaginaryRoot { .. })
    }
}

impl CometQuiver {
    pub fn vertex_count(&self) -> usize {
        1 + self.leg_lengths.iter().sum::<usize>()
    }

    /// Flat index of leg vertex `[leg, j]` with `1 <= j <= s_leg`.
    pub fn leg_vertex(&self, leg: usize, j: usize) -> usize {
        assert!(j >= 1 && j <= self.leg_lengths[leg]);
        1 + self.leg_lengths[..leg].iter().sum::<usize>() + (j - 1)
    }

    /// Neighbors of a vertex in the underlying star graph.
    fn neighbors(&self, v: usize) -> Vec<usize> {
        if v == 0 {
            return self
                .leg_lengths
                .iter()
                .enumerate()
                .filter(|(_, &s)| s > 0)
                .map(|(leg, _)| self.leg_vertex(leg, 1))
                .collect();
        }
        let mut offset = 1;
        for (leg, &s) in self.leg_lengths.iter().enumerate() {
            if v < offset + s {
                let j = v - offset + 1;
                let mut out = Vec::with_capacity(2);
                out.push(if j == 1 {
                    0
                } else {
                    self.leg_vertex(leg, j - 1)
                });
                if j < s {
                    out.push(self.leg_vertex(leg, j + 1));
                }
                return out;
            }
            offset += s;
        }
        unreachable!("vertex out of range")
    }

    /// Number of loops at a vertex; only the center can carry loops.
    pub fn loops(&self, v: usize) -> u32 {
        if v == 0 {
            self.g
        } else {
            0
        }
    }

    /// A vertex generates a reflection exactly when it carries no loop.
    pub fn is_loopless(&self, v: usize) -> bool {
        self.loops(v) == 0
    }

    /// The Cartan matrix: 2 - 2 loops on the diagonal, minus the edge count
    /// off the diagonal.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0i64; n]; n];
        for v in 0..n {
            c[v][v] = 2 - 2 * self.loops(v) as i64;
            for w in self.neighbors(v) {
                c[v][w] = -1;
            }
        }
        c
    }

    /// The symmetric bilinear form `(v, w) = v^T C w`, evaluated through the
    /// graph structure.
    pub fn bilinear(&self, v: &DimVector, w: &DimVector) -> i64 {
        let n = self.vertex_count();
        assert_eq!(v.len(), n);
        assert_eq!(w.len(), n);
        let mut acc = 0i64;
        for i in 0..n {
            acc += (2 - 2 * self.loops(i) as i64) * v[i] * w[i];
            for j in self.neighbors(i) {
                acc -= v[i] * w[j];
            }
        }
        acc
    }

    /// Pairing of a vector with the simple basis vector at `vertex`.
    pub fn pair_simple(&self, v: &DimVector, vertex: usize) -> i64 {
        let mut acc = (2 - 2 * self.loops(vertex) as i64) * v[vertex];
        for w in self.neighbors(vertex) {
            acc -= v[w];
        }
        acc
    }

    /// Fundamental reflection `s_i(v) = v - (v, e_i) e_i` at a loopless
    /// vertex.
    pub fn reflect(&self, v: &DimVector, vertex: usize) -> DimVector {
        assert!(
            self.is_loopless(vertex),
            "reflection needs a loopless vertex"
        );
        let mut out = v.clone();
        out[vertex] -= self.pair_simple(v, vertex);
        out
    }

    /// True when the support of `v` induces a connected subgraph.
    pub fn support_connected(&self, v: &DimVector) -> bool {
        let support: Vec<usize> = (0..self.vertex_count()).filter(|&i| v[i] != 0).collect();
        if support.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![support[0]];
        seen[support[0]] = true;
        while let Some(x) = stack.pop() {
            for w in self.neighbors(x) {
                if v[w] != 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        support.iter().all(|&i| seen[i])
    }

    /// Membership in the fundamental set of imaginary roots: nonzero,
    /// non-negative, connected support, and non-positive pairing with every
    /// loopless simple vector.
    pub fn in_fundamental_set(&self, v: &DimVector) -> bool {
        if v.iter().all(|&x| x == 0) || v.iter().any(|&x| x < 0) {
            return false;
        }
        if !self.support_connected(v) {
            return false;
        }
        (0..self.vertex_count())
            .filter(|&i| self.is_loopless(i))
            .all(|i| self.pair_simple(v, i) <= 0)
    }

    /// Classifies a nonzero non-negative vector by reflection descent,
    /// choosing the descent vertex with `pick` among the loopless vertices
    /// of positive pairing.
    pub fn classify_root_with(
        &self,
        v: &DimVector,
        mut pick: impl FnMut(&[usize]) -> usize,
    ) -> RootClass {
        assert!(
            v.iter().any(|&x| x != 0),
            "zero vector cannot be classified"
        );
        assert!(v.iter().all(|&x| x >= 0), "positive vectors expected");
        let mut current = v.clone();
        let mut word = Vec::new();
        loop {
            if current.iter().any(|&x| x < 0) {
                return RootClass::NotRoot;
            }
            if let Some(simple) = self.as_simple_loopless(&current) {
                return RootClass::RealRoot { word, simple };
            }
            let descent: Vec<usize> = (0..self.vertex_count())
                .filter(|&i| self.is_loopless(i) && self.pair_simple(&current, i) > 0)
                .collect();
            if descent.is_empty() {
                return if self.support_connected(&current) {
                    RootClass::ImaginaryRoot {
                        word,
                        fundamental: current,
                    }
                } else {
                    RootClass::NotRoot
                };
            }
            let vertex = pick(&descent);
            current = self.reflect(&current, vertex);
            word.push(vertex);
        }
    }

    /// Classifies with the deterministic lowest-index descent.
    pub fn classify_root(&self, v: &DimVector) -> RootClass {
        self.classify_root_with(v, |descent| descent[0])
    }

    fn as_simple_loopless(&self, v: &DimVector) -> Option<usize> {
        let mut simple = None;
        for (i, &x) in v.iter().enumerate() {
            match x {
                0 => {}
                1 if simple.is_none() => simple = Some(i),
                _ => return None,
            }
        }
        simple.filter(|&i| self.is_loopless(i))
    }
}

/// Builds the comet-shaped quiver of a multipartition (legs of length
/// `len(mu^i) - 1`, `g` loops at the center) together with the canonical
/// dimension vector: `n` at the center and `n - mu^i_1 - ... - mu^i_j` at
/// `[i, j]`.
pub fn build_quiver(mu: &MultiPartition, g: u32) -> (CometQuiver, DimVector) {
    assert!(mu.size() >= 1, "nonzero multipartition required");
    let n = mu.size() as i64;
    let leg_lengths: Vec<usize> = mu
        .components()
        .iter()
        .map(|c| c.length().saturating_sub(1))
        .collect();
    let quiver = CometQuiver { g, leg_lengths };
    let mut v = vec![n];
    for comp in mu.components() {
        let mut rem = n;
        for j in 0..comp.length().saturating_sub(1) {
            rem -= comp.part(j) as i64;
            v.push(rem);
        }
    }
    (quiver, v)
}

/// `d_mu = n^2 (2g - 2 + k) - sum (mu^i_j)^2 + 2`, asserted equal to
/// `2 - v^T C v` for the canonical dimension vector.
pub fn d_mu(mu: &MultiPartition, g: u32) -> i64 {
    let n = mu.size() as i64;
    let k = mu.arity() as i64;
    let direct = n * n * (2 * g as i64 - 2 + k) - mu.sum_of_squares() as i64 + 2;
    let (quiver, v) = build_quiver(mu, g);
    let via_form = 2 - quiver.bilinear(&v, &v);
    assert_eq!(direct, via_form, "quadratic invariant routes disagree");
    direct
}

/// `delta(mu) = (2g - 2 + k) n - sum of first parts`.
pub fn delta(mu: &MultiPartition, g: u32) -> i64 {
    let n = mu.size() as i64;
    let k = mu.arity() as i64;
    (2 * g as i64 - 2 + k) * n - mu.first_parts_sum() as i64
}

/// `d` attached to a split type: `sum_i n_i d_{alpha_i}`.
pub fn d_split_type(omega: &SplitType, g: u32) -> i64 {
    omega
        .factors()
        .iter()
        .map(|(alpha, mult)| *mult as i64 * d_mu(alpha, g))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn build_star_shapes() {
        let (q, v) = build_quiver(&mp("1^3|1^3|1^3"), 0);
        assert_eq!(q.leg_lengths, vec![2, 2, 2]);
        assert_eq!(v, vec![3, 2, 1, 2, 1, 2, 1]);
        let (q, v) = build_quiver(&mp("4|4|4"), 0);
        assert_eq!(q.leg_lengths, vec![0, 0, 0]);
        assert_eq!(v, vec![4]);
        let (q, v) = build_quiver(&mp("1^2|1^2|1^2"), 0);
        assert_eq!(q.leg_lengths, vec![1, 1, 1]);
        assert_eq!(v, vec![2, 1, 1, 1]);
    }

    #[test]
    fn cartan_matrix_star() {
        let (q, _) = build_quiver(&mp("1^2|1^2|1^2"), 0);
        let c = q.cartan_matrix();
        assert_eq!(c[0], vec![2, -1, -1, -1]);
        assert_eq!(c[1], vec![-1, 2, 0, 0]);
        // Loops flip the diagonal entry at the center.
        let (q, _) = build_quiver(&mp("1^2|1^2"), 1);
        assert_eq!(q.cartan_matrix()[0][0], 0);
    }

    #[test]
    fn d_mu_values() {
        assert_eq!(d_mu(&mp("1^3|1^3|1^3"), 0), 2);
        assert_eq!(d_mu(&mp("2^3|2^3|2^3"), 0), 2);
        for n in 1..=6u32 {
            let mu = MultiPartition::diagonal(crate::combinatorics::Partition::column(n), 3);
            assert_eq!(d_mu(&mu, 0), ((n - 1) * (n.saturating_sub(2))) as i64);
        }
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(&mp("1^3|1^3|1^3"), 0), 0);
        for n in 1..=7u32 {
            let mu = MultiPartition::diagonal(crate::combinatorics::Partition::column(n), 3);
            assert_eq!(delta(&mu, 0), n as i64 - 3);
        }
        for mu in crate::combinatorics::multipartitions(3, 2) {
            assert!(delta(&mu, 1) >= 0);
        }
    }

    #[test]
    fn fundamental_set_examples() {
        let (q, v) = build_quiver(&mp("1^3|1^3|1^3"), 0);
        assert!(q.in_fundamental_set(&v));
        let (q, v) = build_quiver(&mp("1^2|1^2|1^2"), 0);
        assert!(!q.in_fundamental_set(&v));
        // A loop at the only vertex: e_0 is in the fundamental set.
        let q = CometQuiver {
            g: 1,
            leg_lengths: vec![],
        };
        assert!(q.in_fundamental_set(&vec![1]));
    }

    #[test]
    fn classification_examples() {
        let (q, v) = build_quiver(&mp("1^2|1^2|1^2"), 0);
        assert!(q.classify_root(&v).is_real());
        let (q, v) = build_quiver(&mp("1^3|1^3|1^3"), 0);
        match q.classify_root(&v) {
            RootClass::ImaginaryRoot { word, fundamental } => {
                assert!(word.is_empty());
                assert_eq!(fundamental, v);
            }
            other => panic!("expected imaginary root, got {other:?}"),
        }
        let q = CometQuiver {
            g: 0,
            leg_lengths: vec![],
        };
        assert_eq!(q.classify_root(&vec![2]), RootClass::NotRoot);
        assert!(q.classify_root(&vec![1]).is_real());
    }

    #[test]
    fn reflections_are_involutions_preserving_form() {
        let (q, v) = build_quiver(&mp("2,1|1^3|1^3"), 0);
        let norm = q.bilinear(&v, &v);
        for vertex in 0..q.vertex_count() {
            if !q.is_loopless(vertex) {
                continue;
            }
            let w = q.reflect(&v, vertex);
            assert_eq!(q.reflect(&w, vertex), v);
            assert_eq!(q.bilinear(&w, &w), norm);
        }
    }

    #[test]
    fn witness_replay_recovers_input() {
        for s in ["2,1|1^3|1^3", "1^4|1^4|1^4", "2,2|2,2|2,2"] {
            let mu = mp(s);
            let (q, v) = build_quiver(&mu, 0);
            match q.classify_root(&v) {
                RootClass::RealRoot { word, simple } => {
                    let mut x = vec![0i64; q.vertex_count()];
                    x[simple] = 1;
                    for &vertex in word.iter().rev() {
                        x = q.reflect(&x, vertex);
                    }
                    assert_eq!(x, v);
                }
                RootClass::ImaginaryRoot { word, fundamental } => {
                    let mut x = fundamental.clone();
                    for &vertex in word.iter().rev() {
                        x = q.reflect(&x, vertex);
                    }
                    assert_eq!(x, v);
                }
                RootClass::NotRoot => {}
            }
        }
    }

    #[test]
    fn descent_choice_does_not_change_class() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=4u32 {
            for mu in crate::combinatorics::multipartitions(n, 3) {
                for g in 0..=1u32 {
                    let (q, v) = build_quiver(&mu, g);
                    let base = q.classify_root(&v);
                    for _ in 0..3 {
                        let random = q.classify_root_with(&v, |descent| {
                            descent[rng.gen_range(0..descent.len())]
                        });
                        assert_eq!(
                            std::mem::discriminant(&base),
                            std::mem::discriminant(&random),
                            "classification changed for {mu} g={g}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn real_roots_have_zero_d_and_fundamental_even() {
        for n in 1..=5u32 {
            for mu in crate::combinatorics::multipartitions(n, 3) {
                for g in 0..=1u32 {
                    let (q, v) = build_quiver(&mu, g);
                    let d = d_mu(&mu, g);
                    match q.classify_root(&v) {
                        RootClass::RealRoot { .. } => assert_eq!(d, 0),
                        RootClass::ImaginaryRoot { .. } => {
                            if q.in_fundamental_set(&v) {
                                assert!(d >= 2 && d % 2 == 0);
                            }
                        }
                        RootClass::NotRoot => {}
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_set_matches_delta_criterion() {
        for n in 1..=5u32 {
            for k in 1..=3usize {
                for mu in crate::combinatorics::multipartitions(n, k) {
                    for g in 0..=1u32 {
                        let (q, v) = build_quiver(&mu, g);
                        assert_eq!(
                            q.in_fundamental_set(&v),
                            delta(&mu, g) >= 0,
                            "mu={mu} k={k} g={g}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_strictly_decreases_d() {
        for n in 1..=6u32 {
            let all = crate::combinatorics::multipartitions(n, 3);
            for a in &all {
                for b in &all {
                    if a != b && a.dominance_leq(b).unwrap() {
                        assert!(d_mu(b, 0) < d_mu(a, 0), "{a} vs {b}");
                        assert!(d_mu(b, 1) < d_mu(a, 1), "{a} vs {b} at g=1");
                    }
                }
            }
        }
    }
}
