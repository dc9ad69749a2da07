//! Graded radial meshes on [0,1] and nodal fields vanishing at and beyond
//! the boundary.
//!
//! Nodes are `r_i = (i/M)^g`; each node owns the Voronoi cell between the
//! midpoints of its neighboring intervals, so the cell edges telescope and
//! the volume weights sum to the exact ball volume.

use crate::math;
use crate::special;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum MeshError {
    /// Fewer intervals than the operation can support.
    MeshTooCoarse { m: usize, required: usize },
    /// Two objects built on different meshes were combined.
    MeshMismatch,
    /// Invalid construction parameters.
    BadParameters(&'static str),
}

impl fmt::Display for MeshError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeshError::MeshTooCoarse { m, required } => {
                write!(f, "mesh too coarse: M = {m}, need at least {required}")
            }
            MeshError::MeshMismatch => write!(f, "objects built on different meshes"),
            MeshError::BadParameters(msg) => write!(f, "bad mesh parameters: {msg}"),
        }
    }
}

/// Radial mesh: `M + 1` nodes `0 = r_0 < r_1 < ... < r_M = 1` with volume
/// quadrature weights.
#[derive(Debug)]
pub struct RadialMesh {
    n: u32,
    grading: f64,
    nodes: Vec<f64>,
    /// Cell edges, `len = M + 2`; cell of node i is `[edges[i], edges[i+1]]`.
    edges: Vec<f64>,
    /// 1-D weights `W_i = ∫_cell r^{n-1} dr`.
    w1: Vec<f64>,
    /// Volume weights `w_i = |S^{n-1}| W_i`.
    w: Vec<f64>,
    hash: u64,
}

impl RadialMesh {
    /// Graded mesh with `r_i = (i/M)^g`; `g = 1` is uniform, `g > 1`
    /// clusters nodes near the origin.
    pub fn graded(n: u32, m: usize, grading: f64) -> Result<Arc<Self>, MeshError> {
        if n < 2 {
            return Err(MeshError::BadParameters("dimension must be >= 2"));
        }
        if m < 2 {
            return Err(MeshError::MeshTooCoarse { m, required: 2 });
        }
        if !(grading >= 1.0) || !grading.is_finite() {
            return Err(MeshError::BadParameters("grading must be >= 1"));
        }
        let nodes: Vec<f64> = (0..=m)
            .map(|i| math::pow(i as f64 / m as f64, grading))
            .collect();
        let mut edges = Vec::with_capacity(m + 2);
        edges.push(0.0);
        for i in 1..=m {
            edges.push(0.5 * (nodes[i - 1] + nodes[i]));
        }
        edges.push(1.0);
        let area = special::sphere_area(n);
        let nf = n as f64;
        let mut w1 = Vec::with_capacity(m + 1);
        let mut w = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let wi = (math::pow(edges[i + 1], nf) - math::pow(edges[i], nf)) / nf;
            w1.push(wi);
            w.push(area * wi);
        }
        let mut mesh = RadialMesh {
            n,
            grading,
            nodes,
            edges,
            w1,
            w,
            hash: 0,
        };
        mesh.hash = mesh.compute_hash();
        Ok(Arc::new(mesh))
    }

    pub fn uniform(n: u32, m: usize) -> Result<Arc<Self>, MeshError> {
        Self::graded(n, m, 1.0)
    }

    fn compute_hash(&self) -> u64 {
        // FNV-1a over the defining data; used to key kernel caches and
        // detect mesh mismatches across (de)serialization.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        eat(&self.n.to_le_bytes());
        eat(&(self.nodes.len() as u64).to_le_bytes());
        eat(&self.grading.to_bits().to_le_bytes());
        for r in &self.nodes {
            eat(&r.to_bits().to_le_bytes());
        }
        h
    }

    /// Number of intervals `M`.
    #[inline]
    pub fn m(&self) -> usize {
        self.nodes.len() - 1
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn grading(&self) -> f64 {
        self.grading
    }

    #[inline]
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    /// Cell of node `i` as `(left_edge, right_edge)`.
    #[inline]
    pub fn cell(&self, i: usize) -> (f64, f64) {
        (self.edges[i], self.edges[i + 1])
    }

    /// 1-D quadrature weights `∫_cell r^{n-1} dr`.
    #[inline]
    pub fn weights_1d(&self) -> &[f64] {
        &self.w1
    }

    /// Volume quadrature weights `|S^{n-1}| ∫_cell r^{n-1} dr`.
    #[inline]
    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    #[inline]
    pub fn hash(&self) -> u64 {
        self.hash
    }

    /// Elements (intervals between consecutive nodes); element `a` is
    /// `[r_a, r_{a+1}]`, `a = 0..M-1`.
    #[inline]
    pub fn element(&self, a: usize) -> (f64, f64) {
        (self.nodes[a], self.nodes[a + 1])
    }

    pub fn same_mesh(&self, other: &RadialMesh) -> bool {
        self.hash == other.hash
    }

    /// Volume-weighted inner product of nodal vectors.
    pub fn dot(&self, a: &[f64], b: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..a.len() {
            acc += self.w[i] * a[i] * b[i];
        }
        acc
    }

    /// `(Σ w_i |v_i|^p)^{1/p}`.
    pub fn lp_norm(&self, v: &[f64], p: f64) -> f64 {
        let mut acc = 0.0;
        for i in 0..v.len() {
            acc += self.w[i] * math::abs_pow(v[i], p);
        }
        math::pow(acc, 1.0 / p)
    }
}

/// Nodal values of a radial function with `u(r_M) = 0` enforced and `u ≡ 0`
/// beyond `r = 1` implicit.
#[derive(Debug, Clone)]
pub struct DiscreteField {
    mesh: Arc<RadialMesh>,
    values: Vec<f64>,
}

impl DiscreteField {
    /// Wraps nodal values; the boundary node is forced to zero.
    pub fn new(mesh: Arc<RadialMesh>, mut values: Vec<f64>) -> Result<Self, MeshError> {
        if values.len() != mesh.nodes().len() {
            return Err(MeshError::BadParameters("value count != node count"));
        }
        *values.last_mut().unwrap() = 0.0;
        Ok(DiscreteField { mesh, values })
    }

    /// Wraps nodal values without touching the boundary node. Intended for
    /// quadrature cross-checks on fields that ignore the zero-trace
    /// identification; the energy routines accept it verbatim.
    pub fn from_values_unchecked(mesh: Arc<RadialMesh>, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), mesh.nodes().len());
        DiscreteField { mesh, values }
    }

    pub fn zeros(mesh: Arc<RadialMesh>) -> Self {
        let len = mesh.nodes().len();
        DiscreteField {
            mesh,
            values: alloc::vec![0.0; len],
        }
    }

    /// Samples `f(r)` at the nodes (boundary node zeroed).
    pub fn from_profile<F: Fn(f64) -> f64>(mesh: Arc<RadialMesh>, f: F) -> Self {
        let mut values: Vec<f64> = mesh.nodes().iter().map(|&r| f(r)).collect();
        *values.last_mut().unwrap() = 0.0;
        DiscreteField { mesh, values }
    }

    #[inline]
    pub fn mesh(&self) -> &Arc<RadialMesh> {
        &self.mesh
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Mutable nodal values; callers must re-zero the boundary node if they
    /// touch it (the solver does after every update).
    #[inline]
    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    #[inline]
    pub fn enforce_boundary(&mut self) {
        *self.values.last_mut().unwrap() = 0.0;
    }

    pub fn scale(&mut self, t: f64) {
        for v in &mut self.values {
            *v *= t;
        }
    }

    pub fn scaled(&self, t: f64) -> Self {
        let mut out = self.clone();
        out.scale(t);
        out
    }

    pub fn abs(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.values {
            *v = v.abs();
        }
        out
    }

    pub fn lp_norm(&self, p: f64) -> f64 {
        self.mesh.lp_norm(&self.values, p)
    }

    /// Monotone (Fritsch-Carlson) cubic interpolant of the nodal values,
    /// zero beyond `r = 1`.
    pub fn interpolant(&self) -> MonotoneCubic {
        MonotoneCubic::new(self.mesh.nodes(), &self.values)
    }
}

/// Shape-preserving piecewise-cubic Hermite interpolant (PCHIP slopes).
pub struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(x: &[f64], y: &[f64]) -> Self {
        let n = x.len();
        assert!(n >= 2 && y.len() == n);
        let mut h = Vec::with_capacity(n - 1);
        let mut delta = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let hi = x[i + 1] - x[i];
            h.push(hi);
            delta.push((y[i + 1] - y[i]) / hi);
        }
        let mut d = alloc::vec![0.0; n];
        for i in 1..n - 1 {
            if delta[i - 1] * delta[i] > 0.0 {
                let w1 = 2.0 * h[i] + h[i - 1];
                let w2 = h[i] + 2.0 * h[i - 1];
                d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        d[0] = Self::edge_slope(h[0], h.get(1).copied().unwrap_or(h[0]), delta[0], *delta.get(1).unwrap_or(&delta[0]));
        d[n - 1] = Self::edge_slope(
            h[n - 2],
            if n >= 3 { h[n - 3] } else { h[n - 2] },
            delta[n - 2],
            if n >= 3 { delta[n - 3] } else { delta[n - 2] },
        );
        MonotoneCubic {
            x: x.to_vec(),
            y: y.to_vec(),
            d,
        }
    }

    fn edge_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
        let mut d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if d * d0 <= 0.0 {
            d = 0.0;
        } else if d0 * d1 <= 0.0 && d.abs() > 3.0 * d0.abs() {
            d = 3.0 * d0;
        }
        d
    }

    /// Evaluates the interpolant; clamps to zero outside the node range on
    /// the right (zero extension) and to the first value on the left.
    pub fn eval(&self, r: f64) -> f64 {
        let n = self.x.len();
        if r <= self.x[0] {
            return self.y[0];
        }
        if r >= self.x[n - 1] {
            return if r > self.x[n - 1] { 0.0 } else { self.y[n - 1] };
        }
        let mut lo = 0;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.x[mid] <= r {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let h = self.x[lo + 1] - self.x[lo];
        let t = (r - self.x[lo]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.y[lo] + h * h10 * self.d[lo] + h01 * self.y[lo + 1] + h * h11 * self.d[lo + 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special;

    #[test]
    fn weights_sum_to_ball_volume() {
        for (n, m, g) in [(3u32, 64usize, 2.0f64), (2, 33, 1.0), (4, 128, 1.5)] {
            let mesh = RadialMesh::graded(n, m, g).unwrap();
            let total: f64 = mesh.weights().iter().sum();
            let vol = special::ball_volume(n);
            assert!(
                ((total - vol) / vol).abs() < 1e-10,
                "n={n} m={m} g={g}: {total} vs {vol}"
            );
            for w in mesh.weights() {
                assert!(*w > 0.0);
            }
            let nodes = mesh.nodes();
            for i in 1..nodes.len() {
                assert!(nodes[i] > nodes[i - 1]);
            }
        }
    }

    #[test]
    fn graded_mesh_clusters_at_origin() {
        let mesh = RadialMesh::graded(3, 16, 2.0).unwrap();
        let nodes = mesh.nodes();
        assert!(nodes[1] - nodes[0] < nodes[16] - nodes[15]);
        assert_eq!(nodes[0], 0.0);
        assert_eq!(nodes[16], 1.0);
    }

    #[test]
    fn boundary_node_zeroed() {
        let mesh = RadialMesh::uniform(3, 8).unwrap();
        let f = DiscreteField::new(mesh.clone(), alloc::vec![1.0; 9]).unwrap();
        assert_eq!(f.values()[8], 0.0);
        let g = DiscreteField::from_profile(mesh, |r| 1.0 - r * r);
        assert_eq!(*g.values().last().unwrap(), 0.0);
    }

    #[test]
    fn mesh_hash_distinguishes() {
        let a = RadialMesh::graded(3, 32, 2.0).unwrap();
        let b = RadialMesh::graded(3, 32, 1.0).unwrap();
        let c = RadialMesh::graded(3, 32, 2.0).unwrap();
        assert_ne!(a.hash(), b.hash());
        assert_eq!(a.hash(), c.hash());
        assert!(a.same_mesh(&c));
    }

    #[test]
    fn pchip_reproduces_monotone_data() {
        let mesh = RadialMesh::uniform(3, 32).unwrap();
        let f = DiscreteField::from_profile(mesh, |r| 1.0 - r * r);
        let interp = f.interpolant();
        for k in 0..100 {
            let r = k as f64 / 99.0;
            let err = (interp.eval(r) - (1.0 - r * r)).abs();
            // boundary node is clamped to zero, so compare away from r=1
            if r < 0.95 {
                assert!(err < 5e-3, "r={r} err={err}");
            }
        }
        // zero extension
        assert_eq!(interp.eval(1.5), 0.0);
    }

    #[test]
    fn too_coarse_rejected() {
        assert!(matches!(
            RadialMesh::graded(3, 1, 1.0),
            Err(MeshError::MeshTooCoarse { .. })
        ));
        assert!(RadialMesh::graded(3, 2, 1.0).is_ok());
    }
}
