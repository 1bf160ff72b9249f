//! Brute-force dense complex matrices for cross-checking bit-level operator
//! algebra in tests.
//!
//! Everything here is built from first principles: explicit 2x2 gate blocks,
//! Kronecker products, and the textbook row-times-column product. Nothing in
//! this crate shares code with the implementations it is used to check.

use num_complex::Complex64;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// i^k for k taken mod 4.
pub fn phase_factor(k: u8) -> Complex64 {
    match k % 4 {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

/// A dense square complex matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    pub dim: usize,
    pub data: Vec<Complex64>,
}

pub const ID2: [Complex64; 4] = [ONE, ZERO, ZERO, ONE];
pub const X2: [Complex64; 4] = [ZERO, ONE, ONE, ZERO];
pub const Y2: [Complex64; 4] = [ZERO, Complex64::new(0.0, -1.0), I, ZERO];
pub const Z2: [Complex64; 4] = [ONE, ZERO, ZERO, Complex64::new(-1.0, 0.0)];
pub const PROJ0: [Complex64; 4] = [ONE, ZERO, ZERO, ZERO];
pub const PROJ1: [Complex64; 4] = [ZERO, ZERO, ZERO, ONE];

pub fn h2() -> [Complex64; 4] {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [s, s, s, -s]
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.data[k * dim + k] = ONE;
        }
        m
    }

    pub fn from_2x2(block: [Complex64; 4]) -> Self {
        Self { dim: 2, data: block.to_vec() }
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.dim + c] = v;
    }

    /// Kronecker product; `self` becomes the most significant factor.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let d = self.dim * other.dim;
        let mut out = CMatrix::zeros(d);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                if a == ZERO {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        let b = other.get(r2, c2);
                        if b != ZERO {
                            out.set(r1 * other.dim + r2, c1 * other.dim + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Row-times-column product, skipping zero entries of `self`.
    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let d = self.dim;
        let mut out = CMatrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == ZERO {
                    continue;
                }
                for c in 0..d {
                    out.data[r * d + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> CMatrix {
        let d = self.dim;
        let mut out = CMatrix::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix { dim: self.dim, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim, "add dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim, "sub dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "compare dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len(), "mul_vec dimension mismatch");
        let d = self.dim;
        let mut out = vec![ZERO; d];
        for r in 0..d {
            let mut acc = ZERO;
            for c in 0..d {
                let a = self.get(r, c);
                if a != ZERO {
                    acc += a * v[c];
                }
            }
            out[r] = acc;
        }
        out
    }
}

/// Tensor product over `n` qubits with the given 2x2 blocks placed at their
/// 1-indexed qubit positions and identity everywhere else. Qubit 1 is the
/// most significant (leftmost) factor.
pub fn embed(n: usize, placements: &[(usize, [Complex64; 4])]) -> CMatrix {
    let mut out = CMatrix::identity(1);
    for qubit in 1..=n {
        let block = placements
            .iter()
            .find(|(q, _)| *q == qubit)
            .map(|(_, b)| *b)
            .unwrap_or(ID2);
        out = out.kron(&CMatrix::from_2x2(block));
    }
    out
}

/// Controlled-Z on qubits `i`, `j` of an `n`-qubit register, built from its
/// definition |0><0| (x) I + |1><1| (x) Z.
pub fn cz_matrix(n: usize, i: usize, j: usize) -> CMatrix {
    assert!(i != j, "cz_matrix needs distinct qubits");
    embed(n, &[(i, PROJ0)]).add(&embed(n, &[(i, PROJ1), (j, Z2)]))
}

/// Hadamard on qubit `i` of an `n`-qubit register.
pub fn h_matrix(n: usize, i: usize) -> CMatrix {
    embed(n, &[(i, h2())])
}

/// The matrix of i^phase_exp * prod_k X_k^{x_k} Z_k^{z_k}, with the X factor
/// ordered before the Z factor on each site.
pub fn pauli_matrix(n: usize, phase_exp: u8, x_bits: &[bool], z_bits: &[bool]) -> CMatrix {
    assert_eq!(x_bits.len(), n);
    assert_eq!(z_bits.len(), n);
    let mut out = CMatrix::identity(1);
    for k in 0..n {
        let mut site = CMatrix::identity(2);
        if x_bits[k] {
            site = site.matmul(&CMatrix::from_2x2(X2));
        }
        if z_bits[k] {
            site = site.matmul(&CMatrix::from_2x2(Z2));
        }
        out = out.kron(&site);
    }
    out.scale(phase_factor(phase_exp))
}
