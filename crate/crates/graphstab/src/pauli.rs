//! Exact n-qubit Pauli strings in symplectic (x, z) bitmask form with a
//! phase exponent, plus the stabilizer generators attached to a graph.
//!
//! Representation: a string is i^phase_exp times the ordered product
//! X^x Z^z on each qubit, qubit i mapping to mask bit i-1. A qubit with both
//! bits set therefore denotes X*Z = -iY, and the Hermitian Y contributes one
//! extra factor of i to the phase exponent (Y = i X Z). Equality is plain
//! field equality since every operation returns this canonical form.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Mask width; qubit counts beyond this are rejected up front.
pub const MAX_QUBITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    phase_exp: u8,
    x_mask: u64,
    z_mask: u64,
}

fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Capacity { what: "Pauli string qubits", limit: MAX_QUBITS, requested: n });
    }
    Ok(())
}

impl PauliString {
    pub fn identity(n: usize) -> Result<PauliString> {
        check_qubit_count(n)?;
        Ok(PauliString { n, phase_exp: 0, x_mask: 0, z_mask: 0 })
    }

    /// Builds directly from the canonical fields.
    pub fn from_parts(n: usize, phase_exp: u8, x_mask: u64, z_mask: u64) -> Result<PauliString> {
        check_qubit_count(n)?;
        let valid = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if x_mask & !valid != 0 || z_mask & !valid != 0 {
            return Err(Error::Domain { reason: format!("mask bits exceed {n} qubits") });
        }
        Ok(PauliString { n, phase_exp: phase_exp % 4, x_mask, z_mask })
    }

    pub fn x(n: usize, i: VertexId) -> Result<PauliString> {
        Self::single(n, i, true, false, 0)
    }

    pub fn z(n: usize, i: VertexId) -> Result<PauliString> {
        Self::single(n, i, false, true, 0)
    }

    pub fn y(n: usize, i: VertexId) -> Result<PauliString> {
        Self::single(n, i, true, true, 1)
    }

    fn single(n: usize, i: VertexId, x: bool, z: bool, phase: u8) -> Result<PauliString> {
        check_qubit_count(n)?;
        check_index(n, i)?;
        let bit = 1u64 << (i - 1);
        Ok(PauliString {
            n,
            phase_exp: phase,
            x_mask: if x { bit } else { 0 },
            z_mask: if z { bit } else { 0 },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn x_mask(&self) -> u64 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u64 {
        self.z_mask
    }

    /// Qubits on which the string acts nontrivially.
    pub fn support_mask(&self) -> u64 {
        self.x_mask | self.z_mask
    }

    pub fn is_identity_op(&self) -> bool {
        self.x_mask == 0 && self.z_mask == 0 && self.phase_exp == 0
    }

    /// Hermitian iff the phase exponent and the Y-site count agree mod 2.
    pub fn is_hermitian(&self) -> bool {
        (self.phase_exp as u32 + (self.x_mask & self.z_mask).count_ones()) % 2 == 0
    }

    /// Exact operator product with accumulated phase: moving the left
    /// operand's Z block past the right operand's X block costs a sign per
    /// overlapping site.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let swaps = (self.z_mask & other.x_mask).count_ones() as u8;
        Ok(PauliString {
            n: self.n,
            phase_exp: (self.phase_exp + other.phase_exp + 2 * swaps) % 4,
            x_mask: self.x_mask ^ other.x_mask,
            z_mask: self.z_mask ^ other.z_mask,
        })
    }

    /// True iff the symplectic form is even.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let form = (self.x_mask & other.z_mask).count_ones()
            + (self.z_mask & other.x_mask).count_ones();
        Ok(form % 2 == 0)
    }

    /// Conjugation by CZ on qubits `i`, `j`: X_i picks up Z_j and vice
    /// versa, Z factors are untouched, and reordering the new Z factors past
    /// the existing X block costs a sign exactly when both X bits are set.
    pub fn cz_conjugate(&self, i: VertexId, j: VertexId) -> Result<PauliString> {
        if i == j {
            return Err(Error::DuplicateQubit { q: i });
        }
        check_index(self.n, i)?;
        check_index(self.n, j)?;
        let bi = 1u64 << (i - 1);
        let bj = 1u64 << (j - 1);
        let xi = self.x_mask & bi != 0;
        let xj = self.x_mask & bj != 0;
        let mut out = *self;
        if xi {
            out.z_mask ^= bj;
        }
        if xj {
            out.z_mask ^= bi;
        }
        if xi && xj {
            out.phase_exp = (out.phase_exp + 2) % 4;
        }
        Ok(out)
    }

    /// Conjugation by Hadamard on qubit `i`: swaps the X and Z bits; a Y
    /// site flips sign.
    pub fn h_conjugate(&self, i: VertexId) -> Result<PauliString> {
        check_index(self.n, i)?;
        let bit = 1u64 << (i - 1);
        let mut out = *self;
        let x = self.x_mask & bit != 0;
        let z = self.z_mask & bit != 0;
        out.x_mask = (self.x_mask & !bit) | if z { bit } else { 0 };
        out.z_mask = (self.z_mask & !bit) | if x { bit } else { 0 };
        if x && z {
            out.phase_exp = (out.phase_exp + 2) % 4;
        }
        Ok(out)
    }

    /// The sign-and-letter form, e.g. `+X1Z2Z3`, `-Y1Y2`, `-iY1`. The
    /// displayed prefactor folds the -i per Y site into the phase exponent.
    pub fn render(&self) -> String {
        let y_sites = (self.x_mask & self.z_mask).count_ones() as i32;
        let shown = (self.phase_exp as i32 - y_sites).rem_euclid(4);
        let mut out = String::from(match shown {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        });
        let mut any = false;
        for q in 1..=self.n {
            let bit = 1u64 << (q - 1);
            let letter = match (self.x_mask & bit != 0, self.z_mask & bit != 0) {
                (false, false) => continue,
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            out.push(letter);
            out.push_str(&q.to_string());
            any = true;
        }
        if !any {
            out.push('I');
        }
        out
    }

    /// Parses the `render` format back into a string on `n` qubits.
    pub fn parse(text: &str, n: usize) -> Result<PauliString> {
        check_qubit_count(n)?;
        let s = text.trim();
        let bad = |reason: String| Error::PauliFormat { reason };
        let (sign, rest) = if let Some(r) = s.strip_prefix("+i").or_else(|| s.strip_prefix("i")) {
            (1i32, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else {
            (0, s)
        };
        if rest.is_empty() {
            return Err(bad("missing operator letters".into()));
        }
        let mut x_mask = 0u64;
        let mut z_mask = 0u64;
        let mut y_sites = 0i32;
        let mut seen = 0u64;
        let mut chars = rest.chars().peekable();
        while let Some(c) = chars.next() {
            if c == 'I' {
                // bare identity, optionally subscripted
                while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    chars.next();
                }
                continue;
            }
            if !matches!(c, 'X' | 'Y' | 'Z') {
                return Err(bad(format!("unexpected character {c:?}")));
            }
            let mut digits = String::new();
            while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                digits.push(chars.next().unwrap());
            }
            if digits.is_empty() {
                return Err(bad(format!("operator {c} is missing its qubit index")));
            }
            let q: usize = digits.parse().map_err(|_| bad(format!("bad qubit index {digits:?}")))?;
            if q < 1 || q > n {
                return Err(bad(format!("qubit {q} out of range 1..={n}")));
            }
            let bit = 1u64 << (q - 1);
            if seen & bit != 0 {
                return Err(bad(format!("qubit {q} appears twice")));
            }
            seen |= bit;
            match c {
                'X' => x_mask |= bit,
                'Z' => z_mask |= bit,
                'Y' => {
                    x_mask |= bit;
                    z_mask |= bit;
                    y_sites += 1;
                }
                _ => unreachable!(),
            }
        }
        let phase_exp = (sign + y_sites).rem_euclid(4) as u8;
        PauliString::from_parts(n, phase_exp, x_mask, z_mask)
    }

    /// JSON form `{phase_exp, x_mask, z_mask, n}` with masks as hex strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "phase_exp": self.phase_exp,
            "x_mask": format!("0x{:x}", self.x_mask),
            "z_mask": format!("0x{:x}", self.z_mask),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<PauliString> {
        let bad = |reason: &str| Error::JsonFormat { reason: reason.into() };
        let n = value["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let phase_exp = value["phase_exp"].as_u64().ok_or_else(|| bad("missing phase_exp"))? as u8;
        let parse_mask = |key: &str| -> Result<u64> {
            let text = value[key].as_str().ok_or_else(|| bad("mask must be a hex string"))?;
            let digits = text.strip_prefix("0x").unwrap_or(text);
            u64::from_str_radix(digits, 16)
                .map_err(|_| Error::JsonFormat { reason: format!("bad mask {text:?}") })
        };
        PauliString::from_parts(n, phase_exp, parse_mask("x_mask")?, parse_mask("z_mask")?)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn check_index(n: usize, i: VertexId) -> Result<()> {
    if i < 1 || i > n {
        return Err(Error::VertexOutOfRange { v: i, n });
    }
    Ok(())
}

/// The cluster operator K_i = X_i prod_{j in N(i)} Z_j of a graph vertex.
pub fn cluster_operator(g: &Graph, i: VertexId) -> Result<PauliString> {
    check_qubit_count(g.n())?;
    let neighbors = g.neighborhood(i)?;
    let mut z_mask = 0u64;
    for &j in &neighbors.neighbors {
        z_mask |= 1 << (j - 1);
    }
    PauliString::from_parts(g.n(), 0, 1 << (i - 1), z_mask)
}

/// An ordered list of commuting Hermitian Pauli strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    generators: Vec<PauliString>,
}

impl GeneratorSet {
    /// Validates the stabilizer contract: matching sizes, Hermitian
    /// elements, pairwise commuting.
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<GeneratorSet> {
        check_qubit_count(n)?;
        for (k, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::SizeMismatch { left: n, right: g.n() });
            }
            if !g.is_hermitian() {
                return Err(Error::InvalidGenerators {
                    reason: format!("generator {} ({}) is not Hermitian", k + 1, g),
                });
            }
        }
        for a in 0..generators.len() {
            for b in a + 1..generators.len() {
                if !generators[a].commutes(&generators[b])? {
                    return Err(Error::InvalidGenerators {
                        reason: format!(
                            "generators {} and {} anticommute",
                            generators[a], generators[b]
                        ),
                    });
                }
            }
        }
        Ok(GeneratorSet { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// The graph's stabilizer generators [K_1, ..., K_n] in vertex order.
pub fn graph_generators(g: &Graph) -> Result<GeneratorSet> {
    let gens = (1..=g.n())
        .map(|i| cluster_operator(g, i))
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(g.n(), gens)
}

/// GHZ generators <Z1Z2; Z2Z3; ...; Z_{n-1}Z_n; X1...Xn>.
pub fn ghz_generators(n: usize) -> Result<GeneratorSet> {
    if n < 2 {
        return Err(Error::Domain { reason: format!("GHZ generators need n >= 2, got {n}") });
    }
    check_qubit_count(n)?;
    let mut gens = Vec::with_capacity(n);
    for k in 1..n {
        gens.push(PauliString::from_parts(n, 0, 0, 0b11 << (k - 1))?);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    gens.push(PauliString::from_parts(n, 0, all, 0)?);
    GeneratorSet::new(n, gens)
}

/// Generator limit for exhaustive group enumeration (2^16 elements).
pub const MAX_GROUP_GENERATORS: usize = 16;

/// All 2^m subset products of the generators, phases included, in subset
/// bitmask order (the empty product first).
pub fn group_elements(gens: &GeneratorSet) -> Result<Vec<PauliString>> {
    let m = gens.len();
    if m > MAX_GROUP_GENERATORS {
        return Err(Error::Capacity {
            what: "group generators",
            limit: MAX_GROUP_GENERATORS,
            requested: m,
        });
    }
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u32..(1 << m) {
        let mut acc = PauliString::identity(gens.n())?;
        for (k, g) in gens.generators().iter().enumerate() {
            if mask & (1 << k) != 0 {
                acc = acc.multiply(g)?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Product of cluster operators over `vertices` in ascending order.
pub fn cluster_product(g: &Graph, vertices: &BTreeSet<VertexId>) -> Result<PauliString> {
    let mut acc = PauliString::identity(g.n())?;
    for &v in vertices {
        acc = acc.multiply(&cluster_operator(g, v)?)?;
    }
    Ok(acc)
}
