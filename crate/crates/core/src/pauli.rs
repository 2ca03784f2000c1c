//! n-qubit Pauli operators in the binary symplectic representation.
//!
//! An operator is `sign * prod_q sigma_q` with `sigma_q` encoded by the bit
//! pair `(x_q, z_q)`: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Y carries its `i`
//! implicitly; products track the accumulated phase and fold it into the sign,
//! which stays real for every product of commuting Hermitian Paulis.

use crate::bits::Bits;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        matches!(self, Sign::Minus)
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Single-qubit Pauli kind, used when inspecting one column of an operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PauliKind {
    I,
    X,
    Y,
    Z,
}

impl PauliKind {
    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliKind::I => (false, false),
            PauliKind::X => (true, false),
            PauliKind::Y => (true, true),
            PauliKind::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliKind::I,
            (true, false) => PauliKind::X,
            (true, true) => PauliKind::Y,
            (false, true) => PauliKind::Z,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PauliOperator {
    pub(crate) x: Bits,
    pub(crate) z: Bits,
    pub(crate) sign: Sign,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: Bits::zeros(n),
            z: Bits::zeros(n),
            sign: Sign::Plus,
        }
    }

    pub fn single(n: usize, q: usize, kind: PauliKind) -> Self {
        let mut p = PauliOperator::identity(n);
        p.set_qubit(q, kind);
        p
    }

    /// Operator with the given kind on each listed qubit, sign `+`.
    pub fn on_qubits(n: usize, kind: PauliKind, qubits: &[usize]) -> Self {
        let mut p = PauliOperator::identity(n);
        for &q in qubits {
            p.set_qubit(q, kind);
        }
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn qubit(&self, q: usize) -> PauliKind {
        PauliKind::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set_qubit(&mut self, q: usize, kind: PauliKind) {
        let (x, z) = kind.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn is_identity(&self) -> bool {
        !self.x.any() && !self.z.any()
    }

    /// Symplectic inner product: false when the operators commute.
    pub fn anticommutes(&self, other: &PauliOperator) -> bool {
        self.x.and_parity(&other.z) ^ self.z.and_parity(&other.x)
    }

    /// Qubits on which the operator acts nontrivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.num_qubits())
            .filter(|&q| self.x.get(q) || self.z.get(q))
            .collect()
    }

    /// In-place product `self <- self * other`, folding the phase into the sign.
    ///
    /// Panics in debug builds if the product picks up an imaginary phase,
    /// which cannot happen for commuting operators.
    pub fn mul_assign(&mut self, other: &PauliOperator) {
        // phase exponent of i, mod 4, from per-qubit reordering
        let mut phase: u32 = 0;
        for w in 0..self.num_qubits() {
            let (x1, z1) = (self.x.get(w), self.z.get(w));
            let (x2, z2) = (other.x.get(w), other.z.get(w));
            phase = phase.wrapping_add(pauli_phase(x1, z1, x2, z2) as u32);
        }
        if self.sign.is_minus() {
            phase = phase.wrapping_add(2);
        }
        if other.sign.is_minus() {
            phase = phase.wrapping_add(2);
        }
        let phase = phase % 4;
        debug_assert!(phase == 0 || phase == 2, "imaginary phase in Pauli product");
        self.sign = if phase == 0 { Sign::Plus } else { Sign::Minus };
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Restrict to the listed qubits, preserving their order.
    pub fn gather(&self, keep: &[usize]) -> PauliOperator {
        PauliOperator {
            x: self.x.gather(keep),
            z: self.z.gather(keep),
            sign: self.sign,
        }
    }
}

/// Phase exponent (of i, mod 4) picked up when multiplying single-qubit
/// Paulis `(x1,z1) * (x2,z2)` in the X-then-Z ordering convention.
#[inline]
fn pauli_phase(x1: bool, z1: bool, x2: bool, z2: bool) -> i8 {
    // Aaronson-Gottesman g function, extended to an i-exponent.
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => (z2 as i8) - (x2 as i8),
        (true, false) => (z2 as i8) * (2 * (x2 as i8) - 1),
        (false, true) => (x2 as i8) * (1 - 2 * (z2 as i8)),
    }
    .rem_euclid(4)
}

impl std::fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.sign)?;
        for q in 0..self.num_qubits() {
            let c = match self.qubit(q) {
                PauliKind::I => '.',
                PauliKind::X => 'X',
                PauliKind::Y => 'Y',
                PauliKind::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(kind: PauliKind) -> PauliOperator {
        PauliOperator::single(1, 0, kind)
    }

    #[test]
    fn single_qubit_products() {
        // X * Y = iZ is not Hermitian-real; commuting pairs stay real.
        let mut x = p1(PauliKind::X);
        x.mul_assign(&p1(PauliKind::X));
        assert!(x.is_identity());
        assert_eq!(x.sign(), Sign::Plus);

        // Y * Y = I
        let mut y = p1(PauliKind::Y);
        y.mul_assign(&p1(PauliKind::Y));
        assert!(y.is_identity());
        assert_eq!(y.sign(), Sign::Plus);
    }

    #[test]
    fn two_qubit_commuting_product() {
        // (X X) * (Z Z) = (XZ)(XZ) = (-iY)(-iY) = -YY
        let xx = PauliOperator::on_qubits(2, PauliKind::X, &[0, 1]);
        let zz = PauliOperator::on_qubits(2, PauliKind::Z, &[0, 1]);
        assert!(!xx.anticommutes(&zz));
        let mut prod = xx.clone();
        prod.mul_assign(&zz);
        assert_eq!(prod.qubit(0), PauliKind::Y);
        assert_eq!(prod.qubit(1), PauliKind::Y);
        assert_eq!(prod.sign(), Sign::Minus);
    }

    #[test]
    fn anticommutation() {
        let x = p1(PauliKind::X);
        let z = p1(PauliKind::Z);
        assert!(x.anticommutes(&z));
        let y = p1(PauliKind::Y);
        assert!(x.anticommutes(&y));
        assert!(z.anticommutes(&y));
        assert!(!x.anticommutes(&x));
    }
}
