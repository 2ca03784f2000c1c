//! The 24 single-qubit Clifford operations and per-qubit Clifford layers.
//!
//! A single-qubit Clifford is determined (up to global phase, which stabilizer
//! dynamics never sees) by where it sends X and Z under conjugation. The
//! canonical enumeration is lexicographic in `(x_axis, x_sign, z_axis, z_sign)`
//! with axis order X < Y < Z and `+` before `-`; the two axes are always
//! distinct, giving 3 * 2 * 2 * 2 = 24 labels. Label 2 is the identity
//! (X -> +X, Z -> +Z).

use crate::pauli::{PauliKind, Sign};

/// Non-identity Pauli axis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn kind(self) -> PauliKind {
        match self {
            Axis::X => PauliKind::X,
            Axis::Y => PauliKind::Y,
            Axis::Z => PauliKind::Z,
        }
    }
}

/// Signed Pauli axis: the image of a generator under conjugation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedAxis {
    pub axis: Axis,
    pub sign: Sign,
}

impl SignedAxis {
    fn new(axis: Axis, sign: Sign) -> Self {
        SignedAxis { axis, sign }
    }
}

/// Product of two distinct anticommuting axes including the `i` from Y = iXZ:
/// returns the third axis and the real sign of `i * a * b`.
fn third_axis(a: SignedAxis, b: SignedAxis) -> SignedAxis {
    use Axis::*;
    debug_assert_ne!(a.axis, b.axis);
    // i * X * Z = i * (-iY) = Y ; table for the cyclic/anticyclic cases:
    let (axis, neg) = match (a.axis, b.axis) {
        (X, Z) => (Y, false),
        (Z, X) => (Y, true),
        (Y, X) => (Z, false),
        (X, Y) => (Z, true),
        (Z, Y) => (X, false),
        (Y, Z) => (X, true),
        _ => unreachable!(),
    };
    let mut sign = if neg { Sign::Minus } else { Sign::Plus };
    if a.sign.is_minus() {
        sign = sign.flipped();
    }
    if b.sign.is_minus() {
        sign = sign.flipped();
    }
    SignedAxis::new(axis, sign)
}

/// One of the 24 single-qubit Cliffords, stored as the images of X and Z.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SingleClifford {
    x_image: SignedAxis,
    z_image: SignedAxis,
}

pub const IDENTITY_LABEL: u8 = 2;

impl SingleClifford {
    pub const IDENTITY: SingleClifford = SingleClifford {
        x_image: SignedAxis {
            axis: Axis::X,
            sign: Sign::Plus,
        },
        z_image: SignedAxis {
            axis: Axis::Z,
            sign: Sign::Plus,
        },
    };

    pub const H: SingleClifford = SingleClifford {
        x_image: SignedAxis {
            axis: Axis::Z,
            sign: Sign::Plus,
        },
        z_image: SignedAxis {
            axis: Axis::X,
            sign: Sign::Plus,
        },
    };

    /// S = diag(1, i): X -> Y, Z -> Z.
    pub const S: SingleClifford = SingleClifford {
        x_image: SignedAxis {
            axis: Axis::Y,
            sign: Sign::Plus,
        },
        z_image: SignedAxis {
            axis: Axis::Z,
            sign: Sign::Plus,
        },
    };

    pub const X: SingleClifford = SingleClifford {
        x_image: SignedAxis {
            axis: Axis::X,
            sign: Sign::Plus,
        },
        z_image: SignedAxis {
            axis: Axis::Z,
            sign: Sign::Minus,
        },
    };

    pub const Y: SingleClifford = SingleClifford {
        x_image: SignedAxis {
            axis: Axis::X,
            sign: Sign::Minus,
        },
        z_image: SignedAxis {
            axis: Axis::Z,
            sign: Sign::Minus,
        },
    };

    pub const Z: SingleClifford = SingleClifford {
        x_image: SignedAxis {
            axis: Axis::X,
            sign: Sign::Minus,
        },
        z_image: SignedAxis {
            axis: Axis::Z,
            sign: Sign::Plus,
        },
    };

    /// Image of a single-qubit Pauli under conjugation; Y goes through
    /// Y = iXZ so the result stays real.
    pub fn image(&self, kind: PauliKind) -> Option<SignedAxis> {
        match kind {
            PauliKind::I => None,
            PauliKind::X => Some(self.x_image),
            PauliKind::Z => Some(self.z_image),
            PauliKind::Y => Some(third_axis(self.x_image, self.z_image)),
        }
    }

    /// Composition: `self.then(next)` conjugates first by `self`, then `next`.
    pub fn then(&self, next: &SingleClifford) -> SingleClifford {
        let map = |sa: SignedAxis| {
            let img = next.image(sa.axis.kind()).unwrap();
            SignedAxis::new(
                img.axis,
                if sa.sign.is_minus() {
                    img.sign.flipped()
                } else {
                    img.sign
                },
            )
        };
        SingleClifford {
            x_image: map(self.x_image),
            z_image: map(self.z_image),
        }
    }

    pub fn inverse(&self) -> SingleClifford {
        // 24 elements: a scan is cheap and avoids a hand-derived formula.
        for label in 0..24 {
            let c = SingleClifford::from_label(label);
            if c.then(self) == SingleClifford::IDENTITY {
                return c;
            }
        }
        unreachable!("every Clifford has an inverse");
    }

    /// Canonical label in 0..24, lexicographic in (x_axis, x_sign, z_axis, z_sign).
    pub fn label(&self) -> u8 {
        let axis_idx = |a: Axis| match a {
            Axis::X => 0u8,
            Axis::Y => 1,
            Axis::Z => 2,
        };
        let xi = axis_idx(self.x_image.axis);
        let xs = self.x_image.sign.is_minus() as u8;
        // index of z_axis among the two axes != x_axis, in axis order
        let zi = axis_idx(self.z_image.axis);
        let z_rel = if zi > xi { zi - 1 } else { zi };
        let zs = self.z_image.sign.is_minus() as u8;
        xi * 8 + xs * 4 + z_rel * 2 + zs
    }

    pub fn from_label(label: u8) -> SingleClifford {
        assert!(label < 24);
        let axes = [Axis::X, Axis::Y, Axis::Z];
        let xi = (label / 8) as usize;
        let xs = label / 4 % 2;
        let z_rel = (label / 2 % 2) as usize;
        let zs = label % 2;
        let x_axis = axes[xi];
        let z_axis = *axes.iter().filter(|&&a| a != x_axis).nth(z_rel).unwrap();
        SingleClifford {
            x_image: SignedAxis::new(x_axis, if xs == 1 { Sign::Minus } else { Sign::Plus }),
            z_image: SignedAxis::new(z_axis, if zs == 1 { Sign::Minus } else { Sign::Plus }),
        }
    }
}

/// Named single-qubit gates accepted by `apply_local`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gate {
    H,
    S,
    X,
    Y,
    Z,
}

impl Gate {
    pub fn clifford(self) -> SingleClifford {
        match self {
            Gate::H => SingleClifford::H,
            Gate::S => SingleClifford::S,
            Gate::X => SingleClifford::X,
            Gate::Y => SingleClifford::Y,
            Gate::Z => SingleClifford::Z,
        }
    }
}

/// One single-qubit Clifford per qubit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalCliffordLayer {
    pub ops: Vec<SingleClifford>,
}

impl LocalCliffordLayer {
    pub fn identity(n: usize) -> Self {
        LocalCliffordLayer {
            ops: vec![SingleClifford::IDENTITY; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.ops.iter().all(|c| *c == SingleClifford::IDENTITY)
    }

    pub fn labels(&self) -> Vec<u8> {
        self.ops.iter().map(|c| c.label()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labels_are_a_bijection() {
        let mut seen = HashSet::new();
        for label in 0..24 {
            let c = SingleClifford::from_label(label);
            assert_eq!(c.label(), label);
            seen.insert((c.x_image, c.z_image));
        }
        assert_eq!(seen.len(), 24);
        assert_eq!(SingleClifford::IDENTITY.label(), IDENTITY_LABEL);
    }

    #[test]
    fn group_relations() {
        let h = SingleClifford::H;
        let s = SingleClifford::S;
        assert_eq!(h.then(&h), SingleClifford::IDENTITY);
        let s2 = s.then(&s);
        assert_eq!(s2, SingleClifford::Z);
        assert_eq!(s2.then(&s2), SingleClifford::IDENTITY);
        // S X S^-1 = Y, S Y S^-1 = -X
        assert_eq!(
            s.image(PauliKind::X),
            Some(SignedAxis::new(Axis::Y, Sign::Plus))
        );
        assert_eq!(
            s.image(PauliKind::Y),
            Some(SignedAxis::new(Axis::X, Sign::Minus))
        );
        // H X H = Z, H Y H = -Y
        assert_eq!(
            h.image(PauliKind::Y),
            Some(SignedAxis::new(Axis::Y, Sign::Minus))
        );
    }

    #[test]
    fn closure_under_h_and_s() {
        let mut reached = HashSet::new();
        let mut frontier = vec![SingleClifford::IDENTITY];
        reached.insert(SingleClifford::IDENTITY.label());
        while let Some(c) = frontier.pop() {
            for g in [SingleClifford::H, SingleClifford::S] {
                let next = c.then(&g);
                if reached.insert(next.label()) {
                    frontier.push(next);
                }
            }
        }
        assert_eq!(reached.len(), 24);
    }

    #[test]
    fn inverses_compose_to_identity() {
        for label in 0..24 {
            let c = SingleClifford::from_label(label);
            assert_eq!(c.then(&c.inverse()), SingleClifford::IDENTITY);
            assert_eq!(c.inverse().then(&c), SingleClifford::IDENTITY);
        }
    }
}
