use std::fmt;
use std::ops::Add;

/// An element `(a1, a2)` of ℤ₂×ℤ₂.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grading {
    a1: u8,
    a2: u8,
}

impl Grading {
    pub const ZERO: Grading = Grading { a1: 0, a2: 0 };
    pub const ALL: [Grading; 4] = [
        Grading { a1: 0, a2: 0 },
        Grading { a1: 0, a2: 1 },
        Grading { a1: 1, a2: 0 },
        Grading { a1: 1, a2: 1 },
    ];

    /// Bits are reduced mod 2.
    pub const fn new(a1: u8, a2: u8) -> Self {
        Grading {
            a1: a1 & 1,
            a2: a2 & 1,
        }
    }

    pub const fn a1(self) -> u8 {
        self.a1
    }

    pub const fn a2(self) -> u8 {
        self.a2
    }

    /// `a·b = a1·b1 + a2·b2 mod 2`.
    pub const fn dot(self, other: Grading) -> u8 {
        (self.a1 * other.a1 + self.a2 * other.a2) & 1
    }

    /// `(-1)^(a·b)`.
    pub const fn sign(self, other: Grading) -> i64 {
        if self.dot(other) == 0 {
            1
        } else {
            -1
        }
    }

    /// Generators with `a·a = 1` anticommute with themselves and square to half their self-bracket.
    pub const fn is_self_anticommuting(self) -> bool {
        self.dot(self) == 1
    }

    pub fn from_slice(bits: &[u64]) -> Option<Grading> {
        match bits {
            [a, b] if *a <= 1 && *b <= 1 => Some(Grading::new(*a as u8, *b as u8)),
            _ => None,
        }
    }

    pub fn to_json(self) -> serde_json::Value {
        serde_json::json!([self.a1, self.a2])
    }
}

impl Add for Grading {
    type Output = Grading;
    fn add(self, rhs: Grading) -> Grading {
        Grading::new(self.a1 ^ rhs.a1, self.a2 ^ rhs.a2)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}
