//! The fixed symbol table shared by every polynomial in the crate.
//!
//! Slot order is the canonical variable order used for term sorting.
//! `qh` is the square root of the deformation parameter: `q = qh^2`.

use core::fmt;

/// Names of all symbols, indexed by [`Sym`].
pub const SYMBOL_NAMES: [&str; 31] = [
    "qh", "u", "v", "w", "w2", "w3", "kp", "km", "alpha", "p0", "p1", "p2", "p3", "p4", "p5",
    "t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "t10", "t11", "t12", "t13",
    "t14", "t15",
];

/// Number of symbol slots.
pub const NUM_SYMBOLS: usize = SYMBOL_NAMES.len();

/// A commuting symbol of the coefficient field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(u8);

impl Sym {
    pub const QH: Sym = Sym(0);
    pub const U: Sym = Sym(1);
    pub const V: Sym = Sym(2);
    pub const W: Sym = Sym(3);
    pub const W2: Sym = Sym(4);
    pub const W3: Sym = Sym(5);
    pub const KP: Sym = Sym(6);
    pub const KM: Sym = Sym(7);
    pub const ALPHA: Sym = Sym(8);

    /// Generic parameter slot `p{i}`, `i < 6`.
    pub const fn param(i: usize) -> Sym {
        assert!(i < 6);
        Sym(9 + i as u8)
    }

    /// Scratch unknown `t{i}`, `i < 16`, used by the scalar solver.
    pub const fn unknown(i: usize) -> Sym {
        assert!(i < 16);
        Sym(15 + i as u8)
    }

    /// Inhomogeneity symbol for dressing site `i` (`w`, `w2`, `w3`).
    pub fn site(i: usize) -> Option<Sym> {
        match i {
            0 => Some(Sym::W),
            1 => Some(Sym::W2),
            2 => Some(Sym::W3),
            _ => None,
        }
    }

    pub fn from_name(name: &str) -> Option<Sym> {
        SYMBOL_NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Sym(i as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Option<Sym> {
        (i < NUM_SYMBOLS).then_some(Sym(i as u8))
    }

    pub fn name(self) -> &'static str {
        SYMBOL_NAMES[self.0 as usize]
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for i in 0..NUM_SYMBOLS {
            let s = Sym::from_index(i).unwrap();
            assert_eq!(Sym::from_name(s.name()), Some(s));
        }
        assert_eq!(Sym::param(2).name(), "p2");
        assert_eq!(Sym::unknown(11).name(), "t11");
        assert!(Sym::from_name("zz").is_none());
    }
}
