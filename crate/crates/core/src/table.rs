//! The frozen octonion multiplication table.
//!
//! Generated from Cayley–Dickson doubling of the quaternions,
//! `(a, b)(c, d) = (ac − d̄b, da + bc̄)`, with `e4 = (0, 1)` and
//! `e_{4+i} = e_i e4 = (0, e_i)`. The product of two basis elements
//! `b_a b_b` is `sign[a][b] · b_{index[a][b]}`; for this construction
//! `index[a][b] == a ^ b`.

use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureTable {
    pub sign: [[i8; 8]; 8],
    pub index: [[u8; 8]; 8],
}

pub static STRUCTURE_TABLE: StructureTable = StructureTable {
    sign: [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, -1, 1, -1, 1, -1, -1, 1],
        [1, -1, -1, 1, 1, 1, -1, -1],
        [1, 1, -1, -1, 1, -1, 1, -1],
        [1, -1, -1, -1, -1, 1, 1, 1],
        [1, 1, -1, 1, -1, -1, -1, 1],
        [1, 1, 1, -1, -1, 1, -1, -1],
        [1, -1, 1, 1, -1, -1, 1, -1],
    ],
    index: [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [1, 0, 3, 2, 5, 4, 7, 6],
        [2, 3, 0, 1, 6, 7, 4, 5],
        [3, 2, 1, 0, 7, 6, 5, 4],
        [4, 5, 6, 7, 0, 1, 2, 3],
        [5, 4, 7, 6, 1, 0, 3, 2],
        [6, 7, 4, 5, 2, 3, 0, 1],
        [7, 6, 5, 4, 3, 2, 1, 0],
    ],
};

impl StructureTable {
    /// `(sign, index)` of the product `b_a b_b`.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> (i8, usize) {
        (self.sign[a][b], self.index[a][b] as usize)
    }
}

/// Renders the table as an 8×8 grid of signed basis labels, e.g. `-e3`.
impl fmt::Display for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "*")?;
        for b in 0..8 {
            write!(f, " {:>4}", basis_label(b))?;
        }
        writeln!(f)?;
        for a in 0..8 {
            write!(f, "{:>4}", basis_label(a))?;
            for b in 0..8 {
                let (s, k) = self.product(a, b);
                let sign = if s < 0 { "-" } else { "+" };
                write!(f, " {:>4}", alloc::format!("{sign}{}", basis_label(k)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn basis_label(k: usize) -> &'static str {
    ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"][k]
}
