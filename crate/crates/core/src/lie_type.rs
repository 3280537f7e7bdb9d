//! Simple complex Lie algebra labels and their Cartan matrices.
//!
//! Node numbering follows the Bourbaki convention: `B_l` has the short root
//! last, `C_l` the long root last, `D_l` forks at node `l-2`, and for `E_n`
//! node 2 hangs off node 4. `G_2` is numbered with the long root first.
//!
//! Matrix convention: `A[i][j] = 2 (φ_i, φ_j) / (φ_i, φ_i)`, so the row of a
//! simple root holds its coroot pairings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A family label plus rank, e.g. `E6` or `B4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits(rank) {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type with rank at most `max_rank`, in family-then-rank order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..l - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..l - 2 {
                    link(i, i + 1);
                }
                link(l - 3, l - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..l - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // φ_l short
            Family::B => a[l - 1][l - 2] = -2,
            // φ_l long
            Family::C => a[l - 2][l - 1] = -2,
            // φ_3, φ_4 short
            Family::F => a[2][1] = -2,
            // φ_2 short
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }

    /// Order of the Weyl group, from the degree-product formulas.
    pub fn weyl_order(&self) -> u64 {
        let l = self.rank as u64;
        let fact = |n: u64| (1..=n).product::<u64>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(l + 1),
            (Family::B | Family::C, _) => (1u64 << l) * fact(l),
            (Family::D, _) => (1u64 << (l - 1)) * fact(l),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1_152,
            (Family::G, _) => 12,
        }
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match (self.family, l) {
            (Family::A, _) => l * (l + 1),
            (Family::B | Family::C, _) => 2 * l * l,
            (Family::D, _) => 2 * l * (l - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let rank: usize = digits.parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds() {
        assert!(LieType::new(Family::A, 1).is_ok());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::C, 2).is_ok());
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::G, 2).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let t: LieType = "e6".parse().unwrap();
        assert_eq!(t.to_string(), "E6");
        assert_eq!("B_4".parse::<LieType>().unwrap().rank(), 4);
        assert!("D3".parse::<LieType>().is_err());
        assert!("X4".parse::<LieType>().is_err());
        assert!("B".parse::<LieType>().is_err());
    }

    #[test]
    fn small_matrices() {
        let a1 = LieType::new(Family::A, 1).unwrap().cartan_matrix();
        assert_eq!(a1, vec![vec![2]]);
        let b2 = LieType::new(Family::B, 2).unwrap().cartan_matrix();
        assert_eq!(b2, vec![vec![2, -1], vec![-2, 2]]);
        let g2 = LieType::new(Family::G, 2).unwrap().cartan_matrix();
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
        let c3 = LieType::new(Family::C, 3).unwrap().cartan_matrix();
        assert_eq!(c3, vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
    }

    #[test]
    fn e6_branch_node() {
        let e6 = LieType::new(Family::E, 6).unwrap().cartan_matrix();
        // φ_2 attaches only to φ_4
        assert_eq!(e6[1], vec![0, 2, 0, -1, 0, 0]);
        assert_eq!(e6[0], vec![2, 0, -1, 0, 0, 0]);
    }
}
