//! Braid words and their closures.
//!
//! A braid word is a sequence of Artin generators `σ_k^{±1}` encoded as
//! nonzero integers: letter `+k` is `σ_k` (strand in position `k` crosses
//! *over* strand `k+1`), letter `−k` is `σ_k^{-1}`. The closure of a braid
//! is a knot exactly when the induced permutation is a single cycle.

use std::fmt;

/// A braid word on a fixed number of strands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    pub letters: Vec<i32>,
    pub strands: usize,
}

impl BraidWord {
    /// Build a braid word, inferring the strand count as one more than the
    /// largest generator index used (minimum two strands).
    pub fn new(letters: &[i32]) -> Result<Self, String> {
        let mut max_idx = 1;
        for &l in letters {
            if l == 0 {
                return Err("braid letter 0 is not a generator".into());
            }
            max_idx = max_idx.max(l.unsigned_abs() as usize);
        }
        Ok(BraidWord { letters: letters.to_vec(), strands: max_idx + 1 })
    }

    /// The permutation induced by the braid: `perm[i]` is the bottom
    /// position reached by the strand entering at top position `i`.
    pub fn permutation(&self) -> Vec<usize> {
        // positions[p] = index of the strand currently at position p.
        let mut positions: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            positions.swap(k, k + 1);
        }
        let mut perm = vec![0; self.strands];
        for (p, &s) in positions.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    /// Whether the closure of the braid is a knot (single-cycle permutation).
    pub fn closes_to_knot(&self) -> bool {
        let perm = self.permutation();
        let mut seen = 1;
        let mut at = perm[0];
        while at != 0 {
            at = perm[at];
            seen += 1;
        }
        seen == self.strands
    }

    /// Signed crossing count of the closure diagram.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Mirror image: all crossing signs flipped.
    pub fn mirror(&self) -> Self {
        BraidWord {
            letters: self.letters.iter().map(|&l| -l).collect(),
            strands: self.strands,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_word_closes_to_knot() {
        let b = BraidWord::new(&[1, 1, 1]).unwrap();
        assert_eq!(b.strands, 2);
        assert!(b.closes_to_knot());
        assert_eq!(b.writhe(), 3);
    }

    #[test]
    fn torus_link_is_not_a_knot() {
        // (σ1σ2)³ closes to the 3-component (3,3) torus link.
        let b = BraidWord::new(&[1, 2, 1, 2, 1, 2]).unwrap();
        assert!(!b.closes_to_knot());
    }

    #[test]
    fn figure_eight_word() {
        let b = BraidWord::new(&[1, -2, 1, -2]).unwrap();
        assert_eq!(b.strands, 3);
        assert!(b.closes_to_knot());
        assert_eq!(b.writhe(), 0);
    }
}
