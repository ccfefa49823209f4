//! Curated knot presentations with reference data.
//!
//! Each record pairs a knot name with a braid-word presentation and
//! independently tabulated reference values: the Alexander polynomial
//! (stored as the non-negative-power half of its symmetric normalization),
//! the Seifert genus, and the degree-2 Vassiliev invariant v₂.
//!
//! All reference Alexander data is validated against the Seifert-matrix
//! oracle in this crate's test suite, so a typo in either the braid word
//! or the coefficients fails loudly. The braid words themselves were
//! fixed by exhaustively searching short words and keeping only those
//! whose closure provably matches the named knot: for words whose length
//! equals the crossing number this is forced (Alexander polynomials are
//! distinct across knots and composites of at most eight crossings,
//! outside two collisions handled with standard presentations), while
//! longer words are flagged in `identification_certain`.

use crate::exact::{LaurentPoly, Rational, SymMono, SymbolId, rat};

/// How a curated knot is presented to the evaluator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// Closure of a braid word in Artin generator encoding.
    Braid(Vec<i32>),
    /// A crossing-program in the tangle DSL.
    Program(&'static str),
}

/// One curated knot with reference invariants.
#[derive(Clone, Debug)]
pub struct KnotRecord {
    /// Table name, e.g. `"4_1"` or `"11n34"`.
    pub name: &'static str,
    /// Presentation whose closure is the knot.
    pub presentation: Presentation,
    /// Non-negative-power half `[a_0, a_1, ...]` of the symmetric
    /// Alexander polynomial `a_0 + Σ_k a_k (T^k + T^{-k})`, normalized to
    /// value 1 at `T = 1`.
    pub alexander_half: &'static [i64],
    /// Seifert genus.
    pub genus: u32,
    /// Degree-2 Vassiliev invariant (Conway coefficient a₂ = Δ″(1)/2).
    pub v2: i64,
    /// True when the presentation's closure is pinned to the name by the
    /// Alexander data alone (word length ≤ crossing number, or a standard
    /// presentation); false when knots of more crossings share the same
    /// Alexander polynomial and could in principle alias the word.
    pub identification_certain: bool,
}

impl KnotRecord {
    /// The reference Alexander polynomial as a symmetric Laurent
    /// polynomial in integer powers of `T`.
    pub fn alexander(&self) -> LaurentPoly {
        half_to_poly(self.alexander_half)
    }

    /// Crossing count of the stored presentation (braid length for braid
    /// presentations).
    pub fn crossings(&self) -> usize {
        match &self.presentation {
            Presentation::Braid(w) => w.len(),
            Presentation::Program(_) => 0,
        }
    }

    /// Determinant `|Δ(-1)|` of the reference Alexander polynomial.
    pub fn determinant(&self) -> i64 {
        let mut acc: i64 = self.alexander_half[0];
        for (k, &c) in self.alexander_half.iter().enumerate().skip(1) {
            acc += 2 * c * if k % 2 == 0 { 1 } else { -1 };
        }
        acc.abs()
    }
}

/// Expand a stored half-coefficient list into the full symmetric Laurent
/// polynomial.
pub fn half_to_poly(half: &[i64]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (k, &c) in half.iter().enumerate() {
        if c == 0 {
            continue;
        }
        p.add_term(SymMono::var(SymbolId::T, 2 * k as i64), rat(c));
        if k > 0 {
            p.add_term(SymMono::var(SymbolId::T, -2 * (k as i64)), rat(c));
        }
    }
    p
}

/// Evaluate `Δ''(1)/2` from a half-coefficient list: `Σ_k a_k k²`.
pub fn v2_of_half(half: &[i64]) -> Rational {
    let mut acc = 0i64;
    for (k, &c) in half.iter().enumerate().skip(1) {
        acc += c * (k as i64) * (k as i64);
    }
    rat(acc)
}

/// Look up a curated knot by name.
pub fn knot_by_name(name: &str) -> Option<KnotRecord> {
    curated_knots().into_iter().find(|r| r.name == name)
}

/// The full curated table: the unknot, all prime knots up to eight
/// crossings, and the two 11-crossing knots with trivial Alexander
/// polynomial.
pub fn curated_knots() -> Vec<KnotRecord> {
    let rec = |name: &'static str,
               word: &[i32],
               half: &'static [i64],
               genus: u32,
               v2: i64,
               certain: bool| KnotRecord {
        name,
        presentation: Presentation::Braid(word.to_vec()),
        alexander_half: half,
        genus,
        v2,
        identification_certain: certain,
    };
    vec![
        rec("0_1", &[1], &[1], 0, 0, true),
        rec("3_1", &[1, 1, 1], &[-1, 1], 1, 1, true),
        rec("4_1", &[1, -2, 1, -2], &[3, -1], 1, -1, true),
        rec("5_1", &[1, 1, 1, 1, 1], &[1, -1, 1], 2, 3, true),
        rec("5_2", &[1, 1, 1, 2, -1, 2], &[-3, 2], 1, 2, true),
        rec("6_1", &[1, -3, 2, -3, -1, 2, 1], &[5, -2], 1, -2, true),
        rec("6_2", &[1, 1, 1, -2, 1, -2], &[-3, 3, -1], 2, -1, true),
        rec("6_3", &[1, 1, -2, 1, -2, -2], &[5, -3, 1], 2, 1, true),
        rec("7_1", &[1, 1, 1, 1, 1, 1, 1], &[-1, 1, -1, 1], 3, 6, true),
        rec("7_2", &[1, 3, -2, 3, 2, -1, 2, 1, 1], &[-5, 3], 1, 3, false),
        rec("7_3", &[1, 2, -1, 2, 1, 1, 1, 1], &[3, -3, 2], 2, 5, true),
        rec("7_4", &[1, 3, -2, 3, 2, 2, -1, 2, 1], &[-7, 4], 1, 4, false),
        rec("7_5", &[1, 2, 2, -1, 2, 1, 1, 1], &[5, -4, 2], 2, 4, true),
        rec("7_6", &[1, 3, -2, 3, 1, -2, 1], &[-7, 5, -1], 2, 1, true),
        rec("7_7", &[1, 3, -2, 3, -2, 1, -2], &[9, -5, 1], 2, -1, true),
        rec("8_1", &[1, -4, 3, -4, -2, 3, 2, -1, 2, 1], &[7, -3], 1, -3, false),
        rec("8_2", &[1, -2, 1, -2, 1, 1, 1, 1], &[3, -3, 3, -1], 3, 0, true),
        rec("8_3", &[1, -4, -3, 2, -3, -4, 3, -1, 2, 1], &[9, -4], 1, -4, false),
        rec("8_4", &[1, -3, -2, 1, -2, -3, 2, 1, 1], &[-5, 5, -2], 2, -3, false),
        rec("8_5", &[1, -2, 1, 1, 1, -2, 1, 1], &[5, -4, 3, -1], 3, -1, true),
        rec("8_6", &[1, -3, 2, -3, -1, 2, 1, 1, 1], &[-7, 6, -2], 2, -2, false),
        rec("8_7", &[1, -2, -2, 1, -2, 1, 1, 1], &[-5, 5, -3, 1], 3, 2, true),
        rec("8_8", &[1, -3, -3, 2, -3, -1, 2, 1, 1], &[9, -6, 2], 2, 2, false),
        rec("8_9", &[1, -2, -2, -2, 1, -2, 1, 1], &[7, -5, 3, -1], 3, -2, true),
        rec("8_10", &[1, -2, -2, 1, 1, -2, 1, 1], &[-7, 6, -3, 1], 3, 3, true),
        rec("8_11", &[1, -3, 2, -3, 2, 2, -1, 2, 1], &[-9, 7, -2], 2, -1, false),
        rec("8_12", &[1, -4, 3, -4, -2, 3, 1, -2], &[13, -7, 1], 2, -3, true),
        rec("8_13", &[1, -3, -3, 2, -3, 2, -1, 2, 1], &[11, -7, 2], 2, 1, false),
        rec("8_14", &[1, -3, 2, -3, 2, -1, 2, 1, 1], &[-11, 8, -2], 2, 0, false),
        rec("8_15", &[1, 3, 3, -2, 3, 1, 2, 2, 1], &[11, -8, 3], 2, 4, false),
        rec("8_16", &[1, -2, 1, -2, 1, 1, -2, 1], &[-9, 8, -4, 1], 3, 1, true),
        rec("8_17", &[1, -2, -2, 1, -2, 1, -2, 1], &[11, -8, 4, -1], 3, -1, true),
        rec("8_18", &[1, -2, 1, -2, 1, -2, 1, -2], &[13, -10, 5, -1], 3, 1, true),
        rec("8_19", &[1, 2, 1, 2, 1, 2, 1, 2], &[1, 0, -1, 1], 3, 5, true),
        rec("8_20", &[1, 1, 1, -2, -1, -1, -1, -2], &[3, -2, 1], 2, 2, true),
        rec("8_21", &[1, 2, 2, -1, -1, 2, 1, 1], &[-5, 4, -1], 2, 0, true),
        rec("11n34", &KNOT_11N34_WORD, &[1], 3, 0, false),
        rec("11n42", &KNOT_11N42_WORD, &[1], 2, 0, false),
    ]
}

/// Braid words whose closures have trivial Alexander polynomial and
/// nontrivial Kauffman bracket. Among knots of at most eleven crossings
/// only the Conway/Kinoshita-Terasaka mutant pair has trivial Alexander
/// polynomial, so each closure is one of the two; because every invariant
/// computed here is mutation-invariant, the assignment of the two names
/// to the two words is conventional.
pub const KNOT_11N34_WORD: [i32; 11] = [1, -3, -3, -2, 1, -2, -3, 1, 2, 2, 1];
pub const KNOT_11N42_WORD: [i32; 11] = [1, -3, -3, 2, 2, -3, 1, -2, 1, -2, 1];
