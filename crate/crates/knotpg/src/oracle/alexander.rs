//! Alexander polynomial oracles for braid closures.
//!
//! Two independent routes are implemented.
//!
//! The primary route builds a Seifert matrix `V` for the Bennequin surface
//! of the braid closure (disks for the strands, twisted bands for the
//! crossings) and evaluates the Conway-normalized determinant
//! `Δ(T) = det(V·T^{1/2} − Vᵀ·T^{−1/2})`, which satisfies `Δ(T) = Δ(T⁻¹)`
//! and `Δ(1) = 1` with no further normalization.
//!
//! The secondary route evaluates the reduced Burau representation and uses
//! `det(I − β̄(w))·(1−T)/(1−Tⁿ)`, which determines `Δ` only up to a unit
//! `±T^k`; the unit is stripped by symmetrizing and rescaling to `Δ(1)=1`.
//! The two routes agreeing exactly is a strong consistency check on both.

use super::braid::BraidWord;
use crate::exact::{rat, LaurentPoly, Rational, Scalar, SymbolId};
use num::traits::{Signed, ToPrimitive, Zero};

/// A homology loop of the Bennequin surface: it runs through two
/// consecutive bands of the same column.
#[derive(Clone, Copy, Debug)]
struct Loop {
    column: usize,
    first: usize,
    second: usize,
    sign_first: i64,
    sign_second: i64,
}

fn loops_of(letters: &[i32]) -> Vec<Loop> {
    let max_idx = letters.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0) as usize;
    let mut loops = Vec::new();
    for col in 1..=max_idx {
        let positions: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.unsigned_abs() as usize == col)
            .map(|(p, _)| p)
            .collect();
        for w in positions.windows(2) {
            loops.push(Loop {
                column: col,
                first: w[0],
                second: w[1],
                sign_first: letters[w[0]].signum() as i64,
                sign_second: letters[w[1]].signum() as i64,
            });
        }
    }
    loops
}

/// Linking entries `(V[x][y], V[y][x])` for two loops in adjacent columns
/// whose band pairs interleave; everything else in distinct columns is
/// unlinked. `x` is the loop in the lower column.
fn adjacent_column_linking(x: &Loop, y: &Loop) -> (i64, i64) {
    if x.first < y.first && y.first < x.second && x.second < y.second {
        (0, -1)
    } else if y.first < x.first && x.first < y.second && y.second < x.second {
        (0, 1)
    } else {
        (0, 0)
    }
}

/// The Seifert matrix of the Bennequin surface of the braid closure, in the
/// basis of column loops. A generator index occurring only once carries no
/// homology and contributes nothing.
pub fn seifert_matrix(braid: &BraidWord) -> Result<Vec<Vec<i64>>, String> {
    if !braid.closes_to_knot() {
        return Err(format!("braid {braid} does not close to a knot"));
    }
    let loops = loops_of(&braid.letters);
    let n = loops.len();
    let mut v = vec![vec![0i64; n]; n];
    for i in 0..n {
        v[i][i] = -(loops[i].sign_first + loops[i].sign_second) / 2;
        for j in (i + 1)..n {
            let (x, y) = (&loops[i], &loops[j]);
            if x.column == y.column {
                // Loops in one column are listed in order; only neighbours
                // sharing a band link, with the shared band's sign deciding
                // which pushoff wraps it.
                if x.second == y.first {
                    let sign = x.sign_second;
                    v[i][j] = (1 + sign) / 2;
                    v[j][i] = (sign - 1) / 2;
                }
            } else if y.column == x.column + 1 {
                let (a, b) = adjacent_column_linking(x, y);
                v[i][j] = a;
                v[j][i] = b;
            }
        }
    }
    Ok(v)
}

/// Exact determinant of a square Scalar matrix by fraction-field Gaussian
/// elimination with pivoting.
pub fn det_scalar(mut m: Vec<Vec<Scalar>>) -> Result<Scalar, String> {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(Scalar::zero());
        };
        if p != col {
            m.swap(p, col);
            det = det.neg();
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].div(&pivot)?;
            for c in col..n {
                let d = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&d);
            }
        }
    }
    Ok(det)
}

/// `Δ(T) = det(V·T^{1/2} − Vᵀ·T^{−1/2})` for a Seifert matrix `V`.
pub fn alexander_from_seifert(v: &[Vec<i64>]) -> Result<LaurentPoly, String> {
    let n = v.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let s = Scalar::var_pow(SymbolId::T, 1);
    let sbar = Scalar::var_pow(SymbolId::T, -1);
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let a = s.scale(&rat(v[i][j]));
            let b = sbar.scale(&rat(v[j][i]));
            m[i][j] = a.sub(&b);
        }
    }
    let det = det_scalar(m)?;
    let poly = det
        .as_poly()
        .ok_or("Seifert determinant is not a Laurent polynomial")?
        .clone();
    check_conway_normalized(&poly)?;
    Ok(poly)
}

/// Alexander polynomial of the braid closure via its Seifert matrix.
pub fn alexander_from_braid(braid: &BraidWord) -> Result<LaurentPoly, String> {
    alexander_from_seifert(&seifert_matrix(braid)?)
}

fn check_conway_normalized(delta: &LaurentPoly) -> Result<(), String> {
    let (_, lo, coeffs) = delta
        .as_univariate()
        .ok_or("Alexander polynomial has extraneous symbols")?;
    let hi = lo + coeffs.len() as i64 - 1;
    if lo + hi != 0 {
        return Err("Alexander polynomial is not centered".into());
    }
    for (i, c) in coeffs.iter().enumerate() {
        if *c != coeffs[coeffs.len() - 1 - i] {
            return Err("Alexander polynomial is not palindromic".into());
        }
    }
    if delta.eval_univariate(&rat(1))? != rat(1) {
        return Err("Alexander polynomial does not take value 1 at T=1".into());
    }
    Ok(())
}

/// Reduced Burau matrix of one braid letter on `n` strands: the identity
/// except in one column (positive letter) or its exact inverse.
fn burau_letter(letter: i32, n: usize, t: &Scalar) -> Result<Vec<Vec<Scalar>>, String> {
    let dim = n - 1;
    let i = letter.unsigned_abs() as usize; // generator index, 1-based
    let k = i - 1; // modified column
    let mut m: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| (0..dim).map(|c| if r == c { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    if letter > 0 {
        m[k][k] = t.neg();
        if k >= 1 {
            m[k - 1][k] = t.clone();
        }
        if k + 1 < dim {
            m[k + 1][k] = Scalar::one();
        }
    } else {
        m[k][k] = t.recip()?.neg();
        if k >= 1 {
            m[k - 1][k] = Scalar::one();
        }
        if k + 1 < dim {
            m[k + 1][k] = t.recip()?;
        }
    }
    Ok(m)
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            for k in 0..n {
                if a[r][k].is_zero() || b[k][c].is_zero() {
                    continue;
                }
                *entry = entry.add(&a[r][k].mul(&b[k][c]));
            }
        }
    }
    out
}

/// Alexander polynomial of the braid closure via the reduced Burau
/// representation, normalized to the symmetric form with `Δ(1) = 1`.
pub fn burau_alexander(braid: &BraidWord) -> Result<LaurentPoly, String> {
    if !braid.closes_to_knot() {
        return Err(format!("braid {braid} does not close to a knot"));
    }
    let n = braid.strands;
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let dim = n - 1;
    let t = Scalar::var_pow(SymbolId::T, 2);
    let mut m: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| (0..dim).map(|c| if r == c { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for &l in &braid.letters {
        m = mat_mul(&m, &burau_letter(l, n, &t)?);
    }
    for (r, row) in m.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            let id = if r == c { Scalar::one() } else { Scalar::zero() };
            *entry = id.sub(entry);
        }
    }
    let det = det_scalar(m)?;
    // Δ ≐ det(I − β̄) · (1−T)/(1−Tⁿ), up to a unit ±T^{k}.
    let one_minus_t = Scalar::one().sub(&t);
    let one_minus_tn = Scalar::one().sub(&t.pow(n as i64)?);
    let p = det.mul(&one_minus_t).div(&one_minus_tn)?;
    strip_unit(&p)
}

/// Remove the `±T^{k/2}` ambiguity of a determinant formula: center the
/// exponent range and rescale so the value at `T = 1` is `1`.
fn strip_unit(p: &Scalar) -> Result<LaurentPoly, String> {
    let num = p.numerator().clone();
    let den = p.denominator().clone();
    if den.num_terms() != 1 {
        return Err("unit stripping: denominator is not a monomial".into());
    }
    let (dm, dc) = den.leading().ok_or("unit stripping: zero denominator")?;
    let inv = Rational::from_integer(1.into()) / dc;
    let poly = num.mul_monomial(&inv, &dm.inverse());
    let (_, lo, coeffs) = poly
        .as_univariate()
        .ok_or("unit stripping: extraneous symbols")?;
    let hi = lo + coeffs.len() as i64 - 1;
    // Center the doubled-exponent range [lo, hi] on zero by multiplying
    // with T to the doubled exponent -(lo+hi)/2.
    let shift = LaurentPoly::var_pow(SymbolId::T, -(lo + hi) / 2);
    let centered = poly.mul(&shift);
    let at_one: Rational = centered.iter().map(|(_, c)| c.clone()).sum();
    if at_one.abs() != rat(1) {
        return Err(format!("unit stripping: value {at_one} at T=1 is not ±1"));
    }
    let normalized = centered.scale(&(Rational::from_integer(1.into()) / at_one));
    check_conway_normalized(&normalized)?;
    Ok(normalized)
}

/// The degree of `Δ` as a Laurent polynomial in `T` (highest power of `T`).
pub fn alexander_degree(delta: &LaurentPoly) -> i64 {
    delta
        .iter()
        .map(|(m, _)| m.exponent(SymbolId::T))
        .max()
        .unwrap_or(0)
        / 2
}

/// The knot determinant `|Δ(−1)|`.
pub fn determinant_from_alexander(delta: &LaurentPoly) -> Result<u64, String> {
    let v = delta.eval_univariate(&rat(-1))?;
    let v = v.abs();
    if !v.is_integer() {
        return Err("determinant is not an integer".into());
    }
    v.to_integer().to_u64().ok_or_else(|| "determinant overflow".into())
}

/// The order-2 Vassiliev invariant `v₂ = Δ″(1)/2`.
pub fn v2_from_alexander(delta: &LaurentPoly) -> Result<i64, String> {
    let mut acc = Rational::zero();
    for (m, c) in delta.iter() {
        let e2 = m.exponent(SymbolId::T);
        if e2 % 2 != 0 {
            return Err("Alexander polynomial has a half power of T".into());
        }
        let k = e2 / 2;
        acc += c * rat(k * (k - 1));
    }
    let v2 = acc / rat(2);
    if !v2.is_integer() {
        return Err("v2 is not an integer".into());
    }
    v2.to_integer().to_i64().ok_or_else(|| "v2 overflow".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::SymMono;

    fn delta_of(word: &[i32]) -> LaurentPoly {
        alexander_from_braid(&BraidWord::new(word).unwrap()).unwrap()
    }

    fn sym_poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        // (power of T, coefficient) pairs.
        let mut p = LaurentPoly::zero();
        for &(e, c) in pairs {
            p.add_term(SymMono::var(SymbolId::T, 2 * e), rat(c));
        }
        p
    }

    #[test]
    fn trefoil_and_figure_eight() {
        assert_eq!(delta_of(&[1, 1, 1]), sym_poly(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(
            delta_of(&[1, -2, 1, -2]),
            sym_poly(&[(1, -1), (0, 3), (-1, -1)])
        );
    }

    #[test]
    fn torus_knots() {
        // (2,5) and (2,7) torus knots have alternating-coefficient Δ.
        assert_eq!(
            delta_of(&[1, 1, 1, 1, 1]),
            sym_poly(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])
        );
        assert_eq!(
            delta_of(&[1; 7]),
            sym_poly(&[(3, 1), (2, -1), (1, 1), (0, -1), (-1, 1), (-2, -1), (-3, 1)])
        );
        // (3,4) torus knot.
        assert_eq!(
            delta_of(&[1, 2, 1, 2, 1, 2, 1, 2]),
            sym_poly(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)])
        );
    }

    #[test]
    fn mirror_invariance_and_unknot() {
        let b = BraidWord::new(&[1, 1, 1, 2, -1, 2]).unwrap();
        assert_eq!(
            alexander_from_braid(&b).unwrap(),
            alexander_from_braid(&b.mirror()).unwrap()
        );
        assert_eq!(delta_of(&[1]), LaurentPoly::one());
        assert_eq!(delta_of(&[1, 2]), LaurentPoly::one());
        assert_eq!(delta_of(&[1, -2]), LaurentPoly::one());
    }

    #[test]
    fn seifert_agrees_with_burau() {
        let words: Vec<Vec<i32>> = vec![
            vec![1, 1, 1],
            vec![1, -2, 1, -2],
            vec![1, 1, 1, 1, 1],
            vec![1, 1, 1, 2, -1, 2],
            vec![1, 1, 1, -2, 1, -2],
            vec![1, 2, 1, 2, 1, 2, 1, 2],
            vec![1, 1, 2, 2, 1, 2],
            vec![2, 1, 2, 1],
            vec![1, 1, -2, 1, -2, -2],
            vec![-1, -1, -1, -2, 1, -2],
            vec![1, 1, 1, 2, 3],
            vec![1, 2, 3, 1, 2, 3, 1, 2, 3],
        ];
        for w in words {
            let b = BraidWord::new(&w).unwrap();
            if !b.closes_to_knot() {
                panic!("test word {b} is not a knot");
            }
            assert_eq!(
                alexander_from_braid(&b).unwrap(),
                burau_alexander(&b).unwrap(),
                "mismatch on {b}"
            );
        }
    }

    #[test]
    fn v2_and_determinant() {
        let trefoil = delta_of(&[1, 1, 1]);
        assert_eq!(v2_from_alexander(&trefoil).unwrap(), 1);
        assert_eq!(determinant_from_alexander(&trefoil).unwrap(), 3);
        let fig8 = delta_of(&[1, -2, 1, -2]);
        assert_eq!(v2_from_alexander(&fig8).unwrap(), -1);
        assert_eq!(determinant_from_alexander(&fig8).unwrap(), 5);
        assert_eq!(alexander_degree(&fig8), 1);
    }
}
