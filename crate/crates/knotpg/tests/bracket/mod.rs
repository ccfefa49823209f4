//! A small Temperley-Lieb evaluation of the Kauffman bracket of a braid
//! closure, used to certify that curated braid words with trivial
//! Alexander polynomial are nevertheless knotted.

use knotpg::exact::{LaurentPoly, SymMono, SymbolId, rat};
use knotpg::oracle::BraidWord;

/// A Temperley-Lieb diagram on `n` strands: a non-crossing pairing of the
/// 2n boundary points, top points 0..n and bottom points n..2n. `pair[p]`
/// is the partner of point p.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct TlDiagram {
    pair: Vec<usize>,
}

fn identity_diagram(n: usize) -> TlDiagram {
    let mut pair = vec![0; 2 * n];
    for i in 0..n {
        pair[i] = n + i;
        pair[n + i] = i;
    }
    TlDiagram { pair }
}

/// The cap-cup generator e_k: top k~k+1, bottom k~k+1, others straight.
fn e_diagram(n: usize, k: usize) -> TlDiagram {
    let mut d = identity_diagram(n);
    d.pair[k] = k + 1;
    d.pair[k + 1] = k;
    d.pair[n + k] = n + k + 1;
    d.pair[n + k + 1] = n + k;
    d
}

/// Stack `top` above `bot` (top's bottom boundary glued to bot's top
/// boundary); returns the resulting diagram and the number of closed
/// loops produced.
fn stack(n: usize, top: &TlDiagram, bot: &TlDiagram) -> (TlDiagram, usize) {
    // Points of the glued picture: top boundary of `top` (0..n) and bottom
    // boundary of `bot` (n..2n). Middle points are resolved by walking.
    let mut pair = vec![usize::MAX; 2 * n];
    let mut visited_mid = vec![false; n];
    let trace = |start_in_top: bool, start: usize| -> (bool, usize, Vec<usize>) {
        // Walk from an outer point through the middle layer until
        // reaching another outer point. Returns (endpoint is in bot,
        // endpoint index, middle points visited).
        let mut mids = Vec::new();
        let mut in_top = start_in_top;
        let mut at = start;
        loop {
            let q = if in_top { top.pair[at] } else { bot.pair[at] };
            if in_top {
                if q < n {
                    return (false, q, mids);
                }
                // Entered the middle layer at q - n; continue in bot.
                mids.push(q - n);
                in_top = false;
                at = q - n;
            } else {
                if q >= n {
                    return (true, q, mids);
                }
                mids.push(q);
                in_top = true;
                at = n + q;
            }
        }
    };
    for s in 0..n {
        if pair[s] != usize::MAX {
            continue;
        }
        let (in_bot, end, mids) = trace(true, s);
        for m in mids {
            visited_mid[m] = true;
        }
        let e = if in_bot { end } else { end };
        pair[s] = e;
        pair[e] = s;
    }
    for s in n..2 * n {
        if pair[s] != usize::MAX {
            continue;
        }
        let (in_bot, end, mids) = trace(false, s);
        for m in mids {
            visited_mid[m] = true;
        }
        debug_assert!(in_bot || end < n);
        pair[s] = end;
        pair[end] = s;
    }
    // Count closed loops: middle-layer cycles never reaching the boundary.
    let mut loops = 0;
    for m in 0..n {
        if visited_mid[m] {
            continue;
        }
        // Walk the cycle through this middle point.
        let mut cycle = Vec::new();
        let mut in_top = true;
        let mut at = n + m; // middle point seen from top's bottom boundary
        loop {
            let q = if in_top { top.pair[at] } else { bot.pair[at] };
            let mid = if in_top { q - n } else { q };
            if cycle.contains(&mid) {
                break;
            }
            cycle.push(mid);
            if in_top {
                in_top = false;
                at = q - n;
            } else {
                in_top = true;
                at = n + q;
            }
        }
        for c in &cycle {
            visited_mid[*c] = true;
        }
        loops += 1;
    }
    (TlDiagram { pair }, loops)
}

/// Kauffman bracket state: a linear combination of TL diagrams with
/// Laurent-polynomial coefficients in A (stored in the T slot, doubled
/// exponents: A^k has doubled exponent 2k).
type State = std::collections::BTreeMap<TlDiagram, LaurentPoly>;

fn delta_poly() -> LaurentPoly {
    // delta = -A^2 - A^{-2}
    let mut p = LaurentPoly::zero();
    p.add_term(SymMono::var(SymbolId::T, 4), rat(-1));
    p.add_term(SymMono::var(SymbolId::T, -4), rat(-1));
    p
}

fn a_power(k: i64) -> LaurentPoly {
    LaurentPoly::var_pow(SymbolId::T, 2 * k)
}

/// Multiply the running state by one crossing sigma_k^{sign} from below.
fn apply_letter(n: usize, state: &State, letter: i32) -> State {
    let k = letter.unsigned_abs() as usize - 1;
    let e = e_diagram(n, k);
    let id = identity_diagram(n);
    // sigma = A*id + A^{-1}*e ; sigma^{-1} = A^{-1}*id + A*e.
    let (ca, cb) = if letter > 0 { (1, -1) } else { (-1, 1) };
    let delta = delta_poly();
    let mut out: State = State::new();
    for (d, coeff) in state {
        for (gen, apow) in [(&id, ca), (&e, cb)] {
            let (nd, loops) = stack(n, d, gen);
            let mut c = coeff.mul(&a_power(apow));
            for _ in 0..loops {
                c = c.mul(&delta);
            }
            let entry = out.entry(nd).or_insert_with(LaurentPoly::zero);
            *entry = entry.add(&c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Normalized Kauffman bracket of the braid closure:
/// f = (-A^3)^{-w} * <closure>, which is 1 exactly for bracket-trivial
/// diagrams of the unknot.
pub fn kauffman_f(b: &BraidWord) -> LaurentPoly {
    let n = b.strands;
    let mut state: State = State::new();
    state.insert(identity_diagram(n), LaurentPoly::one());
    for &l in &b.letters {
        state = apply_letter(n, &state, l);
    }
    // Markov closure: glue the identity diagram on top and close strand i
    // to strand i; a diagram with pairing `pair` closes to `cycles(pair)`
    // loops where top i is joined to bottom i.
    let mut acc = LaurentPoly::zero();
    let delta = delta_poly();
    for (d, coeff) in &state {
        // Alternate diagram arcs with closure arcs (top i joined to
        // bottom n+i) and count the resulting cycles.
        let mut seen = vec![false; 2 * n];
        let mut loops = 0usize;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut at = s;
            loop {
                seen[at] = true;
                let q = d.pair[at];
                seen[q] = true;
                let c = if q < n { q + n } else { q - n };
                if c == s {
                    break;
                }
                at = c;
            }
        }
        let mut c = coeff.clone();
        for _ in 0..loops.saturating_sub(1) {
            c = c.mul(&delta);
        }
        acc = acc.add(&c);
    }
    // Strip the writhe factor (-A^3)^{-w}.
    let w = b.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut unit = a_power(-3 * w);
    unit = unit.scale(&rat(sign));
    acc.mul(&unit)
}

