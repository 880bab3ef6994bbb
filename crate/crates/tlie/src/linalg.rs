//! Exact span membership over the fraction field of the coefficient ring.
//!
//! A [`SpanSolver`] holds a row-echelon form of a list of generator vectors
//! (tensor polynomials, indexed by their words) and decides whether a target
//! vector lies in their span, returning the explicit combination when it
//! does. All arithmetic is exact [`RatFun`] arithmetic; a combination whose
//! coefficients all reduce to denominator 1 is a certificate over the
//! Laurent ring itself, not just over the fraction field.

use std::collections::BTreeMap;

use crate::algebra::{TensorPoly, Word};
use crate::fraction::RatFun;
use crate::scalar::LaurentScalar;

struct Row {
    /// Sparse coordinates, keyed by interned column index.
    cols: BTreeMap<usize, RatFun>,
    /// Expression of this row as a combination of original generators.
    combo: BTreeMap<usize, RatFun>,
}

/// Incremental echelon form over dynamically discovered word columns.
#[derive(Default)]
pub struct SpanSolver {
    columns: BTreeMap<Word, usize>,
    rows: Vec<Row>,
    pivot_row: BTreeMap<usize, usize>,
    generators: usize,
}

/// A membership combination: generator index and its coefficient.
pub type Combination = Vec<(usize, RatFun)>;

impl SpanSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    fn intern(&mut self, w: &Word) -> usize {
        let next = self.columns.len();
        *self.columns.entry(w.clone()).or_insert(next)
    }

    fn to_row(&mut self, t: &TensorPoly) -> BTreeMap<usize, RatFun> {
        let mut cols = BTreeMap::new();
        for (w, c) in t.terms() {
            cols.insert(self.intern(w), RatFun::from(c.clone()));
        }
        cols
    }

    /// Reduce `cols` against the echelon, accumulating the combination of
    /// generators subtracted along the way.
    fn reduce(
        &self,
        mut cols: BTreeMap<usize, RatFun>,
    ) -> (BTreeMap<usize, RatFun>, BTreeMap<usize, RatFun>) {
        let mut combo: BTreeMap<usize, RatFun> = BTreeMap::new();
        loop {
            let hit = cols
                .iter()
                .find_map(|(&c, v)| {
                    if v.is_zero() {
                        return None;
                    }
                    self.pivot_row.get(&c).map(|&r| (c, r))
                })
                .map(|(c, r)| (c, r, cols[&c].clone()));
            let Some((_, row_idx, factor)) = hit else { break };
            let row = &self.rows[row_idx];
            for (&c, v) in &row.cols {
                let cur = cols.remove(&c).unwrap_or_else(RatFun::zero);
                let next = cur.sub(&factor.mul(v));
                if !next.is_zero() {
                    cols.insert(c, next);
                }
            }
            for (&g, v) in &row.combo {
                let cur = combo.remove(&g).unwrap_or_else(RatFun::zero);
                let next = cur.add(&factor.mul(v));
                if !next.is_zero() {
                    combo.insert(g, next);
                }
            }
        }
        cols.retain(|_, v| !v.is_zero());
        (cols, combo)
    }

    /// Insert a generator (in declaration order); returns its index.
    pub fn add_generator(&mut self, t: &TensorPoly) -> usize {
        let idx = self.generators;
        self.generators += 1;
        let cols = self.to_row(t);
        let (mut cols, combo) = self.reduce(cols);
        if let Some((&pivot, _)) = cols.iter().next() {
            let lead = cols[&pivot].clone();
            let inv = lead.recip();
            for v in cols.values_mut() {
                *v = v.mul(&inv);
            }
            // row = (gen_idx - combo) / lead
            let mut row_combo: BTreeMap<usize, RatFun> = BTreeMap::new();
            row_combo.insert(idx, inv.clone());
            for (g, v) in combo {
                let entry = v.mul(&inv).neg();
                if !entry.is_zero() {
                    row_combo.insert(g, entry);
                }
            }
            self.pivot_row.insert(pivot, self.rows.len());
            self.rows.push(Row {
                cols,
                combo: row_combo,
            });
        }
        idx
    }

    /// Decide whether `t` lies in the span of the inserted generators.
    /// `Some(combination)` satisfies `t = Σ cᵢ·genᵢ` exactly.
    pub fn membership(&mut self, t: &TensorPoly) -> Option<Combination> {
        let cols = self.to_row(t);
        let (residual, combo) = self.reduce(cols);
        if residual.is_empty() {
            Some(combo.into_iter().collect())
        } else {
            None
        }
    }
}

/// Exact check that `Σ cᵢ·genᵢ = target`, with fraction coefficients.
pub fn verify_combination(
    generators: &[TensorPoly],
    combination: &Combination,
    target: &TensorPoly,
) -> bool {
    let mut acc: BTreeMap<Word, RatFun> = BTreeMap::new();
    for (w, c) in target.terms() {
        acc.insert(w.clone(), RatFun::from(c.neg()));
    }
    for (g, coeff) in combination {
        for (w, c) in generators[*g].terms() {
            let cur = acc.remove(w).unwrap_or_else(RatFun::zero);
            let next = cur.add(&coeff.mul_scalar(c));
            if !next.is_zero() {
                acc.insert(w.clone(), next);
            }
        }
    }
    acc.is_empty()
}

/// True when every coefficient of the combination lies in the Laurent ring.
pub fn combination_is_ring(combination: &Combination) -> bool {
    combination.iter().all(|(_, c)| c.as_laurent().is_some())
}

/// Least common multiple of the combination's denominators: the scalar `d`
/// with `d · target = Σ (d·cᵢ)·genᵢ` an identity over the ring itself.
pub fn clearing_denominator(combination: &Combination) -> LaurentScalar {
    let mut lcm = LaurentScalar::one();
    for (_, c) in combination {
        let den = c.denominator();
        let g = crate::fraction::poly_gcd(&lcm, den);
        lcm = crate::fraction::laurent_exact_div(&lcm.mul(den), &g)
            .expect("gcd divides the product");
    }
    lcm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisId;

    fn w(ids: &[u32]) -> Word {
        Word(ids.iter().map(|&i| BasisId(i)).collect())
    }

    fn q() -> LaurentScalar {
        LaurentScalar::var(0)
    }

    #[test]
    fn membership_in_small_span() {
        // g0 = a - q*b, g1 = b - c  over words a=[0], b=[1], c=[2]
        let mut g0 = TensorPoly::zero();
        g0.add_term(w(&[0]), LaurentScalar::one());
        g0.add_term(w(&[1]), q().neg());
        let mut g1 = TensorPoly::zero();
        g1.add_term(w(&[1]), LaurentScalar::one());
        g1.add_term(w(&[2]), LaurentScalar::one().neg());

        let mut solver = SpanSolver::new();
        solver.add_generator(&g0);
        solver.add_generator(&g1);

        // a - q*c = g0 + q*g1
        let mut target = TensorPoly::zero();
        target.add_term(w(&[0]), LaurentScalar::one());
        target.add_term(w(&[2]), q().neg());
        let combo = solver.membership(&target).expect("member");
        assert!(verify_combination(&[g0.clone(), g1.clone()], &combo, &target));
        assert!(combination_is_ring(&combo));

        // a alone is not in the span
        let lone = TensorPoly::from_word(w(&[0]));
        assert!(solver.membership(&lone).is_none());
    }

    #[test]
    fn fraction_membership_detected_and_cleared() {
        // g = (q - q^-1) * a : membership of a needs the fraction 1/(q-q^-1)
        let coeff = q().sub(&q().pow(-1).unwrap());
        let g = TensorPoly::from_term(w(&[0]), coeff.clone());
        let mut solver = SpanSolver::new();
        solver.add_generator(&g);
        let target = TensorPoly::from_word(w(&[0]));
        let combo = solver.membership(&target).expect("member over the field");
        assert!(verify_combination(&[g], &combo, &target));
        assert!(!combination_is_ring(&combo));
        let clear = clearing_denominator(&combo);
        // the clearing denominator is (q^2-1) up to normalization: q·(q - q^-1)
        assert!(crate::fraction::laurent_exact_div(&clear, &coeff).is_some());
    }

    #[test]
    fn dependent_generators_are_harmless() {
        let g = TensorPoly::from_word(w(&[0, 1]));
        let mut solver = SpanSolver::new();
        solver.add_generator(&g);
        solver.add_generator(&g.scale(&q()));
        let combo = solver.membership(&g).unwrap();
        assert!(verify_combination(&[g.clone(), g.scale(&q())], &combo, &g));
    }
}
