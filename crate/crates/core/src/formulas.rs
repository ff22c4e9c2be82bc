//! Closed forms for Wiener indices of paths, cycles, ladders and the two
//! grid orientations, evaluated exactly in 128-bit arithmetic.
//!
//! Each polynomial is evaluated in its integer-coefficient form first and
//! then divided by its denominator; a nonzero remainder is reported as
//! [`FormulaError::NotDivisible`], never rounded away. Every operation is
//! checked, so the supported range is whatever keeps the degree-6 terms
//! below `2^127` (roughly `m * n < 4 * 10^12`); larger inputs return
//! [`FormulaError::Overflow`].

use num_rational::Ratio;

use crate::error::FormulaError;
use crate::grid::GridDims;
use crate::metrics::{WienerValue, wiener_index};
use crate::orientations::{comb_orientation, conjectured_orientation};

/// A term `coefficient * m^i * n^j`.
type Term = (i128, u32, u32);

/// `12 * W(C_{m,n})` without the parity term.
const COMB_TWELFTHS: [Term; 15] = [
    (2, 3, 3),
    (2, 3, 2),
    (2, 3, 1),
    (4, 3, 0),
    (4, 2, 3),
    (-3, 2, 2),
    (-1, 2, 1),
    (-6, 2, 0),
    (-2, 1, 3),
    (4, 1, 2),
    (-2, 1, 1),
    (-16, 1, 0),
    (24, 0, 2),
    (-72, 0, 1),
    (72, 0, 0),
];

/// `12 * W(D_{m,n})`.
const CONJ_TWELFTHS: [Term; 12] = [
    (10, 3, 2),
    (10, 2, 3),
    (-6, 3, 1),
    (-24, 2, 2),
    (-6, 1, 3),
    (4, 3, 0),
    (14, 2, 1),
    (14, 1, 2),
    (4, 0, 3),
    (-12, 1, 1),
    (-4, 1, 0),
    (-4, 0, 1),
];

struct Eval {
    formula: &'static str,
    m: usize,
    n: usize,
}

impl Eval {
    fn overflow(&self) -> FormulaError {
        FormulaError::Overflow { formula: self.formula, m: self.m, n: self.n }
    }

    fn poly(&self, terms: &[Term]) -> Result<i128, FormulaError> {
        let m = i128::try_from(self.m).map_err(|_| self.overflow())?;
        let n = i128::try_from(self.n).map_err(|_| self.overflow())?;
        terms.iter().try_fold(0i128, |acc, &(coef, i, j)| {
            m.checked_pow(i)
                .zip(n.checked_pow(j))
                .and_then(|(mi, nj)| coef.checked_mul(mi)?.checked_mul(nj))
                .and_then(|t| acc.checked_add(t))
                .ok_or_else(|| self.overflow())
        })
    }

    fn exact_div(&self, numerator: i128, denominator: i128) -> Result<WienerValue, FormulaError> {
        if numerator % denominator != 0 {
            return Err(FormulaError::NotDivisible { formula: self.formula, numerator, denominator });
        }
        let q = numerator / denominator;
        u128::try_from(q).map(WienerValue).map_err(|_| self.overflow())
    }
}

/// The parity correction `beta` of the comb formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityTerm {
    pub beta: i128,
}

impl ParityTerm {
    /// `3n - 6` for odd `m`, otherwise 0.
    pub fn for_dims(m: usize, n: usize) -> Self {
        let beta = if m % 2 == 1 { 3 * n as i128 - 6 } else { 0 };
        Self { beta }
    }
}

fn comb_numerator(eval: &Eval, beta: i128) -> Result<i128, FormulaError> {
    eval.poly(&COMB_TWELFTHS)?.checked_add(beta).ok_or_else(|| eval.overflow())
}

/// `W(C_{m,n})` for even `n` and `m, n >= 4`.
pub fn comb_closed_form(m: usize, n: usize) -> Result<WienerValue, FormulaError> {
    const NAME: &str = "comb closed form";
    if m < 4 || n < 4 || n % 2 == 1 {
        return Err(FormulaError::Hypothesis {
            formula: NAME,
            requirement: "even n and m, n >= 4",
            m,
            n,
        });
    }
    let eval = Eval { formula: NAME, m, n };
    let numerator = comb_numerator(&eval, ParityTerm::for_dims(m, n).beta)?;
    eval.exact_div(numerator, 12)
}

/// Lower bound on `W(C_{m,n})` for `m >= 3`, even `n >= 4`: the comb
/// polynomial without its parity term, rounded up.
pub fn comb_lower_bound(m: usize, n: usize) -> Result<WienerValue, FormulaError> {
    const NAME: &str = "comb lower bound";
    if m < 3 || n < 4 || n % 2 == 1 {
        return Err(FormulaError::Hypothesis {
            formula: NAME,
            requirement: "even n >= 4 and m >= 3",
            m,
            n,
        });
    }
    let eval = Eval { formula: NAME, m, n };
    let numerator = comb_numerator(&eval, 0)?;
    let q = numerator.div_euclid(12) + i128::from(numerator.rem_euclid(12) != 0);
    u128::try_from(q).map(WienerValue).map_err(|_| eval.overflow())
}

/// `W(D_{m,n})` for `m, n >= 2`.
pub fn conj_closed_form(m: usize, n: usize) -> Result<WienerValue, FormulaError> {
    const NAME: &str = "conjectured closed form";
    if m < 2 || n < 2 {
        return Err(FormulaError::Hypothesis { formula: NAME, requirement: "m, n >= 2", m, n });
    }
    let eval = Eval { formula: NAME, m, n };
    let numerator = eval.poly(&CONJ_TWELFTHS)?;
    eval.exact_div(numerator, 12)
}

/// Maximum Wiener index over orientations of the ladder `L_n`.
pub fn ladder_max(n: usize) -> Result<WienerValue, FormulaError> {
    const NAME: &str = "ladder maximum";
    if n < 2 {
        return Err(FormulaError::Hypothesis { formula: NAME, requirement: "n >= 2", m: 2, n });
    }
    let eval = Eval { formula: NAME, m: 2, n };
    let numerator = eval.poly(&[(8, 0, 3), (3, 0, 2), (-5, 0, 1), (6, 0, 0)])?;
    eval.exact_div(numerator, 3)
}

/// `W(P_n) = C(n + 1, 3)`.
pub fn path_wiener(n: usize) -> WienerValue {
    let n = n as u128;
    WienerValue((n + 1) * n * n.saturating_sub(1) / 6)
}

/// `W(C_q) = q * C(q, 2)`, an upper bound for any digraph on `q` vertices.
pub fn cycle_wiener(q: usize) -> WienerValue {
    let q = q as u128;
    WienerValue(q * (q * q.saturating_sub(1) / 2))
}

/// `W / (mn)^3`.
pub fn cubic_ratio(value: WienerValue, m: usize, n: usize) -> Ratio<u128> {
    let q = (m as u128) * (n as u128);
    Ratio::new(value.0, q * q * q)
}

/// Where a reported value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueSource {
    ClosedForm,
    /// BFS on the constructed orientation.
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombConjComparison {
    pub m: usize,
    pub n: usize,
    pub comb: WienerValue,
    pub comb_source: ValueSource,
    pub conj: WienerValue,
    /// `W(C_{m,n}) - W(D_{m,n})`.
    pub gap: i128,
    pub comb_ratio: Ratio<u128>,
    pub conj_ratio: Ratio<u128>,
    pub holds: bool,
}

fn signed_gap(a: WienerValue, b: WienerValue) -> i128 {
    a.0 as i128 - b.0 as i128
}

/// Comb value by closed form where its hypotheses hold, by BFS otherwise
/// (the `m = 3` case).
pub fn comb_value(m: usize, n: usize) -> Result<(WienerValue, ValueSource), FormulaError> {
    match comb_closed_form(m, n) {
        Ok(v) => Ok((v, ValueSource::ClosedForm)),
        Err(FormulaError::Hypothesis { .. }) => {
            let dims = GridDims::new(m, n).map_err(crate::OrientationError::from)?;
            let o = comb_orientation(dims)?;
            Ok((wiener_index(&o.materialize()), ValueSource::Oracle))
        }
        Err(e) => Err(e),
    }
}

/// `W(C_{m,n})` against `W(D_{m,n})` for `m >= 3`, even `n >= 4`.
pub fn compare_comb_vs_conj(m: usize, n: usize) -> Result<CombConjComparison, FormulaError> {
    if n % 2 == 1 {
        return Err(crate::OrientationError::CombOddColumns { n }.into());
    }
    if m < 3 || n < 4 {
        return Err(FormulaError::Hypothesis {
            formula: "comb vs conjectured comparison",
            requirement: "m >= 3 and even n >= 4",
            m,
            n,
        });
    }
    let (comb, comb_source) = comb_value(m, n)?;
    let conj = conj_closed_form(m, n)?;
    Ok(CombConjComparison {
        m,
        n,
        comb,
        comb_source,
        conj,
        gap: signed_gap(comb, conj),
        comb_ratio: cubic_ratio(comb, m, n),
        conj_ratio: cubic_ratio(conj, m, n),
        holds: comb > conj,
    })
}

/// Same comparison with both sides computed by BFS.
pub fn compare_comb_vs_conj_by_oracle(m: usize, n: usize) -> Result<CombConjComparison, FormulaError> {
    let dims = GridDims::new(m, n).map_err(crate::OrientationError::from)?;
    let comb = wiener_index(&comb_orientation(dims)?.materialize());
    let conj = wiener_index(&conjectured_orientation(dims)?.materialize());
    Ok(CombConjComparison {
        m,
        n,
        comb,
        comb_source: ValueSource::Oracle,
        conj,
        gap: signed_gap(comb, conj),
        comb_ratio: cubic_ratio(comb, m, n),
        conj_ratio: cubic_ratio(conj, m, n),
        holds: comb > conj,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombTransposeComparison {
    pub m: usize,
    pub n: usize,
    /// `W(C_{m,n})`.
    pub forward: WienerValue,
    /// `W(C_{n,m})`.
    pub transposed: WienerValue,
    pub gap: i128,
    pub holds: bool,
}

/// `W(C_{m,n})` against `W(C_{n,m})` for even `4 <= m < n`.
pub fn compare_comb_transpose(m: usize, n: usize) -> Result<CombTransposeComparison, FormulaError> {
    if m % 2 == 1 || n % 2 == 1 || m < 4 || m >= n {
        return Err(FormulaError::Hypothesis {
            formula: "comb transpose comparison",
            requirement: "even m and n with 4 <= m < n",
            m,
            n,
        });
    }
    let forward = comb_closed_form(m, n)?;
    let transposed = comb_closed_form(n, m)?;
    Ok(CombTransposeComparison {
        m,
        n,
        forward,
        transposed,
        gap: signed_gap(forward, transposed),
        holds: forward > transposed,
    })
}
