use std::collections::BTreeMap;
use std::fmt;

use super::tpoly::{is_negative_real, scalar_factor};
use super::{NcPolyError, TPoly, Word};
use crate::linalg::{Field, Scalar};

/// Noncommutative polynomial over a named generator alphabet with
/// coefficients in `ℚ(i)[t]`. Only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcPoly {
    generators: Vec<String>,
    terms: BTreeMap<Word, TPoly>,
}

impl NcPoly {
    pub fn zero(generators: &[String]) -> Self {
        NcPoly { generators: generators.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(generators: &[String], c: TPoly) -> Self {
        NcPoly::monomial(generators, Word::one(), c)
    }

    pub fn monomial(generators: &[String], w: Word, c: TPoly) -> Self {
        let mut p = NcPoly::zero(generators);
        p.add_term(w, c);
        p
    }

    /// The generator with index `g` as a polynomial.
    pub fn generator(generators: &[String], g: u32) -> Self {
        NcPoly::monomial(generators, Word::letter(g), TPoly::one())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &TPoly)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&TPoly> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest word length; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn is_constant_in_t(&self) -> bool {
        self.terms.values().all(TPoly::is_constant)
    }

    pub fn add_term(&mut self, w: Word, c: TPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_alphabet(&self, other: &NcPoly) -> Result<(), NcPolyError> {
        if self.generators != other.generators {
            return Err(NcPolyError::AlphabetMismatch {
                left: self.generators.clone(),
                right: other.generators.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly, NcPolyError> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            generators: self.generators.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly, NcPolyError> {
        self.add(&other.neg())
    }

    /// Product: words concatenate, coefficients multiply.
    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly, NcPolyError> {
        self.check_alphabet(other)?;
        let mut out = NcPoly::zero(&self.generators);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &TPoly) -> NcPoly {
        let mut out = NcPoly::zero(&self.generators);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Substitutes `t = s` in every coefficient.
    pub fn specialize(&self, s: &Scalar) -> NcPoly {
        let mut out = NcPoly::zero(&self.generators);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), TPoly::constant(c.eval(s)));
        }
        out
    }

    /// Constant-in-`t` coefficients as scalars, or `None` if some coefficient
    /// depends on `t`.
    pub fn scalar_terms(&self) -> Option<Vec<(Word, Scalar)>> {
        self.terms
            .iter()
            .map(|(w, c)| c.is_constant().then(|| (w.clone(), c.constant_term())))
            .collect()
    }
}

/// Free-function form of [`NcPoly::mul`].
pub fn nc_multiply(a: &NcPoly, b: &NcPoly) -> Result<NcPoly, NcPolyError> {
    a.mul(b)
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let word = (!w.is_empty()).then(|| w.render(&self.generators));
            let (neg, coeff) = match c.coeffs() {
                [single] if is_negative_real(single) => (true, TPoly::constant(-single.clone())),
                _ => (false, c.clone()),
            };
            match (idx == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let coeff_text = match coeff.coeffs() {
                [single] => (!(single.is_one() && word.is_some())).then(|| scalar_factor(single)),
                _ => Some(format!("({coeff})")),
            };
            match (coeff_text, word) {
                (Some(c), Some(w)) => write!(f, "{c}*{w}")?,
                (Some(c), None) => f.write_str(&c)?,
                (None, Some(w)) => f.write_str(&w)?,
                (None, None) => unreachable!("constant term always prints its coefficient"),
            }
        }
        Ok(())
    }
}
