//! Algebras from finite presentations by degree-truncated linear algebra.
//!
//! For a truncation degree `D`, let `F_D` be the span of all words of length
//! at most `D` and `I_D` the span of all `u·r·v` with `r` a relation and
//! `|u| + deg r + |v| ≤ D`. An echelon basis of `I_D` with deglex-leading
//! words is grown one degree at a time: `I_D` is spanned by `I_{D-1}`, the
//! products `g·p` and `p·g` of generators with the rows added at degree
//! `D-1`, and the relations of degree exactly `D`.
//!
//! A degree is accepted once no new relation among words of length `< D`
//! appeared and the normal words of length `< D` number exactly the expected
//! dimension. They must also be closed: every normal word times a generator
//! reduces back into their span. Closure means the normal words span
//! the quotient, and the validated multiplication table shows they are
//! independent in it, so the result is the full quotient algebra.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::StructureAlgebra;
use crate::linalg::{Field, Scalar};
use crate::ncpoly::{check_generator_names, parse_ncpoly, NcPoly, NcPolyError, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("relation {index}: {source}")]
    Parse { index: usize, source: NcPolyError },
    #[error(transparent)]
    Generators(NcPolyError),
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("relation {0} depends on t; substitute a value first")]
    TDependentRelation(usize),
    #[error("relation {0} uses a different generator alphabet")]
    ForeignRelation(usize),
    #[error("expected dimension must be at least 1")]
    ZeroExpectedDim,
    #[error("no stabilization up to degree {max_degree}; raise max_degree")]
    NoStabilization { max_degree: usize },
    #[error("presentation stabilized at dimension {found} (degree {degree}), expected {expected}")]
    DimensionMismatch { expected: usize, found: usize, degree: usize },
    #[error("products of basis words do not close by degree {max_degree}; raise max_degree")]
    NotClosed { max_degree: usize },
    #[error("word of length {len} exceeds the accepted truncation degree {max}")]
    WordTooLong { len: usize, max: usize },
}

/// Relations constant in `t` over named generators, with the expected
/// dimension and a truncation cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<NcPoly>,
    expected_dim: usize,
    max_degree: usize,
}

impl Presentation {
    /// `max_degree` defaults to twice the longest relation degree plus two.
    pub fn new(
        generators: Vec<String>,
        relations: Vec<NcPoly>,
        expected_dim: usize,
        max_degree: Option<usize>,
    ) -> Result<Self, PresentationError> {
        check_generator_names(&generators).map_err(PresentationError::Generators)?;
        if expected_dim == 0 {
            return Err(PresentationError::ZeroExpectedDim);
        }
        for (index, r) in relations.iter().enumerate() {
            if r.generators() != generators.as_slice() {
                return Err(PresentationError::ForeignRelation(index));
            }
            if r.is_zero() {
                return Err(PresentationError::ZeroRelation(index));
            }
            if !r.is_constant_in_t() {
                return Err(PresentationError::TDependentRelation(index));
            }
        }
        let longest = relations.iter().filter_map(NcPoly::degree).max().unwrap_or(0);
        let max_degree = max_degree.unwrap_or(2 * longest + 2);
        Ok(Presentation { generators, relations, expected_dim, max_degree })
    }

    /// Parses relation strings in the given generators.
    pub fn parse(
        generators: &[&str],
        relations: &[&str],
        expected_dim: usize,
        max_degree: Option<usize>,
    ) -> Result<Self, PresentationError> {
        let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        check_generator_names(&gens).map_err(PresentationError::Generators)?;
        let rels = relations
            .iter()
            .enumerate()
            .map(|(index, src)| parse_ncpoly(src, &gens).map_err(|source| PresentationError::Parse { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(gens, rels, expected_dim, max_degree)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn expected_dim(&self) -> usize {
        self.expected_dim
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn with_expected_dim(mut self, expected_dim: usize) -> Self {
        self.expected_dim = expected_dim;
        self
    }

    pub fn build(&self) -> Result<BuiltAlgebra, PresentationError> {
        build(self)
    }
}

/// JSON form: `{"generators": [...], "relations": ["y^6 - x^3 - y^2*x", ...],
/// "expected_dim": 12, "max_degree": optional}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub expected_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
}

impl PresentationFile {
    pub fn from_json(src: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(src)
    }

    pub fn into_presentation(self) -> Result<Presentation, PresentationError> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        let rels: Vec<&str> = self.relations.iter().map(String::as_str).collect();
        Presentation::parse(&gens, &rels, self.expected_dim, self.max_degree)
    }
}

type Row = BTreeMap<Word, Scalar>;

fn axpy(target: &mut Row, c: &Scalar, row: &Row, skip: &Word) {
    for (w, a) in row {
        if w == skip {
            continue;
        }
        let delta = c * a;
        match target.get_mut(w) {
            Some(v) => {
                *v -= &delta;
                if v.is_zero() {
                    target.remove(w);
                }
            }
            None => {
                target.insert(w.clone(), -delta);
            }
        }
    }
}

/// Echelon basis of a truncated two-sided ideal, keyed by leading word.
#[derive(Clone, Debug, Default)]
struct Echelon {
    pivots: BTreeMap<Word, Row>,
}

impl Echelon {
    /// Full normal form: no remaining word is a pivot.
    fn normal_form(&self, mut v: Row) -> Row {
        let mut out = Row::new();
        while let Some((w, c)) = v.pop_last() {
            match self.pivots.get(&w) {
                Some(row) => axpy(&mut v, &c, row, &w),
                None => {
                    out.insert(w, c);
                }
            }
        }
        out
    }

    /// Inserts `v` if it is independent; returns the new leading word.
    fn insert(&mut self, v: Row) -> Option<Word> {
        let mut nf = self.normal_form(v);
        let (lead, c) = nf.pop_last()?;
        let inv = c.inv().expect("leading coefficient is nonzero");
        let mut row: Row = nf.into_iter().map(|(w, a)| (w, a * &inv)).collect();
        row.insert(lead.clone(), Scalar::one());
        self.pivots.insert(lead.clone(), row);
        Some(lead)
    }
}

fn row_of(p: &NcPoly) -> Row {
    p.scalar_terms()
        .expect("presentation relations are constant in t")
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn shift(row: &Row, left: Option<u32>, right: Option<u32>) -> Row {
    row.iter()
        .map(|(w, c)| {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.extend(left);
            letters.extend_from_slice(w.letters());
            letters.extend(right);
            (Word(letters), c.clone())
        })
        .collect()
}

/// Maps words of bounded length to coordinates in the built algebra.
#[derive(Clone, Debug)]
pub struct Reducer {
    echelon: Echelon,
    degree: usize,
    index: HashMap<Word, usize>,
    dim: usize,
}

impl Reducer {
    /// The accepted truncation degree; longer words cannot be reduced.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coordinates of the class of `w`.
    pub fn evaluate_word(&self, w: &Word) -> Result<Vec<Scalar>, PresentationError> {
        if w.len() > self.degree {
            return Err(PresentationError::WordTooLong { len: w.len(), max: self.degree });
        }
        let nf = self.echelon.normal_form(Row::from([(w.clone(), Scalar::one())]));
        let mut out = vec![Scalar::zero(); self.dim];
        for (u, c) in nf {
            let idx = *self.index.get(&u).ok_or(PresentationError::NotClosed { max_degree: self.degree })?;
            out[idx] = c;
        }
        Ok(out)
    }
}

/// Output of [`build`].
#[derive(Clone, Debug)]
pub struct BuiltAlgebra {
    pub algebra: StructureAlgebra,
    /// Representative word of each basis element, in deglex order.
    pub word_basis: Vec<Word>,
    pub reducer: Reducer,
    pub generators: Vec<String>,
}

impl BuiltAlgebra {
    /// Image of generator `g` in the algebra.
    pub fn generator_element(&self, name: &str) -> Option<Vec<Scalar>> {
        let g = self.generators.iter().position(|n| n == name)?;
        self.reducer.evaluate_word(&Word::letter(g as u32)).ok()
    }

    /// Evaluates a polynomial with constant coefficients through the
    /// algebra's multiplication (no length limit).
    pub fn evaluate(&self, p: &NcPoly) -> Option<Vec<Scalar>> {
        let gens: Vec<Vec<Scalar>> = (0..self.generators.len())
            .map(|g| self.reducer.evaluate_word(&Word::letter(g as u32)))
            .collect::<Result<_, _>>()
            .ok()?;
        let mut acc = self.algebra.zero_element();
        for (w, c) in p.scalar_terms()? {
            let mut v = self.algebra.unit().to_vec();
            for &g in w.letters() {
                v = self.algebra.mul_unchecked(&v, &gens[g as usize]);
            }
            for (a, b) in acc.iter_mut().zip(v) {
                *a += &(b * &c);
            }
        }
        Some(acc)
    }
}

/// Free-function form of [`Reducer::evaluate_word`].
pub fn evaluate_word(reducer: &Reducer, w: &Word) -> Result<Vec<Scalar>, PresentationError> {
    reducer.evaluate_word(w)
}

/// Number of words of length `< len` over `k` letters.
fn words_below(k: usize, len: usize) -> usize {
    (0..len).map(|l| k.saturating_pow(l as u32)).fold(0usize, usize::saturating_add)
}

enum Attempt {
    Accepted(Box<BuiltAlgebra>),
    Mismatch(usize),
    Open,
    Unstable,
}

pub fn build(p: &Presentation) -> Result<BuiltAlgebra, PresentationError> {
    let k = p.generators.len() as u32;
    let max_rel_degree = p.relations.iter().filter_map(NcPoly::degree).max().unwrap_or(0);
    let mut echelon = Echelon::default();
    let mut fresh: Vec<Word> = Vec::new();
    let mut saw_stable = false;

    for degree in 0..=p.max_degree {
        let mut candidates: Vec<Row> = Vec::new();
        for lead in &fresh {
            let row = &echelon.pivots[lead];
            for g in 0..k {
                candidates.push(shift(row, Some(g), None));
                candidates.push(shift(row, None, Some(g)));
            }
        }
        candidates.extend(p.relations.iter().filter(|r| r.degree() == Some(degree)).map(row_of));
        let mut new_low = false;
        fresh.clear();
        for row in candidates {
            if let Some(lead) = echelon.insert(row) {
                new_low |= lead.len() < degree;
                fresh.push(lead);
            }
        }
        if degree == 0 || degree < max_rel_degree {
            continue;
        }
        match attempt(p, &echelon, degree, new_low) {
            Attempt::Accepted(built) => return Ok(*built),
            Attempt::Mismatch(found) => {
                return Err(PresentationError::DimensionMismatch { expected: p.expected_dim, found, degree })
            }
            Attempt::Open => saw_stable = true,
            Attempt::Unstable => saw_stable = false,
        }
    }
    if saw_stable {
        Err(PresentationError::NotClosed { max_degree: p.max_degree })
    } else {
        Err(PresentationError::NoStabilization { max_degree: p.max_degree })
    }
}

fn attempt(p: &Presentation, echelon: &Echelon, degree: usize, new_low: bool) -> Attempt {
    if new_low {
        return Attempt::Unstable;
    }
    let k = p.generators.len();
    if words_below(k, degree) > 1 << 24 {
        return Attempt::Unstable;
    }
    let basis: Vec<Word> = (0..degree)
        .flat_map(|len| Word::all_of_length(k as u32, len))
        .filter(|w| !echelon.pivots.contains_key(w))
        .collect();
    let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    if n == 0 {
        return Attempt::Mismatch(0);
    }
    let to_coords = |row: Row| -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); n];
        for (w, c) in row {
            v[*index.get(&w)?] = c;
        }
        Some(v)
    };
    // right multiplication by each generator, as images of basis words
    let mut right: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(k);
    for g in 0..k as u32 {
        let mut images = Vec::with_capacity(n);
        for w in &basis {
            let nf = echelon.normal_form(Row::from([(w.concat(&Word::letter(g)), Scalar::one())]));
            match to_coords(nf) {
                Some(v) => images.push(v),
                None => return Attempt::Open,
            }
        }
        right.push(images);
    }
    let apply = |v: &[Scalar], g: u32| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(&right[g as usize][i]) {
                if !a.is_zero() {
                    *o += &(c * a);
                }
            }
        }
        out
    };
    let unit = match to_coords(echelon.normal_form(Row::from([(Word::one(), Scalar::one())]))) {
        Some(u) => u,
        None => return Attempt::Open,
    };
    let word_image = |w: &Word| -> Vec<Scalar> {
        let mut v = unit.clone();
        for &g in w.letters() {
            v = apply(&v, g);
        }
        v
    };
    // words must act as themselves: image of basis word a is e_a
    let identity_images = basis.iter().enumerate().all(|(a, w)| {
        let v = word_image(w);
        v.iter().enumerate().all(|(i, c)| if i == a { c.is_one() } else { c.is_zero() })
    });
    if !identity_images {
        return Attempt::Unstable;
    }
    let table: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|a| {
            basis
                .iter()
                .map(|b| b.letters().iter().fold(crate::linalg::unit_vector(n, a), |v, &g| apply(&v, g)))
                .collect()
        })
        .collect();
    let labels = basis.iter().map(|w| w.render(&p.generators)).collect();
    let Ok(algebra) = StructureAlgebra::new(labels, table, unit.clone()) else {
        return Attempt::Unstable;
    };
    if !algebra.validate().is_valid() {
        return Attempt::Unstable;
    }
    // right action of each generator agrees with multiplication by its image,
    // so words ↦ images is an algebra map onto the table
    let compatible = (0..k as u32).all(|g| {
        let image = word_image(&Word::letter(g));
        (0..n).all(|a| algebra.mul_unchecked(&crate::linalg::unit_vector(n, a), &image) == right[g as usize][a])
    });
    if !compatible {
        return Attempt::Unstable;
    }
    let relations_vanish = p.relations.iter().all(|r| {
        let mut acc = vec![Scalar::zero(); n];
        for (w, c) in row_of(r) {
            for (a, b) in acc.iter_mut().zip(word_image(&w)) {
                *a += &(b * &c);
            }
        }
        acc.iter().all(Field::is_zero)
    });
    if !relations_vanish {
        return Attempt::Unstable;
    }
    if n != p.expected_dim {
        return Attempt::Mismatch(n);
    }
    let reducer = Reducer { echelon: echelon.clone(), degree, index, dim: n };
    Attempt::Accepted(Box::new(BuiltAlgebra { algebra, word_basis: basis, reducer, generators: p.generators.clone() }))
}
