//! Which semisimple targets a flat deformation can reach, judged by
//! word-family span dimensions against the Cayley–Hamilton tower bound.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::algebra::{matrix_direct_sum, StructureAlgebra};
use crate::linalg::{Field, Scalar, Subspace};
use crate::ncpoly::{check_generator_names, parse_ncpoly, NcPoly, NcPolyError, TPoly, Word};
use crate::structure::{enumerate_semisimple_types, BlockProfile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructError {
    #[error("family needs {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("argument has {found} coordinates, algebra has dimension {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("generators span a subalgebra of dimension {reached}, not all {dim}")]
    NotGenerating { reached: usize, dim: usize },
    #[error("word family is empty")]
    EmptyFamily,
    #[error("word {0} depends on t")]
    TDependentWord(usize),
    #[error("word {index}: {source}")]
    Word { index: usize, source: NcPolyError },
    #[error("slot names: {0}")]
    Slots(NcPolyError),
    #[error("sampling needs at least one trial")]
    NoTrials,
}

/// Noncommutative polynomials in `k` slot variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordFamily {
    slots: Vec<String>,
    words: Vec<NcPoly>,
    tower_depth: Option<usize>,
}

impl WordFamily {
    pub fn new(slots: Vec<String>, words: Vec<NcPoly>) -> Result<Self, ObstructError> {
        check_generator_names(&slots).map_err(ObstructError::Slots)?;
        if words.is_empty() {
            return Err(ObstructError::EmptyFamily);
        }
        for (index, w) in words.iter().enumerate() {
            if w.generators() != slots.as_slice() {
                let source = NcPolyError::AlphabetMismatch { left: slots.clone(), right: w.generators().to_vec() };
                return Err(ObstructError::Word { index, source });
            }
            if !w.is_constant_in_t() {
                return Err(ObstructError::TDependentWord(index));
            }
        }
        Ok(WordFamily { slots, words, tower_depth: None })
    }

    pub fn parse(slots: &[&str], words: &[&str]) -> Result<Self, ObstructError> {
        let slots: Vec<String> = slots.iter().map(|s| s.to_string()).collect();
        check_generator_names(&slots).map_err(ObstructError::Slots)?;
        let words = words
            .iter()
            .enumerate()
            .map(|(index, src)| parse_ncpoly(src, &slots).map_err(|source| ObstructError::Word { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        WordFamily::new(slots, words)
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[String] {
        &self.slots
    }

    pub fn words(&self) -> &[NcPoly] {
        &self.words
    }

    /// Depth when this is a tower family, whose span has a certified bound.
    pub fn tower_depth(&self) -> Option<usize> {
        self.tower_depth
    }

    /// Adds words; the result is no longer a tower family.
    pub fn extended(&self, more: Vec<NcPoly>) -> Result<Self, ObstructError> {
        let mut words = self.words.clone();
        words.extend(more);
        WordFamily::new(self.slots.clone(), words)
    }

    pub fn printed(&self) -> Vec<String> {
        self.words.iter().map(ToString::to_string).collect()
    }
}

/// `{x^i : 0 ≤ i ≤ depth} ∪ {y·x^i : 0 ≤ i ≤ depth}`
pub fn tower_family(depth: usize) -> WordFamily {
    let slots = vec!["x".to_string(), "y".to_string()];
    let mut words = Vec::with_capacity(2 * depth + 2);
    for prefix in [vec![], vec![1u32]] {
        for i in 0..=depth {
            let mut letters = prefix.clone();
            letters.extend(std::iter::repeat_n(0u32, i));
            words.push(NcPoly::monomial(&slots, Word(letters), TPoly::one()));
        }
    }
    WordFamily { slots, words, tower_depth: Some(depth) }
}

/// `Σ_j counts[j]·min(2j, j²)`: a `j×j` block satisfies its degree-`j`
/// characteristic polynomial, so `x^i` and `y·x^i` give at most `2j`
/// independent elements there.
pub fn tower_bound(profile: &BlockProfile) -> usize {
    profile.counts().iter().map(|(&j, &c)| c as usize * (2 * j as usize).min((j as usize).pow(2))).sum()
}

/// Value of `w` at `args`, memoized on prefixes so towers cost one
/// product per word.
fn evaluate_word<'w>(
    alg: &StructureAlgebra,
    w: &'w [u32],
    args: &[Vec<Scalar>],
    cache: &mut HashMap<&'w [u32], Vec<Scalar>>,
) -> Vec<Scalar> {
    if let Some(v) = cache.get(w) {
        return v.clone();
    }
    let v = match w.split_last() {
        None => alg.unit().to_vec(),
        Some((&last, prefix)) => {
            let head = evaluate_word(alg, prefix, args, cache);
            alg.multiply(&head, &args[last as usize]).expect("argument lengths were checked")
        }
    };
    cache.insert(w, v.clone());
    v
}

/// Dimension of the span of the family's words evaluated at `args`.
pub fn family_span_dim(alg: &StructureAlgebra, fam: &WordFamily, args: &[Vec<Scalar>]) -> Result<usize, ObstructError> {
    if args.len() != fam.arity() {
        return Err(ObstructError::Arity { expected: fam.arity(), found: args.len() });
    }
    if let Some(a) = args.iter().find(|a| a.len() != alg.dim()) {
        return Err(ObstructError::Dimension { expected: alg.dim(), found: a.len() });
    }
    let mut cache = HashMap::new();
    let mut values = Vec::with_capacity(fam.words.len());
    for p in &fam.words {
        let mut acc = alg.zero_element();
        for (w, c) in p.terms() {
            let v = evaluate_word(alg, w.letters(), args, &mut cache);
            let c = c.constant_term();
            for (a, b) in acc.iter_mut().zip(v.iter()) {
                *a += &(b.clone() * &c);
            }
        }
        values.push(acc);
    }
    Ok(Subspace::from_vectors(alg.dim(), values).expect("values have the algebra's dimension").dim())
}

/// Arguments for one trial: integer entries in `[-9, 9]` from a ChaCha8
/// stream keyed by `(seed, trial)`.
pub fn trial_arguments(dim: usize, arity: usize, seed: u64, trial: u64) -> Vec<Vec<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..arity).map(|_| (0..dim).map(|_| Scalar::from_int(rng.random_range(-9..=9))).collect()).collect()
}

/// Best span dimension found at random arguments in `⊕ M_{n_i}`. Evidence
/// only; never a certificate.
pub fn sampled_lower_bound(profile: &BlockProfile, fam: &WordFamily, trials: usize, seed: u64) -> Result<usize, ObstructError> {
    if trials == 0 {
        return Err(ObstructError::NoTrials);
    }
    let model = matrix_direct_sum(&profile.blocks());
    // sampling can never beat the certified bound, so stop once it is reached
    let certified = fam.tower_depth.map_or(usize::MAX, |_| tower_bound(profile));
    let ceiling = model.dim().min(fam.words.len()).min(certified);
    let mut best = 0;
    for trial in 0..trials {
        let args = trial_arguments(model.dim(), fam.arity(), seed, trial as u64);
        best = best.max(family_span_dim(&model, fam, &args)?);
        if best == ceiling {
            break;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Excluded,
    NotExcluded,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

fn as_string<T: std::fmt::Display, S: Serializer>(v: &T, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetRow {
    #[serde(serialize_with = "as_string")]
    pub profile: BlockProfile,
    /// Certified upper bound on the family span in the target.
    pub bound: Option<usize>,
    pub sampled: usize,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub family: Vec<String>,
    /// The argument tuple the span was measured at.
    pub generators: Vec<String>,
    #[serde(rename = "dim_in_N")]
    pub dim_in_n: usize,
    pub targets: Vec<TargetRow>,
}

impl ObstructionReport {
    pub fn with_status(&self, status: Status) -> Vec<&BlockProfile> {
        self.targets.iter().filter(|r| r.status == status).map(|r| &r.profile).collect()
    }
}

/// `Σ c_i·label_i`, or `0`.
pub fn render_element(alg: &StructureAlgebra, v: &[Scalar]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (c, label) in v.iter().zip(alg.labels()) {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            label.clone()
        } else if c.is_real() {
            format!("{c}*{label}")
        } else {
            format!("({c})*{label}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Rows for every semisimple type of `alg`'s dimension. Tower families get
/// a certified bound; other families are `Unknown`.
pub fn obstruction_report(
    alg: &StructureAlgebra,
    fam: &WordFamily,
    args: &[Vec<Scalar>],
    trials: usize,
    seed: u64,
) -> Result<ObstructionReport, ObstructError> {
    let d = family_span_dim(alg, fam, args)?;
    let mut targets = Vec::new();
    for profile in enumerate_semisimple_types(alg.dim(), None) {
        let bound = fam.tower_depth.map(|_| tower_bound(&profile));
        let sampled = sampled_lower_bound(&profile, fam, trials, seed)?;
        let status = match bound {
            Some(u) if d > u => Status::Excluded,
            Some(_) => Status::NotExcluded,
            None => Status::Unknown,
        };
        targets.push(TargetRow { profile, bound, sampled, status });
    }
    Ok(ObstructionReport {
        family: fam.printed(),
        generators: args.iter().map(|a| render_element(alg, a)).collect(),
        dim_in_n: d,
        targets,
    })
}

/// The depth-`n` tower at a generating pair, against every semisimple type
/// of dimension `n`.
pub fn admissible_targets(
    alg: &StructureAlgebra,
    gen_x: &[Scalar],
    gen_y: &[Scalar],
    trials: usize,
    seed: u64,
) -> Result<ObstructionReport, ObstructError> {
    for g in [gen_x, gen_y] {
        if g.len() != alg.dim() {
            return Err(ObstructError::Dimension { expected: alg.dim(), found: g.len() });
        }
    }
    let args = vec![gen_x.to_vec(), gen_y.to_vec()];
    let reached = alg.subalgebra_closure(&args).expect("lengths were checked").dim();
    if reached != alg.dim() {
        return Err(ObstructError::NotGenerating { reached, dim: alg.dim() });
    }
    obstruction_report(alg, &tower_family(alg.dim()), &args, trials, seed)
}
