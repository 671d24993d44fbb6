use std::cmp::Ordering;

/// Monomial in the free monoid on generator indices. The empty word is 1.
///
/// Ordered deglex: shorter words first, ties broken lexicographically by
/// generator index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u32) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// All words of exactly `len` letters over `k` generators, in deglex order.
    pub fn all_of_length(k: u32, len: usize) -> impl Iterator<Item = Word> {
        let total = (k as u64).checked_pow(len as u32).unwrap_or(0);
        let total = if k == 0 && len == 0 { 1 } else { total };
        (0..total).map(move |mut idx| {
            let mut letters = vec![0u32; len];
            for slot in letters.iter_mut().rev() {
                *slot = (idx % k as u64) as u32;
                idx /= k as u64;
            }
            Word(letters)
        })
    }

    /// Renders with `*` between letters and `^` for runs, e.g. `y^2*x`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == g {
                run += 1;
            }
            let name = names.get(g as usize).map_or("?", String::as_str);
            if run == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{run}"));
            }
            i += run;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
