//! Finite sets and functions between them.
//!
//! Elements of a [`FinSet`] of size `n` are the indices `0..n`. A [`FinFn`]
//! is stored as its table of codomain indices. Everything the solver does to
//! solution sets reduces to two operations here: [`pullback`] of a cospan and
//! the [`image`] factorization of a function.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinSet(usize);

impl FinSet {
    pub const fn new(size: usize) -> Self {
        FinSet(size)
    }

    pub const fn size(self) -> usize {
        self.0
    }

    pub fn elements(self) -> std::ops::Range<usize> {
        0..self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFn {
    cod: usize,
    table: Vec<usize>,
}

impl FinFn {
    /// Builds `table.len() -> cod`, rejecting entries outside the codomain.
    pub fn new(table: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= cod) {
            return Err(Error::TableOutOfRange { index, value, cod });
        }
        Ok(FinFn { cod, table })
    }

    pub(crate) fn from_table_unchecked(table: Vec<usize>, cod: usize) -> Self {
        debug_assert!(table.iter().all(|&v| v < cod));
        FinFn { cod, table }
    }

    pub fn identity(n: usize) -> Self {
        FinFn {
            cod: n,
            table: (0..n).collect(),
        }
    }

    /// The unique map out of the empty set.
    pub fn empty(cod: usize) -> Self {
        FinFn {
            cod,
            table: Vec::new(),
        }
    }

    pub fn constant(dom: usize, value: usize, cod: usize) -> Result<Self> {
        FinFn::new(vec![value; dom], cod)
    }

    pub fn dom(&self) -> FinSet {
        FinSet(self.table.len())
    }

    pub fn cod(&self) -> FinSet {
        FinSet(self.cod)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.table.len() == self.cod && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFn) -> Result<FinFn> {
        compose(self, other)
    }

    /// Restriction to a subset of the domain, given as a list of domain indices.
    pub fn restrict_to(&self, subset: &[usize]) -> FinFn {
        FinFn {
            cod: self.cod,
            table: subset.iter().map(|&i| self.table[i]).collect(),
        }
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &FinFn, g: &FinFn) -> Result<FinFn> {
    if f.cod != g.table.len() {
        return Err(Error::Mismatch(format!(
            "cannot compose: codomain of first map has size {}, domain of second has size {}",
            f.cod,
            g.table.len()
        )));
    }
    Ok(FinFn {
        cod: g.cod,
        table: f.table.iter().map(|&i| g.table[i]).collect(),
    })
}

/// Pullback of a cospan `A -f-> C <-g- B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub apex: FinSet,
    pub left: FinFn,
    pub right: FinFn,
}

impl Pullback {
    /// Apex elements as `(a, b)` pairs, in apex order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left
            .table
            .iter()
            .copied()
            .zip(self.right.table.iter().copied())
    }
}

/// All pairs `(a, b)` with `f(a) == g(b)`, in lexicographic order.
pub fn pullback(f: &FinFn, g: &FinFn) -> Result<Pullback> {
    if f.cod != g.cod {
        return Err(Error::Mismatch(format!(
            "pullback of maps into sets of sizes {} and {}",
            f.cod, g.cod
        )));
    }
    // fibres of g, each in increasing order of b
    let mut start = vec![0usize; f.cod + 1];
    for &c in &g.table {
        start[c + 1] += 1;
    }
    for c in 0..f.cod {
        start[c + 1] += start[c];
    }
    let mut cursor = start.clone();
    let mut fibres = vec![0usize; g.table.len()];
    for (b, &c) in g.table.iter().enumerate() {
        fibres[cursor[c]] = b;
        cursor[c] += 1;
    }

    let mut left = Vec::new();
    let mut right = Vec::new();
    for (a, &c) in f.table.iter().enumerate() {
        for &b in &fibres[start[c]..start[c + 1]] {
            left.push(a);
            right.push(b);
        }
    }
    let apex = left.len();
    Ok(Pullback {
        apex: FinSet(apex),
        left: FinFn {
            cod: f.table.len(),
            table: left,
        },
        right: FinFn {
            cod: g.table.len(),
            table: right,
        },
    })
}

/// Epi-mono factorization `f = incl ∘ corestrict`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub img: FinSet,
    pub incl: FinFn,
    pub corestrict: FinFn,
}

/// Image of `f`, with image elements ordered by first occurrence in the table.
pub fn image(f: &FinFn) -> Image {
    let mut slot = vec![usize::MAX; f.cod];
    let mut incl = Vec::new();
    let mut corestrict = Vec::with_capacity(f.table.len());
    for &c in &f.table {
        if slot[c] == usize::MAX {
            slot[c] = incl.len();
            incl.push(c);
        }
        corestrict.push(slot[c]);
    }
    let size = incl.len();
    Image {
        img: FinSet(size),
        incl: FinFn {
            cod: f.cod,
            table: incl,
        },
        corestrict: FinFn {
            cod: size,
            table: corestrict,
        },
    }
}
