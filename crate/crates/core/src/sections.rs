use crate::error::{Error, Result};

/// A canonically ordered set of sections, each a vertex map stored as a tuple
/// of target vertex indices.
///
/// Tuples all share the same arity (the vertex count of the source graph) and
/// are kept in strictly increasing lexicographic order, so lookups are a
/// binary search and the position of a section is its element index in the
/// underlying finite set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionSet {
    arity: usize,
    len: usize,
    data: Vec<usize>,
}

impl SolutionSet {
    pub fn empty(arity: usize) -> Self {
        SolutionSet {
            arity,
            len: 0,
            data: Vec::new(),
        }
    }

    /// Sections given in strictly increasing lexicographic order.
    pub fn from_sorted(
        arity: usize,
        sections: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut set = SolutionSet::empty(arity);
        for s in sections {
            if s.len() != arity {
                return Err(Error::Mismatch(format!(
                    "section of length {} in a set of arity {}",
                    s.len(),
                    arity
                )));
            }
            if set.len > 0 && set.get(set.len - 1) >= s.as_slice() {
                return Err(Error::UnsortedSections(set.len));
            }
            set.data.extend_from_slice(&s);
            set.len += 1;
        }
        Ok(set)
    }

    /// `n` abstract sections `[0], [1], ..., [n-1]`, for co-decompositions that
    /// are not produced by a problem functor.
    pub fn indexed(n: usize) -> Self {
        SolutionSet {
            arity: 1,
            len: n,
            data: (0..n).collect(),
        }
    }

    pub(crate) fn push_unchecked(&mut self, s: &[usize]) {
        debug_assert_eq!(s.len(), self.arity);
        debug_assert!(self.len == 0 || self.get(self.len - 1) < s);
        self.data.extend_from_slice(s);
        self.len += 1;
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> &[usize] {
        assert!(
            i < self.len,
            "section index {i} out of range ({})",
            self.len
        );
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn index_of(&self, section: &[usize]) -> Option<usize> {
        if section.len() != self.arity {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(section) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, section: &[usize]) -> bool {
        self.index_of(section).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_and_duplicates() {
        assert_eq!(
            SolutionSet::from_sorted(1, vec![vec![1], vec![0]]),
            Err(Error::UnsortedSections(1))
        );
        assert!(SolutionSet::from_sorted(1, vec![vec![1], vec![1]]).is_err());
        assert!(SolutionSet::from_sorted(2, vec![vec![1]]).is_err());
    }

    #[test]
    fn zero_arity_holds_at_most_one_section() {
        let one = SolutionSet::from_sorted(0, vec![vec![]]).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one.index_of(&[]), Some(0));
        assert!(SolutionSet::from_sorted(0, vec![vec![], vec![]]).is_err());
    }

    #[test]
    fn lookup() {
        let s = SolutionSet::from_sorted(2, vec![vec![0, 1], vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(s.index_of(&[1, 0]), Some(1));
        assert_eq!(s.index_of(&[1, 2]), Some(2));
        assert_eq!(s.index_of(&[2, 2]), None);
        assert_eq!(s.index_of(&[1]), None);
        assert_eq!(SolutionSet::indexed(3).index_of(&[2]), Some(2));
    }
}
